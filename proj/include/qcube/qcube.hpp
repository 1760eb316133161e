#pragma once

/// Umbrella header.

#include <qcube/cyclotomic.hpp>
#include <qcube/eigenbasis.hpp>
#include <qcube/exact_linalg.hpp>
#include <qcube/finite_field.hpp>
#include <qcube/integers.hpp>
#include <qcube/operators.hpp>
#include <qcube/qarith.hpp>
#include <qcube/spectra.hpp>
#include <qcube/subspace.hpp>
#include <qcube/trees.hpp>
#include <qcube/verify.hpp>
