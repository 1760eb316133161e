#pragma once

/// \file spectra.hpp
/// Closed-form spectrum of the lattice adjacency matrix, exact verification
/// through characteristic polynomials, and the terminating basic
/// hypergeometric eigenvectors of the q-deformed Kac matrix.

#include <qcube/exact_linalg.hpp>

#include <vector>

namespace qcube {

inline constexpr long kDefaultCharpolyCap = 400;

struct SpectrumPair {
    long k;
    Int lambda;  // (n-k)_q - (k)_q
    Int mult;    // [n over k]_q
};

struct SpectrumReport {
    long q = 0;
    int n = 0;
    std::vector<SpectrumPair> pairs;
    bool charpoly_verified = false;
    bool charpoly_attempted = false;
};

/// Eigenvalue/multiplicity list; eigenvalues strictly decrease in k, so they
/// are pairwise distinct and the multiplicities sum to G_q(n).
inline std::vector<SpectrumPair> spectrum(long q, int n) {
    std::vector<SpectrumPair> out;
    for (long k = 0; k <= n; ++k)
        out.push_back({k, q_int(q, n - k) - q_int(q, k), q_binomial(q, n, k)});
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i].lambda < out[i - 1].lambda))
            throw std::logic_error("spectrum: eigenvalues must strictly decrease");
    return out;
}

/// prod_k (x - lambda_k)^{mult_k} as an exact integer polynomial.
inline std::vector<Int> spectrum_polynomial(long q, int n) {
    std::vector<std::pair<Int, Int>> roots;
    for (const auto& s : spectrum(q, n)) roots.emplace_back(s.lambda, s.mult);
    return poly_from_roots(roots);
}

/// True iff det(xI - M) equals the closed-form factorization, both sides as
/// exact integer polynomials.
inline bool verify_spectrum_charpoly(const Field& F, int n, long cap = kDefaultCharpolyCap) {
    check_lattice_cap(F.q(), n, cap);
    IntMatrix M = adjacency_matrix(F, n, cap);
    return characteristic_polynomial(M) == spectrum_polynomial(F.q(), n);
}

/// Component i of the terminating 3phi2 series
///   3phi2(q^{-i}, q^{-k}, -q^{k-n}; 0, q^{-n} | q, q)
/// evaluated in exact rationals at the concrete q. The lower parameter 0
/// contributes an empty Pochhammer factor; termination is at j = min(i, k).
inline Rat phi32_component(long q, int n, int k, int i) {
    if (i < 0 || i > n || k < 0 || k > n)
        throw std::invalid_argument("phi32_component: need 0 <= i,k <= n");
    Rat qq(q);
    Rat a1 = rat_pow(qq, -i);
    Rat a2 = rat_pow(qq, -k);
    Rat a3 = -rat_pow(qq, k - n);
    Rat b2 = rat_pow(qq, -n);
    Rat sum = 0;
    int jmax = std::min(i, k);
    for (int j = 0; j <= jmax; ++j) {
        Rat num = q_pochhammer(a1, qq, j) * q_pochhammer(a2, qq, j) * q_pochhammer(a3, qq, j);
        Rat den = q_pochhammer(qq, qq, j) * q_pochhammer(b2, qq, j);
        sum += num / den * rat_pow(qq, j);
    }
    return sum;
}

/// Right eigenvector of the Kac matrix for the k-th eigenvalue, exactly as
/// the series gives it (component 0 is 1; no normalization).
inline std::vector<Rat> kac_eigenvector(long q, int n, int k) {
    std::vector<Rat> v(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = phi32_component(q, n, k, i);
    return v;
}

/// Exact residual check K v = lambda v.
inline bool kac_eigen_residual_is_zero(long q, int n, int k) {
    IntMatrix K = kac_matrix(q, n);
    std::vector<Rat> v = kac_eigenvector(q, n, k);
    Rat lambda(q_int(q, n - k) - q_int(q, k));
    for (int i = 0; i <= n; ++i) {
        Rat acc = 0;
        for (const auto& [j, val] : K.row(i)) acc += Rat(val) * v[static_cast<size_t>(j)];
        if (acc != lambda * v[static_cast<size_t>(i)]) return false;
    }
    return true;
}

/// Consistency of the spectrum with its assembly from scaled Kac blocks:
/// the union over chain starts j <= n/2 of q^j * spec(K_q(n-2j)) with
/// multiplicity [n over j] - [n over j-1] must reproduce the closed form.
/// Pure q-arithmetic; no matrices are built.
inline bool blocked_spectrum_check(long q, int n) {
    std::map<Int, Int> assembled;
    for (int j = 0; 2 * j <= n; ++j) {
        Int mult = q_binomial(q, n, j) - q_binomial(q, n, j - 1);
        if (mult < 0) return false;
        Int scale = int_pow(Int(q), static_cast<unsigned long>(j));
        for (int i = 0; i <= n - 2 * j; ++i) {
            Int lam = scale * (q_int(q, n - 2 * j - i) - q_int(q, i));
            assembled[lam] += mult;
        }
    }
    std::map<Int, Int> closed;
    for (const auto& s : spectrum(q, n)) closed[s.lambda] += s.mult;
    return assembled == closed;
}

inline SpectrumReport spectrum_report(const Field& F, int n, bool verify_charpoly,
                                      long cap = kDefaultCharpolyCap) {
    SpectrumReport rep;
    rep.q = F.q();
    rep.n = n;
    rep.pairs = spectrum(F.q(), n);
    if (verify_charpoly) {
        rep.charpoly_attempted = true;
        rep.charpoly_verified = verify_spectrum_charpoly(F, n, cap);
    }
    return rep;
}

}  // namespace qcube
