#pragma once

/// \file json_io.hpp
/// JSON and Matrix Market renderings of the library's values. Big integers
/// and rationals are serialized as decimal strings; object keys come out in
/// canonical (sorted) order, so identical inputs give byte-identical files.

#include <json.hpp>
#include <qcube/eigenbasis.hpp>
#include <qcube/spectra.hpp>
#include <qcube/trees.hpp>

#include <sstream>

namespace qcube {

using nlohmann::json;

inline json cyclotomic_to_json(const Cyclotomic& z) {
    json coeffs = json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(to_string(c));
    return json{{"p", z.p()}, {"coeffs", coeffs}};
}

/// Residue-polynomial coefficient list of one field element.
inline json element_to_json(const Field& F, int code) {
    json out = json::array();
    for (int c : F.decode(code)) out.push_back(c);
    return out;
}

/// {"n", "k", "pivots" (1-based rows), "cols" (k columns of n coefficient
/// lists each)}.
inline json subspace_to_json(const Field& F, const Subspace& X) {
    json pivots = json::array();
    for (int r : X.pivots()) pivots.push_back(r + 1);
    json cols = json::array();
    for (int j = 0; j < X.dim(); ++j) {
        json col = json::array();
        for (int i = 0; i < X.ambient(); ++i) col.push_back(element_to_json(F, X.entry(i, j)));
        cols.push_back(col);
    }
    return json{{"n", X.ambient()}, {"k", X.dim()}, {"pivots", pivots}, {"cols", cols}};
}

inline json chain_index_to_json(const Field& F, const ChainIndex& alpha) {
    json out = json::array();
    for (const auto& e : alpha.entries) {
        if (e.kind == 2) {
            json label = json::array();
            for (int code : e.label) label.push_back(element_to_json(F, code));
            out.push_back(json{{"chi", label}});
        } else {
            out.push_back(e.kind);
        }
    }
    return out;
}

inline json spectrum_report_to_json(const SpectrumReport& rep) {
    json pairs = json::array();
    for (const auto& s : rep.pairs)
        pairs.push_back(json{{"k", s.k}, {"lambda", to_string(s.lambda)}, {"mult", to_string(s.mult)}});
    json out{{"q", rep.q}, {"n", rep.n}, {"pairs", pairs}, {"charpoly_verified", rep.charpoly_verified}};
    out["charpoly_attempted"] = rep.charpoly_attempted;
    return out;
}

struct EigenReportOptions {
    bool verified_eigen = false;
    bool verified_orthogonality = false;
    bool verified_counts = false;
    bool verified_norms = false;
    bool verified_closed_form = false;
    bool verified_radial = false;
    const RadialSpanResult* radial = nullptr;
};

/// Records sorted by weight (stable in construction order within a group).
inline std::vector<const EigenRecord*> sorted_records(const EigenLevel& lvl) {
    std::vector<const EigenRecord*> recs;
    for (const auto& r : lvl.recs) recs.push_back(&r);
    std::stable_sort(recs.begin(), recs.end(), [](const EigenRecord* a, const EigenRecord* b) {
        return a->alpha.weight() < b->alpha.weight();
    });
    return recs;
}

inline json eigenbasis_to_json(const Field& F, const EigenLevel& lvl,
                               const EigenReportOptions& opts = {}) {
    SubspaceOrder ord = subspace_order(F, lvl.n);
    json vecs = json::array();
    for (const EigenRecord* rec : sorted_records(lvl)) {
        json coords = json::array();
        for (const auto& [X, c] : rec->v.terms())
            coords.push_back(json{{"subspace_index", ord.index_of(X)}, {"value", cyclotomic_to_json(c)}});
        vecs.push_back(json{{"alpha", chain_index_to_json(F, rec->alpha)},
                            {"k", rec->alpha.weight()},
                            {"lambda", to_string(rec->eigenvalue)},
                            {"coords", coords},
                            {"norm_sq", cyclotomic_to_json(rec->norm_sq)}});
    }
    json out{{"q", F.q()}, {"n", lvl.n}, {"count", lvl.recs.size()}, {"vectors", vecs}};
    json checks = json::object();
    if (opts.verified_eigen) checks["eigen_residuals"] = true;
    if (opts.verified_orthogonality) checks["orthogonality"] = true;
    if (opts.verified_counts) checks["counts"] = true;
    if (opts.verified_norms) checks["norm_laws"] = true;
    if (opts.verified_closed_form) checks["closed_form"] = true;
    if (opts.verified_radial) checks["radial_span"] = true;
    if (!checks.empty()) out["verified"] = checks;
    if (opts.radial != nullptr) {
        json rad = json::object();
        rad["contained"] = opts.radial->contained;
        json per_level = json::array();
        for (size_t k = 0; k < opts.radial->coords.size(); ++k) {
            json entry = json::object();
            entry["k"] = k;
            if (opts.radial->coords[k]) {
                json cs = json::array();
                for (const auto& c : *opts.radial->coords[k]) cs.push_back(to_string(c));
                entry["coefficients"] = cs;
            } else {
                entry["coefficients"] = nullptr;
            }
            per_level.push_back(entry);
        }
        rad["by_level"] = per_level;
        json idx = json::array();
        for (const auto& bits : opts.radial->indices) idx.push_back(bits);
        rad["indices"] = idx;
        out["radial_span"] = rad;
    }
    return out;
}

inline json tree_report_to_json(const TreeCountReport& rep) {
    json out{{"q", rep.q}, {"n", rep.n}, {"formula", to_string(rep.formula_value)},
             {"agreement", rep.agreement}};
    if (rep.minors_value) out["minors"] = to_string(*rep.minors_value);
    if (rep.enumeration_value) out["enumeration"] = to_string(*rep.enumeration_value);
    if (rep.classical_cube_value) out["classical_cube"] = to_string(*rep.classical_cube_value);
    return out;
}

/// Coordinate-format Matrix Market body (1-based, integer entries, row-major
/// entry order).
inline std::string matrix_market(const IntMatrix& M) {
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << M.size() << " " << M.size() << " " << M.nnz() << "\n";
    for (int i = 0; i < M.size(); ++i)
        for (const auto& [j, v] : M.row(i)) os << (i + 1) << " " << (j + 1) << " " << v.get_str() << "\n";
    return os.str();
}

/// Row index -> subspace rendering, the companion file of a matrix export.
inline json matrix_index_json(const Field& F, const SubspaceOrder& ord) {
    json rows = json::array();
    for (const auto& X : ord.list) rows.push_back(subspace_to_json(F, X));
    return json{{"q", F.q()}, {"rows", rows}};
}

}  // namespace qcube
