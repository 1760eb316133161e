#pragma once

/// \file eigenbasis.hpp
/// The recursive construction of the canonical orthogonal eigenbasis of the
/// lattice adjacency operator.
///
/// The ingredients: the translation group of maps (x; t) -> (x + t u; t)
/// acting on subspaces outside the hyperplane, its additive characters
/// indexed by label vectors a (value zeta_p^{Tr(a . u)} on the translation
/// by u), the projection onto a character's isotypic component computed by
/// orbit-stabilizer sums, the unique hyperplane supporting each nontrivial
/// character, and the two transport maps that carry an eigenbasis two
/// ambient levels up through that hyperplane.
///
/// Eigenvectors are indexed by chain indices: sequences of entries 0, 1, or
/// a character label, where a binary entry raises the ambient level by one
/// and a character entry by two. Vectors carry no normalization; they are
/// exactly what the recursion produces.

#include <qcube/operators.hpp>
#include <qcube/spectra.hpp>

#include <optional>
#include <vector>

namespace qcube {

// ---------------------------------------------------------------------------
// additive characters of the translation group
// ---------------------------------------------------------------------------

/// All vectors of F_q^n in lexicographic code order.
inline std::vector<FFVector> all_vectors(const Field& F, int n) {
    std::vector<FFVector> out;
    FFVector v(static_cast<size_t>(n), 0);
    long q = F.q();
    while (true) {
        out.push_back(v);
        size_t t = v.size();
        while (t > 0 && v[t - 1] == q - 1) v[--t] = 0;
        if (t == 0) break;
        v[t - 1] += 1;
    }
    return out;
}

/// Labels of the q^n characters, in lexicographic order (trivial first).
inline std::vector<FFVector> character_labels(const Field& F, int n) { return all_vectors(F, n); }

inline bool is_zero_vector(const FFVector& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

inline std::vector<FFVector> nontrivial_character_labels(const Field& F, int n) {
    std::vector<FFVector> out;
    for (auto& a : character_labels(F, n))
        if (!is_zero_vector(a)) out.push_back(std::move(a));
    return out;
}

/// Value of the character with label a on the translation by u.
inline Cyclotomic character_value(const Field& F, const FFVector& a, const FFVector& u) {
    return Cyclotomic::root(static_cast<int>(F.p()), F.trace_dot(a, u));
}

/// The translation (x; t) -> (x + t u; t) applied to a subspace of F_q^{n+1}.
inline Subspace apply_translation(const Field& F, const FFVector& u, const Subspace& X) {
    int n1 = X.ambient();
    if (static_cast<int>(u.size()) != n1 - 1)
        throw std::invalid_argument("apply_translation: length mismatch");
    std::vector<FFVector> cols;
    for (int j = 0; j < X.dim(); ++j) {
        FFVector c = X.column(j);
        int t = c[static_cast<size_t>(n1 - 1)];
        if (t != 0)
            for (int i = 0; i < n1 - 1; ++i)
                c[static_cast<size_t>(i)] = F.add(c[static_cast<size_t>(i)], F.mul(t, u[static_cast<size_t>(i)]));
        cols.push_back(std::move(c));
    }
    return canonicalize(F, cols, n1);
}

// ---------------------------------------------------------------------------
// isotypic projection
// ---------------------------------------------------------------------------

/// One lift span(X, e_{n+1} + u) for a canonical coset representative u
/// (supported on the non-pivot rows of X); assembled directly in normal form.
inline Subspace lift_with_rep(const Subspace& X, const FFVector& u) {
    int n = X.ambient();
    std::vector<int> piv = X.pivots();
    piv.push_back(n);
    std::vector<int> ent(static_cast<size_t>(n + 1) * (static_cast<size_t>(X.dim()) + 1), 0);
    for (int j = 0; j < X.dim(); ++j)
        for (int i = 0; i < n; ++i) ent[static_cast<size_t>(j) * (n + 1) + i] = X.entry(i, j);
    for (int i = 0; i < n; ++i) ent[static_cast<size_t>(X.dim()) * (n + 1) + i] = u[static_cast<size_t>(i)];
    ent[static_cast<size_t>(X.dim()) * (n + 1) + n] = 1;
    return Subspace(n + 1, std::move(piv), std::move(ent));
}

/// Projection of a subspace outside the hyperplane onto the isotypic
/// component of the character with label a, as the orbit-stabilizer sum
///
///   sum over the orbit of X of |stab| conj(chi(g_Z)) Z,  g_Z X = Z.
///
/// The stabilizer of X is the translation subgroup of X^r = X n hyperplane,
/// and the character is trivial there exactly when a is orthogonal to X^r;
/// otherwise the projection is exactly zero and the zero vector is returned.
inline FormalVector character_projection(const Field& F, const FFVector& a, const Subspace& X) {
    int n1 = X.ambient();
    int n = n1 - 1;
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("character_projection: label length mismatch");
    if (!X.outside_hyperplane())
        throw std::invalid_argument("character_projection: subspace lies inside the hyperplane");
    FormalVector out(F, n1);
    Subspace Xr = restrict_hyperplane(X);
    for (int j = 0; j < Xr.dim(); ++j)
        if (F.dot(a, Xr.column(j)) != 0) return out;  // nontrivial on the stabilizer
    // the last column of X is e_{n+1} + u0
    FFVector u0(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) u0[static_cast<size_t>(i)] = X.entry(i, X.dim() - 1);
    int e0 = F.trace_dot(a, u0);
    Rat stab_size(int_pow(Int(F.q()), static_cast<unsigned long>(X.dim() - 1)));
    int p = static_cast<int>(F.p());
    for (const FFVector& u : coset_reps(F, Xr)) {
        int e = ((e0 - F.trace_dot(a, u)) % p + p) % p;
        out.add_term(lift_with_rep(Xr, u), stab_size * Cyclotomic::root(p, e));
    }
    return out;
}

/// The unique hyperplane whose lift has nonzero projection under the
/// nontrivial character with label a, found by scanning all hyperplanes.
/// Uniqueness is asserted during the scan.
inline Subspace support_hyperplane(const Field& F, const FFVector& a) {
    int n = static_cast<int>(a.size());
    if (is_zero_vector(a))
        throw std::invalid_argument("support_hyperplane: character is trivial");
    std::optional<Subspace> found;
    for (const auto& Y : enumerate_subspaces(F, n, n - 1)) {
        if (!character_projection(F, a, hat(embed(Y, n + 1))).is_zero()) {
            if (found) throw std::logic_error("support_hyperplane: not unique");
            found = Y;
        }
    }
    if (!found) throw std::logic_error("support_hyperplane: none found");
    return *found;
}

// ---------------------------------------------------------------------------
// transport maps
// ---------------------------------------------------------------------------

/// Sum of the lifts of every support element: the graded lift map into the
/// slice outside the hyperplane. Input ambient n, output ambient n+1.
inline FormalVector cover_lift(const FormalVector& v) {
    const Field& F = v.field();
    FormalVector out(F, v.ambient() + 1);
    for (const auto& [X, c] : v.terms())
        for (const auto& Y : lifts_above(F, X)) out.add_term(Y, c);
    return out;
}

/// Column embedding of C[B_q(n-1)] onto the subspaces of the hyperplane X
/// (ambient n), through the normal-form columns of X. A cover-preserving
/// isomorphism onto its image.
inline FormalVector hyperplane_embed(const Field& F, const Subspace& X, const FormalVector& v) {
    if (X.dim() != X.ambient() - 1)
        throw std::invalid_argument("hyperplane_embed: not a hyperplane");
    if (v.ambient() != X.ambient() - 1)
        throw std::invalid_argument("hyperplane_embed: ambient mismatch");
    FormalVector out(F, X.ambient());
    for (const auto& [Y, c] : v.terms()) out.add_term(compose(F, X, Y), c);
    return out;
}

/// The projection-twisted lift Y -> q^{-dim Y} p(chi)(hat Y), extended
/// linearly. The support of v must consist of subspaces of the character's
/// hyperplane X.
inline FormalVector isotypic_lift(const Field& F, const FFVector& a, const Subspace& X,
                                  const FormalVector& v) {
    int n = v.ambient();
    FormalVector out(F, n + 1);
    for (const auto& [Y, c] : v.terms()) {
        if (!contains(F, X, Y))
            throw std::invalid_argument("isotypic_lift: support not inside the character hyperplane");
        FormalVector proj = character_projection(F, a, hat(embed(Y, n + 1)));
        Rat scale = make_rat(Int(1), int_pow(Int(F.q()), static_cast<unsigned long>(Y.dim())));
        out += proj.scaled(Cyclotomic::rational(out.conductor(), scale) * c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// chain indices
// ---------------------------------------------------------------------------

struct ChainEntry {
    int kind = 0;    // 0 or 1: binary entry; 2: character entry
    FFVector label;  // character label, length = level reached minus one

    auto operator<=>(const ChainEntry&) const = default;
};

/// Index of one eigenvector: a sequence of entries where a binary entry
/// raises the ambient level by one and a character entry by two. The number
/// of nonzero entries (1's and characters) is the level index k of the
/// eigenvalue.
struct ChainIndex {
    std::vector<ChainEntry> entries;

    int weight() const {
        int w = 0;
        for (const auto& e : entries)
            if (e.kind != 0) ++w;
        return w;
    }

    int level() const {
        int l = 0;
        for (const auto& e : entries) l += (e.kind == 2) ? 2 : 1;
        return l;
    }

    bool binary_only() const {
        for (const auto& e : entries)
            if (e.kind == 2) return false;
        return true;
    }

    ChainIndex extended_bit(int bit) const {
        ChainIndex r = *this;
        r.entries.push_back({bit, {}});
        return r;
    }

    ChainIndex extended_chi(FFVector a) const {
        ChainIndex r = *this;
        r.entries.push_back({2, std::move(a)});
        return r;
    }

    /// 0's and 1's interchanged; character entries untouched.
    ChainIndex flipped() const {
        ChainIndex r = *this;
        for (auto& e : r.entries)
            if (e.kind == 0)
                e.kind = 1;
            else if (e.kind == 1)
                e.kind = 0;
        return r;
    }

    auto operator<=>(const ChainIndex&) const = default;
};

/// All chain indices for level n, grouped by weight (stable within groups,
/// construction order). The group sizes are the Gaussian binomials and the
/// total is the Galois number.
inline std::vector<ChainIndex> enumerate_chain_indices(const Field& F, int n) {
    std::vector<std::vector<ChainIndex>> levels(static_cast<size_t>(n) + 1);
    levels[0] = {ChainIndex{}};
    for (int L = 1; L <= n; ++L) {
        for (const auto& beta : levels[static_cast<size_t>(L - 1)]) {
            levels[static_cast<size_t>(L)].push_back(beta.extended_bit(0));
            levels[static_cast<size_t>(L)].push_back(beta.extended_bit(1));
        }
        if (L >= 2)
            for (const auto& a : nontrivial_character_labels(F, L - 1))
                for (const auto& beta : levels[static_cast<size_t>(L - 2)])
                    levels[static_cast<size_t>(L)].push_back(beta.extended_chi(a));
    }
    auto out = levels[static_cast<size_t>(n)];
    std::stable_sort(out.begin(), out.end(),
                     [](const ChainIndex& x, const ChainIndex& y) { return x.weight() < y.weight(); });
    return out;
}

// ---------------------------------------------------------------------------
// the recursive eigenbasis
// ---------------------------------------------------------------------------

struct EigenRecord {
    ChainIndex alpha;
    FormalVector v;  // ambient = level of alpha
    Int eigenvalue;
    Cyclotomic norm_sq;  // <v, v>_pi computed directly
    int case_tag;        // 0 base; 1 bit-0; 2 bit-1; 3 character
    int parent;          // index into the level one (cases 1,2) or two (case 3) below
    std::optional<FormalVector> mid;  // case 3: the embedded copy inside the hyperplane

    EigenRecord(ChainIndex a, FormalVector vec, Int eig, Cyclotomic nsq, int tag, int par)
        : alpha(std::move(a)), v(std::move(vec)), eigenvalue(std::move(eig)),
          norm_sq(std::move(nsq)), case_tag(tag), parent(par) {}
};

struct EigenLevel {
    int n = 0;
    std::vector<EigenRecord> recs;  // construction order
    std::map<ChainIndex, int> index;

    const EigenRecord& by_alpha(const ChainIndex& a) const {
        auto it = index.find(a);
        if (it == index.end()) throw std::invalid_argument("EigenLevel: unknown index");
        return recs[static_cast<size_t>(it->second)];
    }
};

/// All levels 0..n. Levels feed the next one, and the norm and coordinate
/// laws reach one and two levels down, so the whole tower is retained.
using EigenTower = std::vector<EigenLevel>;

inline EigenTower build_eigen_tower(const Field& F, int n, long cap = kDefaultLatticeCap) {
    check_lattice_cap(F.q(), n, cap);
    long q = F.q();
    EigenTower tower;
    tower.reserve(static_cast<size_t>(n) + 1);

    auto push = [&](EigenLevel& lvl, ChainIndex alpha, FormalVector v, int tag, int parent) {
        int k = alpha.weight();
        Int eig = q_int(q, lvl.n - k) - q_int(q, k);
        Cyclotomic nsq = inner_product_pi(v, v);
        lvl.index.emplace(alpha, static_cast<int>(lvl.recs.size()));
        lvl.recs.emplace_back(std::move(alpha), std::move(v), std::move(eig), std::move(nsq), tag,
                              parent);
    };

    {
        EigenLevel base;
        base.n = 0;
        push(base, ChainIndex{}, delta(F, Subspace::zero(0)), 0, -1);
        tower.push_back(std::move(base));
    }

    for (int L = 1; L <= n; ++L) {
        EigenLevel lvl;
        lvl.n = L;
        const EigenLevel& prev = tower[static_cast<size_t>(L - 1)];
        for (int ib = 0; ib < static_cast<int>(prev.recs.size()); ++ib) {
            const EigenRecord& beta = prev.recs[static_cast<size_t>(ib)];
            int k = beta.alpha.weight();
            FormalVector emb = embed_vector(beta.v, L);
            FormalVector lifted = cover_lift(beta.v);
            Rat up(int_pow(Int(q), static_cast<unsigned long>(k)));
            Rat down(int_pow(Int(q), static_cast<unsigned long>(L - 1 - k)));
            push(lvl, beta.alpha.extended_bit(0), emb.scaled(up) + lifted, 1, ib);
            push(lvl, beta.alpha.extended_bit(1), emb.scaled(down) - lifted, 2, ib);
        }
        if (L >= 2) {
            const EigenLevel& prev2 = tower[static_cast<size_t>(L - 2)];
            for (const auto& a : nontrivial_character_labels(F, L - 1)) {
                Subspace X = support_hyperplane(F, a);
                for (int ib = 0; ib < static_cast<int>(prev2.recs.size()); ++ib) {
                    const EigenRecord& beta = prev2.recs[static_cast<size_t>(ib)];
                    FormalVector mid = hyperplane_embed(F, X, beta.v);
                    FormalVector v = isotypic_lift(F, a, X, mid);
                    push(lvl, beta.alpha.extended_chi(a), std::move(v), 3, ib);
                    lvl.recs.back().mid = std::move(mid);
                }
            }
        }
        tower.push_back(std::move(lvl));
    }
    return tower;
}

// ---------------------------------------------------------------------------
// closed-form binary-indexed eigenvectors and the radial span
// ---------------------------------------------------------------------------

/// The closed-form eigenvector for a binary index: coefficient of X is
/// (-1)^{|S n P(X)|} q^{d(alpha, X)}, where S is the set of 1-positions,
/// P(X) the pivot rows, d(alpha, i) counts earlier entries differing from
/// entry i, and d(alpha, X) sums d over the non-pivot rows.
inline FormalVector closed_form_eigenvector(const Field& F, int n, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != n)
        throw std::invalid_argument("closed_form_eigenvector: index length mismatch");
    for (int b : bits)
        if (b != 0 && b != 1)
            throw std::invalid_argument("closed_form_eigenvector: index must be binary");
    std::vector<long> d(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (bits[static_cast<size_t>(j)] != bits[static_cast<size_t>(i)]) ++d[static_cast<size_t>(i)];
    FormalVector out(F, n);
    for (int k = 0; k <= n; ++k) {
        for (const auto& X : enumerate_subspaces(F, n, k)) {
            long dsum = 0;
            int sign_hits = 0;
            size_t pi = 0;
            const auto& piv = X.pivots();
            for (int i = 0; i < n; ++i) {
                if (pi < piv.size() && piv[pi] == i) {
                    if (bits[static_cast<size_t>(i)] == 1) ++sign_hits;
                    ++pi;
                } else {
                    dsum += d[static_cast<size_t>(i)];
                }
            }
            Rat coeff(int_pow(Int(F.q()), static_cast<unsigned long>(dsum)));
            if (sign_hits % 2 == 1) coeff = -coeff;
            out.add_term(X, coeff);
        }
    }
    return out;
}

/// All 2^n binary indices in lexicographic order.
inline std::vector<std::vector<int>> binary_indices(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> bits(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(bits);
        size_t t = bits.size();
        while (t > 0 && bits[t - 1] == 1) bits[--t] = 0;
        if (t == 0) break;
        bits[t - 1] = 1;
    }
    return out;
}

struct RadialSpanResult {
    bool contained = true;
    std::vector<std::vector<int>> indices;            // the binary indices, lex order
    std::vector<std::optional<std::vector<Rat>>> coords;  // per k: coefficients over indices
};

/// Solve each radial vector s_k exactly as a rational combination of the
/// closed-form binary-indexed eigenvectors.
inline RadialSpanResult radial_span_solve(const Field& F, int n) {
    RadialSpanResult res;
    res.indices = binary_indices(n);
    SubspaceOrder ord = subspace_order(F, n);
    size_t rows = ord.list.size();
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(res.indices.size(), Rat(0)));
    for (size_t j = 0; j < res.indices.size(); ++j) {
        FormalVector v = closed_form_eigenvector(F, n, res.indices[j]);
        for (const auto& [X, c] : v.terms())
            A[static_cast<size_t>(ord.index_of(X))][j] = c.rational_value();
    }
    for (int k = 0; k <= n; ++k) {
        std::vector<Rat> b(rows, Rat(0));
        for (size_t i = 0; i < rows; ++i)
            if (ord.list[i].dim() == k) b[i] = 1;
        auto sol = rational_solve(A, b);
        if (!sol) res.contained = false;
        res.coords.push_back(std::move(sol));
    }
    return res;
}

}  // namespace qcube
