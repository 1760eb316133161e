#pragma once

/// \file subspace.hpp
/// The lattice of subspaces of F_q^n. Every subspace is held in Schubert
/// normal form (column reduced echelon form): every column nonzero, the last
/// nonzero entry of column j is a 1 in row r_j, r_1 < ... < r_k, and the
/// submatrix on the pivot rows is the identity. This representative is
/// unique per subspace, so equality and ordering are plain comparisons.
///
/// Canonical order of subspaces (used everywhere a matrix index or a report
/// is produced): by dimension, then pivot set lexicographically, then the
/// column-major entry sequence lexicographically by element code.

#include <qcube/finite_field.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

namespace qcube {

class Subspace {
  public:
    Subspace() = default;

    /// Assemble from already-reduced data. Rows are 0-based.
    Subspace(int n, std::vector<int> pivots, std::vector<int> col_major_entries)
        : n_(n), k_(static_cast<int>(pivots.size())), pivots_(std::move(pivots)),
          entries_(std::move(col_major_entries)) {
        if (entries_.size() != static_cast<size_t>(n_) * static_cast<size_t>(k_))
            throw std::invalid_argument("Subspace: entry count mismatch");
    }

    static Subspace zero(int n) { return Subspace(n, {}, {}); }

    static Subspace full(int n) {
        std::vector<int> piv(static_cast<size_t>(n));
        std::vector<int> ent(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            piv[static_cast<size_t>(j)] = j;
            ent[static_cast<size_t>(j) * n + j] = 1;
        }
        return Subspace(n, std::move(piv), std::move(ent));
    }

    int ambient() const { return n_; }
    int dim() const { return k_; }
    const std::vector<int>& pivots() const { return pivots_; }

    int entry(int row, int col) const { return entries_[static_cast<size_t>(col) * n_ + row]; }

    FFVector column(int j) const {
        FFVector c(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) c[static_cast<size_t>(i)] = entry(i, j);
        return c;
    }

    bool has_pivot(int row) const {
        return std::binary_search(pivots_.begin(), pivots_.end(), row);
    }

    /// True iff the subspace is not contained in the hyperplane
    /// {last coordinate = 0}, i.e. the last row is pivotal.
    bool outside_hyperplane() const { return k_ > 0 && pivots_.back() == n_ - 1; }

    std::strong_ordering operator<=>(const Subspace& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        if (auto c = k_ <=> o.k_; c != 0) return c;
        if (auto c = pivots_ <=> o.pivots_; c != 0) return c;
        return entries_ <=> o.entries_;
    }
    bool operator==(const Subspace& o) const = default;

  private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> pivots_;   // 0-based pivot rows, strictly increasing
    std::vector<int> entries_;  // column-major, n_ * k_ element codes
};

// ---------------------------------------------------------------------------
// construction and reduction
// ---------------------------------------------------------------------------

namespace detail {

/// Working form during reduction: loose columns with known pivot rows.
struct EchelonBuilder {
    const Field& F;
    int n;
    std::vector<FFVector> cols;  // kept mutually reduced
    std::vector<int> pivots;     // pivot row of cols[i] (unsorted during build)

    explicit EchelonBuilder(const Field& f, int ambient) : F(f), n(ambient) {}

    static int last_nonzero(const FFVector& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (v[static_cast<size_t>(i)] != 0) return i;
        return -1;
    }

    /// Reduce v by the current basis and absorb it if independent.
    void insert(FFVector v) {
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("canonicalize: vector has wrong length");
        for (size_t b = 0; b < cols.size(); ++b) {
            int c = v[static_cast<size_t>(pivots[b])];
            if (c != 0)
                for (int i = 0; i <= pivots[b]; ++i)
                    v[static_cast<size_t>(i)] =
                        F.sub(v[static_cast<size_t>(i)], F.mul(c, cols[b][static_cast<size_t>(i)]));
        }
        int r = last_nonzero(v);
        if (r < 0) return;
        int scale = F.inv(v[static_cast<size_t>(r)]);
        for (int i = 0; i <= r; ++i) v[static_cast<size_t>(i)] = F.mul(scale, v[static_cast<size_t>(i)]);
        for (size_t b = 0; b < cols.size(); ++b) {
            int c = cols[b][static_cast<size_t>(r)];
            if (c != 0)
                for (int i = 0; i <= r; ++i)
                    cols[b][static_cast<size_t>(i)] =
                        F.sub(cols[b][static_cast<size_t>(i)], F.mul(c, v[static_cast<size_t>(i)]));
        }
        cols.push_back(std::move(v));
        pivots.push_back(r);
    }

    Subspace finish() const {
        std::vector<size_t> order(cols.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        std::vector<int> piv;
        std::vector<int> ent;
        piv.reserve(order.size());
        ent.reserve(order.size() * static_cast<size_t>(n));
        for (size_t idx : order) {
            piv.push_back(pivots[idx]);
            for (int i = 0; i < n; ++i) ent.push_back(cols[idx][static_cast<size_t>(i)]);
        }
        return Subspace(n, std::move(piv), std::move(ent));
    }
};

}  // namespace detail

/// Schubert normal form of the span of the given vectors. Empty input gives
/// the zero subspace; idempotent on already-canonical columns.
inline Subspace canonicalize(const Field& F, const std::vector<FFVector>& vectors, int n) {
    detail::EchelonBuilder b(F, n);
    for (const auto& v : vectors) b.insert(v);
    return b.finish();
}

/// Membership test by pivot reduction.
inline bool contains_vector(const Field& F, const Subspace& X, FFVector v) {
    for (int j = 0; j < X.dim(); ++j) {
        int r = X.pivots()[static_cast<size_t>(j)];
        int c = v[static_cast<size_t>(r)];
        if (c != 0)
            for (int i = 0; i <= r; ++i)
                v[static_cast<size_t>(i)] = F.sub(v[static_cast<size_t>(i)], F.mul(c, X.entry(i, j)));
    }
    for (int x : v)
        if (x != 0) return false;
    return true;
}

inline bool contains(const Field& F, const Subspace& X, const Subspace& Y) {
    if (X.ambient() != Y.ambient()) throw std::invalid_argument("contains: ambient mismatch");
    if (Y.dim() > X.dim()) return false;
    for (int j = 0; j < Y.dim(); ++j)
        if (!contains_vector(F, X, Y.column(j))) return false;
    return true;
}

/// True iff Y is covered by X: Y < X with dim X = dim Y + 1.
inline bool covers(const Field& F, const Subspace& X, const Subspace& Y) {
    return X.dim() == Y.dim() + 1 && contains(F, X, Y);
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// All k-dimensional subspaces of F_q^n in canonical order, generated
/// directly as Schubert normal forms (pivot set, then free entries).
inline std::vector<Subspace> enumerate_subspaces(const Field& F, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_subspaces: need 0 <= k <= n");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(n));
        return out;
    }
    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
    long q = F.q();
    while (true) {
        // free cells of this pivot pattern, column-major
        std::vector<std::pair<int, int>> free_cells;  // (col, row)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < piv[static_cast<size_t>(j)]; ++i)
                if (!std::binary_search(piv.begin(), piv.end(), i)) free_cells.emplace_back(j, i);

        std::vector<int> vals(free_cells.size(), 0);
        while (true) {
            std::vector<int> ent(static_cast<size_t>(n) * static_cast<size_t>(k), 0);
            for (int j = 0; j < k; ++j)
                ent[static_cast<size_t>(j) * n + piv[static_cast<size_t>(j)]] = 1;
            for (size_t t = 0; t < free_cells.size(); ++t)
                ent[static_cast<size_t>(free_cells[t].first) * n + free_cells[t].second] = vals[t];
            out.emplace_back(n, piv, std::move(ent));

            // odometer, last cell fastest so output ascends lexicographically
            size_t t = free_cells.size();
            while (t > 0 && vals[t - 1] == q - 1) vals[--t] = 0;
            if (t == 0) break;
            vals[t - 1] += 1;
        }

        // next pivot k-subset of {0..n-1} in lex order
        int j = k - 1;
        while (j >= 0 && piv[static_cast<size_t>(j)] == n - k + j) --j;
        if (j < 0) break;
        piv[static_cast<size_t>(j)] += 1;
        for (int i = j + 1; i < k; ++i) piv[static_cast<size_t>(i)] = piv[static_cast<size_t>(i - 1)] + 1;
    }
    return out;
}

/// Index of every subspace of F_q^n in the canonical order (all dimensions).
struct SubspaceOrder {
    std::vector<Subspace> list;
    std::map<Subspace, int> position;

    int index_of(const Subspace& X) const {
        auto it = position.find(X);
        if (it == position.end()) throw std::invalid_argument("SubspaceOrder: unknown subspace");
        return it->second;
    }
};

inline SubspaceOrder subspace_order(const Field& F, int n) {
    SubspaceOrder ord;
    for (int k = 0; k <= n; ++k)
        for (auto& X : enumerate_subspaces(F, n, k)) ord.list.push_back(std::move(X));
    for (size_t i = 0; i < ord.list.size(); ++i)
        ord.position.emplace(ord.list[i], static_cast<int>(i));
    return ord;
}

// ---------------------------------------------------------------------------
// hyperplane structure: restriction, hats, lifts
// ---------------------------------------------------------------------------

/// Re-embed into a larger ambient space (new coordinates are zero).
inline Subspace embed(const Subspace& X, int new_n) {
    if (new_n < X.ambient()) throw std::invalid_argument("embed: ambient may only grow");
    std::vector<int> ent(static_cast<size_t>(new_n) * static_cast<size_t>(X.dim()), 0);
    for (int j = 0; j < X.dim(); ++j)
        for (int i = 0; i < X.ambient(); ++i)
            ent[static_cast<size_t>(j) * new_n + i] = X.entry(i, j);
    return Subspace(new_n, X.pivots(), std::move(ent));
}

/// X intersected with {last coordinate = 0}, ambient dimension decremented.
/// Structural on the normal form: drop the last row, and the pivot column in
/// that row when present.
inline Subspace restrict_hyperplane(const Subspace& X) {
    int n = X.ambient();
    if (n == 0) throw std::invalid_argument("restrict_hyperplane: ambient 0");
    std::vector<int> piv;
    std::vector<int> ent;
    for (int j = 0; j < X.dim(); ++j) {
        if (X.pivots()[static_cast<size_t>(j)] == n - 1) continue;
        piv.push_back(X.pivots()[static_cast<size_t>(j)]);
        for (int i = 0; i < n - 1; ++i) ent.push_back(X.entry(i, j));
    }
    return Subspace(n - 1, std::move(piv), std::move(ent));
}

/// span(X, e_n) for X inside the hyperplane; ambient unchanged.
inline Subspace hat(const Subspace& X) {
    if (X.outside_hyperplane())
        throw std::invalid_argument("hat: subspace is not inside the hyperplane");
    int n = X.ambient();
    if (n == 0) throw std::invalid_argument("hat: ambient 0 has no hyperplane complement");
    std::vector<int> piv = X.pivots();
    piv.push_back(n - 1);
    std::vector<int> ent(static_cast<size_t>(n) * (static_cast<size_t>(X.dim()) + 1), 0);
    for (int j = 0; j < X.dim(); ++j)
        for (int i = 0; i < n; ++i) ent[static_cast<size_t>(j) * n + i] = X.entry(i, j);
    ent[static_cast<size_t>(X.dim()) * n + (n - 1)] = 1;
    return Subspace(n, std::move(piv), std::move(ent));
}

/// Coset representatives of X in its ambient space: all vectors supported on
/// the non-pivot rows, in lexicographic code order (zero vector first).
inline std::vector<FFVector> coset_reps(const Field& F, const Subspace& X) {
    int n = X.ambient();
    std::vector<int> free_rows;
    for (int i = 0; i < n; ++i)
        if (!X.has_pivot(i)) free_rows.push_back(i);
    std::vector<FFVector> reps;
    std::vector<int> vals(free_rows.size(), 0);
    long q = F.q();
    while (true) {
        FFVector v(static_cast<size_t>(n), 0);
        for (size_t t = 0; t < free_rows.size(); ++t) v[static_cast<size_t>(free_rows[t])] = vals[t];
        reps.push_back(std::move(v));
        size_t t = free_rows.size();
        while (t > 0 && vals[t - 1] == q - 1) vals[--t] = 0;
        if (t == 0) break;
        vals[t - 1] += 1;
    }
    return reps;
}

/// All subspaces Y of F_q^{n+1} outside the hyperplane with
/// Y intersect F_q^n = X, for X with ambient n. There are q^{n - dim X},
/// one per coset representative u: Y = span(X, e_{n+1} + u).
inline std::vector<Subspace> lifts_above(const Field& F, const Subspace& X) {
    int n = X.ambient();
    std::vector<Subspace> out;
    for (const FFVector& u : coset_reps(F, X)) {
        std::vector<int> piv = X.pivots();
        piv.push_back(n);
        std::vector<int> ent(static_cast<size_t>(n + 1) * (static_cast<size_t>(X.dim()) + 1), 0);
        for (int j = 0; j < X.dim(); ++j)
            for (int i = 0; i < n; ++i) ent[static_cast<size_t>(j) * (n + 1) + i] = X.entry(i, j);
        for (int i = 0; i < n; ++i)
            ent[static_cast<size_t>(X.dim()) * (n + 1) + i] = u[static_cast<size_t>(i)];
        ent[static_cast<size_t>(X.dim()) * (n + 1) + n] = 1;
        out.emplace_back(n + 1, std::move(piv), std::move(ent));
    }
    return out;
}

// ---------------------------------------------------------------------------
// covers
// ---------------------------------------------------------------------------

/// All subspaces covering X: span(X, w) over projective representatives w of
/// the quotient, assembled directly in normal form.
inline std::vector<Subspace> covers_above(const Field& F, const Subspace& X) {
    int n = X.ambient();
    int k = X.dim();
    std::vector<Subspace> out;
    for (FFVector w : coset_reps(F, X)) {
        int r = detail::EchelonBuilder::last_nonzero(w);
        if (r < 0) continue;
        if (w[static_cast<size_t>(r)] != 1) continue;  // one representative per line
        // insert w as the column with pivot r, clearing row r elsewhere
        std::vector<FFVector> cols;
        std::vector<int> piv;
        for (int j = 0; j < k; ++j) {
            FFVector c = X.column(j);
            int cr = c[static_cast<size_t>(r)];
            if (cr != 0)
                for (int i = 0; i <= r; ++i)
                    c[static_cast<size_t>(i)] = F.sub(c[static_cast<size_t>(i)], F.mul(cr, w[static_cast<size_t>(i)]));
            cols.push_back(std::move(c));
            piv.push_back(X.pivots()[static_cast<size_t>(j)]);
        }
        cols.push_back(std::move(w));
        piv.push_back(r);
        std::vector<size_t> order(cols.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return piv[a] < piv[b]; });
        std::vector<int> spiv;
        std::vector<int> ent;
        for (size_t idx : order) {
            spiv.push_back(piv[idx]);
            for (int i = 0; i < n; ++i) ent.push_back(cols[idx][static_cast<size_t>(i)]);
        }
        out.emplace_back(n, std::move(spiv), std::move(ent));
    }
    return out;
}

/// Product of two normal forms: columns of X recombined by the columns of H
/// (H over the ambient F_q^{dim X}). The result is again in normal form.
inline Subspace compose(const Field& F, const Subspace& X, const Subspace& H) {
    if (H.ambient() != X.dim()) throw std::invalid_argument("compose: inner dimensions differ");
    int n = X.ambient();
    std::vector<int> piv(static_cast<size_t>(H.dim()));
    std::vector<int> ent(static_cast<size_t>(n) * static_cast<size_t>(H.dim()), 0);
    for (int j = 0; j < H.dim(); ++j) {
        piv[static_cast<size_t>(j)] = X.pivots()[static_cast<size_t>(H.pivots()[static_cast<size_t>(j)])];
        for (int i = 0; i < n; ++i) {
            int s = 0;
            for (int t = 0; t < X.dim(); ++t) s = F.add(s, F.mul(X.entry(i, t), H.entry(t, j)));
            ent[static_cast<size_t>(j) * n + i] = s;
        }
    }
    return Subspace(n, std::move(piv), std::move(ent));
}

/// All subspaces covered by X: hyperplanes of the column span, via compose.
inline std::vector<Subspace> covers_below(const Field& F, const Subspace& X) {
    std::vector<Subspace> out;
    if (X.dim() == 0) return out;
    for (const Subspace& H : enumerate_subspaces(F, X.dim(), X.dim() - 1))
        out.push_back(compose(F, X, H));
    return out;
}

// ---------------------------------------------------------------------------
// general linear action and pivot recomputation
// ---------------------------------------------------------------------------

/// g applied to X, where g is given by rows; throws on singular g.
inline Subspace transform(const Field& F, const std::vector<FFVector>& g_rows, const Subspace& X) {
    int n = X.ambient();
    if (static_cast<int>(g_rows.size()) != n)
        throw std::invalid_argument("transform: matrix/ambient mismatch");
    {
        std::vector<FFVector> gcols(static_cast<size_t>(n), FFVector(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gcols[static_cast<size_t>(j)][static_cast<size_t>(i)] = g_rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (canonicalize(F, gcols, n).dim() != n)
            throw std::invalid_argument("transform: singular matrix");
    }
    std::vector<FFVector> image;
    for (int j = 0; j < X.dim(); ++j) {
        FFVector col = X.column(j);
        FFVector out(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = F.dot(g_rows[static_cast<size_t>(i)], col);
        image.push_back(std::move(out));
    }
    return canonicalize(F, image, n);
}

/// Pivot rows recomputed from scratch via intersection dimensions with the
/// coordinate flag F_q^1 < F_q^2 < ... (0-based rows). Independent of the
/// stored pivot set.
inline std::vector<int> pivots_via_intersections(const Field& F, const Subspace& X) {
    int n = X.ambient();
    int k = X.dim();
    auto dim_meet_prefix = [&](int j) {
        // dim(X n F_q^j) = k - rank of the last n-j rows of the normal form
        detail::EchelonBuilder b(F, n - j);
        for (int c = 0; c < k; ++c) {
            FFVector tail(static_cast<size_t>(n - j));
            for (int i = j; i < n; ++i) tail[static_cast<size_t>(i - j)] = X.entry(i, c);
            b.insert(std::move(tail));
        }
        return k - static_cast<int>(b.cols.size());
    };
    std::vector<int> piv;
    int prev = dim_meet_prefix(0);  // = 0
    for (int j = 1; j <= n; ++j) {
        int cur = dim_meet_prefix(j);
        if (cur == prev + 1) piv.push_back(j - 1);
        prev = cur;
    }
    return piv;
}

}  // namespace qcube
