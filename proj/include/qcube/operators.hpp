#pragma once

/// \file operators.hpp
/// Linear algebra over the subspace lattice: sparse exact vectors in
/// C[B_q(n)] with coefficients in Q(zeta_p), the weighted adjacency matrix of
/// the lattice cover graph, the tridiagonal radial matrix, matrix-free
/// operator application, and the pi-weighted inner product.

#include <qcube/cyclotomic.hpp>
#include <qcube/subspace.hpp>

#include <functional>
#include <map>
#include <vector>

namespace qcube {

inline constexpr long kDefaultLatticeCap = 1000000;

inline void check_lattice_cap(long q, int n, long cap) {
    if (galois_number(q, n) > cap)
        throw CapError("lattice size G_q(n) exceeds cap " + std::to_string(cap));
}

// ---------------------------------------------------------------------------
// FormalVector
// ---------------------------------------------------------------------------

/// Sparse exact element of C[B_q(n)]: a map from subspaces to nonzero
/// cyclotomic coefficients. Keys all share the ambient dimension.
class FormalVector {
  public:
    FormalVector(const Field& F, int n) : F_(&F), n_(n) {}

    const Field& field() const { return *F_; }
    int ambient() const { return n_; }
    int conductor() const { return static_cast<int>(F_->p()); }

    const std::map<Subspace, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    Cyclotomic coefficient(const Subspace& X) const {
        auto it = terms_.find(X);
        if (it == terms_.end()) return Cyclotomic::zero(conductor());
        return it->second;
    }

    void add_term(const Subspace& X, const Cyclotomic& c) {
        if (X.ambient() != n_) throw std::invalid_argument("FormalVector: ambient mismatch");
        if (c.p() != conductor()) throw std::invalid_argument("FormalVector: conductor mismatch");
        auto it = terms_.find(X);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(X, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_term(const Subspace& X, const Rat& r) {
        add_term(X, Cyclotomic::rational(conductor(), r));
    }

    FormalVector& operator+=(const FormalVector& o) {
        check_compatible(o);
        for (const auto& [X, c] : o.terms_) add_term(X, c);
        return *this;
    }

    FormalVector& operator-=(const FormalVector& o) {
        check_compatible(o);
        for (const auto& [X, c] : o.terms_) add_term(X, -c);
        return *this;
    }

    friend FormalVector operator+(FormalVector a, const FormalVector& b) { return a += b; }
    friend FormalVector operator-(FormalVector a, const FormalVector& b) { return a -= b; }

    FormalVector scaled(const Cyclotomic& s) const {
        FormalVector r(*F_, n_);
        if (s.is_zero()) return r;
        for (const auto& [X, c] : terms_) r.terms_.emplace(X, s * c);
        return r;
    }

    FormalVector scaled(const Rat& s) const {
        return scaled(Cyclotomic::rational(conductor(), s));
    }

    bool operator==(const FormalVector& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

  private:
    void check_compatible(const FormalVector& o) const {
        if (n_ != o.n_ || F_->q() != o.F_->q())
            throw std::invalid_argument("FormalVector: ambient mismatch");
    }

    const Field* F_;
    int n_;
    std::map<Subspace, Cyclotomic> terms_;
};

inline FormalVector delta(const Field& F, const Subspace& X) {
    FormalVector v(F, X.ambient());
    v.add_term(X, Rat(1));
    return v;
}

/// Sum of all k-dimensional subspaces (the radial basis vectors).
inline FormalVector radial_vector(const Field& F, int n, int k) {
    FormalVector v(F, n);
    for (const auto& X : enumerate_subspaces(F, n, k)) v.add_term(X, Rat(1));
    return v;
}

/// Re-embed a vector into a larger ambient space.
inline FormalVector embed_vector(const FormalVector& v, int new_n) {
    FormalVector r(v.field(), new_n);
    for (const auto& [X, c] : v.terms()) r.add_term(embed(X, new_n), c);
    return r;
}

/// Restrict a vector supported inside the hyperplane down one ambient level.
/// Throws if any support element lies outside the hyperplane.
inline FormalVector restrict_vector(const FormalVector& v) {
    FormalVector r(v.field(), v.ambient() - 1);
    for (const auto& [X, c] : v.terms()) {
        if (X.outside_hyperplane())
            throw std::invalid_argument("restrict_vector: support outside hyperplane");
        r.add_term(restrict_hyperplane(X), c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// operators on C[B_q(n)]
// ---------------------------------------------------------------------------

/// Up operator: each subspace goes to the sum of its covers.
inline FormalVector apply_up(const FormalVector& v) {
    const Field& F = v.field();
    FormalVector r(F, v.ambient());
    for (const auto& [X, c] : v.terms())
        for (const auto& Z : covers_above(F, X)) r.add_term(Z, c);
    return r;
}

/// Down operator: each subspace goes to the sum of the subspaces it covers.
inline FormalVector apply_down(const FormalVector& v) {
    const Field& F = v.field();
    FormalVector r(F, v.ambient());
    for (const auto& [X, c] : v.terms())
        for (const auto& Y : covers_below(F, X)) r.add_term(Y, c);
    return r;
}

/// Matrix-free application of the lattice adjacency operator
/// U + sum_k q^{k-1} D_k. The k = 0 down term never fires (nothing to cover),
/// so q^{-1} is never formed.
inline FormalVector apply_adjacency(const FormalVector& v) {
    const Field& F = v.field();
    FormalVector r(F, v.ambient());
    for (const auto& [X, c] : v.terms()) {
        for (const auto& Z : covers_above(F, X)) r.add_term(Z, c);
        int k = X.dim();
        if (k >= 1) {
            Rat w(int_pow(Int(F.q()), static_cast<unsigned long>(k - 1)));
            Cyclotomic wc = Cyclotomic::rational(v.conductor(), w) * c;
            for (const auto& Y : covers_below(F, X)) r.add_term(Y, wc);
        }
    }
    return r;
}

/// Conjugate-linear-in-the-first-argument inner product with the level
/// weights pi: <u,v> = sum_X conj(u(X)) v(X) pi(X).
inline Cyclotomic inner_product_pi(const FormalVector& u, const FormalVector& v) {
    if (u.ambient() != v.ambient() || u.field().q() != v.field().q())
        throw std::invalid_argument("inner_product_pi: ambient mismatch");
    const Field& F = u.field();
    int n = u.ambient();
    Cyclotomic acc = Cyclotomic::zero(u.conductor());
    const auto& a = u.terms();
    const auto& b = v.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            Rat w = pi_weight(F.q(), n, ia->first.dim());
            acc += w * (ia->second.conj() * ib->second);
            ++ia;
            ++ib;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// exact matrices
// ---------------------------------------------------------------------------

/// Square big-integer matrix with sparse row storage.
class IntMatrix {
  public:
    explicit IntMatrix(int n) : n_(n), rows_(static_cast<size_t>(n)) {}

    int size() const { return n_; }

    Int get(int i, int j) const {
        const auto& row = rows_[static_cast<size_t>(i)];
        auto it = row.find(j);
        return it == row.end() ? Int(0) : it->second;
    }

    void set(int i, int j, Int v) {
        auto& row = rows_[static_cast<size_t>(i)];
        if (v == 0)
            row.erase(j);
        else
            row[j] = std::move(v);
    }

    void add(int i, int j, const Int& v) { set(i, j, get(i, j) + v); }

    const std::map<int, Int>& row(int i) const { return rows_[static_cast<size_t>(i)]; }

    Int row_sum(int i) const {
        Int s = 0;
        for (const auto& [j, v] : rows_[static_cast<size_t>(i)]) s += v;
        return s;
    }

    size_t nnz() const {
        size_t t = 0;
        for (const auto& r : rows_) t += r.size();
        return t;
    }

    std::vector<Int> dense() const {
        std::vector<Int> d(static_cast<size_t>(n_) * static_cast<size_t>(n_), Int(0));
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[static_cast<size_t>(i)])
                d[static_cast<size_t>(i) * n_ + j] = v;
        return d;
    }

    /// Matrix with row r and column r removed.
    IntMatrix minor_at(int r) const {
        IntMatrix m(n_ - 1);
        for (int i = 0; i < n_; ++i) {
            if (i == r) continue;
            int mi = i < r ? i : i - 1;
            for (const auto& [j, v] : rows_[static_cast<size_t>(i)]) {
                if (j == r) continue;
                m.set(mi, j < r ? j : j - 1, v);
            }
        }
        return m;
    }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  private:
    int n_;
    std::vector<std::map<int, Int>> rows_;
};

/// The q-weighted adjacency matrix of the subspace lattice: entry (X, Y) is
/// 1 when X covers Y and q^{dim X} when Y covers X. Rows and columns are in
/// canonical subspace order; every row sums to (n)_q.
inline IntMatrix adjacency_matrix(const Field& F, int n, long cap = kDefaultLatticeCap) {
    check_lattice_cap(F.q(), n, cap);
    SubspaceOrder ord = subspace_order(F, n);
    IntMatrix M(static_cast<int>(ord.list.size()));
    for (int ix = 0; ix < static_cast<int>(ord.list.size()); ++ix) {
        const Subspace& X = ord.list[static_cast<size_t>(ix)];
        Int up_weight = int_pow(Int(F.q()), static_cast<unsigned long>(X.dim()));
        for (const auto& Z : covers_above(F, X)) {
            int iz = ord.index_of(Z);
            M.set(ix, iz, up_weight);  // X below Z
            M.set(iz, ix, Int(1));     // Z covers X
        }
    }
    return M;
}

/// The q-deformed Kac tridiagonal matrix of order n+1: zero diagonal,
/// subdiagonal (1)_q ... (n)_q, superdiagonal (n)_q, q(n-1)_q, ...,
/// q^{n-1}(1)_q. It is the action of the adjacency operator on the radial
/// vectors s_0..s_n.
inline IntMatrix kac_matrix(long q, int n) {
    IntMatrix K(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (k + 1 <= n) K.set(k + 1, k, q_int(q, k + 1));
        if (k - 1 >= 0)
            K.set(k - 1, k, int_pow(Int(q), static_cast<unsigned long>(k - 1)) * q_int(q, n - k + 1));
    }
    return K;
}

}  // namespace qcube
