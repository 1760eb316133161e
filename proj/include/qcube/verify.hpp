#pragma once

/// \file verify.hpp
/// Exact verification drivers over the whole library: every check is
/// pass/fail with zero tolerance. Shared by the unit suite, the acceptance
/// runner and the CLI selftest.

#include <qcube/eigenbasis.hpp>
#include <qcube/trees.hpp>

#include <random>

namespace qcube {

// ---------------------------------------------------------------------------
// q-arithmetic identities
// ---------------------------------------------------------------------------

/// Galois-number recurrence G(n+1) = 2G(n) + (q^n - 1)G(n-1) and its
/// binomial refinement, checked exactly for 1 <= n <= nmax.
inline bool verify_goldman_rota(long q, int nmax) {
    for (int n = 1; n <= nmax; ++n) {
        Int qn = int_pow(Int(q), static_cast<unsigned long>(n));
        if (galois_number(q, n + 1) != 2 * galois_number(q, n) + (qn - 1) * galois_number(q, n - 1))
            return false;
        for (int k = 1; k <= n + 1; ++k) {
            Int lhs = q_binomial(q, n + 1, k);
            Int rhs = q_binomial(q, n, k) + q_binomial(q, n, k - 1) +
                      (qn - 1) * q_binomial(q, n - 1, k - 1);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// sum_k q^{k(k-1)/2} [n over k] = prod_{i<n} (1 + q^i).
inline bool verify_qbinomial_normalization(long q, int nmax) {
    for (int n = 0; n <= nmax; ++n) {
        Int s = 0;
        for (int k = 0; k <= n; ++k)
            s += int_pow(Int(q), choose2(k).get_ui()) * q_binomial(q, n, k);
        if (s != p_factor(q, n)) return false;
    }
    return true;
}

/// The level weights sum to 1 against the level counts.
inline bool verify_pi_probability(long q, int nmax) {
    for (int n = 0; n <= nmax; ++n) {
        Rat s = 0;
        for (int k = 0; k <= n; ++k) s += Rat(q_binomial(q, n, k)) * pi_weight(q, n, k);
        if (s != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// operator checks
// ---------------------------------------------------------------------------

inline bool verify_row_sums(const Field& F, int n, long cap = kDefaultLatticeCap) {
    IntMatrix M = adjacency_matrix(F, n, cap);
    Int target = q_int(F.q(), n);
    for (int i = 0; i < M.size(); ++i)
        if (M.row_sum(i) != target) return false;
    return true;
}

/// pi(X) M(X,Y) = pi(Y) M(Y,X) for every entry: the exact-arithmetic form of
/// the diagonal symmetrization.
inline bool verify_detailed_balance(const Field& F, int n, long cap = kDefaultLatticeCap) {
    IntMatrix M = adjacency_matrix(F, n, cap);
    SubspaceOrder ord = subspace_order(F, n);
    for (int i = 0; i < M.size(); ++i) {
        Rat wi = pi_weight(F.q(), n, ord.list[static_cast<size_t>(i)].dim());
        for (const auto& [j, v] : M.row(i)) {
            Rat wj = pi_weight(F.q(), n, ord.list[static_cast<size_t>(j)].dim());
            if (wi * Rat(v) != wj * Rat(M.get(j, i))) return false;
        }
    }
    return true;
}

/// Matrix-free operator application agrees with the materialized matrix on
/// every basis vector.
inline bool verify_matrix_free_agreement(const Field& F, int n, long cap = kDefaultLatticeCap) {
    IntMatrix M = adjacency_matrix(F, n, cap);
    SubspaceOrder ord = subspace_order(F, n);
    for (int col = 0; col < M.size(); ++col) {
        FormalVector av = apply_adjacency(delta(F, ord.list[static_cast<size_t>(col)]));
        size_t nnz = 0;
        for (int row = 0; row < M.size(); ++row) {
            Int entry = M.get(row, col);
            if (entry == 0) continue;
            ++nnz;
            Cyclotomic c = av.coefficient(ord.list[static_cast<size_t>(row)]);
            if (!c.is_rational() || c.rational_value() != Rat(entry)) return false;
        }
        if (nnz != av.support_size()) return false;
    }
    return true;
}

/// The adjacency operator acts on the radial vectors exactly through the
/// columns of the Kac matrix.
inline bool verify_radial_action(const Field& F, int n) {
    IntMatrix K = kac_matrix(F.q(), n);
    std::vector<FormalVector> s;
    for (int k = 0; k <= n; ++k) s.push_back(radial_vector(F, n, k));
    for (int k = 0; k <= n; ++k) {
        FormalVector expect(F, n);
        if (k + 1 <= n) expect += s[static_cast<size_t>(k + 1)].scaled(Rat(K.get(k + 1, k)));
        if (k - 1 >= 0) expect += s[static_cast<size_t>(k - 1)].scaled(Rat(K.get(k - 1, k)));
        if (!(apply_adjacency(s[static_cast<size_t>(k)]) == expect)) return false;
    }
    return true;
}

/// <A u, v> = <u, A v> for seeded random rational vectors.
inline bool verify_self_adjoint_random(const Field& F, int n, int trials, uint64_t seed) {
    SubspaceOrder ord = subspace_order(F, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto random_vector = [&]() {
        FormalVector v(F, n);
        for (const auto& X : ord.list) v.add_term(X, make_rat(Int(num(rng)), Int(den(rng))));
        return v;
    };
    for (int t = 0; t < trials; ++t) {
        FormalVector u = random_vector();
        FormalVector v = random_vector();
        if (inner_product_pi(apply_adjacency(u), v) != inner_product_pi(u, apply_adjacency(v)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// eigenbasis checks
// ---------------------------------------------------------------------------

inline bool verify_eigen_residuals(const EigenLevel& lvl) {
    for (const auto& rec : lvl.recs) {
        if (rec.v.is_zero()) return false;
        if (!(apply_adjacency(rec.v) == rec.v.scaled(Rat(rec.eigenvalue)))) return false;
    }
    return true;
}

inline bool verify_orthogonality(const EigenLevel& lvl) {
    for (size_t i = 0; i < lvl.recs.size(); ++i)
        for (size_t j = i + 1; j < lvl.recs.size(); ++j)
            if (!inner_product_pi(lvl.recs[i].v, lvl.recs[j].v).is_zero()) return false;
    return true;
}

/// Exactly G_q(n) vectors with the closed-form level counts.
inline bool verify_counts(const Field& F, const EigenLevel& lvl) {
    if (Int(static_cast<long>(lvl.recs.size())) != galois_number(F.q(), lvl.n)) return false;
    std::map<int, long> by_weight;
    for (const auto& rec : lvl.recs) by_weight[rec.alpha.weight()] += 1;
    for (int k = 0; k <= lvl.n; ++k)
        if (Int(by_weight[k]) != q_binomial(F.q(), lvl.n, k)) return false;
    return true;
}

/// Norm recursions and coordinate laws across the tower, all exact; the
/// character case compares squared moduli.
inline bool verify_norm_coordinate_laws(const Field& F, const EigenTower& tower) {
    long q = F.q();
    int p = static_cast<int>(F.p());
    for (size_t L = 1; L < tower.size(); ++L) {
        const EigenLevel& lvl = tower[L];
        Int qn = int_pow(Int(q), static_cast<unsigned long>(L - 1));
        for (const auto& rec : lvl.recs) {
            if (rec.case_tag == 1 || rec.case_tag == 2) {
                const EigenRecord& beta = tower[L - 1].recs[static_cast<size_t>(rec.parent)];
                int k = beta.alpha.weight();
                int e = rec.case_tag == 1 ? 2 * k : 2 * (static_cast<int>(L) - 1 - k);
                Rat factor = make_rat(qn + int_pow(Int(q), static_cast<unsigned long>(e)), qn + 1);
                if (rec.norm_sq != Cyclotomic::rational(p, factor) * beta.norm_sq) return false;

                Rat scale(int_pow(Int(q), static_cast<unsigned long>(
                                              rec.case_tag == 1 ? k : static_cast<int>(L) - 1 - k)));
                Cyclotomic inside_scale = Cyclotomic::rational(p, scale);
                Cyclotomic outside_sign =
                    Cyclotomic::rational(p, rec.case_tag == 1 ? Rat(1) : Rat(-1));
                std::map<Subspace, bool> candidates;
                for (const auto& [Y, c] : rec.v.terms()) candidates.emplace(Y, true);
                for (const auto& [Z, c] : beta.v.terms()) {
                    candidates.emplace(embed(Z, static_cast<int>(L)), true);
                    for (const auto& Y : lifts_above(F, Z)) candidates.emplace(Y, true);
                }
                for (const auto& [Y, unused] : candidates) {
                    Cyclotomic down = beta.v.coefficient(restrict_hyperplane(Y));
                    Cyclotomic expect =
                        Y.outside_hyperplane() ? outside_sign * down : inside_scale * down;
                    if (rec.v.coefficient(Y) != expect) return false;
                }
            } else if (rec.case_tag == 3) {
                const EigenRecord& beta = tower[L - 2].recs[static_cast<size_t>(rec.parent)];
                Int qprev = int_pow(Int(q), static_cast<unsigned long>(L - 2));
                Rat factor = make_rat(qn, (qprev + 1) * (qn + 1));
                if (rec.norm_sq != Cyclotomic::rational(p, factor) * beta.norm_sq) return false;

                const FormalVector& mid = *rec.mid;
                std::map<Subspace, bool> candidates;
                for (const auto& [Y, c] : rec.v.terms()) candidates.emplace(Y, true);
                for (const auto& [Z, c] : mid.terms())
                    for (const auto& Y : lifts_above(F, Z)) candidates.emplace(Y, true);
                for (const auto& [Y, unused] : candidates) {
                    if (!Y.outside_hyperplane()) {
                        if (!rec.v.coefficient(Y).is_zero()) return false;
                        continue;
                    }
                    Cyclotomic lhs = rec.v.coefficient(Y).abs_sq();
                    Cyclotomic rhs = mid.coefficient(restrict_hyperplane(Y)).abs_sq();
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

/// Interchanging 0's and 1's preserves the norm and every coordinate
/// modulus.
inline bool verify_flip_laws(const EigenLevel& lvl) {
    for (const auto& rec : lvl.recs) {
        auto it = lvl.index.find(rec.alpha.flipped());
        if (it == lvl.index.end()) return false;
        const EigenRecord& other = lvl.recs[static_cast<size_t>(it->second)];
        if (rec.norm_sq != other.norm_sq) return false;
        std::map<Subspace, bool> keys;
        for (const auto& [Y, c] : rec.v.terms()) keys.emplace(Y, true);
        for (const auto& [Y, c] : other.v.terms()) keys.emplace(Y, true);
        for (const auto& [Y, unused] : keys)
            if (rec.v.coefficient(Y).abs_sq() != other.v.coefficient(Y).abs_sq()) return false;
    }
    return true;
}

/// The closed-form binary-indexed vectors equal the recursion's output, and
/// take the stated values q^{k(n-k)} at the zero subspace and (-1)^k at the
/// full space.
inline bool verify_closed_form(const Field& F, int n, const EigenLevel& lvl) {
    for (const auto& bits : binary_indices(n)) {
        ChainIndex alpha;
        for (int b : bits) alpha = alpha.extended_bit(b);
        const EigenRecord& rec = lvl.by_alpha(alpha);
        FormalVector cf = closed_form_eigenvector(F, n, bits);
        if (!(cf == rec.v)) return false;
        int k = alpha.weight();
        Rat at_zero(int_pow(Int(F.q()), static_cast<unsigned long>(k * (n - k))));
        Rat at_full = (k % 2 == 0) ? Rat(1) : Rat(-1);
        if (cf.coefficient(Subspace::zero(n)) != Cyclotomic::rational(cf.conductor(), at_zero))
            return false;
        if (cf.coefficient(Subspace::full(n)) != Cyclotomic::rational(cf.conductor(), at_full))
            return false;
    }
    return true;
}

/// dim W(chi) = G_q(n-1) for every nontrivial character: the number of
/// subspaces whose hat has nonzero projection, graded by dimension.
inline bool verify_isotypic_dimension(const Field& F, int n) {
    SubspaceOrder ord = subspace_order(F, n);
    for (const auto& a : nontrivial_character_labels(F, n)) {
        Int total = 0;
        std::map<int, Int> by_dim;
        for (const auto& Y : ord.list) {
            if (!character_projection(F, a, hat(embed(Y, n + 1))).is_zero()) {
                total += 1;
                by_dim[Y.dim()] += 1;
            }
        }
        if (total != galois_number(F.q(), n - 1)) return false;
        for (int k = 1; k <= n; ++k)
            if (by_dim[k - 1] != q_binomial(F.q(), n - 1, k - 1)) return false;
    }
    return true;
}

/// The two one-level recursions of the adjacency operator, on every basis
/// vector: lifting first then applying equals q^n plus the lifted image of
/// q times the lower operator; embedding first equals the embedded image
/// plus the lift.
inline bool verify_adjacency_level_recursions(const Field& F, int n) {
    Rat qn(int_pow(Int(F.q()), static_cast<unsigned long>(n)));
    for (const auto& X : subspace_order(F, n).list) {
        FormalVector v = delta(F, X);
        FormalVector av = apply_adjacency(v);
        FormalVector lhs_lift = apply_adjacency(cover_lift(v));
        FormalVector rhs_lift = embed_vector(v, n + 1).scaled(qn) + cover_lift(av.scaled(Rat(F.q())));
        if (!(lhs_lift == rhs_lift)) return false;
        FormalVector lhs_embed = apply_adjacency(embed_vector(v, n + 1));
        FormalVector rhs_embed = embed_vector(av, n + 1) + cover_lift(v);
        if (!(lhs_embed == rhs_embed)) return false;
    }
    return true;
}

/// Coordinates of a vector of C[B_q(n+1)] in the lifted basis
/// {cover_lift(delta_Y)}; nullopt when the vector is not in its span.
inline std::optional<std::map<Subspace, Cyclotomic>> theta_coordinates(const Field& F,
                                                                       const FormalVector& w) {
    std::map<Subspace, Cyclotomic> coords;
    for (const auto& [Z, c] : w.terms()) {
        if (!Z.outside_hyperplane()) return std::nullopt;
        Subspace Y = restrict_hyperplane(Z);
        auto [it, inserted] = coords.emplace(Y, c);
        if (!inserted && it->second != c) return std::nullopt;
    }
    for (const auto& [Y, c] : coords)
        for (const auto& Z : lifts_above(F, Y))
            if (w.coefficient(Z) != c) return std::nullopt;
    return coords;
}

/// The operator induced on the lifted basis has matrix exactly q times the
/// adjacency matrix one level down.
inline bool verify_lifted_matrix_identity(const Field& F, int n) {
    long q = F.q();
    for (const auto& X : subspace_order(F, n).list) {
        int k = X.dim();
        FormalVector dX = delta(F, X);
        FormalVector tX = cover_lift(dX);
        Rat up_w(int_pow(Int(q), static_cast<unsigned long>(k)));
        Rat back_w(int_pow(Int(q), static_cast<unsigned long>(n - k)));
        FormalVector w = apply_up(tX) +
                         (apply_down(tX) - embed_vector(dX, n + 1).scaled(back_w)).scaled(up_w);
        auto coords = theta_coordinates(F, w);
        if (!coords) return false;
        FormalVector target = apply_adjacency(dX).scaled(Rat(q));
        if (*coords != target.terms()) return false;
    }
    return true;
}

/// Character table orthogonality: sum_u chi_a(u) conj(chi_b(u)) = q^n [a=b].
inline bool verify_character_orthogonality(const Field& F, int n) {
    auto labels = character_labels(F, n);
    auto vectors = all_vectors(F, n);
    int p = static_cast<int>(F.p());
    for (const auto& a : labels)
        for (const auto& b : labels) {
            Cyclotomic acc = Cyclotomic::zero(p);
            for (const auto& u : vectors)
                acc += character_value(F, a, u) * character_value(F, b, u).conj();
            Cyclotomic expect = (a == b)
                                    ? Cyclotomic::rational(p, Rat(int_pow(Int(F.q()),
                                                                          static_cast<unsigned long>(n))))
                                    : Cyclotomic::zero(p);
            if (acc != expect) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// tree checks
// ---------------------------------------------------------------------------

/// Characteristic polynomial of the directed Laplacian equals the closed
/// form built from the shifted spectrum, and the minors sum equals the
/// product of the nonzero eigenvalues.
inline bool verify_laplacian_spectrum(const Field& F, int n, long cap = kDefaultLatticeCap) {
    IntMatrix L = directed_laplacian(F, n, cap);
    Int nq = q_int(F.q(), n);
    std::vector<std::pair<Int, Int>> roots;
    Int nonzero_product = 1;
    for (const auto& s : spectrum(F.q(), n)) {
        Int mu = nq - s.lambda;
        roots.emplace_back(mu, s.mult);
        if (mu != 0)
            for (Int i = 0; i < s.mult; ++i) nonzero_product *= mu;
    }
    if (characteristic_polynomial(L) != poly_from_roots(roots)) return false;
    Int minors = 0;
    for (int r = 0; r < L.size(); ++r) minors += bareiss_determinant(L.minor_at(r));
    return minors == nonzero_product;
}

// ---------------------------------------------------------------------------
// property-style randomized checks
// ---------------------------------------------------------------------------

/// Normal forms are invariant under random basis changes of the same span.
inline bool verify_canonical_stability(const Field& F, int n, int trials, uint64_t seed) {
    SubspaceOrder ord = subspace_order(F, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, ord.list.size() - 1);
    std::uniform_int_distribution<int> coeff(0, static_cast<int>(F.q()) - 1);
    for (int t = 0; t < trials; ++t) {
        const Subspace& X = ord.list[pick(rng)];
        int k = X.dim();
        if (k == 0) continue;
        // random spanning set: random invertible recombination plus one
        // redundant random member of the span
        std::vector<FFVector> gens;
        for (int rep = 0; rep < k + 1; ++rep) {
            FFVector v(static_cast<size_t>(n), 0);
            for (int j = 0; j < k; ++j) {
                int c = coeff(rng);
                if (c == 0) continue;
                for (int i = 0; i < n; ++i)
                    v[static_cast<size_t>(i)] = F.add(v[static_cast<size_t>(i)], F.mul(c, X.entry(i, j)));
            }
            gens.push_back(std::move(v));
        }
        Subspace Y = canonicalize(F, gens, n);
        if (Y.dim() > k) return false;
        if (Y.dim() == k && !(Y == X)) return false;
        if (Y.dim() < k && !contains(F, X, Y)) return false;
    }
    return true;
}

/// Ring axioms for the cyclotomic arithmetic at a given conductor.
inline bool verify_cyclotomic_axioms(int p, int trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> expo(0, p - 1);
    auto random_cyc = [&]() {
        Cyclotomic z = Cyclotomic::zero(p);
        for (int i = 0; i < p - 1; ++i)
            z += make_rat(Int(num(rng)), Int(den(rng))) * Cyclotomic::root(p, expo(rng));
        return z;
    };
    for (int t = 0; t < trials; ++t) {
        Cyclotomic a = random_cyc(), b = random_cyc(), c = random_cyc();
        if ((a * b) * c != a * (b * c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a * b != b * a) return false;
        if (a.conj().conj() != a) return false;
        if (a.abs_sq().conj() != a.abs_sq()) return false;
        if (!a.is_zero() && a * a.inverse() != Cyclotomic::one(p)) return false;
    }
    return true;
}

/// Field axioms, exhaustive over all elements (intended for q <= 9).
inline bool verify_field_axioms(const Field& F) {
    long q = F.q();
    for (int a = 0; a < q; ++a) {
        if (F.add(a, 0) != a || F.mul(a, 1) != a) return false;
        if (F.add(a, F.neg(a)) != 0) return false;
        if (a != 0 && F.mul(a, F.inv(a)) != 1) return false;
        for (int b = 0; b < q; ++b) {
            if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) return false;
            for (int c = 0; c < q; ++c) {
                if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) return false;
                if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) return false;
                if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) return false;
            }
        }
    }
    return true;
}

}  // namespace qcube
