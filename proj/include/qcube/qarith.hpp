#pragma once

/// \file qarith.hpp
/// Exact q-integer combinatorics: q-analogs of integers and binomial
/// coefficients, Galois numbers, q-Pochhammer symbols and the level weights
/// pi used by the subspace-lattice inner product.

#include <qcube/integers.hpp>

#include <vector>

namespace qcube {

/// Parameters of a prime power q = p^m. Construction rejects anything that
/// is not a prime power >= 2 (in particular q = 1; the tree-count formula is
/// the only place q = 1 is meaningful and it takes a plain integer).
struct QParams {
    long q = 0;
    long p = 0;
    int m = 0;

    static constexpr long kMaxQ = 1L << 16;

    static QParams parse(long q) {
        if (q < 2) throw std::invalid_argument("QParams: q must be >= 2");
        if (q > kMaxQ) throw std::invalid_argument("QParams: q too large (max 2^16)");
        long p = smallest_prime_factor(q);
        long rest = q;
        int m = 0;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest != 1) throw std::invalid_argument("QParams: q is not a prime power");
        return QParams{q, p, m};
    }

    static bool is_prime_power(long q) {
        if (q < 2 || q > kMaxQ) return false;
        long p = smallest_prime_factor(q);
        long rest = q;
        while (rest % p == 0) rest /= p;
        return rest == 1;
    }

  private:
    static long smallest_prime_factor(long v) {
        for (long d = 2; d * d <= v; ++d)
            if (v % d == 0) return d;
        return v;
    }
};

/// (n)_q = 1 + q + ... + q^{n-1}; zero for n = 0.
inline Int q_int(long q, long n) {
    if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
    Int sum = 0;
    Int pw = 1;
    for (long i = 0; i < n; ++i) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

/// Gaussian binomial coefficient. Zero when n < 0, k < 0 or k > n.
/// Computed by the Pascal-type recurrence so q = 1 degenerates to the
/// ordinary binomial coefficient.
inline Int q_binomial(long q, long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    // row DP: row(i)[j] = [i choose j]_q, using
    // [i choose j]_q = [i-1 choose j-1]_q + q^j [i-1 choose j]_q
    std::vector<Int> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (long i = 1; i <= n; ++i) {
        long jmax = std::min<long>(i, k);
        for (long j = jmax; j >= 1; --j) {
            Int qj = int_pow(Int(q), static_cast<unsigned long>(j));
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + qj * row[static_cast<size_t>(j)];
        }
    }
    return row[static_cast<size_t>(k)];
}

/// Total number of subspaces of F_q^n.
inline Int galois_number(long q, long n) {
    if (n < 0) throw std::invalid_argument("galois_number: n must be >= 0");
    Int total = 0;
    for (long k = 0; k <= n; ++k) total += q_binomial(q, n, k);
    return total;
}

/// (a; q)_j = prod_{i=0}^{j-1} (1 - a q^i); empty product is 1.
inline Rat q_pochhammer(const Rat& a, const Rat& q, long j) {
    if (j < 0) throw std::invalid_argument("q_pochhammer: j must be >= 0");
    Rat prod = 1;
    Rat aq = a;
    for (long i = 0; i < j; ++i) {
        prod *= (Rat(1) - aq);
        aq *= q;
    }
    return prod;
}

/// P_q(n) = prod_{i=0}^{n-1} (1 + q^i), the normalizing constant of pi.
inline Int p_factor(long q, long n) {
    Int prod = 1;
    Int pw = 1;
    for (long i = 0; i < n; ++i) {
        prod *= (pw + 1);
        pw *= q;
    }
    return prod;
}

/// Weight of a k-dimensional subspace of F_q^n under the stationary
/// distribution: q^{k(k-1)/2} / P_q(n). Sums to 1 against the level counts.
inline Rat pi_weight(long q, long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("pi_weight: need 0 <= k <= n");
    Int e = choose2(k);
    Int num = int_pow(Int(q), e.get_ui());
    return make_rat(num, p_factor(q, n));
}

}  // namespace qcube
