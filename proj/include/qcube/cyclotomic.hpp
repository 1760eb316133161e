#pragma once

/// \file cyclotomic.hpp
/// Exact arithmetic in Q(zeta_p) for prime p, represented on the canonical
/// basis {1, zeta, ..., zeta^{p-2}} with reduction by the minimal polynomial
/// 1 + x + ... + x^{p-1}. Equality is coefficient comparison; there is no
/// epsilon anywhere. p = 2 degenerates to plain rationals.

#include <qcube/integers.hpp>

#include <vector>

namespace qcube {

class Cyclotomic {
  public:
    Cyclotomic() : p_(2), c_(1, Rat(0)) {}

    /// The rational r embedded in Q(zeta_p).
    static Cyclotomic rational(int p, const Rat& r) {
        Cyclotomic z(p);
        z.c_[0] = r;
        return z;
    }

    /// zeta_p^e in canonical form (e taken mod p; exponent p-1 rewrites to
    /// -(1 + zeta + ... + zeta^{p-2})).
    static Cyclotomic root(int p, long e) {
        check_prime(p);
        Cyclotomic z(p);
        long r = e % p;
        if (r < 0) r += p;
        if (r <= p - 2) {
            z.c_[static_cast<size_t>(r)] = 1;
        } else {
            for (auto& ci : z.c_) ci = -1;
        }
        return z;
    }

    static Cyclotomic zero(int p) { check_prime(p); return Cyclotomic(p); }
    static Cyclotomic one(int p) { return rational(p, Rat(1)); }

    int p() const { return p_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& ci : c_)
            if (ci != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /// The value as a rational; only valid when is_rational().
    Rat rational_value() const {
        if (!is_rational()) throw std::invalid_argument("Cyclotomic: value is not rational");
        return c_[0];
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic r(a.p_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic r(a.p_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic r(a.p_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        size_t d = a.c_.size();
        // convolve, exponents up to 2p-4, then fold by zeta^p = 1 and the
        // minimal-polynomial relation for exponent p-1
        std::vector<Rat> conv(2 * d - 1, Rat(0));
        for (size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Cyclotomic r(a.p_);
        size_t p = static_cast<size_t>(a.p_);
        for (size_t e = 0; e < conv.size(); ++e) {
            if (conv[e] == 0) continue;
            size_t em = e % p;
            if (em <= p - 2) {
                r.c_[em] += conv[e];
            } else {
                for (size_t i = 0; i <= p - 2; ++i) r.c_[i] -= conv[e];
            }
        }
        return r;
    }

    friend Cyclotomic operator*(const Rat& s, const Cyclotomic& a) {
        Cyclotomic r(a.p_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& b) { *this = *this + b; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& b) { *this = *this - b; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& b) { *this = *this * b; return *this; }

    bool operator==(const Cyclotomic& b) const { return p_ == b.p_ && c_ == b.c_; }
    bool operator!=(const Cyclotomic& b) const { return !(*this == b); }

    /// Complex conjugation zeta -> zeta^{-1}; an involutive field automorphism.
    Cyclotomic conj() const { return galois(p_ - 1); }

    /// The Galois automorphism zeta -> zeta^t, gcd(t, p) = 1.
    Cyclotomic galois(long t) const {
        Cyclotomic r(p_);
        long tm = t % p_;
        if (tm < 0) tm += p_;
        if (tm == 0) throw std::invalid_argument("Cyclotomic::galois: exponent divisible by p");
        size_t p = static_cast<size_t>(p_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            size_t e = (i * static_cast<size_t>(tm)) % p;
            if (e <= p - 2) {
                r.c_[e] += c_[i];
            } else {
                for (size_t j = 0; j <= p - 2; ++j) r.c_[j] -= c_[i];
            }
        }
        return r;
    }

    /// |a|^2 = a * conj(a); fixed by conjugation.
    Cyclotomic abs_sq() const { return *this * conj(); }

    /// Multiplicative inverse via the field norm (product of all conjugates).
    Cyclotomic inverse() const {
        if (is_zero()) throw std::invalid_argument("Cyclotomic: inverse of zero");
        if (p_ == 2) {
            Cyclotomic r(2);
            r.c_[0] = Rat(1) / c_[0];
            return r;
        }
        Cyclotomic cof = one(p_);  // product of the nontrivial conjugates
        for (long t = 2; t <= p_ - 1; ++t) cof *= galois(t);
        Cyclotomic norm = *this * cof;
        if (!norm.is_rational())
            throw std::logic_error("Cyclotomic: norm must be rational");
        return (Rat(1) / norm.rational_value()) * cof;
    }

  private:
    explicit Cyclotomic(int p) : p_(p), c_(static_cast<size_t>(p - 1), Rat(0)) {
        check_prime(p);
    }

    static void check_prime(int p) {
        if (p < 2) throw std::invalid_argument("Cyclotomic: p must be prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("Cyclotomic: p must be prime");
    }

    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("Cyclotomic: mismatched p");
    }

    int p_;
    std::vector<Rat> c_;
};

}  // namespace qcube
