#pragma once

/// \file finite_field.hpp
/// Arithmetic in F_q = F_{p^m}. Elements are reduced polynomial residues
/// encoded as integers in [0, q) via base-p digits (constant coefficient is
/// the least significant digit). Small fields cache full operation tables.

#include <qcube/qarith.hpp>

#include <map>
#include <vector>

namespace qcube {

/// A vector over F_q, entries as element codes.
using FFVector = std::vector<int>;

class Field {
  public:
    /// Build F_q with the built-in modulus (q in {4,8,9,16,25,27} or q prime).
    explicit Field(long q) : Field(QParams::parse(q), default_modulus(QParams::parse(q))) {}

    /// Build F_q with an explicit monic irreducible modulus, constant term
    /// first, e.g. x^2+x+1 over F_2 is {1,1,1}.
    Field(long q, const std::vector<int>& modulus) : Field(QParams::parse(q), modulus) {}

    long q() const { return params_.q; }
    long p() const { return params_.p; }
    int m() const { return params_.m; }
    const QParams& params() const { return params_; }
    const std::vector<int>& modulus() const { return mod_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const {
        check(a); check(b);
        if (tables_) return add_tab_[idx(a, b)];
        return add_raw(a, b);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int neg(int a) const {
        check(a);
        if (tables_) return neg_tab_[static_cast<size_t>(a)];
        return neg_raw(a);
    }

    int mul(int a, int b) const {
        check(a); check(b);
        if (tables_) return mul_tab_[idx(a, b)];
        return mul_raw(a, b);
    }

    int inv(int a) const {
        check(a);
        if (a == 0) throw std::invalid_argument("Field: inversion of zero");
        if (tables_) return inv_tab_[static_cast<size_t>(a)];
        return inv_raw(a);
    }

    int pow(int a, long e) const {
        if (e < 0) return pow(inv(a), -e);
        int r = 1;
        int base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Absolute trace down to F_p: Tr(a) = a + a^p + ... + a^{p^{m-1}},
    /// returned as an integer in [0, p).
    int trace(int a) const {
        check(a);
        if (tables_) return trace_tab_[static_cast<size_t>(a)];
        return trace_raw(a);
    }

    /// Coefficient vector (length m, constant first) of an element code.
    std::vector<int> decode(int a) const {
        check(a);
        std::vector<int> c(static_cast<size_t>(params_.m), 0);
        for (int i = 0; i < params_.m; ++i) {
            c[static_cast<size_t>(i)] = a % static_cast<int>(params_.p);
            a /= static_cast<int>(params_.p);
        }
        return c;
    }

    int encode(const std::vector<int>& coeffs) const {
        if (coeffs.size() != static_cast<size_t>(params_.m))
            throw std::invalid_argument("Field: coefficient list has wrong length");
        int a = 0;
        for (int i = params_.m - 1; i >= 0; --i) {
            int ci = coeffs[static_cast<size_t>(i)];
            if (ci < 0 || ci >= params_.p) throw std::invalid_argument("Field: coefficient out of range");
            a = a * static_cast<int>(params_.p) + ci;
        }
        return a;
    }

    int dot(const FFVector& a, const FFVector& b) const {
        if (a.size() != b.size()) throw std::invalid_argument("Field::dot: length mismatch");
        int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
        return s;
    }

    /// Tr(a . b), the F_p-valued pairing that indexes additive characters.
    int trace_dot(const FFVector& a, const FFVector& b) const { return trace(dot(a, b)); }

    static std::vector<int> default_modulus(const QParams& pr) {
        if (pr.m == 1) return {0, 1};  // plain F_p, modulus is x
        static const std::map<long, std::vector<int>> table = {
            {4, {1, 1, 1}},      // x^2+x+1 over F_2
            {8, {1, 1, 0, 1}},   // x^3+x+1 over F_2
            {9, {1, 0, 1}},      // x^2+1 over F_3
            {16, {1, 1, 0, 0, 1}},  // x^4+x+1 over F_2
            {25, {1, 1, 1}},     // x^2+x+1 over F_5
            {27, {1, 2, 0, 1}},  // x^3+2x+1 over F_3
        };
        auto it = table.find(pr.q);
        if (it == table.end())
            throw std::invalid_argument(
                "Field: no built-in modulus for q=" + std::to_string(pr.q) +
                "; supply field.modulus explicitly");
        return it->second;
    }

  private:
    Field(QParams pr, const std::vector<int>& modulus) : params_(pr), mod_(modulus) {
        validate_modulus();
        if (params_.q <= 256) build_tables();
    }

    void check(int a) const {
        if (a < 0 || a >= params_.q) throw std::invalid_argument("Field: element code out of range");
    }

    size_t idx(int a, int b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(params_.q) + static_cast<size_t>(b);
    }

    // -------- raw polynomial-residue arithmetic --------

    int add_raw(int a, int b) const {
        long p = params_.p;
        int r = 0, mul = 1;
        for (int i = 0; i < params_.m; ++i) {
            int da = a % static_cast<int>(p), db = b % static_cast<int>(p);
            r += ((da + db) % static_cast<int>(p)) * mul;
            a /= static_cast<int>(p);
            b /= static_cast<int>(p);
            mul *= static_cast<int>(p);
        }
        return r;
    }

    int neg_raw(int a) const {
        long p = params_.p;
        int r = 0, mul = 1;
        for (int i = 0; i < params_.m; ++i) {
            int da = a % static_cast<int>(p);
            r += ((p - da) % p) * mul;
            a /= static_cast<int>(p);
            mul *= static_cast<int>(p);
        }
        return r;
    }

    int mul_raw(int a, int b) const {
        if (params_.m == 1) return static_cast<int>((static_cast<long>(a) * b) % params_.p);
        std::vector<int> pa = decode(a), pb = decode(b);
        std::vector<int> prod = poly_mul_mod_p(pa, pb, params_.p);
        poly_reduce(prod);
        return encode_full(prod);
    }

    int inv_raw(int a) const {
        // q is small at desk scale: a^(q-2) by square-and-multiply
        int r = 1, base = a;
        long e = params_.q - 2;
        while (e > 0) {
            if (e & 1) r = mul_raw(r, base);
            base = mul_raw(base, base);
            e >>= 1;
        }
        return r;
    }

    int trace_raw(int a) const {
        int acc = 0;
        int frob = a;
        for (int i = 0; i < params_.m; ++i) {
            acc = add_raw(acc, frob);
            int next = 1;
            for (long j = 0; j < params_.p; ++j) next = (j == 0) ? frob : mul_raw(next, frob);
            frob = next;
        }
        // trace lands in the prime field
        if (acc >= params_.p) throw std::logic_error("Field: trace left the prime field");
        return acc;
    }

    // residue polynomial (any degree) -> code, assuming degree < m
    int encode_full(const std::vector<int>& c) const {
        int a = 0;
        for (int i = params_.m - 1; i >= 0; --i) {
            int ci = (static_cast<size_t>(i) < c.size()) ? c[static_cast<size_t>(i)] : 0;
            a = a * static_cast<int>(params_.p) + ci;
        }
        return a;
    }

    void poly_reduce(std::vector<int>& c) const {
        long p = params_.p;
        int m = params_.m;
        for (int d = static_cast<int>(c.size()) - 1; d >= m; --d) {
            int lead = c[static_cast<size_t>(d)];
            if (lead == 0) continue;
            // x^d = x^{d-m} * (x^m) and x^m = -(lower part of modulus)
            for (int i = 0; i < m; ++i) {
                long v = c[static_cast<size_t>(d - m + i)] -
                         static_cast<long>(lead) * mod_[static_cast<size_t>(i)];
                c[static_cast<size_t>(d - m + i)] = static_cast<int>(((v % p) + p) % p);
            }
            c[static_cast<size_t>(d)] = 0;
        }
        c.resize(static_cast<size_t>(m));
    }

    static std::vector<int> poly_mul_mod_p(const std::vector<int>& a, const std::vector<int>& b, long p) {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<int>((c[i + j] + static_cast<long>(a[i]) * b[j]) % p);
        }
        return c;
    }

    void validate_modulus() const {
        long p = params_.p;
        int m = params_.m;
        if (m == 1) return;
        if (mod_.size() != static_cast<size_t>(m) + 1)
            throw std::invalid_argument("Field: modulus must have degree m");
        if (mod_.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
        for (int c : mod_)
            if (c < 0 || c >= p) throw std::invalid_argument("Field: modulus coefficient out of range");
        // irreducibility by trial division over F_p up to degree m/2
        for (int d = 1; 2 * d <= m; ++d) {
            long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long code = 0; code < count; ++code) {
                std::vector<int> div(static_cast<size_t>(d) + 1, 0);
                long v = code;
                for (int i = 0; i < d; ++i) {
                    div[static_cast<size_t>(i)] = static_cast<int>(v % p);
                    v /= p;
                }
                div[static_cast<size_t>(d)] = 1;
                if (poly_divides(div, mod_, p))
                    throw std::invalid_argument("Field: modulus is reducible over F_p");
            }
        }
    }

    static bool poly_divides(const std::vector<int>& d, std::vector<int> n, long p) {
        int dd = static_cast<int>(d.size()) - 1;
        for (int k = static_cast<int>(n.size()) - 1; k >= dd; --k) {
            int lead = n[static_cast<size_t>(k)];
            if (lead == 0) continue;
            for (int i = 0; i <= dd; ++i) {
                long v = n[static_cast<size_t>(k - dd + i)] - static_cast<long>(lead) * d[static_cast<size_t>(i)];
                n[static_cast<size_t>(k - dd + i)] = static_cast<int>(((v % p) + p) % p);
            }
        }
        for (int c : n)
            if (c != 0) return false;
        return true;
    }

    void build_tables() {
        size_t q = static_cast<size_t>(params_.q);
        add_tab_.resize(q * q);
        mul_tab_.resize(q * q);
        neg_tab_.resize(q);
        inv_tab_.assign(q, 0);
        trace_tab_.resize(q);
        for (size_t a = 0; a < q; ++a) {
            neg_tab_[a] = neg_raw(static_cast<int>(a));
            trace_tab_[a] = trace_raw(static_cast<int>(a));
            for (size_t b = 0; b < q; ++b) {
                add_tab_[a * q + b] = add_raw(static_cast<int>(a), static_cast<int>(b));
                mul_tab_[a * q + b] = mul_raw(static_cast<int>(a), static_cast<int>(b));
            }
        }
        for (size_t a = 1; a < q; ++a) inv_tab_[a] = inv_raw(static_cast<int>(a));
        tables_ = true;
    }

    QParams params_;
    std::vector<int> mod_;
    bool tables_ = false;
    std::vector<int> add_tab_, mul_tab_, neg_tab_, inv_tab_, trace_tab_;
};

}  // namespace qcube
