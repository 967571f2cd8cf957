#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsrg/bigint.hpp"

namespace dsrg {

/// Element of Z[x]/(x^m - 1), stored as a dense length-m coefficient vector.
/// All arithmetic reduces exponents modulo m; moduli must match for binary
/// operations. Coefficients are exact big integers and may be negative.
class CyclicPoly {
public:
    explicit CyclicPoly(int modulus)
        : modulus_(check_modulus(modulus)), coeffs_(static_cast<size_t>(modulus)) {}

    CyclicPoly(int modulus, std::vector<BigInt> coeffs)
        : modulus_(check_modulus(modulus)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<size_t>(modulus_))
            throw std::invalid_argument("CyclicPoly: coefficient count does not match modulus");
    }

    static CyclicPoly monomial(int modulus, long long exponent, BigInt coeff = BigInt(1)) {
        CyclicPoly p(modulus);
        if (exponent < 0) throw std::invalid_argument("CyclicPoly: negative exponent");
        p.coeffs_[static_cast<size_t>(exponent % modulus)] = std::move(coeff);
        return p;
    }

    static CyclicPoly constant(int modulus, BigInt c) {
        return monomial(modulus, 0, std::move(c));
    }

    int modulus() const { return modulus_; }

    const BigInt& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    BigInt& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool operator==(const CyclicPoly&) const = default;

    CyclicPoly& operator+=(const CyclicPoly& rhs) {
        require_same_modulus(rhs);
        for (int i = 0; i < modulus_; ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    CyclicPoly& operator-=(const CyclicPoly& rhs) {
        require_same_modulus(rhs);
        for (int i = 0; i < modulus_; ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { a += b; return a; }
    friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { a -= b; return a; }

    /// Cyclic convolution: result[k] = sum over i+j == k (mod m) of a[i]*b[j].
    friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
        a.require_same_modulus(b);
        const int m = a.modulus_;
        CyclicPoly out(m);
        for (int i = 0; i < m; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                int k = i + j;
                if (k >= m) k -= m;
                out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend CyclicPoly operator*(CyclicPoly a, const BigInt& scalar) {
        for (auto& c : a.coeffs_) c *= scalar;
        return a;
    }

    friend CyclicPoly operator*(const BigInt& scalar, CyclicPoly a) {
        return std::move(a) * scalar;
    }

    /// Multiplication by x^s, i.e. cyclic rotation of the coefficients.
    CyclicPoly rotated(long long s) const {
        if (s < 0) throw std::invalid_argument("CyclicPoly: rotation amount must be nonnegative");
        const int shift = static_cast<int>(s % modulus_);
        CyclicPoly out(modulus_);
        for (int i = 0; i < modulus_; ++i) {
            int k = i + shift;
            if (k >= modulus_) k -= modulus_;
            out.coeffs_[k] = coeffs_[i];
        }
        return out;
    }

    /// Evaluation at x = 1 (the sum of all coefficients).
    BigInt coeff_sum() const {
        BigInt s;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    bool is_binary() const {
        static const BigInt one(1);
        for (const auto& c : coeffs_)
            if (!c.is_zero() && c != one) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    const BigInt& constant_term() const { return coeffs_[0]; }

    /// Exact textual form "m:c0,c1,...,c{m-1}".
    std::string to_string() const {
        std::string out = std::to_string(modulus_) + ":";
        for (int i = 0; i < modulus_; ++i) {
            if (i) out += ',';
            out += coeffs_[i].to_string();
        }
        return out;
    }

    static CyclicPoly parse(std::string_view text) {
        size_t colon = text.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("CyclicPoly: missing ':' in '" + std::string(text) + "'");
        int m = parse_int(text.substr(0, colon));
        CyclicPoly p(m);
        parse_coeff_list(text.substr(colon + 1), p);
        return p;
    }

    /// Parses just the comma-separated coefficient list against a known modulus.
    static CyclicPoly parse_coeffs(std::string_view text, int modulus) {
        CyclicPoly p(modulus);
        parse_coeff_list(text, p);
        return p;
    }

    /// Human-readable polynomial, e.g. "1+2x+x^3"; "0" for the zero polynomial.
    std::string pretty() const {
        std::string out;
        for (int e = 0; e < modulus_; ++e) {
            const BigInt& c = coeffs_[e];
            if (c.is_zero()) continue;
            std::string term;
            bool neg = c.signum() < 0;
            BigInt mag = neg ? -c : c;
            if (e == 0) {
                term = mag.to_string();
            } else {
                if (mag != BigInt(1)) term = mag.to_string();
                term += "x";
                if (e > 1) term += "^" + std::to_string(e);
            }
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? "-" : "+") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    int modulus_;
    std::vector<BigInt> coeffs_;

    static int check_modulus(int m) {
        if (m < 1) throw std::invalid_argument("CyclicPoly: modulus must be >= 1");
        return m;
    }

    void require_same_modulus(const CyclicPoly& rhs) const {
        if (modulus_ != rhs.modulus_)
            throw std::invalid_argument("CyclicPoly: modulus mismatch (" +
                                        std::to_string(modulus_) + " vs " +
                                        std::to_string(rhs.modulus_) + ")");
    }

    static int parse_int(std::string_view s) {
        BigInt v = BigInt::from_string(s);
        if (!v.fits_int64()) throw std::invalid_argument("CyclicPoly: modulus out of range");
        long long n = v.to_int64();
        if (n < 1 || n > 1'000'000) throw std::invalid_argument("CyclicPoly: modulus out of range");
        return static_cast<int>(n);
    }

    static void parse_coeff_list(std::string_view list, CyclicPoly& p) {
        int idx = 0;
        size_t pos = 0;
        while (true) {
            size_t comma = list.find(',', pos);
            std::string_view tok = comma == std::string_view::npos
                ? list.substr(pos)
                : list.substr(pos, comma - pos);
            if (idx >= p.modulus_)
                throw std::invalid_argument("CyclicPoly: too many coefficients");
            p.coeffs_[idx++] = BigInt::from_string(tok);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (idx != p.modulus_)
            throw std::invalid_argument("CyclicPoly: expected " + std::to_string(p.modulus_) +
                                        " coefficients, got " + std::to_string(idx));
    }
};

// The four template polynomials behind the block construction, all over
// Z[x]/(x^(2n+3) - 1):
//   p = 1 + x + ... + x^n
//   q = 1 + x + ... + x^(2n+2)              (every exponent; the all-ones block)
//   r = q - x^(n-1) - x^(2n+1)
//   s = q - 1 - x^2 - x^(n+2) - x^(n+3)
// r and s need n >= 2 so that the removed exponents are distinct and the
// results stay binary.

inline CyclicPoly make_p(int n) {
    if (n < 1) throw std::invalid_argument("make_p: requires n >= 1");
    CyclicPoly p(2 * n + 3);
    for (int e = 0; e <= n; ++e) p[e] = BigInt(1);
    return p;
}

inline CyclicPoly make_q(int n) {
    if (n < 1) throw std::invalid_argument("make_q: requires n >= 1");
    const int m = 2 * n + 3;
    CyclicPoly q(m);
    for (int e = 0; e < m; ++e) q[e] = BigInt(1);
    return q;
}

inline CyclicPoly make_r(int n) {
    if (n < 2) throw std::invalid_argument("make_r: requires n >= 2");
    CyclicPoly r = make_q(n);
    r[n - 1] = BigInt(0);
    r[2 * n + 1] = BigInt(0);
    return r;
}

inline CyclicPoly make_s(int n) {
    if (n < 2) throw std::invalid_argument("make_s: requires n >= 2");
    CyclicPoly s = make_q(n);
    s[0] = BigInt(0);
    s[2] = BigInt(0);
    s[n + 2] = BigInt(0);
    s[n + 3] = BigInt(0);
    return s;
}

} // namespace dsrg
