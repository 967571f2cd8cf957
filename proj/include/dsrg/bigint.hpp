#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsrg {

/// Arbitrary-precision signed integer: sign plus base-2^32 magnitude.
/// Only what the project needs is implemented (add, subtract, multiply,
/// comparison, decimal conversion); there is no division beyond the
/// small-divisor helper used for printing.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long value) {
        if (value == 0) return;
        sign_ = value < 0 ? -1 : 1;
        unsigned long long mag = value < 0
            ? ~static_cast<unsigned long long>(value) + 1ULL
            : static_cast<unsigned long long>(value);
        while (mag != 0) {
            mag_.push_back(static_cast<uint32_t>(mag));
            mag >>= 32;
        }
    }

    static BigInt from_string(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("BigInt: empty string");
        bool negative = false;
        size_t pos = 0;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            pos = 1;
        }
        if (pos == text.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt out;
        while (pos < text.size()) {
            size_t take = std::min<size_t>(9, text.size() - pos);
            uint32_t chunk = 0;
            uint32_t scale = 1;
            for (size_t i = 0; i < take; ++i) {
                char c = text[pos + i];
                if (c < '0' || c > '9')
                    throw std::invalid_argument("BigInt: invalid digit in '" + std::string(text) + "'");
                chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
                scale *= 10;
            }
            out.mul_small(scale);
            out.add_small(chunk);
            pos += take;
        }
        if (!out.mag_.empty()) out.sign_ = negative ? -1 : 1;
        return out;
    }

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = mag_u64();
        return sign_ >= 0 ? m <= 0x7fffffffffffffffULL : m <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
        unsigned long long m = mag_u64();
        if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
        return static_cast<long long>(m);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            uint32_t rem = divmod_small(work, 1000000000u);
            if (work.empty()) {
                digits = std::to_string(rem) + digits;
            } else {
                std::string part = std::to_string(rem);
                digits = std::string(9 - part.size(), '0') + part + digits;
            }
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

    bool operator==(const BigInt&) const = default;

    std::strong_ordering operator<=>(const BigInt& rhs) const {
        if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
        int c = cmp_mag(mag_, rhs.mag_);
        if (sign_ < 0) c = -c;
        return c <=> 0;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& rhs) {
        if (rhs.sign_ == 0) return *this;
        if (sign_ == 0) return *this = rhs;
        if (sign_ == rhs.sign_) {
            add_mag_into(mag_, rhs.mag_);
            return *this;
        }
        int c = cmp_mag(mag_, rhs.mag_);
        if (c == 0) {
            sign_ = 0;
            mag_.clear();
        } else if (c > 0) {
            sub_mag_into(mag_, rhs.mag_);
        } else {
            std::vector<uint32_t> tmp = rhs.mag_;
            sub_mag_into(tmp, mag_);
            mag_ = std::move(tmp);
            sign_ = rhs.sign_;
        }
        return *this;
    }

    BigInt& operator-=(const BigInt& rhs) { return *this += -rhs; }

    BigInt& operator*=(const BigInt& rhs) {
        if (sign_ == 0 || rhs.sign_ == 0) {
            sign_ = 0;
            mag_.clear();
            return *this;
        }
        mag_ = mul_mag(mag_, rhs.mag_);
        sign_ = sign_ == rhs.sign_ ? 1 : -1;
        return *this;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

private:
    int sign_ = 0;                 // -1, 0, +1; zero iff mag_ empty
    std::vector<uint32_t> mag_;    // little-endian, no trailing zero limbs

    unsigned long long mag_u64() const {
        unsigned long long m = 0;
        if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void add_mag_into(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0u);
            a[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<uint32_t>(carry));
    }

    // requires |a| >= |b|
    static void sub_mag_into(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (cur < 0) {
                cur += int64_t{1} << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            a[i] = static_cast<uint32_t>(cur);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> out(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = out[i + j] + carry + static_cast<uint64_t>(a[i]) * b[j];
                out[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = out[k] + carry;
                out[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    static uint32_t divmod_small(std::vector<uint32_t>& a, uint32_t d) {
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            a[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        return static_cast<uint32_t>(rem);
    }

    void mul_small(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            mag_.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    }

    void add_small(uint32_t v) {
        if (v == 0) return;
        uint64_t carry = v;
        for (size_t i = 0; i < mag_.size() && carry; ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
}

} // namespace dsrg
