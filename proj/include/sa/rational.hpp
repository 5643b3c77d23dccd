#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sa {

// Arbitrary-precision signed integer, base 2^32 little-endian limbs.
// Magnitudes in this library stay tiny; simplicity beats speed here.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; v = -v; }
        else if (v > 0) { sign_ = 1; }
        while (v) { limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu)); v >>= 32; }
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        auto mag = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? mag : (0 <=> mag);
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag_i(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) { r.limbs_ = sub_mag(a.limbs_, b.limbs_); r.sign_ = a.sign_; }
            else       { r.limbs_ = sub_mag(b.limbs_, a.limbs_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated quotient (towards zero) and matching remainder.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        int bits = static_cast<int>(a.limbs_.size()) * 32;
        for (int i = bits - 1; i >= 0; --i) {
            r.shift_left_1();
            if (a.bit(i)) r.set_bit0();
            if (cmp_mag_i(r.limbs_, b.limbs_) >= 0) {
                r.limbs_ = sub_mag(r.limbs_, b.limbs_);
                r.trim();
                q.set_bit(i);
            }
        }
        q.trim();
        r.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        unsigned long long v = to_u64();
        return v <= 0x7fffffffffffffffull;
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        return sign_ * static_cast<long long>(to_u64());
    }
    double to_double() const {
        double v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return sign_ * v;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            // divide magnitude by 10^9
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string part = std::to_string(rem);
            if (!tmp.empty()) part = std::string(9 - part.size(), '0') + part;
            digits = part + digits;
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }
    bool bit(int i) const {
        size_t limb = static_cast<size_t>(i) / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }
    void set_bit(int i) {
        size_t limb = static_cast<size_t>(i) / 32;
        if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
        limbs_[limb] |= (1u << (i % 32));
        sign_ = 1;
    }
    void set_bit0() {
        if (limbs_.empty()) limbs_.push_back(0);
        limbs_[0] |= 1u;
        sign_ = 1;
    }
    void shift_left_1() {
        uint32_t carry = 0;
        for (auto& l : limbs_) {
            uint32_t nc = l >> 31;
            l = (l << 1) | carry;
            carry = nc;
        }
        if (carry) limbs_.push_back(carry);
    }
    unsigned long long to_u64() const {
        unsigned long long v = 0;
        if (limbs_.size() > 1) v = static_cast<unsigned long long>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }
    static std::strong_ordering cmp_mag(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
        int c = cmp_mag_i(a, b);
        return c <=> 0;
    }
    static int cmp_mag_i(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0u);
            if (cur < 0) { cur += (1ll << 32); borrow = 1; }
            else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational with reduced representation, positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    long long to_int64() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
        return num_.to_int64();
    }
    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string str() const {
        if (is_integer()) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

}  // namespace sa
