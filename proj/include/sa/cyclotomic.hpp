#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "sa/rational.hpp"

namespace sa {

namespace detail {

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
// Computed by dividing x^n - 1 by all lower cyclotomic polynomials.
inline const std::vector<BigInt>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // exact polynomial division P /= D (D monic), remainder asserted zero
    auto divide_out = [](std::vector<BigInt>& p, const std::vector<BigInt>& d) {
        std::vector<BigInt> q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, BigInt(0));
        for (size_t i = p.size(); i-- >= d.size() && i + 1 >= d.size();) {
            if (i + 1 < d.size()) break;
            BigInt c = p[i];
            if (!c.is_zero()) {
                size_t off = i - (d.size() - 1);
                q[off] = c;
                for (size_t j = 0; j < d.size(); ++j)
                    p[off + j] = p[off + j] - c * d[j];
            }
            if (i == 0) break;
        }
        for (const auto& coef : p)
            if (!coef.is_zero()) throw std::logic_error("cyclotomic division not exact");
        p = std::move(q);
    };

    std::vector<BigInt> p(n + 1, BigInt(0));
    p[0] = BigInt(-1);
    p[n] = BigInt(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // recursion is shallow; temporarily release not needed since map is stable
        auto sub = cache.find(d);
        std::vector<BigInt> phi_d;
        if (sub != cache.end()) {
            phi_d = sub->second;
        } else {
            // compute phi_d inline with the same method (no recursion through the lock)
            std::vector<BigInt> pd(d + 1, BigInt(0));
            pd[0] = BigInt(-1);
            pd[d] = BigInt(1);
            for (int e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                divide_out(pd, cache.at(e));
            }
            cache[d] = pd;
            phi_d = std::move(pd);
        }
        divide_out(p, phi_d);
    }
    auto [ins, ok] = cache.emplace(n, std::move(p));
    (void)ok;
    return ins->second;
}

inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace detail

// Exact element of the cyclotomic field Q(zeta_n): value = sum coeffs[j] * zeta_n^j,
// kept reduced modulo the n-th cyclotomic polynomial so equality is coefficientwise.
class CycNum {
public:
    CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}

    static CycNum from_rational(const Rational& r) {
        CycNum c;
        c.coeffs_[0] = r;
        return c;
    }
    static CycNum from_int(long long v) { return from_rational(Rational(v)); }

    // zeta_n^k
    static CycNum root_of_unity(int n, long long k) {
        if (n <= 0) throw std::invalid_argument("root_of_unity: n must be positive");
        CycNum c;
        c.conductor_ = n;
        c.coeffs_.assign(n, Rational(0));
        long long e = ((k % n) + n) % n;
        c.coeffs_[static_cast<size_t>(e)] = Rational(1);
        c.reduce();
        return c;
    }

    // raw cyclic coefficients (mod x^n - 1); reduced on construction
    static CycNum from_cyclic_coeffs(int n, std::vector<Rational> coeffs) {
        if (static_cast<int>(coeffs.size()) != n)
            throw std::invalid_argument("from_cyclic_coeffs: length mismatch");
        CycNum c;
        c.conductor_ = n;
        c.coeffs_ = std::move(coeffs);
        c.reduce();
        return c;
    }

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        auto [x, y] = unify(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;  // sum of reduced forms is reduced
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (Rational(-1) * b); }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        auto [x, y] = unify(a, b);
        int n = x.conductor_;
        std::vector<Rational> out(n, Rational(0));
        for (int i = 0; i < n; ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y.coeffs_[j].is_zero()) continue;
                out[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        CycNum r;
        r.conductor_ = n;
        r.coeffs_ = std::move(out);
        r.reduce();
        return r;
    }
    friend CycNum operator*(const Rational& s, const CycNum& a) {
        CycNum r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        auto [x, y] = unify(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    // Galois action zeta_n -> zeta_n^k, gcd(k, n) = 1.
    CycNum galois(long long k) const {
        long long kk = ((k % conductor_) + conductor_) % conductor_;
        if (std::gcd(kk, static_cast<long long>(conductor_)) != 1)
            throw std::invalid_argument("galois: exponent not a unit modulo conductor");
        std::vector<Rational> out(conductor_, Rational(0));
        for (int j = 0; j < conductor_; ++j) {
            if (coeffs_[j].is_zero()) continue;
            out[static_cast<size_t>((j * kk) % conductor_)] += coeffs_[j];
        }
        CycNum r;
        r.conductor_ = conductor_;
        r.coeffs_ = std::move(out);
        r.reduce();
        return r;
    }

    CycNum conj() const { return galois(conductor_ - 1); }

    std::optional<Rational> rational_part() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return std::nullopt;
        return coeffs_[0];
    }

    // Rational value demanded; throws if the number is irrational.
    Rational expect_rational(const char* context) const {
        auto r = rational_part();
        if (!r) throw std::logic_error(std::string(context) + ": value is not rational");
        return *r;
    }

    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        const double two_pi = 6.283185307179586476925286766559;
        for (int j = 0; j < conductor_; ++j) {
            if (coeffs_[j].is_zero()) continue;
            double arg = two_pi * j / conductor_;
            acc += coeffs_[j].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return acc;
    }

    // Text form cyc(n)[c0,c1,...] with trailing zero coefficients dropped.
    std::string str() const {
        std::string s = "cyc(" + std::to_string(conductor_) + ")[";
        size_t last = 0;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) last = i;
        for (size_t i = 0; i <= last; ++i) {
            if (i) s += ",";
            s += coeffs_[i].str();
        }
        return s + "]";
    }

    // lift to a conductor m that is a multiple of the current one
    CycNum lifted(int m) const {
        if (m == conductor_) return *this;
        if (m % conductor_ != 0)
            throw std::invalid_argument("lifted: target conductor not a multiple");
        int f = m / conductor_;
        std::vector<Rational> out(m, Rational(0));
        for (int j = 0; j < conductor_; ++j)
            if (!coeffs_[j].is_zero()) out[static_cast<size_t>(j) * f] = coeffs_[j];
        CycNum r;
        r.conductor_ = m;
        r.coeffs_ = std::move(out);
        r.reduce();
        return r;
    }

private:
    int conductor_;
    std::vector<Rational> coeffs_;

    void reduce() {
        const auto& phi = detail::cyclotomic_polynomial(conductor_);
        int deg = static_cast<int>(phi.size()) - 1;
        for (int i = conductor_ - 1; i >= deg; --i) {
            if (coeffs_[i].is_zero()) continue;
            Rational c = coeffs_[i];
            for (int j = 0; j <= deg; ++j)
                coeffs_[i - deg + j] -= c * Rational(phi[j]);
        }
    }

    static std::pair<CycNum, CycNum> unify(const CycNum& a, const CycNum& b) {
        if (a.conductor_ == b.conductor_) return {a, b};
        long long m = detail::lcm_ll(a.conductor_, b.conductor_);
        return {a.lifted(static_cast<int>(m)), b.lifted(static_cast<int>(m))};
    }
};

enum class CycOp { add, mul };

inline CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
    return op == CycOp::add ? a + b : a * b;
}

}  // namespace sa
