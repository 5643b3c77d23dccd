#pragma once

#include <cctype>
#include <compare>
#include <functional>

#include "sa/group.hpp"
#include "sa/rational.hpp"

namespace sa {

// Fuchsian signature (gamma; k_1,...,k_s), periods sorted ascending, each >= 2.
struct Signature {
    int gamma = 0;
    std::vector<int> periods;

    Signature() = default;
    Signature(int g, std::vector<int> ks) : gamma(g), periods(std::move(ks)) {
        if (gamma < 0) throw std::invalid_argument("Signature: negative genus");
        for (int k : periods)
            if (k < 2) throw std::invalid_argument("Signature: period < 2");
        std::sort(periods.begin(), periods.end());
    }

    int s() const { return static_cast<int>(periods.size()); }

    friend bool operator==(const Signature&, const Signature&) = default;
    friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
        if (auto c = a.gamma <=> b.gamma; c != 0) return c;
        if (auto c = a.s() <=> b.s(); c != 0) return c;
        return a.periods <=> b.periods;
    }

    // canonical text form "(g;k1,k2,...)"
    std::string str() const {
        std::string out = "(" + std::to_string(gamma) + ";";
        for (size_t i = 0; i < periods.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(periods[i]);
        }
        return out + ")";
    }

    static Signature parse(const std::string& text) {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.size() < 4 || t.front() != '(' || t.back() != ')')
            throw std::invalid_argument("Signature: expected \"(g;k1,k2,...)\"");
        t = t.substr(1, t.size() - 2);
        auto semi = t.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("Signature: missing ';'");
        int g = std::stoi(t.substr(0, semi));
        std::vector<int> ks;
        std::string rest = t.substr(semi + 1);
        std::string cur;
        for (char c : rest + ",") {
            if (c == ',') {
                if (!cur.empty() && cur != "-") ks.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        return Signature(g, std::move(ks));
    }

    // hyperbolic area factor 2*gamma - 2 + sum(1 - 1/k)
    Rational measure() const {
        Rational m(2 * gamma - 2);
        for (int k : periods) m += Rational(k - 1, k);
        return m;
    }
};

// The genus g solving 2g - 2 = group_order * (2*gamma - 2 + sum(1 - 1/k_i)),
// returned exactly; integrality and positivity are the caller's business.
inline Rational rh_genus(long long group_order, const Signature& sigma) {
    if (group_order < 1) throw std::invalid_argument("rh_genus: group order must be >= 1");
    return Rational(1) + Rational(group_order, 2) * sigma.measure();
}

// Dimension 3*gamma - 3 + s of the Teichmueller space; requires hyperbolicity.
inline int teich_dim(const Signature& sigma) {
    if (!(sigma.measure() > Rational(0)))
        throw std::invalid_argument("teich_dim: signature is not hyperbolic: " + sigma.str());
    return 3 * sigma.gamma - 3 + sigma.s();
}

// All signatures with periods among the element orders of `G` (> 1) whose
// Riemann-Hurwitz genus equals `genus` exactly. Finite by the bound
// s <= 2*((2*genus-2)/|G| - 2*gamma + 2) since each period contributes >= 1/2.
inline std::vector<Signature> admissible_signatures(const FiniteGroup& G, int genus) {
    if (genus < 2) throw std::invalid_argument("admissible_signatures: genus must be >= 2");
    const Rational target(2 * genus - 2, G.order());  // = 2*gamma - 2 + sum(1 - 1/k)
    std::vector<int> orders = G.period_candidates();
    std::vector<Signature> out;

    for (int gamma = 0; gamma <= genus; ++gamma) {
        Rational base(2 * gamma - 2);
        if (base > target) break;
        Rational room = target - base;
        // each period adds at least 1/2
        long long s_max = (Rational(2) * room).num().to_int64() /
                          (Rational(2) * room).den().to_int64();
        if (room == Rational(0)) {
            if (gamma >= 2) out.push_back(Signature(gamma, {}));
            continue;
        }
        // depth-first over non-decreasing period multisets
        std::vector<int> chosen;
        std::function<void(size_t, Rational)> rec = [&](size_t min_idx, Rational acc) {
            if (acc == room && !chosen.empty()) out.push_back(Signature(gamma, chosen));
            if (static_cast<long long>(chosen.size()) >= s_max) return;
            for (size_t i = min_idx; i < orders.size(); ++i) {
                Rational next = acc + Rational(orders[i] - 1, orders[i]);
                if (next > room) continue;
                chosen.push_back(orders[i]);
                rec(i, next);
                chosen.pop_back();
            }
        };
        rec(0, Rational(0));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sa
