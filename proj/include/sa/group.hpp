#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sa {

// A small finite group given by an explicit multiplication table on element
// indices 0..order-1. Identity is always index 0 for groups built here.
// Immutable after construction.
class FiniteGroup {
public:
    FiniteGroup(std::vector<uint16_t> mul_table, int order, std::string spec_tag,
                std::vector<std::pair<std::string, int>> generators,
                std::vector<std::string> element_names = {})
        : order_(order),
          mul_(std::move(mul_table)),
          spec_tag_(std::move(spec_tag)),
          generators_(std::move(generators)),
          names_(std::move(element_names)) {
        if (static_cast<int>(mul_.size()) != order_ * order_)
            throw std::invalid_argument("FiniteGroup: table size mismatch");
        if (names_.empty()) {
            names_.resize(order_);
            for (int i = 0; i < order_; ++i) names_[i] = "g" + std::to_string(i);
        }
        // identity and inverses; fails loudly on a defective table
        identity_ = -1;
        for (int e = 0; e < order_; ++e) {
            bool ok = true;
            for (int a = 0; a < order_ && ok; ++a)
                ok = mul(e, a) == a && mul(a, e) == a;
            if (ok) { identity_ = e; break; }
        }
        if (identity_ != 0)
            throw std::invalid_argument("FiniteGroup: identity must be element 0");
        inv_.assign(order_, uint16_t(0));
        for (int a = 0; a < order_; ++a) {
            int found = -1;
            for (int b = 0; b < order_; ++b)
                if (mul(a, b) == identity_ && mul(b, a) == identity_) { found = b; break; }
            if (found < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
            inv_[a] = static_cast<uint16_t>(found);
        }
        elem_order_.assign(order_, 0);
        for (int a = 0; a < order_; ++a) {
            int x = a, n = 1;
            while (x != identity_) { x = mul(x, a); ++n; }
            elem_order_[a] = n;
        }
        if (!generators_.empty()) {
            std::vector<bool> in(order_, false);
            std::vector<int> stack;
            in[identity_] = true;
            stack.push_back(identity_);
            for (const auto& [name, g] : generators_)
                if (!in[g]) { in[g] = true; stack.push_back(g); }
            size_t count = stack.size();
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (const auto& [name, g] : generators_) {
                    int b = mul(a, g);
                    if (!in[b]) { in[b] = true; stack.push_back(b); ++count; }
                }
            }
            if (static_cast<int>(count) != order_)
                throw std::invalid_argument("FiniteGroup: listed generators do not generate");
        }
    }

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int element_order(int a) const { return elem_order_[a]; }
    const std::string& spec_tag() const { return spec_tag_; }
    const std::string& element_name(int a) const { return names_[a]; }
    const std::vector<std::pair<std::string, int>>& generators() const { return generators_; }

    int pow(int a, long long e) const {
        long long m = element_order(a);
        e %= m;
        if (e < 0) e += m;
        int r = identity_;
        for (long long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    int generator(const std::string& name) const {
        for (const auto& [n, idx] : generators_)
            if (n == name) return idx;
        throw std::invalid_argument("FiniteGroup: no generator named '" + name + "'");
    }

    bool is_abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = a + 1; b < order_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // exhaustive group-axiom check; O(n^3), used by tests
    bool verify_axioms() const {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        return true;
    }

    std::vector<int> sorted_element_orders() const {
        std::vector<int> v = elem_order_;
        std::sort(v.begin(), v.end());
        return v;
    }

    // distinct element orders > 1
    std::vector<int> period_candidates() const {
        std::set<int> s(elem_order_.begin(), elem_order_.end());
        s.erase(1);
        return {s.begin(), s.end()};
    }

    const std::vector<uint16_t>& raw_table() const { return mul_; }

private:
    int order_;
    int identity_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<int> elem_order_;
    std::string spec_tag_;
    std::vector<std::pair<std::string, int>> generators_;
    std::vector<std::string> names_;
};

using Group = std::shared_ptr<const FiniteGroup>;

// A homomorphism between two concrete groups, stored as the full image map.
struct GroupHom {
    Group source;
    Group target;
    std::vector<int> image;

    int operator()(int g) const { return image[g]; }

    bool is_homomorphism() const {
        int n = source->order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (image[source->mul(a, b)] != target->mul(image[a], image[b])) return false;
        return true;
    }
    bool is_bijective() const {
        std::vector<bool> seen(target->order(), false);
        if (source->order() != target->order()) return false;
        for (int v : image) {
            if (seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }
};

namespace build {

inline std::string pow_name(const std::string& base, int e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

inline Group cyclic(int n, const std::string& tag = "", const std::string& gen = "x") {
    if (n <= 0) throw std::invalid_argument("cyclic: order must be positive");
    std::vector<uint16_t> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a + b) % n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = pow_name(gen, i);
    std::vector<std::pair<std::string, int>> gens;
    if (n > 1) gens.push_back({gen, 1});
    return std::make_shared<FiniteGroup>(std::move(t), n, tag.empty() ? "C" + std::to_string(n) : tag,
                                         std::move(gens), std::move(names));
}

// dihedral group of order 2n: <r, s : r^n = s^2 = (sr)^2 = 1>
inline Group dihedral(int n, const std::string& tag = "") {
    if (n < 2) throw std::invalid_argument("dihedral: n must be >= 2");
    int N = 2 * n;
    auto idx = [n](bool refl, int i) { return (refl ? n : 0) + ((i % n) + n) % n; };
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a) {
        bool ra = a >= n;
        int ia = ra ? a - n : a;
        for (int b = 0; b < N; ++b) {
            bool rb = b >= n;
            int ib = rb ? b - n : b;
            int r;
            if (!ra && !rb) r = idx(false, ia + ib);
            else if (!ra && rb) r = idx(true, ib - ia);   // r^a s r^b = s r^(b-a)
            else if (ra && !rb) r = idx(true, ia + ib);
            else r = idx(false, ib - ia);                  // (s r^a)(s r^b) = r^(b-a)
            t[static_cast<size_t>(a) * N + b] = static_cast<uint16_t>(r);
        }
    }
    std::vector<std::string> names(N);
    for (int i = 0; i < n; ++i) names[i] = pow_name("r", i);
    for (int i = 0; i < n; ++i) names[n + i] = i == 0 ? "s" : "s*" + pow_name("r", i);
    std::vector<std::pair<std::string, int>> gens = {{"r", 1}, {"s", n}};
    return std::make_shared<FiniteGroup>(std::move(t), N, tag.empty() ? "D" + std::to_string(n) : tag,
                                         std::move(gens), std::move(names));
}

inline Group direct_product(const Group& A, const Group& B, const std::string& tag = "") {
    int na = A->order(), nb = B->order(), N = na * nb;
    if (N > 4096) throw std::invalid_argument("direct_product: order too large");
    auto idx = [nb](int a, int b) { return a * nb + b; };
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    t[static_cast<size_t>(idx(a1, b1)) * N + idx(a2, b2)] =
                        static_cast<uint16_t>(idx(A->mul(a1, a2), B->mul(b1, b2)));
    std::vector<std::string> names(N);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            names[idx(a, b)] = "(" + A->element_name(a) + "," + B->element_name(b) + ")";
    std::vector<std::pair<std::string, int>> gens;
    std::set<std::string> used;
    for (const auto& [n, i] : A->generators()) {
        gens.push_back({n, idx(i, 0)});
        used.insert(n);
    }
    for (const auto& [n, i] : B->generators()) {
        std::string nm = n;
        while (used.count(nm)) nm += "'";
        gens.push_back({nm, idx(0, i)});
        used.insert(nm);
    }
    std::string tg = tag.empty() ? A->spec_tag() + "x" + B->spec_tag() : tag;
    return std::make_shared<FiniteGroup>(std::move(t), N, tg, std::move(gens), std::move(names));
}

// C_q x| C_4 with B A B^-1 = A^rho; rho^4 = 1 mod q required.
inline Group semidirect_cq_c4(int q, int rho) {
    if (q < 3) throw std::invalid_argument("semidirect_cq_c4: q must be >= 3");
    long long r = ((rho % q) + q) % q;
    long long r4 = r * r % q * r % q * r % q;
    if (r4 != 1 || r == 0)
        throw std::invalid_argument("semidirect_cq_c4: rho^4 != 1 mod q");
    int N = 4 * q;
    auto idx = [](int i, int j) { return i * 4 + j; };
    // rho^j mod q
    long long rp[4] = {1, r, r * r % q, r * r % q * r % q};
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int i1 = 0; i1 < q; ++i1)
        for (int j1 = 0; j1 < 4; ++j1)
            for (int i2 = 0; i2 < q; ++i2)
                for (int j2 = 0; j2 < 4; ++j2)
                    t[static_cast<size_t>(idx(i1, j1)) * N + idx(i2, j2)] = static_cast<uint16_t>(
                        idx(static_cast<int>((i1 + i2 * rp[j1]) % q), (j1 + j2) % 4));
    std::vector<std::string> names(N);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < 4; ++j) {
            std::string s = i ? pow_name("A", i) : "";
            std::string b = j ? pow_name("B", j) : "";
            names[idx(i, j)] = s.empty() && b.empty() ? "1" : s.empty() ? b : b.empty() ? s : s + "*" + b;
        }
    std::vector<std::pair<std::string, int>> gens = {{"A", idx(1, 0)}, {"B", idx(0, 1)}};
    std::string tag = "CqC4:q=" + std::to_string(q) + ",rho=" + std::to_string(r);
    return std::make_shared<FiniteGroup>(std::move(t), N, tag, std::move(gens), std::move(names));
}

// <x,y,z : x^(2q) = y^2 = z^2 = 1, [x,y] = [z,y] = 1, zxz = x^-1 y>, order 8q
inline Group accola_maclachlan(int q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("accola_maclachlan: q must be an odd prime");
    int N = 8 * q;
    int m = 2 * q;
    auto idx = [](int i, int j, int k) { return (i * 2 + j) * 2 + k; };
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int k1 = 0; k1 < 2; ++k1)
                for (int i2 = 0; i2 < m; ++i2)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int k2 = 0; k2 < 2; ++k2) {
                            int i, j, k;
                            if (k1 == 0) {
                                i = (i1 + i2) % m;
                                j = j1 ^ j2;
                                k = k2;
                            } else {
                                i = ((i1 - i2) % m + m) % m;
                                j = j1 ^ j2 ^ (i2 & 1);
                                k = 1 ^ k2;
                            }
                            t[static_cast<size_t>(idx(i1, j1, k1)) * N + idx(i2, j2, k2)] =
                                static_cast<uint16_t>(idx(i, j, k));
                        }
    std::vector<std::string> names(N);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                std::string s;
                if (i) s += pow_name("x", i);
                if (j) s += (s.empty() ? "" : "*") + std::string("y");
                if (k) s += (s.empty() ? "" : "*") + std::string("z");
                names[idx(i, j, k)] = s.empty() ? "1" : s;
            }
    std::vector<std::pair<std::string, int>> gens = {
        {"x", idx(1, 0, 0)}, {"y", idx(0, 1, 0)}, {"z", idx(0, 0, 1)}};
    return std::make_shared<FiniteGroup>(std::move(t), N, "AM:q=" + std::to_string(q),
                                         std::move(gens), std::move(names));
}

inline Group quaternion8() {
    // elements: 1,-1,i,-i,j,-j,k,-k
    // encode e = (axis, sign): axis 0 = 1, 1 = i, 2 = j, 3 = k
    auto enc = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
    // basis multiplication: (axis, axis) -> (axis, sign)
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<uint16_t> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ax1 = a / 2, s1 = a % 2 ? -1 : 1;
            int ax2 = b / 2, s2 = b % 2 ? -1 : 1;
            int ax = axis_mul[ax1][ax2];
            int s = s1 * s2 * sign_mul[ax1][ax2];
            t[static_cast<size_t>(a) * 8 + b] = static_cast<uint16_t>(enc(ax, s));
        }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::vector<std::pair<std::string, int>> gens = {{"i", enc(1, 1)}, {"j", enc(2, 1)}};
    return std::make_shared<FiniteGroup>(std::move(t), 8, "Q8", std::move(gens), std::move(names));
}

// group generated by permutations of {0..m-1}; elements sorted lexicographically
inline Group permutation_group(int m, std::vector<std::vector<int>> gen_perms,
                               const std::string& tag) {
    std::set<std::vector<int>> elems;
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    elems.insert(id);
    std::vector<std::vector<int>> queue = {id};
    auto compose = [m](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(m);
        for (int i = 0; i < m; ++i) r[i] = p[q[i]];
        return r;
    };
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (const auto& g : gen_perms) {
            for (auto prod : {compose(cur, g), compose(g, cur)})
                if (elems.insert(prod).second) queue.push_back(prod);
        }
    }
    std::vector<std::vector<int>> list(elems.begin(), elems.end());
    int N = static_cast<int>(list.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < N; ++i) index[list[i]] = i;
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            t[static_cast<size_t>(a) * N + b] = static_cast<uint16_t>(index.at(compose(list[a], list[b])));
    std::vector<std::string> names(N);
    for (int i = 0; i < N; ++i) {
        std::string s = "p";
        for (int v : list[i]) s += std::to_string(v);
        names[i] = s;
    }
    std::vector<std::pair<std::string, int>> gens;
    for (size_t i = 0; i < gen_perms.size(); ++i)
        gens.push_back({"g" + std::to_string(i), index.at(gen_perms[i])});
    return std::make_shared<FiniteGroup>(std::move(t), N, tag, std::move(gens), std::move(names));
}

inline Group alternating4() {
    return permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}
inline Group alternating5() {
    return permutation_group(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "A5");
}

// dicyclic group of order 12: <a,b : a^6 = 1, b^2 = a^3, b a b^-1 = a^-1>
inline Group dicyclic3() {
    int N = 12;
    auto idx = [](int i, int j) { return i * 2 + j; };
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int i1 = 0; i1 < 6; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 6; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i, j;
                    if (j1 == 0) { i = (i1 + i2) % 6; j = j2; }
                    else if (j2 == 0) { i = ((i1 - i2) % 6 + 6) % 6; j = 1; }
                    else { i = ((i1 - i2 + 3) % 6 + 6) % 6; j = 0; }
                    t[static_cast<size_t>(idx(i1, j1)) * N + idx(i2, j2)] =
                        static_cast<uint16_t>(idx(i, j));
                }
    std::vector<std::string> names(N);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string s = i ? pow_name("a", i) : "";
            if (j) s += (s.empty() ? "" : "*") + std::string("b");
            names[idx(i, j)] = s.empty() ? "1" : s;
        }
    std::vector<std::pair<std::string, int>> gens = {{"a", idx(1, 0)}, {"b", idx(0, 1)}};
    return std::make_shared<FiniteGroup>(std::move(t), N, "Dic3", std::move(gens), std::move(names));
}

// C2^3 x| C7 (Frobenius group of order 56); the C7 permutes the seven involutions
inline Group frobenius56() {
    int N = 56;
    auto idx = [](int v, int c) { return v * 7 + c; };
    // order-7 linear map on F2^3, companion matrix of x^3 + x + 1
    auto apply_m = [](int v) {
        int b0 = v & 1, b1 = (v >> 1) & 1, b2 = (v >> 2) & 1;
        int n0 = b2, n1 = b0 ^ b2, n2 = b1;
        return n0 | (n1 << 1) | (n2 << 2);
    };
    int mpow[7][8];
    for (int v = 0; v < 8; ++v) mpow[0][v] = v;
    for (int c = 1; c < 7; ++c)
        for (int v = 0; v < 8; ++v) mpow[c][v] = apply_m(mpow[c - 1][v]);
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int v1 = 0; v1 < 8; ++v1)
        for (int c1 = 0; c1 < 7; ++c1)
            for (int v2 = 0; v2 < 8; ++v2)
                for (int c2 = 0; c2 < 7; ++c2)
                    t[static_cast<size_t>(idx(v1, c1)) * N + idx(v2, c2)] =
                        static_cast<uint16_t>(idx(v1 ^ mpow[c1][v2], (c1 + c2) % 7));
    std::vector<std::string> names(N);
    for (int v = 0; v < 8; ++v)
        for (int c = 0; c < 7; ++c)
            names[idx(v, c)] = "v" + std::to_string(v) + (c ? "*" + pow_name("c", c) : "");
    std::vector<std::pair<std::string, int>> gens = {
        {"u", idx(1, 0)}, {"v", idx(2, 0)}, {"w", idx(4, 0)}, {"c", idx(0, 1)}};
    return std::make_shared<FiniteGroup>(std::move(t), N, "F56", std::move(gens), std::move(names));
}

// C_q x|_phi K for a unit-exponent homomorphism u : K -> (Z/q)^*
inline Group semidirect_cq_k(int q, const Group& K, const std::vector<int>& unit_of,
                             const std::string& tag) {
    int nk = K->order();
    int N = q * nk;
    auto idx = [nk](int i, int k) { return i * nk + k; };
    std::vector<uint16_t> t(static_cast<size_t>(N) * N);
    for (int i1 = 0; i1 < q; ++i1)
        for (int k1 = 0; k1 < nk; ++k1)
            for (int i2 = 0; i2 < q; ++i2)
                for (int k2 = 0; k2 < nk; ++k2)
                    t[static_cast<size_t>(idx(i1, k1)) * N + idx(i2, k2)] = static_cast<uint16_t>(
                        idx(static_cast<int>((i1 + static_cast<long long>(i2) * unit_of[k1]) % q),
                            K->mul(k1, k2)));
    std::vector<std::string> names(N);
    for (int i = 0; i < q; ++i)
        for (int k = 0; k < nk; ++k) {
            std::string s = i ? pow_name("A", i) : "";
            std::string kn = K->element_name(k);
            if (k != K->identity()) s += (s.empty() ? "" : "*") + kn;
            names[idx(i, k)] = s.empty() ? "1" : s;
        }
    std::vector<std::pair<std::string, int>> gens = {{"A", idx(1, 0)}};
    for (const auto& [n, i] : K->generators()) gens.push_back({n, idx(0, i)});
    return std::make_shared<FiniteGroup>(std::move(t), N, tag, std::move(gens), std::move(names));
}

}  // namespace build

// ---------------------------------------------------------------------------
// element-level queries

inline int element_order(const FiniteGroup& G, int g) { return G.element_order(g); }

inline std::vector<int> subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<bool> in(G.order(), false);
    std::vector<int> stack = {G.identity()};
    in[G.identity()] = true;
    for (int g : gens)
        if (!in[g]) { in[g] = true; stack.push_back(g); }
    std::vector<int> elems;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        elems.push_back(a);
        for (int g : gens) {
            int b = G.mul(a, g);
            if (!in[b]) { in[b] = true; stack.push_back(b); }
            b = G.mul(g, a);
            if (!in[b]) { in[b] = true; stack.push_back(b); }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

// small generating set: greedy scan then a reduction pass
inline std::vector<int> generating_set(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> closure = {G.identity()};
    for (int e = 0; e < G.order(); ++e) {
        if (std::binary_search(closure.begin(), closure.end(), e)) continue;
        gens.push_back(e);
        closure = subgroup_generated(G, gens);
        if (static_cast<int>(closure.size()) == G.order()) break;
    }
    for (size_t i = 0; i < gens.size() && gens.size() > 1;) {
        std::vector<int> rest;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (static_cast<int>(subgroup_generated(G, rest).size()) == G.order()) gens = rest;
        else ++i;
    }
    return gens;
}

namespace detail {

// Extends generator images to a full map via BFS and verifies the
// homomorphism property on (element, generator) pairs.
inline std::optional<std::vector<int>> extend_hom(const FiniteGroup& G,
                                                  const std::vector<int>& gens,
                                                  const std::vector<int>& imgs,
                                                  const FiniteGroup& H) {
    std::vector<int> img(G.order(), -1);
    img[G.identity()] = H.identity();
    std::vector<int> queue = {G.identity()};
    size_t head = 0;
    while (head < queue.size()) {
        int a = queue[head++];
        for (size_t i = 0; i < gens.size(); ++i) {
            int b = G.mul(a, gens[i]);
            if (img[b] < 0) {
                img[b] = H.mul(img[a], imgs[i]);
                queue.push_back(b);
            }
        }
    }
    for (int v : img)
        if (v < 0) return std::nullopt;  // gens do not generate G
    for (int a = 0; a < G.order(); ++a)
        for (size_t i = 0; i < gens.size(); ++i)
            if (img[G.mul(a, gens[i])] != H.mul(img[a], imgs[i])) return std::nullopt;
    return img;
}

inline void all_homs_rec(const FiniteGroup& G, const FiniteGroup& H,
                         const std::vector<int>& gens,
                         const std::vector<std::vector<int>>& candidates, size_t pos,
                         std::vector<int>& imgs, bool bijective_only, bool first_only,
                         std::vector<std::vector<int>>& out) {
    if (!out.empty() && first_only) return;
    if (pos == gens.size()) {
        auto img = extend_hom(G, gens, imgs, H);
        if (!img) return;
        if (bijective_only) {
            std::vector<bool> seen(H.order(), false);
            for (int v : *img) {
                if (seen[v]) return;
                seen[v] = true;
            }
        }
        out.push_back(std::move(*img));
        return;
    }
    for (int c : candidates[pos]) {
        imgs[pos] = c;
        all_homs_rec(G, H, gens, candidates, pos + 1, imgs, bijective_only, first_only, out);
        if (!out.empty() && first_only) return;
    }
}

inline std::vector<std::vector<int>> all_homs(const FiniteGroup& G, const FiniteGroup& H,
                                              bool bijective_only, bool first_only) {
    std::vector<int> gens = generating_set(G);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int og = G.element_order(gens[i]);
        for (int h = 0; h < H.order(); ++h) {
            int oh = H.element_order(h);
            if (bijective_only ? oh == og : og % oh == 0) candidates[i].push_back(h);
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> imgs(gens.size());
    all_homs_rec(G, H, gens, candidates, 0, imgs, bijective_only, first_only, out);
    return out;
}

}  // namespace detail

inline std::vector<GroupHom> automorphisms(const Group& G) {
    if (G->order() > 200) throw std::invalid_argument("automorphisms: order limit 200 exceeded");
    std::vector<GroupHom> result;
    for (auto& img : detail::all_homs(*G, *G, true, false))
        result.push_back(GroupHom{G, G, std::move(img)});
    return result;
}

inline bool are_isomorphic(const Group& G, const Group& H) {
    if (G->order() > 200 || H->order() > 200)
        throw std::invalid_argument("are_isomorphic: order limit 200 exceeded");
    if (G->order() != H->order()) return false;
    if (G->sorted_element_orders() != H->sorted_element_orders()) return false;
    if (G->is_abelian() != H->is_abelian()) return false;
    return !detail::all_homs(*G, *H, true, true).empty();
}

inline std::optional<GroupHom> find_isomorphism(const Group& G, const Group& H) {
    if (G->order() != H->order()) return std::nullopt;
    if (G->sorted_element_orders() != H->sorted_element_orders()) return std::nullopt;
    auto homs = detail::all_homs(*G, *H, true, true);
    if (homs.empty()) return std::nullopt;
    return GroupHom{G, H, std::move(homs.front())};
}

// partition into conjugacy classes, ordered by least member
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    std::vector<bool> seen(G.order(), false);
    std::vector<std::vector<int>> classes;
    for (int e = 0; e < G.order(); ++e) {
        if (seen[e]) continue;
        std::set<int> cls;
        for (int g = 0; g < G.order(); ++g) cls.insert(G.mul(G.mul(g, e), G.inv(g)));
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) seen[x] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

// subgroup (given as sorted element list containing the identity) as a group
// in its own right; returns the group and the position map old index -> new
inline std::pair<Group, std::vector<int>> subgroup_as_group(const Group& G,
                                                            const std::vector<int>& elems) {
    int n = static_cast<int>(elems.size());
    std::vector<int> pos(G->order(), -1);
    for (int i = 0; i < n; ++i) pos[elems[i]] = i;
    if (elems.empty() || elems[0] != G->identity())
        throw std::invalid_argument("subgroup_as_group: identity must be first element");
    std::vector<uint16_t> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int p = pos[G->mul(elems[a], elems[b])];
            if (p < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
            t[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(p);
        }
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = G->element_name(elems[i]);
    auto sub = std::make_shared<FiniteGroup>(std::move(t), n, "sub:" + G->spec_tag(),
                                             std::vector<std::pair<std::string, int>>{},
                                             std::move(names));
    return {sub, pos};
}

}  // namespace sa
