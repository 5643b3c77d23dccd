#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "sa/errors.hpp"
#include "sa/group_spec.hpp"
#include "sa/signature.hpp"

namespace sa {

// A surface-kernel epimorphism with genus-zero quotient, encoded as the tuple
// of images of the canonical generators.
struct GeneratingVector {
    Group group;
    std::vector<int> images;

    std::vector<int> period_tuple() const {
        std::vector<int> p;
        p.reserve(images.size());
        for (int g : images) p.push_back(group->element_order(g));
        return p;
    }
    Signature signature() const { return Signature(0, period_tuple()); }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < images.size(); ++i) {
            if (i) s += ", ";
            s += group->element_name(images[i]);
        }
        return s + ")";
    }

    friend bool operator==(const GeneratingVector& a, const GeneratingVector& b) {
        return a.group == b.group && a.images == b.images;
    }
};

inline bool is_valid_vector(const Group& G, const Signature& sigma,
                            const std::vector<int>& images) {
    if (sigma.gamma != 0)
        throw std::invalid_argument("is_valid_vector: only genus-zero quotients supported");
    if (static_cast<int>(images.size()) != sigma.s()) return false;
    for (size_t i = 0; i < images.size(); ++i)
        if (G->element_order(images[i]) != sigma.periods[i]) return false;
    int prod = G->identity();
    for (int g : images) prod = G->mul(prod, g);
    if (prod != G->identity()) return false;
    return static_cast<int>(subgroup_generated(*G, images).size()) == G->order();
}

// All valid vectors for a genus-zero signature, in lexicographic image order.
inline std::vector<GeneratingVector> enumerate_vectors(const Group& G, const Signature& sigma) {
    if (sigma.gamma != 0)
        throw std::invalid_argument("enumerate_vectors: only genus-zero quotients supported");
    if (sigma.s() > 6) throw std::invalid_argument("enumerate_vectors: more than 6 periods");
    if (G->order() > 200) throw std::invalid_argument("enumerate_vectors: order limit exceeded");
    int s = sigma.s();
    std::vector<GeneratingVector> out;
    if (s == 0) return out;

    std::vector<std::vector<int>> pool(s);
    for (int i = 0; i < s; ++i)
        for (int g = 0; g < G->order(); ++g)
            if (G->element_order(g) == sigma.periods[i]) pool[i].push_back(g);

    std::vector<int> imgs(s);
    std::function<void(int, int)> rec = [&](int pos, int prod) {
        if (pos == s - 1) {
            int last = G->inv(prod);
            if (G->element_order(last) != sigma.periods[pos]) return;
            imgs[pos] = last;
            if (static_cast<int>(subgroup_generated(*G, imgs).size()) == G->order())
                out.push_back(GeneratingVector{G, imgs});
            return;
        }
        for (int g : pool[pos]) {
            imgs[pos] = g;
            rec(pos + 1, G->mul(prod, g));
        }
    };
    rec(0, G->identity());
    return out;
}

// Braid transformation (1-based i < s): x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
inline GeneratingVector braid_move(const GeneratingVector& v, int i) {
    int s = static_cast<int>(v.images.size());
    if (i < 1 || i >= s) throw std::invalid_argument("braid_move: index out of range");
    const auto& G = *v.group;
    std::vector<int> w = v.images;
    int a = v.images[i - 1], b = v.images[i];
    w[i - 1] = b;
    w[i] = G.mul(G.mul(G.inv(b), a), b);
    return GeneratingVector{v.group, std::move(w)};
}

inline GeneratingVector braid_move_inverse(const GeneratingVector& v, int i) {
    int s = static_cast<int>(v.images.size());
    if (i < 1 || i >= s) throw std::invalid_argument("braid_move_inverse: index out of range");
    const auto& G = *v.group;
    std::vector<int> w = v.images;
    int a = v.images[i - 1], b = v.images[i];
    w[i - 1] = G.mul(G.mul(a, b), G.inv(a));
    w[i] = a;
    return GeneratingVector{v.group, std::move(w)};
}

inline GeneratingVector aut_apply(const GroupHom& omega, const GeneratingVector& v) {
    if (omega.source != v.group || omega.target != v.group || !omega.is_bijective())
        throw std::invalid_argument("aut_apply: not an automorphism of the vector's group");
    std::vector<int> w;
    w.reserve(v.images.size());
    for (int g : v.images) w.push_back(omega(g));
    return GeneratingVector{v.group, std::move(w)};
}

namespace detail {

inline uint64_t encode_state(const std::vector<int>& images) {
    uint64_t key = 0;
    for (int g : images) key = (key << 8) | static_cast<uint64_t>(g & 0xff);
    return key | (static_cast<uint64_t>(images.size()) << 56);
}

// Orbit partition of all valid tuples (periods in any order) under the braid
// moves and Aut(G); state bookkeeping is restricted to reachable tuples.
struct OrbitPartition {
    Group group;
    Signature sigma;  // sorted
    std::vector<std::vector<int>> states;        // all reachable tuples
    std::unordered_map<uint64_t, int> index_of;  // encoded state -> position
    std::vector<int> orbit_of;                   // position -> orbit id
    std::vector<std::vector<int>> orbit_members; // orbit id -> sorted positions
};

inline OrbitPartition compute_partition(const Group& G, const Signature& sigma) {
    OrbitPartition P;
    P.group = G;
    P.sigma = sigma;
    int s = sigma.s();

    auto sorted_vectors = enumerate_vectors(G, sigma);

    // braid closure over the full (period-permuted) state space
    std::vector<int> parent;
    auto add_state = [&](const std::vector<int>& st) -> int {
        uint64_t key = encode_state(st);
        auto it = P.index_of.find(key);
        if (it != P.index_of.end()) return it->second;
        int id = static_cast<int>(P.states.size());
        P.states.push_back(st);
        P.index_of.emplace(key, id);
        parent.push_back(id);
        return id;
    };
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (const auto& v : sorted_vectors) add_state(v.images);
    for (size_t head = 0; head < P.states.size(); ++head) {
        GeneratingVector cur{G, P.states[head]};
        for (int i = 1; i < s; ++i) {
            auto nxt = braid_move(cur, i);
            int id = add_state(nxt.images);
            unite(static_cast<int>(head), id);
        }
    }

    // automorphisms act orbit-to-orbit; one representative per braid orbit suffices
    auto auts = automorphisms(G);
    std::vector<int> braid_reps;
    {
        std::unordered_set<int> seen;
        for (size_t i = 0; i < P.states.size(); ++i)
            if (seen.insert(find(static_cast<int>(i))).second)
                braid_reps.push_back(static_cast<int>(i));
    }
    for (int rep : braid_reps) {
        GeneratingVector v{G, P.states[rep]};
        for (const auto& w : auts) {
            std::vector<int> img;
            img.reserve(v.images.size());
            for (int g : v.images) img.push_back(w(g));
            auto it = P.index_of.find(encode_state(img));
            if (it == P.index_of.end())
                throw CrossCheckError("orbit partition: automorphism image left the state space");
            unite(rep, it->second);
        }
    }

    // normalise orbit ids in order of least member
    P.orbit_of.assign(P.states.size(), -1);
    std::map<int, int> root_to_id;
    for (size_t i = 0; i < P.states.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = root_to_id.find(r);
        int id;
        if (it == root_to_id.end()) {
            id = static_cast<int>(root_to_id.size());
            root_to_id.emplace(r, id);
            P.orbit_members.push_back({});
        } else {
            id = it->second;
        }
        P.orbit_of[i] = id;
        P.orbit_members[id].push_back(static_cast<int>(i));
    }
    return P;
}

}  // namespace detail

struct ExtensionDescriptor {
    std::string ambient_tag;
    Signature ambient_sigma;
    std::vector<int> ambient_images;
    std::string note;
};

struct Orbit {
    GeneratingVector representative;
    long long size = 0;  // number of valid vectors (sorted periods) in the orbit
    bool extension_checked = false;
    std::optional<ExtensionDescriptor> extension;
};

struct OrbitReport {
    Group group;
    Signature sigma;
    std::vector<Orbit> orbits;
    long long total_vectors = 0;
};

// For each sub-generator, a word in the ambient canonical generators
// (1-based generator position, exponent).
struct RestrictionRecipe {
    Signature ambient;
    Signature sub;
    std::vector<std::vector<std::pair<int, int>>> words;
};

// The inclusion recipes used for extension checks, parameterised by q.
// Words evaluate canonical generators of an index-2 Fuchsian subgroup.
namespace recipes {

inline RestrictionRecipe q_2q_2q_in_2_2q_2q(int q) {
    // sub generators (y3^2, y1 y2 y1, y2)
    return RestrictionRecipe{Signature(0, {2, 2 * q, 2 * q}),
                             Signature(0, {q, 2 * q, 2 * q}),
                             {{{3, 2}}, {{1, 1}, {2, 1}, {1, 1}}, {{2, 1}}}};
}
inline RestrictionRecipe dihedral_22qq_in_222q(int q) {
    // sub generators (y1 y2 y1, y2, y2 y1 y4 y1 y2, y4)
    return RestrictionRecipe{Signature(0, {2, 2, 2, q}),
                             Signature(0, {2, 2, q, q}),
                             {{{1, 1}, {2, 1}, {1, 1}},
                              {{2, 1}},
                              {{2, 1}, {1, 1}, {4, 1}, {1, 1}, {2, 1}},
                              {{4, 1}}}};
}
inline RestrictionRecipe cyclic_22qq_in_222q(int q) {
    // sub generators (y1, y2 y1 y2, y4, y1 y2 y4 y2 y1)
    return RestrictionRecipe{Signature(0, {2, 2, 2, q}),
                             Signature(0, {2, 2, q, q}),
                             {{{1, 1}},
                              {{2, 1}, {1, 1}, {2, 1}},
                              {{4, 1}},
                              {{1, 1}, {2, 1}, {4, 1}, {2, 1}, {1, 1}}}};
}
inline RestrictionRecipe family_222q_in_242q(int q) {
    // sub generators (z2^2, z2 z1 z2^-1, z2 z1 z2 z3^2, z3^-2)
    return RestrictionRecipe{Signature(0, {2, 4, 2 * q}),
                             Signature(0, {2, 2, 2, q}),
                             {{{2, 2}},
                              {{2, 1}, {1, 1}, {2, -1}},
                              {{2, 1}, {1, 1}, {2, 1}, {3, 2}},
                              {{3, -2}}}};
}
inline RestrictionRecipe quartic_44q_in_242q(int q) {
    // sub generators (z2, z3 z2 z3^-1, z3^2)
    return RestrictionRecipe{Signature(0, {2, 4, 2 * q}),
                             Signature(0, {4, 4, q}),
                             {{{2, 1}}, {{3, 1}, {2, 1}, {3, -1}}, {{3, 2}}}};
}
inline RestrictionRecipe two_2q2q_in_242q(int q) {
    // sub generators (z2^-2, z3^-1, z2^-1 z3^-1 z2)
    return RestrictionRecipe{Signature(0, {2, 4, 2 * q}),
                             Signature(0, {2, 2 * q, 2 * q}),
                             {{{2, -2}}, {{3, -1}}, {{2, -1}, {3, -1}, {2, 1}}}};
}

}  // namespace recipes

// Evaluate the recipe under an ambient vector; the result lives on the
// subgroup generated by the evaluated words.
inline GeneratingVector restrict_ske(const GeneratingVector& ambient,
                                     const RestrictionRecipe& recipe) {
    const auto& G = *ambient.group;
    if (ambient.period_tuple() != recipe.ambient.periods)
        throw std::invalid_argument("restrict_ske: ambient vector does not match recipe signature");
    std::vector<int> tuple;
    for (const auto& word : recipe.words) {
        int acc = G.identity();
        for (auto [pos, exp] : word) {
            if (pos < 1 || pos > static_cast<int>(ambient.images.size()))
                throw std::invalid_argument("restrict_ske: word references missing generator");
            acc = G.mul(acc, G.pow(ambient.images[pos - 1], exp));
        }
        tuple.push_back(acc);
    }
    for (size_t i = 0; i < tuple.size(); ++i)
        if (G.element_order(tuple[i]) != recipe.sub.periods[i])
            throw std::invalid_argument("restrict_ske: order mismatch, recipe inapplicable");
    int prod = G.identity();
    for (int g : tuple) prod = G.mul(prod, g);
    if (prod != G.identity())
        throw std::invalid_argument("restrict_ske: product of evaluated words is not 1");

    auto elems = subgroup_generated(G, tuple);
    auto [sub, pos] = subgroup_as_group(ambient.group, elems);
    std::vector<int> imgs;
    for (int g : tuple) imgs.push_back(pos[g]);
    return GeneratingVector{sub, std::move(imgs)};
}

namespace detail {

// lexicographically least sorted-period member of v's orbit, given a partition
inline std::vector<int> canonical_rep(const OrbitPartition& P, const std::vector<int>& images) {
    auto it = P.index_of.find(encode_state(images));
    if (it == P.index_of.end())
        throw std::invalid_argument("canonical_rep: tuple is not a valid vector for this signature");
    int orbit = P.orbit_of[it->second];
    const std::vector<int>* best = nullptr;
    for (int pos : P.orbit_members[orbit]) {
        const auto& st = P.states[pos];
        bool sorted_periods = true;
        for (size_t i = 0; i < st.size(); ++i)
            if (P.group->element_order(st[i]) != P.sigma.periods[i]) {
                sorted_periods = false;
                break;
            }
        if (!sorted_periods) continue;
        if (!best || st < *best) best = &st;
    }
    if (!best) throw CrossCheckError("canonical_rep: orbit without sorted representative");
    return *best;
}

}  // namespace detail

std::optional<ExtensionDescriptor> extendability(const GeneratingVector& v);

// Topological-equivalence orbits of all valid vectors for (G, sigma).
inline OrbitReport orbits(const Group& G, const Signature& sigma, bool check_extensions = false) {
    auto P = detail::compute_partition(G, sigma);
    OrbitReport report;
    report.group = G;
    report.sigma = sigma;

    int orbit_count = static_cast<int>(P.orbit_members.size());
    std::vector<std::pair<std::vector<int>, long long>> reps(orbit_count);
    for (int o = 0; o < orbit_count; ++o) {
        const std::vector<int>* best = nullptr;
        long long size = 0;
        for (int pos : P.orbit_members[o]) {
            const auto& st = P.states[pos];
            bool sorted_periods = true;
            for (size_t i = 0; i < st.size(); ++i)
                if (G->element_order(st[i]) != sigma.periods[i]) {
                    sorted_periods = false;
                    break;
                }
            if (!sorted_periods) continue;
            ++size;
            if (!best || st < *best) best = &st;
        }
        if (!best) throw CrossCheckError("orbits: orbit without sorted representative");
        reps[o] = {*best, size};
        report.total_vectors += size;
    }
    std::sort(reps.begin(), reps.end());
    for (auto& [images, size] : reps) {
        Orbit orb;
        orb.representative = GeneratingVector{G, images};
        orb.size = size;
        if (check_extensions) {
            orb.extension = extendability(orb.representative);
            orb.extension_checked = true;
        }
        report.orbits.push_back(std::move(orb));
    }
    return report;
}

// Partner vector under the documented index-2 normalizer identification of
// the triangle signatures; identity-like (a braid image) elsewhere.
inline GeneratingVector normalizer_partner(const GeneratingVector& v) {
    auto periods = v.period_tuple();
    const auto& G = *v.group;
    if (periods.size() == 3 && periods[0] == periods[1] && periods[0] == 4) {
        // (0;4,4,q): (a,b,c) -> (b, c a c^-1, c)
        int a = v.images[0], b = v.images[1], c = v.images[2];
        return GeneratingVector{v.group, {b, G.mul(G.mul(c, a), G.inv(c)), c}};
    }
    if (periods.size() == 3 && periods[1] == periods[2] && periods[1] == 2 * periods[0]) {
        // (0;q,2q,2q): the identification swaps the two 2q-periods
        return braid_move(v, 2);
    }
    return v;
}

// Number of classes after applying the normalizer identification to the
// orbit partition (equals the orbit count away from the two triangle shapes).
inline int merged_class_count(const OrbitReport& report) {
    auto P = detail::compute_partition(report.group, report.sigma);
    std::vector<int> ids;
    std::map<int, int> join;  // orbit id -> merged root
    std::function<int(int)> find = [&](int x) {
        while (join[x] != x) x = join[x] = join[join[x]];
        return x;
    };
    for (size_t o = 0; o < P.orbit_members.size(); ++o) join[static_cast<int>(o)] = static_cast<int>(o);
    for (const auto& orb : report.orbits) {
        auto partner = normalizer_partner(orb.representative);
        int a = P.orbit_of.at(P.index_of.at(detail::encode_state(orb.representative.images)));
        int b = P.orbit_of.at(P.index_of.at(detail::encode_state(partner.images)));
        int ra = find(a), rb = find(b);
        if (ra != rb) join[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::set<int> roots;
    for (size_t o = 0; o < P.orbit_members.size(); ++o) roots.insert(find(static_cast<int>(o)));
    return static_cast<int>(roots.size());
}

// Searches the built-in inclusion pairs for an ambient action whose
// restriction along the stored words is topologically equivalent to v.
inline std::optional<ExtensionDescriptor> extendability(const GeneratingVector& v) {
    const Signature sig = v.signature();
    const int n = v.group->order();

    struct Plan {
        int ambient_lambda;
        Signature ambient_sigma;
        std::vector<RestrictionRecipe> recipes;
        std::string note;
    };
    std::optional<Plan> plan;
    int q = 0;

    const auto& p = sig.periods;
    if (p.size() == 3 && p[1] == 2 * p[0] && p[2] == 2 * p[0] && is_prime(p[0])) {
        // (0;q,2q,2q) in (0;2,2q,2q)
        q = p[0];
        plan = Plan{4, Signature(0, {2, 2 * q, 2 * q}),
                    {recipes::q_2q_2q_in_2_2q_2q(q)},
                    "ambient action realises the maximal-automorphism curve"};
    } else if (p.size() == 4 && p[0] == 2 && p[1] == 2 && p[2] == p[3] && is_prime(p[2])) {
        // (0;2,2,q,q) in (0;2,2,2,q)
        q = p[2];
        plan = Plan{4, Signature(0, {2, 2, 2, q}),
                    {recipes::dihedral_22qq_in_222q(q), recipes::cyclic_22qq_in_222q(q)},
                    "one-dimensional family with doubled dihedral symmetry"};
    } else if (p.size() == 4 && p[0] == 2 && p[1] == 2 && p[2] == 2 && is_prime(p[3])) {
        // (0;2,2,2,q) in (0;2,4,2q)
        q = p[3];
        plan = Plan{8, Signature(0, {2, 4, 2 * q}),
                    {recipes::family_222q_in_242q(q)},
                    "family boundary point with 8(g+1) automorphisms"};
    } else if (p.size() == 3 && p[0] == 4 && p[1] == 4 && is_prime(p[2])) {
        // (0;4,4,q) in (0;2,4,2q)
        q = p[2];
        plan = Plan{8, Signature(0, {2, 4, 2 * q}),
                    {recipes::quartic_44q_in_242q(q)},
                    "ambient action realises the maximal-automorphism curve"};
    } else if (p.size() == 3 && p[0] == 3 && p[1] > 3 && p[2] == 3 * p[1] && is_prime(p[1])) {
        // (0;3,q,3q) in (0;2,3,3q): no stored words; refuted by ambient search
        q = p[1];
        int lam = 12;
        for (const auto& amb : detail::groups_of_order_lambda_q(lam, q)) {
            auto vs = enumerate_vectors(amb, Signature(0, {2, 3, 3 * q}));
            if (!vs.empty())
                throw CrossCheckError("extendability: unexpected ambient action of order 12q");
        }
        return std::nullopt;
    } else {
        throw std::invalid_argument("extendability: unsupported signature " + sig.str());
    }

    if (n % q != 0 || static_cast<long long>(n) * 2 != static_cast<long long>(plan->ambient_lambda) * q)
        throw std::invalid_argument("extendability: group order does not fit the signature");

    auto partition = detail::compute_partition(v.group, sig);
    auto target_canonical = detail::canonical_rep(partition, v.images);

    for (const auto& amb : detail::groups_of_order_lambda_q(plan->ambient_lambda, q)) {
        auto ambient_vectors = enumerate_vectors(amb, plan->ambient_sigma);
        for (const auto& V : ambient_vectors) {
            for (const auto& recipe : plan->recipes) {
                GeneratingVector restricted{nullptr, {}};
                try {
                    restricted = restrict_ske(V, recipe);
                } catch (const std::invalid_argument&) {
                    continue;  // recipe inapplicable to this ambient vector
                }
                if (restricted.group->order() != n) continue;
                auto iso = find_isomorphism(restricted.group, v.group);
                if (!iso) continue;
                std::vector<int> mapped;
                for (int g : restricted.images) mapped.push_back((*iso)(g));
                std::vector<int> canon;
                try {
                    canon = detail::canonical_rep(partition, mapped);
                } catch (const std::invalid_argument&) {
                    continue;  // period order differs from the sorted signature
                }
                if (canon == target_canonical)
                    return ExtensionDescriptor{amb->spec_tag(), plan->ambient_sigma, V.images,
                                               plan->note};
            }
        }
    }
    return std::nullopt;
}

}  // namespace sa
