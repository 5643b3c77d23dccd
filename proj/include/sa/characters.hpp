#pragma once

#include "sa/cyclotomic.hpp"
#include "sa/errors.hpp"
#include "sa/group_spec.hpp"

namespace sa {

// Exact class function on a concrete group, stored per element.
struct Character {
    Group group;
    std::string label;
    int degree = 0;
    std::vector<CycNum> values;

    const CycNum& operator()(int g) const { return values[g]; }
};

namespace detail {

inline Character make_char(const Group& G, std::string label, std::vector<CycNum> vals) {
    Character c;
    c.group = G;
    c.label = std::move(label);
    c.values = std::move(vals);
    auto deg = c.values[G->identity()].expect_rational("character degree");
    c.degree = static_cast<int>(deg.to_int64());
    return c;
}

inline std::vector<Character> cyclic_table(const Group& G) {
    int n = G->order();
    std::vector<Character> out;
    for (int k = 0; k < n; ++k) {
        std::vector<CycNum> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = CycNum::root_of_unity(n, static_cast<long long>(k) * i);
        out.push_back(make_char(G, "chi_" + std::to_string(k), std::move(vals)));
    }
    return out;
}

inline std::vector<Character> dihedral_table(const Group& G, int n) {
    // element layout from build::dihedral: rotations 0..n-1, reflections n..2n-1
    int N = 2 * n;
    std::vector<Character> out;
    auto lin = [&](int rot_sign, int refl_sign, const std::string& label) {
        std::vector<CycNum> vals(N);
        for (int i = 0; i < n; ++i) {
            int rv = (rot_sign < 0 && i % 2) ? -1 : 1;
            vals[i] = CycNum::from_int(rv);
            vals[n + i] = CycNum::from_int(rv * refl_sign);
        }
        out.push_back(make_char(G, label, std::move(vals)));
    };
    lin(1, 1, "triv");
    lin(1, -1, "sgn_s");
    if (n % 2 == 0) {
        lin(-1, 1, "sgn_r");
        lin(-1, -1, "sgn_rs");
    }
    for (int j = 1; j <= (n - (n % 2 == 0 ? 2 : 1)) / 2; ++j) {
        std::vector<CycNum> vals(N);
        for (int i = 0; i < n; ++i) {
            vals[i] = CycNum::root_of_unity(n, static_cast<long long>(j) * i) +
                      CycNum::root_of_unity(n, -static_cast<long long>(j) * i);
            vals[n + i] = CycNum::from_int(0);
        }
        out.push_back(make_char(G, "psi_" + std::to_string(j), std::move(vals)));
    }
    return out;
}

// <x,y,z> of order 8q: 4 linear characters and 2q-1 of degree two
inline std::vector<Character> am_table(const Group& G, int q) {
    int m = 2 * q, N = 8 * q;
    auto idx = [](int i, int j, int k) { return (i * 2 + j) * 2 + k; };
    std::vector<Character> out;
    for (int xs : {1, -1})
        for (int zs : {1, -1}) {
            std::vector<CycNum> vals(N);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        int v = ((xs < 0 && i % 2) ? -1 : 1) * ((zs < 0 && k) ? -1 : 1);
                        vals[idx(i, j, k)] = CycNum::from_int(v);
                    }
            std::string label = std::string("lin_") + (xs > 0 ? "p" : "m") + (zs > 0 ? "p" : "m");
            out.push_back(make_char(G, label, std::move(vals)));
        }
    // x -> diag(w^j, -w^(q-j)), y -> I, z -> antidiag
    for (int j = 1; j <= q - 1; ++j) {
        std::vector<CycNum> vals(N);
        for (int i = 0; i < m; ++i) {
            CycNum tr = CycNum::root_of_unity(m, static_cast<long long>(j) * i) +
                        CycNum::root_of_unity(m, -static_cast<long long>(j) * i);
            for (int jj = 0; jj < 2; ++jj) {
                vals[idx(i, jj, 0)] = tr;
                vals[idx(i, jj, 1)] = CycNum::from_int(0);
            }
        }
        out.push_back(make_char(G, "plus_" + std::to_string(j), std::move(vals)));
    }
    // x -> diag(w^j, w^(q-j)), y -> -I
    for (int j = 0; j <= (q - 1) / 2; ++j) {
        std::vector<CycNum> vals(N);
        for (int i = 0; i < m; ++i) {
            CycNum tr = CycNum::root_of_unity(m, static_cast<long long>(j) * i) +
                        CycNum::root_of_unity(m, static_cast<long long>(q - j) * i);
            for (int jj = 0; jj < 2; ++jj) {
                CycNum v = jj ? Rational(-1) * tr : tr;
                vals[idx(i, jj, 0)] = v;
                vals[idx(i, jj, 1)] = CycNum::from_int(0);
            }
        }
        out.push_back(make_char(G, "m1_" + std::to_string(j), std::move(vals)));
    }
    // x -> diag(-w^j, -w^(q-j)), y -> -I
    for (int j = 1; j <= (q - 1) / 2; ++j) {
        std::vector<CycNum> vals(N);
        for (int i = 0; i < m; ++i) {
            CycNum tr = CycNum::root_of_unity(m, static_cast<long long>(j) * i) +
                        CycNum::root_of_unity(m, static_cast<long long>(q - j) * i);
            Rational sign((i % 2) ? -1 : 1);
            for (int jj = 0; jj < 2; ++jj) {
                Rational s2 = jj ? sign * Rational(-1) : sign;
                vals[idx(i, jj, 0)] = s2 * tr;
                vals[idx(i, jj, 1)] = CycNum::from_int(0);
            }
        }
        out.push_back(make_char(G, "m2_" + std::to_string(j), std::move(vals)));
    }
    return out;
}

// C_q x| C_4: four linear characters; degree-4 characters for rho of order 4,
// degree-2 pairs for rho = -1 (induced from the cyclic subgroup of index two)
inline std::vector<Character> cq_c4_table(const Group& G, int q, int rho) {
    int N = 4 * q;
    auto idx = [](int a, int b) { return a * 4 + b; };
    std::vector<Character> out;
    for (int t = 0; t < 4; ++t) {
        std::vector<CycNum> vals(N);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < 4; ++b)
                vals[idx(a, b)] = CycNum::root_of_unity(4, static_cast<long long>(t) * b);
        out.push_back(make_char(G, "lin_" + std::to_string(t), std::move(vals)));
    }
    long long r = ((rho % q) + q) % q;
    long long r2 = r * r % q;
    if (r2 == static_cast<long long>(q) - 1) {
        // orbit representatives of k ~ k*rho ~ -k ~ -k*rho on Z_q^*
        std::vector<bool> seen(q, false);
        for (int j = 1; j < q; ++j) {
            if (seen[j]) continue;
            long long o1 = j, o2 = j * r % q, o3 = (q - j) % q, o4 = (q - o2) % q;
            seen[o1] = seen[o2] = seen[o3] = seen[o4] = true;
            std::vector<CycNum> vals(N);
            for (int a = 0; a < q; ++a) {
                CycNum tr = CycNum::root_of_unity(q, o1 * a) + CycNum::root_of_unity(q, o2 * a) +
                            CycNum::root_of_unity(q, -static_cast<long long>(j) * a) +
                            CycNum::root_of_unity(q, -o2 * a);
                vals[idx(a, 0)] = tr;
                for (int b = 1; b < 4; ++b) vals[idx(a, b)] = CycNum::from_int(0);
            }
            out.push_back(make_char(G, "phi_" + std::to_string(j), std::move(vals)));
        }
    } else if (r == static_cast<long long>(q) - 1) {
        for (int j = 1; j <= (q - 1) / 2; ++j) {
            for (int eps : {1, -1}) {
                std::vector<CycNum> vals(N);
                for (int a = 0; a < q; ++a) {
                    CycNum tr = CycNum::root_of_unity(q, static_cast<long long>(j) * a) +
                                CycNum::root_of_unity(q, -static_cast<long long>(j) * a);
                    vals[idx(a, 0)] = tr;
                    vals[idx(a, 2)] = eps < 0 ? Rational(-1) * tr : tr;
                    vals[idx(a, 1)] = CycNum::from_int(0);
                    vals[idx(a, 3)] = CycNum::from_int(0);
                }
                out.push_back(make_char(
                    G, "psi_" + std::to_string(j) + (eps > 0 ? "_p" : "_m"), std::move(vals)));
            }
        }
    } else {
        throw std::domain_error("char_table: CqC4 with rho of order < 2 is a plain product");
    }
    return out;
}

inline std::vector<Character> tensor_tables(const Group& G, const std::vector<Character>& A,
                                            int a_order, const std::vector<Character>& B,
                                            int b_order) {
    std::vector<Character> out;
    for (const auto& ca : A)
        for (const auto& cb : B) {
            std::vector<CycNum> vals(static_cast<size_t>(a_order) * b_order);
            for (int a = 0; a < a_order; ++a)
                for (int b = 0; b < b_order; ++b)
                    vals[static_cast<size_t>(a) * b_order + b] = ca.values[a] * cb.values[b];
            out.push_back(make_char(G, ca.label + "*" + cb.label, std::move(vals)));
        }
    return out;
}

std::vector<Character> char_table_impl(const Group& G, const GroupSpec& spec);

inline std::vector<Character> char_table_impl(const Group& G, const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return cyclic_table(G);
        case GroupSpec::Kind::Dihedral:
            return dihedral_table(G, spec.n);
        case GroupSpec::Kind::AccolaMaclachlan:
            return am_table(G, spec.q);
        case GroupSpec::Kind::SemidirectCqC4:
            return cq_c4_table(G, spec.q, spec.rho);
        case GroupSpec::Kind::DirectProduct: {
            // mirror the left-associative element indexing of build_group
            GroupSpec head = spec.factors[0];
            Group hg = build_group(head);
            auto acc = char_table_impl(hg, head);
            int acc_order = hg->order();
            for (size_t i = 1; i < spec.factors.size(); ++i) {
                Group fg = build_group(spec.factors[i]);
                auto ft = char_table_impl(fg, spec.factors[i]);
                acc = tensor_tables(G, acc, acc_order, ft, fg->order());
                acc_order *= fg->order();
            }
            // re-anchor the group pointer (tensor_tables already used G)
            return acc;
        }
        default:
            throw std::domain_error("char_table: unsupported family: " + spec.str());
    }
}

}  // namespace detail

// Complete complex irreducible character table for the supported families:
// cyclic groups, dihedral groups, products of supported groups,
// C_q x| C_4 (both actions) and the order-8q family of the hyperelliptic
// curve with 8(g+1) automorphisms.
inline std::vector<Character> char_table(const Group& G) {
    GroupSpec spec;
    try {
        spec = GroupSpec::parse(G->spec_tag());
    } catch (const std::exception&) {
        throw std::domain_error("char_table: unsupported family: " + G->spec_tag());
    }
    auto table = detail::char_table_impl(G, spec);
    // structural sanity: completeness of the table
    long long degree_sq = 0;
    for (const auto& c : table) degree_sq += static_cast<long long>(c.degree) * c.degree;
    if (degree_sq != G->order())
        throw CrossCheckError("char_table: sum of squared degrees mismatch for " + G->spec_tag());
    if (table.size() != conjugacy_classes(*G).size())
        throw CrossCheckError("char_table: class count mismatch for " + G->spec_tag());
    return table;
}

// exact inner product (1/|G|) sum chi1(g) * conj(chi2(g))
inline Rational inner_product(const Character& c1, const Character& c2) {
    if (c1.group != c2.group) throw std::invalid_argument("inner_product: group mismatch");
    CycNum acc = CycNum::from_int(0);
    for (int g = 0; g < c1.group->order(); ++g) acc += c1.values[g] * c2.values[g].conj();
    return (Rational(1, c1.group->order()) * acc).expect_rational("inner_product");
}

// character of the symmetric square: h -> (chi(h)^2 + chi(h^2)) / 2
inline Character sym_square_char(const Character& chi) {
    const auto& G = *chi.group;
    std::vector<CycNum> vals(G.order());
    for (int g = 0; g < G.order(); ++g) {
        CycNum sq = chi.values[g] * chi.values[g];
        vals[g] = Rational(1, 2) * (sq + chi.values[G.mul(g, g)]);
    }
    Character out;
    out.group = chi.group;
    out.label = "sym2(" + chi.label + ")";
    out.degree = chi.degree * (chi.degree + 1) / 2;
    out.values = std::move(vals);
    return out;
}

// Sum of the symmetric-square character over the whole group, computed both
// directly and through the conjugate-sum identity; disagreement throws.
inline Rational sym_sum_identity(const Character& chi) {
    const auto& G = *chi.group;
    auto sym = sym_square_char(chi);
    CycNum direct = CycNum::from_int(0);
    for (int g = 0; g < G.order(); ++g) direct += sym.values[g];
    Rational lhs = direct.expect_rational("sym_sum_identity: direct sum");

    Character doubled;
    doubled.group = chi.group;
    doubled.label = chi.label + "+conj";
    doubled.degree = 2 * chi.degree;
    doubled.values.resize(G.order());
    for (int g = 0; g < G.order(); ++g) doubled.values[g] = chi.values[g] + chi.values[g].conj();
    auto dsym = sym_square_char(doubled);
    CycNum dsum = CycNum::from_int(0);
    for (int g = 0; g < G.order(); ++g) dsum += dsym.values[g];
    Rational rhs = Rational(1, 2) * (dsum.expect_rational("sym_sum_identity: conjugate sum") -
                                     Rational(G.order()) * inner_product(chi, chi));
    if (lhs != rhs)
        throw CrossCheckError("sym_sum_identity: the two summation routes disagree for " +
                              chi.label);
    return lhs;
}

// dimension of the subspace fixed by the subgroup H: (1/|H|) sum_{h in H} chi(h)
inline long long fixed_dim(const Character& chi, const std::vector<int>& subgroup_elements) {
    if (subgroup_elements.empty()) throw std::invalid_argument("fixed_dim: empty subgroup");
    CycNum acc = CycNum::from_int(0);
    for (int h : subgroup_elements) acc += chi.values[h];
    Rational r = Rational(1, static_cast<long long>(subgroup_elements.size())) *
                 acc.expect_rational("fixed_dim");
    if (!r.is_integer() || r.sign() < 0)
        throw std::invalid_argument("fixed_dim: non-integral value; input is not a subgroup or " +
                                    chi.label + " is not a character");
    return r.to_int64();
}

// Galois orbit of complex irreducibles; one rational irreducible each.
struct RationalIrrep {
    std::vector<Character> constituents;  // closed under the Galois action
    int m = 0;      // [Q(chi) : Q] = orbit size
    int schur = 1;  // Schur index (1 for every family handled here)
    int d = 0;      // common degree of the constituents
    int n = 0;      // d / schur
    std::string label;

    bool is_trivial() const {
        if (d != 1 || constituents.size() != 1) return false;
        for (const auto& v : constituents[0].values)
            if (!(v == CycNum::from_int(1))) return false;
        return true;
    }
};

inline std::vector<RationalIrrep> rational_irreps(const Group& G) {
    auto table = char_table(G);
    long long N = 1;
    for (int g = 0; g < G->order(); ++g)
        N = std::lcm(N, static_cast<long long>(G->element_order(g)));

    auto same = [&](const Character& a, const Character& b) {
        for (int g = 0; g < G->order(); ++g)
            if (!(a.values[g] == b.values[g])) return false;
        return true;
    };

    std::vector<bool> used(table.size(), false);
    std::vector<RationalIrrep> out;
    for (size_t i = 0; i < table.size(); ++i) {
        if (used[i]) continue;
        RationalIrrep w;
        w.label = table[i].label;
        w.d = table[i].degree;
        std::vector<size_t> members = {i};
        used[i] = true;
        for (long long k = 2; k < N; ++k) {
            if (std::gcd(k, N) != 1) continue;
            Character img = table[i];
            img.label = table[i].label;
            for (auto& v : img.values) v = v.galois(k);
            for (size_t j = 0; j < table.size(); ++j) {
                if (used[j]) continue;
                if (table[j].degree == w.d && same(img, table[j])) {
                    used[j] = true;
                    members.push_back(j);
                    break;
                }
            }
        }
        std::sort(members.begin(), members.end());
        for (size_t j : members) w.constituents.push_back(table[j]);
        w.m = static_cast<int>(w.constituents.size());
        w.schur = 1;  // all families in scope carry trivial Schur index
        w.n = w.d / w.schur;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace sa
