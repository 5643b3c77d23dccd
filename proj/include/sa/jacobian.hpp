#pragma once

#include "sa/characters.hpp"
#include "sa/generating_vectors.hpp"

namespace sa {

namespace detail {

// Multiplicity of the eigenvalue zeta_m^j (j = 0..m-1) of rho(c), recovered
// exactly from the character values on the cyclic group generated by c via
// inverse discrete Fourier transform. Arithmetic runs modulo x^L - 1 so the
// root-of-unity shifts are index rotations; reduction happens once per j.
inline std::vector<long long> eigenvalue_multiplicities(const Group& G, const Character& chi,
                                                        int c) {
    const int m = G->element_order(c);
    long long L = m;
    std::vector<CycNum> on_cycle(m);
    {
        int e = G->identity();
        for (int t = 0; t < m; ++t) {
            on_cycle[t] = chi.values[e];
            L = std::lcm(L, static_cast<long long>(on_cycle[t].conductor()));
            e = G->mul(e, c);
        }
    }
    const int Li = static_cast<int>(L);
    // lift each value to raw cyclic coefficients of conductor L
    std::vector<std::vector<Rational>> raw(m, std::vector<Rational>(Li, Rational(0)));
    for (int t = 0; t < m; ++t) {
        int f = Li / on_cycle[t].conductor();
        const auto& cf = on_cycle[t].coeffs();
        for (size_t i = 0; i < cf.size(); ++i)
            if (!cf[i].is_zero()) raw[t][i * f] = cf[i];
    }
    std::vector<long long> counts(m, 0);
    long long checksum = 0;
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> acc(Li, Rational(0));
        for (int t = 0; t < m; ++t) {
            // multiply by zeta_m^(-jt) = zeta_L^(-jt L/m): a cyclic shift
            long long shift = ((-static_cast<long long>(j) * t % m) + m) % m * (L / m);
            for (int i = 0; i < Li; ++i)
                if (!raw[t][i].is_zero()) acc[(i + shift) % Li] += raw[t][i];
        }
        Rational nj = Rational(1, m) * CycNum::from_cyclic_coeffs(Li, std::move(acc))
                                           .expect_rational("eigenvalue multiplicity");
        if (!nj.is_integer() || nj.sign() < 0)
            throw CrossCheckError("eigenvalue_multiplicities: non-integral count for " + chi.label);
        counts[j] = nj.to_int64();
        checksum += counts[j];
    }
    if (checksum != chi.degree)
        throw CrossCheckError("eigenvalue_multiplicities: counts do not sum to the degree");
    return counts;
}

}  // namespace detail

// Multiplicities of each complex irreducible inside the action on
// holomorphic one-forms, for a genus-zero quotient.
struct AnalyticDecomposition {
    GeneratingVector vector;
    int genus = 0;
    std::map<std::string, long long> mu;  // irreducible label -> multiplicity
    Character analytic_character;         // sum mu * chi
};

inline AnalyticDecomposition chevalley_weil(const GeneratingVector& v) {
    const Group& G = v.group;
    const Signature sigma = v.signature();
    if (sigma.gamma != 0)
        throw std::invalid_argument("chevalley_weil: only genus-zero quotients supported");
    Rational genus_r = rh_genus(G->order(), sigma);
    if (!genus_r.is_integer())
        throw std::invalid_argument("chevalley_weil: signature has non-integral genus");
    const long long genus = genus_r.to_int64();

    auto table = char_table(G);
    AnalyticDecomposition out;
    out.vector = v;
    out.genus = static_cast<int>(genus);

    std::vector<CycNum> analytic(G->order(), CycNum::from_int(0));
    long long dim_check = 0;
    for (const auto& chi : table) {
        bool trivial = true;
        for (const auto& val : chi.values)
            if (!(val == CycNum::from_int(1))) { trivial = false; break; }
        long long mu = 0;
        if (!trivial) {
            Rational acc(-chi.degree);
            for (size_t l = 0; l < v.images.size(); ++l) {
                int c = v.images[l];
                int m = G->element_order(c);
                auto counts = detail::eigenvalue_multiplicities(G, chi, c);
                for (int j = 1; j < m; ++j)  // j = m carries weight 0
                    acc += Rational(counts[j]) * Rational(m - j, m);
            }
            if (!acc.is_integer() || acc.sign() < 0)
                throw CrossCheckError("chevalley_weil: non-integral multiplicity for " + chi.label);
            mu = acc.to_int64();
        }
        out.mu[chi.label] = mu;
        dim_check += mu * chi.degree;
        if (mu != 0)
            for (int g = 0; g < G->order(); ++g)
                analytic[g] += Rational(mu) * chi.values[g];
    }
    if (dim_check != genus)
        throw CrossCheckError("chevalley_weil: multiplicities do not add up to the genus");

    out.analytic_character.group = G;
    out.analytic_character.label = "analytic";
    out.analytic_character.degree = static_cast<int>(genus);
    out.analytic_character.values = std::move(analytic);
    return out;
}

struct IsogenyFactor {
    RationalIrrep irrep;
    int n = 0;          // power of the repeated subvariety
    long long dim = 0;  // dimension of one repeated subvariety
};

struct IsogenyDecomposition {
    GeneratingVector vector;
    int genus = 0;
    std::vector<IsogenyFactor> factors;  // zero-dimensional factors retained
};

// Group algebra decomposition: one factor per rational irreducible, with
// dim = m * [ d*(gamma-1) + (1/2) sum_j (d - dim Fix(<theta(x_j)>)) ].
inline IsogenyDecomposition group_algebra_decomposition(const GeneratingVector& v) {
    const Group& G = v.group;
    const Signature sigma = v.signature();
    if (sigma.gamma != 0)
        throw std::invalid_argument("group_algebra_decomposition: genus-zero quotients only");
    Rational genus_r = rh_genus(G->order(), sigma);
    IsogenyDecomposition out;
    out.vector = v;
    out.genus = static_cast<int>(genus_r.to_int64());

    long long total = 0;
    for (auto& w : rational_irreps(G)) {
        IsogenyFactor f;
        f.n = w.n;
        if (w.is_trivial()) {
            f.dim = 0;  // equals the quotient genus, zero here
        } else {
            const Character& chi = w.constituents.front();
            Rational dim(-w.d);  // d * (gamma - 1) with gamma = 0
            for (int c : v.images) {
                auto sub = subgroup_generated(*G, {c});
                dim += Rational(1, 2) * Rational(w.d - fixed_dim(chi, sub));
            }
            dim = Rational(w.m) * dim;
            if (!dim.is_integer() || dim.sign() < 0)
                throw CrossCheckError("group_algebra_decomposition: bad dimension for " + w.label);
            f.dim = dim.to_int64();
        }
        total += static_cast<long long>(f.n) * f.dim;
        f.irrep = std::move(w);
        out.factors.push_back(std::move(f));
    }
    if (total != out.genus)
        throw CrossCheckError("group_algebra_decomposition: dimension bookkeeping failure");
    return out;
}

// Exponents of the induced decomposition of the quotient Jacobian J(S/H).
struct QuotientExponent {
    std::string label;
    int n_h = 0;
    long long dim = 0;
};

inline std::vector<QuotientExponent> quotient_decomposition(const IsogenyDecomposition& dec,
                                                            const std::vector<int>& subgroup) {
    const Group& G = dec.vector.group;
    auto elems = subgroup_generated(*G, subgroup);
    std::vector<QuotientExponent> out;
    for (const auto& f : dec.factors) {
        QuotientExponent e;
        e.label = f.irrep.label;
        e.dim = f.dim;
        if (f.irrep.is_trivial()) {
            e.n_h = 1;
        } else {
            long long dh = fixed_dim(f.irrep.constituents.front(), elems);
            if (dh % f.irrep.schur != 0)
                throw CrossCheckError("quotient_decomposition: non-integral exponent");
            e.n_h = static_cast<int>(dh / f.irrep.schur);
        }
        out.push_back(e);
    }
    return out;
}

// Dimension of the fixed locus in Siegel space through the corresponding
// Jacobian, computed by two independent routes that must agree.
struct NsReport {
    GeneratingVector vector;
    long long N = 0;
    Rational via_inner_product;
    Rational via_conjugate_sum;
};

inline NsReport moduli_fixed_dim(const GeneratingVector& v) {
    auto cw = chevalley_weil(v);
    const Group& G = v.group;
    const Character& chi = cw.analytic_character;

    // route 1: <sym^2 chi | 1>
    auto sym = sym_square_char(chi);
    CycNum acc = CycNum::from_int(0);
    for (int g = 0; g < G->order(); ++g) acc += sym.values[g];
    Rational n1 = Rational(1, G->order()) * acc.expect_rational("moduli_fixed_dim");

    // route 2: (1/2|G|) [ sum (chi + conj chi)^sym - |G| <chi|chi> ]
    Character doubled;
    doubled.group = v.group;
    doubled.label = chi.label + "+conj";
    doubled.degree = 2 * chi.degree;
    doubled.values.resize(G->order());
    for (int g = 0; g < G->order(); ++g) doubled.values[g] = chi.values[g] + chi.values[g].conj();
    auto dsym = sym_square_char(doubled);
    CycNum dacc = CycNum::from_int(0);
    for (int g = 0; g < G->order(); ++g) dacc += dsym.values[g];
    Rational n2 = Rational(1, 2 * G->order()) *
                  (dacc.expect_rational("moduli_fixed_dim: conjugate sum") -
                   Rational(G->order()) * inner_product(chi, chi));

    // built-in oracle for the summation identity on every analytic character
    sym_sum_identity(chi);

    if (n1 != n2 || !n1.is_integer() || n1.sign() < 0)
        throw CrossCheckError("moduli_fixed_dim: computation routes disagree");
    NsReport rep;
    rep.vector = v;
    rep.N = n1.to_int64();
    rep.via_inner_product = n1;
    rep.via_conjugate_sum = n2;
    return rep;
}

}  // namespace sa
