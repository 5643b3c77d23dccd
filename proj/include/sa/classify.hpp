#pragma once

#include "sa/feasibility.hpp"
#include "sa/jacobian.hpp"

namespace sa {

// Orbit summary for one realised (group, signature) pair.
struct PairSummary {
    std::string group_tag;
    Signature sigma;
    long long vector_count = 0;
    int orbit_count = 0;
    int merged_count = 0;     // after the normalizer identification
    int extendable = 0;       // orbits whose action extends
    int family_dim = 0;       // Teichmueller dimension of the signature
    bool extensions_checked = false;
};

// Full classification picture at genus q - 1.
struct ClassifyReport {
    int q = 0;
    int genus = 0;
    FeasibilityReport feasibility;
    std::map<int, std::vector<PairSummary>> pairs_by_lambda;

    // counts shaped like the classification statement
    int x8_count = 0;   // the curve with 8(g+1) automorphisms
    int x4_count = 0;   // quartic semidirect action, q = 1 mod 4 only
    int x3_count = 0;   // the order-3q action
    int x2k_count = 0;  // maximal order-2q abelian actions
    int k_strata = 0;   // dihedral one-dimensional strata (one of them doubles)
    int cq_classes = 0; // order-q cyclic action classes at lambda = 1
};

inline ClassifyReport classify(int q) {
    if (!is_prime(q) || q < 7 || q > 23)
        throw std::invalid_argument("classify: q must be a prime with 7 <= q <= 23");
    ClassifyReport rep;
    rep.q = q;
    rep.genus = q - 1;
    rep.feasibility = lambda_feasibility(q);

    for (const auto& [lambda, entries] : rep.feasibility.by_lambda) {
        std::vector<PairSummary> summaries;
        for (const auto& e : entries) {
            PairSummary s;
            s.group_tag = e.group->spec_tag();
            s.sigma = e.sigma;
            s.vector_count = e.vector_count;
            s.family_dim = teich_dim(e.sigma);

            bool want_extensions = true;
            OrbitReport orbs;
            try {
                orbs = orbits(e.group, e.sigma, want_extensions);
                s.extensions_checked = true;
            } catch (const std::invalid_argument&) {
                // signature outside the extension table (the lambda = 1 case)
                orbs = orbits(e.group, e.sigma, false);
                s.extensions_checked = false;
            }
            s.orbit_count = static_cast<int>(orbs.orbits.size());
            s.merged_count = merged_class_count(orbs);
            for (const auto& o : orbs.orbits)
                if (o.extension) ++s.extendable;

            // classification-shaped bookkeeping
            const auto& p = e.sigma.periods;
            if (lambda == 8 && p == std::vector<int>{2, 4, 2 * q}) rep.x8_count = s.orbit_count;
            if (lambda == 3) rep.x3_count = s.orbit_count;
            if (lambda == 1) rep.cq_classes = s.orbit_count;
            if (lambda == 2 && p == std::vector<int>{q, 2 * q, 2 * q})
                rep.x2k_count = s.orbit_count - s.extendable;
            if (lambda == 2 && p == std::vector<int>{2, 2, q, q} && s.group_tag[0] == 'D')
                rep.k_strata = s.orbit_count;
            if (lambda == 4 && p == std::vector<int>{4, 4, q} &&
                s.group_tag.rfind("CqC4", 0) == 0) {
                // only the action with rho of multiplicative order four is maximal
                auto spec = GroupSpec::parse(s.group_tag);
                long long r2 = static_cast<long long>(spec.rho) * spec.rho % q;
                if (r2 == q - 1) rep.x4_count = s.merged_count;
            }
            summaries.push_back(std::move(s));
        }
        rep.pairs_by_lambda[lambda] = std::move(summaries);
    }
    return rep;
}

// Everything the pipeline computes for one generating vector.
struct DecomposeReport {
    GeneratingVector vector;
    AnalyticDecomposition analytic;
    IsogenyDecomposition decomposition;
    NsReport ns;
};

inline DecomposeReport decompose_vector(const GeneratingVector& v) {
    DecomposeReport rep;
    rep.vector = v;
    rep.analytic = chevalley_weil(v);
    rep.decomposition = group_algebra_decomposition(v);
    rep.ns = moduli_fixed_dim(v);
    return rep;
}

}  // namespace sa
