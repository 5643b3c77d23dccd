#pragma once

#include "sa/generating_vectors.hpp"

namespace sa {

// One admissible-and-realised pair for a given group order.
struct FeasibilityEntry {
    Group group;
    Signature sigma;
    long long vector_count = 0;  // number of valid generating vectors
};

struct FeasibilityReport {
    int q = 0;
    // lambda -> confirmed (group, signature) pairs; empty list = not realisable
    std::map<int, std::vector<FeasibilityEntry>> by_lambda;

    std::vector<int> realizable_lambdas() const {
        std::vector<int> out;
        for (const auto& [lam, entries] : by_lambda)
            if (!entries.empty()) out.push_back(lam);
        return out;
    }
};

// For each lambda in 1..8, screens all groups of order lambda*q against all
// admissible signatures at genus q-1 and keeps the pairs realised by at least
// one surface-kernel epimorphism.
inline FeasibilityReport lambda_feasibility(int q) {
    if (!is_prime(q) || q < 7)
        throw std::invalid_argument("lambda_feasibility: q must be a prime >= 7");
    const int genus = q - 1;
    FeasibilityReport report;
    report.q = q;
    for (int lambda = 1; lambda <= 8; ++lambda) {
        std::vector<FeasibilityEntry> entries;
        for (const auto& G : detail::groups_of_order_lambda_q(lambda, q)) {
            for (const auto& sigma : admissible_signatures(*G, genus)) {
                if (sigma.gamma != 0 || sigma.s() > 6) continue;  // outside enumeration bounds
                auto vecs = enumerate_vectors(G, sigma);
                if (!vecs.empty())
                    entries.push_back({G, sigma, static_cast<long long>(vecs.size())});
            }
        }
        report.by_lambda[lambda] = std::move(entries);
    }
    return report;
}

}  // namespace sa
