#pragma once

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sa/classify.hpp"
#include "sa/curve_models.hpp"
#include "sa/siegel.hpp"

namespace sa {

using ordered_json = nlohmann::ordered_json;

// complex rendering with 12 significant digits
inline std::string complex_str(const cdouble& v) {
    std::ostringstream os;
    os << std::setprecision(12) << v.real();
    if (v.imag() >= 0) os << "+" << std::setprecision(12) << v.imag() << "i";
    else os << "-" << std::setprecision(12) << -v.imag() << "i";
    return os.str();
}

inline ordered_json to_json(const GeneratingVector& v) {
    ordered_json j;
    j["group"] = v.group->spec_tag();
    j["sigma"] = v.signature().str();
    j["images"] = v.images;
    return j;
}

inline GeneratingVector vector_from_json(const ordered_json& j) {
    Group g = build_group(j.at("group").get<std::string>());
    std::vector<int> images = j.at("images").get<std::vector<int>>();
    Signature sigma = Signature::parse(j.at("sigma").get<std::string>());
    if (!is_valid_vector(g, sigma, images))
        throw std::invalid_argument("vector_from_json: not a valid generating vector");
    return GeneratingVector{g, std::move(images)};
}

inline ordered_json to_json(const DecomposeReport& rep) {
    ordered_json j;
    j["vector"] = to_json(rep.vector);
    j["genus"] = rep.decomposition.genus;
    ordered_json mu = ordered_json::object();
    for (const auto& [label, m] : rep.analytic.mu) mu[label] = m;
    j["mu"] = mu;
    ordered_json factors = ordered_json::array();
    for (const auto& f : rep.decomposition.factors) {
        ordered_json jf;
        jf["irrep"] = f.irrep.label;
        jf["n"] = f.n;
        jf["dimB"] = f.dim;
        jf["m"] = f.irrep.m;
        jf["degree"] = f.irrep.d;
        factors.push_back(jf);
    }
    j["factors"] = factors;
    j["N"] = rep.ns.N;
    return j;
}

inline ordered_json to_json(const ClassifyReport& rep) {
    ordered_json j;
    j["q"] = rep.q;
    j["genus"] = rep.genus;
    ordered_json lam = ordered_json::object();
    for (const auto& [lambda, summaries] : rep.pairs_by_lambda) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : summaries) {
            ordered_json js;
            js["group"] = s.group_tag;
            js["sigma"] = s.sigma.str();
            js["vectors"] = s.vector_count;
            js["orbits"] = s.orbit_count;
            js["classes_after_identification"] = s.merged_count;
            js["extendable_orbits"] = s.extensions_checked ? ordered_json(s.extendable)
                                                           : ordered_json(nullptr);
            js["family_dim"] = s.family_dim;
            arr.push_back(js);
        }
        lam[std::to_string(lambda)] = arr;
    }
    j["lambda"] = lam;
    ordered_json strata;
    strata["X8"] = rep.x8_count;
    strata["X4"] = rep.x4_count;
    strata["X3"] = rep.x3_count;
    strata["X2k"] = rep.x2k_count;
    strata["K"] = rep.k_strata;
    strata["Cq_only_classes"] = rep.cq_classes;
    j["strata"] = strata;
    return j;
}

inline ordered_json to_json(const CurveModel& m) {
    ordered_json j;
    j["family"] = m.family;
    j["q"] = m.q;
    j["equation"] = m.equation;
    j["automorphisms"] = m.automorphism_generators;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    j["parameters"] = params;
    return j;
}

// table dump: one row per irreducible with values at class representatives
inline ordered_json char_table_json(const Group& g) {
    auto table = char_table(g);
    auto classes = conjugacy_classes(*g);
    ordered_json j;
    j["group"] = g->spec_tag();
    ordered_json reps = ordered_json::array();
    for (const auto& cls : classes) reps.push_back(g->element_name(cls.front()));
    j["class_representatives"] = reps;
    ordered_json rows = ordered_json::array();
    for (const auto& chi : table) {
        ordered_json row;
        row["label"] = chi.label;
        row["degree"] = chi.degree;
        ordered_json vals = ordered_json::array();
        for (const auto& cls : classes) vals.push_back(chi.values[cls.front()].str());
        row["values"] = vals;
        rows.push_back(row);
    }
    j["characters"] = rows;
    return j;
}

inline ordered_json to_json(const SiegelPoint& p) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < p.g; ++i) {
        ordered_json row = ordered_json::array();
        for (int jj = 0; jj < p.g; ++jj)
            row.push_back(ordered_json::array({p.z(i, jj).real(), p.z(i, jj).imag()}));
        rows.push_back(row);
    }
    return rows;
}

inline ordered_json to_json(const FixedPointReport& rep) {
    ordered_json j;
    ordered_json gens = ordered_json::array();
    for (const auto& R : rep.generators) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < 2 * R.g; ++i) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < 2 * R.g; ++c) row.push_back(R.at(i, c));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    j["generators"] = gens;
    j["Z"] = to_json(rep.solution);
    j["residual_norms"] = rep.residual_norms;
    j["k"] = ordered_json::array({rep.k.real(), rep.k.imag()});
    j["family_dimension"] = rep.family_dimension;
    j["min_im_eigenvalue"] = rep.solution.min_im_eigenvalue;
    j["converged_starts"] = rep.converged_starts;
    j["relations"] = ordered_json{{"all_hold", rep.relations.all_hold},
                                  {"max_defect", rep.relations.max_defect},
                                  {"quartic_defect", rep.relations.quartic_defect},
                                  {"rejection_filter_ok", rep.relations.rejection_filter_ok}};
    return j;
}

}  // namespace sa
