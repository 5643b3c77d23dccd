#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sa/serialization.hpp"

using namespace sa;

namespace {

std::ostream* g_out = &std::cout;
std::ofstream g_file;

void set_output(const std::string& path) {
    if (path.empty()) return;
    g_file.open(path);
    if (!g_file) throw std::invalid_argument("cannot open output file: " + path);
    g_out = &g_file;
}

std::vector<int> parse_images(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return out;
}

void print_decompose_table(std::ostream& os, const DecomposeReport& rep, bool with_ns) {
    const auto& v = rep.vector;
    os << "group " << v.group->spec_tag() << "  sigma " << v.signature().str() << "\n";
    os << "vector " << v.str() << "  images [";
    for (size_t i = 0; i < v.images.size(); ++i) os << (i ? "," : "") << v.images[i];
    os << "]\n";
    os << "genus " << rep.decomposition.genus << "\n";
    os << "analytic multiplicities:";
    for (const auto& [label, mu] : rep.analytic.mu)
        if (mu) os << "  " << label << ":" << mu;
    os << "\n";
    os << "isogeny decomposition: J ~";
    bool first = true;
    for (const auto& f : rep.decomposition.factors) {
        if (f.dim == 0) continue;
        os << (first ? " " : " x ") << "B[" << f.irrep.label << "]^" << f.n
           << " (dim " << f.dim << ")";
        first = false;
    }
    if (first) os << " 0";
    os << "\n";
    os << "zero factors:";
    for (const auto& f : rep.decomposition.factors)
        if (f.dim == 0) os << " " << f.irrep.label;
    os << "\n";
    if (with_ns)
        os << "N = " << rep.ns.N << "  (both computation routes agree: "
           << rep.ns.via_inner_product.str() << ")\n";
}

int cmd_classify(int q, const std::string& format) {
    auto rep = classify(q);
    if (format == "json") {
        *g_out << to_json(rep).dump(2) << "\n";
        return 0;
    }
    *g_out << "q = " << rep.q << "  genus = " << rep.genus << "\n";
    *g_out << "lambda  realizable pairs\n";
    for (const auto& [lambda, summaries] : rep.pairs_by_lambda) {
        *g_out << lambda << "       ";
        if (summaries.empty()) {
            *g_out << "none\n";
            continue;
        }
        bool first = true;
        for (const auto& s : summaries) {
            if (!first) *g_out << "; ";
            first = false;
            *g_out << s.group_tag << " " << s.sigma.str() << " [orbits " << s.orbit_count;
            if (s.merged_count != s.orbit_count) *g_out << ", classes " << s.merged_count;
            if (s.extensions_checked && s.extendable)
                *g_out << ", " << s.extendable << " extendable";
            *g_out << ", dim " << s.family_dim << "]";
        }
        *g_out << "\n";
    }
    *g_out << "strata: X8=" << rep.x8_count << " X4=" << rep.x4_count << " X3=" << rep.x3_count
           << " X2k=" << rep.x2k_count << " K=" << rep.k_strata
           << " (one K stratum carries the doubled dihedral symmetry)\n";
    *g_out << "order-q-only classes: " << rep.cq_classes << "\n";
    return 0;
}

int cmd_decompose(const std::string& group_spec, const std::string& sigma_text,
                  const std::string& images_text, bool all, const std::string& format,
                  bool ns_only) {
    Group g = build_group(group_spec);
    Signature sigma = Signature::parse(sigma_text);
    std::vector<GeneratingVector> targets;
    if (all) {
        auto rep = orbits(g, sigma, false);
        for (const auto& o : rep.orbits) targets.push_back(o.representative);
    } else if (!images_text.empty()) {
        auto images = parse_images(images_text);
        if (!is_valid_vector(g, sigma, images))
            throw std::invalid_argument("decompose: images do not form a valid vector");
        targets.push_back(GeneratingVector{g, images});
    } else {
        throw std::invalid_argument("decompose: provide --images or --all");
    }
    ordered_json arr = ordered_json::array();
    for (const auto& v : targets) {
        auto rep = decompose_vector(v);
        if (format == "json") {
            arr.push_back(to_json(rep));
        } else if (ns_only) {
            *g_out << "vector " << v.str() << "  N = " << rep.ns.N << "\n";
        } else {
            print_decompose_table(*g_out, rep, true);
            *g_out << "\n";
        }
    }
    if (format == "json") *g_out << arr.dump(2) << "\n";
    return 0;
}

int cmd_period_matrix(bool am, int genus, unsigned long long seed, int starts,
                      const std::string& format) {
    if (!am || genus != 4)
        throw std::invalid_argument(
            "period-matrix: only --accola-maclachlan --genus 4 is available");
    auto [rx, rz] = accola_maclachlan_genus4_generators();
    if (!is_symplectic(rx) || !is_symplectic(rz))
        throw CrossCheckError("period-matrix: stored generators are not symplectic");
    FixedPointOptions opts;
    opts.seed = seed;
    opts.starts = starts;
    auto rep = fixed_points({rx, rz}, opts);
    auto chk = verify_am_relations(rep);
    if (format == "json") {
        *g_out << to_json(rep).dump(2) << "\n";
    } else {
        *g_out << "period matrix (I_4 Z) of the genus-4 curve with 40 automorphisms\n";
        *g_out << "Z =\n";
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) *g_out << "  " << complex_str(rep.solution.z(i, j));
            *g_out << "\n";
        }
        *g_out << "residuals:";
        for (double r : rep.residual_norms) *g_out << " " << r;
        *g_out << "\nmin eigenvalue of Im(Z): " << rep.solution.min_im_eigenvalue << "\n";
        *g_out << "parameter k = " << complex_str(rep.k) << "\n";
        *g_out << "entry relations hold: " << (chk.all_hold ? "yes" : "NO")
               << "  (max defect " << chk.max_defect << ", quartic defect "
               << chk.quartic_defect << ")\n";
        *g_out << "root rejection filter isolates the solution: "
               << (chk.rejection_filter_ok ? "yes" : "NO") << "\n";
    }
    if (!chk.all_hold) throw CrossCheckError("period-matrix: relation check failed");
    return 0;
}

int cmd_curve_model(const std::string& tag, int q, const std::string& format) {
    auto m = curve_model(tag, q);
    if (format == "json") {
        *g_out << to_json(m).dump(2) << "\n";
        return 0;
    }
    *g_out << "family " << m.family << "  q = " << m.q << "\n";
    *g_out << m.equation << "\n";
    for (const auto& a : m.automorphism_generators) *g_out << "  " << a << "\n";
    for (const auto& [k, v] : m.parameters) *g_out << "  " << k << " = " << v << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification and Jacobian decomposition of prime-order-heavy "
                 "group actions on Riemann surfaces of genus q-1"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_file, format = "table";
    app.add_option("--out", out_file, "write output to a file");
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));

    int q = 0;
    auto* c_classify = app.add_subcommand("classify", "realizable group orders at genus q-1");
    c_classify->add_option("--q", q, "prime, 7 <= q <= 23")->required();

    std::string group_spec, sigma_text, images_text;
    bool all = false;
    auto* c_dec = app.add_subcommand("decompose", "isogeny decomposition of the Jacobian");
    c_dec->add_option("--group", group_spec, "group spec, e.g. AM:q=5 or D:5x2")->required();
    c_dec->add_option("--sigma", sigma_text, "signature, e.g. \"(0;2,4,10)\"")->required();
    c_dec->add_option("--images", images_text, "comma-separated element indices");
    c_dec->add_flag("--all", all, "run every orbit representative");

    auto* c_ns = app.add_subcommand("ns", "dimension of the fixed locus in Siegel space");
    c_ns->add_option("--group", group_spec)->required();
    c_ns->add_option("--sigma", sigma_text)->required();
    c_ns->add_option("--images", images_text);
    c_ns->add_flag("--all", all);

    bool am_flag = false;
    int genus = 0, starts = 64;
    unsigned long long seed = 20240901ull;
    auto* c_pm = app.add_subcommand("period-matrix", "numeric period matrix via Newton iteration");
    c_pm->add_flag("--accola-maclachlan", am_flag, "the maximal-automorphism curve");
    c_pm->add_option("--genus", genus)->required();
    c_pm->add_option("--seed", seed, "random seed for the Newton starts");
    c_pm->add_option("--starts", starts, "number of Newton starts");

    std::string family_tag;
    int cq = 0;
    auto* c_cm = app.add_subcommand("curve-model", "plane model of a classified family");
    c_cm->add_option("family", family_tag, "C_g | X8 | X4 | X3 | X2k | K_g")->required();
    c_cm->add_option("--q", cq, "prime >= 5")->required();

    std::string table_group;
    auto* c_ct = app.add_subcommand("char-table", "irreducible character table");
    c_ct->add_option("--group", table_group, "group spec")->required();

    try {
        app.parse(argc, argv);
        set_output(out_file);
        if (*c_classify) return cmd_classify(q, format);
        if (*c_dec) return cmd_decompose(group_spec, sigma_text, images_text, all, format, false);
        if (*c_ns) return cmd_decompose(group_spec, sigma_text, images_text, all, format, true);
        if (*c_pm) return cmd_period_matrix(am_flag, genus, seed, starts, format);
        if (*c_cm) return cmd_curve_model(family_tag, cq, format);
        if (*c_ct) {
            *g_out << char_table_json(build_group(table_group)).dump(2) << "\n";
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const CrossCheckError& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
