#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>

#include "sa/errors.hpp"
#include "sa/linalg.hpp"

namespace sa {

// Integer matrix preserving the standard symplectic form, block layout
// R = [[A, B], [C, D]] with g x g blocks.
struct SymplecticMatrix {
    int g = 0;
    std::vector<long long> entries;  // (2g)^2, row major

    SymplecticMatrix() = default;
    SymplecticMatrix(int genus, std::vector<long long> e) : g(genus), entries(std::move(e)) {
        if (entries.size() != static_cast<size_t>(4) * g * g)
            throw std::invalid_argument("SymplecticMatrix: size mismatch");
    }

    long long at(int r, int c) const { return entries[static_cast<size_t>(r) * 2 * g + c]; }

    CMat block(int br, int bc) const {  // 0 = first block row/col
        CMat m(g, g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                m(i, j) = static_cast<double>(at(br * g + i, bc * g + j));
        return m;
    }

    friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
        int n = 2 * x.g;
        std::vector<long long> e(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                long long v = x.at(i, k);
                if (!v) continue;
                for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] += v * y.at(k, j);
            }
        return SymplecticMatrix(x.g, std::move(e));
    }

    // R^-1 = -J R^t J, exact in integers
    SymplecticMatrix inverse() const {
        int n = 2 * g;
        std::vector<long long> e(static_cast<size_t>(n) * n, 0);
        // (-J R^t J)[i][j]: with J = [[0, I], [-I, 0]]
        auto sgn_idx = [&](int i) { return i < g ? std::pair(i + g, 1) : std::pair(i - g, -1); };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto [ri, si] = sgn_idx(i);
                auto [rj, sj] = sgn_idx(j);
                e[static_cast<size_t>(i) * n + j] = -si * sj * at(rj, ri);
            }
        return SymplecticMatrix(g, std::move(e));
    }
};

inline bool is_symplectic(const SymplecticMatrix& R) {
    int g = R.g, n = 2 * g;
    // (R^t J R)[i][j] = sum_k R[k][i] * (J R)[k][j]
    auto jr = [&](int k, int j) -> long long {
        return k < g ? R.at(k + g, j) : -R.at(k - g, j);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long acc = 0;
            for (int k = 0; k < n; ++k) acc += R.at(k, i) * jr(k, j);
            long long want = 0;
            if (j == i + g) want = 1;
            if (j == i - g) want = -1;
            if (acc != want) return false;
        }
    return true;
}

// Point of the Siegel upper half-space: symmetric with positive definite
// imaginary part, with cached diagnostics.
struct SiegelPoint {
    int g = 0;
    CMat z;
    double symmetry_defect = 0;
    double min_im_eigenvalue = 0;

    static SiegelPoint from_matrix(const CMat& m, bool enforce = true) {
        SiegelPoint p;
        p.g = m.rows();
        p.z = m;
        double defect = 0;
        for (int i = 0; i < p.g; ++i)
            for (int j = 0; j < p.g; ++j) defect = std::max(defect, std::abs(m(i, j) - m(j, i)));
        p.symmetry_defect = defect;
        std::vector<std::vector<double>> im(p.g, std::vector<double>(p.g));
        for (int i = 0; i < p.g; ++i)
            for (int j = 0; j < p.g; ++j) im[i][j] = m(i, j).imag();
        p.min_im_eigenvalue = symmetric_eigenvalues(im).front();
        if (enforce) {
            if (defect >= 1e-10)
                throw std::invalid_argument("SiegelPoint: matrix is not symmetric");
            if (p.min_im_eigenvalue <= 0)
                throw std::invalid_argument("SiegelPoint: imaginary part not positive definite");
        }
        return p;
    }
};

// The action R . Z = (A + Z C)^-1 (B + Z D). The convention probe below
// determines how it composes; see action_composition_order().
inline SiegelPoint act(const SymplecticMatrix& R, const SiegelPoint& Z,
                       double* condition_estimate = nullptr) {
    CMat A = R.block(0, 0), B = R.block(0, 1), C = R.block(1, 0), D = R.block(1, 1);
    CMat M = A + Z.z * C;
    double cond = 0;
    CMat Minv = inverse(M, &cond);
    if (condition_estimate) *condition_estimate = cond;
    if (cond > 1e12) throw std::domain_error("act: A + Z C is near-singular");
    return SiegelPoint::from_matrix(Minv * (B + Z.z * D));
}

enum class CompositionOrder {
    apply_left_factor_first,   // act(R1 R2, Z) = act(R2, act(R1, Z))
    apply_right_factor_first,  // act(R1 R2, Z) = act(R1, act(R2, Z))
};

// Empirically determines the composition law of the action formula on
// random products of symplectic matrices.
inline CompositionOrder action_composition_order();

namespace detail {

inline int sym_dim(int g) { return g * (g + 1) / 2; }

inline CMat unpack_symmetric(int g, const std::vector<cdouble>& u) {
    CMat z(g, g);
    int t = 0;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            z(i, j) = u[t];
            z(j, i) = u[t];
            ++t;
        }
    return z;
}

inline std::vector<cdouble> pack_symmetric(const CMat& z) {
    int g = z.rows();
    std::vector<cdouble> u(sym_dim(g));
    int t = 0;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) u[t++] = z(i, j);
    return u;
}

// residual F_R(Z) = A Z + Z C Z - Z D - B, one row block per generator
inline void fixed_point_residual(const std::vector<SymplecticMatrix>& gens, const CMat& z,
                                 std::vector<cdouble>& out) {
    int g = z.rows();
    out.clear();
    for (const auto& R : gens) {
        CMat A = R.block(0, 0), B = R.block(0, 1), C = R.block(1, 0), D = R.block(1, 1);
        CMat F = A * z + z * C * z - z * D - B;
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) out.push_back(F(i, j));
    }
}

// analytic Jacobian of the stacked residual over the symmetric unknowns
inline CMat fixed_point_jacobian(const std::vector<SymplecticMatrix>& gens, const CMat& z) {
    int g = z.rows();
    int u = sym_dim(g);
    int rows = static_cast<int>(gens.size()) * g * g;
    CMat J(rows, u);
    int block = 0;
    for (const auto& R : gens) {
        CMat A = R.block(0, 0), C = R.block(1, 0), D = R.block(1, 1);
        CMat CZ = C * z, ZC = z * C;
        int t = 0;
        for (int k = 0; k < g; ++k)
            for (int l = k; l < g; ++l) {
                // dF = A E + E C Z + Z C E - E D  with E = e_k e_l^t (+ e_l e_k^t)
                auto add_pair = [&](int p, int q2) {
                    // contribution of E = e_p e_q^t
                    for (int i = 0; i < g; ++i) {
                        // (A E)[i][q] += A[i][p]; (E C Z)[p][j] += CZ[q][j];
                        // (Z C E)[i][q] += ZC[i][p]; (E D)[p][j] -= D[q][j]
                        J(block + i * g + q2, t) += A(i, p);
                        J(block + p * g + i, t) += CZ(q2, i);
                        J(block + i * g + q2, t) += ZC(i, p);
                        J(block + p * g + i, t) -= D(q2, i);
                    }
                };
                add_pair(k, l);
                if (k != l) add_pair(l, k);
                ++t;
            }
        block += g * g;
    }
    return J;
}

}  // namespace detail

struct FixedPointOptions {
    int starts = 64;
    unsigned long long seed = 20240901;
    int max_iterations = 80;
    double residual_tol = 1e-10;
};

struct AmRelationCheck {
    bool all_hold = false;
    double max_defect = 0;          // worst violation among relations (1)-(8)
    double quartic_defect = 0;      // |k^4 + 5/2 k^2 + 121/80|
    bool rejection_filter_ok = false;  // the two-stage root filter isolates one root
};

struct FixedPointReport {
    std::vector<SymplecticMatrix> generators;
    SiegelPoint solution;
    std::vector<double> residual_norms;  // per generator, sup norm
    cdouble k{0, 0};                     // the (3,3) entry when g >= 3
    int family_dimension = 0;            // rank deficiency of the Jacobian
    int converged_starts = 0;
    int solutions_found = 0;             // distinct fixed points seen (any signature)
    int admissible_solutions = 0;        // symmetric with positive definite Im
    AmRelationCheck relations;           // filled by verify_am_relations
};

// Multi-start Newton iteration on the stacked quadratic residual over the
// g(g+1)/2 symmetric unknowns. Honors SA_THREADS for the start loop.
inline FixedPointReport fixed_points(const std::vector<SymplecticMatrix>& generators,
                                     const FixedPointOptions& opts = {}) {
    if (generators.empty()) throw std::invalid_argument("fixed_points: no generators");
    int g = generators[0].g;
    if (g > 8) throw std::invalid_argument("fixed_points: genus limit exceeded");
    for (const auto& R : generators) {
        if (R.g != g) throw std::invalid_argument("fixed_points: genus mismatch");
        if (!is_symplectic(R)) throw std::invalid_argument("fixed_points: matrix not symplectic");
    }
    const int u = detail::sym_dim(g);

    struct StartResult {
        bool converged = false;
        CMat z;
        double residual = 0;
    };
    std::vector<StartResult> results(opts.starts);

    auto run_start = [&](int s) {
        std::mt19937_64 rng(opts.seed + static_cast<unsigned long long>(s) * 7919);
        std::uniform_real_distribution<double> re(-1.0, 1.0);
        std::uniform_real_distribution<double> scale(0.4, 2.5);
        CMat z(g, g);
        double t = scale(rng);
        for (int i = 0; i < g; ++i) {
            for (int j = i; j < g; ++j) {
                double v = re(rng);
                z(i, j) = cdouble(v, i == j ? t : 0.0);
                z(j, i) = z(i, j);
            }
        }
        std::vector<cdouble> F;
        for (int it = 0; it < opts.max_iterations; ++it) {
            detail::fixed_point_residual(generators, z, F);
            double norm = 0;
            for (auto& v : F) norm = std::max(norm, std::abs(v));
            if (norm < 1e-13) break;
            if (!std::isfinite(norm) || norm > 1e12) return;  // diverged
            CMat J = detail::fixed_point_jacobian(generators, z);
            // normal equations J^H J d = -J^H F
            CMat JtJ(u, u);
            std::vector<cdouble> rhs(u, cdouble(0, 0));
            for (int a = 0; a < u; ++a) {
                for (int b = a; b < u; ++b) {
                    cdouble acc(0, 0);
                    for (int r = 0; r < J.rows(); ++r) acc += std::conj(J(r, a)) * J(r, b);
                    JtJ(a, b) = acc;
                    JtJ(b, a) = std::conj(acc);
                }
                cdouble acc(0, 0);
                for (int r = 0; r < J.rows(); ++r) acc += std::conj(J(r, a)) * F[r];
                rhs[a] = -acc;
            }
            std::vector<cdouble> delta;
            try {
                delta = solve_dense(JtJ, rhs);
            } catch (const std::domain_error&) {
                return;  // singular normal equations: give up on this start
            }
            auto packed = detail::pack_symmetric(z);
            for (int a = 0; a < u; ++a) packed[a] += delta[a];
            z = detail::unpack_symmetric(g, packed);
        }
        detail::fixed_point_residual(generators, z, F);
        double norm = 0;
        for (auto& v : F) norm = std::max(norm, std::abs(v));
        if (norm < opts.residual_tol) results[s] = {true, z, norm};
    };

    int threads = 1;
    if (const char* env = std::getenv("SA_THREADS")) threads = std::max(1, std::atoi(env));
    if (threads <= 1) {
        for (int s = 0; s < opts.starts; ++s) run_start(s);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (int s = next.fetch_add(1); s < opts.starts; s = next.fetch_add(1))
                    run_start(s);
            });
        for (auto& th : pool) th.join();
    }

    // deduplicate solutions; keep deterministic order by start index
    std::vector<std::pair<CMat, double>> distinct;
    int converged = 0;
    for (const auto& r : results) {
        if (!r.converged) continue;
        ++converged;
        bool fresh = true;
        for (auto& [zz, res] : distinct) {
            if ((zz - r.z).max_abs() < 1e-7) {
                if (r.residual < res) { zz = r.z; res = r.residual; }
                fresh = false;
                break;
            }
        }
        if (fresh) distinct.push_back({r.z, r.residual});
    }

    FixedPointReport report;
    report.generators = generators;
    report.converged_starts = converged;
    report.solutions_found = static_cast<int>(distinct.size());

    const CMat* best = nullptr;
    double best_res = 0;
    auto lex_less = [g](const CMat& a, const CMat& b) {
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                if (a(i, j).real() != b(i, j).real()) return a(i, j).real() < b(i, j).real();
                if (a(i, j).imag() != b(i, j).imag()) return a(i, j).imag() < b(i, j).imag();
            }
        return false;
    };
    for (const auto& [zz, res] : distinct) {
        SiegelPoint p;
        try {
            p = SiegelPoint::from_matrix(zz);
        } catch (const std::invalid_argument&) {
            continue;  // symmetric but not in the upper half-space
        }
        ++report.admissible_solutions;
        if (!best || res < best_res - 1e-15 ||
            (std::abs(res - best_res) <= 1e-15 && lex_less(zz, *best))) {
            best = &zz;
            best_res = res;
        }
    }
    if (!best)
        throw CrossCheckError(
            "fixed_points: no admissible fixed point found (all starts divergent or outside "
            "the upper half-space)");

    report.solution = SiegelPoint::from_matrix(*best);
    std::vector<cdouble> F;
    for (const auto& R : generators) {
        detail::fixed_point_residual({R}, report.solution.z, F);
        double norm = 0;
        for (auto& v : F) norm = std::max(norm, std::abs(v));
        report.residual_norms.push_back(norm);
    }
    if (g >= 3) report.k = report.solution.z(2, 2);
    CMat J = detail::fixed_point_jacobian(generators, report.solution.z);
    report.family_dimension = u - matrix_rank(J);
    return report;
}

// ---------------------------------------------------------------------------
// genus-4 data for the hyperelliptic curve with 8(g+1) = 40 automorphisms

// Symplectic images of two generating automorphisms on a fixed homology basis.
inline std::pair<SymplecticMatrix, SymplecticMatrix> accola_maclachlan_genus4_generators() {
    SymplecticMatrix rx(4, {
        0, 1, 1, 1, -1, 0, 0, 0,
        1, 0, 0, 0, 0, -1, 0, 0,
        0, 0, 0, 0, 0, 1, -1, 0,
        0, 0, 0, 0, 0, 0, 1, -1,
        1, 0, 0, 0, 0, 0, 0, 0,
        0, 1, 1, 1, 0, 0, 0, 0,
        0, 0, 1, 1, 0, 0, 0, 0,
        0, 0, 0, 1, 0, 0, 0, 0,
    });
    SymplecticMatrix rz(4, {
        0, 0, 1, 0, 0, 0, 0, 0,
        1, 0, 0, 0, 0, -1, 0, 0,
        -1, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 1,
        0, 0, 0, 0, 0, -1, 1, 0,
        0, 1, 1, 0, 0, 0, 0, 0,
        0, 1, 1, 0, -1, 0, 0, 0,
        0, 0, 0, -1, 0, 0, 0, 0,
    });
    return {rx, rz};
}

inline CompositionOrder action_composition_order() {
    auto [r1, r2] = accola_maclachlan_genus4_generators();
    // a generic symmetric test point with positive definite imaginary part
    CMat z0(4, 4);
    double re[4][4] = {{0.31, 0.12, -0.22, 0.05},
                      {0.12, -0.41, 0.33, 0.14},
                      {-0.22, 0.33, 0.27, -0.08},
                      {0.05, 0.14, -0.08, 0.55}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z0(i, j) = cdouble(re[i][j], i == j ? 1.4 : 0.12);
    SiegelPoint Z = SiegelPoint::from_matrix(z0);

    int left_first = 0, right_first = 0;
    std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>> pairs = {
        {r1, r2}, {r2, r1}, {r1 * r2, r2}, {r2 * r2, r1}};
    for (const auto& [a, b] : pairs) {
        auto prod = act(a * b, Z);
        double d_left = (prod.z - act(b, act(a, Z)).z).max_abs();
        double d_right = (prod.z - act(a, act(b, Z)).z).max_abs();
        if (d_left < 1e-8 && d_right > 1e-4) ++left_first;
        if (d_right < 1e-8 && d_left > 1e-4) ++right_first;
    }
    if (left_first > 0 && right_first == 0) return CompositionOrder::apply_left_factor_first;
    if (right_first > 0 && left_first == 0) return CompositionOrder::apply_right_factor_first;
    throw CrossCheckError("action_composition_order: probe inconclusive");
}

namespace detail {

// coefficient table of the linear relations expressing the matrix entries
// through k: entry = c3 * k^3 + c1 * k + c0 (+ c2 * k^2)
struct AmEntry {
    double c3, c2, c1, c0;
    cdouble eval(cdouble k) const { return c3 * k * k * k + c2 * k * k + c1 * k + c0; }
};

inline CMat am_matrix_from_parameter(cdouble k) {
    AmEntry a{-100.0 / 11, 0, -140.0 / 11, 0};
    AmEntry b{0, -5, 0, -31.0 / 4};
    AmEntry c{0, 5, 0, 29.0 / 4};
    AmEntry e{20.0 / 11, 0, 39.0 / 11, 0};
    AmEntry f{-10.0 / 11, 0, -39.0 / 22, 0};
    AmEntry gg{-50.0 / 11, 0, -151.0 / 22, 0};
    AmEntry j{60.0 / 11, 0, 84.0 / 11, 0};
    CMat z(4, 4);
    z(0, 0) = a.eval(k);
    z(0, 1) = z(1, 0) = b.eval(k);
    z(0, 2) = z(2, 0) = c.eval(k);
    z(0, 3) = z(3, 0) = c.eval(k);  // relation (3): c = d
    z(1, 1) = e.eval(k);
    z(1, 2) = z(2, 1) = f.eval(k);
    z(1, 3) = z(3, 1) = gg.eval(k);
    z(2, 2) = k;  // relation (7): h = k
    z(2, 3) = z(3, 2) = j.eval(k);
    z(3, 3) = k;
    return z;
}

inline double am_quartic(cdouble k) {
    return std::abs(k * k * k * k + 2.5 * k * k + cdouble(121.0 / 80, 0));
}

// det Im of the top-left 2x2 block
inline double am_delta(const CMat& z) {
    return z(0, 0).imag() * z(1, 1).imag() - z(0, 1).imag() * z(0, 1).imag();
}

}  // namespace detail

// Checks the solved genus-4 point against the entry relations, the quartic
// for the parameter and the root-rejection filter.
inline AmRelationCheck verify_am_relations(FixedPointReport& report, double tol = 1e-9) {
    if (report.solution.g != 4)
        throw std::invalid_argument("verify_am_relations: genus-4 report required");
    AmRelationCheck chk;
    cdouble k = report.k;
    CMat expect = detail::am_matrix_from_parameter(k);
    chk.max_defect = (expect - report.solution.z).max_abs();
    chk.quartic_defect = detail::am_quartic(k);

    // two-stage rejection: Im(a) > 0 first, then delta > 0 selects one root
    double u1 = std::sqrt(2.0 / 5 * std::sqrt(5.0) + 5);
    double u2 = std::sqrt(-2.0 / 5 * std::sqrt(5.0) + 5);
    std::vector<cdouble> roots = {cdouble(0, -0.5 * u1), cdouble(0, 0.5 * u1),
                                  cdouble(0, -0.5 * u2), cdouble(0, 0.5 * u2)};
    int surviving = 0;
    bool matches_solution = false;
    for (const auto& root : roots) {
        CMat zr = detail::am_matrix_from_parameter(root);
        if (zr(0, 0).imag() <= 0) continue;            // stage 1: Im(a) > 0
        if (detail::am_delta(zr) <= 0) continue;       // stage 2: delta > 0
        ++surviving;
        if (std::abs(root - k) < 1e-6) matches_solution = true;
    }
    chk.rejection_filter_ok = (surviving == 1) && matches_solution;
    chk.all_hold = chk.max_defect < tol && chk.quartic_defect < tol && chk.rejection_filter_ok;
    report.relations = chk;
    return chk;
}

}  // namespace sa
