#include "doctest.h"

#include "sa/jacobian.hpp"

using namespace sa;

namespace {

GeneratingVector am_vector(int q) {
    auto g = build_group("AM:q=" + std::to_string(q));
    int x = g->generator("x"), z = g->generator("z");
    return GeneratingVector{g, {z, g->mul(z, x), g->inv(x)}};
}

GeneratingVector g4_vector(int q, int rho) {
    auto g = build_group("CqC4:q=" + std::to_string(q) + ",rho=" + std::to_string(rho));
    int A = g->generator("A"), B = g->generator("B");
    return GeneratingVector{g, {g->mul(g->inv(A), B), g->inv(B), A}};
}

// induced action of the cyclic subgroup <x> on the curve with 8(g+1)
// automorphisms: (x^2, x^-1, x^-1) with signature (0; q, 2q, 2q)
GeneratingVector c2q_vector(int q) {
    auto g = build_group("C" + std::to_string(2 * q));
    return GeneratingVector{g, {2, 2 * q - 1, 2 * q - 1}};
}

GeneratingVector dihedral_family_vector(int q) {
    auto g = build_group("D" + std::to_string(2 * q));
    int R = g->generator("r"), T = g->generator("s");
    return GeneratingVector{g, {g->pow(R, q), T, g->mul(T, R), g->pow(R, q - 1)}};
}

GeneratingVector kg_vector(int q, int i) {
    auto g = build_group("D" + std::to_string(q));
    int r = g->generator("r"), s = g->generator("s");
    return GeneratingVector{g, {s, g->mul(s, r), g->pow(r, i), g->pow(r, -i - 1)}};
}

GeneratingVector x3_vector(int q) {
    auto g = build_group("C" + std::to_string(3 * q));
    // orders (3, q, 3q): (x^q, x^3, inverse of the product)
    int a = q, b = 3;
    int c = (3 * q - (a + b) % (3 * q)) % (3 * q);
    return GeneratingVector{g, {a, b, c}};
}

const IsogenyFactor& single_nonzero_factor(const IsogenyDecomposition& dec) {
    const IsogenyFactor* hit = nullptr;
    for (const auto& f : dec.factors) {
        if (f.dim > 0) {
            REQUIRE(hit == nullptr);
            hit = &f;
        }
    }
    REQUIRE(hit != nullptr);
    return *hit;
}

}  // namespace

TEST_CASE("analytic multiplicities for the cyclic subgroup of the 8(g+1) curve") {
    int q = 5;
    auto v = c2q_vector(q);
    CHECK(v.signature() == Signature(0, {5, 10, 10}));
    auto cw = chevalley_weil(v);
    CHECK(cw.genus == q - 1);
    for (int k = 0; k < 2 * q; ++k) {
        long long expect = (k >= q + 1) ? 1 : 0;
        CHECK(cw.mu.at("chi_" + std::to_string(k)) == expect);
    }
}

TEST_CASE("analytic multiplicities for the order-4q quartic action") {
    for (auto [q, rho] : std::vector<std::pair<int, int>>{{5, 2}, {13, 5}}) {
        auto v = g4_vector(q, rho);
        CHECK(v.signature() == Signature(0, {4, 4, q}));
        auto cw = chevalley_weil(v);
        CHECK(cw.genus == q - 1);
        for (const auto& [label, mu] : cw.mu) {
            if (label.rfind("phi_", 0) == 0) CHECK(mu == 1);
            else CHECK(mu == 0);
        }
    }
}

TEST_CASE("analytic character of the order-4q dihedral family") {
    int q = 5;
    auto v = dihedral_family_vector(q);
    auto cw = chevalley_weil(v);
    CHECK(cw.genus == q - 1);
    // equivalent to the Galois orbit of one faithful degree-2 character
    long long total = 0;
    for (const auto& [label, mu] : cw.mu) {
        total += mu;
        if (mu != 0) CHECK(label.rfind("psi_", 0) == 0);
    }
    CHECK(total == (q - 1) / 2);

    const auto& G = *v.group;
    const auto& chi = cw.analytic_character;
    int R = G.generator("r"), T = G.generator("s");
    CHECK(chi.values[G.pow(R, q)] == CycNum::from_int(-(q - 1)));
    auto sym = sym_square_char(chi);
    CHECK(sym.values[T] == CycNum::from_int((q - 1) / 2));            // (0 + (q-1))/2
    CHECK(sym.values[G.pow(R, q)] == CycNum::from_int(10));           // ((q-1)^2 + (q-1))/2
}

TEST_CASE("symmetric-square sums of analytic characters") {
    // cyclic subgroup of order 2q on the 8(g+1) curve: the sum vanishes
    CHECK(sym_sum_identity(chevalley_weil(c2q_vector(5)).analytic_character) == Rational(0));
    // order-4q quartic action: q(q-1)
    CHECK(sym_sum_identity(chevalley_weil(g4_vector(5, 2)).analytic_character) == Rational(20));
}

TEST_CASE("inner product of the analytic character for the order-3q action") {
    int q = 5;
    auto v = x3_vector(q);
    CHECK(v.signature() == Signature(0, {3, q, 3 * q}));
    auto cw = chevalley_weil(v);
    CHECK(inner_product(cw.analytic_character, cw.analytic_character) == Rational(q - 1));
}

TEST_CASE("group algebra decomposition of the maximal-automorphism curve") {
    for (int q : {5, 13}) {
        auto dec = group_algebra_decomposition(am_vector(q));
        CHECK(dec.genus == q - 1);
        const auto& f = single_nonzero_factor(dec);
        CHECK(f.n == 2);
        CHECK(f.dim == (q - 1) / 2);
        CHECK(f.irrep.m == q - 1);
        long long total = 0;
        for (const auto& g : dec.factors) total += g.dim * g.n;
        CHECK(total == q - 1);
    }
}

TEST_CASE("group algebra decomposition of the quartic curve") {
    auto dec = group_algebra_decomposition(g4_vector(13, 5));
    const auto& f = single_nonzero_factor(dec);
    CHECK(f.n == 4);
    CHECK(f.dim == 3);  // (q-1)/4
}

TEST_CASE("group algebra decomposition on the dihedral strata") {
    auto dec = group_algebra_decomposition(kg_vector(5, 1));
    const auto& f = single_nonzero_factor(dec);
    CHECK(f.n == 2);
    CHECK(f.dim == 2);  // (q-1)/2

    auto dec2 = group_algebra_decomposition(dihedral_family_vector(5));
    const auto& f2 = single_nonzero_factor(dec2);
    CHECK(f2.n == 2);
    CHECK(f2.dim == 2);
}

TEST_CASE("quotient decompositions") {
    int q = 5;
    auto am = am_vector(q);
    auto dec = group_algebra_decomposition(am);
    int z = am.group->generator("z");

    for (const auto& e : quotient_decomposition(dec, {z}))
        if (e.dim > 0) CHECK(e.n_h == 1);  // J(X/<z>) ~ B

    // trivial subgroup reproduces the full exponents
    auto full = quotient_decomposition(dec, {am.group->identity()});
    for (size_t i = 0; i < dec.factors.size(); ++i)
        if (dec.factors[i].dim > 0) CHECK(full[i].n_h == dec.factors[i].n);

    auto x4 = g4_vector(13, 5);
    auto dec4 = group_algebra_decomposition(x4);
    int B = x4.group->generator("B");
    for (const auto& e : quotient_decomposition(dec4, {B}))
        if (e.dim > 0) CHECK(e.n_h == 1);  // J(X/<B>) ~ D
}

TEST_CASE("fixed-locus dimensions") {
    // via the cyclic subgroup: N = 0 forces N = 0 for the full group
    CHECK(moduli_fixed_dim(c2q_vector(5)).N == 0);
    auto full = moduli_fixed_dim(am_vector(5));
    CHECK(full.N == 0);
    CHECK(full.via_inner_product == full.via_conjugate_sum);

    CHECK(moduli_fixed_dim(g4_vector(13, 5)).N == 3);   // (q-1)/4
    CHECK(moduli_fixed_dim(kg_vector(5, 1)).N == 2);    // (q-1)/2
    CHECK(moduli_fixed_dim(dihedral_family_vector(5)).N == 2);
    CHECK(moduli_fixed_dim(x3_vector(5)).N == 0);

    // X_{2,k}: theta_1 on C_q x C2
    auto c10 = build_group("C5xC2");
    GeneratingVector theta1{c10, {2, 3, 2 * 3 + 1}};
    CHECK(moduli_fixed_dim(theta1).N == 0);
}
