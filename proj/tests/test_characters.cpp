#include "doctest.h"

#include "sa/characters.hpp"

using namespace sa;

namespace {

void check_orthogonality(const Group& g) {
    auto table = char_table(g);
    long long d2 = 0;
    for (const auto& c : table) d2 += static_cast<long long>(c.degree) * c.degree;
    CHECK(d2 == g->order());
    for (size_t i = 0; i < table.size(); ++i)
        for (size_t j = 0; j < table.size(); ++j)
            CHECK(inner_product(table[i], table[j]) == Rational(i == j ? 1 : 0));
}

}  // namespace

TEST_CASE("character tables of the supported families") {
    auto am5 = build_group("AM:q=5");
    auto t = char_table(am5);
    int lin = 0, deg2 = 0;
    for (const auto& c : t) {
        if (c.degree == 1) ++lin;
        if (c.degree == 2) ++deg2;
    }
    CHECK(lin == 4);
    CHECK(deg2 == 9);  // 2q - 1

    auto g4 = build_group("CqC4:q=5,rho=2");
    auto t4 = char_table(g4);
    int lin4 = 0, deg4 = 0;
    for (const auto& c : t4) {
        if (c.degree == 1) ++lin4;
        if (c.degree == 4) ++deg4;
    }
    CHECK(lin4 == 4);
    CHECK(deg4 == 1);  // (q-1)/4

    std::multiset<int> d5deg;
    for (const auto& c : char_table(build_group("D5"))) d5deg.insert(c.degree);
    CHECK(d5deg == std::multiset<int>{1, 1, 2, 2});
}

TEST_CASE("orthogonality across families") {
    for (const char* spec : {"C10", "D5", "D10", "C5xC2", "CqC4:q=5,rho=2", "CqC4:q=5,rho=4",
                             "AM:q=5", "C15", "C7xC3"})
        check_orthogonality(build_group(spec));
}

TEST_CASE("character values are constant on conjugacy classes") {
    for (const char* spec : {"D10", "AM:q=5", "CqC4:q=5,rho=2"}) {
        auto g = build_group(spec);
        auto table = char_table(g);
        for (const auto& cls : conjugacy_classes(*g))
            for (const auto& chi : table)
                for (int e : cls) CHECK(chi.values[e] == chi.values[cls.front()]);
    }
}

TEST_CASE("unsupported family is rejected") {
    auto groups = detail::groups_of_order_lambda_q(8, 7);
    for (const auto& g : groups)
        if (g->spec_tag() == "F56") CHECK_THROWS_AS(char_table(g), std::domain_error);
}

TEST_CASE("symmetric square basics") {
    auto d5 = build_group("D5");
    for (const auto& chi : char_table(d5)) {
        auto sym = sym_square_char(chi);
        CHECK(sym.degree == chi.degree * (chi.degree + 1) / 2);
        CHECK(sym.values[0] == CycNum::from_int(sym.degree));
        // sym + antisym = chi^2 pointwise
        for (int g = 0; g < d5->order(); ++g) {
            CycNum anti = Rational(1, 2) * (chi.values[g] * chi.values[g] -
                                            chi.values[d5->mul(g, g)]);
            CHECK(sym.values[g] + anti == chi.values[g] * chi.values[g]);
        }
    }
}

TEST_CASE("symmetric-square sum identity for the trivial character") {
    for (const char* spec : {"C10", "D5", "AM:q=5"}) {
        auto g = build_group(spec);
        auto table = char_table(g);
        CHECK(sym_sum_identity(table.front()) == Rational(g->order()));
    }
}

TEST_CASE("fixed subspace dimensions in the dihedral group") {
    auto d5 = build_group("D5");
    auto table = char_table(d5);
    const Character* psi1 = nullptr;
    for (const auto& c : table)
        if (c.label == "psi_1") psi1 = &c;
    REQUIRE(psi1);
    int r = d5->generator("r"), s = d5->generator("s");
    CHECK(fixed_dim(*psi1, subgroup_generated(*d5, {s})) == 1);
    CHECK(fixed_dim(*psi1, subgroup_generated(*d5, {r})) == 0);
    CHECK(fixed_dim(*psi1, {d5->identity()}) == psi1->degree);
    // reflections in every class behave alike
    for (int i = 0; i < 5; ++i)
        CHECK(fixed_dim(*psi1, subgroup_generated(*d5, {d5->mul(s, d5->pow(r, i))})) == 1);
}

TEST_CASE("fixed_dim is monotone under subgroup inclusion") {
    auto am = build_group("AM:q=5");
    int x = am->generator("x");
    auto table = char_table(am);
    auto h1 = subgroup_generated(*am, {x});            // order 10
    auto h2 = subgroup_generated(*am, {am->pow(x, 2)});  // order 5
    std::vector<int> h3 = {am->identity()};
    for (const auto& chi : table) {
        long long f1 = fixed_dim(chi, h1), f2 = fixed_dim(chi, h2), f3 = fixed_dim(chi, h3);
        CHECK(f1 <= f2);
        CHECK(f2 <= f3);
    }
}

TEST_CASE("rational irreducibles") {
    // C_q x| C_4 with rho of order 4: four rational classes
    auto w4 = rational_irreps(build_group("CqC4:q=5,rho=2"));
    CHECK(w4.size() == 4);
    int quartics = 0;
    for (const auto& w : w4) {
        CHECK(w.schur == 1);
        if (w.d == 4) {
            ++quartics;
            CHECK(w.n == 4);
            CHECK(w.m == 1);  // (q-1)/4 = 1 for q = 5
        }
    }
    CHECK(quartics == 1);

    // order-8q family: the y -> -I characters with j >= 1 merge into one
    // rational irreducible of degree 2(q-1)
    auto w8 = rational_irreps(build_group("AM:q=5"));
    bool found_big = false;
    for (const auto& w : w8)
        if (w.d == 2 && w.m == 4) {  // q - 1 constituents of degree 2
            found_big = true;
            for (const auto& c : w.constituents)
                CHECK((c.label.rfind("m1_", 0) == 0 || c.label.rfind("m2_", 0) == 0));
        }
    CHECK(found_big);

    CHECK(rational_irreps(build_group("C2")).size() == 2);

    // class count of cyclic subgroups equals rational-class count for D_q
    CHECK(rational_irreps(build_group("D5")).size() == 3);
}
