#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffsym/coverings.hpp"
#include "cliffsym/report.hpp"

using namespace cliffsym;

namespace {

IdempotentSpec spec(std::initializer_list<const char*> names, std::initializer_list<int> signs) {
    IdempotentSpec s;
    for (const char* n : names) s.blades.push_back(parse_blade(n));
    s.signs = signs;
    return s;
}

bool has_cover(const std::vector<GroupClass>& set, const std::string& cover,
               std::array<int, 3> abc) {
    for (const auto& g : set)
        if (g.order8_cover == cover && g.abc == abc) return true;
    return false;
}

}  // namespace

TEST_CASE("the covering table, all eight rows") {
    auto row = [](int a, int b, int c) { return dabrowski_row({a, b, c}); };
    CHECK(row(1, 1, 1).cover == "Z2*Z2*Z2");
    CHECK(row(1, 1, 1).pt_commutes);
    CHECK(row(1, -1, -1).cover == "Z2*Z4");
    CHECK(row(1, -1, -1).pt_commutes);
    CHECK(row(-1, 1, -1).cover == "Z2*Z4");
    CHECK(row(-1, 1, -1).pt_commutes);
    CHECK(row(-1, -1, 1).cover == "Z2*Z4");
    CHECK(row(-1, -1, 1).pt_commutes);
    CHECK(row(-1, -1, -1).cover == "Q4");
    CHECK_FALSE(row(-1, -1, -1).pt_commutes);
    CHECK(row(-1, 1, 1).cover == "D4");
    CHECK_FALSE(row(-1, 1, 1).pt_commutes);
    CHECK(row(1, -1, 1).cover == "D4");
    CHECK_FALSE(row(1, -1, 1).pt_commutes);
    CHECK(row(1, 1, -1).cover == "D4");
    CHECK_FALSE(row(1, 1, -1).pt_commutes);
    CHECK_THROWS_AS(dabrowski_row({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("pin descriptors") {
    SUBCASE("Cl(3,1): Cliffordian Pin^(-,-,-)(3,1)") {
        SpinorRep rep = build_spinor_rep(AlgebraSig(3, 1), spec({"e1", "e34"}, {1, 1}));
        ClassificationReport r = classify_rep(rep);
        PinDescriptor d = pin_descriptor(3, 1, r);
        CHECK(d.name == "Pin^(-,-,-)(3,1)");
        CHECK(d.cover == "Q4");
        CHECK(d.cliffordian);
    }
    SUBCASE("Cl(1,3)/e234: non-Cliffordian Pin^(-,+,-)(1,3)") {
        SpinorRep rep = build_spinor_rep(AlgebraSig(1, 3), spec({"e234"}, {1}));
        ClassificationReport r = classify_rep(rep);
        PinDescriptor d = pin_descriptor(1, 3, r);
        CHECK(d.name == "Pin^(-,+,-)(1,3)");
        CHECK(d.cover == "Z2*Z4");
        CHECK_FALSE(d.cliffordian);
    }
    SUBCASE("Cl(0,4): the idempotent representations give Pin^(+,+,-)(0,4)") {
        // the degenerate all-symmetric / all-skew bases of type 4 do not arise
        // from the idempotent machinery; every enumerated basis has one skew
        // generator and classifies as D4
        AlgebraSig sig(0, 4);
        auto fams = commuting_blade_sets(sig);
        SpinorRep rep = build_spinor_rep(sig, spec_from_family(fams[0], 0));
        ClassificationReport r = classify_rep(rep);
        PinDescriptor d = pin_descriptor(0, 4, r);
        CHECK(d.name == "Pin^(+,+,-)(0,4)");
        CHECK(d.cover == "D4");
    }
}

TEST_CASE("opposite signature comparison") {
    SUBCASE("(3,1) vs (1,3): distinct; Q4 only on the left, Q4 and Z2*Z4 on the right") {
        OppositeComparison cmp = opposite_comparison(3, 1);
        CHECK(cmp.type_pq == 2);
        CHECK(cmp.type_qp == 6);
        CHECK_FALSE(cmp.isomorphic);
        REQUIRE(cmp.covers_pq.size() == 1);
        CHECK(has_cover(cmp.covers_pq, "Q4", {-1, -1, -1}));
        CHECK(cmp.covers_qp.size() == 2);
        CHECK(has_cover(cmp.covers_qp, "Q4", {-1, -1, -1}));
        CHECK(has_cover(cmp.covers_qp, "Z2*Z4", {-1, 1, -1}));
    }
    SUBCASE("(4,0) vs (0,4): neutral type 4") {
        OppositeComparison cmp = opposite_comparison(4, 0);
        CHECK(cmp.isomorphic);
        CHECK(cmp.type_pq == 4);
        CHECK(cmp.type_qp == 4);
    }
    SUBCASE("(1,0) vs (0,1): distinct, types 1 and 7") {
        OppositeComparison cmp = opposite_comparison(1, 0);
        CHECK_FALSE(cmp.isomorphic);
        CHECK(cmp.type_pq == 1);
        CHECK(cmp.type_qp == 7);
    }
    SUBCASE("neutrality is exactly type 0 or 4, p+q <= 6") {
        for (int p = 0; p + 0 <= 6; ++p)
            for (int q = 0; p + q <= 6; ++q) {
                int t = mod8_type(p, q).h_type;
                CHECK(opposite_comparison(p, q).isomorphic == (t == 0 || t == 4));
            }
    }
}

TEST_CASE("complex classification theorems") {
    SUBCASE("n=2: Q4/Z2 with (-,-,-)") {
        ComplexAutResult r = complex_aut(2);
        CHECK(r.group.order4 == "Q4/Z2");
        CHECK(r.group.order8_cover == "Q4");
        CHECK(r.group.abc == std::array<int, 3>{-1, -1, -1});
        CHECK_FALSE(r.group.abelian);
    }
    SUBCASE("n=4: Z2*Z2 with (+,+,+)") {
        ComplexAutResult r = complex_aut(4);
        CHECK(r.group.order4 == "Z2*Z2");
        CHECK(r.group.abc == std::array<int, 3>{1, 1, 1});
        CHECK(r.group.abelian);
    }
    SUBCASE("n=6: Q4/Z2; n=8: Z2*Z2") {
        CHECK(complex_aut(6).group.order8_cover == "Q4");
        CHECK(complex_aut(8).group.order8_cover == "Z2*Z2*Z2");
    }
    SUBCASE("coverings mirror the automorphism groups") {
        ComplexPinDescriptor d2 = complex_pin(2);
        CHECK(d2.name == "Pin^(-,-,-)(2,C)");
        CHECK(d2.cliffordian);
        ComplexPinDescriptor d4 = complex_pin(4);
        CHECK(d4.name == "Pin^(+,+,+)(4,C)");
        CHECK_FALSE(d4.cliffordian);
        CHECK(complex_pin(6).cliffordian);
        CHECK_FALSE(complex_pin(8).cliffordian);
    }
    SUBCASE("odd or non-positive n is rejected") {
        CHECK_THROWS_AS(complex_aut(3), std::invalid_argument);
        CHECK_THROWS_AS(complex_aut(0), std::invalid_argument);
    }
}

TEST_CASE("blade group anchors for the one-generator algebras") {
    // {+-1, +-e1} is a Gauss group for Cl(1,0) and a cyclic 4-group for Cl(0,1)
    AlgebraSig r10(1, 0), r01(0, 1);
    CHECK(blade_square_sign(1, r10) == 1);   // e1 is an involution: exponent 2
    CHECK(blade_square_sign(1, r01) == -1);  // e1 has order 4
}
