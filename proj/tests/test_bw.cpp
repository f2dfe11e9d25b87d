#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffsym/bw.hpp"
#include "cliffsym/structure.hpp"

using namespace cliffsym;

TEST_CASE("graded tensor product verification") {
    SUBCASE("Cl(1,0) (x) Cl(0,1) presents Cl(1,1)") {
        ChevalleyCheck chk = verify_chevalley(AlgebraSig(1, 0), AlgebraSig(0, 1));
        CHECK(chk.ok);
        CHECK(chk.plus_squares == 1);
        CHECK(chk.minus_squares == 1);
        CHECK(chk.dim_log2 == 2);
    }
    SUBCASE("Cl(0,0) is the unit of the monoid") {
        for (AlgebraSig a : {AlgebraSig(2, 1), AlgebraSig(0, 3)}) {
            CHECK(verify_chevalley(AlgebraSig(0, 0), a).ok);
            CHECK(verify_chevalley(a, AlgebraSig(0, 0)).ok);
        }
    }
    SUBCASE("Cl(1,1) (x) Cl(1,1) presents Cl(2,2)") {
        ChevalleyCheck chk = verify_chevalley(AlgebraSig(1, 1), AlgebraSig(1, 1));
        CHECK(chk.ok);
        CHECK(chk.plus_squares == 2);
        CHECK(chk.minus_squares == 2);
    }
    SUBCASE("cross anticommutation is literal: x_i y_j = -y_j x_i") {
        AlgebraSig a(1, 0), b(0, 1);
        GtElement x = GtElement::from_left(a, b, 1);
        GtElement y = GtElement::from_right(a, b, 1);
        CHECK((x * y + y * x).is_zero());
        CHECK_FALSE((x * y).is_zero());
    }
    SUBCASE("all operand pairs with total dimension <= 2^8") {
        for (int pa = 0; pa <= 8; ++pa)
            for (int qa = 0; qa + pa <= 8; ++qa)
                for (int pb = 0; pb + pa + qa <= 8; ++pb)
                    for (int qb = 0; qb + pb + pa + qa <= 8; ++qb)
                        CHECK(verify_chevalley(AlgebraSig(pa, qa), AlgebraSig(pb, qb)).ok);
    }
    SUBCASE("mixed fields are rejected") {
        CHECK_THROWS_AS(graded_tensor(AlgebraSig(1, 0), AlgebraSig::complex(2)),
                        std::invalid_argument);
    }
}

TEST_CASE("Brauer-Wall classes") {
    CHECK(bw_class_real(3, 1).h == 6);
    CHECK(bw_class_real(0, 0).h == 0);
    CHECK(bw_class_complex(3).h == 1);
    CHECK(bw_class_complex(4).h == 0);
    SUBCASE("mod 8 periodicity") {
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q) {
                CHECK(bw_class_real(p + 8, q).h == bw_class_real(p, q).h);
                CHECK(bw_class_real(p, q + 8).h == bw_class_real(p, q).h);
            }
    }
    SUBCASE("class addition is a homomorphism under the graded product") {
        for (int pa = 0; pa <= 4; ++pa)
            for (int qa = 0; qa <= 4; ++qa)
                for (int pb = 0; pb <= 4; ++pb)
                    for (int qb = 0; qb <= 4; ++qb) {
                        int lhs = bw_class_real(pa + pb, qa + qb).h;
                        int rhs = (bw_class_real(pa, qa).h + bw_class_real(pb, qb).h) % 8;
                        CHECK(lhs == rhs);
                    }
    }
    SUBCASE("same-class predicate agrees with class equality") {
        for (int pa = 0; pa <= 8; ++pa)
            for (int qa = 0; qa + pa <= 8; ++qa)
                for (int pb = 0; pb <= 8; ++pb)
                    for (int qb = 0; qb + pb <= 8; ++qb)
                        CHECK(same_class(pa, qa, pb, qb) ==
                              (bw_class_real(pa, qa).h == bw_class_real(pb, qb).h));
    }
    SUBCASE("the class of (3,1) coincides with the class of (0,6)") {
        CHECK(same_class(3, 1, 0, 6));
        CHECK(bw_class_real(0, 6).h == 6);
    }
}

TEST_CASE("ABS periodicity at the structure level") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            CHECK(mod8_type(p + 8, q).ring == mod8_type(p, q).ring);
            CHECK(mod8_type(p, q + 8).ring == mod8_type(p, q).ring);
        }
}

TEST_CASE("Trautman clock tables") {
    SUBCASE("real: 8 positions with rings and signature annotations") {
        ClockTable t = trautman_clock("real");
        REQUIRE(t.rows.size() == 8);
        // h = (q - p) mod 8 at each position
        for (const auto& row : t.rows) CHECK(((row.pq_type + row.hour) % 8) == 0);

        auto row_for_type = [&](int type) -> const ClockRow& {
            for (const auto& r : t.rows)
                if (r.pq_type == type) return r;
            throw std::logic_error("type missing");
        };
        const ClockRow& t6 = row_for_type(6);
        CHECK(t6.ring == "H");
        CHECK(t6.signatures == std::vector<std::array<int, 3>>{
                                   {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}, {-1, 1, 1}});
        const ClockRow& t0 = row_for_type(0);
        CHECK(t0.ring == "R");
        CHECK(t0.signatures == std::vector<std::array<int, 3>>{
                                   {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {1, 1, 1}});
        CHECK(row_for_type(1).ring == "R+R");
        CHECK(row_for_type(1).signatures.size() == 8);
        CHECK(row_for_type(5).ring == "H+H");
        CHECK(row_for_type(5).signatures.size() == 8);
        CHECK(row_for_type(3).ring == "C");
        CHECK(row_for_type(7).ring == "C");
    }
    SUBCASE("complex: 2 positions, both annotated with (+,+,+) and (-,-,-)") {
        ClockTable t = trautman_clock("complex");
        REQUIRE(t.rows.size() == 2);
        CHECK(t.rows[0].signatures ==
              std::vector<std::array<int, 3>>{{1, 1, 1}, {-1, -1, -1}});
        CHECK(t.rows[1].signatures.size() == 2);
    }
    SUBCASE("text rendering") {
        CHECK(clock_to_text(trautman_clock("real")).find("h=6") != std::string::npos);
        CHECK_THROWS_AS(trautman_clock("octonion"), std::invalid_argument);
    }
}
