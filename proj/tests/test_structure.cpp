#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffsym/structure.hpp"

using namespace cliffsym;

TEST_CASE("Radon-Hurwitz numbers") {
    int expect[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    for (int i = 0; i < 8; ++i) CHECK(radon_hurwitz(i) == expect[i]);
    CHECK(radon_hurwitz(3) == 2);
    CHECK(radon_hurwitz(8) == 4);
    CHECK(radon_hurwitz(-2) == -1);  // r6 - 4
    for (int i = -16; i <= 16; ++i) CHECK(radon_hurwitz(i + 8) == radon_hurwitz(i) + 4);
}

TEST_CASE("mod 8 type and ring") {
    StructureInfo m31 = mod8_type(3, 1);
    CHECK(m31.h_type == 2);
    CHECK(m31.ring == RingTag::R);
    CHECK(m31.simple);
    CHECK(m31.matrix_side == 4);

    StructureInfo m13 = mod8_type(1, 3);
    CHECK(m13.h_type == 6);
    CHECK(m13.ring == RingTag::H);
    CHECK(m13.simple);
    CHECK(m13.matrix_side == 2);

    StructureInfo m03 = mod8_type(0, 3);
    CHECK(m03.h_type == 5);
    CHECK(m03.ring == RingTag::HH);
    CHECK_FALSE(m03.simple);

    CHECK(mod8_type(3, 0).ring == RingTag::C);
    CHECK(mod8_type(3, 0).matrix_side == 2);
    CHECK(mod8_type(1, 0).ring == RingTag::RR);
    for (int p = 0; p <= 10; ++p)
        for (int q = 0; q <= 10 - p; ++q)
            CHECK(mod8_type(p, q).simple == ((((p - q) % 8) + 8) % 8 != 1 &&
                                             (((p - q) % 8) + 8) % 8 != 5));
}

TEST_CASE("idempotent factor count") {
    CHECK(idem_factor_count(3, 1) == 2);
    CHECK(idem_factor_count(1, 3) == 1);
    CHECK(idem_factor_count(0, 8) == 4);
    CHECK(idem_factor_count(2, 0) == 1);
    CHECK(idem_factor_count(0, 0) == 0);
    // minimal ideal dimension 2^(p+q-k) split as side * dim K
    for (int p = 0; p <= 10; ++p)
        for (int q = 0; q <= 10 - p; ++q) {
            StructureInfo info = mod8_type(p, q);
            long ideal_dim = 1L << (p + q - info.k_idem);
            CHECK(ideal_dim == static_cast<long>(info.matrix_side) * ring_dim(info.ring));
        }
}

TEST_CASE("mod 8 periodicity") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            CHECK(mod8_type(p + 8, q).h_type == mod8_type(p, q).h_type);
            CHECK(mod8_type(p + 8, q).ring == mod8_type(p, q).ring);
            CHECK(mod8_type(p, q + 8).h_type == mod8_type(p, q).h_type);
            CHECK(mod8_type(p, q + 8).ring == mod8_type(p, q).ring);
        }
}

TEST_CASE("semisimple decomposition") {
    Decomposition d03 = semisimple_decomposition(0, 3);
    REQUIRE(d03.variant_a.has_value());
    CHECK(*d03.variant_a == AlgebraSig(0, 2));
    CHECK_FALSE(d03.variant_b.has_value());

    Decomposition d10 = semisimple_decomposition(1, 0);
    CHECK_FALSE(d10.variant_a.has_value());
    REQUIRE(d10.variant_b.has_value());
    CHECK(*d10.variant_b == AlgebraSig(0, 0));

    Decomposition d21 = semisimple_decomposition(2, 1);
    REQUIRE(d21.variant_a.has_value());
    REQUIRE(d21.variant_b.has_value());
    CHECK(*d21.variant_a == AlgebraSig(2, 0));
    CHECK(*d21.variant_b == AlgebraSig(1, 1));
    CHECK(mod8_type(2, 0).h_type == 2);
    CHECK(mod8_type(1, 1).h_type == 0);

    CHECK_THROWS_AS(semisimple_decomposition(3, 1), std::invalid_argument);

    // variants are always simple with even total dimension
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; q <= 8 - p; ++q) {
            if (mod8_type(p, q).simple) continue;
            Decomposition d = semisimple_decomposition(p, q);
            for (const auto& v : {d.variant_a, d.variant_b}) {
                if (!v) continue;
                CHECK(mod8_type(v->p, v->q).simple);
                CHECK(v->n() % 2 == 0);
            }
        }
}

TEST_CASE("complexification isomorphism") {
    ComplexificationIso i30 = complexification_iso(3, 0);
    CHECK(i30.n_complex == 2);
    CHECK(i30.m == 1);
    CHECK_FALSE(i30.m_even);

    ComplexificationIso i41 = complexification_iso(4, 1);
    CHECK(i41.n_complex == 4);
    CHECK(i41.m == 2);
    CHECK(i41.m_even);

    CHECK_THROWS_AS(complexification_iso(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(complexification_iso(2, 1), std::invalid_argument);

    // m parity always matches the parity rule p even & q odd <=> m even
    for (int p = 0; p <= 9; ++p)
        for (int q = 0; q <= 9 - p; ++q) {
            int h = mod8_type(p, q).h_type;
            if (h != 3 && h != 7) continue;
            ComplexificationIso iso = complexification_iso(p, q);
            CHECK(iso.m_even == (p % 2 == 0 && q % 2 == 1));
        }
}
