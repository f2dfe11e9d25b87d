#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliffsym/multivector.hpp"

using namespace cliffsym;

namespace {

// Independent oracle: multiply blades as index lists, bubble-sorting with a
// sign per swap and cancelling adjacent duplicates with the metric sign.
std::pair<BladeMask, int> naive_blade_mul(BladeMask a, BladeMask b, const AlgebraSig& sig) {
    std::vector<int> idx;
    for (int i = 0; i < sig.n(); ++i)
        if (a >> i & 1) idx.push_back(i);
    for (int i = 0; i < sig.n(); ++i)
        if (b >> i & 1) idx.push_back(i);
    int sign = 1;
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < idx.size(); ++i) {
            if (idx[i] > idx[i + 1]) {
                std::swap(idx[i], idx[i + 1]);
                sign = -sign;
                again = true;
            } else if (idx[i] == idx[i + 1]) {
                sign *= metric_sign(idx[i], sig);
                idx.erase(idx.begin() + i, idx.begin() + i + 2);
                again = true;
                break;
            }
        }
    }
    BladeMask m = 0;
    for (int i : idx) m |= BladeMask(1) << i;
    return {m, sign};
}

Multivector random_mv(const AlgebraSig& sig, std::mt19937& rng, int terms = 4) {
    Multivector x(sig);
    std::uniform_int_distribution<int> mask(0, (1 << sig.n()) - 1);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int t = 0; t < terms; ++t) {
        Scalar c{make_ratio(num(rng), 2)};
        if (sig.complex_field) c.im = make_ratio(num(rng), 2);
        x.add_term(static_cast<BladeMask>(mask(rng)), c);
    }
    return x;
}

Multivector ei(const AlgebraSig& sig, int i) {
    return Multivector::blade(sig, BladeMask(1) << (i - 1));
}

}  // namespace

TEST_CASE("blade product matches the naive reordering oracle") {
    for (AlgebraSig sig : {AlgebraSig(2, 0), AlgebraSig(3, 1), AlgebraSig(1, 3), AlgebraSig(2, 2)}) {
        BladeMask lim = BladeMask(1) << sig.n();
        for (BladeMask a = 0; a < lim; ++a)
            for (BladeMask b = 0; b < lim; ++b) {
                auto got = blade_mul(a, b, sig);
                auto want = naive_blade_mul(a, b, sig);
                CHECK(got == want);
            }
    }
}

TEST_CASE("blade product examples") {
    AlgebraSig m31(3, 1);
    CHECK(blade_mul(0b0001, 0b0001, m31) == std::pair<BladeMask, int>{0, 1});   // e1*e1
    CHECK(blade_mul(0b1000, 0b1000, m31) == std::pair<BladeMask, int>{0, -1});  // e4*e4
    AlgebraSig r20(2, 0);
    CHECK(blade_mul(0b11, 0b11, r20) == std::pair<BladeMask, int>{0, -1});      // e12*e12
}

TEST_CASE("geometric product") {
    AlgebraSig r20(2, 0);
    std::mt19937 rng(7);
    SUBCASE("unit law") {
        for (int t = 0; t < 20; ++t) {
            Multivector x = random_mv(r20, rng);
            CHECK(Multivector::unit(r20) * x == x);
            CHECK(x * Multivector::unit(r20) == x);
        }
    }
    SUBCASE("(e1+e2)(e1-e2) = -2 e12 in Cl(2,0)") {
        Multivector lhs = (ei(r20, 1) + ei(r20, 2)) * (ei(r20, 1) - ei(r20, 2));
        CHECK(lhs == Multivector::blade(r20, 0b11, Scalar(-2)));
    }
    SUBCASE("prestored Cl(3,1) idempotent is idempotent") {
        AlgebraSig m31(3, 1);
        Multivector f = parse_multivector("1/4*Id + 1/4*e1 + 1/4*e34 + 1/4*e134", m31);
        CHECK(f * f == f);
    }
    SUBCASE("signature mismatch throws") {
        CHECK_THROWS_AS(Multivector::unit(r20) * Multivector::unit(AlgebraSig(1, 1)),
                        std::invalid_argument);
    }
}

TEST_CASE("fundamental automorphism examples") {
    AlgebraSig sig(3, 1);
    Multivector e1 = ei(sig, 1);
    Multivector e12 = Multivector::blade(sig, 0b0011);
    Multivector e123 = Multivector::blade(sig, 0b0111);
    CHECK(e1.grade_involution() == -e1);
    CHECK(e12.grade_involution() == e12);
    Multivector mixed = Multivector::unit(sig) * Scalar(3) + e123;
    CHECK(mixed.grade_involution() == Multivector::unit(sig) * Scalar(3) - e123);

    CHECK(e12.reversion() == -e12);
    CHECK(e1.reversion() == e1);
    CHECK(e123.reversion() == -e123);

    CHECK(e1.conjugation() == -e1);
    CHECK(e12.conjugation() == -e12);
    CHECK(e123.conjugation() == e123);
}

TEST_CASE("automorphism properties on random elements") {
    std::mt19937 rng(11);
    for (AlgebraSig sig : {AlgebraSig(2, 2), AlgebraSig(3, 1), AlgebraSig(3, 0)}) {
        for (int t = 0; t < 25; ++t) {
            Multivector x = random_mv(sig, rng);
            Multivector y = random_mv(sig, rng);
            Multivector z = random_mv(sig, rng);
            CHECK(x.grade_involution().grade_involution() == x);
            CHECK(x.reversion().reversion() == x);
            CHECK(x.conjugation().conjugation() == x);
            CHECK(x.conjugation() == x.grade_involution().reversion());
            CHECK((x * y).reversion() == y.reversion() * x.reversion());
            CHECK((x * y).conjugation() == y.conjugation() * x.conjugation());
            CHECK((x * y).grade_involution() == x.grade_involution() * y.grade_involution());
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("grade involution via the volume element, even dimension") {
    std::mt19937 rng(13);
    for (AlgebraSig sig : {AlgebraSig(2, 2), AlgebraSig(3, 1), AlgebraSig(2, 0)}) {
        Multivector w = volume_element(sig);
        Multivector winv = w * Scalar(omega_square(sig));  // w^2 = +-1
        REQUIRE(w * winv == Multivector::unit(sig));
        for (int t = 0; t < 10; ++t) {
            Multivector x = random_mv(sig, rng);
            CHECK(x.grade_involution() == w * x * winv);
        }
    }
}

TEST_CASE("volume element commutes with every generator iff n odd") {
    for (AlgebraSig sig : {AlgebraSig(3, 0), AlgebraSig(2, 1), AlgebraSig(3, 1), AlgebraSig(2, 2),
                           AlgebraSig(1, 4)}) {
        Multivector w = volume_element(sig);
        bool all_commute = true;
        for (int i = 1; i <= sig.n(); ++i)
            if (w * ei(sig, i) != ei(sig, i) * w) all_commute = false;
        CHECK(all_commute == (sig.n() % 2 == 1));
    }
}

TEST_CASE("omega squared and center") {
    CHECK(omega_square(AlgebraSig(3, 1)) == -1);
    CHECK(omega_square(AlgebraSig(1, 3)) == -1);
    CHECK(omega_square(AlgebraSig(0, 8)) == 1);
    CHECK(center_basis(AlgebraSig(2, 0)).size() == 1);
    auto z30 = center_basis(AlgebraSig(3, 0));
    REQUIRE(z30.size() == 2);
    CHECK(z30[1] == volume_element(AlgebraSig(3, 0)));
    CHECK(center_basis(AlgebraSig(1, 3)).size() == 1);
    // center elements commute with everything
    for (AlgebraSig sig : {AlgebraSig(3, 0), AlgebraSig(1, 3)}) {
        std::mt19937 rng(3);
        for (const auto& z : center_basis(sig))
            for (int t = 0; t < 10; ++t) {
                Multivector x = random_mv(sig, rng);
                CHECK(z * x == x * z);
            }
    }
}

TEST_CASE("textual form round-trips exactly") {
    AlgebraSig m13(1, 3);
    Multivector f = parse_multivector("1/2*Id + 1/2*e234", m13);
    CHECK(f.to_string() == "1/2*Id + 1/2*e234");
    CHECK(f == Multivector::blade(m13, 0, Scalar(Rational(1, 2))) +
                   Multivector::blade(m13, 0b1110, Scalar(Rational(1, 2))));

    CHECK(parse_multivector("-e12", AlgebraSig(2, 0)).to_string() == "-e12");
    CHECK(parse_multivector("0", m13).is_zero());
    CHECK(Multivector::zero(m13).to_string() == "0");

    std::mt19937 rng(5);
    for (AlgebraSig sig : {AlgebraSig(3, 1), AlgebraSig::complex(3)}) {
        for (int t = 0; t < 40; ++t) {
            Multivector x = random_mv(sig, rng, 5);
            std::string s = x.to_string();
            Multivector back = parse_multivector(s, sig);
            CHECK(back == x);
            CHECK(back.to_string() == s);
        }
    }
}

TEST_CASE("complex mode blades square to +1") {
    AlgebraSig c4 = AlgebraSig::complex(4);
    for (int i = 1; i <= 4; ++i) CHECK(ei(c4, i) * ei(c4, i) == Multivector::unit(c4));
    Multivector x = ei(c4, 1) * Scalar::imaginary_unit();
    CHECK(x * x == Multivector::unit(c4) * Scalar(-1));
}
