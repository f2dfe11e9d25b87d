#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffsym/report.hpp"

using namespace cliffsym;

namespace {

IdempotentSpec spec(std::initializer_list<const char*> names, std::initializer_list<int> signs) {
    IdempotentSpec s;
    for (const char* n : names) s.blades.push_back(parse_blade(n));
    s.signs = signs;
    return s;
}

}  // namespace

TEST_CASE("blade names round-trip") {
    CHECK(blade_name(0) == "Id");
    CHECK(blade_name(0b1101) == "e134");
    CHECK(parse_blade("e134") == 0b1101);
    CHECK(parse_blade("Id") == 0);
    CHECK_THROWS_AS(parse_blade("e41"), std::invalid_argument);
    CHECK_THROWS_AS(parse_blade("x2"), std::invalid_argument);
}

TEST_CASE("scalar rendering") {
    CHECK(scalar_to_string(Scalar(Rational(1, 2))) == "1/2");
    CHECK(scalar_to_string(Scalar(-3)) == "-3");
    CHECK(scalar_to_string(Scalar::imaginary_unit()) == "i");
    CHECK(scalar_to_string(Scalar(Rational(0), Rational(-2, 3))) == "-2/3*i");
    CHECK(scalar_to_string(Scalar(Rational(1), Rational(1))) == "(1+i)");
    CHECK(scalar_to_string(Scalar(Rational(1, 2), Rational(-3, 4))) == "(1/2-3/4*i)");
}

TEST_CASE("classification JSON carries the declared schema and round-trips") {
    SpinorRep rep = build_spinor_rep(AlgebraSig(3, 1), spec({"e1", "e34"}, {1, 1}));
    ClassificationReport r = classify_rep(rep);
    Json j = classification_to_json(r, rep);
    for (const char* key : {"p", "q", "idempotent", "type", "ring", "abc", "order4_group",
                            "order8_cover", "abelian", "cliffordian", "W", "E", "C", "conformance"})
        CHECK(j.contains(key));
    CHECK(j["p"] == 3);
    CHECK(j["abc"] == "(-,-,-)");
    CHECK(j["order8_cover"] == "Q4");
    CHECK(j["cliffordian"] == true);
    CHECK(j["conformance"]["pass"] == true);

    std::string text = j.dump(2);
    Json back = Json::parse(text);
    CHECK(back.dump(2) == text);
}

TEST_CASE("matrix text uses the bracket layout") {
    SpinorRep rep = build_spinor_rep(AlgebraSig(1, 3), spec({"e14"}, {1}));
    auto rows = matrix_to_strings(rep.gens[1], rep.k_labels, rep.sig);
    std::string text = matrix_to_text(rows);
    CHECK(text.find("[") != std::string::npos);
    CHECK(text.find("e2") != std::string::npos);
    CHECK(text.find("-e2") != std::string::npos);
}

TEST_CASE("kelem rendering matches the multivector textual form") {
    SpinorRep rep = build_spinor_rep(AlgebraSig(1, 3), spec({"e14"}, {1}));
    std::vector<Scalar> coeffs(4, Scalar(0));
    coeffs[3] = Scalar(Rational(-1, 2));
    CHECK(kelem_to_string(coeffs, rep.k_labels, rep.sig) == "-1/2*e23");
    coeffs[0] = Scalar(1);
    CHECK(kelem_to_string(coeffs, rep.k_labels, rep.sig) == "Id - 1/2*e23");
}
