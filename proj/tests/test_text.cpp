#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dcoset/text.hpp>

#include "test_util.hpp"

using namespace dcoset;

TEST_CASE("ring descriptors") {
    CHECK(parse_ring("Z").is_z());
    CHECK(parse_ring(" Q(sqrt, -5) ") == Ring::quadratic(Int(-5)));
    CHECK(parse_ring("Q(sqrt,2)").str() == "Q(sqrt,2)");
    CHECK(Ring::integers().str() == "Z");
    CHECK_THROWS_AS(parse_ring("Q(-5)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("Q(sqrt,12)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring(""), std::invalid_argument);
}

TEST_CASE("element parsing") {
    Ring r5 = Ring::quadratic(Int(-5));
    CHECK(parse_element(r5, "3") == FieldElement(RingElement(r5, 3)));
    CHECK(parse_element(r5, "1 + 2*w") == FieldElement(RingElement(r5, 1, 2)));
    CHECK(parse_element(r5, "1-2*w") == FieldElement(RingElement(r5, 1, -2)));
    CHECK(parse_element(r5, "-w") == FieldElement(RingElement(r5, 0, -1)));
    CHECK(parse_element(r5, "w") == FieldElement(RingElement(r5, 0, 1)));
    CHECK(parse_element(r5, "0+1*w") == FieldElement(RingElement(r5, 0, 1)));
    CHECK(parse_element(r5, "(1+1*w)/2") == FieldElement(RingElement(r5, 1, 1), 2));
    CHECK(parse_element(r5, "1/2") == FieldElement(RingElement(r5, 1), 2));

    Ring z = Ring::integers();
    CHECK(parse_element(z, "-42") == FieldElement(RingElement(z, -42)));
    CHECK_THROWS_AS(parse_element(z, "w"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(r5, "1++2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(r5, "5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(r5, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(r5, "1/0"), std::invalid_argument);
}

TEST_CASE("matrix parsing") {
    Ring r5 = Ring::quadratic(Int(-5));
    Mat2 m = parse_matrix(r5, "[[1, 0], [1+1*w, 2]]");
    CHECK(m.a() == FieldElement::one(r5));
    CHECK(m.c() == FieldElement(RingElement(r5, 1, 1)));
    CHECK_THROWS_AS(parse_matrix(r5, "[[1,0],[1]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(r5, "[1,0,0,1]"), std::invalid_argument);
}

TEST_CASE("ideal parsing") {
    Ring r5 = Ring::quadratic(Int(-5));
    CHECK(parse_ideal(r5, "ideal(3, 1+1*w)") ==
          FractionalIdeal::from_generators(
              r5, {FieldElement(RingElement(r5, 3)), FieldElement(RingElement(r5, 1, 1))}));
    CHECK(parse_ideal(r5, "ideal(1)").is_unit_ideal());
    CHECK_THROWS_AS(parse_ideal(r5, "ideal()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal(r5, "ideal(0, 0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal(r5, "3, 4"), std::invalid_argument);
}

TEST_CASE("formatting round trips") {
    std::mt19937_64 rng(51);
    for (const Ring& ring : {Ring::integers(), Ring::quadratic(Int(-5)), Ring::quadratic(Int(5))}) {
        for (int i = 0; i < 300; ++i) {
            RingElement num = testutil::random_element(ring, rng, 30);
            Int den(static_cast<long>(rng() % 9 + 1));
            FieldElement e(num, den);
            REQUIRE(parse_element(ring, format_element(e)) == e);
        }
        for (int i = 0; i < 50; ++i) {
            Mat2 m = testutil::random_in_i(ring, rng, 9, Int(100000));
            REQUIRE(parse_matrix(ring, format_matrix(m)) == m);
        }
    }
}

TEST_CASE("canonical forms of formatted elements") {
    Ring r5 = Ring::quadratic(Int(-5));
    CHECK(format_element(RingElement(r5, 1, 2)) == "1+2*w");
    CHECK(format_element(RingElement(r5, 1, -2)) == "1-2*w");
    CHECK(format_element(RingElement(r5, 0, 1)) == "0+1*w");
    CHECK(format_element(RingElement(r5, -3)) == "-3");
    CHECK(format_element(FieldElement(RingElement(r5, 1, 1), 2)) == "(1+1*w)/2");
    CHECK(format_element(FieldElement(RingElement(r5, 3), 2)) == "3/2");
    CHECK(format_matrix(Mat2::identity(r5)) == "[[1,0],[0,1]]");
}
