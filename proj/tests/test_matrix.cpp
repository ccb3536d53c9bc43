#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dcoset/hecke.hpp>
#include <dcoset/matrix.hpp>
#include <dcoset/text.hpp>

#include "test_util.hpp"

using namespace dcoset;

namespace {

const Ring kZ = Ring::integers();
const Ring kR5 = Ring::quadratic(Int(-5));

Mat2 zmat(long a, long b, long c, long d) {
    return Mat2::from_ring_elements(RingElement(kZ, a), RingElement(kZ, b), RingElement(kZ, c),
                                    RingElement(kZ, d));
}

}  // namespace

TEST_CASE("membership flags") {
    CHECK(classify(zmat(1, 1, 0, 1)).in_u);
    auto f = classify(parse_matrix(kR5, "[[1,0],[0,2]]"));
    CHECK(f.in_ring);
    CHECK(f.in_i);
    CHECK_FALSE(f.in_u);
    auto g = classify(parse_matrix(kR5, "[[1/2,0],[0,2]]"));
    CHECK_FALSE(g.in_ring);
    CHECK_FALSE(g.in_i);
    CHECK_FALSE(g.in_u);
}

TEST_CASE("invariants of diagonal and scalar matrices") {
    auto inv = invariants(zmat(1, 0, 0, 4));
    CHECK(inv.rank == 2);
    CHECK(inv.delta1.is_unit_ideal());
    CHECK(*inv.delta2 == FractionalIdeal::principal(RingElement(kZ, 4)));
    CHECK(*inv.f2 == FractionalIdeal::principal(RingElement(kZ, 4)));
    CHECK(inv.g->is_unit_ideal());

    auto scalar = invariants(zmat(2, 0, 0, 2));
    CHECK(scalar.delta1 == FractionalIdeal::principal(RingElement(kZ, 2)));
    CHECK(scalar.f2->is_unit_ideal());

    auto iw = invariants(parse_matrix(kR5, "[[0+1*w,0],[0,2]]"));
    CHECK(iw.delta1.is_unit_ideal());
    CHECK(*iw.delta2 ==
          FractionalIdeal::principal(RingElement(kR5, 0, 2)));  // (2w)o

    CHECK_THROWS_AS(invariants(zmat(0, 0, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(invariants(parse_matrix(kR5, "[[1/2,0],[0,2]]")), std::domain_error);
}

TEST_CASE("rank-1 invariants carry the first-column ideal") {
    auto inv = invariants(zmat(2, 0, 4, 0));
    CHECK(inv.rank == 1);
    CHECK_FALSE(inv.delta2.has_value());
    CHECK(*inv.g == FractionalIdeal::principal(RingElement(kZ, 2)));
}

TEST_CASE("right coset equality") {
    CHECK(same_right_coset(zmat(1, 1, 0, 4), zmat(1, 5, 0, 4)));
    CHECK_FALSE(same_right_coset(zmat(1, 1, 0, 4), zmat(1, 2, 0, 4)));
    Mat2 a = parse_matrix(kR5, "[[1,1],[0,2]]");
    CHECK(same_right_coset(a, a));
    CHECK_THROWS_AS(same_right_coset(zmat(1, 0, 0, 0), zmat(1, 0, 0, 1)), std::domain_error);
}

TEST_CASE("double coset equality") {
    CHECK(same_double_coset(zmat(1, 0, 0, 4), zmat(2, 1, 0, 2)));
    CHECK_FALSE(same_double_coset(zmat(1, 0, 0, 4), zmat(2, 0, 0, 2)));
    // rank 1 with equal (delta1, g)
    CHECK(same_double_coset(zmat(2, 0, 4, 0), zmat(2, 0, 2, 0)));
    CHECK_THROWS_AS(same_double_coset(zmat(2, 0, 4, 0), zmat(1, 0, 0, 4)), std::domain_error);
    CHECK_THROWS_AS(same_double_coset(zmat(0, 2, 0, 4), zmat(0, 2, 0, 2)), std::domain_error);
}

TEST_CASE("unimodular completion examples") {
    Mat2 r = complete_unimodular(RingElement(kZ, 2), RingElement(kZ, 3), RingElement(kZ, 1),
                                 RingElement(kZ, 0));
    CHECK(r.det() == FieldElement::one(kZ));
    CHECK(r.a() * FieldElement(RingElement(kZ, 2)) + r.b() * FieldElement(RingElement(kZ, 3)) ==
          FieldElement::one(kZ));

    Mat2 id = complete_unimodular(RingElement(kZ, 0), RingElement(kZ, 0), RingElement(kZ, 0),
                                  RingElement(kZ, 0));
    CHECK(id == Mat2::identity(kZ));

    RingElement a(kR5, 3), b(kR5, 1, 1);
    Mat2 r5m = complete_unimodular(a, b, b, a);
    CHECK(classify(r5m).in_u);
    CHECK(r5m.a() * FieldElement(a) + r5m.b() * FieldElement(b) == FieldElement(b));
    CHECK(r5m.c() * FieldElement(a) + r5m.d() * FieldElement(b) == FieldElement(a));

    CHECK_THROWS_AS(complete_unimodular(RingElement(kZ, 2), RingElement(kZ, 4), RingElement(kZ, 1),
                                        RingElement(kZ, 0)),
                    std::domain_error);
}

TEST_CASE("unimodular completion on scrambled generator pairs") {
    std::mt19937_64 rng(21);
    SamplerConfig cfg;
    cfg.seed = 77;
    cfg.word_length = 6;
    for (int i = 0; i < 500; ++i) {
        const Ring& ring = (i % 2 == 0) ? kZ : kR5;
        RingElement a = testutil::random_element(ring, rng, 9);
        RingElement b = testutil::random_element(ring, rng, 9);
        if (a.is_zero() && b.is_zero()) continue;
        Mat2 u = sample_unimodular(ring, cfg, i);
        FieldElement c = u.a() * FieldElement(a) + u.b() * FieldElement(b);
        FieldElement d = u.c() * FieldElement(a) + u.d() * FieldElement(b);
        Mat2 r = complete_unimodular(a, b, c.as_ring_element(), d.as_ring_element());
        REQUIRE(classify(r).in_u);
        REQUIRE(r.det() == FieldElement::one(ring));
        REQUIRE(r.a() * FieldElement(a) + r.b() * FieldElement(b) == c);
        REQUIRE(r.c() * FieldElement(a) + r.d() * FieldElement(b) == d);
    }
}

TEST_CASE("invariants are bi-invariant under U") {
    std::mt19937_64 rng(22);
    SamplerConfig cfg;
    cfg.seed = 7;
    for (int i = 0; i < 200; ++i) {
        const Ring& ring = (i % 2 == 0) ? kZ : kR5;
        Mat2 a = testutil::random_in_i(ring, rng, 4, Int(500));
        Mat2 p = sample_unimodular(ring, cfg, 2 * i);
        Mat2 q = sample_unimodular(ring, cfg, 2 * i + 1);
        Mat2 conjugated = p * a * q;
        auto ia = invariants(a);
        auto ib = invariants(conjugated);
        REQUIRE(ia.delta1 == ib.delta1);
        REQUIRE(*ia.delta2 == *ib.delta2);
        REQUIRE(same_double_coset(conjugated, a));
    }
}

TEST_CASE("same_right_coset is an equivalence relation") {
    std::mt19937_64 rng(23);
    SamplerConfig cfg;
    cfg.seed = 8;
    for (int i = 0; i < 100; ++i) {
        const Ring& ring = (i % 2 == 0) ? kZ : kR5;
        Mat2 a = testutil::random_in_i(ring, rng, 4, Int(500));
        Mat2 b = sample_unimodular(ring, cfg, 3 * i) * a;
        // right-multiplying usually leaves the right coset
        Mat2 c = (i % 3 == 0) ? sample_unimodular(ring, cfg, 3 * i + 1) * a
                              : a * sample_unimodular(ring, cfg, 3 * i + 2);
        REQUIRE(same_right_coset(a, a));
        REQUIRE(same_right_coset(a, b) == same_right_coset(b, a));
        REQUIRE((same_right_coset(a, b) && same_right_coset(b, c)) == same_right_coset(a, c));
    }
}

TEST_CASE("unimodular matrices have trivial invariants") {
    std::mt19937_64 rng(24);
    SamplerConfig cfg;
    cfg.seed = 9;
    for (int i = 0; i < 50; ++i) {
        const Ring& ring = (i % 2 == 0) ? kZ : kR5;
        Mat2 u = sample_unimodular(ring, cfg, i);
        auto inv = invariants(u);
        REQUIRE(inv.delta1.is_unit_ideal());
        REQUIRE(inv.f2->is_unit_ideal());
    }
}
