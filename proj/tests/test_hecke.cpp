#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dcoset/hecke.hpp>
#include <dcoset/text.hpp>

#include "test_util.hpp"

using namespace dcoset;
using testutil::coset_sets_equal;

namespace {

const Ring kZ = Ring::integers();
const Ring kR5 = Ring::quadratic(Int(-5));

Mat2 diag(const Ring& ring, const RingElement& d) {
    return Mat2::from_ring_elements(RingElement::one(ring), RingElement::zero(ring),
                                    RingElement::zero(ring), d);
}

}  // namespace

TEST_CASE("coset keys characterise double cosets") {
    CHECK(coset_key(parse_matrix(kZ, "[[1,0],[0,4]]")) == coset_key(parse_matrix(kZ, "[[2,1],[0,2]]")));
    CHECK(coset_key(parse_matrix(kZ, "[[2,0],[0,2]]")) != coset_key(parse_matrix(kZ, "[[1,0],[0,4]]")));
    auto key = coset_key(Mat2::identity(kR5));
    CHECK(key.delta1.is_unit_ideal());
    CHECK(key.f2.is_unit_ideal());
    CHECK_THROWS_AS(coset_key(parse_matrix(kZ, "[[1,0],[0,0]]")), std::domain_error);
}

TEST_CASE("sampler produces unimodular matrices deterministically") {
    SamplerConfig cfg;
    cfg.seed = 123;
    for (const Ring& ring : {kZ, kR5, Ring::quadratic(Int(2))}) {
        for (std::uint64_t pos = 0; pos < 40; ++pos) {
            Mat2 u = sample_unimodular(ring, cfg, pos);
            REQUIRE(classify(u).in_u);
            REQUIRE(u == sample_unimodular(ring, cfg, pos));
        }
    }
    SamplerConfig trivial;
    trivial.word_length = 0;
    CHECK(sample_unimodular(kR5, trivial, 5) == Mat2::identity(kR5));
    SamplerConfig other;
    other.seed = 124;
    bool all_equal = true;
    for (std::uint64_t pos = 0; pos < 20; ++pos)
        all_equal = all_equal && sample_unimodular(kR5, cfg, pos) ==
                                     sample_unimodular(kR5, other, pos);
    CHECK_FALSE(all_equal);
}

TEST_CASE("probabilistic decomposition matches the reference transversal") {
    Mat2 m = diag(kR5, RingElement(kR5, 2));
    std::vector<Mat2> expected;
    for (const char* t : {"[[1,0],[0,2]]", "[[1,1],[0,2]]", "[[1,0+1*w],[0,2]]",
                          "[[1,1+1*w],[0,2]]", "[[2,0],[0,1]]", "[[2,0],[1+1*w,1]]"})
        expected.push_back(parse_matrix(kR5, t));
    SamplerConfig cfg;
    DecomposeStats stats;
    auto reps = decompose_probabilistic(m, cfg, 0, &stats);
    CHECK(coset_sets_equal(reps, expected));
    CHECK(stats.samples > 0);

    auto zreps = decompose_probabilistic(parse_matrix(kZ, "[[1,0],[0,4]]"), cfg);
    CHECK(coset_sets_equal(zreps, decompose_deterministic(parse_matrix(kZ, "[[1,0],[0,4]]"))));

    auto single = decompose_probabilistic(Mat2::identity(kR5), cfg, 0, &stats);
    REQUIRE(single.size() == 1);
    CHECK(stats.samples == 0);
}

TEST_CASE("probabilistic equals deterministic for seeds 0, 1, 2") {
    for (const char* text : {"[[1,0],[0,2]]", "[[1,0],[0,3]]", "[[2,1],[0,2]]"}) {
        Mat2 m = parse_matrix(kR5, text);
        auto determ = decompose_deterministic(m);
        for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
            SamplerConfig cfg;
            cfg.seed = seed;
            REQUIRE(coset_sets_equal(decompose_probabilistic(m, cfg), determ));
        }
    }
}

TEST_CASE("budget exhaustion is reported") {
    Mat2 m = diag(kR5, RingElement(kR5, 3));
    SamplerConfig cfg;
    CHECK_THROWS_AS(decompose_probabilistic(m, cfg, 3), std::runtime_error);
}

TEST_CASE("hecke square over Q(sqrt,-5) reference product") {
    Mat2 m = diag(kR5, RingElement(kR5, 2));
    HeckeElement product = hecke_multiply(m, m);
    REQUIRE(product.terms().size() == 3);
    CHECK(product.coefficient(coset_key(parse_matrix(kR5, "[[1,0],[0,4]]"))) == 1);
    CHECK(product.coefficient(coset_key(parse_matrix(kR5, "[[2,0],[0,2]]"))) == 6);
    CHECK(product.coefficient(coset_key(parse_matrix(kR5, "[[2,1+1*w],[0,2]]"))) == 1);
}

TEST_CASE("hecke square over Z against the product oracle") {
    // independent oracle: multiply the Hermite transversals pairwise and
    // bucket by Hermite normal form of the product
    auto hnf_z = [](const Mat2& m) {
        Int a = m.a().num().x(), b = m.b().num().x();
        Int c = m.c().num().x(), d = m.d().num().x();
        if (c != 0) {
            while (c != 0) {  // euclidean row reduction on (a;c)
                if (abs(a) > abs(c) || a == 0) {
                    std::swap(a, c);
                    std::swap(b, d);
                } else {
                    Int q(c / a);
                    c -= q * a;
                    d -= q * b;
                }
            }
        }
        if (a < 0) { a = -a; b = -b; }
        if (d < 0) { d = -d; }
        if (d != 0) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
            b = r;
        }
        return std::array<Int, 4>{a, b, Int(0), d};
    };

    Mat2 m = parse_matrix(kZ, "[[1,0],[0,2]]");
    auto t = decompose_deterministic(m);
    REQUIRE(t.size() == 3);
    std::map<std::array<Int, 4>, long> oracle;
    for (const auto& ai : t)
        for (const auto& bj : t) oracle[hnf_z(ai * bj)] += 1;
    // products fall in two double cosets: six distinct right cosets in the
    // diag(1,4) class hit once each, one right coset in the diag(2,2) class
    // hit three times
    long diag14_class = 0, diag22_class = 0;
    for (const auto& [form, count] : oracle) {
        Mat2 rep = Mat2::from_ring_elements(RingElement(kZ, form[0]), RingElement(kZ, form[1]),
                                            RingElement(kZ, form[2]), RingElement(kZ, form[3]));
        if (same_double_coset(rep, parse_matrix(kZ, "[[1,0],[0,4]]"))) {
            diag14_class += count;
            CHECK(count == 1);
        } else {
            diag22_class += count;
            CHECK(form == std::array<Int, 4>{Int(2), Int(0), Int(0), Int(2)});
        }
    }
    CHECK(diag14_class == 6);
    CHECK(diag22_class == 3);
    CHECK(oracle.size() == 7);

    HeckeElement product = hecke_multiply(m, m);
    REQUIRE(product.terms().size() == 2);
    CHECK(product.coefficient(coset_key(parse_matrix(kZ, "[[1,0],[0,4]]"))) ==
          oracle[{Int(1), Int(0), Int(0), Int(4)}]);
    CHECK(product.coefficient(coset_key(parse_matrix(kZ, "[[2,0],[0,2]]"))) ==
          oracle[{Int(2), Int(0), Int(0), Int(2)}]);
    // conservation across the classes: 9 products = 1*mu(diag(1,4)) + 3*mu(diag(2,2))
    CHECK(diag14_class + diag22_class == 9);
}

TEST_CASE("multiplying by a unimodular class is the identity") {
    SamplerConfig cfg;
    cfg.seed = 31;
    Mat2 u = sample_unimodular(kR5, cfg, 4);
    Mat2 b = parse_matrix(kR5, "[[1,1],[0,2]]");
    HeckeElement product = hecke_multiply(u, b);
    REQUIRE(product.terms().size() == 1);
    CHECK(product.coefficient(coset_key(b)) == 1);
}

TEST_CASE("well-definedness: deterministic and probabilistic decomposition agree") {
    Mat2 m = diag(kR5, RingElement(kR5, 2));
    HeckeElement det_product = hecke_multiply(m, m);
    for (std::uint64_t seed : {5ULL, 6ULL}) {
        Decomposer dec;
        dec.probabilistic = true;
        dec.cfg.seed = seed;
        HeckeElement rand_product = hecke_multiply(m, m, dec);
        REQUIRE(rand_product == det_product);  // exact key and coefficient equality
        for (const auto& [key, coeff] : det_product.terms())
            REQUIRE(same_double_coset(rand_product.witness(key), det_product.witness(key)));
    }
}

TEST_CASE("conservation and principal functional multiplicativity") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const Ring& ring = (i % 2 == 0) ? kZ : kR5;
        Mat2 a = testutil::random_in_i(ring, rng, 3, Int(100));
        Mat2 b = testutil::random_in_i(ring, rng, 3, Int(100));
        HeckeElement product = hecke_multiply(a, b);
        Int total(0);
        for (const auto& [key, coeff] : product.terms())
            total += coeff * mu_total(product.witness(key));
        REQUIRE(total == mu_total(a) * mu_total(b));
        REQUIRE(mu_principal_functional(product) ==
                mu_principal_functional(HeckeElement::characteristic(a)) *
                    mu_principal_functional(HeckeElement::characteristic(b)));
    }
}

TEST_CASE("principal functional on the worked examples") {
    CHECK(mu_principal_functional(HeckeElement::characteristic(parse_matrix(kZ, "[[1,0],[0,4]]"))) ==
          4);
    CHECK(mu_principal_functional(
              HeckeElement::characteristic(diag(kR5, RingElement(kR5, 2)))) == 4);
    CHECK(mu_principal_functional(HeckeElement::characteristic(Mat2::identity(kR5))) == 1);
}

TEST_CASE("associativity spot check") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10; ++i) {
        const Ring& ring = (i % 2 == 0) ? kZ : kR5;
        Mat2 a = testutil::random_in_i(ring, rng, 2, Int(36));
        Mat2 b = testutil::random_in_i(ring, rng, 2, Int(36));
        Mat2 c = testutil::random_in_i(ring, rng, 2, Int(36));
        HeckeElement left = hecke_multiply(hecke_multiply(a, b), HeckeElement::characteristic(c));
        HeckeElement right = hecke_multiply(HeckeElement::characteristic(a), hecke_multiply(b, c));
        REQUIRE(left == right);
    }
}

TEST_CASE("reduction theorem") {
    RingElement two(kR5, 2), three(kR5, 3), six(kR5, 6);
    CHECK(reduction_check(two, three, six) == 1);
    CHECK(reduction_check(two, three, -six) == 1);
    CHECK(reduction_check(two, three, two) == 0);
    CHECK_THROWS_AS(reduction_check(two, three, RingElement::zero(kR5)), std::domain_error);
}
