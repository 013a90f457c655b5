#include <doctest.h>

#include <random>

#include "localh/errors.hpp"
#include "localh/sturm.hpp"
#include "test_util.hpp"

using namespace localh;
using testutil::naive_sturm_chain;
using testutil::naive_variations;
using testutil::rand_complex_quadratic;
using testutil::rand_real_rooted;

namespace {
const ExtendedBound kNegInf = ExtendedBound::neg_infinity();
const ExtendedBound kPosInf = ExtendedBound::pos_infinity();
ExtendedBound at(long num, long den = 1) {
  return ExtendedBound::finite(rational(num, den));
}
}  // namespace

TEST_CASE("extended bound ordering") {
  CHECK(kNegInf < at(-1000000));
  CHECK(at(1000000) < kPosInf);
  CHECK(kNegInf < kPosInf);
  CHECK(at(-1) < at(0));
  CHECK_FALSE(kPosInf < kPosInf);
}

TEST_CASE("sturm chain textbook examples") {
  const SturmChain c1 = sturm_chain(Poly::from_ints({-1, 0, 1}));  // x^2 - 1
  REQUIRE(c1.polys().size() == 3);
  CHECK(c1.polys()[0] == Poly::from_ints({-1, 0, 1}));
  CHECK(c1.polys()[1] == Poly::from_ints({0, 2}));
  CHECK(c1.polys()[2] == Poly::from_ints({1}));
  CHECK(c1.variations_at(kNegInf) - c1.variations_at(kPosInf) == 2);

  const SturmChain c2 = sturm_chain(Poly::from_ints({1, 0, 1}));  // x^2 + 1
  REQUIRE(c2.polys().size() == 3);
  CHECK(c2.polys()[2] == Poly::from_ints({-1}));
  CHECK(c2.variations_at(kNegInf) - c2.variations_at(kPosInf) == 0);

  const SturmChain c3 = sturm_chain(Poly::x());
  CHECK(c3.polys().size() == 2);
  CHECK(c3.variations_at(kNegInf) - c3.variations_at(kPosInf) == 1);
}

TEST_CASE("sturm chain rejects bad input") {
  CHECK_THROWS_AS(sturm_chain(Poly()), ZeroPolynomial);
  const Poly sq = Poly::from_ints({1, 2, 1});  // (1+x)^2
  CHECK_THROWS_AS(sturm_chain(sq), NotSquarefree);
}

TEST_CASE("count_roots_in examples") {
  const Poly h4 = Poly::from_ints({1, 3, 1});
  CHECK(count_roots_in(h4, kNegInf, at(0)) == 2);
  CHECK(count_roots_in(h4, at(0), kPosInf) == 0);
  CHECK(count_roots_in(Poly::from_ints({1, 0, 1}), kNegInf, kPosInf) == 0);
  CHECK_THROWS_AS(count_roots_in(Poly(), kNegInf, kPosInf), ZeroPolynomial);
  CHECK_THROWS_AS(count_roots_in(Poly::x(), at(0), at(1)), EndpointIsRoot);
  CHECK_THROWS_AS(count_roots_in(h4, at(1), at(0)), std::invalid_argument);
}

TEST_CASE("count additivity over adjacent intervals") {
  const Poly p = Poly::from_ints({0, 1, 4, 1});  // roots 0, -2 +- sqrt(3)
  // sample points avoiding the roots
  CHECK(count_roots_in(p, kNegInf, at(-2)) + count_roots_in(p, at(-2), at(1, 8)) +
            count_roots_in(p, at(1, 8), kPosInf) ==
        count_roots_in(p, kNegInf, kPosInf));
}

TEST_CASE("certificate examples") {
  SUBCASE("x + 4x^2 + x^3 is real-rooted with three simple roots") {
    const RealRootCertificate c = certify_real_rooted(Poly::from_ints({0, 1, 4, 1}));
    CHECK(c.is_real_rooted);
    CHECK(c.degree == 3);
    CHECK(c.distinct_real_roots == 3);
    CHECK(c.total_with_multiplicity == 3);
  }
  SUBCASE("1 + x + x^2 has no real roots") {
    const RealRootCertificate c = certify_real_rooted(Poly::from_ints({1, 1, 1}));
    CHECK_FALSE(c.is_real_rooted);
    CHECK(c.distinct_real_roots == 0);
    CHECK(c.total_with_multiplicity == 0);
  }
  SUBCASE("(1+x)^4 has one distinct root of multiplicity four") {
    CertifyOptions opts;
    opts.isolate = true;
    const RealRootCertificate c =
        certify_real_rooted(pow(Poly::from_ints({1, 1}), 4), opts);
    CHECK(c.is_real_rooted);
    CHECK(c.distinct_real_roots == 1);
    CHECK(c.total_with_multiplicity == 4);
    REQUIRE(c.isolating_intervals.size() == 1);
    CHECK(c.isolating_intervals[0].multiplicity == 4);
    CHECK(c.isolating_intervals[0].lo <= Rational(-1));
    CHECK(c.isolating_intervals[0].hi >= Rational(-1));
  }
  SUBCASE("zero polynomial is real-rooted by convention, degree undefined") {
    const RealRootCertificate c = certify_real_rooted(Poly());
    CHECK(c.is_real_rooted);
    CHECK_FALSE(c.degree.has_value());
    CHECK(c.total_with_multiplicity == 0);
  }
  SUBCASE("nonzero constant is real-rooted with zero roots") {
    const RealRootCertificate c = certify_real_rooted(Poly::from_ints({5}));
    CHECK(c.is_real_rooted);
    CHECK(c.degree == 0);
    CHECK(c.distinct_real_roots == 0);
  }
}

TEST_CASE("isolation examples") {
  SUBCASE("single root of 1 + x") {
    const auto ivs = isolate_real_roots(Poly::from_ints({1, 1}), rational(1, 8));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo <= Rational(-1));
    CHECK(ivs[0].hi >= Rational(-1));
    CHECK(ivs[0].hi - ivs[0].lo <= rational(1, 8));
  }
  SUBCASE("two roots of 1 + 3x + x^2") {
    const Poly p = Poly::from_ints({1, 3, 1});
    const auto ivs = isolate_real_roots(p, rational(1, 64));
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].hi < ivs[1].lo);
    for (const RootInterval& iv : ivs) {
      CHECK(iv.hi - iv.lo <= rational(1, 64));
      if (iv.lo == iv.hi)
        CHECK(sign(eval(p, iv.lo)) == 0);
      else
        CHECK(sign(eval(p, iv.lo)) * sign(eval(p, iv.hi)) < 0);
    }
    // (-3-sqrt(5))/2 in (-2.7, -2.5); (-3+sqrt(5))/2 in (-0.4, -0.3)
    CHECK(ivs[0].lo > rational(-27, 10));
    CHECK(ivs[0].hi < rational(-5, 2));
    CHECK(ivs[1].lo > rational(-2, 5));
    CHECK(ivs[1].hi < rational(-3, 10));
  }
  SUBCASE("no real roots") {
    CHECK(isolate_real_roots(Poly::from_ints({1, 0, 1}), rational(1, 4)).empty());
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(isolate_real_roots(Poly(), rational(1, 4)), ZeroPolynomial);
    CHECK_THROWS_AS(isolate_real_roots(Poly::x(), Rational(0)),
                    std::invalid_argument);
  }
}

TEST_CASE("random products of linear factors certify as constructed") {
  std::mt19937_64 g(99);
  std::uniform_int_distribution<int> nf(1, 10);
  for (int it = 0; it < 60; ++it) {
    const testutil::RootedPoly rp = rand_real_rooted(g, nf(g));
    CertifyOptions opts;
    opts.isolate = true;
    const RealRootCertificate c = certify_real_rooted(rp.p, opts);
    CHECK(c.is_real_rooted);
    CHECK(c.total_with_multiplicity == rp.factor_count);
    CHECK(c.distinct_real_roots == static_cast<int>(rp.roots.size()));
    CHECK(count_roots_in(rp.p, kNegInf, kPosInf) == c.distinct_real_roots);
    // each constructed root lies in exactly one interval with its multiplicity
    REQUIRE(c.isolating_intervals.size() == rp.roots.size());
    std::size_t idx = 0;
    int mult_sum = 0;
    for (const auto& [root, mult] : rp.roots) {  // std::map is ordered
      const RootInterval& iv = c.isolating_intervals[idx++];
      CHECK(iv.lo <= root);
      CHECK(root <= iv.hi);
      CHECK(iv.multiplicity == mult);
      mult_sum += iv.multiplicity;
    }
    CHECK(mult_sum == c.total_with_multiplicity);
  }
}

TEST_CASE("interval counts match construction-known roots") {
  std::mt19937_64 g(771177);
  std::uniform_int_distribution<int> nf(2, 9);
  std::uniform_int_distribution<long> bnum(-13, 13);
  for (int it = 0; it < 40; ++it) {
    const testutil::RootedPoly rp = rand_real_rooted(g, nf(g));
    // random half-integer bounds; roots have denominators 1..3 so quarters
    // shifted by 1/8 are never roots
    Rational a = rational(4 * bnum(g) + 1, 8);
    Rational b = rational(4 * bnum(g) + 3, 8);
    if (b < a) std::swap(a, b);
    if (a == b) continue;
    int expected = 0;
    for (const auto& [root, mult] : rp.roots)
      if (a < root && root < b) ++expected;
    CHECK(count_roots_in(rp.p, ExtendedBound::finite(a),
                         ExtendedBound::finite(b)) == expected);
  }
}

TEST_CASE("complex quadratic factor breaks real-rootedness") {
  std::mt19937_64 g(1001);
  for (int it = 0; it < 25; ++it) {
    const Poly p = rand_real_rooted(g, 1 + it % 5).p * rand_complex_quadratic(g);
    const RealRootCertificate c = certify_real_rooted(p);
    CHECK_FALSE(c.is_real_rooted);
    CHECK(count_roots_in(p, kNegInf, kPosInf) == c.distinct_real_roots);
  }
}

TEST_CASE("signed PRS chain matches naive rational chain") {
  std::mt19937_64 g(31337);
  const Rational samples[] = {rational(-7, 2), rational(-1), rational(-1, 3),
                              rational(0),     rational(2, 5), rational(3)};
  std::vector<Poly> inputs;
  for (int it = 0; it < 40; ++it)
    inputs.push_back(squarefree_part(testutil::rand_poly(g, 2 + it % 7, 50)));
  // defective sequences: interior degree drops of more than one
  inputs.push_back(Poly::from_ints({1, 0, 0, 0, 0, 1}));     // x^5 + 1
  inputs.push_back(Poly::from_ints({1, 1, 0, 0, 0, 0, 0, 1}));
  inputs.push_back(Poly::from_ints({-5, 2, 8, -3, -3, 0, 1, 0, 1}));  // Knuth's u
  for (const Poly& p : inputs) {
    if (p.degree() < 1) continue;
    const SturmChain mine = sturm_chain(p);
    const std::vector<Poly> naive = naive_sturm_chain(p);
    // entrywise proportionality with a positive factor, not just equal counts
    REQUIRE(mine.polys().size() == naive.size());
    for (std::size_t k = 0; k < naive.size(); ++k) {
      const Poly& a = mine.polys()[k];
      const Poly& b = naive[k];
      CHECK(sign(a.leading()) == sign(b.leading()));
      CHECK(a * b.leading() == b * a.leading());
    }
    for (const Rational& t : samples)
      CHECK(mine.variations_at(ExtendedBound::finite(t)) ==
            naive_variations(naive, t));
  }
}

TEST_CASE("gcd survives Knuth's defective remainder sequence") {
  // Degrees along the PRS drop 8 -> 6 -> 4 -> 2 -> 1 -> 0, so the reduced
  // divisor path with delta >= 2 gets exercised in the middle of the run.
  const Poly u = Poly::from_ints({-5, 2, 8, -3, -3, 0, 1, 0, 1});
  const Poly v = Poly::from_ints({21, -9, -4, 0, 5, 0, 3});
  CHECK(gcd(u, v) == Poly::from_ints({1}));
  CHECK(gcd(u * v, v) == primitive_part(v));
}

TEST_CASE("defective degree sequences still work") {
  // x^5 + 1: the first remainder drops four degrees at once.
  const Poly p = Poly::from_ints({1, 0, 0, 0, 0, 1});
  const SturmChain c = sturm_chain(p);
  CHECK(c.variations_at(kNegInf) - c.variations_at(kPosInf) == 1);
  const RealRootCertificate cert = certify_real_rooted(p);
  CHECK(cert.distinct_real_roots == 1);
  CHECK_FALSE(cert.is_real_rooted);
}

TEST_CASE("deflate and multiplicity") {
  const Poly p = Poly::x() * Poly::x() * Poly::from_ints({1, 1});
  CHECK(multiplicity_of_root(p, Rational(0)) == 2);
  CHECK(multiplicity_of_root(p, Rational(-1)) == 1);
  CHECK(multiplicity_of_root(p, Rational(7)) == 0);
  auto [q, m] = deflate(p, Rational(0));
  CHECK(m == 2);
  CHECK(q == Poly::from_ints({1, 1}));
  CHECK_THROWS_AS(deflate(Poly(), Rational(0)), ZeroPolynomial);
}
