#include <doctest.h>

#include <random>

#include "localh/batch.hpp"
#include "localh/errors.hpp"
#include "localh/root_systems.hpp"
#include "localh/xi_basis.hpp"
#include "test_util.hpp"

using namespace localh;

namespace {
XiVector xiv(int n, std::initializer_list<long> entries) {
  std::vector<Rational> v;
  for (long e : entries) v.emplace_back(e);
  return make_xi_vector(n, std::move(v));
}
}  // namespace

TEST_CASE("xi_to_poly examples") {
  CHECK(xi_to_poly(xiv(4, {0, 1, 2})) == Poly::from_ints({0, 1, 4, 1}));
  CHECK(xi_to_poly(xiv(3, {0, 8})) == Poly::from_ints({0, 8, 8}));
  CHECK(xi_to_poly(xiv(6, {0, 0, 0, 0})).is_zero());
  CHECK(xi_to_poly(xiv(0, {3})) == Poly::from_ints({3}));
}

TEST_CASE("poly_to_xi examples") {
  const XiVector a = poly_to_xi(Poly::from_ints({0, 1, 4, 1}), 4);
  CHECK(a.xi == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});

  const XiVector b = poly_to_xi(pow(Poly::from_ints({1, 1}), 6), 6);
  CHECK(b.xi == std::vector<Rational>{Rational(1), Rational(0), Rational(0),
                                      Rational(0)});

  const XiVector c = poly_to_xi(Poly::from_ints({1, 1, 1}), 2);
  CHECK(c.xi == std::vector<Rational>{Rational(1), Rational(-1)});
}

TEST_CASE("poly_to_xi error paths") {
  CHECK_THROWS_AS(poly_to_xi(Poly::from_ints({1, 1}), 2), NotInBasisSpan);
  CHECK_THROWS_AS(poly_to_xi(Poly::from_ints({0, 0, 0, 1}), 2), DegreeTooLarge);
  CHECK_THROWS_AS(make_xi_vector(4, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("xi_to_poly output is palindromic") {
  std::mt19937_64 g(555);
  for (int it = 0; it < 50; ++it) {
    const int n = 1 + it % 17;
    std::vector<Rational> xi(static_cast<std::size_t>(n / 2) + 1);
    for (auto& v : xi) v = testutil::rand_rational(g, 9, 9);
    const Poly p = xi_to_poly(make_xi_vector(n, std::move(xi)));
    for (int i = 0; i <= n; ++i)
      CHECK(p.coeff(static_cast<std::size_t>(i)) ==
            p.coeff(static_cast<std::size_t>(n - i)));
  }
}

TEST_CASE("round trip poly_to_xi after xi_to_poly") {
  std::mt19937_64 g(556);
  for (int it = 0; it < 200; ++it) {
    const int n = it % 41;
    std::vector<Rational> xi(static_cast<std::size_t>(n / 2) + 1);
    for (auto& v : xi) v = testutil::rand_rational(g, 9, 9);
    const XiVector v = make_xi_vector(n, std::move(xi));
    const XiVector back = poly_to_xi(xi_to_poly(v), n);
    CHECK(back.n == v.n);
    CHECK(back.xi == v.xi);
  }
}

TEST_CASE("transfer check examples") {
  SUBCASE("n=4, xi=(0,1,2)") {
    const TransferReport rep = realrootedness_transfer_check(xiv(4, {0, 1, 2}));
    CHECK(rep.xi_certificate.is_real_rooted);
    CHECK(rep.local_h_certificate.is_real_rooted);
    CHECK(rep.certificates_agree);
    REQUIRE(rep.locations.has_value());
    CHECK(rep.locations->in_neg_inf_to_minus_one == 1);
    CHECK(rep.locations->in_minus_one_to_zero == 1);
    CHECK(rep.locations->multiplicity_at_zero == 1);
    CHECK(rep.locations->multiplicity_at_minus_one == 0);
    CHECK(rep.locations->expected_side_count == 1);
    CHECK(rep.locations->matches_claim);
  }
  SUBCASE("n=5, xi=(0,1,2) has a root at -1") {
    const TransferReport rep = realrootedness_transfer_check(xiv(5, {0, 1, 2}));
    CHECK(rep.certificates_agree);
    CHECK(rep.local_h_certificate.is_real_rooted);
    REQUIRE(rep.locations.has_value());
    CHECK(rep.locations->multiplicity_at_minus_one == 1);
    CHECK(rep.locations->matches_claim);
  }
  SUBCASE("n=2, xi=(0,1) degenerate zero counts") {
    const TransferReport rep = realrootedness_transfer_check(xiv(2, {0, 1}));
    CHECK(rep.certificates_agree);
    REQUIRE(rep.locations.has_value());
    CHECK(rep.locations->in_neg_inf_to_minus_one == 0);
    CHECK(rep.locations->in_minus_one_to_zero == 0);
    CHECK(rep.locations->expected_side_count == 0);
    CHECK(rep.locations->matches_claim);
  }
  SUBCASE("a non-real-rooted xi propagates to both sides") {
    // xi(x) = x + x^3 has two complex roots; the equivalence still holds.
    const TransferReport rep = realrootedness_transfer_check(xiv(6, {0, 1, 0, 1}));
    CHECK_FALSE(rep.xi_certificate.is_real_rooted);
    CHECK_FALSE(rep.local_h_certificate.is_real_rooted);
    CHECK(rep.certificates_agree);
    CHECK_FALSE(rep.locations.has_value());
  }
}

TEST_CASE("transfer check error paths") {
  CHECK_THROWS_AS(realrootedness_transfer_check(xiv(4, {1, 1, 0})),
                  UnsupportedXiZero);
  CHECK_THROWS_AS(realrootedness_transfer_check(xiv(4, {0, 0, 0})), ZeroInput);
}

TEST_CASE("transfer holds for every cluster xi vector up to rank 64") {
  std::vector<RootSystem> systems{RootSystem::H3(), RootSystem::H4(),
                                  RootSystem::F4(), RootSystem::E6(),
                                  RootSystem::E7(), RootSystem::E8()};
  for (int m = 3; m <= 12; ++m) systems.push_back(RootSystem::I2(m));
  for (int n = 2; n <= 64; ++n) {
    systems.push_back(RootSystem::A(n));
    systems.push_back(RootSystem::B(n));
    if (n >= 3) systems.push_back(RootSystem::D(n));  // D(2) is the zero vector
  }
  const std::vector<bool> oks =
      parallel_map_ordered<bool>(systems.size(), [&](std::size_t i) {
        const TransferReport rep =
            realrootedness_transfer_check(xi_vector(systems[i]));
        bool ok = rep.xi_certificate.is_real_rooted &&
                  rep.local_h_certificate.is_real_rooted &&
                  rep.certificates_agree;
        // the side counts apply throughout the cluster family
        ok = ok && rep.locations.has_value() && rep.locations->matches_claim;
        return ok;
      });
  for (std::size_t i = 0; i < oks.size(); ++i) {
    INFO(systems[i].name());
    CHECK(oks[i]);
  }
}
