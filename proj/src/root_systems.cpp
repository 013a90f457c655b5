#include "localh/root_systems.hpp"

#include <utility>

#include "localh/errors.hpp"

namespace localh {

RootSystem RootSystem::A(int n) {
  if (n < 1) throw InvalidRank("type A requires rank n >= 1");
  return RootSystem(Family::A, n);
}
RootSystem RootSystem::B(int n) {
  if (n < 2) throw InvalidRank("type B requires rank n >= 2");
  return RootSystem(Family::B, n);
}
RootSystem RootSystem::D(int n) {
  if (n < 2) throw InvalidRank("type D requires rank n >= 2");
  return RootSystem(Family::D, n);
}
RootSystem RootSystem::I2(int m) {
  if (m < 3) throw InvalidRank("type I2 requires parameter m >= 3");
  return RootSystem(Family::I2, m);
}
RootSystem RootSystem::H3() { return RootSystem(Family::H3, 3); }
RootSystem RootSystem::H4() { return RootSystem(Family::H4, 4); }
RootSystem RootSystem::F4() { return RootSystem(Family::F4, 4); }
RootSystem RootSystem::E6() { return RootSystem(Family::E6, 6); }
RootSystem RootSystem::E7() { return RootSystem(Family::E7, 7); }
RootSystem RootSystem::E8() { return RootSystem(Family::E8, 8); }

int RootSystem::rank() const noexcept {
  switch (family_) {
    case Family::A:
    case Family::B:
    case Family::D:
      return param_;
    case Family::I2:
      return 2;
    case Family::H3:
      return 3;
    case Family::H4:
    case Family::F4:
      return 4;
    case Family::E6:
      return 6;
    case Family::E7:
      return 7;
    case Family::E8:
      return 8;
  }
  return 0;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::string RootSystem::name() const {
  switch (family_) {
    case Family::A:
    case Family::B:
    case Family::D:
      return family_name(family_) + std::to_string(param_);
    case Family::I2:
      return "I2(" + std::to_string(param_) + ")";
    default:
      return family_name(family_);
  }
}

namespace {

XiVector table_vector(int n, std::vector<long> entries) {
  std::vector<Rational> xi;
  xi.reserve(entries.size());
  for (long e : entries) xi.emplace_back(e);
  return make_xi_vector(n, std::move(xi));
}

}  // namespace

XiVector xi_vector(const RootSystem& rs) {
  const int n = rs.rank();
  switch (rs.family()) {
    case Family::I2:
      return table_vector(2, {0, rs.parameter() - 2});
    case Family::H3:
      return table_vector(3, {0, 8});
    case Family::H4:
      return table_vector(4, {0, 42, 40});
    case Family::F4:
      return table_vector(4, {0, 10, 9});
    case Family::E6:
      return table_vector(6, {0, 7, 35, 13});
    case Family::E7:
      return table_vector(7, {0, 16, 124, 112});
    case Family::E8:
      return table_vector(8, {0, 44, 484, 784, 120});
    default:
      break;
  }
  std::vector<Rational> xi(static_cast<std::size_t>(n / 2) + 1, Rational(0));
  for (int i = 1; i <= n / 2; ++i) {
    Rational v;
    switch (rs.family()) {
      case Family::A:
        v = rational(Integer(binomial(n, i) * binomial(n - i - 1, i - 1)),
                     Integer(n - i + 1));
        break;
      case Family::B:
        v = Rational(binomial(n, i) * binomial(n - i - 1, i - 1));
        break;
      case Family::D:
        v = rational(Integer((n - 2) * binomial(2 * i - 2, i - 1) *
                             binomial(n - 2, 2 * i - 2)),
                     Integer(i));
        break;
      default:
        break;
    }
    // The division in the A and D formulas is always exact; a fractional
    // value here means the formula was transcribed wrong.
    if (!is_integer(v) || sign(v) < 0)
      throw Error("xi_vector: non-integral or negative entry for " + rs.name());
    xi[static_cast<std::size_t>(i)] = std::move(v);
  }
  return make_xi_vector(n, std::move(xi));
}

Poly local_h(const RootSystem& rs) { return xi_to_poly(xi_vector(rs)); }

Poly narayana_poly(int n) {
  if (n < 0) throw NegativeOrder("narayana_poly requires n >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    c[static_cast<std::size_t>(i)] =
        rational(Integer(binomial(n + 1, i) * binomial(n + 1, i + 1)),
                 Integer(n + 1));
  return Poly(std::move(c));
}

namespace {

/// sum_{i=0}^{floor(n/2)} C(2i,i) C(n,2i)/(i+1) x^i (1+x)^(n-2i)
Poly narayana_gamma_expansion(int n) {
  std::vector<Rational> xi(static_cast<std::size_t>(n / 2) + 1);
  for (int i = 0; i <= n / 2; ++i)
    xi[static_cast<std::size_t>(i)] =
        rational(Integer(binomial(2 * i, i) * binomial(n, 2 * i)),
                 Integer(i + 1));
  return xi_to_poly(XiVector{n, std::move(xi)});
}

}  // namespace

bool verify_d_identity(int n) {
  if (n < 2) throw InvalidRank("verify_d_identity requires n >= 2");
  const bool gamma_ok = narayana_gamma_expansion(n) == narayana_poly(n);
  const Poly lhs = local_h(RootSystem::D(n));
  const Poly rhs =
      Rational(n - 2) * (Poly::x() * narayana_poly(n - 2));
  return gamma_ok && lhs == rhs;
}

}  // namespace localh
