#include "localh/multiplier.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>

#include "localh/errors.hpp"

namespace localh {

namespace {
struct RecipFact {};
struct RecipShifted {
  int n;
};
struct BinomRecip {
  int n;
};
struct Explicit {
  std::vector<Rational> gammas;
};
struct Hadamard {
  std::shared_ptr<const MultiplierSeq::Node> a, b;
};
}  // namespace

struct MultiplierSeq::Node {
  std::variant<RecipFact, RecipShifted, BinomRecip, Explicit, Hadamard> v;
};

MultiplierSeq MultiplierSeq::reciprocal_factorial() {
  return MultiplierSeq(std::make_shared<Node>(Node{RecipFact{}}));
}

MultiplierSeq MultiplierSeq::reciprocal_shifted_factorial(int n) {
  if (n < 0)
    throw std::invalid_argument("reciprocal_shifted_factorial: n must be >= 0");
  return MultiplierSeq(std::make_shared<Node>(Node{RecipShifted{n}}));
}

MultiplierSeq MultiplierSeq::binomial_reciprocal(int n) {
  if (n < 0) throw std::invalid_argument("binomial_reciprocal: n must be >= 0");
  return MultiplierSeq(std::make_shared<Node>(Node{BinomRecip{n}}));
}

MultiplierSeq MultiplierSeq::explicit_seq(std::vector<Rational> gammas) {
  return MultiplierSeq(std::make_shared<Node>(Node{Explicit{std::move(gammas)}}));
}

MultiplierSeq hadamard(const MultiplierSeq& a, const MultiplierSeq& b) {
  return MultiplierSeq(
      std::make_shared<MultiplierSeq::Node>(MultiplierSeq::Node{Hadamard{a.node_, b.node_}}));
}

namespace {

Rational node_at(const MultiplierSeq::Node& node, unsigned long k);

Rational eval_variant(const RecipFact&, unsigned long k) {
  return rational(Integer(1), factorial(k));
}
Rational eval_variant(const RecipShifted& s, unsigned long k) {
  if (k > static_cast<unsigned long>(s.n)) return Rational(0);
  return rational(Integer(1), factorial(static_cast<unsigned long>(s.n) - k));
}
Rational eval_variant(const BinomRecip& s, unsigned long k) {
  if (k > static_cast<unsigned long>(s.n)) return Rational(0);
  return rational(Integer(1),
                  Integer(factorial(k) * factorial(static_cast<unsigned long>(s.n) - k)));
}
Rational eval_variant(const Explicit& s, unsigned long k) {
  return k < s.gammas.size() ? s.gammas[k] : Rational(0);
}
Rational eval_variant(const Hadamard& s, unsigned long k) {
  return node_at(*s.a, k) * node_at(*s.b, k);
}

Rational node_at(const MultiplierSeq::Node& node, unsigned long k) {
  return std::visit([k](const auto& v) { return eval_variant(v, k); }, node.v);
}

std::string node_describe(const MultiplierSeq::Node& node);

std::string describe_variant(const RecipFact&) { return "reciprocal-factorial"; }
std::string describe_variant(const RecipShifted& s) {
  return "reciprocal-shifted-factorial(" + std::to_string(s.n) + ")";
}
std::string describe_variant(const BinomRecip& s) {
  return "binomial-reciprocal(" + std::to_string(s.n) + ")";
}
std::string describe_variant(const Explicit& s) {
  std::ostringstream os;
  os << "explicit(";
  for (std::size_t i = 0; i < s.gammas.size(); ++i) {
    if (i) os << ",";
    os << to_string(s.gammas[i]);
  }
  os << ")";
  return os.str();
}
std::string describe_variant(const Hadamard& s) {
  return "hadamard(" + node_describe(*s.a) + ", " + node_describe(*s.b) + ")";
}

std::string node_describe(const MultiplierSeq::Node& node) {
  return std::visit([](const auto& v) { return describe_variant(v); }, node.v);
}

}  // namespace

Rational MultiplierSeq::at(unsigned long k) const { return node_at(*node_, k); }

std::string MultiplierSeq::describe() const { return node_describe(*node_); }

Poly apply_sequence(const MultiplierSeq& s, const Poly& p) {
  std::vector<Rational> c(p.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s.at(k) * p.coeffs()[k];
  return Poly(std::move(c));
}

Poly polya_schur_test_poly(const MultiplierSeq& s, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(k)] =
        Rational(binomial(n, k)) * s.at(static_cast<unsigned long>(k));
  return Poly(std::move(c));
}

PolyaSchurReport polya_schur_report(const MultiplierSeq& s, int max_n) {
  if (max_n < 1) throw InvalidDepth("polya_schur_report requires max_n >= 1");
  PolyaSchurReport rep;
  rep.max_n = max_n;
  rep.pass = true;
  for (int n = 1; n <= max_n; ++n) {
    PolyaSchurVerdict v;
    v.n = n;
    const Poly jn = polya_schur_test_poly(s, n);
    if (jn.is_zero()) {
      v.identically_zero = true;
      v.real_rooted = true;
      v.same_sign = true;
      v.pass = true;
      v.certificate = certify_real_rooted(jn);
    } else {
      v.certificate = certify_real_rooted(jn);
      v.real_rooted = v.certificate.is_real_rooted;
      const Poly reduced = deflate(jn, Rational(0)).first;
      if (!reduced.is_zero() && reduced.degree() >= 1) {
        v.negative_roots = count_roots_in(reduced, ExtendedBound::neg_infinity(),
                                          ExtendedBound::finite(Rational(0)));
        v.positive_roots = count_roots_in(reduced, ExtendedBound::finite(Rational(0)),
                                          ExtendedBound::pos_infinity());
      }
      v.same_sign = !(v.negative_roots > 0 && v.positive_roots > 0);
      v.pass = v.real_rooted && v.same_sign;
    }
    rep.pass = rep.pass && v.pass;
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

}  // namespace localh
