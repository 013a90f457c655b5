#include "localh/sturm.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "localh/errors.hpp"

namespace localh {

using detail::ZPoly;

const Rational& ExtendedBound::value() const {
  if (!is_finite()) throw std::logic_error("ExtendedBound: no finite value");
  return value_;
}

namespace {

int zsign_at_bound(const ZPoly& p, const ExtendedBound& at) {
  if (at.is_finite()) return detail::sign_at(p, at.value());
  return at.is_neg_infinity() ? detail::sign_at_neg_inf(p)
                              : detail::sign_at_pos_inf(p);
}

int zvariations(const std::vector<ZPoly>& chain, const ExtendedBound& at) {
  int prev = 0, var = 0;
  for (const ZPoly& s : chain) {
    const int sg = zsign_at_bound(s, at);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int zcount(const std::vector<ZPoly>& chain, const ExtendedBound& lo,
           const ExtendedBound& hi) {
  return zvariations(chain, lo) - zvariations(chain, hi);
}

std::vector<ZPoly> zchain_of(const ZPoly& zp) {
  if (zp.degree() == 0) return {zp};
  return detail::signed_prs(zp, detail::z_derivative(zp));
}

/// Power-of-two B with all roots of p strictly inside (-B, B).
Rational cauchy_pow2_bound(const ZPoly& p) {
  const std::size_t d = p.degree();
  std::size_t lcbits = mpz_sizeinbase(p.lc().get_mpz_t(), 2);
  std::size_t maxbits = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (p.c[i] != 0)
      maxbits = std::max(maxbits, mpz_sizeinbase(p.c[i].get_mpz_t(), 2));
  // 1 + max|c_i|/|c_d| <= 1 + 2^(maxbits-lcbits+1) <= 2^e
  long e = static_cast<long>(maxbits) - static_cast<long>(lcbits) + 2;
  if (e < 1) e = 1;
  Integer num = Integer(1) << static_cast<unsigned long>(e);
  return Rational(num);
}

/// Split point in (lo, hi) that is not a root of sf; the midpoint unless it
/// happens to be an exact root, in which case we walk a sequence of nearby
/// dyadic fractions (finitely many roots, so this terminates).
Rational zsplit_point(const ZPoly& sf, const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  Rational mid = lo + w / 2;
  if (detail::sign_at(sf, mid) != 0) return mid;
  for (unsigned long a = 1;; ++a) {
    Rational f((Integer(1) << a) + 1, Integer(1) << (a + 2));
    f.canonicalize();
    Rational c = lo + w * f;
    if (detail::sign_at(sf, c) != 0) return c;
  }
}

/// Interval with exactly one simple root of sf inside; shrink by sign
/// bisection until it is narrower than max_width (if positive).
RootInterval zrefine(const ZPoly& sf, Rational lo, Rational hi,
                     const Rational& max_width) {
  const int slo = detail::sign_at(sf, lo);
  assert(slo != 0 && detail::sign_at(sf, hi) == -slo);
  if (sign(max_width) > 0) {
    while (hi - lo > max_width) {
      Rational mid = (lo + hi) / 2;
      const int sm = detail::sign_at(sf, mid);
      if (sm == 0) return {mid, mid, 1};
      if (sm == slo)
        lo = std::move(mid);
      else
        hi = std::move(mid);
    }
  }
  return {std::move(lo), std::move(hi), 1};
}

/// Sturm-count bisection. chain must be the chain of sf, sf squarefree.
std::vector<RootInterval> zisolate(const std::vector<ZPoly>& chain,
                                   const ZPoly& sf, const Rational& max_width) {
  std::vector<RootInterval> out;
  if (sf.degree() == 0) return out;
  const Rational bound = cauchy_pow2_bound(sf);
  struct Job {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Job> stack;
  {
    ExtendedBound l = ExtendedBound::finite(-bound);
    ExtendedBound r = ExtendedBound::finite(bound);
    stack.push_back({-bound, bound, zvariations(chain, l), zvariations(chain, r)});
  }
  while (!stack.empty()) {
    Job j = std::move(stack.back());
    stack.pop_back();
    const int cnt = j.vlo - j.vhi;
    if (cnt <= 0) continue;
    if (cnt == 1) {
      out.push_back(zrefine(sf, std::move(j.lo), std::move(j.hi), max_width));
      continue;
    }
    Rational mid = zsplit_point(sf, j.lo, j.hi);
    const int vmid = zvariations(chain, ExtendedBound::finite(mid));
    stack.push_back({j.lo, mid, j.vlo, vmid});
    stack.push_back({std::move(mid), std::move(j.hi), vmid, j.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

ZPoly zabs(ZPoly z) {
  if (!z.is_zero() && sgn(z.lc()) < 0)
    for (Integer& v : z.c) v = -v;
  return z;
}

}  // namespace

int SturmChain::variations_at(const ExtendedBound& at) const {
  return zvariations(eval_, at);
}

SturmChain sturm_chain(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("sturm_chain of the zero polynomial");
  SturmChain out;
  ZPoly zp = detail::zpoly_from_poly(p);
  if (zp.degree() == 0) {
    out.polys_.push_back(p);
    out.eval_.push_back(std::move(zp));
    return out;
  }
  std::vector<ZPoly> zchain = zchain_of(zp);
  if (zchain.back().degree() != 0)
    throw NotSquarefree("sturm_chain: gcd(p, p') is not constant");
  out.polys_.push_back(p);
  out.polys_.push_back(derivative(p));
  for (std::size_t k = 2; k < zchain.size(); ++k)
    out.polys_.push_back(detail::poly_from_zpoly(zchain[k]));
  out.eval_ = std::move(zchain);
  return out;
}

int count_roots_in(const SturmChain& chain, const ExtendedBound& lo,
                   const ExtendedBound& hi) {
  if (!(lo < hi)) throw std::invalid_argument("count_roots_in: lo must be < hi");
  return chain.variations_at(lo) - chain.variations_at(hi);
}

int count_roots_in(const Poly& p, const ExtendedBound& lo,
                   const ExtendedBound& hi) {
  if (p.is_zero()) throw ZeroPolynomial("count_roots_in: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_roots_in: lo must be < hi");
  for (const ExtendedBound* b : {&lo, &hi})
    if (b->is_finite() && sign_at(p, b->value()) == 0)
      throw EndpointIsRoot("count_roots_in: endpoint " + to_string(b->value()) +
                           " is a root; divide it out first");
  ZPoly zsf = detail::zpoly_from_poly(squarefree_part(p));
  std::vector<ZPoly> chain = zchain_of(zsf);
  return zcount(chain, lo, hi);
}

RealRootCertificate certify_real_rooted(const Poly& p) {
  return certify_real_rooted(p, CertifyOptions{});
}

RealRootCertificate certify_real_rooted(const Poly& p, const CertifyOptions& opts) {
  RealRootCertificate cert;
  if (p.is_zero()) {
    // Identically zero is admitted by convention; its degree stays undefined.
    cert.is_real_rooted = true;
    return cert;
  }
  cert.degree = p.degree();
  if (p.degree() == 0) {
    cert.is_real_rooted = true;
    return cert;
  }

  // gcd-derivative tower: level j holds exactly the roots of p with
  // multiplicity > j, so summing distinct-root counts over levels yields
  // the multiplicity-weighted total.
  std::vector<ZPoly> levels{detail::zpoly_from_poly(p)};
  std::vector<std::vector<ZPoly>> chains;
  while (levels.back().degree() >= 1) {
    chains.push_back(zchain_of(levels.back()));
    ZPoly g = zabs(chains.back().back());
    if (g.degree() == 0) break;
    levels.push_back(std::move(g));
  }
  const ExtendedBound ninf = ExtendedBound::neg_infinity();
  const ExtendedBound pinf = ExtendedBound::pos_infinity();
  std::vector<int> distinct_per_level(chains.size());
  for (std::size_t j = 0; j < chains.size(); ++j)
    distinct_per_level[j] = zcount(chains[j], ninf, pinf);
  cert.distinct_real_roots = distinct_per_level.empty() ? 0 : distinct_per_level[0];
  for (int d : distinct_per_level) cert.total_with_multiplicity += d;
  cert.is_real_rooted =
      cert.total_with_multiplicity == static_cast<int>(p.degree());

  if (opts.isolate) {
    ZPoly zsf;
    std::vector<ZPoly> sf_chain;
    if (levels.size() == 1) {
      zsf = levels[0];  // squarefree already
      sf_chain = chains[0];
    } else {
      Poly g = detail::poly_from_zpoly(levels[1]);
      zsf = detail::zpoly_from_poly(divexact(p, g));
      sf_chain = zchain_of(zsf);
    }
    cert.isolating_intervals = zisolate(sf_chain, zsf, opts.max_width);
    for (RootInterval& iv : cert.isolating_intervals) {
      int mult = 1;
      for (std::size_t j = 1; j < levels.size(); ++j) {
        bool vanishes;
        if (iv.lo == iv.hi) {
          vanishes = detail::sign_at(levels[j], iv.lo) == 0;
        } else {
          vanishes = zcount(chains[j], ExtendedBound::finite(iv.lo),
                            ExtendedBound::finite(iv.hi)) > 0;
        }
        if (!vanishes) break;
        ++mult;
      }
      iv.multiplicity = mult;
    }
  }
  return cert;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p,
                                             const Rational& max_width) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots: zero polynomial");
  if (sign(max_width) <= 0)
    throw std::invalid_argument("isolate_real_roots: max_width must be > 0");
  if (p.degree() == 0) return {};
  ZPoly zsf = detail::zpoly_from_poly(squarefree_part(p));
  if (zsf.degree() == 0) return {};
  std::vector<ZPoly> chain = zchain_of(zsf);
  return zisolate(chain, zsf, max_width);
}

namespace {

/// Synthetic division by (x - r); nullopt when r is not a root.
std::optional<Poly> try_deflate_once(const Poly& p, const Rational& r) {
  const auto& c = p.coeffs();
  const std::size_t d = p.degree();
  std::vector<Rational> q(d);
  Rational acc = c[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = acc;
    acc *= r;
    acc += c[i];
  }
  if (sign(acc) != 0) return std::nullopt;
  return Poly(std::move(q));
}

}  // namespace

int multiplicity_of_root(const Poly& p, const Rational& r) {
  return deflate(p, r).second;
}

std::pair<Poly, int> deflate(const Poly& p, const Rational& r) {
  if (p.is_zero()) throw ZeroPolynomial("deflate: zero polynomial");
  Poly q = p;
  int m = 0;
  while (!q.is_zero() && q.degree() >= 1) {
    std::optional<Poly> next = try_deflate_once(q, r);
    if (!next) break;
    q = std::move(*next);
    ++m;
  }
  return {std::move(q), m};
}

}  // namespace localh
