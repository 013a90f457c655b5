#include "localh/zpoly.hpp"

#include <cassert>
#include <utility>

namespace localh::detail {

void ZPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly zpoly_from_poly(const Poly& p) {
  ZPoly out;
  if (p.is_zero()) return out;
  Integer den(1);
  for (const Rational& r : p.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
  out.c.reserve(p.coeffs().size());
  for (const Rational& r : p.coeffs())
    out.c.push_back(Integer(r.get_num() * (den / r.get_den())));
  out.normalize();
  divide_content(out);
  return out;
}

Poly poly_from_zpoly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.c.size());
  for (const Integer& v : z.c) c.emplace_back(v);
  return Poly(std::move(c));
}

ZPoly z_derivative(const ZPoly& p) {
  ZPoly out;
  if (p.is_zero() || p.degree() == 0) return out;
  out.c.resize(p.degree());
  for (std::size_t i = 1; i < p.c.size(); ++i)
    out.c[i - 1] = p.c[i] * static_cast<unsigned long>(i);
  out.normalize();
  return out;
}

Integer content(const ZPoly& p) {
  Integer g(0);
  for (const Integer& v : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(ZPoly& p) {
  if (p.is_zero()) return;
  Integer g = content(p);
  if (g == 1) return;
  for (Integer& v : p.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

ZPoly prem(const ZPoly& f, const ZPoly& g) {
  assert(!g.is_zero() && !f.is_zero() && f.degree() >= g.degree());
  const std::size_t dg = g.degree();
  const Integer& lg = g.lc();
  // r <- lg*r - lead(r)*x^(deg r - dg)*g per pass; top up the scale to
  // lg^(deg f - dg + 1) at the end so the result is the exact prem.
  ZPoly r = f;
  unsigned long scale_left = static_cast<unsigned long>(f.degree() - dg + 1);
  while (!r.is_zero() && r.degree() >= dg) {
    const std::size_t dr = r.degree();
    Integer lead = std::move(r.c.back());
    r.c.pop_back();
    for (Integer& v : r.c) v *= lg;
    const std::size_t shift = dr - dg;
    for (std::size_t j = 0; j < dg; ++j)
      mpz_submul(r.c[shift + j].get_mpz_t(), lead.get_mpz_t(),
                 g.c[j].get_mpz_t());
    r.normalize();
    --scale_left;
  }
  if (!r.is_zero() && scale_left > 0) {
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), lg.get_mpz_t(), scale_left);
    for (Integer& v : r.c) v *= s;
  }
  return r;
}

int sign_at(const ZPoly& p, const Rational& t) {
  if (p.is_zero()) return 0;
  const Integer& a = t.get_num();
  const Integer& b = t.get_den();  // > 0
  const std::size_t d = p.degree();
  Integer acc = p.c[d];
  if (b == 1) {
    for (std::size_t i = d; i-- > 0;) {
      acc *= a;
      acc += p.c[i];
    }
    return sgn(acc);
  }
  // sign of sum c_i a^i b^(d-i)
  Integer bp(1);
  for (std::size_t i = d; i-- > 0;) {
    bp *= b;
    acc *= a;
    acc += p.c[i] * bp;
  }
  return sgn(acc);
}

int sign_at_neg_inf(const ZPoly& p) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lc());
  return (p.degree() % 2 == 0) ? s : -s;
}

int sign_at_pos_inf(const ZPoly& p) {
  if (p.is_zero()) return 0;
  return sgn(p.lc());
}

namespace {

int pow_sign(int s, unsigned long e) { return (e % 2 == 0) ? 1 : s; }

}  // namespace

std::vector<ZPoly> signed_prs(const ZPoly& f, const ZPoly& g) {
  assert(!f.is_zero() && !g.is_zero() && f.degree() >= g.degree());
  std::vector<ZPoly> chain;
  auto push_signed = [&chain](const ZPoly& r, int eps) {
    ZPoly s = r;
    divide_content(s);
    if (eps < 0)
      for (Integer& v : s.c) v = -v;
    chain.push_back(std::move(s));
  };
  push_signed(f, +1);
  push_signed(g, +1);

  ZPoly prev = f, cur = g;
  int eps_prev = +1, eps_cur = +1;
  Integer gc(1), h(1);
  bool first = true;
  while (true) {
    const unsigned long delta =
        static_cast<unsigned long>(prev.degree() - cur.degree());
    ZPoly raw = prem(prev, cur);
    if (raw.is_zero()) break;
    Integer beta;
    if (first) {
      beta = 1;
    } else {
      mpz_pow_ui(beta.get_mpz_t(), h.get_mpz_t(), delta);
      beta *= gc;
    }
    ZPoly next = std::move(raw);
    for (Integer& v : next.c) {
      assert(mpz_divisible_p(v.get_mpz_t(), beta.get_mpz_t()));
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), beta.get_mpz_t());
    }
    // S_{k+1} = -rem(S_{k-1}, S_k) * positive, hence
    // eps_{k+1} = -eps_{k-1} * sign(beta) * sign(lc(R_k))^(delta+1).
    const int eps_next =
        -eps_prev * sgn(beta) * pow_sign(sgn(cur.lc()), delta + 1);
    push_signed(next, eps_next);

    // Collins' reduced-PRS state: g <- lc(R_k), h <- g^delta * h^(1-delta).
    gc = cur.lc();
    if (first) {
      mpz_pow_ui(h.get_mpz_t(), gc.get_mpz_t(), delta);
      first = false;
    } else if (delta == 1) {
      h = gc;
    } else if (delta > 1) {
      Integer gp, hp;
      mpz_pow_ui(gp.get_mpz_t(), gc.get_mpz_t(), delta);
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta - 1);
      assert(mpz_divisible_p(gp.get_mpz_t(), hp.get_mpz_t()));
      mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
    }
    if (next.degree() == 0) break;
    prev = std::move(cur);
    cur = std::move(next);
    eps_prev = eps_cur;
    eps_cur = eps_next;
  }
  return chain;
}

}  // namespace localh::detail
