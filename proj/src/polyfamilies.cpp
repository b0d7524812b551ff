#include "polyseq/polyfamilies.hpp"

#include "polyseq/polybernoulli.hpp"
#include "polyseq/stirling.hpp"

namespace polyseq {

namespace {

Rational kind_sign(CauchyKind kind, std::size_t i) {
  return kind == CauchyKind::First ? Rational(1) : sign_power(i);
}

Rational pow_n(const Rational &base, std::size_t e) { return base.pow(static_cast<long>(e)); }

} // namespace

Polynomial rising_factorial(const Rational &q, std::size_t n) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    out = out * Polynomial::linear(-(Rational(j) * q));
  }
  return out;
}

Polynomial mpc_polynomial(CauchyKind kind, std::size_t n, const Params &p) {
  require_pole_free(p, n, "m-poly-Cauchy polynomial");
  Polynomial out;
  for (std::size_t j = 0; j <= n; ++j) {
    const Rational c = sign_power(n - j) * binomial(n, j) * mpc_number_explicit(kind, j, p);
    out += c * rising_factorial(p.q(), n - j);
  }
  return out;
}

Rational mpc_poly_weighted_eval(CauchyKind kind, std::size_t n, const Params &p,
                                const Rational &x0) {
  require_pole_free(p, n, "m-poly-Cauchy polynomial");
  const Rational point = x0 / p.q();
  const long shifted_base = p.a() + static_cast<long>(p.m());
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational t = weighted_T(n, i, point);
    if (t.is_zero()) {
      continue;
    }
    acc += t * pow_n(p.q(), n - i) * kind_sign(kind, i) * p.l().pow(p.a() + static_cast<long>(i)) *
           inverse_power(shifted_base + static_cast<long>(i), p.k());
  }
  return shift_prefactor(p) * acc;
}

Rational mpc_poly_inverse_check(std::size_t n, const Params &p, const Rational &x0) {
  const Rational point = x0 / p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = weighted_S(n, i, point);
    if (!s.is_zero()) {
      acc += pow_n(p.q(), n - i) * s * mpc_polynomial(CauchyKind::First, i, p)(x0);
    }
  }
  return acc;
}

Rational mpc_poly_inverse_closed_form(std::size_t n, const Params &p) {
  require_pole_free(p, n, "inverse closed form");
  const long top = p.a() + static_cast<long>(n + p.m());
  return shift_prefactor(p) * p.l().pow(p.a() + static_cast<long>(n)) * inverse_power(top, p.k());
}

Rational mpc_poly_dual(CauchyKind kind, std::size_t n, const Params &p, const Rational &x0) {
  if (n == 0) {
    throw UnsupportedParameter("mpc_poly_dual requires n >= 1");
  }
  const CauchyKind other = opposite(kind);
  Rational acc(0);
  for (std::size_t i = 1; i <= n; ++i) {
    acc += binomial(n - 1, i - 1) * pow_n(p.q(), n - i) * mpc_polynomial(other, i, p)(x0) /
           factorial(i);
  }
  return acc;
}

Rational mpc_poly_dual_target(CauchyKind kind, std::size_t n, const Params &p,
                              const Rational &x0) {
  return sign_power(n) * mpc_polynomial(kind, n, p)(-x0) / factorial(n);
}

Polynomial mpb_polynomial(std::size_t n, const Params &p) {
  require_pole_free(p, n, "m-poly-Bernoulli polynomial");
  const Rational minus_q = -p.q();
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    coeffs[n - i] = binomial(n, i) * pow_n(minus_q, n - i) * mpb_explicit(i, p);
  }
  return Polynomial(std::move(coeffs));
}

Rational mpb_poly_weighted_eval(std::size_t n, const Params &p, const Rational &x0) {
  require_pole_free(p, n, "m-poly-Bernoulli polynomial");
  const long shifted_base = p.a() + static_cast<long>(p.m());
  const Rational minus_q = -p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = weighted_S(n, i, x0);
    if (s.is_zero()) {
      continue;
    }
    acc += factorial(i) * pow_n(minus_q, n - i) * p.l().pow(p.a() + static_cast<long>(i)) * s *
           inverse_power(shifted_base + static_cast<long>(i), p.k());
  }
  return shift_prefactor(p) * acc;
}

Rational mpb_poly_weighted_inverse_check(std::size_t n, const Params &p, const Rational &x0) {
  const Rational minus_q = -p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational t = weighted_T(n, i, x0);
    if (!t.is_zero()) {
      acc += t * pow_n(minus_q, n - i) * mpb_polynomial(i, p)(x0);
    }
  }
  return acc;
}

const char *to_string(PolyRelation relation) {
  switch (relation) {
  case PolyRelation::For9: return "For9";
  case PolyRelation::For10: return "For10";
  case PolyRelation::For11: return "For11";
  case PolyRelation::For12: return "For12";
  }
  return "?";
}

PolyRelationReport thm200_check(PolyRelation relation, std::size_t n, const Params &p,
                                const Rational &x0) {
  require_pole_free(p, n, "polynomial cross relation");
  const Rational &q = p.q();
  const Rational over_q = x0 / q;

  std::vector<Rational> cauchy1, cauchy2, bern;
  for (std::size_t j = 0; j <= n; ++j) {
    switch (relation) {
    case PolyRelation::For9: cauchy1.push_back(mpc_polynomial(CauchyKind::First, j, p)(x0)); break;
    case PolyRelation::For10: cauchy2.push_back(mpc_polynomial(CauchyKind::Second, j, p)(x0)); break;
    case PolyRelation::For11:
    case PolyRelation::For12: bern.push_back(mpb_polynomial(j, p)(x0)); break;
    }
  }

  PolyRelationReport report{relation, Rational(0), Rational(0), false};
  Rational acc(0);
  switch (relation) {
  case PolyRelation::For9:
    for (std::size_t i = 0; i <= n; ++i) {
      Rational inner(0);
      for (std::size_t j = 0; j <= i; ++j) {
        inner += pow_n(q, i - j) * weighted_S(i, j, over_q) * cauchy1[j];
      }
      acc += factorial(i) * pow_n(-q, n - i) * weighted_S(n, i, x0) * inner;
    }
    report.rhs = mpb_polynomial(n, p)(x0);
    break;
  case PolyRelation::For10:
    for (std::size_t j = 0; j <= n; ++j) {
      Rational inner(0);
      for (std::size_t i = j; i <= n; ++i) {
        inner += factorial(i) * weighted_S(n, i, x0) * weighted_S(i, j, over_q);
      }
      acc += pow_n(q, n - j) * inner * cauchy2[j];
    }
    acc *= sign_power(n);
    report.rhs = mpb_polynomial(n, p)(x0);
    break;
  case PolyRelation::For11:
  case PolyRelation::For12:
    for (std::size_t j = 0; j <= n; ++j) {
      Rational inner(0);
      for (std::size_t i = j; i <= n; ++i) {
        const Rational sign =
            relation == PolyRelation::For11 ? sign_power(i - j) : sign_power(j);
        inner += sign * weighted_T(n, i, over_q) * weighted_T(i, j, x0) / factorial(i);
      }
      acc += pow_n(q, n - j) * inner * bern[j];
    }
    report.rhs = mpc_polynomial(relation == PolyRelation::For11 ? CauchyKind::First
                                                                : CauchyKind::Second,
                                n, p)(x0);
    break;
  }
  report.lhs = acc;
  report.pass = report.lhs == report.rhs;
  return report;
}

Polynomial h_polynomial(std::size_t n, std::size_t pcol, const Params &p) {
  const Rational minus_q = -p.q();
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    coeffs[n - i] = binomial(n, i) * pow_n(minus_q, n - i) * h_explicit(i, p, pcol);
  }
  return Polynomial(std::move(coeffs));
}

Rational h_poly_alternative_eval(std::size_t n, std::size_t pcol, const Params &p,
                                 const Rational &x0) {
  require_pole_free(p, n + pcol, "H-polynomial");
  const long top = p.a() + static_cast<long>(p.m() + pcol);
  if (top == 0) {
    throw PoleError("H-polynomial weight (p+a+m)^k undefined", static_cast<std::int64_t>(pcol));
  }
  const Rational point = x0 + Rational(pcol);
  const Rational minus_q = -p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = weighted_S(n, i, point);
    if (s.is_zero()) {
      continue;
    }
    acc += factorial(i + pcol) * pow_n(minus_q, n - i) * p.l().pow(p.a() + static_cast<long>(i)) *
           s * inverse_power(top + static_cast<long>(i), p.k());
  }
  return Rational(top).pow(p.k()) * inverse_power(p.a(), p.k()) * acc / factorial(pcol);
}

Polynomial h_poly_recurrence(std::size_t n, std::size_t pcol, const Params &p) {
  const long lo = p.a() + static_cast<long>(p.m() + pcol);
  if (lo == 0 || lo + 1 == 0) {
    throw PoleError("H-polynomial recurrence weight undefined", static_cast<std::int64_t>(pcol));
  }
  const long order = p.k() > 0 ? p.k() : -p.k();
  const Rational ratio = Rational(lo) / Rational(lo + 1);
  const Rational w = p.k() > 0 ? ratio.pow(order) : ratio.pow(-order);
  const Polynomial next = h_polynomial(n, pcol + 1, p);
  const Polynomial here = h_polynomial(n, pcol, p);
  // q (x + p) as a polynomial
  const Polynomial shift({p.q() * Rational(pcol), p.q()});
  return p.l() * Rational(pcol + 1) * w * next - shift * here;
}

} // namespace polyseq
