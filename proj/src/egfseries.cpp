#include "polyseq/egfseries.hpp"

#include <algorithm>
#include <utility>

namespace polyseq {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_.emplace_back(0);
  }
}

TruncatedSeries TruncatedSeries::constant(const Rational &c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational &c, std::size_t power,
                                          std::size_t order) {
  TruncatedSeries s(order);
  if (power <= order) {
    s[power] = c;
  }
  return s;
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) {
      return i;
    }
  }
  return coeffs_.size();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &c) {
  for (auto &a : coeffs_) {
    a *= c;
  }
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto &a : out.coeffs_) {
    a = -a;
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries &f, const TruncatedSeries &g) {
  const std::size_t order = std::min(f.order(), g.order());
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (f[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= order; ++j) {
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

TruncatedSeries series_add(const TruncatedSeries &f, const TruncatedSeries &g) { return f + g; }

TruncatedSeries series_mul(const TruncatedSeries &f, const TruncatedSeries &g) { return f * g; }

TruncatedSeries series_div(const TruncatedSeries &f, const TruncatedSeries &g) {
  const std::size_t v = g.valuation();
  if (v > g.order()) {
    throw DivisionValuation("series division by a zero prefix");
  }
  if (f.valuation() < v) {
    throw DivisionValuation("dividend valuation is below divisor valuation");
  }
  const std::size_t order = std::min(f.order(), g.order()) - v;
  TruncatedSeries out(order);
  const Rational &lead = g[v];
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = f[n + v];
    for (std::size_t j = 1; j <= n; ++j) {
      acc -= g[j + v] * out[n - j];
    }
    out[n] = acc / lead;
  }
  return out;
}

TruncatedSeries series_log1p(const Rational &q, std::size_t order) {
  TruncatedSeries out(order);
  Rational power(1);
  for (std::size_t n = 1; n <= order; ++n) {
    power *= q;
    out[n] = sign_power(n + 1) * power / Rational(n);
  }
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries &f) {
  if (!f[0].is_zero()) {
    throw NonzeroConstant("exp requires a series with zero constant term");
  }
  TruncatedSeries out(f.order());
  out[0] = Rational(1);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational acc(0);
    for (std::size_t j = 1; j <= n; ++j) {
      if (!f[j].is_zero()) {
        acc += Rational(j) * f[j] * out[n - j];
      }
    }
    out[n] = acc / Rational(n);
  }
  return out;
}

namespace {

// 1 / (p + a)^k
Rational polylog_weight(long k, const Rational &a_shift, std::size_t p) {
  const Rational base = Rational(p) + a_shift;
  if (k > 0 && base.is_zero()) {
    throw PoleError("polylogarithm term (p + a)^k vanished", static_cast<std::int64_t>(p));
  }
  return base.pow(-k);
}

// sum_{p=first}^{N} weight(p) u^p
template <typename Weight>
TruncatedSeries power_sum(const TruncatedSeries &u, std::size_t first, Weight weight) {
  if (!u[0].is_zero()) {
    throw NonzeroConstant("polylogarithm argument must have zero constant term");
  }
  const std::size_t order = u.order();
  TruncatedSeries out(order);
  TruncatedSeries power = TruncatedSeries::constant(Rational(1), order);
  for (std::size_t p = 0; p <= order; ++p) {
    if (p >= first) {
      out += power * weight(p);
    }
    power = power * u;
  }
  return out;
}

} // namespace

TruncatedSeries lif_apply(long k, const Rational &a_shift, const TruncatedSeries &u) {
  for (std::size_t p = 0; p <= u.order(); ++p) {
    polylog_weight(k, a_shift, p);
  }
  return power_sum(u, 0, [&](std::size_t p) {
    return polylog_weight(k, a_shift, p) / factorial(p);
  });
}

TruncatedSeries li_apply(long k, const Rational &a_shift, const TruncatedSeries &u) {
  for (std::size_t p = 1; p <= u.order(); ++p) {
    polylog_weight(k, a_shift, p);
  }
  return power_sum(u, 1, [&](std::size_t p) { return polylog_weight(k, a_shift, p); });
}

// ---------------------------------------------------------------------------

BiSeries BiSeries::constant(const Rational &c, std::size_t order_x, std::size_t order_y) {
  BiSeries out(order_x, order_y);
  out(0, 0) = c;
  return out;
}

BiSeries BiSeries::from_x(const TruncatedSeries &f, std::size_t order_y) {
  BiSeries out(f.order(), order_y);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    out(n, 0) = f[n];
  }
  return out;
}

BiSeries BiSeries::from_y(const TruncatedSeries &g, std::size_t order_x) {
  BiSeries out(order_x, g.order());
  for (std::size_t j = 0; j <= g.order(); ++j) {
    out(0, j) = g[j];
  }
  return out;
}

TruncatedSeries BiSeries::x_coefficient(std::size_t n) const {
  TruncatedSeries out(order_y_);
  for (std::size_t j = 0; j <= order_y_; ++j) {
    out[j] = (*this)(n, j);
  }
  return out;
}

namespace {

BiSeries restrict(const BiSeries &f, std::size_t nx, std::size_t ny) {
  BiSeries out(nx, ny);
  for (std::size_t n = 0; n <= nx; ++n) {
    for (std::size_t j = 0; j <= ny; ++j) {
      out(n, j) = f(n, j);
    }
  }
  return out;
}

} // namespace

BiSeries &BiSeries::operator+=(const BiSeries &rhs) {
  const std::size_t nx = std::min(order_x_, rhs.order_x_);
  const std::size_t ny = std::min(order_y_, rhs.order_y_);
  BiSeries out = restrict(*this, nx, ny);
  for (std::size_t n = 0; n <= nx; ++n) {
    for (std::size_t j = 0; j <= ny; ++j) {
      out(n, j) += rhs(n, j);
    }
  }
  *this = std::move(out);
  return *this;
}

BiSeries &BiSeries::operator-=(const BiSeries &rhs) {
  const std::size_t nx = std::min(order_x_, rhs.order_x_);
  const std::size_t ny = std::min(order_y_, rhs.order_y_);
  BiSeries out = restrict(*this, nx, ny);
  for (std::size_t n = 0; n <= nx; ++n) {
    for (std::size_t j = 0; j <= ny; ++j) {
      out(n, j) -= rhs(n, j);
    }
  }
  *this = std::move(out);
  return *this;
}

BiSeries &BiSeries::operator*=(const Rational &c) {
  for (auto &v : coeffs_) {
    v *= c;
  }
  return *this;
}

BiSeries operator*(const BiSeries &f, const BiSeries &g) {
  const std::size_t nx = std::min(f.order_x(), g.order_x());
  const std::size_t ny = std::min(f.order_y(), g.order_y());
  BiSeries out(nx, ny);
  for (std::size_t i = 0; i <= nx; ++i) {
    for (std::size_t s = 0; s <= ny; ++s) {
      const Rational &a = f(i, s);
      if (a.is_zero()) {
        continue;
      }
      for (std::size_t n = i; n <= nx; ++n) {
        for (std::size_t j = s; j <= ny; ++j) {
          out(n, j) += a * g(n - i, j - s);
        }
      }
    }
  }
  return out;
}

BiSeries biseries_exp(const BiSeries &f) {
  if (!f(0, 0).is_zero()) {
    throw NonzeroConstant("exp requires a series with zero constant term");
  }
  const std::size_t nx = f.order_x();
  const std::size_t ny = f.order_y();
  std::vector<TruncatedSeries> fx;
  fx.reserve(nx + 1);
  for (std::size_t n = 0; n <= nx; ++n) {
    fx.push_back(f.x_coefficient(n));
  }
  std::vector<TruncatedSeries> gx;
  gx.reserve(nx + 1);
  gx.push_back(series_exp(fx[0]));
  for (std::size_t n = 1; n <= nx; ++n) {
    TruncatedSeries acc(ny);
    for (std::size_t j = 1; j <= n; ++j) {
      acc += (fx[j] * gx[n - j]) * Rational(j);
    }
    gx.push_back(acc * (Rational(1) / Rational(n)));
  }
  BiSeries out(nx, ny);
  for (std::size_t n = 0; n <= nx; ++n) {
    for (std::size_t j = 0; j <= ny; ++j) {
      out(n, j) = gx[n][j];
    }
  }
  return out;
}

BiSeries biseries_inverse(const BiSeries &f) {
  const Rational &lead = f(0, 0);
  if (lead.is_zero()) {
    throw DivisionValuation("bivariate inverse needs a nonzero constant term");
  }
  const std::size_t nx = f.order_x();
  const std::size_t ny = f.order_y();
  BiSeries out(nx, ny);
  for (std::size_t n = 0; n <= nx; ++n) {
    for (std::size_t j = 0; j <= ny; ++j) {
      Rational acc = (n == 0 && j == 0) ? Rational(1) : Rational(0);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t s = 0; s <= j; ++s) {
          if (i == 0 && s == 0) {
            continue;
          }
          acc -= f(i, s) * out(n - i, j - s);
        }
      }
      out(n, j) = acc / lead;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool egf_needs_point(EgfFamily family) {
  return family == EgfFamily::CauchyFirstPoly || family == EgfFamily::CauchySecondPoly ||
         family == EgfFamily::BernoulliPoly;
}

const char *to_string(EgfFamily family) {
  switch (family) {
  case EgfFamily::CauchyFirst: return "cauchy1";
  case EgfFamily::CauchySecond: return "cauchy2";
  case EgfFamily::CauchyFirstPoly: return "cauchy1-poly";
  case EgfFamily::CauchySecondPoly: return "cauchy2-poly";
  case EgfFamily::Bernoulli: return "bernoulli";
  case EgfFamily::BernoulliPoly: return "bernoulli-poly";
  }
  return "?";
}

const char *to_string(DoubleEgfFamily family) {
  switch (family) {
  case DoubleEgfFamily::CauchyFirst: return "cauchy1";
  case DoubleEgfFamily::CauchySecond: return "cauchy2";
  case DoubleEgfFamily::Bernoulli: return "bernoulli";
  }
  return "?";
}

namespace {

// 1 - e^{-q z}
TruncatedSeries one_minus_exp(const Rational &q, std::size_t order) {
  return TruncatedSeries::constant(Rational(1), order) -
         series_exp(TruncatedSeries::monomial(-q, 1, order));
}

std::vector<Rational> to_egf(const TruncatedSeries &s, std::size_t N) {
  std::vector<Rational> out;
  out.reserve(N + 1);
  Rational fact(1);
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) {
      fact *= Rational(n);
    }
    out.push_back(s[n] * fact);
  }
  return out;
}

} // namespace

std::vector<Rational> egf_coefficients(EgfFamily family, const Params &p,
                                       const std::optional<Rational> &x0, std::size_t N) {
  if (egf_needs_point(family) && !x0) {
    throw MissingEvaluationPoint(std::string("family ") + to_string(family) +
                                 " needs an evaluation point x0");
  }
  const Rational &q = p.q();
  const Rational &l = p.l();
  const Rational am = Rational(p.a() + static_cast<long>(p.m()));
  const Rational prefactor = shift_prefactor(p);

  switch (family) {
  case EgfFamily::CauchyFirst:
  case EgfFamily::CauchySecond:
  case EgfFamily::CauchyFirstPoly:
  case EgfFamily::CauchySecondPoly: {
    const bool second =
        family == EgfFamily::CauchySecond || family == EgfFamily::CauchySecondPoly;
    const TruncatedSeries log = series_log1p(q, N);
    const Rational scale = second ? -(l / q) : l / q;
    TruncatedSeries gf = lif_apply(p.k(), am, log * scale) * (l.pow(p.a()) * prefactor);
    if (egf_needs_point(family)) {
      gf = gf * series_exp(log * (-(*x0) / q));
    }
    return to_egf(gf, N);
  }
  case EgfFamily::Bernoulli:
  case EgfFamily::BernoulliPoly: {
    // One extra order is consumed by the division by 1 - e^{-qz}.
    const TruncatedSeries w = one_minus_exp(q, N + 1);
    const TruncatedSeries li = li_apply(p.k(), am - Rational(1), w * (l / q));
    TruncatedSeries gf = series_div(li, w) * (q * l.pow(p.a() - 1) * prefactor);
    if (family == EgfFamily::BernoulliPoly) {
      gf = gf * series_exp(TruncatedSeries::monomial(-q * (*x0), 1, N));
    }
    return to_egf(gf, N);
  }
  }
  return {};
}

Grid egf_double_coefficients(DoubleEgfFamily family, const Params &p, std::size_t N,
                             std::size_t K) {
  const long am = p.a() + static_cast<long>(p.m());
  if (am == 0) {
    throw PoleError("double generating function needs a + m != 0", 0);
  }
  const Rational a(p.a());
  const Rational &q = p.q();
  const Rational &l = p.l();

  // l^a e^{a y}
  const BiSeries front =
      BiSeries::from_y(series_exp(TruncatedSeries::monomial(a, 1, K)), N) * l.pow(p.a());
  // (l/q) e^{a y / (a+m)}
  const TruncatedSeries cy =
      series_exp(TruncatedSeries::monomial(a / Rational(am), 1, K)) * (l / q);

  BiSeries body(N, K);
  switch (family) {
  case DoubleEgfFamily::CauchyFirst:
  case DoubleEgfFamily::CauchySecond: {
    BiSeries exponent = BiSeries::from_y(cy, N) * BiSeries::from_x(series_log1p(q, N), K);
    if (family == DoubleEgfFamily::CauchySecond) {
      exponent *= Rational(-1);
    }
    body = biseries_exp(exponent);
    break;
  }
  case DoubleEgfFamily::Bernoulli: {
    const BiSeries denom = BiSeries::constant(Rational(1), N, K) -
                           BiSeries::from_y(cy, N) * BiSeries::from_x(one_minus_exp(q, N), K);
    body = biseries_inverse(denom);
    break;
  }
  }
  const BiSeries gf = front * body;

  Grid out(N + 1, K + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t j = 0; j <= K; ++j) {
      out(n, j) = gf(n, j) * factorial(n) * factorial(j);
    }
  }
  return out;
}

} // namespace polyseq
