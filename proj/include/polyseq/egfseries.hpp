#ifndef POLYSEQ_EGFSERIES_HPP
#define POLYSEQ_EGFSERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "polyseq/exactnum.hpp"
#include "polyseq/table.hpp"

namespace polyseq {

class DivisionValuation : public Error {
public:
  using Error::Error;
};

class NonzeroConstant : public Error {
public:
  using Error::Error;
};

class MissingEvaluationPoint : public Error {
public:
  using Error::Error;
};

/// Exact prefix a_0 + a_1 t + ... + a_N t^N of a formal power series.
/// Coefficients are ordinary (not factorial-normalized). Binary operations
/// truncate to the smaller order of their operands.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational &c, std::size_t order);
  /// c * t
  static TruncatedSeries monomial(const Rational &c, std::size_t power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational &operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational &operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; order()+1 for the zero prefix.
  std::size_t valuation() const;
  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries &operator+=(const TruncatedSeries &rhs);
  TruncatedSeries &operator-=(const TruncatedSeries &rhs);
  TruncatedSeries &operator*=(const Rational &c);

  friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries &g) { return f += g; }
  friend TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries &g) { return f -= g; }
  friend TruncatedSeries operator*(TruncatedSeries f, const Rational &c) { return f *= c; }
  friend TruncatedSeries operator*(const Rational &c, TruncatedSeries f) { return f *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries &f, const TruncatedSeries &g);
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries series_mul(const TruncatedSeries &f, const TruncatedSeries &g);

/// f / g. Requires valuation(f) >= valuation(g) = v with g[v] != 0; the
/// quotient is known to order min(ord f, ord g) - v. Throws DivisionValuation.
TruncatedSeries series_div(const TruncatedSeries &f, const TruncatedSeries &g);

/// ln(1 + q t) to order N.
TruncatedSeries series_log1p(const Rational &q, std::size_t order);

/// exp(f); f must have zero constant term (NonzeroConstant otherwise).
TruncatedSeries series_exp(const TruncatedSeries &f);

/// Lif_k(u; a) = sum_{p>=0} u^p / ((p + a)^k p!). u must have zero constant
/// term. PoleError if k > 0 and p + a == 0 for some p <= order.
TruncatedSeries lif_apply(long k, const Rational &a_shift, const TruncatedSeries &u);

/// Li_k(u; a) = sum_{p>=1} u^p / (p + a)^k, with the same conditions.
TruncatedSeries li_apply(long k, const Rational &a_shift, const TruncatedSeries &u);

/// Bivariate prefix sum c_{n,j} x^n y^j, n <= N, j <= K.
class BiSeries {
public:
  BiSeries(std::size_t order_x, std::size_t order_y)
      : order_x_(order_x), order_y_(order_y), coeffs_((order_x + 1) * (order_y + 1)) {}

  static BiSeries constant(const Rational &c, std::size_t order_x, std::size_t order_y);
  /// f(x) viewed as a series in (x, y).
  static BiSeries from_x(const TruncatedSeries &f, std::size_t order_y);
  /// g(y) viewed as a series in (x, y).
  static BiSeries from_y(const TruncatedSeries &g, std::size_t order_x);

  std::size_t order_x() const noexcept { return order_x_; }
  std::size_t order_y() const noexcept { return order_y_; }

  const Rational &operator()(std::size_t n, std::size_t j) const {
    return coeffs_.at(n * (order_y_ + 1) + j);
  }
  Rational &operator()(std::size_t n, std::size_t j) { return coeffs_.at(n * (order_y_ + 1) + j); }

  /// Coefficient of x^n as a series in y.
  TruncatedSeries x_coefficient(std::size_t n) const;

  BiSeries &operator+=(const BiSeries &rhs);
  BiSeries &operator-=(const BiSeries &rhs);
  BiSeries &operator*=(const Rational &c);
  friend BiSeries operator+(BiSeries f, const BiSeries &g) { return f += g; }
  friend BiSeries operator-(BiSeries f, const BiSeries &g) { return f -= g; }
  friend BiSeries operator*(BiSeries f, const Rational &c) { return f *= c; }
  friend BiSeries operator*(const BiSeries &f, const BiSeries &g);

  friend bool operator==(const BiSeries &, const BiSeries &) = default;

private:
  std::size_t order_x_;
  std::size_t order_y_;
  std::vector<Rational> coeffs_;
};

/// exp(f) for f with zero (0,0) coefficient. Computed as a series in x
/// whose coefficients are y-series: g_0 = exp(f_0(y)), n g_n = sum j f_j g_{n-j}.
BiSeries biseries_exp(const BiSeries &f);

/// 1 / f for f with nonzero (0,0) coefficient.
BiSeries biseries_inverse(const BiSeries &f);

// ---------------------------------------------------------------------------
// Generating-function oracles. Each returns n! [z^n] (or n! k! [x^n y^k]) of
// the closed form, assembled only from the series kernels above.

enum class EgfFamily {
  CauchyFirst,       // l^a (a+m)^k/a^k Lif_k(l ln(1+qz)/q; a+m)
  CauchySecond,      // same with -l ln(1+qz)/q
  CauchyFirstPoly,   // CauchyFirst / (1+qz)^{x/q}
  CauchySecondPoly,  // CauchySecond / (1+qz)^{x/q}
  Bernoulli,         // q l^{a-1}(a+m)^k/a^k Li_k((l/q)(1-e^{-qz}); a+m-1)/(1-e^{-qz})
  BernoulliPoly,     // Bernoulli * e^{-qzx}
};

enum class DoubleEgfFamily {
  CauchyFirst,   // l^a e^{ay} (1+qx)^{(l/q) e^{ay/(a+m)}}
  CauchySecond,  // l^a e^{ay} / (1+qx)^{(l/q) e^{ay/(a+m)}}
  Bernoulli,     // l^a e^{ay} / (1 - (l/q)(1 - e^{-qx}) e^{ay/(a+m)})
};

bool egf_needs_point(EgfFamily family);
const char *to_string(EgfFamily family);
const char *to_string(DoubleEgfFamily family);

/// Values for n = 0..N. Uses p's k, m. Throws MissingEvaluationPoint for
/// the polynomial families when x0 is empty, PoleError on poles.
std::vector<Rational> egf_coefficients(EgfFamily family, const Params &p,
                                       const std::optional<Rational> &x0, std::size_t N);

/// Grid (n, j) = n! j! [x^n y^j] for n <= N, j <= K. The order k of p is
/// ignored (the y variable runs over all negative orders -j); uses a, q, l, m.
Grid egf_double_coefficients(DoubleEgfFamily family, const Params &p, std::size_t N,
                             std::size_t K);

} // namespace polyseq

#endif
