#ifndef POLYSEQ_POLYNOMIAL_HPP
#define POLYSEQ_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyseq/exactnum.hpp"

namespace polyseq {

/// Dense univariate polynomial over the rationals, monomial basis,
/// coefficient i belongs to x^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational &c);
  /// c x^power
  static Polynomial monomial(const Rational &c, std::size_t power);
  /// x - root
  static Polynomial linear(const Rational &root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; 0 for constants including the zero polynomial.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

  Rational operator()(const Rational &x) const;

  Polynomial &operator+=(const Polynomial &rhs);
  Polynomial &operator-=(const Polynomial &rhs);
  Polynomial &operator*=(const Rational &c);
  friend Polynomial operator+(Polynomial f, const Polynomial &g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial &g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, const Rational &c) { return f *= c; }
  friend Polynomial operator*(const Rational &c, Polynomial f) { return f *= c; }
  friend Polynomial operator*(const Polynomial &f, const Polynomial &g);

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  /// JSON array of canonical coefficient strings, degree ascending. The
  /// zero polynomial serializes as ["0"].
  std::string to_json() const;
  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

} // namespace polyseq

#endif
