#ifndef POLYSEQ_EXACTNUM_HPP
#define POLYSEQ_EXACTNUM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace polyseq {

// Error hierarchy. Every failure the library reports derives from Error so
// callers (notably the CLI) can map the whole family to one exit status.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ZeroParameter : public Error {
public:
  using Error::Error;
};

class ZeroOrder : public Error {
public:
  using Error::Error;
};

class ShiftNegative : public Error {
public:
  using Error::Error;
};

class UnsupportedParameter : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// A denominator of the form (base + index)^k vanished.
class PoleError : public Error {
public:
  PoleError(const std::string &what, std::int64_t index)
      : Error(what + " (pole at index " + std::to_string(index) + ")"),
        index_(index) {}

  std::int64_t index() const noexcept { return index_; }

private:
  std::int64_t index_;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator, so equal values have identical representations.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}                // NOLINT
  Rational(int value) : value_(value) {}                 // NOLINT
  Rational(unsigned long value) : value_(value) {}       // NOLINT
  Rational(unsigned int value) : value_(value) {}        // NOLINT
  Rational(long long value) : Rational(std::to_string(value)) {} // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class &value) : value_(value) {}
  explicit Rational(const mpq_class &value);

  /// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed).
  static Rational parse(std::string_view text);
  explicit Rational(std::string_view text) : Rational(parse(text)) {}
  explicit Rational(const char *text) : Rational(parse(text)) {}
  explicit Rational(const std::string &text) : Rational(parse(text)) {}

  /// Canonical "num/den" form; "/den" is omitted when den == 1.
  std::string str() const { return value_.get_str(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class &raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational &operator+=(const Rational &rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational &operator-=(const Rational &rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational &operator*=(const Rational &rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
  }

  friend bool operator==(const Rational &lhs, const Rational &rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (0^negative throws DivisionByZero).
  Rational pow(long exponent) const;

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

private:
  mpq_class value_{0};
};

Rational factorial(std::size_t n);
Rational binomial(std::size_t n, std::size_t k);

// (-1)^e as a Rational.
inline Rational sign_power(std::size_t e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

/// Parameter bundle (a, q, L, k, m). `l` is the product of L and is
/// recomputed whenever L changes.
class Params {
public:
  long a() const noexcept { return a_; }
  const Rational &q() const noexcept { return q_; }
  const std::vector<Rational> &L() const noexcept { return L_; }
  const Rational &l() const noexcept { return l_; }
  long k() const noexcept { return k_; }
  std::size_t m() const noexcept { return m_; }

  /// Copy with a different shift m (the m of C_{n,m}, B_{n,m}).
  Params with_shift(std::size_t m) const;
  /// Copy with a different order; `k` must be nonzero.
  Params with_order(long k) const;

  friend bool operator==(const Params &, const Params &) = default;

private:
  friend Params make_params(long a, const Rational &q, std::span<const Rational> L, long k,
                            long m);
  Params() = default;

  long a_ = 1;
  Rational q_{1};
  std::vector<Rational> L_{Rational(1)};
  Rational l_{1};
  long k_ = 1;
  std::size_t m_ = 0;
};

/// Validates and builds a Params. Throws ZeroParameter, ZeroOrder,
/// ShiftNegative, or PoleError when a + m == 0.
Params make_params(long a, const Rational &q, std::span<const Rational> L, long k, long m);
Params make_params(long a, const Rational &q, std::initializer_list<Rational> L, long k, long m);

/// a = q = l = k = 1, m = 0.
Params classic_params();

/// True iff a + i + m == 0 while k > 0, i.e. the term 1/(a+i+m)^k is a pole.
bool pole_check(const Params &p, std::size_t i);

/// 1 / base^k for integer base, as used by every explicit formula; for
/// negative k this is |base|^{|k|} and never a pole.
Rational inverse_power(long base, long k);

/// (a+m)^k / a^k. Throws PoleError if a + m == 0.
Rational shift_prefactor(const Params &p);

/// Throws PoleError if pole_check holds for any 0 <= i <= n.
void require_pole_free(const Params &p, std::size_t n, std::string_view what);

std::string to_string(const Params &p);

} // namespace polyseq

#endif
