#include "polyseq/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace polyseq {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class &value) : value_(value) {
  if (value_.get_den() == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  const std::string body(text.substr(begin, end - begin));
  if (body.empty()) {
    throw ParseError("empty rational literal");
  }

  auto valid_integer = [](std::string_view s, bool allow_sign) {
    std::size_t pos = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      pos = 1;
    }
    if (pos == s.size()) {
      return false;
    }
    for (; pos < s.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
        return false;
      }
    }
    return true;
  };

  const auto slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw ParseError("malformed rational literal '" + body + "'");
  }
  if (num[0] == '+') {
    num.erase(0, 1);
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) {
    throw DivisionByZero("rational literal '" + body + "' has zero denominator");
  }
  return Rational(mpq_class(n, d));
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) {
      throw DivisionByZero("zero raised to a negative power");
    }
    Rational inv;
    inv.value_ = 1 / value_;
    return inv.pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  // Powers of a reduced fraction stay reduced.
  Rational out;
  out.value_ = mpq_class(num, den);
  return out;
}

Rational factorial(std::size_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return Rational(0);
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Params make_params(long a, const Rational &q, std::span<const Rational> L, long k, long m) {
  if (a == 0) {
    throw ZeroParameter("parameter a must be nonzero");
  }
  if (q.is_zero()) {
    throw ZeroParameter("parameter q must be nonzero");
  }
  if (L.empty()) {
    throw ZeroParameter("parameter list L must be nonempty");
  }
  Rational l(1);
  for (const auto &li : L) {
    if (li.is_zero()) {
      throw ZeroParameter("entries of L must be nonzero");
    }
    l *= li;
  }
  if (k == 0) {
    throw ZeroOrder("order k must be nonzero");
  }
  if (m < 0) {
    throw ShiftNegative("shift m must be nonnegative");
  }
  if (a + m == 0) {
    throw PoleError("a + m must be nonzero", 0);
  }
  Params p;
  p.a_ = a;
  p.q_ = q;
  p.L_.assign(L.begin(), L.end());
  p.l_ = l;
  p.k_ = k;
  p.m_ = static_cast<std::size_t>(m);
  return p;
}

Params make_params(long a, const Rational &q, std::initializer_list<Rational> L, long k,
                   long m) {
  return make_params(a, q, std::span<const Rational>(L.begin(), L.size()), k, m);
}

Params classic_params() { return make_params(1, Rational(1), {Rational(1)}, 1, 0); }

Params Params::with_shift(std::size_t m) const {
  return make_params(a_, q_, L_, k_, static_cast<long>(m));
}

Params Params::with_order(long k) const {
  return make_params(a_, q_, L_, k, static_cast<long>(m_));
}

bool pole_check(const Params &p, std::size_t i) {
  return p.k() > 0 && p.a() + static_cast<long>(i) + static_cast<long>(p.m()) == 0;
}

Rational inverse_power(long base, long k) {
  if (k < 0) {
    return Rational(base).pow(-k);
  }
  if (base == 0) {
    throw PoleError("denominator (base)^k vanished", 0);
  }
  return Rational(base).pow(-k);
}

Rational shift_prefactor(const Params &p) {
  const long am = p.a() + static_cast<long>(p.m());
  if (am == 0) {
    throw PoleError("prefactor (a+m)^k/a^k undefined", 0);
  }
  return Rational(am).pow(p.k()) / Rational(p.a()).pow(p.k());
}

void require_pole_free(const Params &p, std::size_t n, std::string_view what) {
  if (p.a() + static_cast<long>(p.m()) == 0) {
    throw PoleError(std::string(what) + ": a + m == 0", 0);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (pole_check(p, i)) {
      throw PoleError(std::string(what) + ": a + i + m == 0 with k > 0",
                      static_cast<std::int64_t>(i));
    }
  }
}

std::string to_string(const Params &p) {
  std::ostringstream os;
  os << "a=" << p.a() << " q=" << p.q() << " L=[";
  for (std::size_t i = 0; i < p.L().size(); ++i) {
    os << (i ? "," : "") << p.L()[i];
  }
  os << "] k=" << p.k() << " m=" << p.m();
  return os.str();
}

} // namespace polyseq
