#include "polyseq/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace polyseq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational &c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational &c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const Rational &root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::operator()(const Rational &x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial &Polynomial::operator+=(const Polynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
  for (auto &a : coeffs_) {
    a *= c;
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial &f, const Polynomial &g) {
  if (f.is_zero() || g.is_zero()) {
    return Polynomial();
  }
  std::vector<Rational> out(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  if (coeffs_.empty()) {
    arr.push_back("0");
  }
  for (const auto &c : coeffs_) {
    arr.push_back(c.str());
  }
  return arr.dump();
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational &c = coeffs_[i];
    if (c.is_zero()) {
      continue;
    }
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      os << (c.sign() < 0 ? "-" : "");
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) {
      os << mag;
    }
    if (i >= 1) {
      os << "x";
    }
    if (i >= 2) {
      os << "^" << i;
    }
  }
  return os.str();
}

} // namespace polyseq
