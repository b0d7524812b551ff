#include "polyseq/polycauchy.hpp"

#include "polyseq/polynomial.hpp"
#include "polyseq/stirling.hpp"

namespace polyseq {

const char *to_string(CauchyKind kind) {
  return kind == CauchyKind::First ? "first" : "second";
}

namespace {

Rational kind_sign(CauchyKind kind, std::size_t i) {
  return kind == CauchyKind::First ? Rational(1) : sign_power(i);
}

// sum_i s(n,i) q^{n-i} (+-1)^i l^{base+i} / (base+i)^k
Rational stirling_sum(CauchyKind kind, std::size_t n, long base, const Params &p) {
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = stirling1(n, i);
    if (s.is_zero()) {
      continue;
    }
    const long shifted = base + static_cast<long>(i);
    acc += s * p.q().pow(static_cast<long>(n - i)) * kind_sign(kind, i) * p.l().pow(shifted) *
           inverse_power(shifted, p.k());
  }
  return acc;
}

} // namespace

Rational pc_number_explicit(CauchyKind kind, std::size_t n, const Params &p) {
  require_pole_free(p.with_shift(0), n, "poly-Cauchy number");
  return stirling_sum(kind, n, p.a(), p);
}

Rational mpc_number_explicit(CauchyKind kind, std::size_t n, const Params &p) {
  require_pole_free(p, n, "m-poly-Cauchy number");
  // l^{a+i} rather than l^{a+m+i}: the m-shift leaves the power of l alone.
  Rational acc(0);
  const long shifted_base = p.a() + static_cast<long>(p.m());
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = stirling1(n, i);
    if (s.is_zero()) {
      continue;
    }
    acc += s * p.q().pow(static_cast<long>(n - i)) * kind_sign(kind, i) *
           p.l().pow(p.a() + static_cast<long>(i)) *
           inverse_power(shifted_base + static_cast<long>(i), p.k());
  }
  return shift_prefactor(p) * acc;
}

Rational mpc_number_via_rstirling(CauchyKind kind, std::size_t n, const Params &p) {
  const std::size_t m = p.m();
  const Params base = p.with_shift(0);
  require_pole_free(base, n + m, "r-Stirling resummation");
  const Rational prefactor = shift_prefactor(p) / p.l().pow(static_cast<long>(m));

  Rational acc(0);
  for (std::size_t j = 0; j <= m; ++j) {
    const Rational weight = r_stirling2(m, j, n);
    const Rational c = pc_number_explicit(kind, n + j, base);
    if (kind == CauchyKind::First) {
      acc += weight * p.q().pow(static_cast<long>(m - j)) * c;
    } else {
      acc += weight * p.q().pow(-static_cast<long>(j)) * c;
    }
  }
  if (kind == CauchyKind::Second) {
    acc *= (-p.q()).pow(static_cast<long>(m));
  }
  return prefactor * acc;
}

const Rational &CauchyTable::at(std::size_t n, std::size_t m) const {
  if (m < first_column() || m > max_m() || n > max_n()) {
    throw std::out_of_range("CauchyTable index out of range");
  }
  return values_(n, m - first_column());
}

CauchyTable build_cauchy_table(CauchyKind kind, const Params &p, std::size_t N, std::size_t M) {
  const std::size_t m0 = p.m();
  const std::size_t width = M + N + 1;
  for (std::size_t j = 0; j < width; ++j) {
    const long am = p.a() + static_cast<long>(m0 + j);
    if (am == 0) {
      throw PoleError("Cauchy table column a + m == 0", static_cast<std::int64_t>(m0 + j));
    }
  }

  const Rational seed = p.l().pow(p.a()) * inverse_power(p.a(), p.k());
  const Rational sign = kind == CauchyKind::First ? Rational(1) : Rational(-1);
  const long order = p.k() > 0 ? p.k() : -p.k();

  // rows[n][j] = C_{n, m0+j}; row n has width - n entries.
  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(width, seed);
  for (std::size_t n = 0; n < N; ++n) {
    const auto &prev = rows.back();
    std::vector<Rational> next(prev.size() - 1);
    for (std::size_t j = 0; j < next.size(); ++j) {
      const long am = p.a() + static_cast<long>(m0 + j);
      Rational factor;
      if (p.k() > 0) {
        factor = (Rational(1) - Rational(1) / Rational(am + 1)).pow(order);
      } else {
        factor = (Rational(1) + Rational(1) / Rational(am)).pow(order);
      }
      next[j] = sign * p.l() * factor * prev[j + 1] - Rational(n) * p.q() * prev[j];
    }
    rows.push_back(std::move(next));
  }

  Grid values(N + 1, M + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t j = 0; j <= M; ++j) {
      values(n, j) = rows[n][j];
    }
  }
  return CauchyTable(kind, p, std::move(values));
}

Rational dual_side(CauchyKind kind, std::size_t n, const Params &p) {
  if (n == 0) {
    throw UnsupportedParameter("dual_side requires n >= 1");
  }
  const CauchyKind other = opposite(kind);
  Rational acc(0);
  for (std::size_t i = 1; i <= n; ++i) {
    acc += p.q().pow(static_cast<long>(n - i)) * binomial(n - 1, i - 1) *
           mpc_number_explicit(other, i, p) / factorial(i);
  }
  return acc;
}

Rational m_cauchy(std::size_t n, std::size_t m) {
  return mpc_number_explicit(CauchyKind::First, n, classic_params().with_shift(m));
}

Grid gregory_table(std::size_t N, std::size_t M) {
  const std::size_t width = M + N + 1;
  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(width, Rational(1));
  for (std::size_t n = 0; n < N; ++n) {
    const auto &prev = rows.back();
    std::vector<Rational> next(prev.size() - 1);
    for (std::size_t m = 0; m < next.size(); ++m) {
      const Rational rhs =
          Rational(1 + m) * prev[m + 1] - Rational(n) * Rational(2 + m) * prev[m];
      next[m] = rhs / (Rational(1 + n) * Rational(2 + m));
    }
    rows.push_back(std::move(next));
  }
  Grid out(N + 1, M + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t m = 0; m <= M; ++m) {
      out(n, m) = rows[n][m];
    }
  }
  return out;
}

Rational mpc_shifted_integral(CauchyKind kind, std::size_t n, const Params &p) {
  if (p.a() < 1) {
    throw UnsupportedParameter("integral oracle needs integer a >= 1");
  }
  if (p.k() < 1) {
    throw UnsupportedParameter("integral oracle needs order k >= 1");
  }
  // t (t - q) ... (t - (n-1) q), or (-t)(-t - q) ... for the second kind.
  Polynomial integrand = Polynomial::constant(Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    const Rational shift = Rational(j) * p.q();
    if (kind == CauchyKind::First) {
      integrand = integrand * Polynomial({-shift, Rational(1)});
    } else {
      integrand = integrand * Polynomial({-shift, Rational(-1)});
    }
  }
  // Box sides: L itself when it has k entries, otherwise (l, 1, ..., 1),
  // which has the same product.
  std::vector<Rational> sides(static_cast<std::size_t>(p.k()), Rational(1));
  if (p.L().size() == sides.size()) {
    sides = p.L();
  } else {
    sides[0] = p.l();
  }
  // Multiply by t^{a+m-1} and integrate (x1...xk)^e coordinate-wise:
  // prod_i l_i^{e+1}/(e+1).
  const long base = p.a() + static_cast<long>(p.m()) - 1;
  Rational acc(0);
  for (std::size_t d = 0; d < integrand.coeffs().size(); ++d) {
    const long e = base + static_cast<long>(d);
    Rational term = integrand.coeff(d);
    for (const auto &side : sides) {
      term *= side.pow(e + 1) / Rational(e + 1);
    }
    acc += term;
  }
  return shift_prefactor(p) * acc;
}

Rational pc_integral_oracle(CauchyKind kind, std::size_t n, const Params &p) {
  return mpc_shifted_integral(kind, n, p) / p.l().pow(static_cast<long>(p.m()));
}

} // namespace polyseq
