#include "polyseq/polybernoulli.hpp"

#include "polyseq/polycauchy.hpp"
#include "polyseq/stirling.hpp"

namespace polyseq {

Rational mpb_explicit(std::size_t n, const Params &p) {
  require_pole_free(p, n, "m-poly-Bernoulli number");
  const long shifted_base = p.a() + static_cast<long>(p.m());
  const Rational minus_q = -p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = stirling2(n, i);
    if (s.is_zero()) {
      continue;
    }
    acc += factorial(i) * minus_q.pow(static_cast<long>(n - i)) *
           p.l().pow(p.a() + static_cast<long>(i)) * s *
           inverse_power(shifted_base + static_cast<long>(i), p.k());
  }
  return shift_prefactor(p) * acc;
}

Rational inverse_stirling_check(std::size_t n, const Params &p) {
  const Rational minus_q = -p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational s = stirling1(n, i);
    if (!s.is_zero()) {
      acc += s * minus_q.pow(static_cast<long>(n - i)) * mpb_explicit(i, p);
    }
  }
  return acc;
}

Rational inverse_stirling_closed_form(std::size_t n, const Params &p) {
  require_pole_free(p, n, "inverse Stirling closed form");
  const long shifted = p.a() + static_cast<long>(p.m() + n);
  return shift_prefactor(p) * factorial(n) * p.l().pow(shifted - static_cast<long>(p.m())) *
         inverse_power(shifted, p.k());
}

Rational h_explicit(std::size_t n, const Params &p, std::size_t pcol) {
  require_pole_free(p, n + pcol, "H-sequence");
  const long am = p.a() + static_cast<long>(p.m());
  const long top = am + static_cast<long>(pcol);
  if (top == 0) {
    throw PoleError("H-sequence weight (p+a+m)^k undefined", static_cast<std::int64_t>(pcol));
  }
  const Rational weight = (Rational(top) / Rational(am)).pow(p.k());
  const Rational minus_q = -p.q();
  Rational acc(0);
  for (std::size_t i = 0; i <= pcol; ++i) {
    const Rational s = stirling1(pcol, i);
    if (!s.is_zero()) {
      acc += s * minus_q.pow(static_cast<long>(pcol - i)) * mpb_explicit(n + i, p);
    }
  }
  return weight * acc / (factorial(pcol) * p.l().pow(static_cast<long>(pcol)));
}

std::vector<Rational> HTable::bernoulli_column() const {
  std::vector<Rational> out;
  out.reserve(values_.rows());
  for (std::size_t n = 0; n < values_.rows(); ++n) {
    out.push_back(values_(n, 0));
  }
  return out;
}

HTable build_h_table(const Params &p, std::size_t N, std::size_t P, const Rational &x_offset) {
  const long am = p.a() + static_cast<long>(p.m());
  const std::size_t width = P + N + 1;
  for (std::size_t j = 0; j < width; ++j) {
    if (am + static_cast<long>(j) == 0) {
      throw PoleError("H-table column p + a + m == 0", static_cast<std::int64_t>(j));
    }
  }

  const Rational seed = p.l().pow(p.a()) * inverse_power(p.a(), p.k());
  const long order = p.k() > 0 ? p.k() : -p.k();

  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(width, seed);
  for (std::size_t n = 0; n < N; ++n) {
    const auto &prev = rows.back();
    std::vector<Rational> next(prev.size() - 1);
    for (std::size_t j = 0; j < next.size(); ++j) {
      const Rational lo(am + static_cast<long>(j));
      const Rational hi(am + static_cast<long>(j) + 1);
      const Rational w = p.k() > 0 ? (lo / hi).pow(order) : (hi / lo).pow(order);
      next[j] = p.l() * Rational(j + 1) * w * prev[j + 1] -
                p.q() * (x_offset + Rational(j)) * prev[j];
    }
    rows.push_back(std::move(next));
  }

  Grid values(N + 1, P + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t j = 0; j <= P; ++j) {
      values(n, j) = rows[n][j];
    }
  }
  return HTable(p, x_offset, std::move(values));
}

std::vector<Rational> bernoulli_classic(std::size_t N) {
  return build_h_table(classic_params(), N, 0).bernoulli_column();
}

const char *to_string(Conversion relation) {
  switch (relation) {
  case Conversion::BFromC1: return "B-C1";
  case Conversion::BFromC2: return "B-C2";
  case Conversion::C1FromB: return "C1-B";
  case Conversion::C2FromB: return "C2-B";
  }
  return "?";
}

Rational convert(Conversion relation, std::size_t n, const Params &p) {
  if (n == 0) {
    throw UnsupportedParameter("conversion formulas hold for n >= 1");
  }
  const Rational &q = p.q();
  Rational acc(0);
  switch (relation) {
  case Conversion::BFromC1:
    for (std::size_t j = 1; j <= n; ++j) {
      Rational inner(0);
      for (std::size_t i = 1; i <= n; ++i) {
        inner += factorial(i) * stirling2(n, i) * stirling2(i - 1, j - 1);
      }
      if (!inner.is_zero()) {
        acc += q.pow(static_cast<long>(n - j)) * inner *
               mpc_number_explicit(CauchyKind::First, j, p);
      }
    }
    return acc;
  case Conversion::BFromC2:
    for (std::size_t j = 1; j <= n; ++j) {
      Rational inner(0);
      for (std::size_t i = 1; i <= n; ++i) {
        inner += factorial(i) * stirling2(n, i) * stirling2(i, j);
      }
      if (!inner.is_zero()) {
        acc += q.pow(static_cast<long>(n - j)) * inner *
               mpc_number_explicit(CauchyKind::Second, j, p);
      }
    }
    return sign_power(n) * acc;
  case Conversion::C1FromB:
  case Conversion::C2FromB:
    for (std::size_t j = 1; j <= n; ++j) {
      Rational inner(0);
      for (std::size_t i = 1; i <= n; ++i) {
        const Rational sign = relation == Conversion::C1FromB
                                  ? sign_power(i > j ? i - j : j - i)
                                  : sign_power(j);
        inner += sign * stirling1(n, i) * stirling1(i, j) / factorial(i);
      }
      if (!inner.is_zero()) {
        acc += q.pow(static_cast<long>(n - j)) * inner * mpb_explicit(j, p);
      }
    }
    return acc;
  }
  return acc;
}

Rational conversion_target(Conversion relation, std::size_t n, const Params &p) {
  switch (relation) {
  case Conversion::BFromC1:
  case Conversion::BFromC2: return mpb_explicit(n, p);
  case Conversion::C1FromB: return mpc_number_explicit(CauchyKind::First, n, p);
  case Conversion::C2FromB: return mpc_number_explicit(CauchyKind::Second, n, p);
  }
  return Rational(0);
}

DoubleEgfReport double_egf_check(DoubleEgfFamily family, const Params &p, std::size_t N,
                                 std::size_t K) {
  const Grid grid = egf_double_coefficients(family, p, N, K);
  DoubleEgfReport report{family, N, K, 0, {}};
  for (std::size_t j = 1; j <= K; ++j) {
    const Params negative = p.with_order(-static_cast<long>(j));
    for (std::size_t n = 0; n <= N; ++n) {
      Rational expected;
      switch (family) {
      case DoubleEgfFamily::CauchyFirst:
        expected = mpc_number_explicit(CauchyKind::First, n, negative);
        break;
      case DoubleEgfFamily::CauchySecond:
        expected = mpc_number_explicit(CauchyKind::Second, n, negative);
        break;
      case DoubleEgfFamily::Bernoulli:
        expected = mpb_explicit(n, negative);
        break;
      }
      ++report.compared;
      if (expected != grid(n, j)) {
        report.mismatches.push_back({n, j, expected, grid(n, j)});
      }
    }
  }
  return report;
}

} // namespace polyseq
