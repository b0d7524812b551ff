#ifndef POLYSEQ_POLYCAUCHY_HPP
#define POLYSEQ_POLYCAUCHY_HPP

#include <cstddef>

#include "polyseq/exactnum.hpp"
#include "polyseq/table.hpp"

namespace polyseq {

enum class CauchyKind { First, Second };

const char *to_string(CauchyKind kind);
inline CauchyKind opposite(CauchyKind kind) {
  return kind == CauchyKind::First ? CauchyKind::Second : CauchyKind::First;
}

/// Unshifted generalized poly-Cauchy number c_n^{(k)}(a,q,L) (or the second
/// kind hat-c), sum_i s(n,i) q^{n-i} (+-1)^i l^{a+i} / (a+i)^k. The shift m
/// of p is ignored. Throws PoleError when a + i == 0 with k > 0.
Rational pc_number_explicit(CauchyKind kind, std::size_t n, const Params &p);

/// m-shifted number C_{n,m}^{(k)}(a,q,L) = ((a+m)^k/a^k) c_n^{(k)}(a+m,q,L),
/// evaluated from the explicit Stirling sum.
Rational mpc_number_explicit(CauchyKind kind, std::size_t n, const Params &p);

/// The same number from the r-Stirling resummation over the unshifted
/// c_{n+j}, j = 0..m. Needs a + i != 0 for i <= n + m when k > 0.
Rational mpc_number_via_rstirling(CauchyKind kind, std::size_t n, const Params &p);

/// C_{n,m} for n <= N and columns m = p.m() .. p.m() + M, built by the
/// two-term diagonal recurrence from the constant row n = 0.
class CauchyTable {
public:
  CauchyKind kind() const noexcept { return kind_; }
  const Params &params() const noexcept { return params_; }
  std::size_t first_column() const noexcept { return params_.m(); }
  std::size_t max_n() const noexcept { return values_.rows() - 1; }
  std::size_t max_m() const noexcept { return params_.m() + values_.cols() - 1; }

  /// Entry C_{n,m}; m is the absolute shift, first_column() <= m <= max_m().
  const Rational &at(std::size_t n, std::size_t m) const;
  /// Entries with the column index relative to first_column().
  const Grid &values() const noexcept { return values_; }

private:
  friend CauchyTable build_cauchy_table(CauchyKind, const Params &, std::size_t, std::size_t);
  CauchyTable(CauchyKind kind, Params params, Grid values)
      : kind_(kind), params_(std::move(params)), values_(std::move(values)) {}

  CauchyKind kind_;
  Params params_;
  Grid values_;
};

/// Positive k: C_{n+1,m} = +-l (1 - 1/(a+m+1))^k C_{n,m+1} - n q C_{n,m}.
/// Negative order -k: the factor is (1 + 1/(a+m))^k. Sign + for the first
/// kind, - for the second. The n = 0 row is seeded for M + N + 1 columns.
/// Throws PoleError if a + m' == 0 for some seeded column m'.
CauchyTable build_cauchy_table(CauchyKind kind, const Params &p, std::size_t N, std::size_t M);

/// sum_{i=1}^{n} q^{n-i} C(n-1, i-1) X_{i,m} / i!, X the opposite kind.
/// Equals (-1)^n (own kind)_{n,m} / n!. Requires n >= 1.
Rational dual_side(CauchyKind kind, std::size_t n, const Params &p);

/// m-Cauchy number of the first kind, a = l = q = k = 1.
Rational m_cauchy(std::size_t n, std::size_t m);

/// G_{n,m} for n <= N, m <= M from
/// (1+n)(2+m) G_{n+1,m} = (1+m) G_{n,m+1} - n (2+m) G_{n,m}, G_{0,m} = 1.
/// Column 0 holds the Gregory coefficients.
Grid gregory_table(std::size_t N, std::size_t M);

/// ((a+m)^k/a^k) times the k-fold box integral of t^{a+m-1} prod_{j<n} (t - jq)
/// (or (-t - jq) for the second kind), t = x_1 ... x_k. The product is
/// expanded by polynomial multiplication and each monomial t^e integrates to
/// l^{e+1}/(e+1)^k; no Stirling numbers are involved. The power of l runs
/// as l^{a+m+i}, so this equals l^m C_{n,m}.
/// Requires integer a >= 1 and k >= 1 (UnsupportedParameter otherwise).
Rational mpc_shifted_integral(CauchyKind kind, std::size_t n, const Params &p);

/// mpc_shifted_integral / l^m, the integral route to C_{n,m}.
Rational pc_integral_oracle(CauchyKind kind, std::size_t n, const Params &p);

} // namespace polyseq

#endif
