#ifndef POLYSEQ_POLYBERNOULLI_HPP
#define POLYSEQ_POLYBERNOULLI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyseq/egfseries.hpp"
#include "polyseq/exactnum.hpp"
#include "polyseq/table.hpp"

namespace polyseq {

/// Generalized m-poly-Bernoulli number B_{n,m}^{(k)}(a,q,L):
/// ((a+m)^k/a^k) sum_i i! (-q)^{n-i} l^{i+a} {n,i} / (a+m+i)^k.
Rational mpb_explicit(std::size_t n, const Params &p);

/// sum_i s(n,i) (-q)^{n-i} B_{i,m}; equals inverse_stirling_closed_form.
Rational inverse_stirling_check(std::size_t n, const Params &p);
/// (a+m)^k n! l^{n+a} / (a (n+a+m))^k
Rational inverse_stirling_closed_form(std::size_t n, const Params &p);

/// H_{n,p}(m) from its definition as a first-kind Stirling combination of
/// B_{n+i,m}, i <= pcol.
Rational h_explicit(std::size_t n, const Params &p, std::size_t pcol);

/// H_{n,p}(m; x) for n <= N, p <= P, built from the constant row
/// H_{0,p} = l^a/a^k by
///   H_{n+1,p} = l (p+1) w_p H_{n,p+1} - q (x + p) H_{n,p},
/// w_p = (p+a+m)^k/(p+a+m+1)^k for positive k and
/// (p+a+m+1)^k/(p+a+m)^k for order -k (the p-advancing form).
/// With x = 0 column p = 0 is B_{n,m}^{(k)}; otherwise it is the
/// m-poly-Bernoulli polynomial evaluated at x.
class HTable {
public:
  const Params &params() const noexcept { return params_; }
  const Rational &x_offset() const noexcept { return x_offset_; }
  std::size_t max_n() const noexcept { return values_.rows() - 1; }
  std::size_t max_p() const noexcept { return values_.cols() - 1; }
  const Rational &at(std::size_t n, std::size_t pcol) const { return values_(n, pcol); }
  const Grid &values() const noexcept { return values_; }
  std::vector<Rational> bernoulli_column() const;

private:
  friend HTable build_h_table(const Params &, std::size_t, std::size_t, const Rational &);
  HTable(Params params, Rational x_offset, Grid values)
      : params_(std::move(params)), x_offset_(std::move(x_offset)), values_(std::move(values)) {}

  Params params_;
  Rational x_offset_;
  Grid values_;
};

/// Throws PoleError if p' + a + m == 0 for a seeded column p' <= P + N.
HTable build_h_table(const Params &p, std::size_t N, std::size_t P,
                     const Rational &x_offset = Rational(0));

/// B_0..B_N with B_1 = +1/2, read off column 0 of the H-table at
/// k = a = q = l = 1, m = 0.
std::vector<Rational> bernoulli_classic(std::size_t N);

enum class Conversion { BFromC1, BFromC2, C1FromB, C2FromB };

const char *to_string(Conversion relation);

/// Evaluates the double sum of the relation at index n >= 1.
Rational convert(Conversion relation, std::size_t n, const Params &p);
/// The sequence value the relation should reproduce, computed directly.
Rational conversion_target(Conversion relation, std::size_t n, const Params &p);

struct DoubleEgfMismatch {
  std::size_t n;
  std::size_t order;  // y exponent j, i.e. upper index -j
  Rational expected;  // directly computed number
  Rational actual;    // generating-function coefficient
};

struct DoubleEgfReport {
  DoubleEgfFamily family;
  std::size_t max_n = 0;
  std::size_t max_order = 0;
  std::size_t compared = 0;
  std::vector<DoubleEgfMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Expands the double generating function of the negative-order family to
/// orders (N, K) and compares n! j! [x^n y^j] with the numbers of upper
/// index -j for 1 <= j <= K (order 0 is not a valid Params order).
DoubleEgfReport double_egf_check(DoubleEgfFamily family, const Params &p, std::size_t N,
                                 std::size_t K);

} // namespace polyseq

#endif
