#ifndef POLYSEQ_POLYFAMILIES_HPP
#define POLYSEQ_POLYFAMILIES_HPP

#include <cstddef>

#include "polyseq/exactnum.hpp"
#include "polyseq/polycauchy.hpp"
#include "polyseq/polynomial.hpp"

namespace polyseq {

/// (x)_{q,n} = x (x + q) ... (x + (n-1) q); (x)_{q,0} = 1.
Polynomial rising_factorial(const Rational &q, std::size_t n);

/// m-poly-Cauchy polynomial of either kind,
/// sum_j (-1)^{n-j} C(n,j) C_{j,m} (x)_{q,n-j}. Its value at 0 is the number.
Polynomial mpc_polynomial(CauchyKind kind, std::size_t n, const Params &p);

/// The same polynomial at x0 through the weighted first-kind Stirling numbers
/// T_n^i(x0/q).
Rational mpc_poly_weighted_eval(CauchyKind kind, std::size_t n, const Params &p,
                                const Rational &x0);

/// sum_i q^{n-i} S_n^i(x0/q) C_{i,m}(x0) for the first kind.
Rational mpc_poly_inverse_check(std::size_t n, const Params &p, const Rational &x0);
/// (a+m)^k l^{n+a} / (a^k (a+n+m)^k)
Rational mpc_poly_inverse_closed_form(std::size_t n, const Params &p);

/// sum_{i=1}^{n} C(n-1,i-1) q^{n-i} X_{i,m}(x0) / i!, X the opposite kind.
/// Requires n >= 1.
Rational mpc_poly_dual(CauchyKind kind, std::size_t n, const Params &p, const Rational &x0);
/// (-1)^n (own kind)_{n,m}(-x0) / n!
Rational mpc_poly_dual_target(CauchyKind kind, std::size_t n, const Params &p,
                              const Rational &x0);

/// m-poly-Bernoulli polynomial sum_i C(n,i) (-q)^{n-i} B_{i,m} x^{n-i}.
Polynomial mpb_polynomial(std::size_t n, const Params &p);

/// ((a+m)^k/a^k) sum_i i! (-q)^{n-i} l^{i+a} S_n^i(x0) / (a+m+i)^k.
Rational mpb_poly_weighted_eval(std::size_t n, const Params &p, const Rational &x0);

/// sum_i T_n^i(x0) (-q)^{n-i} B_{i,m}(x0); equals inverse_stirling_closed_form.
Rational mpb_poly_weighted_inverse_check(std::size_t n, const Params &p, const Rational &x0);

enum class PolyRelation { For9, For10, For11, For12 };

const char *to_string(PolyRelation relation);

struct PolyRelationReport {
  PolyRelation relation;
  Rational lhs;  // the double sum
  Rational rhs;  // the polynomial evaluated directly
  bool pass = false;
};

/// Cross relations between the polynomial families at x0:
///   For9:  B_n(x)  from the first-kind Cauchy polynomials,
///   For10: B_n(x)  from the second kind,
///   For11: C_n(x)  from the Bernoulli polynomials,
///   For12: hat-C_n(x) from the Bernoulli polynomials.
PolyRelationReport thm200_check(PolyRelation relation, std::size_t n, const Params &p,
                                const Rational &x0);

/// H_{n,p}(m; x) = sum_i C(n,i) (-q)^{n-i} H_{i,p}(m) x^{n-i}.
Polynomial h_polynomial(std::size_t n, std::size_t pcol, const Params &p);

/// ((pcol+a+m)^k/(pcol! a^k)) sum_i (i+pcol)! (-q)^{n-i} l^{i+a}
///   S_n^i(x0+pcol) / (a+m+i+pcol)^k
Rational h_poly_alternative_eval(std::size_t n, std::size_t pcol, const Params &p,
                                 const Rational &x0);

/// l (p+1) w_p H_{n,p+1}(x) - q (x + p) H_{n,p}(x), with w_p as in
/// build_h_table. Equals h_polynomial(n + 1, pcol, p).
Polynomial h_poly_recurrence(std::size_t n, std::size_t pcol, const Params &p);

} // namespace polyseq

#endif
