#ifndef POLYSEQ_STIRLING_HPP
#define POLYSEQ_STIRLING_HPP

#include <cstddef>

#include "polyseq/exactnum.hpp"
#include "polyseq/table.hpp"

namespace polyseq {

// Stirling-family numbers. All values come from process-wide memoized
// triangles built by their row recurrences; indices outside 0 <= i <= n
// give 0.

/// Signed first kind s(n, i): s(n+1, i) = s(n, i-1) - n s(n, i).
Rational stirling1(std::size_t n, std::size_t i);

/// Second kind {n, i}: {n+1, i} = i {n, i} + {n, i-1}.
Rational stirling2(std::size_t n, std::size_t i);

/// r-Stirling number {n+r, i+r}_r, i.e. n! [z^n] e^{rz} (e^z - 1)^i / i!.
Rational r_stirling2(std::size_t n, std::size_t i, std::size_t r);

/// Weighted second kind S_n^i(x): n! [z^n] e^{xz} (e^z - 1)^i / i!.
/// Row recurrence S_{n+1}^i = (x + i) S_n^i + S_n^{i-1}.
Rational weighted_S(std::size_t n, std::size_t i, const Rational &x);

/// Weighted first kind T_n^i(x): n! [z^n] (ln(1+z))^i / (i! (1+z)^x).
/// Row recurrence T_{n+1}^i = T_n^{i-1} - (x + n) T_n^i.
Rational weighted_T(std::size_t n, std::size_t i, const Rational &x);

/// r-Whitney number of the second kind, W_{h,r}(n, i) = h^{n-i} S_n^i(r/h).
/// Throws ZeroParameter if h == 0.
Rational r_whitney2(std::size_t n, std::size_t i, const Rational &h, const Rational &r);

/// The memoized triangle backing weighted_S at point x (shared, thread-safe).
const Triangle &weighted_S_triangle(const Rational &x);
const Triangle &weighted_T_triangle(const Rational &x);

} // namespace polyseq

#endif
