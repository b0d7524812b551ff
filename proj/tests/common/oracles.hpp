// Independent reference implementations used only by the tests. Nothing here
// calls the library's triangles, tables or series code; each value is
// recomputed from a different definition (enumeration, inclusion-exclusion,
// polynomial expansion).
#ifndef POLYSEQ_TESTS_ORACLES_HPP
#define POLYSEQ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "polyseq/exactnum.hpp"

namespace oracle {

using polyseq::Rational;
using Coeffs = std::vector<Rational>;

inline Rational fact(std::size_t n) {
  Rational r(1);
  for (std::size_t i = 2; i <= n; ++i) {
    r *= Rational(i);
  }
  return r;
}

inline Rational choose(std::size_t n, std::size_t k) {
  if (k > n) {
    return Rational(0);
  }
  return fact(n) / (fact(k) * fact(n - k));
}

inline Rational ipow(const Rational &b, long e) {
  if (e < 0) {
    return Rational(1) / ipow(b, -e);
  }
  Rational r(1);
  for (long i = 0; i < e; ++i) {
    r *= b;
  }
  return r;
}

inline Rational sgn(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

inline Coeffs poly_mul(const Coeffs &f, const Coeffs &g) {
  Coeffs out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

inline Rational poly_eval(const Coeffs &f, const Rational &x) {
  Rational acc(0), xp(1);
  for (const auto &c : f) {
    acc += c * xp;
    xp *= x;
  }
  return acc;
}

/// prod_{j<n} (y - shift - j): coefficients in y.
inline Coeffs falling(const Rational &shift, std::size_t n) {
  Coeffs out{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    out = poly_mul(out, {-(shift + Rational(j)), Rational(1)});
  }
  return out;
}

/// Signed s(n,i) as the coefficient of y^i in y(y-1)...(y-n+1).
inline Rational stirling1(std::size_t n, std::size_t i) {
  const Coeffs f = falling(Rational(0), n);
  return i < f.size() ? f[i] : Rational(0);
}

/// Number of set partitions of {0..n-1} into exactly i blocks, by
/// enumerating restricted growth strings.
inline long partition_count(std::size_t n, std::size_t i) {
  if (n == 0) {
    return i == 0 ? 1 : 0;
  }
  long count = 0;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
    if (pos == n) {
      count += blocks == i ? 1 : 0;
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return count;
}

/// Partitions of {0..n+r-1} into i+r blocks with 0..r-1 in distinct blocks.
inline long r_partition_count(std::size_t n, std::size_t i, std::size_t r) {
  const std::size_t total = n + r;
  const std::size_t want = i + r;
  if (total == 0) {
    return want == 0 ? 1 : 0;
  }
  long count = 0;
  std::vector<std::size_t> rgs(total, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
    if (pos == total) {
      count += blocks == want ? 1 : 0;
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      // the first r elements must each open a new block
      if (pos < r && b != blocks) {
        continue;
      }
      rgs[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

/// Number of permutations of n elements with exactly i cycles.
inline long cycle_count(std::size_t n, std::size_t i) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (!seen[s]) {
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = perm[t]) {
          seen[t] = true;
        }
      }
    }
    count += cycles == i ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// S_n^i(x) = (1/i!) sum_j C(i,j) (-1)^{i-j} (x+j)^n
inline Rational weighted_S(std::size_t n, std::size_t i, const Rational &x) {
  Rational acc(0);
  for (std::size_t j = 0; j <= i; ++j) {
    acc += choose(i, j) * sgn(i - j) * ipow(x + Rational(j), static_cast<long>(n));
  }
  return acc / fact(i);
}

/// T_n^i(x): coefficient of y^i in (y - x)(y - x - 1)...(y - x - n + 1),
/// i.e. n! [z^n] (1+z)^{y-x}.
inline Rational weighted_T(std::size_t n, std::size_t i, const Rational &x) {
  const Coeffs f = falling(x, n);
  return i < f.size() ? f[i] : Rational(0);
}

inline Rational stirling2(std::size_t n, std::size_t i) { return weighted_S(n, i, Rational(0)); }

struct P {
  long a;
  Rational q;
  Rational l;
  long k;
  long m;
};

inline P from(const polyseq::Params &p) {
  return {p.a(), p.q(), p.l(), p.k(), static_cast<long>(p.m())};
}

inline Rational inv_pow(long base, long k) {
  return k > 0 ? Rational(1) / ipow(Rational(base), k) : ipow(Rational(base), -k);
}

inline Rational prefactor(const P &p) {
  return ipow(Rational(p.a + p.m), p.k) / ipow(Rational(p.a), p.k);
}

/// C_{n,m}, first (second = false) or second kind, from the Stirling sum
/// with oracle Stirling numbers.
inline Rational cauchy(bool second, std::size_t n, const P &p) {
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    acc += stirling1(n, i) * ipow(p.q, static_cast<long>(n - i)) *
           (second ? sgn(i) : Rational(1)) * ipow(p.l, p.a + static_cast<long>(i)) *
           inv_pow(p.a + p.m + static_cast<long>(i), p.k);
  }
  return prefactor(p) * acc;
}

/// B_{n,m} from the Stirling sum with oracle Stirling numbers.
inline Rational bernoulli(std::size_t n, const P &p) {
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    acc += fact(i) * ipow(-p.q, static_cast<long>(n - i)) * ipow(p.l, p.a + static_cast<long>(i)) *
           stirling2(n, i) * inv_pow(p.a + p.m + static_cast<long>(i), p.k);
  }
  return prefactor(p) * acc;
}

/// x0 (x0 + q) ... (x0 + q(n-1))
inline Rational rising_value(const Rational &q, std::size_t n, const Rational &x0) {
  Rational r(1);
  for (std::size_t j = 0; j < n; ++j) {
    r *= x0 + q * Rational(j);
  }
  return r;
}

/// Cauchy polynomial value at x0 as a binomial convolution of oracle numbers.
inline Rational cauchy_poly(bool second, std::size_t n, const P &p, const Rational &x0) {
  Rational acc(0);
  for (std::size_t j = 0; j <= n; ++j) {
    acc += sgn(n - j) * choose(n, j) * cauchy(second, j, p) * rising_value(p.q, n - j, x0);
  }
  return acc;
}

inline Rational bernoulli_poly(std::size_t n, const P &p, const Rational &x0) {
  Rational acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    acc += choose(n, i) * ipow(-p.q, static_cast<long>(n - i)) * bernoulli(i, p) *
           ipow(x0, static_cast<long>(n - i));
  }
  return acc;
}

/// H_{n,p} from its defining first-kind Stirling combination of oracle numbers.
inline Rational h_number(std::size_t n, const P &p, std::size_t pcol) {
  Rational acc(0);
  for (std::size_t i = 0; i <= pcol; ++i) {
    acc += stirling1(pcol, i) * ipow(-p.q, static_cast<long>(pcol - i)) * bernoulli(n + i, p);
  }
  const Rational ratio = Rational(static_cast<long>(pcol) + p.a + p.m) / Rational(p.a + p.m);
  return acc * ipow(ratio, p.k) / (fact(pcol) * ipow(p.l, static_cast<long>(pcol)));
}

/// Classical Bernoulli numbers with B_1 = +1/2 (Akiyama-Tanigawa).
inline std::vector<Rational> akiyama_tanigawa(std::size_t N) {
  std::vector<Rational> out;
  std::vector<Rational> row;
  for (std::size_t m = 0; m <= N; ++m) {
    row.push_back(Rational(1) / Rational(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
    }
    out.push_back(row[0]);
  }
  return out;
}

/// Integral of x(x-1)...(x-n+1) (or (-1)^n x(x+1)...(x+n-1)) over [0,1].
inline Rational cauchy_integral(bool second, std::size_t n) {
  Coeffs f{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    f = poly_mul(f, {second ? Rational(j) : -Rational(j), Rational(1)});
  }
  Rational acc(0);
  for (std::size_t d = 0; d < f.size(); ++d) {
    acc += f[d] / Rational(d + 1);
  }
  return second ? sgn(n) * acc : acc;
}

} // namespace oracle

#endif
