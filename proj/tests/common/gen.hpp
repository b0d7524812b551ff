// Small seeded generators for the property tests.
#ifndef POLYSEQ_TESTS_GEN_HPP
#define POLYSEQ_TESTS_GEN_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "polyseq/exactnum.hpp"

namespace gen {

using polyseq::Rational;

class Gen {
public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) {
      v = integer(lo, hi);
    }
    return v;
  }

  Rational rational(long span = 9, long max_den = 6) {
    return Rational(integer(-span, span), integer(1, max_den));
  }

  Rational nonzero_rational(long span = 9, long max_den = 6) {
    return Rational(nonzero(-span, span), integer(1, max_den));
  }

  std::vector<Rational> box(std::size_t max_len = 3) {
    std::vector<Rational> L(static_cast<std::size_t>(integer(1, static_cast<long>(max_len))));
    for (auto &v : L) {
      v = nonzero_rational(4, 4);
    }
    return L;
  }

  /// A valid Params with a + i + m != 0 for i <= n_max when k > 0 and
  /// a + m != 0 always.
  polyseq::Params params(std::size_t n_max, long k_span = 3) {
    for (;;) {
      const long a = nonzero(-5, 5);
      const long k = nonzero(-k_span, k_span);
      const long m = integer(0, 4);
      bool bad = a + m == 0;
      if (k > 0) {
        for (std::size_t i = 0; i <= n_max; ++i) {
          bad = bad || a + m + static_cast<long>(i) == 0;
        }
      }
      if (!bad) {
        return polyseq::make_params(a, nonzero_rational(4, 3), box(), k, m);
      }
    }
  }

  std::mt19937 &engine() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace gen

#endif
