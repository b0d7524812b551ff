#include "polyseq/stirling.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace polyseq {
namespace {

std::vector<Rational> second_kind_step(const Rational &x, std::size_t n,
                                       const std::vector<Rational> &row) {
  std::vector<Rational> next(n + 2);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    Rational v(0);
    if (i <= n) {
      v = (x + Rational(i)) * row[i];
    }
    if (i >= 1) {
      v += row[i - 1];
    }
    next[i] = std::move(v);
  }
  return next;
}

std::vector<Rational> first_kind_step(const Rational &x, std::size_t n,
                                      const std::vector<Rational> &row) {
  std::vector<Rational> next(n + 2);
  const Rational weight = x + Rational(n);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    Rational v(0);
    if (i >= 1) {
      v = row[i - 1];
    }
    if (i <= n) {
      v -= weight * row[i];
    }
    next[i] = std::move(v);
  }
  return next;
}

// One triangle per evaluation point, created on first use and kept for the
// lifetime of the process.
class TriangleRegistry {
public:
  using Step = std::vector<Rational> (*)(const Rational &, std::size_t,
                                         const std::vector<Rational> &);

  explicit TriangleRegistry(Step step) : step_(step) {}

  const Triangle &get(const Rational &x) {
    std::lock_guard lock(mutex_);
    auto it = triangles_.find(x);
    if (it == triangles_.end()) {
      auto step = step_;
      auto tri = std::make_unique<Triangle>(
          std::vector<Rational>{Rational(1)},
          [step, x](std::size_t n, const std::vector<Rational> &row) { return step(x, n, row); });
      it = triangles_.emplace(x, std::move(tri)).first;
    }
    return *it->second;
  }

private:
  Step step_;
  std::mutex mutex_;
  std::map<Rational, std::unique_ptr<Triangle>> triangles_;
};

TriangleRegistry &second_kind_registry() {
  static TriangleRegistry registry(&second_kind_step);
  return registry;
}

TriangleRegistry &first_kind_registry() {
  static TriangleRegistry registry(&first_kind_step);
  return registry;
}

} // namespace

const Triangle &weighted_S_triangle(const Rational &x) { return second_kind_registry().get(x); }

const Triangle &weighted_T_triangle(const Rational &x) { return first_kind_registry().get(x); }

Rational stirling1(std::size_t n, std::size_t i) {
  static const Triangle &tri = weighted_T_triangle(Rational(0));
  return tri.at(n, i);
}

Rational stirling2(std::size_t n, std::size_t i) {
  static const Triangle &tri = weighted_S_triangle(Rational(0));
  return tri.at(n, i);
}

Rational r_stirling2(std::size_t n, std::size_t i, std::size_t r) {
  return weighted_S_triangle(Rational(r)).at(n, i);
}

Rational weighted_S(std::size_t n, std::size_t i, const Rational &x) {
  return weighted_S_triangle(x).at(n, i);
}

Rational weighted_T(std::size_t n, std::size_t i, const Rational &x) {
  return weighted_T_triangle(x).at(n, i);
}

Rational r_whitney2(std::size_t n, std::size_t i, const Rational &h, const Rational &r) {
  if (h.is_zero()) {
    throw ZeroParameter("r-Whitney parameter h must be nonzero");
  }
  if (i > n) {
    return Rational(0);
  }
  return h.pow(static_cast<long>(n - i)) * weighted_S(n, i, r / h);
}

} // namespace polyseq
