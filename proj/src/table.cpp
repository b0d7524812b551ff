#include "polyseq/table.hpp"

#include <utility>

namespace polyseq {

Triangle::Triangle(std::vector<Rational> row0, RowStep step) : step_(std::move(step)) {
  rows_.push_back(std::move(row0));
}

void Triangle::grow_to(std::size_t n) const {
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) {
    const std::size_t last = rows_.size() - 1;
    rows_.push_back(step_(last, rows_.back()));
  }
}

Rational Triangle::at(std::size_t n, std::size_t i) const {
  if (i > n) {
    return Rational(0);
  }
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) {
      const auto &r = rows_[n];
      return i < r.size() ? r[i] : Rational(0);
    }
  }
  grow_to(n);
  std::shared_lock lock(mutex_);
  const auto &r = rows_[n];
  return i < r.size() ? r[i] : Rational(0);
}

Rational Triangle::at(long n, long i) const {
  if (n < 0 || i < 0) {
    return Rational(0);
  }
  return at(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
}

std::vector<Rational> Triangle::row(std::size_t n) const {
  grow_to(n);
  std::shared_lock lock(mutex_);
  return rows_[n];
}

std::size_t Triangle::rows_computed() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

} // namespace polyseq
