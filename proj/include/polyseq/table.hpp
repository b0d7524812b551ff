#ifndef POLYSEQ_TABLE_HPP
#define POLYSEQ_TABLE_HPP

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "polyseq/exactnum.hpp"

namespace polyseq {

/// Lower-triangular table grown row by row on demand.
///
/// Row n holds entries 0..n; anything outside 0 <= i <= n reads as zero.
/// Reads of rows that already exist take a shared lock; growth is
/// serialized. Stored entries are never modified after they are written.
class Triangle {
public:
  /// Produces row n+1 (n+2 entries) from row n.
  using RowStep = std::function<std::vector<Rational>(std::size_t n, const std::vector<Rational> &row)>;

  Triangle(std::vector<Rational> row0, RowStep step);

  Triangle(const Triangle &) = delete;
  Triangle &operator=(const Triangle &) = delete;

  Rational at(std::size_t n, std::size_t i) const;
  Rational at(long n, long i) const;
  std::vector<Rational> row(std::size_t n) const;
  std::size_t rows_computed() const;

private:
  void grow_to(std::size_t n) const;

  RowStep step_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<Rational>> rows_;
};

/// Dense rectangular table of rationals, row-major.
class Grid {
public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational &operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  Rational &operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }

  friend bool operator==(const Grid &, const Grid &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

} // namespace polyseq

#endif
