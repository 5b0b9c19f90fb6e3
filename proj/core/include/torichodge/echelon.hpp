#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "torichodge/linalg.hpp"

namespace th {

// Sorted by column, no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rat>>;

SparseVec sparse_axpy(const SparseVec& x, const Rat& a, const SparseVec& y);  // x + a*y
SparseVec sparse_scale(const SparseVec& x, const Rat& a);
SparseVec sparse_from_dense(const RatVec& v);
RatVec sparse_to_dense(const SparseVec& v, std::size_t n);

// Incremental row space over Q. Each stored row has a pivot at its lowest column,
// equal to 1, and no entries below it. Rows are never back-substituted, so reduction
// walks pivots in ascending column order.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols = 0) : pivot_row_(ncols, -1) {}

  std::size_t ncols() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

  // Returns true when v was independent of the current span.
  bool insert(const SparseVec& v);
  // Remainder of v: zero on all pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  // Same, also returning the coefficient of each stored row that was subtracted.
  SparseVec reduce(const SparseVec& v, std::vector<std::pair<std::size_t, Rat>>& used) const;

  std::vector<std::size_t> non_pivots() const;
  const SparseVec& row(std::size_t i) const { return rows_[i]; }
  std::size_t pivot_of_row(std::size_t i) const { return rows_[i].front().first; }

 private:
  std::vector<int> pivot_row_;
  std::vector<SparseVec> rows_;
};

// Span of explicitly inserted vectors, remembering how each stored row combines them,
// so that coordinates in terms of the inserted independent vectors can be recovered.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ncols = 0) : ech_(ncols) {}

  // Returns the basis index of v if it was independent, nullopt otherwise.
  std::optional<std::size_t> insert(const SparseVec& v);
  // Coordinates of v in the inserted basis; nullopt when v is outside the span.
  std::optional<RatVec> coords(const SparseVec& v) const;
  std::size_t size() const { return count_; }
  std::size_t ncols() const { return ech_.ncols(); }

 private:
  Echelon ech_;
  std::vector<RatVec> combo_;  // row i of ech_ = sum_j combo_[i][j] * basis_j
  std::size_t count_ = 0;
};

// Rank of a sparse rational matrix reduced modulo a prime; rows with a denominator
// divisible by p make the result unreliable and are reported via the flag.
std::size_t modular_rank(const std::vector<SparseVec>& rows, std::size_t ncols,
                         std::uint64_t p, bool* bad_prime = nullptr);

}  // namespace th
