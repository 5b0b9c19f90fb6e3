#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace th {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init)
      for (long x : r) a_.emplace_back(x);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix to_rat(const IntMatrix& m);
IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows, std::size_t cols);

struct SmithForm {
  IntMatrix U, S, V;  // U * A * V == S
};

SmithForm smith_normal_form(const IntMatrix& A);

// Reduced row echelon form with lowest-index pivoting; pivot columns are returned.
RatMatrix rref(const RatMatrix& A, std::vector<std::size_t>* pivots = nullptr);

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<RatVec> basis;
};

RankNullspace rank_and_nullspace(const RatMatrix& A);

// Particular solution with every free variable set to zero.
std::optional<RatVec> solve_linear(const RatMatrix& A, const RatVec& b);

// Basis of ker(A) ∩ Z^n as rows in Hermite normal form.
IntMatrix kernel_saturation(const IntMatrix& A);

// Row Hermite normal form: positive pivots, entries above a pivot reduced into [0, pivot).
// Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& A);

// Basis (HNF rows) of span_Q(rows of A) ∩ Z^n.
IntMatrix saturate_rows(const IntMatrix& A);

Int determinant(const IntMatrix& A);
Rat determinant(const RatMatrix& A);

std::size_t rank(const RatMatrix& A);

Rat parse_rational(const std::string& s);
std::string to_string(const Rat& q);

}  // namespace th
