#pragma once

#include <gmpxx.h>

#include <vector>

namespace spincone {

// Dense exact matrix over Q, row major.
class DenseMatrix {
 public:
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpq_class& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  // In-place reduced row echelon form; returns pivot columns in order.
  std::vector<int> rref();
  int rank() const;  // runs rref on a copy

 private:
  int rows_;
  int cols_;
  std::vector<mpq_class> data_;
};

// Sparse column-major matrix over Q for rank computations.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void add(int r, int c, const mpq_class& v);

  // exact rank by sparse Gaussian elimination with Markowitz-flavoured
  // pivoting; destroys the matrix
  int rank() &&;

 private:
  int rows_;
  int cols_;
  std::vector<std::vector<std::pair<int, mpq_class>>> cols_data_;
};

}  // namespace spincone
