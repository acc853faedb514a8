#pragma once

#include <gmpxx.h>

#include <vector>

#include "ddp/graph.hpp"

namespace ddp {

// Dense square-or-rectangular matrix over arbitrary-precision integers.
// Only what the polynomial identities need; multiplication is the plain
// cubic algorithm parallelised over rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);  // zero-filled

  static IntMatrix identity(int n);
  static IntMatrix ones(int n);
  static IntMatrix adjacency(const Graph& g);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(const mpz_class& s) const;

  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  mpz_class row_sum(int r) const;
  mpz_class col_sum(int c) const;
  mpz_class trace() const;
  bool all_nonnegative() const;
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace ddp
