#include "ddp/intmatrix.hpp"

#include <stdexcept>

#include "ddp/parallel.hpp"

namespace ddp {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, mpz_class(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = 1;
  }
  return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) m.at(u, v) = 1;
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(rows_, o.cols_);
  parallel_for(rows_, [&](int i) {
    mpz_class acc;
    for (int j = 0; j < o.cols_; ++j) {
      acc = 0;
      for (int l = 0; l < cols_; ++l) acc += at(i, l) * o.at(l, j);
      out.at(i, j) = acc;
    }
  });
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const mpz_class& s) const {
  IntMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

mpz_class IntMatrix::row_sum(int r) const {
  mpz_class s = 0;
  for (int j = 0; j < cols_; ++j) s += at(r, j);
  return s;
}

mpz_class IntMatrix::col_sum(int c) const {
  mpz_class s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, c);
  return s;
}

mpz_class IntMatrix::trace() const {
  mpz_class s = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
  return s;
}

bool IntMatrix::all_nonnegative() const {
  for (const auto& v : data_) {
    if (sgn(v) < 0) return false;
  }
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

}  // namespace ddp
