#pragma once

#include <cstddef>
#include <vector>

#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"
#include "polyinv/vec.hpp"

namespace polyinv {

/// Column-major dense matrix.
template <typename S>
class DenseMatrix {
public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, S{}) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = S{1};
    }
    return m;
  }

  static DenseMatrix from_columns(const std::vector<std::vector<S>>& cols) {
    if (cols.empty()) {
      return {};
    }
    DenseMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) {
        throw InvalidArgumentError("from_columns: ragged column lengths");
      }
      for (std::size_t i = 0; i < m.rows_; ++i) {
        m(i, j) = cols[j][i];
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  S* col_data(std::size_t j) { return data_.data() + j * rows_; }
  const S* col_data(std::size_t j) const { return data_.data() + j * rows_; }

  std::vector<S> col(std::size_t j) const {
    return std::vector<S>(col_data(j), col_data(j) + rows_);
  }

  void set_col(std::size_t j, const std::vector<S>& v) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, j) = v[i];
    }
  }

  std::vector<S>& storage() { return data_; }
  const std::vector<S>& storage() const { return data_; }

  /// y = A x
  std::vector<S> matvec(const std::vector<S>& x) const {
    if (x.size() != cols_) {
      throw InvalidArgumentError("DenseMatrix::matvec: dimension mismatch");
    }
    std::vector<S> y(rows_, S{});
    for (std::size_t j = 0; j < cols_; ++j) {
      const S xj = x[j];
      const S* c = col_data(j);
      for (std::size_t i = 0; i < rows_; ++i) {
        y[i] += c[i] * xj;
      }
    }
    return y;
  }

  /// y = A^H x
  std::vector<S> adjoint_matvec(const std::vector<S>& x) const {
    if (x.size() != rows_) {
      throw InvalidArgumentError("DenseMatrix::adjoint_matvec: dimension mismatch");
    }
    std::vector<S> y(cols_, S{});
    for (std::size_t j = 0; j < cols_; ++j) {
      const S* c = col_data(j);
      S acc{};
      for (std::size_t i = 0; i < rows_; ++i) {
        acc += conjugate(c[i]) * x[i];
      }
      y[j] = acc;
    }
    return y;
  }

  DenseMatrix adjoint() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) {
        t(j, i) = conjugate((*this)(i, j));
      }
    }
    return t;
  }

  DenseMatrix mul(const DenseMatrix& b) const {
    if (cols_ != b.rows_) {
      throw InvalidArgumentError("DenseMatrix::mul: dimension mismatch");
    }
    DenseMatrix c(rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const S bkj = b(k, j);
        const S* a = col_data(k);
        S* cc = c.col_data(j);
        for (std::size_t i = 0; i < rows_; ++i) {
          cc[i] += a[i] * bkj;
        }
      }
    }
    return c;
  }

  real_t<S> max_abs() const {
    real_t<S> m{0};
    for (const S& v : data_) {
      m = std::max(m, abs_val(v));
    }
    return m;
  }

  real_t<S> frobenius_norm() const {
    return nrm2(data_);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// max-norm of (A^H A - I); basis orthonormality diagnostic.
template <typename S>
real_t<S> orthonormality_defect(const DenseMatrix<S>& v) {
  real_t<S> worst{0};
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      S acc{};
      for (std::size_t r = 0; r < v.rows(); ++r) {
        acc += conjugate(v(r, i)) * v(r, j);
      }
      if (i == j) {
        acc -= S{1};
      }
      worst = std::max(worst, abs_val(acc));
    }
  }
  return worst;
}

} // namespace polyinv
