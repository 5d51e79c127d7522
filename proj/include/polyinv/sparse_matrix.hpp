#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <vector>

#include "polyinv/dense_matrix.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"

namespace polyinv {

/// Compressed-sparse-row matrix. Column indices are strictly increasing
/// within each row and duplicates are merged at construction, so the
/// row-major, ascending-column summation order in spmv is deterministic.
template <typename S>
class SparseMatrix {
public:
  SparseMatrix() = default;

  SparseMatrix(std::size_t n_rows, std::size_t n_cols,
               std::vector<std::size_t> row_ptr,
               std::vector<std::size_t> col_idx,
               std::vector<S> values)
      : n_rows_(n_rows), n_cols_(n_cols),
        row_ptr_(std::move(row_ptr)),
        col_idx_(std::move(col_idx)),
        values_(std::move(values)) {
    validate();
  }

  /// Build from (row, col, value) triplets; duplicates are summed.
  static SparseMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                    std::vector<std::tuple<std::size_t, std::size_t, S>> trips) {
    for (const auto& [i, j, v] : trips) {
      if (i >= n_rows || j >= n_cols) {
        throw InvalidArgumentError("from_triplets: index out of range");
      }
    }
    std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      return std::get<1>(a) < std::get<1>(b);
    });
    std::vector<std::size_t> rp(n_rows + 1, 0);
    std::vector<std::size_t> ci;
    std::vector<S> vals;
    ci.reserve(trips.size());
    vals.reserve(trips.size());
    for (std::size_t t = 0; t < trips.size();) {
      const std::size_t i = std::get<0>(trips[t]);
      const std::size_t j = std::get<1>(trips[t]);
      S acc{};
      while (t < trips.size() && std::get<0>(trips[t]) == i && std::get<1>(trips[t]) == j) {
        acc += std::get<2>(trips[t]);
        ++t;
      }
      ci.push_back(j);
      vals.push_back(acc);
      ++rp[i + 1];
    }
    for (std::size_t i = 0; i < n_rows; ++i) {
      rp[i + 1] += rp[i];
    }
    return SparseMatrix(n_rows, n_cols, std::move(rp), std::move(ci), std::move(vals));
  }

  static SparseMatrix diagonal(const std::vector<S>& d) {
    std::vector<std::tuple<std::size_t, std::size_t, S>> trips;
    trips.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      trips.emplace_back(i, i, d[i]);
    }
    return from_triplets(d.size(), d.size(), std::move(trips));
  }

  static SparseMatrix identity(std::size_t n) {
    return diagonal(std::vector<S>(n, S{1}));
  }

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::size_t>& col_idx() const { return col_idx_; }
  const std::vector<S>& values() const { return values_; }
  std::vector<S>& values() { return values_; }

  /// y = A x, summed row-major in ascending column order.
  std::vector<S> matvec(const std::vector<S>& x) const {
    if (x.size() != n_cols_) {
      throw InvalidArgumentError("spmv: dimension mismatch");
    }
    std::vector<S> y(n_rows_, S{});
    for (std::size_t i = 0; i < n_rows_; ++i) {
      S acc{};
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        acc += values_[k] * x[col_idx_[k]];
      }
      y[i] = acc;
    }
    return y;
  }

  /// y = A^H x (scatter over rows; deterministic order).
  std::vector<S> adjoint_matvec(const std::vector<S>& x) const {
    if (x.size() != n_rows_) {
      throw InvalidArgumentError("adjoint spmv: dimension mismatch");
    }
    std::vector<S> y(n_cols_, S{});
    for (std::size_t i = 0; i < n_rows_; ++i) {
      const S xi = x[i];
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        y[col_idx_[k]] += conjugate(values_[k]) * xi;
      }
    }
    return y;
  }

  DenseMatrix<S> to_dense() const {
    DenseMatrix<S> d(n_rows_, n_cols_);
    for (std::size_t i = 0; i < n_rows_; ++i) {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        d(i, col_idx_[k]) = values_[k];
      }
    }
    return d;
  }

  S get(std::size_t i, std::size_t j) const {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      if (col_idx_[k] == j) {
        return values_[k];
      }
      if (col_idx_[k] > j) {
        break;
      }
    }
    return S{};
  }

  bool is_hermitian(real_t<S> tol = real_t<S>{0}) const {
    if (n_rows_ != n_cols_) {
      return false;
    }
    for (std::size_t i = 0; i < n_rows_; ++i) {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        if (abs_val(values_[k] - conjugate(get(col_idx_[k], i))) > tol) {
          return false;
        }
      }
    }
    return true;
  }

private:
  void validate() const {
    if (row_ptr_.size() != n_rows_ + 1 || row_ptr_.front() != 0 ||
        row_ptr_.back() != values_.size() || col_idx_.size() != values_.size()) {
      throw InvalidArgumentError("SparseMatrix: inconsistent CSR arrays");
    }
    for (std::size_t i = 0; i < n_rows_; ++i) {
      if (row_ptr_[i] > row_ptr_[i + 1]) {
        throw InvalidArgumentError("SparseMatrix: row_ptr not nondecreasing");
      }
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        if (col_idx_[k] >= n_cols_) {
          throw InvalidArgumentError("SparseMatrix: column index out of range");
        }
        if (k > row_ptr_[i] && col_idx_[k] <= col_idx_[k - 1]) {
          throw InvalidArgumentError("SparseMatrix: columns not strictly increasing in row");
        }
      }
    }
  }

  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<S> values_;
};

template <typename S>
std::vector<S> spmv(const SparseMatrix<S>& a, const std::vector<S>& x) {
  return a.matvec(x);
}

} // namespace polyinv
