#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "polyinv/dense_matrix.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"

namespace polyinv {

/// LU factorization with partial pivoting for small dense systems.
template <typename S>
class LuFactors {
public:
  explicit LuFactors(DenseMatrix<S> a, double pivot_rel_tol = 1e-14)
      : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (n != lu_.cols()) {
      throw InvalidArgumentError("LuFactors: matrix must be square");
    }
    const double scale = static_cast<double>(lu_.max_abs());
    const double tol = pivot_rel_tol * (scale > 0.0 ? scale : 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      perm_[i] = i;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      double best = static_cast<double>(abs_val(lu_(k, k)));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double a = static_cast<double>(abs_val(lu_(i, k)));
        if (a > best) {
          best = a;
          piv = i;
        }
      }
      if (best <= tol) {
        throw SingularMatrixError("LU pivot below tolerance at column " + std::to_string(k));
      }
      if (piv != k) {
        std::swap(perm_[k], perm_[piv]);
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(lu_(k, j), lu_(piv, j));
        }
      }
      const S pivot = lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const S m = lu_(i, k) / pivot;
        lu_(i, k) = m;
        for (std::size_t j = k + 1; j < n; ++j) {
          lu_(i, j) -= m * lu_(k, j);
        }
      }
    }
  }

  std::size_t order() const { return lu_.rows(); }

  std::vector<S> solve(const std::vector<S>& rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.size() != n) {
      throw InvalidArgumentError("LuFactors::solve: dimension mismatch");
    }
    std::vector<S> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rhs[perm_[i]];
    }
    for (std::size_t i = 1; i < n; ++i) {
      S acc = x[i];
      for (std::size_t j = 0; j < i; ++j) {
        acc -= lu_(i, j) * x[j];
      }
      x[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      S acc = x[ii];
      for (std::size_t j = ii + 1; j < n; ++j) {
        acc -= lu_(ii, j) * x[j];
      }
      x[ii] = acc / lu_(ii, ii);
    }
    return x;
  }

  DenseMatrix<S> solve_matrix(const DenseMatrix<S>& rhs) const {
    DenseMatrix<S> x(rhs.rows(), rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      x.set_col(j, solve(rhs.col(j)));
    }
    return x;
  }

private:
  DenseMatrix<S> lu_;
  std::vector<std::size_t> perm_;
};

/// Partial-pivoting solve of a small dense square system G d = rhs.
/// Throws SingularMatrixError when a pivot falls below tolerance.
template <typename S>
std::vector<S> solve_small_dense(const DenseMatrix<S>& g, const std::vector<S>& rhs) {
  return LuFactors<S>(g).solve(rhs);
}

template <typename S>
DenseMatrix<S> dense_inverse(const DenseMatrix<S>& a) {
  return LuFactors<S>(a).solve_matrix(DenseMatrix<S>::identity(a.rows()));
}

} // namespace polyinv
