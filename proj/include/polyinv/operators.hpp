#pragma once

#include <cstddef>
#include <vector>

#include "polyinv/errors.hpp"
#include "polyinv/sparse_matrix.hpp"

namespace polyinv {

/// Square operator contract: v -> A v. `matvec_cost` reports how many
/// applications of the underlying matrix one apply costs, so solvers can
/// account matrix-vector products through composite operators (a polynomial
/// of A costs its degree per apply).
template <typename S>
class LinearOperator {
public:
  virtual ~LinearOperator() = default;

  virtual std::size_t dim() const = 0;
  virtual void apply(const std::vector<S>& x, std::vector<S>& y) const = 0;
  virtual std::size_t matvec_cost() const { return 1; }

  std::vector<S> operator()(const std::vector<S>& x) const {
    if (x.size() != dim()) {
      throw InvalidArgumentError("LinearOperator: dimension mismatch");
    }
    std::vector<S> y(dim());
    apply(x, y);
    return y;
  }
};

template <typename S>
class SparseOperator final : public LinearOperator<S> {
public:
  explicit SparseOperator(const SparseMatrix<S>& a) : a_(a) {
    if (a.n_rows() != a.n_cols()) {
      throw InvalidArgumentError("SparseOperator: matrix must be square");
    }
  }

  std::size_t dim() const override { return a_.n_rows(); }

  void apply(const std::vector<S>& x, std::vector<S>& y) const override {
    y = a_.matvec(x);
  }

  const SparseMatrix<S>& matrix() const { return a_; }

private:
  const SparseMatrix<S>& a_;
};

template <typename S>
class AdjointSparseOperator final : public LinearOperator<S> {
public:
  explicit AdjointSparseOperator(const SparseMatrix<S>& a) : a_(a) {
    if (a.n_rows() != a.n_cols()) {
      throw InvalidArgumentError("AdjointSparseOperator: matrix must be square");
    }
  }

  std::size_t dim() const override { return a_.n_rows(); }

  void apply(const std::vector<S>& x, std::vector<S>& y) const override {
    y = a_.adjoint_matvec(x);
  }

private:
  const SparseMatrix<S>& a_;
};

} // namespace polyinv
