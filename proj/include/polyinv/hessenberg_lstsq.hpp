#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "polyinv/dense_matrix.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"

namespace polyinv {

/// Progressive Givens QR of a growing (k+1) x k upper Hessenberg matrix,
/// minimizing || beta e1 - H y ||. Columns are appended one at a time (one
/// per GMRES iteration); the residual norm of the current least-squares
/// problem is |g_{k+1}| after rotation, available without solving.
template <typename S>
class HessenbergLeastSquares {
public:
  explicit HessenbergLeastSquares(real_t<S> beta) {
    g_.push_back(S{beta});
  }

  std::size_t size() const { return r_.size(); }

  /// Append column j of H (length j+2: entries h(0,j)..h(j+1,j)).
  /// Returns the updated residual norm estimate.
  real_t<S> append(std::vector<S> column) {
    const std::size_t k = r_.size();
    if (column.size() != k + 2) {
      throw InvalidArgumentError("HessenbergLeastSquares::append: bad column length");
    }
    // apply the accumulated rotations
    for (std::size_t i = 0; i < k; ++i) {
      const S a = column[i];
      const S b = column[i + 1];
      column[i] = cos_[i] * a + sin_[i] * b;
      column[i + 1] = -conjugate(sin_[i]) * a + cos_[i] * b;
    }
    // new rotation zeroing the subdiagonal entry
    real_t<S> c;
    S s;
    make_givens(column[k], column[k + 1], c, s);
    const S rkk = c * column[k] + s * column[k + 1];
    column[k] = rkk;
    column.pop_back();
    cos_.push_back(c);
    sin_.push_back(s);
    r_.push_back(std::move(column));
    const S g0 = g_[k];
    g_[k] = c * g0;
    g_.push_back(-conjugate(s) * g0);
    return abs_val(g_.back());
  }

  real_t<S> residual_estimate() const {
    return abs_val(g_.back());
  }

  /// Back substitution. An exactly zero diagonal entry marks GMRES
  /// stagnation: the corresponding coefficient is set to zero and the flag
  /// is raised.
  std::vector<S> solve(bool* stagnated = nullptr) const {
    const std::size_t k = r_.size();
    std::vector<S> y(k, S{});
    bool stalled = false;
    for (std::size_t ii = k; ii-- > 0;) {
      S acc = g_[ii];
      for (std::size_t j = ii + 1; j < k; ++j) {
        acc -= r_[j][ii] * y[j];
      }
      if (abs_val(r_[ii][ii]) == real_t<S>{0}) {
        stalled = true;
        y[ii] = S{};
      } else {
        y[ii] = acc / r_[ii][ii];
      }
    }
    if (stagnated != nullptr) {
      *stagnated = stalled;
    }
    return y;
  }

private:
  static void make_givens(const S& f, const S& g, real_t<S>& c, S& s) {
    const real_t<S> af = abs_val(f);
    const real_t<S> ag = abs_val(g);
    const real_t<S> r = std::hypot(af, ag);
    if (r == real_t<S>{0}) {
      c = real_t<S>{1};
      s = S{};
      return;
    }
    if (af == real_t<S>{0}) {
      c = real_t<S>{0};
      s = conjugate(g) / ag;
      return;
    }
    c = af / r;
    s = (f / af) * conjugate(g) / static_cast<S>(r);
  }

  std::vector<std::vector<S>> r_; // column j holds R(0..j, j)
  std::vector<real_t<S>> cos_;
  std::vector<S> sin_;
  std::vector<S> g_; // rotated beta*e1
};

template <typename S>
struct HessenbergLstsqResult {
  std::vector<S> y;
  real_t<S> residual_norm;
  bool stagnated;
};

/// Solve min || beta e1 - H y || for an explicit (k+1) x k Hessenberg H.
template <typename S>
HessenbergLstsqResult<S> least_squares_hessenberg(const DenseMatrix<S>& h, real_t<S> beta) {
  const std::size_t k = h.cols();
  if (h.rows() != k + 1) {
    throw InvalidArgumentError("least_squares_hessenberg: H must be (k+1) x k");
  }
  HessenbergLeastSquares<S> ls(beta);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<S> col(j + 2);
    for (std::size_t i = 0; i < j + 2; ++i) {
      col[i] = h(i, j);
    }
    ls.append(std::move(col));
  }
  HessenbergLstsqResult<S> out;
  out.y = ls.solve(&out.stagnated);
  out.residual_norm = ls.residual_estimate();
  return out;
}

} // namespace polyinv
