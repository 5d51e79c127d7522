#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "polyinv/dense_matrix.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"

namespace polyinv {

/// Singular values by one-sided Jacobi: columns are rotated pairwise until
/// mutually orthogonal; the singular values are the final column norms.
/// High relative accuracy at small sizes, which is all we need.
template <typename S>
std::vector<double> singular_values(DenseMatrix<S> a) {
  if (a.rows() < a.cols()) {
    a = a.adjoint();
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  for (const S& v : a.storage()) {
    if (!is_finite(v)) {
      throw InvalidArgumentError("singular_values: non-finite entry");
    }
  }

  const double tol = 1e-15;
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool converged = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        S* ci = a.col_data(i);
        S* cj = a.col_data(j);
        double alpha = 0.0, beta = 0.0;
        S gamma{};
        for (std::size_t r = 0; r < m; ++r) {
          alpha += static_cast<double>(abs_val(ci[r])) * static_cast<double>(abs_val(ci[r]));
          beta += static_cast<double>(abs_val(cj[r])) * static_cast<double>(abs_val(cj[r]));
          gamma += conjugate(ci[r]) * cj[r];
        }
        const double ag = static_cast<double>(abs_val(gamma));
        if (ag <= tol * std::sqrt(alpha * beta) || alpha == 0.0 || beta == 0.0) {
          continue;
        }
        converged = false;
        // rotate column j by the phase of gamma so the pair inner product
        // becomes real, then apply a real Jacobi rotation
        if constexpr (is_complex_v<S>) {
          const S phase = conjugate(gamma) / static_cast<S>(ag);
          for (std::size_t r = 0; r < m; ++r) {
            cj[r] *= phase;
          }
        } else {
          if (gamma < S{0}) {
            for (std::size_t r = 0; r < m; ++r) {
              cj[r] = -cj[r];
            }
          }
        }
        const double tau = (beta - alpha) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < m; ++r) {
          const S vi = ci[r];
          const S vj = cj[r];
          ci[r] = static_cast<S>(c) * vi - static_cast<S>(s) * vj;
          cj[r] = static_cast<S>(s) * vi + static_cast<S>(c) * vj;
        }
      }
    }
    if (converged) {
      break;
    }
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double ssq = 0.0;
    const S* cj = a.col_data(j);
    for (std::size_t r = 0; r < m; ++r) {
      const double v = static_cast<double>(abs_val(cj[r]));
      ssq += v * v;
    }
    sv[j] = std::sqrt(ssq);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

/// Spectral norm (largest singular value).
template <typename S>
double spectral_norm(const DenseMatrix<S>& a) {
  return singular_values(a).front();
}

} // namespace polyinv
