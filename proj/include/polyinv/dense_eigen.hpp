#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "polyinv/dense_matrix.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/hessenberg_eig.hpp"
#include "polyinv/prng.hpp"
#include "polyinv/scalar.hpp"
#include "polyinv/small_lu.hpp"
#include "polyinv/vec.hpp"

namespace polyinv {

/// Householder reduction to upper Hessenberg form (similarity; no Q kept).
template <typename S>
DenseMatrix<S> to_hessenberg(DenseMatrix<S> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) {
    throw InvalidArgumentError("to_hessenberg: matrix must be square");
  }
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::vector<S> v(n - k - 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = a(k + 1 + i, k);
    }
    const real_t<S> nv = nrm2(v);
    if (nv == real_t<S>{0}) {
      continue;
    }
    // Householder vector: v + sign-phase * ||v|| e1
    S phase;
    if (abs_val(v[0]) > real_t<S>{0}) {
      phase = v[0] / static_cast<S>(abs_val(v[0]));
    } else {
      phase = S{1};
    }
    v[0] += phase * static_cast<S>(nv);
    const real_t<S> vn = nrm2(v);
    if (vn == real_t<S>{0}) {
      continue;
    }
    for (S& x : v) {
      x /= static_cast<S>(vn);
    }
    // A <- P A with P = I - 2 v v^H applied on rows k+1..n-1
    for (std::size_t j = k; j < n; ++j) {
      S acc{};
      for (std::size_t i = 0; i < v.size(); ++i) {
        acc += conjugate(v[i]) * a(k + 1 + i, j);
      }
      acc = acc * S{2};
      for (std::size_t i = 0; i < v.size(); ++i) {
        a(k + 1 + i, j) -= v[i] * acc;
      }
    }
    // A <- A P on columns k+1..n-1
    for (std::size_t i = 0; i < n; ++i) {
      S acc{};
      for (std::size_t j = 0; j < v.size(); ++j) {
        acc += a(i, k + 1 + j) * v[j];
      }
      acc = acc * S{2};
      for (std::size_t j = 0; j < v.size(); ++j) {
        a(i, k + 1 + j) -= acc * conjugate(v[j]);
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = S{};
    }
  }
  return a;
}

/// Eigenvalues of a general dense matrix: Householder reduction to
/// Hessenberg form, then QR iteration.
template <typename S>
std::vector<cplx> dense_eigenvalues(const DenseMatrix<S>& a) {
  return hessenberg_eigenvalues(to_hessenberg(a));
}

struct DenseEigenResult {
  std::vector<cplx> values;
  DenseMatrix<cplx> vectors; // unit 2-norm columns
};

namespace detail {

inline DenseMatrix<cplx> complexify(const DenseMatrix<double>& a) {
  DenseMatrix<cplx> c(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      c(i, j) = cplx(a(i, j), 0.0);
    }
  }
  return c;
}

inline const DenseMatrix<cplx>& complexify(const DenseMatrix<cplx>& a) {
  return a;
}

} // namespace detail

/// Full eigendecomposition of a general dense matrix at desk scale:
/// eigenvalues from the Hessenberg QR core, eigenvectors by inverse
/// iteration with a slightly perturbed shift.
template <typename S>
DenseEigenResult dense_eigen(const DenseMatrix<S>& a) {
  const std::size_t n = a.rows();
  DenseEigenResult out;
  out.values = dense_eigenvalues(a);
  out.vectors = DenseMatrix<cplx>(n, n);
  const DenseMatrix<cplx> ac = detail::complexify(a);
  const double scale = std::max(1e-300, static_cast<double>(a.max_abs()));

  Prng rng(0x5eedULL);
  std::vector<cplx> start(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = cplx(rng.normal(), rng.normal());
  }
  const double sn = nrm2(start);
  for (auto& v : start) {
    v /= sn;
  }

  for (std::size_t e = 0; e < n; ++e) {
    const cplx lam = out.values[e];
    // conjugate-pair shortcut for real input
    if constexpr (!is_complex_v<S>) {
      if (lam.imag() < 0.0 && e > 0 && out.values[e - 1] == std::conj(lam)) {
        for (std::size_t i = 0; i < n; ++i) {
          out.vectors(i, e) = std::conj(out.vectors(i, e - 1));
        }
        continue;
      }
    }
    double delta = 1e-12 * std::max(std::abs(lam), scale);
    std::vector<cplx> x;
    for (int attempt = 0; attempt < 6; ++attempt) {
      DenseMatrix<cplx> shifted = ac;
      for (std::size_t i = 0; i < n; ++i) {
        shifted(i, i) -= lam + cplx(delta, delta);
      }
      try {
        LuFactors<cplx> lu(std::move(shifted), 1e-18);
        x = start;
        for (int it = 0; it < 3; ++it) {
          x = lu.solve(x);
          const double nx = nrm2(x);
          if (!(nx > 0.0) || !std::isfinite(nx)) {
            throw SingularMatrixError("inverse iteration produced a non-finite vector");
          }
          for (auto& v : x) {
            v /= nx;
          }
        }
        break;
      } catch (const SingularMatrixError&) {
        delta *= 100.0;
        x.clear();
      }
    }
    if (x.empty()) {
      throw SolverError("dense_eigen: inverse iteration failed to produce an eigenvector");
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors(i, e) = x[i];
    }
  }
  return out;
}

struct HermitianEigenResult {
  std::vector<double> values; // ascending
  DenseMatrix<cplx> vectors;  // columns aligned with values
};

/// Two-sided Jacobi eigensolver for Hermitian matrices (values and vectors).
template <typename S>
HermitianEigenResult hermitian_eigen(const DenseMatrix<S>& a_in) {
  const std::size_t n = a_in.rows();
  if (n != a_in.cols()) {
    throw InvalidArgumentError("hermitian_eigen: matrix must be square");
  }
  DenseMatrix<cplx> a = [&] {
    if constexpr (is_complex_v<S>) {
      return a_in;
    } else {
      return detail::complexify(a_in);
    }
  }();
  DenseMatrix<cplx> v = DenseMatrix<cplx>::identity(n);

  const double tol = 1e-15;
  double off_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    off_scale = std::max(off_scale, std::abs(a(i, i)));
  }
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (apq <= tol * (std::abs(app) + std::abs(aqq) + off_scale * 1e-2)) {
          continue;
        }
        converged = false;
        // phase so the pivot entry becomes real, then a real rotation
        const cplx phase = a(p, q) / apq;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx sp = s * phase;
        // A <- R^H A R with R = [[c, sp], [-conj(sp), c]] on columns p,q
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - std::conj(sp) * aiq;
          a(i, q) = sp * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj - sp * aqj;
          a(q, j) = std::conj(sp) * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = c * vip - std::conj(sp) * viq;
          v(i, q) = sp * vip + c * viq;
        }
        a(p, q) = cplx(0.0, 0.0);
        a(q, p) = cplx(0.0, 0.0);
      }
    }
    if (converged) {
      break;
    }
  }

  HermitianEigenResult out;
  out.values.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  out.vectors = DenseMatrix<cplx>(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors(i, j) = v(i, order[j]);
    }
  }
  return out;
}

} // namespace polyinv
