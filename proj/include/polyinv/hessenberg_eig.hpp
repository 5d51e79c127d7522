#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "polyinv/dense_matrix.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"

namespace polyinv {

namespace detail {

constexpr double kQrDeflationEps = 1e-15;
constexpr int kQrMaxItersPerEig = 40;

/// Eigenvalues of a real 2x2 block, stable against cancellation. A complex
/// pair is produced as mid +/- i*sq, so the two members are bitwise
/// conjugates.
inline void eig_2x2_real(double a, double b, double c, double d,
                         cplx& lam1, cplx& lam2) {
  const double p = 0.5 * (a - d);
  const double disc = p * p + b * c;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double z = p + (p >= 0.0 ? sq : -sq);
    const double l1 = d + z;
    const double l2 = (z != 0.0) ? d - (b * c) / z : d;
    lam1 = cplx(l1, 0.0);
    lam2 = cplx(l2, 0.0);
  } else {
    const double mid = 0.5 * (a + d);
    const double sq = std::sqrt(-disc);
    lam1 = cplx(mid, sq);
    lam2 = cplx(mid, -sq);
  }
}

inline void householder_3(double& x, double& y, double& z, bool use_z,
                          double v[3], double& beta) {
  v[0] = x;
  v[1] = y;
  v[2] = use_z ? z : 0.0;
  const double scale = std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
  if (scale == 0.0) {
    beta = 0.0;
    return;
  }
  v[0] /= scale;
  v[1] /= scale;
  v[2] /= scale;
  double nrm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (v[0] < 0.0) {
    nrm = -nrm;
  }
  v[0] += nrm;
  beta = v[0] / nrm; // P = I - beta^-1 ... using normalized form below
  // normalize so that P x = -nrm*scale*e1 with P = I - tau v v^T, tau = 2/(v^T v)
  const double vtv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  beta = 2.0 / vtv;
}

} // namespace detail

/// Eigenvalues of a real upper Hessenberg matrix by the Francis
/// double-shift QR iteration. Deflation when
/// |h(j+1,j)| <= 1e-15 * (|h(j,j)| + |h(j+1,j+1)|); at most 40 iterations
/// per eigenvalue, with ad hoc exceptional shifts every 10.
/// Real 2x2 blocks with negative discriminant yield bitwise-conjugate pairs.
inline std::vector<cplx> hessenberg_eigenvalues(DenseMatrix<double> h) {
  const std::size_t n = h.rows();
  if (n != h.cols()) {
    throw InvalidArgumentError("hessenberg_eigenvalues: matrix must be square");
  }
  std::vector<cplx> eig(n);
  if (n == 0) {
    return eig;
  }
  // scrub below-subdiagonal entries
  for (std::size_t j = 0; j + 2 < n; ++j) {
    for (std::size_t i = j + 2; i < n; ++i) {
      h(i, j) = 0.0;
    }
  }

  long hi = static_cast<long>(n) - 1;
  int iter = 0;
  auto negligible = [&](long i) {
    return std::abs(h(i, i - 1)) <=
           detail::kQrDeflationEps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
  };

  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = cplx(h(0, 0), 0.0);
      --hi;
      iter = 0;
      continue;
    }
    long lo = hi;
    while (lo > 0 && !negligible(lo)) {
      --lo;
    }
    if (lo > 0) {
      h(lo, lo - 1) = 0.0;
    }
    if (lo == hi) {
      eig[hi] = cplx(h(hi, hi), 0.0);
      --hi;
      iter = 0;
      continue;
    }
    if (lo == hi - 1) {
      detail::eig_2x2_real(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi),
                           eig[lo], eig[hi]);
      hi -= 2;
      iter = 0;
      continue;
    }

    ++iter;
    if (iter > detail::kQrMaxItersPerEig) {
      throw EigenConvergenceError(
          "hessenberg_eigenvalues: QR iteration stalled at subdiagonal index " +
              std::to_string(hi),
          static_cast<std::size_t>(hi));
    }

    double s, t;
    if (iter % 10 == 0) {
      // exceptional shift (dlahqr-style)
      const double sx = std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2));
      const double h11 = 0.75 * sx + h(hi, hi);
      const double h12 = -0.4375 * sx;
      const double h21 = sx;
      const double h22 = h11;
      s = h11 + h22;
      t = h11 * h22 - h12 * h21;
    } else {
      s = h(hi - 1, hi - 1) + h(hi, hi);
      t = h(hi - 1, hi - 1) * h(hi, hi) - h(hi - 1, hi) * h(hi, hi - 1);
    }

    // first column of (H - aI)(H - bI) e1 on the active block
    double x = h(lo, lo) * h(lo, lo) + h(lo, lo + 1) * h(lo + 1, lo) - s * h(lo, lo) + t;
    double y = h(lo + 1, lo) * (h(lo, lo) + h(lo + 1, lo + 1) - s);
    double z = h(lo + 1, lo) * h(lo + 2, lo + 1);

    for (long k = lo; k <= hi - 2; ++k) {
      double v[3];
      double beta;
      detail::householder_3(x, y, z, true, v, beta);
      if (beta != 0.0) {
        const long q = std::max(lo, k - 1);
        for (long j = q; j <= hi; ++j) {
          double dotv = v[0] * h(k, j) + v[1] * h(k + 1, j) + v[2] * h(k + 2, j);
          dotv *= beta;
          h(k, j) -= v[0] * dotv;
          h(k + 1, j) -= v[1] * dotv;
          h(k + 2, j) -= v[2] * dotv;
        }
        const long r = std::min(k + 3, hi);
        for (long i = lo; i <= r; ++i) {
          double dotv = v[0] * h(i, k) + v[1] * h(i, k + 1) + v[2] * h(i, k + 2);
          dotv *= beta;
          h(i, k) -= v[0] * dotv;
          h(i, k + 1) -= v[1] * dotv;
          h(i, k + 2) -= v[2] * dotv;
        }
      }
      if (k > lo) {
        h(k + 1, k - 1) = 0.0;
        h(k + 2, k - 1) = 0.0;
      }
      x = h(k + 1, k);
      y = h(k + 2, k);
      if (k < hi - 2) {
        z = h(k + 3, k);
      }
    }
    // final Givens on rows hi-1, hi zeroing h(hi, hi-2)
    {
      const double r = std::hypot(x, y);
      if (r > 0.0) {
        const double c = x / r;
        const double sn = y / r;
        for (long j = hi - 2; j <= hi; ++j) {
          const double a = h(hi - 1, j);
          const double b = h(hi, j);
          h(hi - 1, j) = c * a + sn * b;
          h(hi, j) = -sn * a + c * b;
        }
        for (long i = lo; i <= hi; ++i) {
          const double a = h(i, hi - 1);
          const double b = h(i, hi);
          h(i, hi - 1) = c * a + sn * b;
          h(i, hi) = -sn * a + c * b;
        }
      }
      h(hi, hi - 2) = 0.0;
      if (hi - 2 > lo) {
        h(hi - 1, hi - 3) = 0.0;
      }
    }
  }
  return eig;
}

namespace detail {

/// Givens zeroing g against f in complex arithmetic: returns (c real, s)
/// such that [c s; -conj(s) c] [f; g] = [r; 0].
inline void cgivens(const cplx& f, const cplx& g, double& c, cplx& s) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  const double r = std::hypot(af, ag);
  if (r == 0.0) {
    c = 1.0;
    s = cplx(0.0, 0.0);
    return;
  }
  if (af == 0.0) {
    c = 0.0;
    s = std::conj(g) / ag;
    return;
  }
  c = af / r;
  s = (f / af) * std::conj(g) / r;
}

} // namespace detail

/// Eigenvalues of a complex upper Hessenberg matrix by single-shift QR with
/// the Wilkinson shift.
inline std::vector<cplx> hessenberg_eigenvalues(DenseMatrix<cplx> h) {
  const std::size_t n = h.rows();
  if (n != h.cols()) {
    throw InvalidArgumentError("hessenberg_eigenvalues: matrix must be square");
  }
  std::vector<cplx> eig(n);
  if (n == 0) {
    return eig;
  }
  for (std::size_t j = 0; j + 2 < n; ++j) {
    for (std::size_t i = j + 2; i < n; ++i) {
      h(i, j) = cplx(0.0, 0.0);
    }
  }

  auto block_2x2 = [&](long i, cplx& l1, cplx& l2) {
    const cplx a = h(i, i), b = h(i, i + 1), c = h(i + 1, i), d = h(i + 1, i + 1);
    const cplx mid = 0.5 * (a + d);
    const cplx p = 0.5 * (a - d);
    const cplx sq = std::sqrt(p * p + b * c);
    l1 = mid + sq;
    l2 = mid - sq;
  };

  long hi = static_cast<long>(n) - 1;
  int iter = 0;
  auto negligible = [&](long i) {
    return std::abs(h(i, i - 1)) <=
           detail::kQrDeflationEps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
  };

  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      --hi;
      iter = 0;
      continue;
    }
    long lo = hi;
    while (lo > 0 && !negligible(lo)) {
      --lo;
    }
    if (lo > 0) {
      h(lo, lo - 1) = cplx(0.0, 0.0);
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (lo == hi - 1) {
      block_2x2(lo, eig[lo], eig[hi]);
      hi -= 2;
      iter = 0;
      continue;
    }

    ++iter;
    if (iter > detail::kQrMaxItersPerEig) {
      throw EigenConvergenceError(
          "hessenberg_eigenvalues: QR iteration stalled at subdiagonal index " +
              std::to_string(hi),
          static_cast<std::size_t>(hi));
    }

    cplx mu;
    if (iter % 10 == 0) {
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      // Wilkinson shift: trailing 2x2 eigenvalue closest to h(hi,hi)
      const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const cplx mid = 0.5 * (a + d);
      const cplx p = 0.5 * (a - d);
      const cplx sq = std::sqrt(p * p + b * c);
      const cplx m1 = mid + sq;
      const cplx m2 = mid - sq;
      mu = (std::abs(m1 - d) < std::abs(m2 - d)) ? m1 : m2;
    }

    cplx x = h(lo, lo) - mu;
    cplx z = h(lo + 1, lo);
    for (long k = lo; k <= hi - 1; ++k) {
      double c;
      cplx s;
      detail::cgivens(x, z, c, s);
      const long q = std::max(lo, k - 1);
      for (long j = q; j <= hi; ++j) {
        const cplx a = h(k, j);
        const cplx b = h(k + 1, j);
        h(k, j) = c * a + s * b;
        h(k + 1, j) = -std::conj(s) * a + c * b;
      }
      const long r = std::min(k + 2, hi);
      for (long i = lo; i <= r; ++i) {
        const cplx a = h(i, k);
        const cplx b = h(i, k + 1);
        h(i, k) = c * a + std::conj(s) * b;
        h(i, k + 1) = -s * a + c * b;
      }
      if (k > lo) {
        h(k + 1, k - 1) = cplx(0.0, 0.0);
      }
      if (k < hi - 1) {
        x = h(k + 1, k);
        z = h(k + 2, k);
      }
    }
  }
  return eig;
}

} // namespace polyinv
