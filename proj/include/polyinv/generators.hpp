#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "polyinv/errors.hpp"
#include "polyinv/prng.hpp"
#include "polyinv/scalar.hpp"
#include "polyinv/sparse_matrix.hpp"
#include "polyinv/vec.hpp"

namespace polyinv {

/// Five-point finite-difference operator for
///   -u_xx - u_yy + alpha u_x + beta u_y - gamma^2 u = f
/// on the unit square with homogeneous Dirichlet boundaries, h = 1/(grid_n+1),
/// scaled by h^2 (diagonal 4 - gamma^2 h^2, x-neighbors -1 +/- alpha h/2,
/// y-neighbors -1 +/- beta h/2), rows in lexicographic grid order.
inline SparseMatrix<double> gen_convdiff_2d(std::size_t grid_n, double alpha,
                                            double beta, double gamma) {
  if (grid_n < 2) {
    throw InvalidArgumentError("gen_convdiff_2d: grid_n must be >= 2");
  }
  const double h = 1.0 / static_cast<double>(grid_n + 1);
  const double diag = 4.0 - gamma * gamma * h * h;
  const double xm = -1.0 - alpha * h / 2.0; // coefficient of u_{i-1,j}
  const double xp = -1.0 + alpha * h / 2.0; // coefficient of u_{i+1,j}
  const double ym = -1.0 - beta * h / 2.0;
  const double yp = -1.0 + beta * h / 2.0;
  const std::size_t n = grid_n * grid_n;
  std::vector<std::tuple<std::size_t, std::size_t, double>> trips;
  trips.reserve(5 * n);
  for (std::size_t jy = 0; jy < grid_n; ++jy) {
    for (std::size_t ix = 0; ix < grid_n; ++ix) {
      const std::size_t row = jy * grid_n + ix;
      if (jy > 0) {
        trips.emplace_back(row, row - grid_n, ym);
      }
      if (ix > 0) {
        trips.emplace_back(row, row - 1, xm);
      }
      trips.emplace_back(row, row, diag);
      if (ix + 1 < grid_n) {
        trips.emplace_back(row, row + 1, xp);
      }
      if (jy + 1 < grid_n) {
        trips.emplace_back(row, row + grid_n, yp);
      }
    }
  }
  return SparseMatrix<double>::from_triplets(n, n, std::move(trips));
}

/// Tridiagonal operator for -u'' + alpha u' - gamma^2 u = f, h = 1/(n+1),
/// h^2-scaled: diagonal 2 - gamma^2 h^2, off-diagonals -1 +/- alpha h/2.
inline SparseMatrix<double> gen_convdiff_1d(std::size_t n, double alpha, double gamma) {
  if (n < 2) {
    throw InvalidArgumentError("gen_convdiff_1d: n must be >= 2");
  }
  const double h = 1.0 / static_cast<double>(n + 1);
  const double diag = 2.0 - gamma * gamma * h * h;
  const double lo = -1.0 - alpha * h / 2.0;
  const double up = -1.0 + alpha * h / 2.0;
  std::vector<std::tuple<std::size_t, std::size_t, double>> trips;
  trips.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      trips.emplace_back(i, i - 1, lo);
    }
    trips.emplace_back(i, i, diag);
    if (i + 1 < n) {
      trips.emplace_back(i, i + 1, up);
    }
  }
  return SparseMatrix<double>::from_triplets(n, n, std::move(trips));
}

/// Order-2500 upper bidiagonal test matrices with superdiagonal 0.2 and
/// increasingly outlying eigenvalues on the diagonal (cases 1..4).
inline SparseMatrix<double> gen_bidiag_example11(int matrix_case) {
  const std::size_t n = 2500;
  std::vector<double> diag;
  diag.reserve(n);
  auto push_tenths = [&] {
    for (int i = 1; i <= 9; ++i) {
      diag.push_back(0.1 * i);
    }
  };
  switch (matrix_case) {
    case 1:
      for (std::size_t i = 1; i <= n; ++i) {
        diag.push_back(static_cast<double>(i));
      }
      break;
    case 2:
      push_tenths();
      for (int i = 1; i <= 2491; ++i) {
        diag.push_back(static_cast<double>(i));
      }
      break;
    case 3:
      push_tenths();
      for (int i = 1; i <= 2490; ++i) {
        diag.push_back(static_cast<double>(i));
      }
      diag.push_back(2600.0);
      break;
    case 4:
      push_tenths();
      for (int i = 1; i <= 2486; ++i) {
        diag.push_back(static_cast<double>(i));
      }
      for (int i = 0; i < 5; ++i) {
        diag.push_back(2600.0 + 100.0 * i);
      }
      break;
    default:
      throw InvalidArgumentError("gen_bidiag_example11: case must be in 1..4");
  }
  if (diag.size() != n) {
    throw Error("gen_bidiag_example11: internal diagonal length mismatch");
  }
  std::vector<std::tuple<std::size_t, std::size_t, double>> trips;
  trips.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    trips.emplace_back(i, i, diag[i]);
    if (i + 1 < n) {
      trips.emplace_back(i, i + 1, 0.2);
    }
  }
  return SparseMatrix<double>::from_triplets(n, n, std::move(trips));
}

/// Diagonal matrix with four large gaps in the spectrum:
/// 0.1..1 (step 0.1), 2..50, 551..1000, 1501..2000, 2501..3000, 3501..4491.
/// The list elisions are unit steps; the resulting order is 2500.
inline SparseMatrix<double> gen_gap_diag() {
  std::vector<double> d;
  d.reserve(2500);
  for (int i = 1; i <= 10; ++i) {
    d.push_back(0.1 * i);
  }
  for (int i = 2; i <= 50; ++i) {
    d.push_back(static_cast<double>(i));
  }
  for (int i = 551; i <= 1000; ++i) {
    d.push_back(static_cast<double>(i));
  }
  for (int i = 1501; i <= 2000; ++i) {
    d.push_back(static_cast<double>(i));
  }
  for (int i = 2501; i <= 3000; ++i) {
    d.push_back(static_cast<double>(i));
  }
  for (int i = 3501; i <= 4491; ++i) {
    d.push_back(static_cast<double>(i));
  }
  if (d.size() != 2500) {
    throw Error("gen_gap_diag: entry count must be 2500");
  }
  return SparseMatrix<double>::diagonal(d);
}

/// Positive definite diagonal matrix of order 2501 with conditioning driven
/// by the exponent p: diag(1^p, ..., 1251^p, 2*1251^p - 1250^p, ...,
/// 2*1251^p - 1^p), scaled by (1250.5)^(p-1).
inline SparseMatrix<double> gen_powerlaw_diag(double p) {
  if (p < 0.0) {
    throw InvalidArgumentError("gen_powerlaw_diag: p must be >= 0");
  }
  const std::size_t n = 2501;
  std::vector<double> d;
  d.reserve(n);
  const double top = std::pow(1251.0, p);
  for (int k = 1; k <= 1251; ++k) {
    d.push_back(std::pow(static_cast<double>(k), p));
  }
  for (int k = 1250; k >= 1; --k) {
    d.push_back(2.0 * top - std::pow(static_cast<double>(k), p));
  }
  const double scale = std::pow(1250.5, p - 1.0);
  for (double& v : d) {
    v /= scale;
  }
  return SparseMatrix<double>::diagonal(d);
}

/// Diagonal matrix with 50 equally spaced eigenvalues on [0.1, 1] plus one
/// outlier at 2 (order 51).
inline SparseMatrix<double> gen_outlier_demo() {
  std::vector<double> d;
  d.reserve(51);
  for (int i = 0; i < 50; ++i) {
    d.push_back(0.1 + 0.9 * static_cast<double>(i) / 49.0);
  }
  d.push_back(2.0);
  return SparseMatrix<double>::diagonal(d);
}

/// Circulant shift permutation: ones on the superdiagonal and in the
/// bottom-left corner.
inline SparseMatrix<double> gen_circulant_shift(std::size_t n) {
  if (n < 2) {
    throw InvalidArgumentError("gen_circulant_shift: n must be >= 2");
  }
  std::vector<std::tuple<std::size_t, std::size_t, double>> trips;
  trips.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    trips.emplace_back(i, i + 1, 1.0);
  }
  trips.emplace_back(n - 1, 0, 1.0);
  return SparseMatrix<double>::from_triplets(n, n, std::move(trips));
}

enum class RhsKind { normal_unit, four_phase };

struct RhsSpec {
  RhsKind kind = RhsKind::normal_unit;
  std::uint64_t seed = 1;
  std::size_t count = 1;
};

/// Deterministic right-hand-side family. normal_unit: Box-Muller normal
/// entries scaled to unit 2-norm. four_phase: entries from {+-1, +-i}
/// (complex scalars only).
template <typename S>
std::vector<std::vector<S>> gen_rhs(std::size_t n, const RhsSpec& spec) {
  if (spec.count < 1) {
    throw InvalidArgumentError("gen_rhs: count must be >= 1");
  }
  Prng rng(spec.seed);
  std::vector<std::vector<S>> out;
  out.reserve(spec.count);
  for (std::size_t c = 0; c < spec.count; ++c) {
    std::vector<S> b(n);
    switch (spec.kind) {
      case RhsKind::normal_unit: {
        for (std::size_t i = 0; i < n; ++i) {
          if constexpr (is_complex_v<S>) {
            b[i] = S(rng.normal(), rng.normal());
          } else {
            b[i] = static_cast<S>(rng.normal());
          }
        }
        const real_t<S> nb = nrm2(b);
        for (auto& v : b) {
          v /= static_cast<S>(nb);
        }
        break;
      }
      case RhsKind::four_phase: {
        if constexpr (!is_complex_v<S>) {
          throw InvalidArgumentError("gen_rhs: four_phase requires complex scalars");
        } else {
          for (std::size_t i = 0; i < n; ++i) {
            switch (rng.next_u64() & 3u) {
              case 0: b[i] = S(1, 0); break;
              case 1: b[i] = S(-1, 0); break;
              case 2: b[i] = S(0, 1); break;
              default: b[i] = S(0, -1); break;
            }
          }
        }
        break;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

} // namespace polyinv
