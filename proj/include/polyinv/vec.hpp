#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"

namespace polyinv {

/// Inner product, conjugate-linear in the first argument.
template <typename S>
S dot(const std::vector<S>& x, const std::vector<S>& y) {
  if (x.size() != y.size()) {
    throw InvalidArgumentError("dot: dimension mismatch");
  }
  S acc{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += conjugate(x[i]) * y[i];
  }
  return acc;
}

/// 2-norm with dnrm2-style scaling so huge components do not overflow the
/// squared accumulator (unstable polynomials produce residuals ~1e200).
template <typename S>
real_t<S> nrm2(const std::vector<S>& x) {
  using R = real_t<S>;
  R scale{0};
  R ssq{1};
  for (const S& v : x) {
    const R a = abs_val(v);
    if (a == R{0}) {
      continue;
    }
    if (scale < a) {
      ssq = R{1} + ssq * (scale / a) * (scale / a);
      scale = a;
    } else {
      ssq += (a / scale) * (a / scale);
    }
  }
  return scale * std::sqrt(ssq);
}

template <typename S>
void axpy(S alpha, const std::vector<S>& x, std::vector<S>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] += alpha * x[i];
  }
}

template <typename S>
void scal(S alpha, std::vector<S>& x) {
  for (S& v : x) {
    v *= alpha;
  }
}

template <typename S>
std::vector<S> scaled(const std::vector<S>& x, S alpha) {
  std::vector<S> y = x;
  scal(alpha, y);
  return y;
}

template <typename S>
std::vector<S> vsub(const std::vector<S>& x, const std::vector<S>& y) {
  std::vector<S> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] -= y[i];
  }
  return z;
}

template <typename S>
std::vector<S> vadd(const std::vector<S>& x, const std::vector<S>& y) {
  std::vector<S> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] += y[i];
  }
  return z;
}

} // namespace polyinv
