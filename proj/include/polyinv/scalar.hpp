#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace polyinv {

using cplx = std::complex<double>;

template <typename S>
struct scalar_traits {
  static_assert(std::is_floating_point_v<S>, "scalar must be real or complex floating point");
  using real_type = S;
  static constexpr bool is_complex = false;
};

template <typename R>
struct scalar_traits<std::complex<R>> {
  using real_type = R;
  static constexpr bool is_complex = true;
};

template <typename S>
using real_t = typename scalar_traits<S>::real_type;

template <typename S>
inline constexpr bool is_complex_v = scalar_traits<S>::is_complex;

/// Complex conjugate; identity on real scalars.
template <typename S>
inline S conjugate(const S& x) {
  if constexpr (is_complex_v<S>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <typename S>
inline real_t<S> abs_val(const S& x) {
  return std::abs(x);
}

template <typename S>
inline real_t<S> real_part(const S& x) {
  if constexpr (is_complex_v<S>) {
    return x.real();
  } else {
    return x;
  }
}

template <typename S>
inline real_t<S> imag_part(const S& x) {
  if constexpr (is_complex_v<S>) {
    return x.imag();
  } else {
    return real_t<S>{0};
  }
}

/// Narrow a complex value onto scalar type S. For real S the imaginary part
/// is dropped (callers must guarantee it is negligible).
template <typename S>
inline S narrow_to(const cplx& z) {
  if constexpr (is_complex_v<S>) {
    return S(z);
  } else {
    return S(z.real());
  }
}

template <typename S>
inline bool is_finite(const S& x) {
  if constexpr (is_complex_v<S>) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  } else {
    return std::isfinite(x);
  }
}

} // namespace polyinv
