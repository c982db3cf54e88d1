#pragma once

// Uniform vocabulary over the root scalars used by the triplet and sibling
// templates: GaussRat (exact), SurdSum (exact, several radicands) and
// std::complex<double> (floating backend).

#include <cmath>
#include <complex>
#include <type_traits>

#include "gsq/gauss.hpp"
#include "gsq/radical.hpp"

namespace gsq {

using Complex = std::complex<double>;

inline Complex mul_i(const Complex& z) { return {-z.imag(), z.real()}; }
inline Complex half(const Complex& z) { return z * 0.5; }
inline Complex to_complex(const Complex& z) { return z; }

inline bool is_zero(const GaussRat& z) { return z.is_zero(); }
inline bool is_zero(const SurdSum& z) { return z.is_zero(); }
inline bool is_zero(const RadicalValue& z) { return z.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex{}; }

/// True when the value is a Gaussian integer (no radical part, integral parts).
inline bool is_gauss_integer(const GaussRat& z) { return z.is_integral(); }
inline bool is_gauss_integer(const SurdSum& z) {
  auto q = z.as_gauss_rat();
  return q && q->is_integral();
}
inline bool is_gauss_integer(const Complex&) { return false; }

/// True when the value is a Gaussian integer that is a square in Z[i].
template <class T>
bool is_perfect_gauss_square(const T& value) {
  if constexpr (std::is_same_v<T, Complex>) {
    return false;
  } else {
    if (!is_gauss_integer(value)) return false;
    if constexpr (std::is_same_v<T, SurdSum>) {
      return is_gauss_square(value.as_gauss_rat()->to_gauss_int());
    } else {
      return is_gauss_square(value.to_gauss_int());
    }
  }
}

template <class T>
T twice(const T& x) {
  return x + x;
}

}  // namespace gsq
