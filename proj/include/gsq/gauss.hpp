#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace gsq {

using Integer = mpz_class;
using Rational = mpq_class;

struct IsqrtResult {
  Integer root;
  bool exact = false;
};

/// floor(sqrt(n)) together with whether n is a perfect square.
/// Throws Errc::InvalidArgument for n < 0.
IsqrtResult isqrt(const Integer& n);

/// Element of Z[i]. Plain value type, exact, no overflow.
struct GaussInt {
  Integer re;
  Integer im;

  GaussInt() = default;
  GaussInt(long r, long i = 0) : re(r), im(i) {}
  GaussInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussInt(Integer r) : re(std::move(r)), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

  GaussInt& operator+=(const GaussInt& o);
  GaussInt& operator-=(const GaussInt& o);
  GaussInt& operator*=(const GaussInt& o);
};

GaussInt operator+(GaussInt a, const GaussInt& b);
GaussInt operator-(GaussInt a, const GaussInt& b);
GaussInt operator*(GaussInt a, const GaussInt& b);
GaussInt operator-(const GaussInt& a);

inline GaussInt mul_i(const GaussInt& z) { return {Integer(-z.im), z.re}; }
inline GaussInt conj(const GaussInt& z) { return {z.re, Integer(-z.im)}; }
inline GaussInt square(const GaussInt& z) { return z * z; }

/// re^2 + im^2.
Integer norm(const GaussInt& z);

/// Representative of {z, -z} with re > 0, or re == 0 and im >= 0.
/// Only +-1 are used: multiplying by i would negate the square.
GaussInt normalize_sign(const GaussInt& z);

/// g with g*g == z, sign-normalized, or nullopt when z is not a square in Z[i].
std::optional<GaussInt> gauss_sqrt(const GaussInt& z);

inline bool is_gauss_square(const GaussInt& z) { return gauss_sqrt(z).has_value(); }

/// Total order (norm, re, im); used for canonical forms and deterministic output.
std::strong_ordering canonical_cmp(const GaussInt& a, const GaussInt& b);
inline bool canonical_less(const GaussInt& a, const GaussInt& b) {
  return canonical_cmp(a, b) < 0;
}

/// Gaussian integer division when exact, else nullopt.
std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b);

std::complex<double> to_complex(const GaussInt& z);

/// "4-i", "3i", "-7+4i", "0".
std::string to_string(const GaussInt& z);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i"; whitespace is ignored.
GaussInt parse_gauss_int(std::string_view text);

/// Element of Q(i); both parts kept in lowest terms with positive denominators.
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() = default;
  GaussRat(long r, long i = 0) : re(r), im(i) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussRat(const GaussInt& z) : re(z.re), im(z.im) {}  // NOLINT: lossless widening

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_integral() const { return re.get_den() == 1 && im.get_den() == 1; }
  bool is_real() const { return sgn(im) == 0; }

  /// Throws Errc::InvalidArgument unless is_integral().
  GaussInt to_gauss_int() const;

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
};

GaussRat operator+(GaussRat a, const GaussRat& b);
GaussRat operator-(GaussRat a, const GaussRat& b);
GaussRat operator*(GaussRat a, const GaussRat& b);
GaussRat operator/(GaussRat a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);

inline GaussRat mul_i(const GaussRat& z) { return {Rational(-z.im), z.re}; }
inline GaussRat conj(const GaussRat& z) { return {z.re, Rational(-z.im)}; }
inline GaussRat half(const GaussRat& z) { return {Rational(z.re / 2), Rational(z.im / 2)}; }
inline GaussRat square(const GaussRat& z) { return z * z; }
Rational norm(const GaussRat& z);
GaussRat normalize_sign(const GaussRat& z);
std::complex<double> to_complex(const GaussRat& z);

/// Integral values print like GaussInt; otherwise "3/2+5/2i".
std::string to_string(const GaussRat& z);

/// Inverse of to_string for GaussRat, also accepting every GaussInt form.
GaussRat parse_gauss_rat(std::string_view text);

}  // namespace gsq
