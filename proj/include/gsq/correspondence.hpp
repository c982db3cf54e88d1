#pragma once

#include <array>
#include <string>
#include <utility>

#include "gsq/gauss.hpp"
#include "gsq/scalar.hpp"

namespace gsq {

/// (A, B, C) with A^2 + B^2 = C^2.
struct LegTriple {
  GaussInt a;
  GaussInt b;
  GaussInt c;

  bool is_pythagorean() const { return a * a + b * b == c * c; }
  friend bool operator==(const LegTriple&, const LegTriple&) = default;
};

/// alpha^2 + beta^2 + gamma^2 = 0, all components nonzero and sign-normalized.
class ZeroSumTriple {
 public:
  /// Validates the zero-sum identity and normalizes signs.
  /// Throws Errc::TrivialTriple on a zero component, Errc::InvalidArgument
  /// when the squares do not cancel.
  ZeroSumTriple(const GaussInt& alpha, const GaussInt& beta, const GaussInt& gamma);

  const std::array<GaussInt, 3>& components() const { return c_; }
  const GaussInt& operator[](std::size_t k) const { return c_[k]; }

  friend bool operator==(const ZeroSumTriple&, const ZeroSumTriple&) = default;

 private:
  std::array<GaussInt, 3> c_;
};

/// Class key: components sorted by (norm, re, im). With `fold_conjugates`
/// the smaller of the key and the key of the componentwise conjugate is used.
std::array<GaussInt, 3> class_key(const ZeroSumTriple& t, bool fold_conjugates = true);

/// Equal up to component order and signs (and conjugation when asked).
bool same_class(const ZeroSumTriple& x, const ZeroSumTriple& y, bool fold_conjugates = true);

/// Three roots whose squares are meant to be in arithmetic progression.
/// The progression terms are the squares; defect = left^2 + right^2 - 2 center^2.
template <class Root>
struct Triplet {
  Root left;
  Root center;
  Root right;

  std::array<Root, 3> values() const {
    return {left * left, center * center, right * right};
  }
  Root defect() const { return left * left + right * right - twice(center * center); }
  bool is_arithmetic() const { return is_zero(defect()); }
  bool is_integral() const {
    return is_gauss_integer(left) && is_gauss_integer(center) && is_gauss_integer(right);
  }

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

using ArithTriplet = Triplet<GaussRat>;

/// Same center up to sign and same endpoint pair up to sign and order.
/// With `fold_conjugates`, the componentwise conjugate also matches.
bool same_triplet(const ArithTriplet& x, const ArithTriplet& y, bool fold_conjugates = true);

/// Integer fold: (A, B, C) -> roots (|A-B|, |C|, |A+B|), defect 0.
/// Throws Errc::NotPythagorean unless A, B, C are rational integers with A^2+B^2=C^2.
ArithTriplet pyth_to_triplet_int(const LegTriple& t);

/// Integer unfold of the progression values (L^2, C^2, R^2) -> (|L+R|/2, |L-R|/2, C).
/// Throws Errc::NotArithmetic when L^2 + R^2 != 2 C^2, Errc::NotSquare when a
/// value has no integer root.
LegTriple triplet_to_pyth_int(const Integer& left_sq, const Integer& center_sq,
                              const Integer& right_sq);

/// (A, B, C) -> sign-normalized (C, iA, iB).
ZeroSumTriple to_zero_sum(const LegTriple& t);

/// Each component in turn as hypotenuse h, with p, q the remaining two in
/// (alpha, beta, gamma) order: roots (i(p-q), h, i(p+q)), sign-normalized.
std::array<ArithTriplet, 3> triplets_from_triple(const ZeroSumTriple& z);

/// Inverse of one leg of the 3-to-1 map: (center, i(L+R)/2, i(L-R)/2).
/// Throws Errc::NotArithmetic for defect != 0, Errc::GaussianParity when the
/// halves are not Gaussian integers, Errc::InvalidArgument for non-integral roots.
ZeroSumTriple triplet_to_triple(const ArithTriplet& t);

/// Same map without the integrality requirement on the halves; the result
/// still satisfies the zero-sum identity over Q(i).
std::array<GaussRat, 3> triplet_to_rational_triple(const ArithTriplet& t);

template <class Root>
struct SiblingPair {
  Triplet<Root> older;    // half-sum at the center
  Triplet<Root> younger;  // half-difference at the center
  bool integral_halves = false;
};

/// Older sibling (Z + i(X-Y)/2, (X+Y)/2, Z - i(X-Y)/2) and younger sibling
/// (Z + i(X+Y)/2, (X-Y)/2, Z - i(X+Y)/2) of the line (X, Z, Y). Both carry
/// defect -(X^2 + Y^2 - 2 Z^2) whatever the input.
template <class Root>
SiblingPair<Root> siblings_of_triplet(const Root& x, const Root& z, const Root& y) {
  Root half_sum = half(x + y);
  Root half_diff = half(x - y);
  Root i_half_diff = mul_i(half_diff);
  Root i_half_sum = mul_i(half_sum);
  SiblingPair<Root> out{
      {z + i_half_diff, half_sum, z - i_half_diff},
      {z + i_half_sum, half_diff, z - i_half_sum},
      false,
  };
  out.integral_halves = is_gauss_integer(half_sum) && is_gauss_integer(half_diff);
  return out;
}

template <class Root>
SiblingPair<Root> siblings_of_triplet(const Triplet<Root>& line) {
  return siblings_of_triplet(line.left, line.center, line.right);
}

std::string to_string(const LegTriple& t);
std::string to_string(const ZeroSumTriple& t);
std::string to_string(const ArithTriplet& t);

}  // namespace gsq
