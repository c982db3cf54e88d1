#include "gsq/correspondence.hpp"

#include <algorithm>

#include "gsq/error.hpp"

namespace gsq {

ZeroSumTriple::ZeroSumTriple(const GaussInt& alpha, const GaussInt& beta,
                             const GaussInt& gamma)
    : c_{normalize_sign(alpha), normalize_sign(beta), normalize_sign(gamma)} {
  for (const auto& z : c_)
    if (z.is_zero()) throw Error(Errc::TrivialTriple, "zero component in " + to_string(*this));
  if (!(alpha * alpha + beta * beta + gamma * gamma).is_zero())
    throw Error(Errc::InvalidArgument, "squares do not cancel in " + to_string(*this));
}

std::array<GaussInt, 3> class_key(const ZeroSumTriple& t, bool fold_conjugates) {
  auto sorted = [](std::array<GaussInt, 3> a) {
    std::sort(a.begin(), a.end(), canonical_less);
    return a;
  };
  auto key = sorted(t.components());
  if (!fold_conjugates) return key;
  std::array<GaussInt, 3> conjugated;
  for (std::size_t k = 0; k < 3; ++k) conjugated[k] = normalize_sign(conj(t[k]));
  auto other = sorted(conjugated);
  return std::lexicographical_compare(other.begin(), other.end(), key.begin(), key.end(),
                                      canonical_less)
             ? other
             : key;
}

bool same_class(const ZeroSumTriple& x, const ZeroSumTriple& y, bool fold_conjugates) {
  return class_key(x, fold_conjugates) == class_key(y, fold_conjugates);
}

namespace {

bool same_up_to_sign(const GaussRat& a, const GaussRat& b) {
  return normalize_sign(a) == normalize_sign(b);
}

bool same_triplet_exact(const ArithTriplet& x, const ArithTriplet& y) {
  if (!same_up_to_sign(x.center, y.center)) return false;
  return (same_up_to_sign(x.left, y.left) && same_up_to_sign(x.right, y.right)) ||
         (same_up_to_sign(x.left, y.right) && same_up_to_sign(x.right, y.left));
}

bool is_rational_integer(const GaussInt& z) { return z.is_real(); }

}  // namespace

bool same_triplet(const ArithTriplet& x, const ArithTriplet& y, bool fold_conjugates) {
  if (same_triplet_exact(x, y)) return true;
  if (!fold_conjugates) return false;
  ArithTriplet c{conj(y.left), conj(y.center), conj(y.right)};
  return same_triplet_exact(x, c);
}

ArithTriplet pyth_to_triplet_int(const LegTriple& t) {
  if (!is_rational_integer(t.a) || !is_rational_integer(t.b) || !is_rational_integer(t.c))
    throw Error(Errc::NotPythagorean, to_string(t) + " is not over the integers");
  if (!t.is_pythagorean()) throw Error(Errc::NotPythagorean, to_string(t));
  Integer low = abs(t.a.re - t.b.re);
  Integer high = abs(t.a.re + t.b.re);
  return {GaussInt(low), GaussInt(Integer(abs(t.c.re))), GaussInt(high)};
}

LegTriple triplet_to_pyth_int(const Integer& left_sq, const Integer& center_sq,
                              const Integer& right_sq) {
  if (left_sq + right_sq != 2 * center_sq)
    throw Error(Errc::NotArithmetic, left_sq.get_str() + " + " + right_sq.get_str() +
                                         " != 2*" + center_sq.get_str());
  auto root = [](const Integer& v) {
    if (sgn(v) < 0) throw Error(Errc::NotSquare, v.get_str());
    auto r = isqrt(v);
    if (!r.exact) throw Error(Errc::NotSquare, v.get_str());
    return r.root;
  };
  Integer l = root(left_sq), c = root(center_sq), r = root(right_sq);
  // L^2 + R^2 = 2C^2 makes L and R share parity, so both halves are integers.
  Integer a = abs(l + r) / 2;
  Integer b = abs(l - r) / 2;
  return {GaussInt(a), GaussInt(b), GaussInt(c)};
}

ZeroSumTriple to_zero_sum(const LegTriple& t) {
  if (!t.is_pythagorean()) throw Error(Errc::NotPythagorean, to_string(t));
  return ZeroSumTriple(t.c, mul_i(t.a), mul_i(t.b));
}

std::array<ArithTriplet, 3> triplets_from_triple(const ZeroSumTriple& z) {
  static constexpr std::array<std::array<int, 3>, 3> order{{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};
  std::array<ArithTriplet, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    const GaussInt& h = z[order[k][0]];
    const GaussInt& p = z[order[k][1]];
    const GaussInt& q = z[order[k][2]];
    out[k] = {normalize_sign(mul_i(p - q)), h, normalize_sign(mul_i(p + q))};
  }
  return out;
}

std::array<GaussRat, 3> triplet_to_rational_triple(const ArithTriplet& t) {
  if (!t.is_arithmetic())
    throw Error(Errc::NotArithmetic, "defect " + to_string(t.defect()) + " in " + to_string(t));
  return {normalize_sign(t.center), normalize_sign(mul_i(half(t.left + t.right))),
          normalize_sign(mul_i(half(t.left - t.right)))};
}

ZeroSumTriple triplet_to_triple(const ArithTriplet& t) {
  if (!t.is_integral()) throw Error(Errc::InvalidArgument, "non-integral roots " + to_string(t));
  auto q = triplet_to_rational_triple(t);
  for (const auto& c : q)
    if (!c.is_integral())
      throw Error(Errc::GaussianParity, "(L+-R)/2 not in Z[i] for " + to_string(t));
  return ZeroSumTriple(q[0].to_gauss_int(), q[1].to_gauss_int(), q[2].to_gauss_int());
}

std::string to_string(const LegTriple& t) {
  return "(" + to_string(t.a) + ", " + to_string(t.b) + ", " + to_string(t.c) + ")";
}

std::string to_string(const ZeroSumTriple& t) {
  return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

std::string to_string(const ArithTriplet& t) {
  return "(" + to_string(t.left) + ", " + to_string(t.center) + ", " + to_string(t.right) + ")";
}

}  // namespace gsq
