#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "gsq/gauss.hpp"

namespace gsq {

/// n = square * squarefree with squarefree >= 1 (n > 0). Trial division up to
/// the cube root, then a perfect-square test on the cofactor.
struct SquarefreeSplit {
  Integer square_root;  // s with s^2 the largest square dividing n
  Integer squarefree;
};
SquarefreeSplit squarefree_split(const Integer& n);

/// a + b*sqrt(n) with a, b in Q(i) and n a squarefree nonnegative integer.
/// b == 0 forces n == 1; zero iff a == 0 and b == 0.
class RadicalValue {
 public:
  RadicalValue() : n_(1) {}
  RadicalValue(GaussRat a) : a_(std::move(a)), n_(1) {}  // NOLINT: embedding
  RadicalValue(const GaussInt& a) : a_(a), n_(1) {}      // NOLINT: embedding
  RadicalValue(long a) : a_(a), n_(1) {}                 // NOLINT: embedding

  /// Reduces n to its squarefree part and folds n == 1 into a.
  /// Throws Errc::InvalidArgument for negative n.
  RadicalValue(GaussRat a, GaussRat b, const Integer& n);

  /// Principal root of a nonnegative integer v.
  static RadicalValue sqrt_of(const Integer& v);

  const GaussRat& a() const { return a_; }
  const GaussRat& b() const { return b_; }
  const Integer& radicand() const { return n_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  friend bool operator==(const RadicalValue& x, const RadicalValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_;
  }
  friend bool operator!=(const RadicalValue& x, const RadicalValue& y) { return !(x == y); }

  friend RadicalValue operator+(const RadicalValue& x, const RadicalValue& y);
  friend RadicalValue operator-(const RadicalValue& x, const RadicalValue& y);
  friend RadicalValue operator*(const RadicalValue& x, const RadicalValue& y);
  friend RadicalValue operator-(const RadicalValue& x);

 private:
  GaussRat a_;
  GaussRat b_;
  Integer n_;
};

/// Exact product; throws Errc::MixedRadicals when both operands carry
/// distinct nontrivial radicands.
RadicalValue radical_mul(const RadicalValue& x, const RadicalValue& y);

RadicalValue mul_i(const RadicalValue& x);
RadicalValue half(const RadicalValue& x);
std::complex<double> to_complex(const RadicalValue& x);
std::string to_string(const RadicalValue& x);

/// Finite sum  sum_k c_k * sqrt(n_k)  over distinct squarefree radicands n_k,
/// c_k in Q(i). Closed under +, -, *, so it is the exact backend for lines
/// that mix two different radicands. Radicand 1 holds the rational part.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const GaussRat& q);             // NOLINT: embedding
  SurdSum(const GaussInt& z);             // NOLINT: embedding
  SurdSum(long v) : SurdSum(GaussRat(v)) {}  // NOLINT: embedding
  SurdSum(const RadicalValue& r);         // NOLINT: embedding

  const std::map<Integer, GaussRat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  /// Rational part when no radical term remains.
  std::optional<GaussRat> as_gauss_rat() const;
  /// Single-radicand view when at most one radicand > 1 remains.
  std::optional<RadicalValue> as_radical() const;

  friend bool operator==(const SurdSum& x, const SurdSum& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const SurdSum& x, const SurdSum& y) { return !(x == y); }

  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  friend SurdSum operator+(SurdSum x, const SurdSum& y) { return x += y; }
  friend SurdSum operator-(SurdSum x, const SurdSum& y) { return x -= y; }
  friend SurdSum operator*(const SurdSum& x, const SurdSum& y);
  friend SurdSum operator-(const SurdSum& x);

  /// Coefficient-wise map, used for mul_i / half / conj.
  template <class F>
  SurdSum map_coefficients(F&& f) const {
    SurdSum out;
    for (const auto& [n, c] : terms_) out.add_term(n, f(c));
    return out;
  }

 private:
  void add_term(const Integer& n, const GaussRat& c);
  std::map<Integer, GaussRat> terms_;
};

SurdSum mul_i(const SurdSum& x);
SurdSum half(const SurdSum& x);
std::complex<double> to_complex(const SurdSum& x);
std::string to_string(const SurdSum& x);

}  // namespace gsq
