#include "gsq/radical.hpp"

#include <cmath>

#include "gsq/error.hpp"

namespace gsq {

SquarefreeSplit squarefree_split(const Integer& n) {
  if (sgn(n) <= 0) throw Error(Errc::InvalidArgument, "squarefree_split of " + n.get_str());
  SquarefreeSplit out{1, 1};
  Integer rest = n;
  Integer cube_bound;
  mpz_root(cube_bound.get_mpz_t(), n.get_mpz_t(), 3);
  for (Integer p = 2; p <= cube_bound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned mult = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++mult;
    }
    for (unsigned k = 0; k + 1 < mult; k += 2) out.square_root *= p;
    if (mult % 2 == 1) out.squarefree *= p;
  }
  // What is left has no prime factor <= cbrt(n): it is 1, p, p*q or p^2.
  auto r = isqrt(rest);
  if (r.exact) {
    out.square_root *= r.root;
  } else {
    out.squarefree *= rest;
  }
  return out;
}

RadicalValue::RadicalValue(GaussRat a, GaussRat b, const Integer& n)
    : a_(std::move(a)), b_(std::move(b)), n_(n) {
  if (sgn(n_) < 0) throw Error(Errc::InvalidArgument, "negative radicand " + n_.get_str());
  if (sgn(n_) == 0) b_ = GaussRat();
  if (b_.is_zero()) {
    n_ = 1;
    return;
  }
  auto split = squarefree_split(n_);
  b_ *= GaussRat(GaussInt(split.square_root));
  n_ = split.squarefree;
  if (n_ == 1) {
    a_ += b_;
    b_ = GaussRat();
  }
}

RadicalValue RadicalValue::sqrt_of(const Integer& v) {
  if (sgn(v) < 0) throw Error(Errc::InvalidArgument, "sqrt_of negative " + v.get_str());
  return RadicalValue(GaussRat(), GaussRat(1), v);
}

namespace {

Integer shared_radicand(const RadicalValue& x, const RadicalValue& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw Error(Errc::MixedRadicals,
              "sqrt(" + x.radicand().get_str() + ") with sqrt(" + y.radicand().get_str() + ")");
}

}  // namespace

RadicalValue operator+(const RadicalValue& x, const RadicalValue& y) {
  Integer n = shared_radicand(x, y);
  return RadicalValue(x.a_ + y.a_, x.b_ + y.b_, n);
}

RadicalValue operator-(const RadicalValue& x, const RadicalValue& y) {
  Integer n = shared_radicand(x, y);
  return RadicalValue(x.a_ - y.a_, x.b_ - y.b_, n);
}

RadicalValue operator*(const RadicalValue& x, const RadicalValue& y) {
  Integer n = shared_radicand(x, y);
  GaussRat a = x.a_ * y.a_ + x.b_ * y.b_ * GaussRat(GaussInt(n));
  GaussRat b = x.a_ * y.b_ + y.a_ * x.b_;
  return RadicalValue(std::move(a), std::move(b), n);
}

RadicalValue operator-(const RadicalValue& x) { return RadicalValue(-x.a_, -x.b_, x.n_); }

RadicalValue radical_mul(const RadicalValue& x, const RadicalValue& y) { return x * y; }

RadicalValue mul_i(const RadicalValue& x) {
  return RadicalValue(mul_i(x.a()), mul_i(x.b()), x.radicand());
}

RadicalValue half(const RadicalValue& x) {
  return RadicalValue(half(x.a()), half(x.b()), x.radicand());
}

std::complex<double> to_complex(const RadicalValue& x) {
  return to_complex(x.a()) + to_complex(x.b()) * std::sqrt(x.radicand().get_d());
}

std::string to_string(const RadicalValue& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string out = x.a().is_zero() ? std::string() : "(" + to_string(x.a()) + ")+";
  return out + "(" + to_string(x.b()) + ")*sqrt(" + x.radicand().get_str() + ")";
}

SurdSum::SurdSum(const GaussRat& q) { add_term(1, q); }

SurdSum::SurdSum(const GaussInt& z) : SurdSum(GaussRat(z)) {}

SurdSum::SurdSum(const RadicalValue& r) {
  add_term(1, r.a());
  add_term(r.radicand(), r.b());
}

void SurdSum::add_term(const Integer& n, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<GaussRat> SurdSum::as_gauss_rat() const {
  if (terms_.empty()) return GaussRat();
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<RadicalValue> SurdSum::as_radical() const {
  GaussRat a, b;
  Integer n = 1;
  for (const auto& [rad, c] : terms_) {
    if (rad == 1) {
      a = c;
    } else if (n == 1) {
      n = rad;
      b = c;
    } else {
      return std::nullopt;
    }
  }
  return RadicalValue(a, b, n);
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

SurdSum operator*(const SurdSum& x, const SurdSum& y) {
  // sqrt(p)*sqrt(q) = g*sqrt((p/g)(q/g)) with g = gcd(p, q); the product of
  // two coprime squarefree numbers stays squarefree.
  SurdSum out;
  for (const auto& [p, cp] : x.terms_) {
    for (const auto& [q, cq] : y.terms_) {
      Integer g = gcd(p, q);
      Integer rad = (p / g) * (q / g);
      out.add_term(rad, cp * cq * GaussRat(GaussInt(g)));
    }
  }
  return out;
}

SurdSum operator-(const SurdSum& x) {
  return x.map_coefficients([](const GaussRat& c) { return -c; });
}

SurdSum mul_i(const SurdSum& x) {
  return x.map_coefficients([](const GaussRat& c) { return mul_i(c); });
}

SurdSum half(const SurdSum& x) {
  return x.map_coefficients([](const GaussRat& c) { return half(c); });
}

std::complex<double> to_complex(const SurdSum& x) {
  std::complex<double> out;
  for (const auto& [n, c] : x.terms()) out += to_complex(c) * std::sqrt(n.get_d());
  return out;
}

std::string to_string(const SurdSum& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [n, c] : x.terms()) {
    if (!out.empty()) out += "+";
    out += "(" + to_string(c) + ")";
    if (n != 1) out += "*sqrt(" + n.get_str() + ")";
  }
  return out;
}

}  // namespace gsq
