#include "gsq/gauss.hpp"

#include <cctype>

#include "gsq/error.hpp"

namespace gsq {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPythagorean: return "NotPythagorean";
    case Errc::NotArithmetic: return "NotArithmetic";
    case Errc::NotSquare: return "NotSquare";
    case Errc::TrivialTriple: return "TrivialTriple";
    case Errc::GaussianParity: return "GaussianParity";
    case Errc::MixedRadicals: return "MixedRadicals";
    case Errc::NotAGap: return "NotAGap";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

IsqrtResult isqrt(const Integer& n) {
  if (sgn(n) < 0) throw Error(Errc::InvalidArgument, "isqrt of negative " + n.get_str());
  IsqrtResult out;
  mpz_sqrt(out.root.get_mpz_t(), n.get_mpz_t());
  out.exact = (out.root * out.root == n);
  return out;
}

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  Integer r = re * o.re - im * o.im;
  Integer i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
GaussInt operator-(const GaussInt& a) { return {Integer(-a.re), Integer(-a.im)}; }

Integer norm(const GaussInt& z) { return Integer(z.re * z.re + z.im * z.im); }

GaussInt normalize_sign(const GaussInt& z) {
  if (sgn(z.re) > 0 || (sgn(z.re) == 0 && sgn(z.im) >= 0)) return z;
  return -z;
}

std::optional<GaussInt> gauss_sqrt(const GaussInt& z) {
  // |g|^2 = |z|, so |z| must be an integer; then re(g)^2 and im(g)^2 follow
  // from the half-sum / half-difference of |z| and re(z).
  auto s = isqrt(norm(z));
  if (!s.exact) return std::nullopt;
  Integer sum = s.root + z.re;
  Integer diff = s.root - z.re;
  if (mpz_odd_p(sum.get_mpz_t())) return std::nullopt;
  auto x = isqrt(Integer(sum / 2));
  auto y = isqrt(Integer(diff / 2));
  if (!x.exact || !y.exact) return std::nullopt;
  GaussInt g{x.root, sgn(z.im) < 0 ? Integer(-y.root) : y.root};
  if (g * g != z) return std::nullopt;
  return normalize_sign(g);
}

std::strong_ordering canonical_cmp(const GaussInt& a, const GaussInt& b) {
  int c = cmp(norm(a), norm(b));
  if (c == 0) c = cmp(a.re, b.re);
  if (c == 0) c = cmp(a.im, b.im);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) return std::nullopt;
  GaussInt num = a * conj(b);
  Integer n = norm(b);
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussInt{Integer(num.re / n), Integer(num.im / n)};
}

std::complex<double> to_complex(const GaussInt& z) { return {z.re.get_d(), z.im.get_d()}; }

namespace {

// Shared by GaussInt and GaussRat printing: real part, then signed imaginary
// part with a bare "i" for unit coefficients.
template <class Num>
std::string format_parts(const Num& re, const Num& im) {
  if (sgn(im) == 0) return re.get_str();
  std::string out;
  if (sgn(re) != 0) out = re.get_str();
  Num mag = abs(im);
  std::string mag_str = (mag == 1) ? std::string() : mag.get_str();
  if (sgn(im) < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  return out + mag_str + "i";
}

}  // namespace

std::string to_string(const GaussInt& z) { return format_parts(z.re, z.im); }

GaussRat parse_gauss_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(Errc::Parse, "empty Gaussian number");

  Rational re = 0, im = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw Error(Errc::Parse, "expected sign in '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    std::string digits = s.substr(start, pos - start);
    bool imag = pos < s.size() && (s[pos] == 'i' || s[pos] == 'j');
    if (imag) ++pos;
    if (digits.empty() && !imag) throw Error(Errc::Parse, "malformed number '" + s + "'");
    Rational value = 1;
    if (!digits.empty()) {
      if (digits.front() == '/' || digits.back() == '/' ||
          digits.find('/') != digits.rfind('/'))
        throw Error(Errc::Parse, "malformed fraction in '" + s + "'");
      try {
        value = Rational(digits);
      } catch (const std::invalid_argument&) {
        throw Error(Errc::Parse, "malformed number '" + s + "'");
      }
      if (value.get_den() == 0) throw Error(Errc::Parse, "zero denominator in '" + s + "'");
      value.canonicalize();
    }
    if (sign < 0) value = -value;
    (imag ? im : re) += value;
    any = true;
  }
  return {re, im};
}

GaussInt parse_gauss_int(std::string_view text) {
  GaussRat q = parse_gauss_rat(text);
  if (!q.is_integral())
    throw Error(Errc::Parse, "not a Gaussian integer: '" + std::string(text) + "'");
  return q.to_gauss_int();
}

GaussInt GaussRat::to_gauss_int() const {
  if (!is_integral()) throw Error(Errc::InvalidArgument, to_string(*this) + " is not integral");
  return {Integer(re.get_num()), Integer(im.get_num())};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  Rational n = norm(o);
  if (sgn(n) == 0) throw Error(Errc::InvalidArgument, "division by zero");
  *this *= conj(o);
  re /= n;
  im /= n;
  return *this;
}

GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
GaussRat operator-(const GaussRat& a) { return {Rational(-a.re), Rational(-a.im)}; }

Rational norm(const GaussRat& z) { return Rational(z.re * z.re + z.im * z.im); }

GaussRat normalize_sign(const GaussRat& z) {
  if (sgn(z.re) > 0 || (sgn(z.re) == 0 && sgn(z.im) >= 0)) return z;
  return -z;
}

std::complex<double> to_complex(const GaussRat& z) { return {z.re.get_d(), z.im.get_d()}; }

std::string to_string(const GaussRat& z) { return format_parts(z.re, z.im); }

}  // namespace gsq
