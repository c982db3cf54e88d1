#include "gsq/siblings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_complex.hpp>

#include "gsq/error.hpp"

namespace gsq {

using Complex50 = boost::multiprecision::cpp_complex_50;
using Real50 = boost::multiprecision::cpp_bin_float_50;

Complex50 half(const Complex50& z) { return z / 2; }

namespace {

template <class R>
struct ErrorTerms {
  std::array<R, 3> midpoints;
  R error;
  R denominator;  // Db + Bd + 2Cc
  R square;       // (Bb - Dd)^2
};

// X and Y hold the endpoint roots of lines t = -1, 0, +1.
template <class R>
ErrorTerms<R> error_terms(const std::array<R, 3>& x, const std::array<R, 3>& y) {
  ErrorTerms<R> out;
  for (std::size_t t = 0; t < 3; ++t) {
    R h = half(x[t] + y[t]);
    out.midpoints[t] = h * h;
  }
  out.error = out.midpoints[0] + out.midpoints[2] - twice(out.midpoints[1]);
  const R& D = x[0];
  const R& b = y[0];
  const R& c = x[1];
  const R& C = y[1];
  const R& B = x[2];
  const R& d = y[2];
  out.denominator = D * b + B * d + twice(C * c);
  R k = B * b - D * d;
  out.square = k * k;
  return out;
}

double scale_of(const std::array<Complex, 3>& values) {
  double s = 0;
  for (const auto& v : values) s += std::abs(v);
  return std::max(1.0, s);
}

bool close(const Complex& x, const Complex& y, double scale) {
  return std::abs(x - y) <= 1e-9 * scale;
}

double relative(double abs_error, double median) {
  if (median == 0) return abs_error == 0 ? 0 : std::numeric_limits<double>::infinity();
  return abs_error / median;
}

Real50 to_real50(const Integer& n) { return Real50(n.get_str()); }

}  // namespace

bool LineSiblings::defect_negated() const {
  if (exact) {
    SurdSum want = -roots->defect();
    return pair->older.defect() == want && pair->younger.defect() == want;
  }
  Complex want = -roots_f.defect();
  double scale = scale_of(roots_f.values());
  return close(pair_f.older.defect(), want, scale) && close(pair_f.younger.defect(), want, scale);
}

LineSiblings line_siblings(const GridLine& line, Backend backend) {
  LineSiblings out;
  out.line = line;
  if (line.has_roots()) {
    Triplet<SurdSum> r{SurdSum(*line.roots[0]), SurdSum(*line.roots[1]),
                       SurdSum(*line.roots[2])};
    auto pair = siblings_of_triplet(r);
    out.integral_halves = pair.integral_halves;
    if (backend != Backend::Float) {
      out.exact = true;
      out.roots = std::move(r);
      out.pair = std::move(pair);
    }
  } else if (backend == Backend::Exact) {
    for (std::size_t n = 0; n < 3; ++n)
      if (!line.roots[n])
        throw Error(Errc::InvalidArgument,
                    line.label + ": " + to_string(line.values[n]) + " has no exact root");
  }
  std::array<Complex, 3> f;
  for (std::size_t n = 0; n < 3; ++n)
    f[n] = line.roots[n] ? to_complex(*line.roots[n]) : std::sqrt(to_complex(line.values[n]));
  out.roots_f = {f[0], f[1], f[2]};
  out.pair_f = siblings_of_triplet(out.roots_f);
  return out;
}

SiblingFamily grid_siblings(const MagicSquare& sq, Backend backend) {
  LineSet set = sibling_lines(sq);
  SiblingFamily fam;
  fam.from_gap = set.from_gap;
  if (set.recovery) fam.basis = set.recovery->basis;
  for (const auto& line : set.lines) fam.lines.push_back(line_siblings(line, backend));
  return fam;
}

bool PseudoGrid::identity_holds() const {
  if (exact) return residual->is_zero();
  return std::abs(residual_f) <= 1e-9 * residual_scale;
}

PseudoGrid pseudo_grid(const MagicSquare& sq, const PseudoOptions& opts) {
  GapRecovery rec = gap_recover(sq);
  Grid3<Cell> cells = rec.gap_cells(sq);
  Grid3<OptRoot> roots;
  std::array<double, 9> magnitudes;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      roots[j][k] = cells[j][k].root;
      magnitudes[3 * j + k] = std::abs(to_complex(cells[j][k].value));
    }
  }
  auto lines = gap_lines(rec.basis, roots);
  std::size_t first = opts.direction == Direction::Rows ? 0 : 3;

  PseudoGrid pg;
  pg.direction = opts.direction;
  pg.younger = opts.younger;
  Backend seg_backend = opts.backend == Backend::Exact ? Backend::Auto : opts.backend;
  bool endpoints_known = true;
  for (std::size_t t = 0; t < 3; ++t) {
    const GridLine& line = lines[first + t];
    pg.segments[t] = line_siblings(line, seg_backend);
    endpoints_known = endpoints_known && line.roots[0] && line.roots[2];
  }
  if (opts.backend == Backend::Exact && !endpoints_known)
    throw Error(Errc::InvalidArgument, "pseudo-grid endpoints lack exact roots");

  std::array<Complex, 3> xf, yf;
  for (std::size_t t = 0; t < 3; ++t) {
    xf[t] = pg.segments[t].roots_f.left;
    yf[t] = pg.segments[t].roots_f.right;
    if (opts.younger) yf[t] = -yf[t];
  }
  auto ft = error_terms(xf, yf);
  pg.midpoints_f = ft.midpoints;
  pg.error_f = ft.error;
  pg.residual_f = twice(ft.error) * ft.denominator + ft.square;
  pg.residual_scale = std::abs(twice(ft.error) * ft.denominator) + std::abs(ft.square);

  if (endpoints_known && opts.backend != Backend::Float) {
    std::array<SurdSum, 3> x, y;
    for (std::size_t t = 0; t < 3; ++t) {
      const GridLine& line = lines[first + t];
      x[t] = SurdSum(*line.roots[0]);
      y[t] = SurdSum(*line.roots[2]);
      if (opts.younger) y[t] = -y[t];
    }
    auto et = error_terms(x, y);
    pg.exact = true;
    pg.midpoints = et.midpoints;
    pg.error = et.error;
    pg.residual = twice(et.error) * et.denominator + et.square;
    pg.error_f = to_complex(et.error);
  }

  std::nth_element(magnitudes.begin(), magnitudes.begin() + 4, magnitudes.end());
  pg.median_abs = magnitudes[4];
  pg.relative_error = relative(std::abs(pg.error_f), pg.median_abs);
  pg.near_miss = pg.relative_error < opts.threshold;
  return pg;
}

std::vector<OriginPoint> origin_shift_study(const GapBasis& basis,
                                            const std::vector<double>& shifts,
                                            Direction direction, double threshold) {
  std::vector<OriginPoint> out;
  for (double shift : shifts) {
    Real50 t(shift);
    auto value = [&](int j, int k) {
      GaussInt v = basis.value(j, k);
      return Complex50(to_real50(v.re) + t, to_real50(v.im));
    };
    std::array<Complex50, 3> x, y;
    std::array<double, 9> magnitudes;
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k)
        magnitudes[3 * (j + 1) + (k + 1)] = static_cast<double>(abs(value(j, k)));
    for (int s = -1; s <= 1; ++s) {
      bool rows = direction == Direction::Rows;
      x[s + 1] = sqrt(rows ? value(s, -1) : value(-1, s));
      y[s + 1] = sqrt(rows ? value(s, 1) : value(1, s));
    }
    auto et = error_terms(x, y);

    OriginPoint p;
    p.shift = shift;
    p.abs_error = static_cast<double>(abs(et.error));
    Real50 size = abs(x[0] * y[0]) + abs(x[2] * y[2]) + 2 * abs(x[1] * y[1]);
    p.degenerate = abs(et.denominator) <= size * Real50("1e-40");
    std::nth_element(magnitudes.begin(), magnitudes.begin() + 4, magnitudes.end());
    p.relative_error = relative(p.abs_error, magnitudes[4]);
    p.near_miss = !p.degenerate && p.relative_error < threshold;
    out.push_back(p);
  }
  return out;
}

double log_log_slope(const std::vector<OriginPoint>& series) {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : series) {
    if (p.degenerate || p.shift <= 0 || p.abs_error <= 0) continue;
    double lx = std::log(p.shift), ly = std::log(p.abs_error);
    n += 1;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace gsq
