#include "gsq/grids.hpp"

#include <algorithm>
#include <vector>

#include "gsq/error.hpp"

namespace gsq {

OptRoot default_root(const GaussInt& value) {
  if (auto g = gauss_sqrt(value)) return RadicalValue(*g);
  if (value.is_real() && sgn(value.re) >= 0) return RadicalValue::sqrt_of(value.re);
  return std::nullopt;
}

MagicSquare::MagicSquare(const Grid3<GaussInt>& values) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) cells_[r][c] = {values[r][c], default_root(values[r][c])};
}

MagicSquare::MagicSquare(const Grid3<GaussInt>& values, const Grid3<OptRoot>& roots) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const OptRoot& root = roots[r][c];
      if (root && (*root) * (*root) != RadicalValue(values[r][c]))
        throw Error(Errc::InvalidArgument, "cells[" + std::to_string(r) + "][" +
                                               std::to_string(c) + "]: root squared is not " +
                                               to_string(values[r][c]));
      cells_[r][c] = {values[r][c], root};
    }
  }
}

Grid3<GaussInt> MagicSquare::values() const {
  Grid3<GaussInt> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r][c] = cells_[r][c].value;
  return out;
}

Grid3<OptRoot> MagicSquare::roots() const {
  Grid3<OptRoot> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r][c] = cells_[r][c].root;
  return out;
}

namespace {

using Classes = std::array<GaussInt, 4>;

Classes sorted_classes(const GaussInt& a, const GaussInt& b, const GaussInt& c,
                       const GaussInt& d) {
  Classes out{normalize_sign(a), normalize_sign(b), normalize_sign(c), normalize_sign(d)};
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Classes step_classes(const GaussInt& u, const GaussInt& v) {
  return sorted_classes(u, v, u + v, v - u);
}

// Smallest (u, v) with key(u) <= key(v) among the four classes whose step
// classes reproduce `target`.
std::optional<std::pair<GaussInt, GaussInt>> best_steps(const Classes& target) {
  std::optional<std::pair<GaussInt, GaussInt>> best;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      const GaussInt& u = target[i];
      const GaussInt& v = target[j];
      if (canonical_less(v, u)) continue;
      if (step_classes(u, v) != target) continue;
      if (!best || canonical_less(u, best->first) ||
          (u == best->first && canonical_less(v, best->second)))
        best = std::make_pair(u, v);
    }
  }
  return best;
}

constexpr std::array<std::array<std::pair<int, int>, 2>, 4> kCentralPairs{{
    {{{1, 0}, {1, 2}}},  // middle row
    {{{0, 1}, {2, 1}}},  // middle column
    {{{0, 0}, {2, 2}}},  // diagonal
    {{{0, 2}, {2, 0}}},  // anti-diagonal
}};

// (j, k) of each magic cell in magic_from_basis.
constexpr Grid3<std::pair<int, int>> kMagicLayout{{
    {{{1, 0}, {-1, -1}, {0, 1}}},
    {{{-1, 1}, {0, 0}, {1, -1}}},
    {{{0, -1}, {1, 1}, {-1, 0}}},
}};

bool place_cells(const Grid3<GaussInt>& values, const GapBasis& basis, int cell,
                 std::array<bool, 9>& used, Grid3<GapPos>& position) {
  if (cell == 9) return true;
  int r = cell / 3, c = cell % 3;
  for (int slot = 0; slot < 9; ++slot) {
    if (used[slot]) continue;
    int j = slot / 3 - 1, k = slot % 3 - 1;
    if (basis.value(j, k) != values[r][c]) continue;
    used[slot] = true;
    position[r][c] = {j, k};
    if (place_cells(values, basis, cell + 1, used, position)) return true;
    used[slot] = false;
  }
  return false;
}

}  // namespace

GapBasis canonical_basis(const GapBasis& b) {
  auto steps = best_steps(step_classes(b.u, b.v));
  // (u, v) itself always qualifies, so a best pair exists.
  return {b.m, steps->first, steps->second};
}

MagicSquare magic_from_basis(const GapBasis& b) {
  const GaussInt& m = b.m;
  const GaussInt& u = b.u;
  const GaussInt& v = b.v;
  return MagicSquare(Grid3<GaussInt>{{
      {m + u, m - u - v, m + v},
      {m - u + v, m, m + u - v},
      {m - v, m + u + v, m - u},
  }});
}

MagicSquare magic_from_gap_cells(const Grid3<GaussInt>& values,
                                 const std::optional<Grid3<OptRoot>>& roots) {
  GapBasis b{values[1][1], values[2][1] - values[1][1], values[1][2] - values[1][1]};
  Grid3<GaussInt> magic_values;
  Grid3<OptRoot> magic_roots;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      auto [j, k] = kMagicLayout[r][c];
      const GaussInt& v = values[j + 1][k + 1];
      if (v != b.value(j, k))
        throw Error(Errc::NotAGap, "cells[" + std::to_string(j + 1) + "][" +
                                       std::to_string(k + 1) + "] is " + to_string(v) +
                                       ", expected " + to_string(b.value(j, k)));
      magic_values[r][c] = v;
      magic_roots[r][c] = roots ? (*roots)[j + 1][k + 1] : default_root(v);
    }
  }
  return MagicSquare(magic_values, magic_roots);
}

Grid3<Cell> GapRecovery::gap_cells(const MagicSquare& sq) const {
  Grid3<Cell> out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      auto [j, k] = position[r][c];
      out[j + 1][k + 1] = sq.cell(r, c);
    }
  }
  return out;
}

GapRecovery gap_recover(const MagicSquare& sq) {
  const GaussInt& m = sq.center();
  GaussInt twice_m = m + m;
  std::array<GaussInt, 4> diffs;
  for (std::size_t p = 0; p < 4; ++p) {
    const auto& [a, b] = kCentralPairs[p];
    const GaussInt& x = sq.cell(a.first, a.second).value;
    const GaussInt& y = sq.cell(b.first, b.second).value;
    if (x + y != twice_m)
      throw Error(Errc::NotAGap, "center pair " + to_string(x) + ", " + to_string(y) +
                                     " sums to " + to_string(x + y) + ", not " +
                                     to_string(twice_m));
    diffs[p] = x - m;
  }
  Classes target = sorted_classes(diffs[0], diffs[1], diffs[2], diffs[3]);
  auto steps = best_steps(target);
  if (!steps)
    throw Error(Errc::NotAGap, "center-pair differences do not decompose as {u, v, u+v, v-u}");

  GapRecovery out{{m, steps->first, steps->second}, {}};
  std::array<bool, 9> used{};
  if (!place_cells(sq.values(), out.basis, 0, used, out.position))
    throw Error(Errc::NotAGap, "cell values do not match the recovered lattice");
  return out;
}

GaussInt GridLine::defect() const { return values[0] + values[2] - values[1] - values[1]; }

std::optional<ArithTriplet> GridLine::triplet() const {
  if (!has_roots()) return std::nullopt;
  for (const auto& r : roots)
    if (!r->is_rational()) return std::nullopt;
  return ArithTriplet{roots[0]->a(), roots[1]->a(), roots[2]->a()};
}

std::array<GridLine, 8> gap_lines(const GapBasis& basis, const Grid3<OptRoot>& roots) {
  auto make = [&](std::string label, std::array<std::pair<int, int>, 3> cells) {
    GridLine line{std::move(label), cells, {}, {}};
    for (std::size_t n = 0; n < 3; ++n) {
      auto [j, k] = cells[n];
      line.values[n] = basis.value(j, k);
      line.roots[n] = roots[j + 1][k + 1];
    }
    return line;
  };
  static constexpr std::array<const char*, 3> kOffsets{"-1", "0", "+1"};
  std::array<GridLine, 8> out;
  for (int t = -1; t <= 1; ++t) {
    out[t + 1] = make(std::string("row j=") + kOffsets[t + 1], {{{t, -1}, {t, 0}, {t, 1}}});
    out[t + 4] = make(std::string("column k=") + kOffsets[t + 1], {{{-1, t}, {0, t}, {1, t}}});
  }
  out[6] = make("diagonal", {{{-1, -1}, {0, 0}, {1, 1}}});
  out[7] = make("anti-diagonal", {{{-1, 1}, {0, 0}, {1, -1}}});
  return out;
}

std::array<GridLine, 8> arrangement_lines(const MagicSquare& sq) {
  auto make = [&](std::string label, std::array<std::pair<int, int>, 3> cells) {
    GridLine line{std::move(label), cells, {}, {}};
    for (std::size_t n = 0; n < 3; ++n) {
      const Cell& cell = sq.cell(cells[n].first, cells[n].second);
      line.values[n] = cell.value;
      line.roots[n] = cell.root;
    }
    return line;
  };
  std::array<GridLine, 8> out;
  for (int t = 0; t < 3; ++t) {
    out[t] = make("row " + std::to_string(t + 1), {{{t, 0}, {t, 1}, {t, 2}}});
    out[t + 3] = make("column " + std::to_string(t + 1), {{{0, t}, {1, t}, {2, t}}});
  }
  out[6] = make("diagonal", {{{0, 0}, {1, 1}, {2, 2}}});
  out[7] = make("anti-diagonal", {{{0, 2}, {1, 1}, {2, 0}}});
  return out;
}

LineSet sibling_lines(const MagicSquare& sq) {
  LineSet out;
  try {
    out.recovery = gap_recover(sq);
  } catch (const Error& e) {
    if (e.code() != Errc::NotAGap) throw;
  }
  if (out.recovery) {
    out.from_gap = true;
    Grid3<Cell> cells = out.recovery->gap_cells(sq);
    Grid3<OptRoot> roots;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) roots[j][k] = cells[j][k].root;
    out.lines = gap_lines(out.recovery->basis, roots);
  } else {
    out.lines = arrangement_lines(sq);
  }
  return out;
}

NearMissReport magic_report(const MagicSquare& sq) {
  NearMissReport rep;
  auto lines = arrangement_lines(sq);
  for (std::size_t n = 0; n < 8; ++n)
    rep.line_sums[n] = lines[n].values[0] + lines[n].values[1] + lines[n].values[2];
  if (std::all_of(rep.line_sums.begin(), rep.line_sums.end(),
                  [&](const GaussInt& s) { return s == rep.line_sums[0]; })) {
    rep.magic_constant = rep.line_sums[0];
    rep.thrice_center_ok = (*rep.magic_constant == GaussInt(3) * sq.center());
  }

  std::vector<GaussInt> seen;
  for (const auto& row : sq.cells()) {
    for (const auto& cell : row) {
      if (is_gauss_square(cell.value)) ++rep.square_count;
      if (std::find(seen.begin(), seen.end(), cell.value) == seen.end()) seen.push_back(cell.value);
    }
  }
  rep.distinct_count = static_cast<int>(seen.size());

  for (std::size_t p = 0; p < 4; ++p) {
    const auto& [a, b] = kCentralPairs[p];
    rep.central_defects[p] = sq.cell(a.first, a.second).value +
                             sq.cell(b.first, b.second).value - sq.center() - sq.center();
  }

  try {
    gap_recover(sq);
    rep.is_gap = true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotAGap) throw;
  }
  return rep;
}

}  // namespace gsq
