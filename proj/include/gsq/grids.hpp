#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "gsq/correspondence.hpp"
#include "gsq/gauss.hpp"
#include "gsq/radical.hpp"

namespace gsq {

template <class T>
using Grid3 = std::array<std::array<T, 3>, 3>;

using OptRoot = std::optional<RadicalValue>;

struct Cell {
  GaussInt value;
  OptRoot root;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Root attached by default: the sign-normalized Gaussian square root when it
/// exists, sqrt(value) as a RadicalValue for other nonnegative rational
/// integers, nothing otherwise.
OptRoot default_root(const GaussInt& value);

/// 3x3 arrangement of cells, row-major (row, column). Immutable.
class MagicSquare {
 public:
  explicit MagicSquare(const Grid3<GaussInt>& values);
  /// Explicit roots; throws Errc::InvalidArgument when root^2 != value.
  MagicSquare(const Grid3<GaussInt>& values, const Grid3<OptRoot>& roots);

  const Cell& cell(int row, int col) const { return cells_[row][col]; }
  const Grid3<Cell>& cells() const { return cells_; }
  const GaussInt& center() const { return cells_[1][1].value; }
  Grid3<GaussInt> values() const;
  Grid3<OptRoot> roots() const;

  friend bool operator==(const MagicSquare&, const MagicSquare&) = default;

 private:
  Grid3<Cell> cells_;
};

/// The nine values m + j*u + k*v, j, k in {-1, 0, 1}.
struct GapBasis {
  GaussInt m;
  GaussInt u;
  GaussInt v;

  GaussInt value(int j, int k) const { return m + GaussInt(j) * u + GaussInt(k) * v; }
  friend bool operator==(const GapBasis&, const GapBasis&) = default;
};

/// Same lattice, steps sign-normalized and ordered by (norm, re, im).
/// Among all step pairs generating the same four center-pair classes the
/// smallest is chosen.
GapBasis canonical_basis(const GapBasis& b);

/// The magic arrangement of a basis:
///   m+u    m-u-v  m+v
///   m-u+v  m      m+u-v
///   m-v    m+u+v  m-u
/// Every line sums to 3m.
MagicSquare magic_from_basis(const GapBasis& b);

/// Magic arrangement of cells given in GAP coordinates [j+1][k+1]. Throws
/// Errc::NotAGap unless every value equals m + j*u + k*v for the m, u, v read
/// off the middle row and column. Absent `roots` means default roots.
MagicSquare magic_from_gap_cells(const Grid3<GaussInt>& values,
                                 const std::optional<Grid3<OptRoot>>& roots = std::nullopt);

/// Cell (j, k) of the GAP arrangement for a magic cell; j, k in {-1, 0, 1}.
using GapPos = std::pair<int, int>;

struct GapRecovery {
  GapBasis basis;               // canonical
  Grid3<GapPos> position;       // magic (row, col) -> (j, k)

  /// Values and roots rearranged into GAP coordinates, indexed [j+1][k+1].
  Grid3<Cell> gap_cells(const MagicSquare& sq) const;
};

/// Throws Errc::NotAGap when the four center pairs do not all sum to twice the
/// center, or their half-differences do not decompose as {u, v, u+v, v-u}.
GapRecovery gap_recover(const MagicSquare& sq);

/// One of the 8 lines of an arrangement: three cells, middle cell as center.
struct GridLine {
  std::string label;
  std::array<std::pair<int, int>, 3> cells;  // (j,k) for GAP lines, (row,col) otherwise
  std::array<GaussInt, 3> values;
  std::array<OptRoot, 3> roots;

  /// values[0] + values[2] - 2 values[1].
  GaussInt defect() const;
  bool has_roots() const { return roots[0] && roots[1] && roots[2]; }
  /// The roots as an ArithTriplet when all three are present and rational.
  std::optional<ArithTriplet> triplet() const;
};

/// Rows along v (fixed j), columns along u (fixed k), main and anti diagonal.
/// `cells` is indexed [j+1][k+1]; roots are copied where present.
std::array<GridLine, 8> gap_lines(const GapBasis& basis, const Grid3<OptRoot>& roots = {});

/// Rows, columns, main diagonal, anti-diagonal of the magic arrangement.
std::array<GridLine, 8> arrangement_lines(const MagicSquare& sq);

/// Lines used for sibling generation: GAP lines when the square is a GAP,
/// arrangement lines otherwise. `from_gap` reports which.
struct LineSet {
  bool from_gap = false;
  std::optional<GapRecovery> recovery;
  std::array<GridLine, 8> lines;
};
LineSet sibling_lines(const MagicSquare& sq);

struct NearMissReport {
  std::array<GaussInt, 8> line_sums;  // rows, columns, diagonal, anti-diagonal
  std::optional<GaussInt> magic_constant;
  bool thrice_center_ok = false;
  int square_count = 0;
  int distinct_count = 0;
  std::array<GaussInt, 4> central_defects;  // middle row, middle column, diagonal, anti-diagonal
  bool is_gap = false;
};

NearMissReport magic_report(const MagicSquare& sq);

}  // namespace gsq
