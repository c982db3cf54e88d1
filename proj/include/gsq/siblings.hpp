#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gsq/correspondence.hpp"
#include "gsq/grids.hpp"
#include "gsq/radical.hpp"
#include "gsq/scalar.hpp"

namespace gsq {

/// Auto: exact where every root of a line is known, floating otherwise.
/// Exact: throw when a root is missing. Float: floating everywhere.
enum class Backend { Auto, Exact, Float };

struct LineSiblings {
  GridLine line;
  bool exact = false;
  bool integral_halves = false;
  // Exact arithmetic (SurdSum handles lines mixing several radicands).
  std::optional<Triplet<SurdSum>> roots;
  std::optional<SiblingPair<SurdSum>> pair;
  // Always filled; principal square roots stand in for missing roots.
  Triplet<Complex> roots_f;
  SiblingPair<Complex> pair_f;

  /// defect(older) = defect(younger) = -defect(line); exact, or within 1e-9
  /// relative on the floating backend.
  bool defect_negated() const;
};

struct SiblingFamily {
  bool from_gap = false;
  std::optional<GapBasis> basis;
  std::vector<LineSiblings> lines;

  std::size_t sibling_count() const { return 2 * lines.size(); }
  std::size_t triplet_count() const { return 3 * lines.size(); }
};

/// Siblings of the 8 lines: GAP lines when the square is a GAP, arrangement
/// lines otherwise.
SiblingFamily grid_siblings(const MagicSquare& sq, Backend backend = Backend::Auto);

LineSiblings line_siblings(const GridLine& line, Backend backend = Backend::Auto);

enum class Direction { Rows, Columns };

inline constexpr double kNearMissThreshold = 1e-2;

struct PseudoOptions {
  Direction direction = Direction::Rows;
  bool younger = false;
  double threshold = kNearMissThreshold;
  Backend backend = Backend::Auto;
};

/// Three parallel GAP lines t = -1, 0, +1 with endpoints X_t (k or j = -1)
/// and Y_t (= +1). Letters: D = X_-1, b = Y_-1, c = X_0, C = Y_0, B = X_+1,
/// d = Y_+1. With `younger`, Y is negated throughout, which turns every older
/// sibling into the younger one.
struct PseudoGrid {
  Direction direction = Direction::Rows;
  bool younger = false;
  std::array<LineSiblings, 3> segments;

  bool exact = false;
  std::optional<std::array<SurdSum, 3>> midpoints;
  std::optional<SurdSum> error;     // mid_-1 + mid_+1 - 2 mid_0
  std::optional<SurdSum> residual;  // 2E(Db + Bd + 2Cc) + (Bb - Dd)^2

  std::array<Complex, 3> midpoints_f;
  Complex error_f;
  Complex residual_f;
  double residual_scale = 0;  // |2E(Db + Bd + 2Cc)| + |(Bb - Dd)^2|

  double median_abs = 0;  // median |value| over the 9 cells
  double relative_error = 0;
  bool near_miss = false;

  bool identity_holds() const;
};

/// Throws Errc::NotAGap for non-GAP squares.
PseudoGrid pseudo_grid(const MagicSquare& sq, const PseudoOptions& opts = {});

struct OriginPoint {
  double shift = 0;
  double abs_error = 0;
  double relative_error = 0;
  bool degenerate = false;  // Db + Bd + 2Cc vanishes
  bool near_miss = false;
};

/// E(t) for the grid with every value shifted by the real offset t, roots
/// taken as principal square roots, evaluated with 50 significant digits.
std::vector<OriginPoint> origin_shift_study(const GapBasis& basis,
                                            const std::vector<double>& shifts,
                                            Direction direction = Direction::Rows,
                                            double threshold = kNearMissThreshold);

/// Least-squares slope of log|E| against log t over non-degenerate points
/// with t > 0 and E != 0.
double log_log_slope(const std::vector<OriginPoint>& series);

}  // namespace gsq
