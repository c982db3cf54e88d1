#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsq/correspondence.hpp"
#include "gsq/grids.hpp"
#include "gsq/scalar.hpp"

namespace gsq {

enum class ElementKind { Point, Segment, Triangle, Note };

struct PlotElement {
  ElementKind kind = ElementKind::Point;
  std::vector<Complex> at;          // 1 point, 3 for segments and triangles
  std::vector<std::string> labels;  // per point; may be empty
  std::string style;                // extra CSS class
};

struct Viewport {
  double xmin, xmax, ymin, ymax;
};

struct PlotSpec {
  std::vector<PlotElement> elements;
  std::optional<Viewport> viewport;  // auto: bounding box of all points
  double scale = 0;                  // pixels per unit; 0 fits 600 px
};

/// SVG 1.1, imaginary axis up. Triangles also mark their centroid. Notes are
/// stacked in the top-left corner. Byte-stable for a given spec.
std::string emit_svg(const PlotSpec& spec);

/// The squared components as a triangle; with `triplets`, the three
/// progressions it generates as segments through their centers.
PlotSpec plot_triple(const ZeroSumTriple& z, bool triplets);

struct GridPlotOptions {
  bool siblings = false;
  bool rotate_older = false;  // draw -value, i.e. (root/i)^2, for older siblings
  double threshold = 1e-2;
};

/// Cell values labelled by their roots, the 8 lines, optionally the 16
/// siblings. A near-miss pseudo-grid adds an annotation.
PlotSpec plot_grid(const MagicSquare& sq, const GridPlotOptions& opts = {});

}  // namespace gsq
