#include "gsq/svg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gsq/error.hpp"
#include "gsq/siblings.hpp"

namespace gsq {

namespace {

constexpr double kMargin = 24;
constexpr double kTarget = 600;

const char* kStyle =
    "  <style>\n"
    "    .point { fill: #1f4e99; }\n"
    "    .endpoint { fill: #8a6d0b; }\n"
    "    .older { fill: #c0392b; stroke: #c0392b; }\n"
    "    .younger { fill: #27ae60; stroke: #27ae60; }\n"
    "    .triplet { fill: none; stroke: #1f4e99; stroke-width: 1.5; }\n"
    "    .triplet.older, .triplet.younger { fill: none; stroke-dasharray: 4 3; }\n"
    "    .triangle { fill: #f5e6a8; fill-opacity: 0.5; stroke: #8a6d0b; }\n"
    "    .centroid { fill: none; stroke: #000; }\n"
    "    .axis { stroke: #bbb; stroke-width: 0.5; }\n"
    "    text { font: 11px sans-serif; }\n"
    "  </style>\n";

std::string cls(const char* base, const std::string& style) {
  return style.empty() ? base : std::string(base) + " " + style;
}

struct Mapper {
  Viewport vp;
  double scale;
  double x(const Complex& z) const { return (z.real() - vp.xmin) * scale + kMargin; }
  double y(const Complex& z) const { return (vp.ymax - z.imag()) * scale + kMargin; }
  std::string pts(const std::vector<Complex>& zs) const {
    std::string out;
    for (std::size_t n = 0; n < zs.size(); ++n)
      out += fmt::format("{}{:.2f},{:.2f}", n ? " " : "", x(zs[n]), y(zs[n]));
    return out;
  }
};

Viewport fit(const PlotSpec& spec) {
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  for (const auto& e : spec.elements) {
    for (const auto& z : e.at) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
    if (e.kind == ElementKind::Triangle) {
      xmin = std::min(xmin, 0.0);
      xmax = std::max(xmax, 0.0);
      ymin = std::min(ymin, 0.0);
      ymax = std::max(ymax, 0.0);
    }
  }
  double span = std::max(xmax - xmin, ymax - ymin);
  double pad = span > 0 ? span * 0.05 : 1.0;
  return {xmin - pad, xmax + pad, ymin - pad, ymax + pad};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

PlotElement segment(const std::array<Complex, 3>& values, std::string style) {
  return {ElementKind::Segment, {values[0], values[1], values[2]}, {}, std::move(style)};
}

}  // namespace

std::string emit_svg(const PlotSpec& spec) {
  bool has_points = std::any_of(spec.elements.begin(), spec.elements.end(),
                                [](const PlotElement& e) { return !e.at.empty(); });
  if (!has_points)
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\" "
           "viewBox=\"0 0 0 0\"/>\n";

  Viewport vp = spec.viewport ? *spec.viewport : fit(spec);
  double w = vp.xmax - vp.xmin, h = vp.ymax - vp.ymin;
  double scale = spec.scale > 0 ? spec.scale : kTarget / std::max(w, h);
  Mapper m{vp, scale};
  double width = w * scale + 2 * kMargin, height = h * scale + 2 * kMargin;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.2f}\" "
      "height=\"{:.2f}\" viewBox=\"0 0 {:.2f} {:.2f}\">\n",
      width, height, width, height);
  out += kStyle;
  // Axes through the origin when it is in view.
  Complex o(0, 0);
  if (vp.xmin <= 0 && 0 <= vp.xmax)
    out += fmt::format("  <line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n",
                       m.x(o), kMargin, m.x(o), height - kMargin);
  if (vp.ymin <= 0 && 0 <= vp.ymax)
    out += fmt::format("  <line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n",
                       kMargin, m.y(o), width - kMargin, m.y(o));

  int note_line = 0;
  for (const auto& e : spec.elements) {
    switch (e.kind) {
      case ElementKind::Triangle: {
        out += fmt::format("  <polygon class=\"{}\" points=\"{}\"/>\n", cls("triangle", e.style),
                           m.pts(e.at));
        Complex c = (e.at[0] + e.at[1] + e.at[2]) / 3.0;
        out += fmt::format("  <circle class=\"centroid\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\"/>\n",
                           m.x(c), m.y(c));
        break;
      }
      case ElementKind::Segment:
        out += fmt::format("  <polyline class=\"{}\" points=\"{}\"/>\n", cls("triplet", e.style),
                           m.pts(e.at));
        break;
      case ElementKind::Point:
        for (const auto& z : e.at)
          out += fmt::format("  <circle class=\"{}\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\"/>\n",
                             cls("point", e.style), m.x(z), m.y(z));
        break;
      case ElementKind::Note:
        break;
    }
    if (e.kind != ElementKind::Note) {
      for (std::size_t n = 0; n < e.labels.size() && n < e.at.size(); ++n) {
        if (e.labels[n].empty()) continue;
        out += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", m.x(e.at[n]) + 5,
                           m.y(e.at[n]) - 5, escape(e.labels[n]));
      }
    } else {
      for (const auto& label : e.labels)
        out += fmt::format("  <text class=\"annotation\" x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n",
                           kMargin, kMargin + 14.0 * note_line++, escape(label));
    }
  }
  out += "</svg>\n";
  return out;
}

PlotSpec plot_triple(const ZeroSumTriple& z, bool triplets) {
  PlotSpec spec;
  PlotElement tri{ElementKind::Triangle, {}, {}, ""};
  PlotElement pts{ElementKind::Point, {}, {}, ""};
  for (std::size_t n = 0; n < 3; ++n) {
    tri.at.push_back(to_complex(z[n] * z[n]));
    pts.at.push_back(tri.at.back());
    pts.labels.push_back(to_string(z[n]));
  }
  spec.elements.push_back(tri);
  if (triplets) {
    for (const auto& t : triplets_from_triple(z)) {
      auto v = t.values();
      spec.elements.push_back(segment({to_complex(v[0]), to_complex(v[1]), to_complex(v[2])}, ""));
      spec.elements.push_back({ElementKind::Point,
                               {to_complex(v[0]), to_complex(v[2])},
                               {to_string(t.left), to_string(t.right)},
                               "endpoint"});
    }
  }
  spec.elements.push_back(pts);
  return spec;
}

PlotSpec plot_grid(const MagicSquare& sq, const GridPlotOptions& opts) {
  PlotSpec spec;
  SiblingFamily fam = grid_siblings(sq);
  for (const auto& l : fam.lines) {
    spec.elements.push_back(segment({to_complex(l.line.values[0]), to_complex(l.line.values[1]),
                                     to_complex(l.line.values[2])},
                                    ""));
  }
  if (opts.siblings) {
    for (const auto& l : fam.lines) {
      for (bool younger : {false, true}) {
        const auto& t = younger ? l.pair_f.younger : l.pair_f.older;
        auto v = t.values();
        if (!younger && opts.rotate_older)
          for (auto& x : v) x = -x;
        spec.elements.push_back(segment(v, younger ? "younger" : "older"));
        spec.elements.push_back(
            {ElementKind::Point, {v[0], v[1], v[2]}, {}, younger ? "younger" : "older"});
      }
    }
    std::vector<std::string> notes;
    for (auto dir : {Direction::Rows, Direction::Columns}) {
      try {
        auto pg = pseudo_grid(sq, {dir, false, opts.threshold});
        if (pg.near_miss)
          notes.push_back(fmt::format("near-miss pseudo-grid ({}): relative |E| = {:.3g}",
                                      dir == Direction::Rows ? "rows" : "columns",
                                      pg.relative_error));
      } catch (const Error& e) {
        if (e.code() != Errc::NotAGap) throw;
      }
    }
    if (!notes.empty()) spec.elements.push_back({ElementKind::Note, {}, notes, "annotation"});
  }
  PlotElement cells{ElementKind::Point, {}, {}, ""};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const Cell& cell = sq.cell(r, c);
      cells.at.push_back(to_complex(cell.value));
      cells.labels.push_back(cell.root ? to_string(*cell.root)
                                       : "sqrt(" + to_string(cell.value) + ")");
    }
  spec.elements.push_back(cells);
  return spec;
}

}  // namespace gsq
