#include "gsq/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gsq/error.hpp"

namespace gsq {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(Errc::Parse, path + ": " + what);
}

std::string idx(const std::string& path, std::size_t n) {
  return path + "[" + std::to_string(n) + "]";
}

Integer integer_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) bad(path, "expected a decimal string");
  Integer out;
  if (out.set_str(j.get<std::string>(), 10) != 0) bad(path, "not an integer: " + j.dump());
  return out;
}

Rational rational_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational string");
  Rational out;
  const auto s = j.get<std::string>();
  if (out.set_str(s, 10) != 0 || out.get_den() == 0) bad(path, "not a rational: " + j.dump());
  out.canonicalize();
  return out;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object() || !j.contains(name)) bad(path, std::string("missing field '") + name + "'");
  return j.at(name);
}

const Json& grid_array(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) bad(path, "expected 3 rows");
  for (std::size_t r = 0; r < 3; ++r)
    if (!j[r].is_array() || j[r].size() != 3) bad(idx(path, r), "expected 3 entries");
  return j;
}

Json values_json(const std::array<SurdSum, 3>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json values_json(const std::array<Complex, 3>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json sibling_json(const LineSiblings& l, bool younger) {
  Json out;
  if (l.exact) {
    const auto& t = younger ? l.pair->younger : l.pair->older;
    out["roots"] = to_json(t);
    out["values"] = values_json(t.values());
    out["defect"] = to_json(t.defect());
  } else {
    const auto& t = younger ? l.pair_f.younger : l.pair_f.older;
    out["roots"] = to_json(t);
    out["values"] = values_json(t.values());
    out["defect"] = to_json(t.defect());
  }
  return out;
}

const char* direction_name(Direction d) { return d == Direction::Rows ? "rows" : "columns"; }

}  // namespace

Json to_json(const GaussInt& z) { return Json::array({z.re.get_str(), z.im.get_str()}); }

Json to_json(const GaussRat& z) { return Json::array({rational_str(z.re), rational_str(z.im)}); }

Json to_json(const RadicalValue& r) {
  if (r.is_rational() && r.a().is_integral()) return to_json(r.a().to_gauss_int());
  Json out;
  out["a"] = to_json(r.a());
  out["b"] = to_json(r.b());
  out["radicand"] = r.radicand().get_str();
  return out;
}

Json to_json(const SurdSum& s) {
  if (auto r = s.as_radical()) {
    Json out;
    out["a"] = to_json(r->a());
    out["b"] = to_json(r->b());
    out["radicand"] = r->radicand().get_str();
    return out;
  }
  Json terms = Json::array();
  for (const auto& [n, c] : s.terms()) {
    Json t;
    t["radicand"] = n.get_str();
    t["coefficient"] = to_json(c);
    terms.push_back(t);
  }
  Json out;
  out["terms"] = terms;
  return out;
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

GaussInt gauss_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_gauss_int(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  if (j.is_number_integer()) return GaussInt(integer_from(j, path));
  if (!j.is_array() || j.size() != 2) bad(path, "expected [re, im]");
  return {integer_from(j[0], idx(path, 0)), integer_from(j[1], idx(path, 1))};
}

GaussRat gauss_rat_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_gauss_rat(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  if (!j.is_array() || j.size() != 2) bad(path, "expected [re, im]");
  return {rational_from(j[0], idx(path, 0)), rational_from(j[1], idx(path, 1))};
}

RadicalValue radical_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) return RadicalValue(gauss_from_json(j, path));
  GaussRat a = gauss_rat_from_json(field(j, "a", path), path + ".a");
  GaussRat b = gauss_rat_from_json(field(j, "b", path), path + ".b");
  Integer n = integer_from(field(j, "radicand", path), path + ".radicand");
  try {
    return RadicalValue(a, b, n);
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json to_json(const LegTriple& t) {
  return {{"kind", "pythagorean"}, {"components", Json::array({to_json(t.a), to_json(t.b), to_json(t.c)})}};
}

Json to_json(const ZeroSumTriple& t) {
  return {{"kind", "zero-sum"},
          {"components", Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])})}};
}

Json to_json(const ArithTriplet& t) {
  Json vals = Json::array();
  for (const auto& v : t.values()) vals.push_back(to_json(v));
  return {{"kind", "triplet"},
          {"components", Json::array({to_json(t.left), to_json(t.center), to_json(t.right)})},
          {"values", vals},
          {"defect", to_json(t.defect())}};
}

Json to_json(const Triplet<SurdSum>& t) {
  return {{"kind", "triplet"},
          {"components", Json::array({to_json(t.left), to_json(t.center), to_json(t.right)})}};
}

Json to_json(const Triplet<Complex>& t) {
  return {{"kind", "triplet"},
          {"components", Json::array({to_json(t.left), to_json(t.center), to_json(t.right)})}};
}

Json grid_to_json(const MagicSquare& sq) {
  Json cells = Json::array(), roots = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json crow = Json::array(), rrow = Json::array();
    for (int c = 0; c < 3; ++c) {
      const Cell& cell = sq.cell(r, c);
      crow.push_back(to_json(cell.value));
      rrow.push_back(cell.root ? to_json(*cell.root) : Json(nullptr));
    }
    cells.push_back(crow);
    roots.push_back(rrow);
  }
  return {{"arrangement", "magic"}, {"cells", cells}, {"roots", roots}};
}

MagicSquare grid_from_json(const Json& j) {
  if (!j.is_object()) bad("$", "expected a grid object");
  std::string arrangement = "magic";
  if (j.contains("arrangement")) {
    if (!j["arrangement"].is_string()) bad("arrangement", "expected a string");
    arrangement = j["arrangement"].get<std::string>();
  }
  if (arrangement != "magic" && arrangement != "gap")
    bad("arrangement", "expected \"magic\" or \"gap\", got \"" + arrangement + "\"");
  const Json& cells = grid_array(field(j, "cells", "$"), "cells");
  Grid3<GaussInt> values;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      values[r][c] = gauss_from_json(cells[r][c], idx(idx("cells", r), c));

  std::optional<Grid3<OptRoot>> roots;
  if (j.contains("roots") && !j["roots"].is_null()) {
    const Json& rj = grid_array(j["roots"], "roots");
    roots.emplace();
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        const Json& x = rj[r][c];
        if (!x.is_null()) (*roots)[r][c] = radical_from_json(x, idx(idx("roots", r), c));
      }
  }
  if (arrangement == "gap") return magic_from_gap_cells(values, roots);
  return roots ? MagicSquare(values, *roots) : MagicSquare(values);
}

Json to_json(const NearMissReport& r) {
  Json sums = Json::array(), defects = Json::array();
  for (const auto& s : r.line_sums) sums.push_back(to_json(s));
  for (const auto& d : r.central_defects) defects.push_back(to_json(d));
  return {{"line_sums", sums},
          {"magic_constant", r.magic_constant ? to_json(*r.magic_constant) : Json(nullptr)},
          {"thrice_center", r.thrice_center_ok},
          {"square_count", r.square_count},
          {"distinct_count", r.distinct_count},
          {"central_defects", defects},
          {"is_gap", r.is_gap}};
}

Json to_json(const SiblingFamily& f, bool include_younger) {
  Json lines = Json::array();
  for (const auto& l : f.lines) {
    Json rec;
    rec["label"] = l.line.label;
    rec["exact"] = l.exact;
    rec["integral_halves"] = l.integral_halves;
    rec["line"] = l.exact ? to_json(*l.roots) : to_json(l.roots_f);
    rec["line_defect"] = to_json(l.line.defect());
    rec["older"] = sibling_json(l, false);
    if (include_younger) rec["younger"] = sibling_json(l, true);
    rec["defect_negated"] = l.defect_negated();
    lines.push_back(rec);
  }
  Json out;
  out["from_gap"] = f.from_gap;
  if (f.basis)
    out["basis"] = {{"m", to_json(f.basis->m)}, {"u", to_json(f.basis->u)}, {"v", to_json(f.basis->v)}};
  out["sibling_count"] = f.sibling_count();
  out["triplet_count"] = f.triplet_count();
  out["lines"] = lines;
  return out;
}

Json to_json(const PseudoGrid& p) {
  Json segs = Json::array();
  for (const auto& s : p.segments) {
    Json rec = sibling_json(s, p.younger);
    rec["label"] = s.line.label;
    rec["exact"] = s.exact;
    segs.push_back(rec);
  }
  Json out;
  out["direction"] = direction_name(p.direction);
  out["sibling"] = p.younger ? "younger" : "older";
  out["exact"] = p.exact;
  out["segments"] = segs;
  if (p.exact) {
    out["midpoints"] = values_json(*p.midpoints);
    out["error"] = to_json(*p.error);
    out["identity_residual"] = to_json(*p.residual);
  } else {
    out["midpoints"] = values_json(p.midpoints_f);
  }
  out["error_float"] = to_json(p.error_f);
  out["identity_holds"] = p.identity_holds();
  out["median_abs"] = p.median_abs;
  out["relative_error"] = p.relative_error;
  out["near_miss"] = p.near_miss;
  return out;
}

Json to_json(const std::vector<OriginPoint>& series) {
  Json out = Json::array();
  for (const auto& p : series)
    out.push_back({{"shift", p.shift},
                   {"abs_error", p.abs_error},
                   {"relative_error", p.relative_error},
                   {"degenerate", p.degenerate},
                   {"near_miss", p.near_miss}});
  return out;
}

Json to_json(const GapCandidate& c) {
  Json pos = Json::array();
  for (const auto& [j, k] : c.square_positions) pos.push_back(Json::array({j, k}));
  return {{"basis", {{"m", to_json(c.basis.m)}, {"u", to_json(c.basis.u)}, {"v", to_json(c.basis.v)}}},
          {"square_count", c.square_count},
          {"square_positions", pos},
          {"distinct", c.distinct},
          {"provenance", Json::array({to_json(c.provenance[0]), to_json(c.provenance[1])})}};
}

Json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

}  // namespace gsq
