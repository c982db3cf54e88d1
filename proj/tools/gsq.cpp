// gsq: command-line front end.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gsq/error.hpp"
#include "gsq/fixtures.hpp"
#include "gsq/io.hpp"
#include "gsq/search.hpp"
#include "gsq/siblings.hpp"
#include "gsq/svg.hpp"

using namespace gsq;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::array<GaussInt, 3> parse_three(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 3)
    throw Error(Errc::Parse, "expected three comma-separated components, got " +
                                 std::to_string(parts.size()));
  return {parse_gauss_int(parts[0]), parse_gauss_int(parts[1]), parse_gauss_int(parts[2])};
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

MagicSquare load_grid(const std::string& path) { return grid_from_json(read_json_file(path)); }

Json unfold(const std::string& text) {
  auto c = parse_three(text);
  GaussInt sum = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  ZeroSumTriple z = sum.is_zero() ? ZeroSumTriple(c[0], c[1], c[2])
                                  : to_zero_sum({c[0], c[1], c[2]});
  Json trips = Json::array();
  for (const auto& t : triplets_from_triple(z)) trips.push_back(to_json(t));
  Json out;
  if (!sum.is_zero()) out["input"] = to_json(LegTriple{c[0], c[1], c[2]});
  out["zero_sum"] = to_json(z);
  out["triplets"] = trips;
  return out;
}

Json fold(const std::string& text, bool as_roots) {
  auto c = parse_three(text);
  if (!as_roots && c[0].is_real() && c[1].is_real() && c[2].is_real())
    return to_json(triplet_to_pyth_int(c[0].re, c[1].re, c[2].re));
  std::array<GaussInt, 3> roots = c;
  if (!as_roots) {
    for (std::size_t n = 0; n < 3; ++n) {
      auto r = gauss_sqrt(c[n]);
      if (!r) throw Error(Errc::NotSquare, to_string(c[n]) + " is not a Gaussian square");
      roots[n] = *r;
    }
  }
  return to_json(triplet_to_triple(
      ArithTriplet{GaussRat(roots[0]), GaussRat(roots[1]), GaussRat(roots[2])}));
}

Direction parse_direction(const std::string& s) {
  if (s == "rows") return Direction::Rows;
  if (s == "cols" || s == "columns") return Direction::Columns;
  throw Error(Errc::InvalidArgument, "direction must be rows or cols");
}

Json fixture_json(const std::string& name) {
  Fixture f = load_fixture(name);
  if (auto* sq = std::get_if<MagicSquare>(&f)) return grid_to_json(*sq);
  return to_json(std::get<ZeroSumTriple>(f));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian arithmetic triplets, slant grids and their siblings"};
  app.require_subcommand(1);

  std::string grid_path, text, out_path, direction = "rows", ring = "gaussians", name,
                                            cert_path = "certificate.txt";
  bool younger = false, exact = false, floating = false, as_roots = false, with_siblings = false,
       rotate_older = false;
  double threshold = kNearMissThreshold;
  std::vector<double> shifts;
  long long norm_bound = 100;
  int workers = 1, floor = 5;

  auto* check = app.add_subcommand("check", "near-miss report for a grid");
  check->add_option("grid", grid_path, "grid JSON file, - for stdin")->required();

  auto* unfold_cmd = app.add_subcommand("unfold", "Pythagorean or zero-sum triple to triplets");
  unfold_cmd->add_option("triple", text, "e.g. \"8-4i,4+7i,4-i\"")->required();

  auto* fold_cmd = app.add_subcommand("fold", "progression values (or roots) back to a triple");
  fold_cmd->add_option("triplet", text, "e.g. \"1,25,49\"")->required();
  fold_cmd->add_flag("--roots", as_roots, "components are roots, not values");

  auto* sib = app.add_subcommand("siblings", "older (and younger) siblings of the 8 lines");
  sib->add_option("grid", grid_path)->required();
  sib->add_flag("--younger", younger, "include younger siblings");
  auto* ex = sib->add_flag("--exact", exact, "fail unless every line is exact");
  sib->add_flag("--float", floating, "floating backend for every line")->excludes(ex);

  auto* pseudo = app.add_subcommand("pseudo", "pseudo-grid error term");
  pseudo->add_option("grid", grid_path)->required();
  pseudo->add_option("--direction", direction, "rows or cols");
  pseudo->add_flag("--younger", younger, "assemble younger siblings instead");
  pseudo->add_option("--threshold", threshold, "near-miss threshold on relative |E|");

  auto* study = app.add_subcommand("study-origin", "error term as the grid moves off the origin");
  study->add_option("grid", grid_path)->required();
  study->add_option("--shifts", shifts, "real offsets")->delimiter(',')->required();
  study->add_option("--direction", direction, "rows or cols");
  study->add_option("--threshold", threshold);

  auto* search = app.add_subcommand("search", "rank GAP candidates (JSON lines)");
  search->add_option("--ring", ring, "integers or gaussians");
  search->add_option("--norm-bound", norm_bound, "bound on component norms")->required();
  search->add_option("--workers", workers);
  search->add_option("--floor", floor, "minimum square count, 5..9");
  search->add_option("--certificate", cert_path, "where square_count 9 transcripts go");

  auto* plot = app.add_subcommand("plot", "SVG of a grid or a zero-sum triple");
  plot->add_option("input", grid_path, "grid or triple JSON, - for stdin")->required();
  plot->add_option("-o,--output", out_path)->required();
  plot->add_flag("--siblings", with_siblings, "draw siblings (triplets for a triple)");
  plot->add_flag("--rotate-older", rotate_older, "draw older siblings negated");
  plot->add_option("--threshold", threshold);

  auto* fixture = app.add_subcommand("fixture", "print a built-in fixture");
  fixture->add_option("name", name, "bremner, parker, loshu, worked-example")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      print(to_json(magic_report(load_grid(grid_path))));
    } else if (unfold_cmd->parsed()) {
      print(unfold(text));
    } else if (fold_cmd->parsed()) {
      print(fold(text, as_roots));
    } else if (sib->parsed()) {
      Backend b = exact ? Backend::Exact : floating ? Backend::Float : Backend::Auto;
      print(to_json(grid_siblings(load_grid(grid_path), b), younger));
    } else if (pseudo->parsed()) {
      PseudoOptions o{parse_direction(direction), younger, threshold, Backend::Auto};
      print(to_json(pseudo_grid(load_grid(grid_path), o)));
    } else if (study->parsed()) {
      GapBasis basis = gap_recover(load_grid(grid_path)).basis;
      auto series = origin_shift_study(basis, shifts, parse_direction(direction), threshold);
      Json out;
      out["series"] = to_json(series);
      double slope = log_log_slope(series);
      out["log_log_slope"] = std::isnan(slope) ? Json(nullptr) : Json(slope);
      print(out);
    } else if (search->parsed()) {
      SearchConfig cfg;
      cfg.norm_bound = Integer(std::to_string(norm_bound));
      if (ring == "integers") cfg.ring = Ring::Integers;
      else if (ring == "gaussians") cfg.ring = Ring::Gaussians;
      else throw Error(Errc::InvalidArgument, "ring must be integers or gaussians");
      cfg.worker_count = workers;
      cfg.score_floor = floor;
      auto res = gap_candidates(cfg);
      for (const auto& c : res.ranked) std::cout << to_json(c).dump() << "\n";
      if (!res.certificates.empty()) {
        std::ofstream cert(cert_path);
        for (const auto& c : res.certificates) cert << certificate_transcript(c) << "\n";
        std::cerr << res.certificates.size() << " square_count 9 certificate(s) written to "
                  << cert_path << "\n";
      }
    } else if (plot->parsed()) {
      Json in = read_json_file(grid_path);
      PlotSpec spec;
      if (in.is_object() && in.value("kind", "") == "zero-sum") {
        const Json& c = in.at("components");
        if (!c.is_array() || c.size() != 3) throw Error(Errc::Parse, "components: expected 3");
        spec = plot_triple(ZeroSumTriple(gauss_from_json(c[0], "components[0]"),
                                         gauss_from_json(c[1], "components[1]"),
                                         gauss_from_json(c[2], "components[2]")),
                           with_siblings);
      } else {
        spec = plot_grid(grid_from_json(in), {with_siblings, rotate_older, threshold});
      }
      std::ofstream out(out_path);
      if (!out) throw Error(Errc::InvalidArgument, "cannot write " + out_path);
      out << emit_svg(spec);
    } else if (fixture->parsed()) {
      print(fixture_json(name));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: Parse: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
