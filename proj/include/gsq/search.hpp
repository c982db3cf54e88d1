#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gsq/correspondence.hpp"
#include "gsq/grids.hpp"

namespace gsq {

enum class Ring { Integers, Gaussians };

struct SearchConfig {
  Integer norm_bound = 2;  // bound on the norm of every triple component
  Ring ring = Ring::Gaussians;
  int worker_count = 1;
  int score_floor = 5;

  /// Throws Errc::InvalidArgument on out-of-range fields.
  void validate() const;
};

/// Sign-normalized zero-sum triples with every component of norm <= bound,
/// one per class (component order, signs, componentwise conjugation),
/// sorted by class key. Built from k (s^2 - r^2)/2, k s r, k (s^2 + r^2)/2
/// with s = r mod (1+i). Integer ring: k, s, r rational integers.
std::vector<ZeroSumTriple> enum_triples(const SearchConfig& cfg);

inline constexpr long kBruteForceLimit = 10000;

/// Exhaustive scan of component pairs with a square table for the third;
/// Gaussian ring only. Throws Errc::BoundTooLarge above kBruteForceLimit.
std::vector<ZeroSumTriple> brute_force_triples(long max_norm);

struct GapCandidate {
  GapBasis basis;  // canonical, conjugate-folded
  int square_count = 0;
  std::vector<std::pair<int, int>> square_positions;  // (j, k), sorted
  bool distinct = false;
  std::array<ArithTriplet, 2> provenance;  // the two source progressions
};

struct SearchResult {
  std::vector<GapCandidate> ranked;        // square_count >= floor
  std::vector<GapCandidate> certificates;  // square_count == 9
};

/// Buckets triplets by center value, pairs every two progressions sharing a
/// center in the six ways two of the four central lines {u, v, u+v, v-u} can
/// carry them, and scores each basis by its square cells. Ranked by square
/// count (desc), distinctness, norm(m), then basis.
SearchResult gap_candidates(const SearchConfig& cfg);

/// Same, over an explicit triple list (ring filter still applies).
SearchResult gap_candidates(const std::vector<ZeroSumTriple>& triples, const SearchConfig& cfg);

/// Full verification transcript for a candidate: cells, roots, root^2 checks,
/// line sums, distinctness. Every line is re-derived from the basis.
std::string certificate_transcript(const GapCandidate& c);

}  // namespace gsq
