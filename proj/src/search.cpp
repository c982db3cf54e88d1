#include "gsq/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "gsq/error.hpp"

namespace gsq {

namespace {

using Key = std::array<GaussInt, 3>;

struct GaussLess {
  bool operator()(const GaussInt& a, const GaussInt& b) const { return canonical_less(a, b); }
};

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
  }
};

bool basis_less(const GapBasis& a, const GapBasis& b) {
  return KeyLess{}({a.m, a.u, a.v}, {b.m, b.u, b.v});
}

// Nonzero points of norm <= limit, one of each {z, -z}.
std::vector<GaussInt> half_plane(const Integer& limit, Ring ring) {
  std::vector<GaussInt> out;
  Integer side = isqrt(limit).root;
  for (Integer a = 0; a <= side; ++a) {
    if (ring == Ring::Integers) {
      if (a > 0) out.emplace_back(a, Integer(0));
      continue;
    }
    Integer a2 = a * a;
    Integer rest = limit - a2;
    Integer bmax = isqrt(rest).root;
    for (Integer b = -bmax; b <= bmax; ++b) {
      if (a == 0 && b <= 0) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

bool congruent_mod_1_plus_i(const GaussInt& s, const GaussInt& r) {
  GaussInt d = s - r;
  Integer t = d.re + d.im;
  return mpz_even_p(t.get_mpz_t()) != 0;
}

GaussInt halve(const GaussInt& z) { return {z.re / 2, z.im / 2}; }

void enum_worker(const SearchConfig& cfg, const std::vector<GaussInt>& ks, std::size_t worker,
                 std::set<Key, KeyLess>& out) {
  const Integer& n = cfg.norm_bound;
  Integer four_n = 4 * n;
  for (std::size_t idx = worker; idx < ks.size(); idx += static_cast<std::size_t>(cfg.worker_count)) {
    const GaussInt& k = ks[idx];
    Integer nk = norm(k);
    // norm(k s^2) = norm(A + C) <= 4N, and likewise for r.
    Integer q = four_n / nk;
    Integer slimit = isqrt(q).root;
    auto pts = half_plane(slimit, cfg.ring);
    for (const auto& s : pts) {
      GaussInt s2 = s * s;
      for (const auto& r : pts) {
        if (!canonical_less(r, s)) continue;
        if (!congruent_mod_1_plus_i(s, r)) continue;
        GaussInt r2 = r * r;
        GaussInt a = k * halve(s2 - r2);
        GaussInt b = k * s * r;
        GaussInt c = k * halve(s2 + r2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        if (norm(a) > n || norm(b) > n || norm(c) > n) continue;
        out.insert(class_key(to_zero_sum({a, b, c})));
      }
    }
  }
}

struct Progression {
  ArithTriplet roots;
  GaussInt diff;  // sign-normalized right^2 - center^2
};

GapBasis folded_canonical(const GapBasis& b) {
  GapBasis x = canonical_basis(b);
  GapBasis y = canonical_basis({conj(b.m), conj(b.u), conj(b.v)});
  return basis_less(y, x) ? y : x;
}

bool rank_less(const GapCandidate& a, const GapCandidate& b) {
  if (a.square_count != b.square_count) return a.square_count > b.square_count;
  if (a.distinct != b.distinct) return a.distinct;
  Integer na = norm(a.basis.m), nb = norm(b.basis.m);
  if (na != nb) return na < nb;
  return basis_less(a.basis, b.basis);
}

GapCandidate score(const GapBasis& b, const Progression& p1, const Progression& p2) {
  GapCandidate c;
  c.basis = b;
  c.provenance = {p1.roots, p2.roots};
  std::vector<GaussInt> seen;
  for (int j = -1; j <= 1; ++j) {
    for (int k = -1; k <= 1; ++k) {
      GaussInt v = b.value(j, k);
      if (is_gauss_square(v)) {
        ++c.square_count;
        c.square_positions.emplace_back(j, k);
      }
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
  }
  c.distinct = seen.size() == 9;
  return c;
}

void verify(const GapCandidate& c, const GaussInt& m, const Progression& p1,
            const Progression& p2) {
  if (gap_recover(magic_from_basis(c.basis)).basis != c.basis)
    throw std::logic_error("candidate basis does not round-trip");
  for (const GaussInt& v : {m, m - p1.diff, m + p1.diff, m - p2.diff, m + p2.diff})
    if (!gauss_sqrt(v)) throw std::logic_error("construction square lost: " + to_string(v));
}

}  // namespace

void SearchConfig::validate() const {
  if (norm_bound < 2) throw Error(Errc::InvalidArgument, "norm_bound must be at least 2");
  if (worker_count < 1) throw Error(Errc::InvalidArgument, "worker_count must be positive");
  if (score_floor < 5 || score_floor > 9)
    throw Error(Errc::InvalidArgument, "score_floor must be in 5..9");
}

std::vector<ZeroSumTriple> enum_triples(const SearchConfig& cfg) {
  cfg.validate();
  auto ks = half_plane(4 * cfg.norm_bound, cfg.ring);
  std::vector<std::set<Key, KeyLess>> parts(static_cast<std::size_t>(cfg.worker_count));
  if (cfg.worker_count == 1) {
    enum_worker(cfg, ks, 0, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < parts.size(); ++w)
      threads.emplace_back([&, w] { enum_worker(cfg, ks, w, parts[w]); });
    for (auto& t : threads) t.join();
  }
  std::set<Key, KeyLess> all;
  for (auto& p : parts) all.merge(p);
  std::vector<ZeroSumTriple> out;
  out.reserve(all.size());
  for (const auto& key : all) out.emplace_back(key[0], key[1], key[2]);
  return out;
}

std::vector<ZeroSumTriple> brute_force_triples(long max_norm) {
  if (max_norm > kBruteForceLimit)
    throw Error(Errc::BoundTooLarge, "brute force is limited to max_norm " +
                                         std::to_string(kBruteForceLimit));
  if (max_norm < 0) throw Error(Errc::InvalidArgument, "max_norm must be nonnegative");
  std::vector<GaussInt> pts;
  std::map<GaussInt, GaussInt, GaussLess> squares;
  for (long a = -max_norm; a <= max_norm; ++a) {
    for (long b = -max_norm; b <= max_norm; ++b) {
      if (a * a + b * b == 0 || a * a + b * b > max_norm) continue;
      GaussInt z(a, b);
      squares.emplace(z * z, z);
      if (a > 0 || (a == 0 && b > 0)) pts.push_back(z);
    }
  }
  std::set<Key, KeyLess> found;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      auto it = squares.find(-(x * x + y * y));
      if (it == squares.end()) continue;
      found.insert(class_key(ZeroSumTriple(x, y, it->second)));
    }
  }
  std::vector<ZeroSumTriple> out;
  for (const auto& key : found) out.emplace_back(key[0], key[1], key[2]);
  return out;
}

SearchResult gap_candidates(const SearchConfig& cfg) {
  return gap_candidates(enum_triples(cfg), cfg);
}

SearchResult gap_candidates(const std::vector<ZeroSumTriple>& triples, const SearchConfig& cfg) {
  cfg.validate();
  std::map<GaussInt, std::vector<Progression>, GaussLess> buckets;
  auto add = [&](const ZeroSumTriple& z) {
    for (const auto& t : triplets_from_triple(z)) {
      if (cfg.ring == Ring::Integers && !(t.left.im == 0 && t.center.im == 0 && t.right.im == 0))
        continue;
      GaussInt l = t.left.to_gauss_int(), c = t.center.to_gauss_int();
      GaussInt center = c * c;
      GaussInt diff = normalize_sign(center - l * l);
      auto& bucket = buckets[center];
      if (std::none_of(bucket.begin(), bucket.end(),
                       [&](const Progression& p) { return p.diff == diff; }))
        bucket.push_back({t, diff});
    }
  };
  for (const auto& z : triples) {
    add(z);
    ZeroSumTriple zc(conj(z[0]), conj(z[1]), conj(z[2]));
    if (!same_class(zc, z, false)) add(zc);
  }

  std::map<Key, GapCandidate, KeyLess> best;
  for (const auto& [m, bucket] : buckets) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        const GaussInt& d1 = bucket[i].diff;
        const GaussInt& d2 = bucket[j].diff;
        std::vector<std::pair<GaussInt, GaussInt>> shapes{
            {d1, d2}, {d1, d2 - d1}, {d1, -d2 - d1}, {d2, d1 - d2}, {d2, -d1 - d2}};
        if (auto h = exact_div(d1 - d2, GaussInt(2))) shapes.emplace_back(*h, *h + d2);
        for (const auto& [u, v] : shapes) {
          if (u.is_zero() || v.is_zero()) continue;
          GapBasis b = folded_canonical({m, u, v});
          Key key{b.m, b.u, b.v};
          if (best.count(key)) continue;
          GapCandidate c = score(b, bucket[i], bucket[j]);
          verify(c, m, bucket[i], bucket[j]);
          best.emplace(key, std::move(c));
        }
      }
    }
  }

  SearchResult res;
  for (auto& [key, c] : best) {
    if (c.square_count == 9) res.certificates.push_back(c);
    if (c.square_count >= cfg.score_floor) res.ranked.push_back(std::move(c));
  }
  std::sort(res.ranked.begin(), res.ranked.end(), rank_less);
  std::sort(res.certificates.begin(), res.certificates.end(), rank_less);
  return res;
}

std::string certificate_transcript(const GapCandidate& c) {
  std::ostringstream os;
  const GapBasis& b = c.basis;
  os << "basis m=" << to_string(b.m) << " u=" << to_string(b.u) << " v=" << to_string(b.v) << "\n";
  MagicSquare sq = magic_from_basis(b);
  bool all_ok = true;
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      const GaussInt& v = sq.cell(r, col).value;
      auto root = gauss_sqrt(v);
      bool ok = root && (*root) * (*root) == v;
      all_ok = all_ok && ok;
      os << "cell[" << r << "][" << col << "] = " << to_string(v) << " root "
         << (root ? to_string(*root) : std::string("none")) << (ok ? " ok" : " FAIL") << "\n";
    }
  }
  auto rep = magic_report(sq);
  static constexpr std::array<const char*, 8> kNames{"row 1",    "row 2",    "row 3",
                                                     "column 1", "column 2", "column 3",
                                                     "diagonal", "anti-diagonal"};
  GaussInt target = GaussInt(3) * b.m;
  for (std::size_t n = 0; n < 8; ++n) {
    bool ok = rep.line_sums[n] == target;
    all_ok = all_ok && ok;
    os << kNames[n] << " sum " << to_string(rep.line_sums[n]) << (ok ? " ok" : " FAIL") << "\n";
  }
  all_ok = all_ok && rep.distinct_count == 9;
  os << "distinct entries " << rep.distinct_count << (rep.distinct_count == 9 ? " ok" : " FAIL")
     << "\n";
  os << (all_ok ? "VERIFIED" : "NOT VERIFIED") << "\n";
  return os.str();
}

}  // namespace gsq
