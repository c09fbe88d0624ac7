#pragma once

// Set-level obstructions to sufficiency over odd moduli.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "coloring.hpp"
#include "modular.hpp"

namespace foxcolor {

namespace detail {
inline int require_odd(const Modulus& m, const char* what) {
  if (!m.is_odd() || m.value() < 3)
    throw std::domain_error(std::string(what) + " requires an odd modulus >= 3");
  return m.half_k();
}
}  // namespace detail

/// S inside {0, ..., k} where m = 2k + 1.
inline bool lower_half_blocked(const Palette& s, const Modulus& m) {
  const int k = detail::require_odd(m, "lower_half_blocked");
  for (int c : s.colors)
    if (m.reduce(c) > k) return false;
  return true;
}

/// A map f with S inside f({0, ..., k}), scanning every unit lambda and
/// every mu: x lies in f({0, ..., k}) iff lambda^-1 (x - mu) <= k.
inline std::optional<AffineMap> affine_lower_half_blocked(const Palette& s, const Modulus& m) {
  const int k = detail::require_odd(m, "affine_lower_half_blocked");
  const int n = m.value();
  for (int l = 1; l < n; ++l) {
    if (!m.is_unit(l)) continue;
    const int li = inverse_mod(l, n);
    for (int u = 0; u < n; ++u) {
      bool inside = true;
      for (int x : s.colors)
        if (mod(static_cast<std::int64_t>(li) * (x - u), n) > k) {
          inside = false;
          break;
        }
      if (inside) return AffineMap(m, l, u);
    }
  }
  return std::nullopt;
}

struct PairStructure {
  Palette base_set;
  std::map<int, std::set<std::pair<int, int>>> pairs_at;  // over color -> {c1 < c2}
};

/// Unordered pairs {c1, c2} of S with c1 + c2 = 2c mod m, for each c in S.
inline PairStructure pair_structure(const Palette& s, const Modulus& m) {
  detail::require_odd(m, "pair_structure");
  PairStructure ps{s, {}};
  for (int c : s.colors) {
    auto& bucket = ps.pairs_at[c];
    for (std::size_t i = 0; i < s.colors.size(); ++i)
      for (std::size_t j = i + 1; j < s.colors.size(); ++j)
        if (m.reduce(s.colors[i] + s.colors[j] - 2 * c) == 0) bucket.emplace(s.colors[i], s.colors[j]);
  }
  return ps;
}

/// Some pair relation holds only modulo m, not over the integers.
inline bool wraparound_exists(const Palette& s, const Modulus& m) {
  Palette canon;
  for (int c : s.colors) canon.colors.push_back(m.reduce(c));
  canon = Palette(canon.colors);
  for (const auto& [c, pairs] : pair_structure(canon, m).pairs_at)
    for (auto [x, y] : pairs)
      if (x + y != 2 * c) return true;
  return false;
}

/// Colors of S lying in no pair of any bucket.
inline Palette removable_colors(const Palette& s, const Modulus& m) {
  std::set<int> used;
  for (const auto& [c, pairs] : pair_structure(s, m).pairs_at)
    for (auto [x, y] : pairs) used.insert(x), used.insert(y);
  Palette out;
  for (int c : s.colors)
    if (!used.count(c)) out.colors.push_back(c);
  return out;
}

enum class Test { LowerHalf, AffineLowerHalf, NoWraparound };

inline const char* test_name(Test t) {
  switch (t) {
    case Test::LowerHalf: return "lower-half";
    case Test::AffineLowerHalf: return "affine-lower-half";
    case Test::NoWraparound: return "no-wraparound";
  }
  return "?";
}

struct ScreenResult {
  int removed;
  Palette subset;
  std::vector<Test> blocked_by;         // every test that fires; empty means CANDIDATE
  std::optional<AffineMap> affine_witness;
  std::vector<std::pair<int, std::pair<int, int>>> integral_pairs;  // (c, {c1, c2}) when no wraparound

  bool blocked() const { return !blocked_by.empty(); }
  bool blocked_by_test(Test t) const {
    return std::find(blocked_by.begin(), blocked_by.end(), t) != blocked_by.end();
  }
};

/// Screens every S minus {c}.
inline std::vector<ScreenResult> screen_candidates(const Palette& s, const Modulus& m) {
  detail::require_odd(m, "screen_candidates");
  if (s.size() < 2) throw std::invalid_argument("screening needs at least two colors");
  std::vector<ScreenResult> out;
  for (int c : s.colors) {
    ScreenResult r{c, s.without(c), {}, std::nullopt, {}};
    if (lower_half_blocked(r.subset, m)) r.blocked_by.push_back(Test::LowerHalf);
    r.affine_witness = affine_lower_half_blocked(r.subset, m);
    if (r.affine_witness) r.blocked_by.push_back(Test::AffineLowerHalf);
    if (!wraparound_exists(r.subset, m)) {
      r.blocked_by.push_back(Test::NoWraparound);
      for (const auto& [x, pairs] : pair_structure(r.subset, m).pairs_at)
        for (auto pr : pairs) r.integral_pairs.emplace_back(x, pr);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Known lower bound on mincol for a prime modulus; 2 otherwise.
inline int mincol_lower_bound(const Modulus& m) {
  if (!m.is_prime()) return 2;
  switch (m.value()) {
    case 2: return 2;
    case 3: return 3;
    case 5:
    case 7: return 4;
    default: return 5;
  }
}

/// Subsets that survive the screens but have a removable color while
/// already at the lower bound: removing that color would go below it.
inline bool removable_at_bound(const Palette& subset, const Modulus& m) {
  return subset.size() <= mincol_lower_bound(m) && !removable_colors(subset, m).colors.empty();
}

/// Colors whose removal survives every screen.
inline Palette elimination_candidates(const Palette& s, const Modulus& m) {
  Palette out;
  for (const auto& r : screen_candidates(s, m))
    if (!r.blocked()) out.colors.push_back(r.removed);
  return out;
}

}  // namespace foxcolor
