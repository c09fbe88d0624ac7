#pragma once

// Best-first search over colored Reidemeister moves for diagrams with fewer
// colors, and independent replay of the resulting certificates.

#include <chrono>
#include <map>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "automorphism.hpp"
#include "coloring.hpp"
#include "linalg.hpp"
#include "moves.hpp"
#include "obstruction.hpp"

namespace foxcolor {

/// Canonical sequence of a colored knot diagram: the lexicographically least
/// traversal record over every starting dart. Each entry of a crossing
/// contributes (code, color): code 0/1 is a first visit entering under/over,
/// code 2 + 4 * id + r a return visit entering r slots counterclockwise from
/// the first entry. Links fall back to their crossing list.
inline std::vector<int> canonical_sequence(const ColoredDiagram& cd) {
  const Diagram& d = cd.diagram;
  std::vector<int> tail;
  tail.push_back(-1);
  tail.push_back(d.free_loops());
  std::vector<int> loops = cd.loop_color;
  std::sort(loops.begin(), loops.end());
  tail.insert(tail.end(), loops.begin(), loops.end());

  const int darts = d.dart_count();
  if (darts == 0) return tail;
  if (d.component_count() - d.free_loops() != 1) {
    std::vector<int> seq{-2};
    for (const auto& x : d.crossings())
      for (int e : x.slot) seq.push_back(e), seq.push_back(cd.edge_color[e]);
    seq.insert(seq.end(), tail.begin(), tail.end());
    return seq;
  }

  const int n = d.crossing_count();
  std::vector<int> best, cur;
  std::vector<int> id(n), first_slot(n);
  cur.reserve(2 * darts);
  for (int start = 0; start < darts; ++start) {
    std::fill(id.begin(), id.end(), -1);
    cur.clear();
    int next_id = 0;
    bool worse = false, better = best.empty();
    int dart = start;
    do {
      int c = crossing_of(dart), s = slot_of(dart);
      int code;
      if (id[c] < 0) {
        id[c] = next_id++;
        first_slot[c] = s;
        code = s % 2;
      } else {
        code = 2 + 4 * id[c] + (s - first_slot[c] + 4) % 4;
      }
      for (int v : {code, cd.edge_color[d.edge_at(dart)]}) {
        if (!better) {
          int k = static_cast<int>(cur.size());
          if (v > best[k]) {
            worse = true;
            break;
          }
          if (v < best[k]) better = true;
        }
        cur.push_back(v);
      }
      if (worse) break;
      dart = d.strand_next(dart);
    } while (dart != start);
    if (!worse && better) best = cur;
  }
  best.insert(best.end(), tail.begin(), tail.end());
  return best;
}

inline std::uint64_t canonical_key(const ColoredDiagram& cd) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : canonical_sequence(cd)) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return h;
}

struct SearchBudget {
  int max_crossings = -1;  // negative: start crossings + 6
  int max_depth = 8;
  long long max_nodes = 5'000'000;
  double max_seconds = 0;  // 0: no wall-clock limit
};

struct SearchOptions {
  SearchBudget budget;
  std::optional<int> target_size;
  bool all_classes = true;
  // Kinks never lower the palette on their own and blow up the frontier.
  bool allow_kinks = false;
  // Only create crossings whose new arc reuses a color already present.
  bool keep_palette = false;
  // Length of the R3 chains expanded right after each R2+ child.
  int lookahead = 1;
  // Measure progress against whole target-size subsets instead of single
  // colour removals.
  bool plan_to_target = false;
};

struct Certificate {
  Coloring start_coloring;
  std::vector<Move> moves;
  ColoredDiagram final_state;
};

struct ClassResult {
  Coloring representative;
  Palette start_palette;
  ColoredDiagram best;
  Palette best_palette;
  Certificate certificate;
  long long nodes_generated = 0;
  long long nodes_expanded = 0;
  double seconds = 0;
  bool reached_target = false;
  bool improved = false;
  bool below_known_bound = false;  // palette < 5 for m >= 11: an internal error
};

namespace detail {

// Colour sets worth aiming for from `palette`: subsets of the target size
// that pass every screen, else single removals that do, else any single
// removal.
inline std::vector<Palette> elimination_goals(const Palette& palette, const Modulus& m, int target) {
  std::vector<Palette> goals;
  const int n = palette.size();
  auto viable = [&](const Palette& t) {
    return !lower_half_blocked(t, m) && !affine_lower_half_blocked(t, m) && wraparound_exists(t, m) &&
           !removable_at_bound(t, m);
  };
  if (target >= 2 && target < n - 1 && n <= 16) {
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - target, pick.end(), 1);
    do {
      Palette t;
      for (int i = 0; i < n; ++i)
        if (pick[i]) t.colors.push_back(palette.colors[i]);
      if (viable(t)) goals.push_back(std::move(t));
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!goals.empty()) return goals;
  }
  for (const auto& row : screen_candidates(palette, m))
    if (!row.blocked() && !removable_at_bound(row.subset, m)) goals.push_back(row.subset);
  if (goals.empty())
    for (int c : palette.colors) goals.push_back(palette.without(c));
  return goals;
}

// Fewest edges that must change colour to land inside some goal set; zero
// once the palette has shrunk to one.
inline int elimination_distance(const ColoredDiagram& cd, const Palette& palette, int target,
                                std::map<Palette, std::vector<Palette>>& cache) {
  if (palette.size() < 2 || !cd.modulus.is_odd()) return 0;
  auto it = cache.find(palette);
  if (it == cache.end()) it = cache.emplace(palette, elimination_goals(palette, cd.modulus, target)).first;
  std::map<int, int> count;
  for (int c : cd.edge_color) ++count[c];
  const int total = static_cast<int>(cd.edge_color.size());
  int best = total;
  for (const Palette& goal : it->second) {
    int inside = 0;
    for (int c : goal.colors)
      if (auto f = count.find(c); f != count.end()) inside += f->second;
    best = std::min(best, total - inside);
  }
  return best;
}

struct NodeRec {
  int parent;
  Move move;
  int depth;
  int best_size;    // smallest palette on the path from the root
  int stage_depth;  // depth at which best_size was first reached
};

}  // namespace detail

/// Searches from one coloring of one diagram.
inline ClassResult search_from(const Diagram& start, const Coloring& rep, const SearchOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const Modulus m = rep.modulus;
  const ColoredDiagram root = ColoredDiagram::from_coloring(start, rep);
  const int max_crossings =
      opt.budget.max_crossings >= 0 ? opt.budget.max_crossings : start.crossing_count() + 6;
  const int target = opt.target_size.value_or(0);
  const int plan = opt.plan_to_target ? target : 0;

  ClassResult r;
  r.representative = rep;
  r.start_palette = root.palette();
  r.best = root;
  r.best_palette = r.start_palette;

  // (best palette on the path, elimination distance, palette size, depth, crossings, node)
  using Key = std::tuple<int, int, int, int, int, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;
  std::vector<detail::NodeRec> nodes{{-1, {}, 0, r.start_palette.size(), 0}};
  std::unordered_set<std::uint64_t> seen{canonical_key(root)};
  std::map<Palette, std::vector<Palette>> screened;
  frontier.emplace(r.start_palette.size(), detail::elimination_distance(root, r.start_palette, plan, screened),
                   r.start_palette.size(), 0, root.diagram.crossing_count(), 0);
  int best_node = 0;
  auto best_rank = std::make_tuple(r.start_palette.size(), root.diagram.crossing_count(), 0);

  auto replay = [&](int idx) {
    std::vector<Move> path;
    for (int i = idx; i > 0; i = nodes[i].parent) path.push_back(nodes[i].move);
    ColoredDiagram cd = root;
    for (auto it = path.rbegin(); it != path.rend(); ++it) cd = apply_move(cd, *it);
    return std::make_pair(cd, std::vector<Move>(path.rbegin(), path.rend()));
  };

  r.nodes_generated = 1;
  bool stop = r.start_palette.size() <= target;
  while (!stop && !frontier.empty()) {
    const int idx = std::get<5>(frontier.top());
    frontier.pop();
    const detail::NodeRec rec = nodes[idx];
    if (rec.depth - rec.stage_depth >= opt.budget.max_depth) continue;
    ColoredDiagram cd = replay(idx).first;
    ++r.nodes_expanded;
    const Palette here = cd.palette();
    // Children are added through `push`; an R2+ child also contributes its
    // R3 follow-ups at once, since a push is usually worse on its own.
    auto push = [&](const ColoredDiagram& child, int parent, const Move& mv, int depth) -> int {
      if (!seen.insert(canonical_key(child)).second) return -1;
      const int ci = static_cast<int>(nodes.size());
      const detail::NodeRec pr = nodes[parent];
      const Palette pal = child.palette();
      if (pal.size() < pr.best_size)
        nodes.push_back({parent, mv, depth, pal.size(), depth});
      else
        nodes.push_back({parent, mv, depth, pr.best_size, pr.stage_depth});
      ++r.nodes_generated;
      auto rank = std::make_tuple(pal.size(), child.diagram.crossing_count(), depth);
      if (rank < best_rank) {
        best_rank = rank;
        best_node = ci;
      }
      if (pal.size() <= target || r.nodes_generated >= opt.budget.max_nodes) stop = true;
      frontier.emplace(nodes[ci].best_size, detail::elimination_distance(child, pal, plan, screened), pal.size(), depth,
                       child.diagram.crossing_count(), ci);
      return ci;
    };
    for (const Move& mv : applicable_moves(cd, max_crossings)) {
      if (!opt.allow_kinks && mv.kind == MoveKind::R1Plus) continue;
      if (opt.keep_palette && mv.kind == MoveKind::R2Plus && !here.contains(r2_plus_new_color(cd, mv))) continue;
      ColoredDiagram child = apply_move(cd, mv);
      const int ci = push(child, idx, mv, rec.depth + 1);
      if (stop) break;
      if (ci < 0 || mv.kind != MoveKind::R2Plus) continue;
      // Chains of R3 moves after the push, up to `lookahead` long.
      std::vector<std::pair<ColoredDiagram, int>> layer{{child, ci}};
      for (int step = 1; step <= opt.lookahead && !stop && !layer.empty(); ++step) {
        std::vector<std::pair<ColoredDiagram, int>> next_layer;
        for (const auto& [from, fi] : layer) {
          for (const Move& next : applicable_moves(from, max_crossings)) {
            if (next.kind != MoveKind::R3) continue;
            ColoredDiagram grand = apply_move(from, next);
            int gi = push(grand, fi, next, rec.depth + 1 + step);
            if (stop) break;
            if (gi >= 0) next_layer.emplace_back(std::move(grand), gi);
          }
          if (stop) break;
        }
        layer = std::move(next_layer);
      }
      if (stop) break;
    }
    if (opt.budget.max_seconds > 0 &&
        std::chrono::duration<double>(clock::now() - t0).count() > opt.budget.max_seconds)
      stop = true;
  }

  auto [best_cd, path] = replay(best_node);
  r.best = best_cd;
  r.best_palette = best_cd.palette();
  r.certificate = {rep, path, best_cd};
  r.improved = r.best_palette.size() < r.start_palette.size();
  r.reached_target = opt.target_size && r.best_palette.size() <= *opt.target_size;
  r.below_known_bound = m.value() >= 11 && m.is_prime() && r.best_palette.size() < 5;
  r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return r;
}

/// One search per equivalence class of non-trivial colorings (only the
/// first class unless `all_classes`).
inline std::vector<ClassResult> minimize_colors(const Diagram& start, const Modulus& m, const SearchOptions& opt) {
  auto classes = equivalence_classes(start, m);
  std::vector<ClassResult> out;
  for (const auto& cls : classes) {
    out.push_back(search_from(start, cls.representative, opt));
    if (!opt.all_classes) break;
  }
  return out;
}

struct VerifyResult {
  bool ok = false;
  int failed_step = -1;  // index of the offending move; moves.size() for a final mismatch
  std::string reason;
};

/// Replays a certificate move by move, checking applicability, planarity,
/// the coloring and the determinant at every step.
inline VerifyResult verify_certificate(const Diagram& start, const Certificate& cert) {
  VerifyResult v;
  ColoredDiagram cd;
  try {
    cd = ColoredDiagram::from_coloring(start, cert.start_coloring);
  } catch (const std::exception& e) {
    v.reason = std::string("start coloring rejected: ") + e.what();
    return v;
  }
  const BigInt det = link_determinant(start).det_link;
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    const Move& mv = cert.moves[i];
    auto legal = applicable_moves(cd);
    if (std::find(legal.begin(), legal.end(), mv) == legal.end()) {
      v.failed_step = static_cast<int>(i);
      v.reason = "move " + mv.to_string() + " is not applicable";
      return v;
    }
    try {
      cd = apply_move(cd, mv);
    } catch (const std::exception& e) {
      v.failed_step = static_cast<int>(i);
      v.reason = e.what();
      return v;
    }
    if (!cd.valid() || !is_coloring(cd.diagram, cd.coloring())) {
      v.failed_step = static_cast<int>(i);
      v.reason = "coloring invalid after move";
      return v;
    }
    if (link_determinant(cd.diagram).det_link != det) {
      v.failed_step = static_cast<int>(i);
      v.reason = "determinant changed";
      return v;
    }
  }
  if (!(cd == cert.final_state)) {
    v.failed_step = static_cast<int>(cert.moves.size());
    v.reason = "final state does not match";
    return v;
  }
  v.ok = true;
  return v;
}

}  // namespace foxcolor
