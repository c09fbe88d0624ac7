#pragma once

// Colored Reidemeister moves on diagrams whose edges carry colors.
//
// Sites are given in terms of the current diagram: edges, darts and
// crossings after dense renumbering, so a move list replays exactly.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "diagram.hpp"
#include "modular.hpp"

namespace foxcolor {

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

inline const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

inline MoveKind kind_from_name(const std::string& s) {
  for (auto k : {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus, MoveKind::R2Minus, MoveKind::R3})
    if (s == kind_name(k)) return k;
  throw MoveError("unknown move kind '" + s + "'");
}

/// R1+: a = edge (or -1 with b = free loop index), variant 0..3.
/// R1-: a = crossing, b = slot i with slots i and i+1 joined by a loop.
/// R2+: a, b = darts on one face, variant 0 pushes a's edge under b's, 1 over.
/// R2-: a = a dart of a bigon face.
/// R3: a = a dart of a triangular face.
struct Move {
  MoveKind kind = MoveKind::R1Plus;
  int a = -1;
  int b = -1;
  int variant = 0;

  std::string to_string() const {
    return std::string(kind_name(kind)) + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(variant) + ")";
  }
  friend bool operator==(const Move&, const Move&) = default;
};

/// A diagram with one color per edge and per free loop.
struct ColoredDiagram {
  Diagram diagram;
  Modulus modulus{3};
  std::vector<int> edge_color;
  std::vector<int> loop_color;

  static ColoredDiagram from_coloring(const Diagram& d, const Coloring& c) {
    if (!is_coloring(d, c)) throw std::invalid_argument("not a valid coloring of the diagram");
    ColoredDiagram cd{d, c.modulus, edge_colors(d, c), {}};
    int arcs_total = static_cast<int>(c.values.size());
    for (int i = 0; i < d.free_loops(); ++i) cd.loop_color.push_back(c.values[arcs_total - d.free_loops() + i]);
    return cd;
  }

  Coloring coloring() const { return coloring_from_edges(diagram, modulus, edge_color, loop_color); }

  Palette palette() const {
    std::vector<int> all = edge_color;
    all.insert(all.end(), loop_color.begin(), loop_color.end());
    return Palette(all);
  }

  /// Every crossing relation holds and over-edges agree.
  bool valid() const {
    if (static_cast<int>(edge_color.size()) != diagram.edge_count()) return false;
    if (static_cast<int>(loop_color.size()) != diagram.free_loops()) return false;
    for (const auto& x : diagram.crossings()) {
      int over = edge_color[x.over_a()];
      if (edge_color[x.over_b()] != over) return false;
      if (modulus.reduce(2LL * over - edge_color[x.under_in()] - edge_color[x.under_out()]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const ColoredDiagram&, const ColoredDiagram&) = default;
};

namespace detail {

// Rebuilds from raw labels, carrying colors through the first-appearance
// renumbering that Diagram::from_crossings applies.
inline ColoredDiagram rebuild(const std::vector<std::array<int, 4>>& raw, const std::vector<int>& color_of_label,
                              const Modulus& m, std::vector<int> loop_color) {
  ColoredDiagram cd;
  cd.modulus = m;
  cd.diagram = Diagram::from_crossings(raw, static_cast<int>(loop_color.size()));
  cd.edge_color.assign(cd.diagram.edge_count(), -1);
  int next = 0;
  std::map<int, int> seen;
  for (const auto& x : raw)
    for (int l : x)
      if (seen.emplace(l, next).second) cd.edge_color[next++] = color_of_label.at(l);
  cd.loop_color = std::move(loop_color);
  return cd;
}

inline std::vector<std::array<int, 4>> raw_of(const Diagram& d) {
  std::vector<std::array<int, 4>> raw;
  for (const auto& x : d.crossings()) raw.push_back(x.slot);
  return raw;
}

inline int face_length(const Diagram& d, int dart, int limit) {
  int n = 1;
  for (int x = d.face_next(dart); x != dart; x = d.face_next(x))
    if (++n > limit) return n;
  return n;
}

}  // namespace detail

/// Bigon at dart d1 can be removed: two distinct crossings, and the strand
/// along d1's edge is over at both ends or under at both ends.
inline bool r2_minus_applicable(const Diagram& d, int d1) {
  if (d1 < 0 || d1 >= d.dart_count()) return false;
  int d2 = d.face_next(d1);
  if (d.face_next(d2) != d1 || d2 == d1) return false;
  if (crossing_of(d1) == crossing_of(d2)) return false;
  return slot_of(d1) % 2 == slot_of(d.mate(d1)) % 2;
}

/// Triangle at dart d0 admits a third move: three distinct crossings and
/// edges, and one of the three strands passes over at both its crossings.
inline bool r3_applicable(const Diagram& d, int d0) {
  if (d0 < 0 || d0 >= d.dart_count()) return false;
  int d1 = d.face_next(d0), d2 = d.face_next(d1);
  if (d.face_next(d2) != d0) return false;
  std::array<int, 3> t{d0, d1, d2};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (crossing_of(t[i]) == crossing_of(t[j]) || d.edge_at(t[i]) == d.edge_at(t[j])) return false;
  for (int dart : t)
    if (is_over_slot(slot_of(dart)) && is_over_slot(slot_of(d.mate(dart)))) return true;
  return false;
}

/// R1- site: slots i and i+1 of crossing c hold the same edge.
inline bool r1_minus_applicable(const Diagram& d, int c, int i) {
  if (c < 0 || c >= d.crossing_count() || i < 0 || i > 3) return false;
  const auto& s = d.crossings()[c].slot;
  return s[i] == s[(i + 1) % 4];
}

inline bool r2_plus_applicable(const Diagram& d, int de, int df) {
  if (de < 0 || df < 0 || de >= d.dart_count() || df >= d.dart_count()) return false;
  if (d.edge_at(de) == d.edge_at(df)) return false;
  for (int x = d.face_next(de); x != de; x = d.face_next(x))
    if (x == df) return true;
  return false;
}

/// Every applicable move; R1+ and R2+ only while the crossing count stays
/// within `max_crossings` (negative means unbounded).
inline std::vector<Move> applicable_moves(const ColoredDiagram& cd, int max_crossings = -1) {
  const Diagram& d = cd.diagram;
  const int n = d.crossing_count();
  auto room = [&](int add) { return max_crossings < 0 || n + add <= max_crossings; };
  std::vector<Move> out;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i)
      if (r1_minus_applicable(d, c, i)) out.push_back({MoveKind::R1Minus, c, i, 0});
  auto faces = d.faces();
  for (const auto& f : faces) {
    if (f.size() == 2 && r2_minus_applicable(d, f[0])) out.push_back({MoveKind::R2Minus, f[0], -1, 0});
    if (f.size() == 3 && r3_applicable(d, f[0])) out.push_back({MoveKind::R3, f[0], -1, 0});
  }
  if (room(2))
    for (const auto& f : faces)
      for (int de : f)
        for (int df : f)
          if (d.edge_at(de) != d.edge_at(df))
            for (int v = 0; v < 2; ++v) out.push_back({MoveKind::R2Plus, de, df, v});
  if (room(1)) {
    for (int e = 0; e < d.edge_count(); ++e)
      for (int v = 0; v < 4; ++v) out.push_back({MoveKind::R1Plus, e, -1, v});
    for (int k = 0; k < d.free_loops(); ++k)
      for (int v = 0; v < 2; ++v) out.push_back({MoveKind::R1Plus, -1, k, v});
  }
  return out;
}

/// Color of the new middle edge an R2+ creates.
inline int r2_plus_new_color(const ColoredDiagram& cd, const Move& mv) {
  int a = cd.edge_color[cd.diagram.edge_at(mv.a)];
  int b = cd.edge_color[cd.diagram.edge_at(mv.b)];
  return mv.variant == 0 ? cd.modulus.reduce(2LL * b - a) : cd.modulus.reduce(2LL * a - b);
}

inline ColoredDiagram apply_move(const ColoredDiagram& cd, const Move& mv) {
  const Diagram& d = cd.diagram;
  const Modulus& m = cd.modulus;
  auto raw = detail::raw_of(d);
  std::vector<int> color = cd.edge_color;
  std::vector<int> loops = cd.loop_color;
  auto fresh = [&](int c) {
    color.push_back(c);
    return static_cast<int>(color.size()) - 1;
  };

  switch (mv.kind) {
    case MoveKind::R1Plus: {
      if (mv.variant < 0 || mv.variant > 3) throw MoveError("R1+ variant out of range");
      if (mv.a < 0) {
        if (mv.b < 0 || mv.b >= d.free_loops() || mv.variant > 1) throw MoveError("R1+ on a missing free loop");
        int c = loops[mv.b];
        loops.erase(loops.begin() + mv.b);
        int l = fresh(c), e = fresh(c);
        raw.push_back(mv.variant == 0 ? std::array<int, 4>{l, l, e, e} : std::array<int, 4>{e, l, l, e});
        break;
      }
      if (mv.a >= d.edge_count()) throw MoveError("R1+ on a missing edge");
      int e = mv.a, c = color[e];
      auto [tail, head] = d.ends_of(e);
      int eb = fresh(c), l = fresh(c);
      raw[crossing_of(head)][slot_of(head)] = eb;
      static constexpr int kShapes[4][4] = {{2, 2, 0, 1}, {2, 2, 1, 0}, {1, 2, 2, 0}, {0, 2, 2, 1}};
      std::array<int, 4> x{};
      for (int k = 0; k < 4; ++k) x[k] = kShapes[mv.variant][k] == 0 ? e : kShapes[mv.variant][k] == 1 ? eb : l;
      raw.push_back(x);
      break;
    }
    case MoveKind::R1Minus: {
      if (!r1_minus_applicable(d, mv.a, mv.b)) throw MoveError("R1- site has no loop");
      const auto& s = d.crossings()[mv.a].slot;
      int a = s[(mv.b + 2) % 4], b = s[(mv.b + 3) % 4];
      int c = color[s[mv.b]];
      raw.erase(raw.begin() + mv.a);
      if (a == b) {
        loops.push_back(c);
      } else {
        for (auto& x : raw)
          for (int& l : x)
            if (l == b) l = a;
      }
      break;
    }
    case MoveKind::R2Plus: {
      if (mv.variant < 0 || mv.variant > 1) throw MoveError("R2+ variant out of range");
      if (!r2_plus_applicable(d, mv.a, mv.b)) throw MoveError("R2+ darts do not share a face");
      int e = d.edge_at(mv.a), f = d.edge_at(mv.b);
      int qe = d.mate(mv.a), qf = d.mate(mv.b);
      int a = color[e], b = color[f];
      int eb = fresh(a), fb = fresh(b);
      raw[crossing_of(qe)][slot_of(qe)] = eb;
      raw[crossing_of(qf)][slot_of(qf)] = fb;
      if (mv.variant == 0) {
        int emid = fresh(m.reduce(2LL * b - a)), fmid = fresh(b);
        raw.push_back({e, fmid, emid, fb});
        raw.push_back({emid, fmid, eb, f});
      } else {
        int emid = fresh(a), fmid = fresh(m.reduce(2LL * a - b));
        raw.push_back({fmid, emid, fb, e});
        raw.push_back({f, emid, fmid, eb});
      }
      break;
    }
    case MoveKind::R2Minus: {
      if (!r2_minus_applicable(d, mv.a)) throw MoveError("R2- site is not a removable bigon");
      int d1 = mv.a, d2 = d.face_next(d1);
      int c1 = crossing_of(d1), c2 = crossing_of(d2);
      int s = slot_of(d1), t = slot_of(d.mate(d1));
      const auto& x1 = d.crossings()[c1].slot;
      const auto& x2 = d.crossings()[c2].slot;
      std::array<std::pair<int, int>, 2> joins{{{x1[(s + 2) % 4], x2[(t + 2) % 4]}, {x1[(s + 3) % 4], x2[(t + 1) % 4]}}};
      detail::UnionFind uf(static_cast<int>(color.size()));
      for (auto [p, q] : joins) uf.unite(p, q);
      std::vector<std::array<int, 4>> kept;
      for (int c = 0; c < d.crossing_count(); ++c)
        if (c != c1 && c != c2) kept.push_back(raw[c]);
      std::vector<char> present(color.size(), 0);
      for (auto& x : kept)
        for (int& l : x) present[l = uf.find(l)] = 1;
      std::vector<char> counted(color.size(), 0);
      for (auto [p, q] : joins) {
        int r = uf.find(p);
        if (!present[r] && !counted[r]) {
          counted[r] = 1;
          loops.push_back(color[r]);
        }
      }
      raw = std::move(kept);
      break;
    }
    case MoveKind::R3: {
      if (!r3_applicable(d, mv.a)) throw MoveError("R3 site is not a movable triangle");
      std::array<int, 3> t{mv.a, d.face_next(mv.a), 0};
      t[2] = d.face_next(t[1]);
      const auto snapshot = raw;
      std::vector<int> sides;
      for (int dart : t) {
        int v = dart, w = d.mate(dart);
        int side = d.edge_at(dart);
        int tv = slot_of(v), tw = slot_of(w);
        int ov = snapshot[crossing_of(v)][(tv + 2) % 4];
        int ow = snapshot[crossing_of(w)][(tw + 2) % 4];
        raw[crossing_of(v)][tv] = ow;
        raw[crossing_of(v)][(tv + 2) % 4] = side;
        raw[crossing_of(w)][tw] = ov;
        raw[crossing_of(w)][(tw + 2) % 4] = side;
        sides.push_back(side);
      }
      for (int side : sides) color[side] = -1;
      std::array<int, 3> cs{crossing_of(t[0]), crossing_of(t[1]), crossing_of(t[2])};
      for (bool changed = true; changed;) {
        changed = false;
        for (int c : cs) {
          auto& x = raw[c];
          int& o1 = color[x[1]];
          int& o3 = color[x[3]];
          if (o1 < 0 && o3 >= 0) o1 = o3, changed = true;
          if (o3 < 0 && o1 >= 0) o3 = o1, changed = true;
          if (o1 < 0) continue;
          int& u0 = color[x[0]];
          int& u2 = color[x[2]];
          if (u0 < 0 && u2 >= 0) u0 = m.reduce(2LL * o1 - u2), changed = true;
          if (u2 < 0 && u0 >= 0) u2 = m.reduce(2LL * o1 - u0), changed = true;
        }
      }
      for (int side : sides)
        if (color[side] < 0) throw MoveError("R3 recoloring left an edge undetermined");
      break;
    }
  }

  ColoredDiagram out;
  try {
    out = detail::rebuild(raw, color, m, std::move(loops));
  } catch (const DiagramError& err) {
    throw MoveError(std::string(kind_name(mv.kind)) + " produced an invalid diagram: " + err.what());
  }
  if (!out.valid()) throw MoveError(std::string(kind_name(mv.kind)) + " produced an invalid coloring");
  return out;
}

}  // namespace foxcolor
