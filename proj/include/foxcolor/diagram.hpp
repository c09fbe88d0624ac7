#pragma once

// Knot and link diagrams as 4-valent planar combinatorial maps.
//
// A crossing lists its four incident edge-ends counterclockwise, starting at
// an under-edge: slots 0 and 2 carry the under-strand, slots 1 and 3 the
// over-strand. An edge-end is addressed by a dart, 4 * crossing + slot.
// Faces are traced by leaving a crossing along a dart and turning to the
// next slot clockwise at the far end, which keeps the face on the left.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foxcolor {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int dart_of(int crossing, int slot) { return 4 * crossing + slot; }
constexpr int crossing_of(int dart) { return dart / 4; }
constexpr int slot_of(int dart) { return dart % 4; }
constexpr int opposite(int dart) { return dart_of(crossing_of(dart), (slot_of(dart) + 2) % 4); }
constexpr bool is_over_slot(int slot) { return slot % 2 == 1; }

struct Crossing {
  std::array<int, 4> slot{};

  int under_in() const { return slot[0]; }
  int over_a() const { return slot[1]; }
  int under_out() const { return slot[2]; }
  int over_b() const { return slot[3]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// An immutable knot or link diagram. Edges are numbered densely from 0.
/// Crossingless unknotted components are kept as a count of free loops.
class Diagram {
 public:
  Diagram() = default;

  /// Builds and validates a diagram from crossings with arbitrary
  /// non-negative edge labels; labels are renumbered in order of first
  /// appearance.
  static Diagram from_crossings(const std::vector<std::array<int, 4>>& raw, int free_loops = 0) {
    if (raw.empty() && free_loops == 0) throw DiagramError("empty diagram");
    if (free_loops < 0) throw DiagramError("negative free loop count");
    Diagram d;
    d.free_loops_ = free_loops;
    std::map<int, int> dense;
    std::vector<int> uses;
    d.crossings_.reserve(raw.size());
    for (const auto& x : raw) {
      Crossing c;
      for (int s = 0; s < 4; ++s) {
        if (x[s] < 0) throw DiagramError("negative edge label");
        auto [it, inserted] = dense.try_emplace(x[s], static_cast<int>(dense.size()));
        if (inserted) uses.push_back(0);
        ++uses[it->second];
        c.slot[s] = it->second;
      }
      d.crossings_.push_back(c);
    }
    for (auto [label, id] : dense)
      if (uses[id] != 2)
        throw DiagramError("edge " + std::to_string(label) + " appears " +
                           std::to_string(uses[id]) + " times, expected 2");
    d.edge_count_ = static_cast<int>(dense.size());
    d.build_mates();
    d.check_euler();
    return d;
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return edge_count_; }
  int free_loops() const { return free_loops_; }
  int dart_count() const { return 4 * crossing_count(); }

  int edge_at(int dart) const { return crossings_[crossing_of(dart)].slot[slot_of(dart)]; }
  /// The other end of the edge leaving through this dart.
  int mate(int dart) const { return mate_[dart]; }
  /// Both darts of an edge, lower first.
  std::pair<int, int> ends_of(int edge) const { return ends_[edge]; }

  /// Successor of a dart along its face boundary.
  int face_next(int dart) const {
    int m = mate_[dart];
    return dart_of(crossing_of(m), (slot_of(m) + 3) % 4);
  }

  /// Face cycles as dart sequences; each starts at its smallest dart.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(dart_count(), 0);
    for (int d = 0; d < dart_count(); ++d) {
      if (seen[d]) continue;
      std::vector<int> face;
      for (int x = d; !seen[x]; x = face_next(x)) {
        seen[x] = 1;
        face.push_back(x);
      }
      out.push_back(std::move(face));
    }
    return out;
  }

  /// Entering a crossing through `dart`, the strand leaves through the
  /// opposite slot and enters the next crossing at the returned dart.
  int strand_next(int dart) const { return mate_[opposite(dart)]; }

  /// Number of link components, counting free loops.
  int component_count() const {
    std::vector<char> seen(dart_count(), 0);
    int cycles = 0;
    for (int d = 0; d < dart_count(); ++d) {
      if (seen[d]) continue;
      ++cycles;
      for (int x = d; !seen[x]; x = strand_next(x)) seen[x] = 1;
    }
    return cycles / 2 + free_loops_;
  }

  bool is_knot() const { return component_count() == 1; }

  /// PD text with edges renumbered 1.. along each component and every
  /// crossing rotated to start at its incoming under-edge.
  std::string to_pd() const {
    std::vector<int> label(edge_count_, 0);
    std::vector<int> start_slot(crossing_count(), -1);
    std::vector<char> seen(dart_count(), 0);
    int next_label = 1;
    for (int c = 0; c < crossing_count(); ++c) {
      for (int s : {0, 2, 1, 3}) {
        int d0 = dart_of(c, s);
        if (seen[d0]) continue;
        int d = d0;
        do {
          seen[d] = 1;
          seen[opposite(d)] = 1;
          if (label[edge_at(d)] == 0) label[edge_at(d)] = next_label++;
          if (!is_over_slot(slot_of(d))) start_slot[crossing_of(d)] = slot_of(d);
          d = strand_next(d);
        } while (d != d0);
      }
    }
    std::ostringstream out;
    for (int c = 0; c < crossing_count(); ++c) {
      out << 'X';
      for (int k = 0; k < 4; ++k) out << ' ' << label[crossings_[c].slot[(start_slot[c] + k) % 4]];
      out << '\n';
    }
    if (free_loops_ > 0) out << "# plus " << free_loops_ << " crossingless loop(s)\n";
    return out.str();
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  void build_mates() {
    ends_.assign(edge_count_, {-1, -1});
    for (int d = 0; d < dart_count(); ++d) {
      auto& e = ends_[edge_at(d)];
      (e.first < 0 ? e.first : e.second) = d;
    }
    mate_.assign(dart_count(), -1);
    for (auto [a, b] : ends_) {
      mate_[a] = b;
      mate_[b] = a;
    }
  }

  // Each connected piece must trace V + 2 faces (sphere Euler formula with
  // E = 2V).
  void check_euler() const {
    detail::UnionFind uf(crossing_count());
    for (auto [a, b] : ends_) uf.unite(crossing_of(a), crossing_of(b));
    std::vector<int> vertices(crossing_count(), 0), face_count(crossing_count(), 0);
    for (int c = 0; c < crossing_count(); ++c) ++vertices[uf.find(c)];
    for (const auto& f : faces()) ++face_count[uf.find(crossing_of(f.front()))];
    for (int c = 0; c < crossing_count(); ++c)
      if (uf.find(c) == c && face_count[c] != vertices[c] + 2)
        throw DiagramError("rotation system is not planar: " + std::to_string(vertices[c]) +
                           " crossings trace " + std::to_string(face_count[c]) + " faces");
  }

  std::vector<Crossing> crossings_;
  std::vector<int> mate_;
  std::vector<std::pair<int, int>> ends_;
  int edge_count_ = 0;
  int free_loops_ = 0;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == ',' ||
                            s[i] == '[' || s[i] == ']'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\r' || s[j] == ',' ||
                             s[j] == '[' || s[j] == ']'))
      ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view tok, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw DiagramError(std::string("bad ") + what + ": '" + std::string(tok) + "'");
  return v;
}

inline std::string_view strip_comment(std::string_view line) {
  if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
  return line;
}

}  // namespace detail

/// Parses PD text: one `X a b c d` per line, `#` comments, blank lines ignored.
inline Diagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> raw;
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens[0] == "X" && tokens.size() == 5) {
      std::array<int, 4> x{};
      for (int k = 0; k < 4; ++k) {
        x[k] = detail::parse_int(tokens[k + 1], "edge label");
        if (x[k] <= 0) throw DiagramError("edge labels must be positive (line " +
                                          std::to_string(line_no) + ")");
      }
      raw.push_back(x);
    } else {
      throw DiagramError("expected 'X a b c d' on line " + std::to_string(line_no));
    }
  }
  if (raw.empty()) throw DiagramError("empty PD input");
  return Diagram::from_crossings(raw);
}

/// Closure of a braid word over `strands` strands. Tokens are `sK`,
/// `sK^-1`, `sK^{-1}`, `sK^e` or `-sK`.
inline Diagram parse_braid(std::string_view word, int strands) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  std::vector<int> letters;
  for (auto tok : detail::split_ws(word)) {
    int sign = 1;
    if (!tok.empty() && tok.front() == '-') {
      sign = -1;
      tok.remove_prefix(1);
    }
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw DiagramError("bad braid token '" + std::string(tok) + "'");
    tok.remove_prefix(1);
    int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      tok = tok.substr(0, caret);
      if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      exponent = detail::parse_int(e, "braid exponent");
    }
    int gen = detail::parse_int(tok, "braid generator");
    if (gen < 1 || gen >= strands)
      throw DiagramError("generator s" + std::to_string(gen) + " out of range for " +
                         std::to_string(strands) + " strands");
    for (int k = 0; k < std::abs(exponent); ++k)
      letters.push_back((exponent < 0 ? -1 : 1) * sign * gen);
  }
  if (letters.empty()) throw DiagramError("empty braid word");

  int next = 0;
  std::vector<int> top(strands);
  for (auto& t : top) t = next++;
  const std::vector<int> first = top;
  std::vector<std::array<int, 4>> raw;
  for (int g : letters) {
    int i = std::abs(g) - 1;
    int a = top[i], b = top[i + 1], na = next++, nb = next++;
    // Strands run downwards; counterclockwise around the crossing the ends
    // are NE = b, NW = a, SW = na, SE = nb.
    if (g > 0)
      raw.push_back({b, a, na, nb});
    else
      raw.push_back({a, na, nb, b});
    top[i] = na;
    top[i + 1] = nb;
  }
  std::map<int, int> close;
  int loops = 0;
  for (int i = 0; i < strands; ++i) {
    if (top[i] == first[i])
      ++loops;
    else
      close[top[i]] = first[i];
  }
  for (auto& x : raw)
    for (auto& e : x)
      if (auto it = close.find(e); it != close.end()) e = it->second;
  return Diagram::from_crossings(raw, loops);
}

/// The standard closed 2-braid diagram of T(2, n), n odd.
inline Diagram torus_2n(int n) {
  if (n < 3 || n % 2 == 0) throw DiagramError("torus_2n needs an odd n >= 3");
  return parse_braid("s1^" + std::to_string(n), 2);
}

struct ArcPartition {
  std::vector<int> arc_of_edge;
  int arc_count = 0;
};

/// Fox arcs: the two over-edges of each crossing are merged. Arcs are
/// numbered by their smallest edge; free loops take the last indices.
inline ArcPartition arcs(const Diagram& d) {
  detail::UnionFind uf(d.edge_count());
  for (const auto& x : d.crossings()) uf.unite(x.over_a(), x.over_b());
  ArcPartition p;
  p.arc_of_edge.assign(d.edge_count(), -1);
  std::vector<int> id(d.edge_count(), -1);
  for (int e = 0; e < d.edge_count(); ++e) {
    int r = uf.find(e);
    if (id[r] < 0) id[r] = p.arc_count++;
    p.arc_of_edge[e] = id[r];
  }
  p.arc_count += d.free_loops();
  return p;
}

}  // namespace foxcolor
