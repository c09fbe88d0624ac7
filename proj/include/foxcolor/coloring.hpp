#pragma once

// Fox colorings: validation, kernel bases mod a prime, enumeration, palettes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "linalg.hpp"
#include "modular.hpp"

namespace foxcolor {

/// Residues indexed by arc.
struct Coloring {
  Modulus modulus{3};
  std::vector<int> values;

  bool is_trivial() const {
    return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
  }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Palette {
  std::vector<int> colors;  // sorted, distinct

  Palette() = default;
  explicit Palette(std::vector<int> c) : colors(std::move(c)) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  }
  Palette(std::initializer_list<int> c) : Palette(std::vector<int>(c)) {}

  int size() const { return static_cast<int>(colors.size()); }
  bool empty() const { return colors.empty(); }
  bool contains(int x) const { return std::binary_search(colors.begin(), colors.end(), x); }
  bool subset_of(const Palette& o) const {
    return std::includes(o.colors.begin(), o.colors.end(), colors.begin(), colors.end());
  }
  Palette without(int x) const {
    Palette p;
    for (int c : colors)
      if (c != x) p.colors.push_back(c);
    return p;
  }
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < colors.size(); ++i) s += (i ? "," : "") + std::to_string(colors[i]);
    return s + "}";
  }

  friend bool operator==(const Palette&, const Palette&) = default;
  friend auto operator<=>(const Palette&, const Palette&) = default;
};

/// Parses "0,2,3,4,8" into residues reduced mod m.
inline Palette parse_palette(const std::string& text, int m) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    long long v = std::stoll(cur, &used);
    if (used != cur.size()) throw std::invalid_argument("bad residue '" + cur + "'");
    out.push_back(mod(v, m));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}')
      flush();
    else
      cur += ch;
  }
  flush();
  return Palette(out);
}

inline Palette palette_of(const Coloring& c) { return Palette(c.values); }

inline bool is_coloring(const Diagram& d, const Coloring& c) {
  ArcPartition p = arcs(d);
  if (static_cast<int>(c.values.size()) != p.arc_count)
    throw std::invalid_argument("coloring has " + std::to_string(c.values.size()) +
                                " values for " + std::to_string(p.arc_count) + " arcs");
  const int m = c.modulus.value();
  for (const auto& x : d.crossings()) {
    std::int64_t over = c.values[p.arc_of_edge[x.over_a()]];
    std::int64_t a = c.values[p.arc_of_edge[x.under_in()]];
    std::int64_t b = c.values[p.arc_of_edge[x.under_out()]];
    if (c.values[p.arc_of_edge[x.over_b()]] != over) return false;
    if (mod(2 * over - a - b, m) != 0) return false;
  }
  for (int v : c.values)
    if (v < 0 || v >= m) return false;
  return true;
}

/// Per-edge colors of an arc coloring.
inline std::vector<int> edge_colors(const Diagram& d, const Coloring& c) {
  ArcPartition p = arcs(d);
  std::vector<int> out(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) out[e] = c.values[p.arc_of_edge[e]];
  return out;
}

/// Arc coloring from per-edge colors; free loops take `loop_colors`.
inline Coloring coloring_from_edges(const Diagram& d, const Modulus& m, const std::vector<int>& edge,
                                    const std::vector<int>& loop_colors = {}) {
  ArcPartition p = arcs(d);
  Coloring c{m, std::vector<int>(p.arc_count, -1)};
  for (int e = 0; e < d.edge_count(); ++e) {
    int& slot = c.values[p.arc_of_edge[e]];
    if (slot >= 0 && slot != edge[e]) throw std::invalid_argument("edge colors disagree along an arc");
    slot = edge[e];
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    int arc = p.arc_count - d.free_loops() + i;
    c.values[arc] = i < static_cast<int>(loop_colors.size()) ? loop_colors[i] : 0;
  }
  return c;
}

/// Basis of the kernel of the coloring matrix over Z/m, m prime. Vectors are
/// indexed by arc; one basis vector per free column, in column order.
inline std::vector<std::vector<int>> solve_colorings(const Diagram& d, const Modulus& m) {
  if (!m.is_prime()) throw std::domain_error("solve_colorings needs a prime modulus");
  const int p = m.value();
  IntMatrix cm = coloring_matrix(d);
  const int rows = cm.rows(), cols = cm.cols();
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = mod(static_cast<std::int64_t>(cm(i, j) % p), p);

  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int pr = r;
    while (pr < rows && a[pr][j] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    int inv = inverse_mod(a[r][j], p);
    for (int& x : a[r]) x = static_cast<int>(static_cast<std::int64_t>(x) * inv % p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      std::int64_t f = a[i][j];
      for (int k = 0; k < cols; ++k) a[i][k] = mod(a[i][k] - f * a[r][k], p);
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int j : pivot_col) is_pivot[j] = 1;
  std::vector<std::vector<int>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> v(cols, 0);
    v[f] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = mod(-a[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// All colorings that are not constant, in lexicographic order of the basis
/// coefficients. There are m^dim - m of them.
inline std::vector<Coloring> enumerate_nontrivial(const Diagram& d, const Modulus& m) {
  auto basis = solve_colorings(d, m);
  const int p = m.value();
  const int dim = static_cast<int>(basis.size());
  const int n = arcs(d).arc_count;
  std::vector<Coloring> out;
  std::vector<int> coef(dim, 0);
  for (;;) {
    Coloring c{m, std::vector<int>(n, 0)};
    for (int k = 0; k < dim; ++k)
      if (coef[k])
        for (int j = 0; j < n; ++j) c.values[j] = (c.values[j] + coef[k] * basis[k][j]) % p;
    if (!c.is_trivial()) out.push_back(std::move(c));
    int k = dim - 1;
    while (k >= 0 && ++coef[k] == p) coef[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

/// Smallest palette over the non-trivial colorings of this one diagram.
inline int min_colors_on_diagram(const Diagram& d, const Modulus& m) {
  auto all = enumerate_nontrivial(d, m);
  if (all.empty())
    throw std::domain_error("diagram has no non-trivial colorings modulo " + std::to_string(m.value()));
  int best = m.value() + 1;
  for (const auto& c : all) best = std::min(best, palette_of(c).size());
  return best;
}

}  // namespace foxcolor
