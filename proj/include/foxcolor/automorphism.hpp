#pragma once

// The affine group x -> lambda x + mu acting on residues, palettes and colorings.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "modular.hpp"

namespace foxcolor {

class AffineMap {
 public:
  AffineMap(const Modulus& m, int lambda, int mu) : m_(m), lambda_(m.reduce(lambda)), mu_(m.reduce(mu)) {
    if (!m_.is_unit(lambda_))
      throw std::domain_error("lambda " + std::to_string(lambda) + " is not a unit modulo " +
                              std::to_string(m.value()));
  }
  static AffineMap identity(const Modulus& m) { return AffineMap(m, 1, 0); }

  const Modulus& modulus() const { return m_; }
  int lambda() const { return lambda_; }
  int mu() const { return mu_; }

  int operator()(int x) const { return m_.reduce(static_cast<std::int64_t>(lambda_) * x + mu_); }

  /// (this o g)(x) = this(g(x)).
  AffineMap after(const AffineMap& g) const {
    check_same(g);
    return AffineMap(m_, static_cast<int>(static_cast<std::int64_t>(lambda_) * g.lambda_ % m_.value()),
                     (*this)(g.mu_));
  }
  AffineMap inverse() const {
    int li = inverse_mod(lambda_, m_.value());
    return AffineMap(m_, li, m_.reduce(-static_cast<std::int64_t>(li) * mu_));
  }

  std::string to_string() const {
    return "f(x) = " + std::to_string(lambda_) + "x + " + std::to_string(mu_) + " mod " +
           std::to_string(m_.value());
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  void check_same(const AffineMap& g) const {
    if (!(g.m_ == m_)) throw std::invalid_argument("affine maps over different moduli");
  }
  Modulus m_;
  int lambda_;
  int mu_;
};

inline int apply(const AffineMap& f, int x) { return f(x); }

inline Palette apply(const AffineMap& f, const Palette& s) {
  std::vector<int> out;
  for (int x : s.colors) out.push_back(f(x));
  return Palette(out);
}

/// Every map of the group, lambda-major.
inline std::vector<AffineMap> affine_group(const Modulus& m) {
  std::vector<AffineMap> g;
  for (int l = 1; l < m.value(); ++l) {
    if (!m.is_unit(l)) continue;
    for (int u = 0; u < m.value(); ++u) g.emplace_back(m, l, u);
  }
  return g;
}

inline Coloring act_on_coloring(const AffineMap& f, const Coloring& c) {
  if (!(f.modulus() == c.modulus)) throw std::invalid_argument("modulus mismatch between map and coloring");
  Coloring out{c.modulus, c.values};
  for (int& v : out.values) v = f(v);
  return out;
}

/// An affine map carrying A onto B, if any. Two elements of A are pinned to
/// every ordered pair of distinct elements of B and the rest is checked.
inline std::optional<AffineMap> find_map_between_sets(const Palette& a, const Palette& b, const Modulus& m) {
  require_odd_prime(m, "find_map_between_sets");
  if (a.size() != b.size()) throw std::invalid_argument("sets have different sizes");
  if (a.size() < 2) {
    for (const auto& f : affine_group(m))
      if (apply(f, a) == b) return f;
    return std::nullopt;
  }
  const int a0 = a.colors[0], a1 = a.colors[1];
  const int step = inverse_mod(m.reduce(a1 - a0), m.value());
  for (int b0 : b.colors)
    for (int b1 : b.colors) {
      if (b0 == b1) continue;
      int lambda = m.reduce(static_cast<std::int64_t>(b1 - b0) * step);
      AffineMap f(m, lambda, m.reduce(b0 - static_cast<std::int64_t>(lambda) * a0));
      if (apply(f, a) == b) return f;
    }
  return std::nullopt;
}

struct PinningRow {
  int image0, image1;
  int lambda, mu;
  std::vector<int> images;     // images of the remaining elements, in order
  std::vector<bool> outside;   // image not in the target set
  int marks() const { return static_cast<int>(std::count(outside.begin(), outside.end(), true)); }
};

/// For each ordered pair of distinct targets (f(a0), f(a1)) in B, solve for
/// lambda, mu and list the images of the rest of A. Rows are ordered by
/// f(a0), then f(a1).
inline std::vector<PinningRow> pinning_table(const std::vector<int>& a, const Palette& b, const Modulus& m) {
  require_odd_prime(m, "pinning_table");
  if (a.size() < 2) throw std::invalid_argument("pinning needs at least two elements");
  const int step = inverse_mod(m.reduce(a[1] - a[0]), m.value());
  std::vector<PinningRow> rows;
  for (int b0 : b.colors)
    for (int b1 : b.colors) {
      if (b0 == b1) continue;
      int lambda = m.reduce(static_cast<std::int64_t>(b1 - b0) * step);
      AffineMap f(m, lambda, m.reduce(b0 - static_cast<std::int64_t>(lambda) * a[0]));
      PinningRow r{b0, b1, f.lambda(), f.mu(), {}, {}};
      for (std::size_t i = 2; i < a.size(); ++i) {
        r.images.push_back(f(a[i]));
        r.outside.push_back(!b.contains(f(a[i])));
      }
      rows.push_back(std::move(r));
    }
  return rows;
}

struct ColoringClass {
  Coloring representative;
  std::vector<Coloring> members;
};

/// Orbits of the non-trivial colorings under the affine group, in order of
/// first appearance in the enumeration.
inline std::vector<ColoringClass> equivalence_classes(const Diagram& d, const Modulus& m) {
  require_odd_prime(m, "equivalence_classes");
  auto all = enumerate_nontrivial(d, m);
  if (all.empty())
    throw std::domain_error("no non-trivial colorings modulo " + std::to_string(m.value()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index.emplace(all[i].values, i);
  std::vector<int> class_of(all.size(), -1);
  std::vector<ColoringClass> classes;
  const auto group = affine_group(m);
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    if (class_of[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    ColoringClass cls{all[i], {}};
    std::set<int> members;
    for (const auto& f : group) {
      int j = index.at(act_on_coloring(f, all[i]).values);
      if (members.insert(j).second) class_of[j] = id;
    }
    for (int j : members) cls.members.push_back(all[j]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Equivalent coloring using 0, 1, 2: at the first crossing with three
/// distinct colors a (incoming under), b (over), 2b - a, apply
/// x -> (b - a)^-1 (x - a).
inline Coloring normalize_to_012(const Diagram& d, const Coloring& c) {
  require_odd_prime(c.modulus, "normalize_to_012");
  ArcPartition p = arcs(d);
  for (const auto& x : d.crossings()) {
    int a = c.values[p.arc_of_edge[x.under_in()]];
    int b = c.values[p.arc_of_edge[x.over_a()]];
    if (a == b) continue;
    int inv = inverse_mod(c.modulus.reduce(b - a), c.modulus.value());
    AffineMap f(c.modulus, inv, c.modulus.reduce(-static_cast<std::int64_t>(inv) * a));
    return act_on_coloring(f, c);
  }
  throw std::domain_error("trivial coloring has no polychromatic crossing");
}

inline std::set<Palette> orbit_of_set(const Palette& s, const Modulus& m) {
  std::set<Palette> out;
  for (const auto& f : affine_group(m)) out.insert(apply(f, s));
  return out;
}

inline bool same_orbit(const Palette& a, const Palette& b, const Modulus& m) {
  return a.size() == b.size() && find_map_between_sets(a, b, m).has_value();
}

}  // namespace foxcolor
