#pragma once

// Exact integer matrices, Smith Normal Form and the link determinant.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace foxcolor {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < y.cols_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += q * row[src]
  void add_row(int dst, int src, const BigInt& q) {
    for (int j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }
  void add_col(int dst, int src, const BigInt& q) {
    for (int i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix U, D, V;  // U * A * V == D
};

/// Smith Normal Form with unimodular transforms, pivoting on the entry of
/// smallest absolute value.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  SmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& A = s.D;
  for (int t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j)
          if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < abs(A(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return s;
      A.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      A.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (A(i, t) == 0) continue;
        BigInt q = A(i, t) / A(t, t);
        A.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < c; ++j) {
        if (A(t, j) == 0) continue;
        BigInt q = A(t, j) / A(t, t);
        A.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row holding a non-multiple into the pivot row.
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      A.add_row(t, bad, 1);
      s.U.add_row(t, bad, 1);
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

/// Diagonal of a Smith form, padded with zeros to the column count.
inline std::vector<BigInt> smith_diagonal(const IntMatrix& d) {
  std::vector<BigInt> out(d.cols(), 0);
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out[i] = d(i, i);
  return out;
}

struct SNFSummary {
  std::vector<BigInt> diagonal;
  BigInt det_link;

  /// Number of diagonal entries divisible by p (zeros included).
  int nullity_of(int p) const {
    if (p < 2) throw std::invalid_argument("nullity needs p >= 2");
    int n = 0;
    for (const auto& x : diagonal)
      if (x % p == 0) ++n;
    return n;
  }
};

inline SNFSummary summarize(std::vector<BigInt> diagonal) {
  SNFSummary s{std::move(diagonal), 1};
  bool skipped = false;
  for (const auto& x : s.diagonal) {
    if (x == 0 && !skipped) {
      skipped = true;
      continue;
    }
    s.det_link *= x;
  }
  s.det_link = abs(s.det_link);
  return s;
}

/// Rows are crossings, columns are arcs: +2 at the over-arc and -1 at each
/// under-arc, summed where they coincide.
inline IntMatrix coloring_matrix(const Diagram& d) {
  ArcPartition p = arcs(d);
  IntMatrix m(d.crossing_count(), p.arc_count);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    m(i, p.arc_of_edge[x.over_a()]) += 2;
    m(i, p.arc_of_edge[x.under_in()]) -= 1;
    m(i, p.arc_of_edge[x.under_out()]) -= 1;
  }
  return m;
}

inline SNFSummary link_determinant(const Diagram& d) {
  return summarize(smith_diagonal(smith_normal_form(coloring_matrix(d)).D));
}

}  // namespace foxcolor
