#pragma once

// The nil-triangular algebra over F_p on an ordered index set, its support
// graph, and path-sum powers.
//
// Indices are 0-based linear positions 0..m-1 throughout the library; the
// 1-based labels of the mathematical notation only appear in text I/O.

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "utsolve/field.hpp"

namespace utsolve {

/// Filtration / central-series level. The zero element lies in every term of
/// the filtration, represented by kInfiniteLevel.
using Level = int;
inline constexpr Level kInfiniteLevel = std::numeric_limits<int>::max();

/// Saturating sum of two levels.
inline Level add_levels(Level a, Level b) {
  if (a == kInfiniteLevel || b == kInfiniteLevel) return kInfiniteLevel;
  return a + b;
}

/// The ordered index set {1, a(1,1), .., a(1,q-1), 2, .., n} refining the
/// positions of UT_n into m = (n-1)q + 1 positions. The rational labels are
/// never materialized; a label is a (block, offset) pair.
class PositionSet {
 public:
  PositionSet(int n, int q);

  int n() const { return n_; }
  int q() const { return q_; }
  int m() const { return (n_ - 1) * q_ + 1; }

  /// Linear index of the original label i (1-based, 1..n).
  int index_of_label(int i) const;
  /// Linear index of the interior label a(i,j), 1 <= i < n, 1 <= j < q.
  int index_of_interior(int i, int j) const;
  /// Human-readable label of a linear index: "3" or "a(2,1)".
  std::string label(int index) const;

 private:
  int n_;
  int q_;
};

/// Strictly upper-triangular m x m matrix over F_p, stored densely.
class AlgebraElement {
 public:
  AlgebraElement(Residue p, int m);

  static AlgebraElement unit(Residue p, int m, int row, int col, Residue coeff = 1);

  Residue modulus() const { return p_; }
  int size() const { return m_; }

  /// Coefficient at (row, col); zero on and below the diagonal.
  Residue operator()(int row, int col) const {
    return row < col ? coeffs_[static_cast<std::size_t>(row) * m_ + col] : 0;
  }
  /// Requires row < col; the value is reduced mod p.
  void set(int row, int col, long long value);
  void add_at(int row, int col, long long delta);

  bool is_zero() const;
  /// Nonzero positions, row-major.
  std::vector<std::pair<int, int>> support() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Residue scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, Residue s) { return a *= s; }
  AlgebraElement operator-() const;
  /// Matrix product; the bilinear extension of e(a,b) e(b,c) = e(a,c).
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void require_compatible(const AlgebraElement& other) const;

  Residue p_;
  int m_;
  std::vector<Residue> coeffs_;
};

/// Largest i with a in the i-th filtration term, i.e. the index of the first
/// nonzero superdiagonal; kInfiniteLevel for zero.
Level filtration_level(const AlgebraElement& a);

/// A directed path in the support graph with the product of its edge weights.
struct SupportPath {
  std::vector<int> vertices;
  Residue weight = 0;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const SupportPath&, const SupportPath&) = default;
};

/// All paths of exactly `length` edges in the support graph of `a` ending at
/// `end`, in lexicographic order of their vertex sequences.
std::vector<SupportPath> paths_ending_at(const AlgebraElement& a, int end, int length);

/// Longest path length in the support graph (0 for the zero element).
int max_path_length(const AlgebraElement& a);

/// a^length computed as a path sum: the (i,j) coefficient is the total weight
/// of all i->j paths with `length` edges.
AlgebraElement power_via_paths(const AlgebraElement& a, long long length);

}  // namespace utsolve
