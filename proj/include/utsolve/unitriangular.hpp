#pragma once

// The group UT_m(F_p), realized as {1 + u : u nil-triangular}.

#include <iosfwd>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utsolve/nil_algebra.hpp"

namespace utsolve {

/// The unitriangular matrix 1 + u.
class GroupElement {
 public:
  explicit GroupElement(AlgebraElement u) : u_(std::move(u)) {}

  static GroupElement identity(Residue p, int m) { return GroupElement(AlgebraElement(p, m)); }
  /// t_{row,col}(coeff) = 1 + coeff e_{row,col}.
  static GroupElement transvection(Residue p, int m, int row, int col, Residue coeff = 1) {
    return GroupElement(AlgebraElement::unit(p, m, row, col, coeff));
  }

  const AlgebraElement& algebra() const { return u_; }
  AlgebraElement& algebra() { return u_; }
  Residue modulus() const { return u_.modulus(); }
  int size() const { return u_.size(); }

  /// Matrix entry, including the unit diagonal.
  Residue entry(int row, int col) const { return row == col ? 1 : u_(row, col); }
  bool is_identity() const { return u_.is_zero(); }

  /// (1+u)(1+v) = 1 + (u + v + uv).
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  GroupElement& operator*=(const GroupElement& h) { return *this = *this * h; }
  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  AlgebraElement u_;
};

/// g^k by square-and-multiply; negative k goes through the inverse.
GroupElement pow(const GroupElement& g, long long k);

/// g^(p^s) computed as 1 + u^(p^s) through the path-sum power.
GroupElement pow_p_power(const GroupElement& g, int s);

/// [a, b] = a^-1 b^-1 a b.
GroupElement commutator(const GroupElement& a, const GroupElement& b);
/// Left-normed [a1, a2, ..., ak] = [[a1, a2], ..., ak]; needs k >= 2.
GroupElement commutator(std::span<const GroupElement> elements);

/// Largest i with g in the i-th term of the lower central series.
inline Level central_series_level(const GroupElement& g) { return filtration_level(g.algebra()); }

/// Smallest t with p^t >= m; p^t annihilates UT_m(F_p).
int exponent_bound(Residue p, int m);

// Matrix text format: m lines of m space-separated residues, row-major, unit
// diagonal, zeros below it.

std::string format_matrix(const GroupElement& g);
/// Parses a full matrix; its size is the number of non-blank lines. Throws
/// MatrixFormatError on malformed input.
GroupElement parse_matrix(std::string_view text, Residue p);

struct MatrixFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds an element from dense rows, validating unitriangularity and residues.
GroupElement matrix_from_rows(const std::vector<std::vector<long long>>& rows, Residue p);

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

}  // namespace utsolve
