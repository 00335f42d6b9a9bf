#include "utsolve/unitriangular.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace utsolve {

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  AlgebraElement sum = g.u_ + h.u_;
  sum += g.u_ * h.u_;
  return GroupElement(std::move(sum));
}

GroupElement GroupElement::inverse() const {
  // Back substitution for (1+u) y = 1 column by column; y is unitriangular.
  const int m = size();
  const Residue p = modulus();
  AlgebraElement y(p, m);
  for (int col = 1; col < m; ++col) {
    for (int row = col - 1; row >= 0; --row) {
      std::uint64_t acc = u_(row, col);
      for (int k = row + 1; k < col; ++k) acc += std::uint64_t{u_(row, k)} * y(k, col) % p;
      y.set(row, col, -static_cast<long long>(acc % p));
    }
  }
  return GroupElement(std::move(y));
}

GroupElement pow(const GroupElement& g, long long k) {
  GroupElement base = k < 0 ? g.inverse() : g;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  GroupElement result = GroupElement::identity(g.modulus(), g.size());
  while (e > 0) {
    if (e & 1ULL) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

GroupElement pow_p_power(const GroupElement& g, int s) {
  if (s < 1) throw std::invalid_argument("pow_p_power needs s >= 1");
  const std::uint64_t p = g.modulus();
  // Anything at or past m edges is zero anyway; avoid overflowing p^s.
  long long length = 1;
  for (int i = 0; i < s && length < g.size(); ++i) length *= static_cast<long long>(p);
  return GroupElement(power_via_paths(g.algebra(), length));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

GroupElement commutator(std::span<const GroupElement> elements) {
  if (elements.size() < 2) throw std::invalid_argument("commutator needs at least two entries");
  GroupElement acc = commutator(elements[0], elements[1]);
  for (std::size_t i = 2; i < elements.size(); ++i) acc = commutator(acc, elements[i]);
  return acc;
}

int exponent_bound(Residue p, int m) {
  int t = 0;
  long long power = 1;
  while (power < m) {
    power *= p;
    ++t;
  }
  return t;
}

std::string format_matrix(const GroupElement& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (j > 0) os << ' ';
      os << g.entry(i, j);
    }
    os << '\n';
  }
  return os;
}

GroupElement matrix_from_rows(const std::vector<std::vector<long long>>& rows, Residue p) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) throw MatrixFormatError("empty matrix");
  AlgebraElement u(p, m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw MatrixFormatError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(m));
    }
    for (int j = 0; j < m; ++j) {
      const long long v = rows[i][j];
      if (v < 0 || v >= static_cast<long long>(p)) {
        throw MatrixFormatError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is not a residue mod " + std::to_string(p));
      }
      if (i == j && v != 1) throw MatrixFormatError("diagonal entry " + std::to_string(i + 1) + " is not 1");
      if (i > j && v != 0) {
        throw MatrixFormatError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") below the diagonal is nonzero");
      }
      if (i < j) u.set(i, j, v);
    }
  }
  return GroupElement(std::move(u));
}

GroupElement parse_matrix(std::string_view text, Residue p) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw MatrixFormatError("not an integer: '" + token + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return matrix_from_rows(rows, p);
}

}  // namespace utsolve
