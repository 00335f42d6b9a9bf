#pragma once

// Test-only helpers: random generators and an independent dense-matrix
// oracle that never goes through the library's algebra code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "utsolve/embedding.hpp"
#include "utsolve/equation.hpp"
#include "utsolve/unitriangular.hpp"

namespace testing {

using utsolve::AlgebraElement;
using utsolve::GroupElement;
using utsolve::Residue;

using Dense = std::vector<std::vector<long long>>;

inline Dense dense_identity(int m) {
  Dense d(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i) d[i][i] = 1;
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b, long long p) {
  const std::size_t m = a.size();
  Dense c(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

inline Dense to_dense(const GroupElement& g) {
  Dense d(g.size(), std::vector<long long>(g.size(), 0));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) d[i][j] = g.entry(i, j);
  return d;
}

inline Dense to_dense(const AlgebraElement& a) {
  Dense d(a.size(), std::vector<long long>(a.size(), 0));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) d[i][j] = a(i, j);
  return d;
}

inline AlgebraElement random_algebra(Residue p, int m, std::mt19937_64& rng, int min_level = 1, double density = 1.0) {
  AlgebraElement u(p, m);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  for (int i = 0; i < m; ++i)
    for (int j = i + min_level; j < m; ++j)
      if (keep(rng) < density) u.set(i, j, static_cast<long long>(rng() % p));
  return u;
}

inline GroupElement random_element(Residue p, int m, std::mt19937_64& rng, int min_level = 1) {
  return GroupElement(random_algebra(p, m, rng, min_level));
}

/// Images of e_{i,i+1} under the algebra map behind PHI / PSI, written out
/// from the block description directly.
inline std::vector<Dense> closed_form_generator_units(utsolve::EmbeddingKind kind, int n, int q) {
  const int m = (n - 1) * q + 1;
  std::vector<Dense> units;
  for (int i = 0; i + 1 < n; ++i) {
    Dense a(m, std::vector<long long>(m, 0));
    if (kind == utsolve::EmbeddingKind::Phi) {
      if (i == 0) {
        a[0][q] = 1;
      } else {
        for (int k = (i - 1) * q + 1; k <= i * q; ++k) a[k][k + q] = 1;
      }
    } else {
      if (i == n - 2) {
        a[(n - 2) * q][(n - 1) * q] = 1;
      } else {
        for (int k = i * q; k < (i + 1) * q; ++k) a[k][k + q] = 1;
      }
    }
    units.push_back(a);
  }
  return units;
}

/// 1 + sum_{i<j} g_ij A_i A_{i+1} ... A_{j-1}.
inline Dense closed_form_embedding(utsolve::EmbeddingKind kind, const GroupElement& g, Residue p, int q) {
  const int n = g.size();
  const int m = (n - 1) * q + 1;
  const auto units = closed_form_generator_units(kind, n, q);
  Dense out = dense_identity(m);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.entry(i, j) == 0) continue;
      Dense prod = units[i];
      for (int k = i + 1; k < j; ++k) prod = dense_mul(prod, units[k], p);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) out[r][c] = (out[r][c] + g.entry(i, j) * prod[r][c]) % p;
    }
  }
  return out;
}

/// A random word with the given exponent, `extra` cancelling pairs, and
/// `coefficients` random named coefficients in UT_n(F_p).
inline utsolve::Word random_word(Residue p, int n, long long exponent, int extra, int coefficients,
                                 std::mt19937_64& rng) {
  std::vector<utsolve::Letter> letters;
  const long long plus = (exponent > 0 ? exponent : 0) + extra;
  const long long minus = (exponent < 0 ? -exponent : 0) + extra;
  for (long long i = 0; i < plus; ++i) letters.emplace_back(utsolve::UnknownLetter{+1});
  for (long long i = 0; i < minus; ++i) letters.emplace_back(utsolve::UnknownLetter{-1});
  utsolve::CoefficientTable table;
  for (int c = 0; c < coefficients; ++c) {
    const std::string name = "g" + std::to_string(c + 1);
    table.emplace(name, random_element(p, n, rng));
    letters.emplace_back(utsolve::CoefficientLetter{name});
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return utsolve::Word{p, n, std::move(letters), std::move(table)};
}

}  // namespace testing
