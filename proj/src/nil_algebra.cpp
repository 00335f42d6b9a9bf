#include "utsolve/nil_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace utsolve {

PositionSet::PositionSet(int n, int q) : n_(n), q_(q) {
  if (n < 2) throw std::invalid_argument("position set needs n >= 2");
  if (q < 1) throw std::invalid_argument("position set needs q >= 1");
}

int PositionSet::index_of_label(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("label out of range");
  return (i - 1) * q_;
}

int PositionSet::index_of_interior(int i, int j) const {
  if (i < 1 || i >= n_ || j < 1 || j >= q_) throw std::out_of_range("interior label out of range");
  return (i - 1) * q_ + j;
}

std::string PositionSet::label(int index) const {
  if (index < 0 || index >= m()) throw std::out_of_range("index out of range");
  int block = index / q_;
  int offset = index % q_;
  if (offset == 0) return std::to_string(block + 1);
  return "a(" + std::to_string(block + 1) + "," + std::to_string(offset) + ")";
}

AlgebraElement::AlgebraElement(Residue p, int m)
    : p_(p), m_(m), coeffs_(static_cast<std::size_t>(m) * m, 0) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (m < 1) throw std::invalid_argument("algebra size must be positive");
}

AlgebraElement AlgebraElement::unit(Residue p, int m, int row, int col, Residue coeff) {
  AlgebraElement e(p, m);
  e.set(row, col, coeff);
  return e;
}

void AlgebraElement::set(int row, int col, long long value) {
  if (row < 0 || col >= m_ || row >= col) {
    throw std::out_of_range("position (" + std::to_string(row) + "," + std::to_string(col) +
                            ") is not strictly upper triangular");
  }
  coeffs_[static_cast<std::size_t>(row) * m_ + col] = reduce(value, p_);
}

void AlgebraElement::add_at(int row, int col, long long delta) {
  set(row, col, static_cast<long long>((*this)(row, col)) + reduce(delta, p_));
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::vector<std::pair<int, int>> AlgebraElement::support() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      if ((*this)(i, j) != 0) out.emplace_back(i, j);
    }
  }
  return out;
}

void AlgebraElement::require_compatible(const AlgebraElement& other) const {
  if (p_ != other.p_) throw std::invalid_argument("algebra elements over different fields");
  if (m_ != other.m_) throw std::invalid_argument("algebra elements of different sizes");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = add_mod(coeffs_[k], other.coeffs_[k], p_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = sub_mod(coeffs_[k], other.coeffs_[k], p_);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Residue scalar) {
  scalar %= p_;
  for (auto& c : coeffs_) c = mul_mod(c, scalar, p_);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& c : r.coeffs_) c = neg_mod(c, p_);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_compatible(b);
  const int m = a.m_;
  AlgebraElement r(a.p_, m);
  // Strictly upper: only i < k < j contributes to (i, j).
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (int j = k + 1; j < m; ++j) {
        const Residue bkj = b(k, j);
        if (bkj == 0) continue;
        auto& cell = r.coeffs_[static_cast<std::size_t>(i) * m + j];
        cell = static_cast<Residue>((cell + std::uint64_t{aik} * bkj) % a.p_);
      }
    }
  }
  return r;
}

Level filtration_level(const AlgebraElement& a) {
  const int m = a.size();
  for (int d = 1; d < m; ++d) {
    for (int i = 0; i + d < m; ++i) {
      if (a(i, i + d) != 0) return d;
    }
  }
  return kInfiniteLevel;
}

std::vector<SupportPath> paths_ending_at(const AlgebraElement& a, int end, int length) {
  const int m = a.size();
  if (end < 0 || end >= m) throw std::out_of_range("path end out of range");
  if (length < 1) throw std::invalid_argument("path length must be positive");
  std::vector<SupportPath> out;
  if (length >= m) return out;

  // reach[r][v]: some path with r edges ends at v.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(length), std::vector<char>(m, 0));
  std::fill(reach[0].begin(), reach[0].end(), 1);
  for (int r = 1; r < length; ++r) {
    for (int v = 0; v < m; ++v) {
      for (int w = 0; w < v && !reach[r][v]; ++w) {
        if (a(w, v) != 0 && reach[r - 1][w]) reach[r][v] = 1;
      }
    }
  }

  std::vector<int> reversed{end};
  auto walk = [&](auto&& self, int vertex, int remaining, Residue weight) -> void {
    if (remaining == 0) {
      SupportPath path;
      path.vertices.assign(reversed.rbegin(), reversed.rend());
      path.weight = weight;
      out.push_back(std::move(path));
      return;
    }
    for (int prev = 0; prev < vertex; ++prev) {
      const Residue c = a(prev, vertex);
      if (c == 0 || !reach[remaining - 1][prev]) continue;
      reversed.push_back(prev);
      self(self, prev, remaining - 1, mul_mod(weight, c, a.modulus()));
      reversed.pop_back();
    }
  };
  walk(walk, end, length, 1 % a.modulus());

  std::sort(out.begin(), out.end(),
            [](const SupportPath& x, const SupportPath& y) { return x.vertices < y.vertices; });
  return out;
}

int max_path_length(const AlgebraElement& a) {
  const int m = a.size();
  // longest[v]: longest path starting at v.
  std::vector<int> longest(m, 0);
  int best = 0;
  for (int v = m - 1; v >= 0; --v) {
    for (int w = v + 1; w < m; ++w) {
      if (a(v, w) != 0) longest[v] = std::max(longest[v], longest[w] + 1);
    }
    best = std::max(best, longest[v]);
  }
  return best;
}

AlgebraElement power_via_paths(const AlgebraElement& a, long long length) {
  if (length < 1) throw std::invalid_argument("power must be positive");
  const int m = a.size();
  const Residue p = a.modulus();
  AlgebraElement result(p, m);
  if (length >= m) return result;

  // For each end vertex, weight[v] accumulates the total weight of all
  // v->end paths with k edges, extended one edge at a time backwards.
  std::vector<Residue> weight(m), next(m);
  for (int end = 1; end < m; ++end) {
    std::fill(weight.begin(), weight.end(), 0);
    weight[end] = 1;
    for (long long k = 0; k < length; ++k) {
      std::fill(next.begin(), next.end(), 0);
      for (int v = 0; v < end; ++v) {
        std::uint64_t acc = 0;
        for (int w = v + 1; w <= end; ++w) {
          if (weight[w] != 0) acc += std::uint64_t{a(v, w)} * weight[w] % p;
        }
        next[v] = static_cast<Residue>(acc % p);
      }
      weight.swap(next);
    }
    for (int v = 0; v < end; ++v) {
      if (weight[v] != 0) result.set(v, end, weight[v]);
    }
  }
  return result;
}

}  // namespace utsolve
