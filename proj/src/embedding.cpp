#include "utsolve/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace utsolve {

std::string to_string(EmbeddingKind kind) { return kind == EmbeddingKind::Phi ? "phi" : "psi"; }

EmbeddingKind parse_embedding_kind(const std::string& text) {
  if (text == "phi") return EmbeddingKind::Phi;
  if (text == "psi") return EmbeddingKind::Psi;
  throw std::invalid_argument("unknown embedding kind '" + text + "' (expected phi or psi)");
}

namespace {

// Product of the transvections t'_{a(lo,j), a(lo+1,j)}, j = 1..q-1, between
// the interiors of two consecutive blocks (1-based block labels).
GroupElement interior_bridge(const PositionSet& pos, Residue p, int lo) {
  GroupElement g = GroupElement::identity(p, pos.m());
  for (int j = 1; j < pos.q(); ++j) {
    g *= GroupElement::transvection(p, pos.m(), pos.index_of_interior(lo, j),
                                    pos.index_of_interior(lo + 1, j));
  }
  return g;
}

GroupElement label_transvection(const PositionSet& pos, Residue p, int label) {
  return GroupElement::transvection(p, pos.m(), pos.index_of_label(label), pos.index_of_label(label + 1));
}

}  // namespace

EmbeddingDescriptor build_embedding(EmbeddingKind kind, int n, Residue p, int s) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("embedding needs n >= 2");
  if (s < 0) throw std::invalid_argument("embedding needs s >= 0");
  const auto q = static_cast<int>(int_pow(p, s));
  const PositionSet pos(n, q);

  EmbeddingDescriptor e{kind, n, p, s, q, pos.m(), {}};
  e.generator_images.reserve(static_cast<std::size_t>(n - 1));
  for (int label = 1; label < n; ++label) {
    GroupElement image = label_transvection(pos, p, label);
    if (kind == EmbeddingKind::Phi && label >= 2) image *= interior_bridge(pos, p, label - 1);
    if (kind == EmbeddingKind::Psi && label <= n - 2) image *= interior_bridge(pos, p, label);
    e.generator_images.push_back(std::move(image));
  }
  return e;
}

EmbeddingDescriptor build_embedding_for_resolution(EmbeddingKind kind, int n, Residue p, long long q) {
  require_prime(p);
  const auto s = q > 0 ? prime_power_exponent(static_cast<std::uint64_t>(q), p) : std::nullopt;
  if (!s) throw std::invalid_argument("resolution " + std::to_string(q) + " is not a power of " + std::to_string(p));
  return build_embedding(kind, n, p, *s);
}

namespace {

using Word = std::vector<GeneratorPower>;

Word inverse_word(const Word& w, Residue p) {
  Word out(w.rbegin(), w.rend());
  for (auto& letter : out) letter.coeff = neg_mod(letter.coeff, p);
  return out;
}

// Generator word for t_{row,col}(coeff).
Word expand_transvection(int row, int col, Residue coeff, Residue p) {
  if (col == row + 1) return {{row, coeff}};
  const Word a{{row, coeff}};
  const Word b = expand_transvection(row + 1, col, 1, p);
  Word out = inverse_word(a, p);
  const Word b_inv = inverse_word(b, p);
  out.insert(out.end(), b_inv.begin(), b_inv.end());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<GeneratorPower> decompose_to_generators(const GroupElement& g) {
  const int n = g.size();
  const Residue p = g.modulus();
  Word out;
  GroupElement rest = g;
  for (int d = 1; d < n; ++d) {
    for (int i = 0; i + d < n; ++i) {
      const Residue c = rest.entry(i, i + d);
      if (c == 0) continue;
      const Word piece = expand_transvection(i, i + d, c, p);
      out.insert(out.end(), piece.begin(), piece.end());
      // Peel t_{i,i+d}(c) off the left; only entries to the right of (i, i+d)
      // in row i change, all on later superdiagonals.
      rest = GroupElement::transvection(p, n, i, i + d, neg_mod(c, p)) * rest;
    }
  }
  return out;
}

GroupElement multiply_generators(const std::vector<GeneratorPower>& word, Residue p, int n) {
  GroupElement g = GroupElement::identity(p, n);
  for (const auto& letter : word) g *= GroupElement::transvection(p, n, letter.index, letter.index + 1, letter.coeff);
  return g;
}

GroupElement apply(const EmbeddingDescriptor& e, const GroupElement& g) {
  if (g.size() != e.n || g.modulus() != e.p) {
    throw std::invalid_argument("element of UT_" + std::to_string(g.size()) + "(F_" + std::to_string(g.modulus()) +
                                ") does not match embedding source UT_" + std::to_string(e.n) + "(F_" +
                                std::to_string(e.p) + ")");
  }
  GroupElement image = GroupElement::identity(e.p, e.m);
  for (const auto& letter : decompose_to_generators(g)) image *= pow(e.generator_images[letter.index], letter.coeff);
  return image;
}

}  // namespace utsolve
