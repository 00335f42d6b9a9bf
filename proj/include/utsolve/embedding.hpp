#pragma once

// Embeddings of UT_n(F_p) into UT_m(F_p), m = (n-1)q + 1, q = p^s, in which
// every element of the image has a q-th root.
//
// Both embeddings are fixed on the generators t_{i,i+1}:
//   PHI: t_{1,2} goes to a single transvection; t_{i,i+1} (i >= 2) goes to a
//        product of q commuting transvections of length q.
//   PSI: the mirror image, with t_{n-1,n} going to a single transvection.
// Arbitrary elements are mapped through a generator word.

#include <string>
#include <vector>

#include "utsolve/unitriangular.hpp"

namespace utsolve {

enum class EmbeddingKind { Phi, Psi };

std::string to_string(EmbeddingKind kind);
/// Accepts "phi" / "psi"; throws std::invalid_argument otherwise.
EmbeddingKind parse_embedding_kind(const std::string& text);

struct EmbeddingDescriptor {
  EmbeddingKind kind;
  int n;
  Residue p;
  int s;
  int q;
  int m;
  /// generator_images[i] is the image of t_{i,i+1} (0-based i, 0 <= i < n-1).
  std::vector<GroupElement> generator_images;

  PositionSet positions() const { return PositionSet(n, q); }
};

/// Builds an embedding for q = p^s. s = 0 gives the identity embedding.
EmbeddingDescriptor build_embedding(EmbeddingKind kind, int n, Residue p, int s);
/// Same, taking q directly; throws std::invalid_argument unless q is a power of p.
EmbeddingDescriptor build_embedding_for_resolution(EmbeddingKind kind, int n, Residue p, long long q);

/// One letter t_{index,index+1}(coeff) of a generator word.
struct GeneratorPower {
  int index;
  Residue coeff;
  friend bool operator==(const GeneratorPower&, const GeneratorPower&) = default;
};

/// A word in the generators whose product is exactly g. Eliminates entries
/// superdiagonal by superdiagonal, left to right within a diagonal, and
/// expands t_{i,j}(c) through [t_{i,i+1}(c), t_{i+1,j}(1)] = t_{i,j}(c).
std::vector<GeneratorPower> decompose_to_generators(const GroupElement& g);

/// Product of the generator word, in UT_n.
GroupElement multiply_generators(const std::vector<GeneratorPower>& word, Residue p, int n);

/// Image of g under the embedding.
GroupElement apply(const EmbeddingDescriptor& e, const GroupElement& g);

}  // namespace utsolve
