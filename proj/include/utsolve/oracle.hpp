#pragma once

// Brute-force ground truth over small unitriangular groups.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "utsolve/equation.hpp"

namespace utsolve {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |UT_m(F_p)| = p^(m(m-1)/2), or nothing if it does not fit in 64 bits.
std::optional<std::uint64_t> group_order(Residue p, int m);

/// The element with the given index in lexicographic coefficient order:
/// positions (i,j), i < j, row-major, the first position most significant.
GroupElement element_at(Residue p, int m, std::uint64_t index);

/// Every element of UT_m(F_p) exactly once, in lexicographic order.
class Enumeration {
 public:
  class iterator {
   public:
    using value_type = GroupElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Enumeration* owner, std::uint64_t index) : owner_(owner), index_(index) {}

    GroupElement operator*() const { return element_at(owner_->p_, owner_->m_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    std::uint64_t index() const { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const Enumeration* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }
  std::uint64_t size() const { return size_; }

 private:
  friend Enumeration enumerate(Residue p, int m, std::uint64_t cap);
  Enumeration(Residue p, int m, std::uint64_t size) : p_(p), m_(m), size_(size) {}

  Residue p_;
  int m_;
  std::uint64_t size_;
};

/// Throws CapExceeded when the group has more than `cap` elements.
Enumeration enumerate(Residue p, int m, std::uint64_t cap = kDefaultEnumerationCap);

enum class SearchMode { Exhaustive, Random };

struct SearchSpec {
  Word word;
  /// Search UT_m of the embedding when set, UT_n of the word otherwise.
  std::optional<EmbeddingDescriptor> lift{};
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Exhaustive search may split the range; the answer does not depend on it.
  unsigned threads = 1;
};

/// First element (enumeration order, or draw order in random mode) at which
/// the word evaluates to the identity.
std::optional<GroupElement> brute_solve(const SearchSpec& spec);

}  // namespace utsolve
