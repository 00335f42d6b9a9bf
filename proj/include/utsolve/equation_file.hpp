#pragma once

// Line-oriented equation files:
//
//   p 3
//   n 3
//   matrix g1
//   1 1 0
//   0 1 2
//   0 0 1
//   word x g1 x g2
//
// Blank lines and lines starting with '#' are ignored.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "utsolve/equation.hpp"

namespace utsolve {

struct EquationFile {
  Residue p = 0;
  int n = 0;
  /// In declaration order.
  std::vector<std::pair<std::string, GroupElement>> matrices;
  std::string word_text;
  int word_line = 0;
  int word_column = 0;  // column of the first character of word_text

  CoefficientTable table() const;
  /// Parses the word; errors carry file line and column.
  Word word() const;
};

/// Throws ParseError with 1-based line and column.
EquationFile parse_equation_file(std::string_view text);
EquationFile load_equation_file(const std::string& path);

}  // namespace utsolve
