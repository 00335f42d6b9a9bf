#pragma once

// Equations u(x) = 1 over UT_n(F_p) with one unknown: words in the unknown
// and named coefficients, their evaluation, and the collecting process that
// rewrites u(x) as x^eps * u(1) * v(x) with v a product of left-normed
// commutators.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "utsolve/embedding.hpp"
#include "utsolve/unitriangular.hpp"

namespace utsolve {

using CoefficientTable = std::map<std::string, GroupElement>;

/// A syntax or binding error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

struct UnknownLetter {
  int sign;  // +1 or -1
  friend bool operator==(const UnknownLetter&, const UnknownLetter&) = default;
};

struct CoefficientLetter {
  std::string name;
  friend bool operator==(const CoefficientLetter&, const CoefficientLetter&) = default;
};

using Letter = std::variant<UnknownLetter, CoefficientLetter>;

struct Word {
  Residue p;
  int n;
  std::vector<Letter> letters;
  CoefficientTable coefficients;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Parses whitespace-separated tokens "x", "x^-1" and coefficient names.
/// Every name must be bound in `table`; all coefficients must lie in UT_n(F_p).
Word parse_word(std::string_view text, const CoefficientTable& table, Residue p, int n);

std::string render(const Word& w);

/// Signed number of occurrences of the unknown.
long long exponent(const Word& w);

/// Replaces each x^s by x^(k s), written out as |k| letters. Throws for k = 0.
Word substitute(const Word& w, long long k);

/// Coefficients mapped into the overgroup.
CoefficientTable lift_coefficients(const CoefficientTable& table, const EmbeddingDescriptor& lift);

/// u(x) with the unknown replaced by x; coefficients are lifted first when
/// `lift` is given, in which case x lives in UT_m.
GroupElement evaluate(const Word& w, const GroupElement& x, const EmbeddingDescriptor* lift = nullptr);
/// Same, with coefficients already resolved into x's group.
GroupElement evaluate_resolved(const Word& w, const CoefficientTable& resolved, const GroupElement& x);

class Atom;
using AtomPtr = std::shared_ptr<const Atom>;

/// A node of a commutator expression: a named coefficient, a power of the
/// unknown, or the commutator of two nodes. Nodes are immutable and shared.
class Atom {
 public:
  enum class Kind { Base, UnknownPower, Commutator };

  static AtomPtr base(std::string name);
  static AtomPtr unknown_power(long long power);
  static AtomPtr commutator(AtomPtr left, AtomPtr right);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  long long power() const { return power_; }
  const AtomPtr& left() const { return left_; }
  const AtomPtr& right() const { return right_; }

  /// Number of leaves.
  int weight() const;

 private:
  Atom(Kind kind, std::string name, long long power, AtomPtr left, AtomPtr right);

  Kind kind_;
  std::string name_;
  long long power_;
  AtomPtr left_;
  AtomPtr right_;
};

/// Left-normed bracket notation, e.g. "[g1,x^-1,g2]".
std::string render(const Atom& atom);

/// Exponent sum of the unknown in the fully expanded group word of the atom.
long long unknown_exponent_sum(const Atom& atom);

/// Flattens a left-normed commutator into its leaves: [a,b,c] -> a, b, c.
std::vector<AtomPtr> leaves(const AtomPtr& atom);

/// Evaluates atoms at a fixed x, memoizing shared subtrees.
class AtomEvaluator {
 public:
  /// `resolved` must outlive the evaluator and live in the same group as x.
  AtomEvaluator(const CoefficientTable& resolved, GroupElement x);

  const GroupElement& value(const AtomPtr& atom);
  const GroupElement& unknown_power(long long k);

 private:
  const CoefficientTable& resolved_;
  GroupElement x_;
  std::unordered_map<const Atom*, GroupElement> memo_;
  std::map<long long, GroupElement> powers_;
};

/// u(x) = x^epsilon * u1 * prod(tail), with u1 = g1 g2 ... in word order.
struct NormalForm {
  Residue p;
  int n;
  long long epsilon;
  GroupElement u1;
  std::vector<std::string> u1_factors;
  std::vector<AtomPtr> tail;
  CoefficientTable coefficients;
};

/// Two-phase collecting process.
///  1. Unknown letters move left past everything else via A x = x A [A, x].
///  2. Plain coefficients move left past commutators via C g = g C [C, g].
/// The new commutator is placed directly behind the atom it came from.
NormalForm collect(const Word& w);

/// u1 * v(x), i.e. x^-epsilon when x solves the equation.
GroupElement evaluate_normal_form(const NormalForm& nf, const GroupElement& x,
                                  const EmbeddingDescriptor* lift = nullptr);
GroupElement evaluate_normal_form_resolved(const NormalForm& nf, const CoefficientTable& resolved,
                                           const GroupElement& x);
/// v(x) alone.
GroupElement evaluate_tail_resolved(const NormalForm& nf, const CoefficientTable& resolved, const GroupElement& x);

/// x -> x^k inside the normal form: epsilon scales by k and every x^s in the
/// tail becomes x^(k s). Throws for k = 0.
NormalForm substitute(const NormalForm& nf, long long k);

/// Exponent sum of the unknown over the tail, always 0.
long long tail_exponent(const NormalForm& nf);

/// "eps=2; u1=g1*g2; tail=[g1,x][g1,x,g2]"
std::string render(const NormalForm& nf);

}  // namespace utsolve
