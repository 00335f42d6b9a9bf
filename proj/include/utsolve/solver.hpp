#pragma once

// Constructive solver for regular equations u(x) = 1 over UT_n(F_p).
//
// For exponent eps = r p^s (gcd(r, p) = 1, s >= 1) the equation is solved in
// UT_m(F_p), m = (n-1)p^s + 1, into which UT_n(F_p) is embedded by PHI or
// PSI. The solution is built superdiagonal by superdiagonal: starting from a
// chain element whose q-th power matches u(1) modulo the (q+1)-th term of the
// central series, each level is fixed by adding one matrix unit per position,
// right to left (PHI) or left to right (PSI). Exponents coprime to p are
// solved inside UT_n by exhaustive search.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "utsolve/embedding.hpp"
#include "utsolve/equation.hpp"
#include "utsolve/oracle.hpp"

namespace utsolve {

/// Which sufficient condition on u(1) = (a_ij) applies.
///  One:   a_{i,i+1} != 0 for i = 2..n-1 (PHI embedding)
///  Two:   a_{i,i+1} != 0 for i = 1..n-2 (PSI embedding)
///  Three: u(1) is central                (PHI embedding)
///  InGroup: exponent coprime to p, solved inside UT_n.
enum class SolveCase { One, Two, Three, InGroup, Unsupported };

std::string to_string(SolveCase c);

enum class SolveErrc {
  NotRegular,
  UnsupportedCase,
  CorrectionStuck,
  InvariantViolated,
  VerifyFailed,
  OracleExhausted,
};

std::string to_string(SolveErrc code);

class SolveError : public std::runtime_error {
 public:
  SolveError(SolveErrc code, const std::string& message) : std::runtime_error(message), code_(code) {}
  SolveErrc code() const { return code_; }

 private:
  SolveErrc code_;
};

/// One matrix unit added during the level loop. Positions are 0-based linear
/// indices in UT_m. The added edge is (alpha, tau) for PHI, (tau, beta) for PSI.
struct CorrectionStep {
  int level;
  int j;  // 1-based position on the superdiagonal, counted from the left
  int alpha;
  int beta;
  int tau;
  Residue weight;
};

/// r k = 1 (mod p^t), used for the substitution x = y^k.
struct Bezout {
  long long r;
  int t;
  long long k;
};

/// How the reduced equation y^q = u(1) v(y^k) relates to the original one.
/// The original solution is root^power().
struct SubstitutionRecord {
  bool inverted = false;
  std::optional<Bezout> bezout;

  long long power() const { return (inverted ? -1 : 1) * (bezout ? bezout->k : 1); }
};

struct SolveReport {
  GroupElement solution;
  /// Absent when the equation was solved inside the coefficient group.
  std::optional<EmbeddingDescriptor> embedding;
  SolveCase solve_case;
  long long epsilon;
  int s;
  std::vector<CorrectionStep> trace;
  SubstitutionRecord substitutions;
  /// Solution of the reduced equation; solution = root^substitutions.power().
  GroupElement root;
  bool verified = false;
};

struct SolveOptions {
  std::uint64_t oracle_cap = kDefaultEnumerationCap;
  unsigned oracle_threads = 1;
};

/// First matching condition in the order Three, One, Two.
SolveCase detect_case(const GroupElement& u1);

/// The chain element x_{q+1} of UT_m:
///  One:   block i has weight a_{i,i+1} on its first edge, 1 on the others;
///  Two:   weight a_{i,i+1} on the last edge of block i, 1 on the others;
///  Three: first edges absent, 1 on the others.
GroupElement initial_element(SolveCase c, const GroupElement& u1, const EmbeddingDescriptor& e);

/// The path of q-1 generator edges closing a correction at (alpha, beta).
/// PHI: tau = beta-(q-1), the path runs tau -> beta, the new edge is (alpha, tau).
/// PSI: tau = alpha+(q-1), the path runs alpha -> tau, the new edge is (tau, beta).
struct CorrectionPath {
  int tau;
  int path_begin;
  int path_end;
  int edge_row;
  int edge_col;

  /// Product of the current generator-edge weights along the path.
  Residue weight(const AlgebraElement& current) const;
};

/// Throws std::logic_error when the position is too low for such a path.
CorrectionPath correction_path(const EmbeddingDescriptor& e, int alpha, int beta);

/// Solves an equation whose exponent is +-p^s, s >= 1.
SolveReport solve_prime_exponent(const Word& w);

/// Solves any regular equation: in-group search when gcd(eps, p) = 1,
/// otherwise the exponent is reduced to p^s by x = y^k and solved in UT_m.
SolveReport solve_regular(const Word& w, const SolveOptions& options = {});

/// Entry point for UT_3(F_p), where one of the three conditions always holds.
SolveReport solve_heisenberg(const Word& w, const SolveOptions& options = {});

/// k in [1, modulus) with a k = 1 (mod modulus), by the extended Euclidean
/// algorithm. Throws std::domain_error when gcd(a, modulus) != 1.
long long inverse_modulo(long long a, long long modulus);

}  // namespace utsolve
