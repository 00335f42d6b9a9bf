#include "utsolve/solver.hpp"

#include <cstdlib>

namespace utsolve {

std::string to_string(SolveCase c) {
  switch (c) {
    case SolveCase::One:
      return "1";
    case SolveCase::Two:
      return "2";
    case SolveCase::Three:
      return "3";
    case SolveCase::InGroup:
      return "in-group";
    case SolveCase::Unsupported:
      return "unsupported";
  }
  return "?";
}

std::string to_string(SolveErrc code) {
  switch (code) {
    case SolveErrc::NotRegular:
      return "not regular";
    case SolveErrc::UnsupportedCase:
      return "unsupported";
    case SolveErrc::CorrectionStuck:
      return "correction stuck";
    case SolveErrc::InvariantViolated:
      return "invariant violated";
    case SolveErrc::VerifyFailed:
      return "verification failed";
    case SolveErrc::OracleExhausted:
      return "oracle exhausted";
  }
  return "?";
}

long long inverse_modulo(long long a, long long modulus) {
  long long old_r = ((a % modulus) + modulus) % modulus, r = modulus;
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error(std::to_string(a) + " is not invertible mod " + std::to_string(modulus));
  return ((old_s % modulus) + modulus) % modulus;
}

SolveCase detect_case(const GroupElement& u1) {
  const int n = u1.size();
  bool central = true;
  for (int i = 0; i < n && central; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (u1.entry(i, j) != 0 && !(i == 0 && j == n - 1)) {
        central = false;
        break;
      }
    }
  }
  if (central) return SolveCase::Three;
  auto nonzero_steps = [&](int first, int last) {
    for (int i = first; i <= last; ++i) {
      if (u1.entry(i, i + 1) == 0) return false;
    }
    return true;
  };
  if (nonzero_steps(1, n - 2)) return SolveCase::One;
  if (nonzero_steps(0, n - 3)) return SolveCase::Two;
  return SolveCase::Unsupported;
}

namespace {

EmbeddingKind embedding_for(SolveCase c) { return c == SolveCase::Two ? EmbeddingKind::Psi : EmbeddingKind::Phi; }

}  // namespace

GroupElement initial_element(SolveCase c, const GroupElement& u1, const EmbeddingDescriptor& e) {
  if (c != SolveCase::One && c != SolveCase::Two && c != SolveCase::Three) {
    throw std::invalid_argument("initial element needs case 1, 2 or 3");
  }
  if (e.kind != embedding_for(c)) throw std::invalid_argument("embedding kind does not match case " + to_string(c));
  if (u1.size() != e.n || u1.modulus() != e.p) throw std::invalid_argument("u(1) does not match the embedding");
  AlgebraElement u(e.p, e.m);
  for (int block = 0; block + 1 < e.n; ++block) {
    const Residue step = u1.entry(block, block + 1);
    for (int j = 0; j < e.q; ++j) {
      Residue w = 1;
      if (c == SolveCase::One && j == 0) w = step;
      if (c == SolveCase::Two && j == e.q - 1) w = step;
      if (c == SolveCase::Three && j == 0) w = 0;
      const int v = block * e.q + j;
      u.set(v, v + 1, w);
    }
  }
  return GroupElement(std::move(u));
}

Residue CorrectionPath::weight(const AlgebraElement& current) const {
  Residue w = 1 % current.modulus();
  for (int v = path_begin; v < path_end; ++v) w = mul_mod(w, current(v, v + 1), current.modulus());
  return w;
}

CorrectionPath correction_path(const EmbeddingDescriptor& e, int alpha, int beta) {
  const int span = e.q - 1;
  if (alpha < 0 || beta >= e.m || beta - alpha < e.q) {
    throw std::logic_error("no correction path for position (" + std::to_string(alpha + 1) + "," +
                           std::to_string(beta + 1) + ")");
  }
  if (e.kind == EmbeddingKind::Phi) {
    const int tau = beta - span;
    return {tau, tau, beta, alpha, tau};
  }
  const int tau = alpha + span;
  return {tau, alpha, tau, tau, beta};
}

namespace {

bool agree_up_to(const GroupElement& a, const GroupElement& b, int level) {
  const int m = a.size();
  for (int d = 1; d <= level && d < m; ++d) {
    for (int i = 0; i + d < m; ++i) {
      if (a.entry(i, i + d) != b.entry(i, i + d)) return false;
    }
  }
  return true;
}

std::string position(int alpha, int beta) {
  return "(" + std::to_string(alpha + 1) + "," + std::to_string(beta + 1) + ")";
}

// Solves y^q = u1 v(y) for the reduced normal form, then maps the root back
// through the recorded substitutions and checks the original equation.
SolveReport solve_reduced(const Word& original, const NormalForm& reduced, int s, long long epsilon,
                          SubstitutionRecord subs) {
  const SolveCase c = detect_case(reduced.u1);
  if (c == SolveCase::Unsupported) {
    throw SolveError(SolveErrc::UnsupportedCase, "u(1) meets none of the solvability conditions");
  }
  const EmbeddingDescriptor e = build_embedding(embedding_for(c), reduced.n, reduced.p, s);
  const CoefficientTable resolved = lift_coefficients(reduced.coefficients, e);
  const int q = e.q;
  const int m = e.m;
  const Residue p = e.p;

  auto lhs_of = [&](const GroupElement& x) { return pow_p_power(x, s); };
  auto rhs_of = [&](const GroupElement& x) { return evaluate_normal_form_resolved(reduced, resolved, x); };

  std::vector<CorrectionStep> trace;
  GroupElement x = GroupElement::identity(p, m);
  // u(1) = 1 makes x = 1 a solution outright.
  if (!reduced.u1.is_identity()) {
    x = initial_element(c, reduced.u1, e);
    if (central_series_level(evaluate_tail_resolved(reduced, resolved, x)) < q + 1) {
      throw SolveError(SolveErrc::InvariantViolated, "v(x_{q+1}) is not in the (q+1)-th central term");
    }
    for (int level = q; level < m; ++level) {
      GroupElement lhs = lhs_of(x);
      GroupElement rhs = rhs_of(x);
      const int count = m - level;
      for (int step = 0; step < count; ++step) {
        const int j = e.kind == EmbeddingKind::Phi ? count - step : step + 1;
        const int alpha = j - 1;
        const int beta = alpha + level;
        const Residue wl = lhs.entry(alpha, beta);
        const Residue wr = rhs.entry(alpha, beta);
        if (wl == wr) continue;
        const CorrectionPath path = correction_path(e, alpha, beta);
        const Residue wp = path.weight(x.algebra());
        if (wp == 0) {
          throw SolveError(SolveErrc::CorrectionStuck, "zero path weight at level " + std::to_string(level) +
                                                           ", position " + position(alpha, beta));
        }
        const Residue wj = mul_mod(sub_mod(wr, wl, p), inverse_mod(wp, p), p);
        x.algebra().add_at(path.edge_row, path.edge_col, wj);
        trace.push_back({level, j, alpha, beta, path.tau, wj});

        GroupElement next_rhs = rhs_of(x);
        if (!agree_up_to(next_rhs, rhs, level)) {
          throw SolveError(SolveErrc::InvariantViolated, "right side moved below level " + std::to_string(level + 1) +
                                                             " after correcting " + position(alpha, beta));
        }
        rhs = std::move(next_rhs);
        lhs = lhs_of(x);
        if (lhs.entry(alpha, beta) != rhs.entry(alpha, beta)) {
          throw SolveError(SolveErrc::InvariantViolated, "correction at " + position(alpha, beta) + " did not close");
        }
      }
      if (!agree_up_to(lhs, rhs, level)) {
        throw SolveError(SolveErrc::InvariantViolated,
                         "x^q and u(1)v(x) differ on the first " + std::to_string(level) + " superdiagonals");
      }
    }
  }

  SolveReport report{pow(x, subs.power()), e, c, epsilon, s, std::move(trace), subs, x, false};
  if (!evaluate(original, report.solution, &e).is_identity()) {
    throw SolveError(SolveErrc::VerifyFailed, "solution does not satisfy the equation");
  }
  report.verified = true;
  return report;
}

}  // namespace

SolveReport solve_prime_exponent(const Word& w) {
  const long long eps = exponent(w);
  if (eps == 0) throw SolveError(SolveErrc::NotRegular, "not regular: exponent 0");
  const auto s = prime_power_exponent(static_cast<std::uint64_t>(std::llabs(eps)), w.p);
  if (!s || *s == 0) {
    throw std::invalid_argument("exponent " + std::to_string(eps) + " is not +-" + std::to_string(w.p) + "^s, s >= 1");
  }
  SubstitutionRecord subs;
  subs.inverted = eps > 0;
  const NormalForm nf = collect(w);
  return solve_reduced(w, subs.inverted ? substitute(nf, -1) : nf, *s, eps, subs);
}

SolveReport solve_regular(const Word& w, const SolveOptions& options) {
  const long long eps = exponent(w);
  if (eps == 0) throw SolveError(SolveErrc::NotRegular, "not regular: exponent 0");
  int s = 0;
  long long q = 1;
  while ((eps / q) % static_cast<long long>(w.p) == 0) {
    q *= w.p;
    ++s;
  }

  if (s == 0) {
    SearchSpec spec{w, std::nullopt, SearchMode::Exhaustive, 0, 0, options.oracle_cap, options.oracle_threads};
    std::optional<GroupElement> found;
    try {
      found = brute_solve(spec);
    } catch (const CapExceeded& ex) {
      throw SolveError(SolveErrc::OracleExhausted, ex.what());
    }
    if (!found) throw SolveError(SolveErrc::OracleExhausted, "no solution inside UT_" + std::to_string(w.n));
    SolveReport report{*found, std::nullopt, SolveCase::InGroup, eps, 0, {}, {}, *found, false};
    if (!evaluate(w, report.solution).is_identity()) {
      throw SolveError(SolveErrc::VerifyFailed, "oracle answer does not satisfy the equation");
    }
    report.verified = true;
    return report;
  }

  // x^(-eps) = u1 v(x); with x = y^k and r k = 1 (mod p^t) the left side
  // becomes y^q in any group of exponent dividing p^t.
  const long long r = -eps / q;
  SubstitutionRecord subs;
  subs.inverted = r < 0;
  const long long abs_r = std::llabs(r);
  if (abs_r != 1) {
    const int m = (w.n - 1) * static_cast<int>(q) + 1;
    const int t = exponent_bound(w.p, m);
    const auto modulus = static_cast<long long>(int_pow(w.p, t));
    subs.bezout = Bezout{abs_r, t, inverse_modulo(abs_r, modulus)};
  }
  const NormalForm nf = collect(w);
  const long long k = subs.power();
  return solve_reduced(w, k == 1 ? nf : substitute(nf, k), s, eps, subs);
}

SolveReport solve_heisenberg(const Word& w, const SolveOptions& options) {
  if (w.n != 3) throw std::invalid_argument("the Heisenberg entry point needs UT_3");
  return solve_regular(w, options);
}

}  // namespace utsolve
