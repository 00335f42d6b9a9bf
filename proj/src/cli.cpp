#include "utsolve/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "utsolve/equation_file.hpp"
#include "utsolve/oracle.hpp"
#include "utsolve/solver.hpp"

namespace utsolve::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_numeric_row(const std::string& line) {
  bool any = false;
  for (char c : line) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      any = true;
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '-') {
      return false;
    }
  }
  return any;
}

// A bare matrix, or a solve report whose matrix follows "solution:".
GroupElement read_candidate(const std::string& path, Residue p) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  bool in_report = false;
  std::string block;
  while (std::getline(in, line)) {
    if (line == "solution:") {
      in_report = true;
      block.clear();
      continue;
    }
    if (in_report) {
      if (!is_numeric_row(line)) break;
      block += line + "\n";
    }
  }
  return parse_matrix(in_report ? block : text, p);
}

void print_report(const SolveReport& report, bool trace, std::ostream& out) {
  out << "case=" << to_string(report.solve_case) << "\n";
  out << "eps=" << report.epsilon << "\n";
  out << "m=" << report.solution.size() << "\n";
  if (report.embedding) out << "embedding=" << to_string(report.embedding->kind) << " s=" << report.s << "\n";
  if (report.substitutions.inverted) out << "substitution=x->x^-1\n";
  if (const auto& b = report.substitutions.bezout) {
    out << "bezout r=" << b->r << " t=" << b->t << " k=" << b->k << "\n";
  }
  if (trace) {
    for (const auto& step : report.trace) {
      out << "level=" << step.level << " j=" << step.j << " alpha=" << step.alpha + 1 << " beta=" << step.beta + 1
          << " tau=" << step.tau + 1 << " w=" << step.weight << "\n";
    }
  }
  out << "solution:\n" << report.solution;
  if (report.verified) out << "VERIFIED\n";
}

int cmd_solve(const std::string& path, bool trace, std::uint64_t cap, unsigned threads, std::ostream& out,
              std::ostream& err) {
  const EquationFile file = load_equation_file(path);
  const Word w = file.word();
  try {
    const SolveReport report = solve_regular(w, {cap, threads});
    print_report(report, trace, out);
    return kOk;
  } catch (const SolveError& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case SolveErrc::NotRegular:
        return kNotRegular;
      case SolveErrc::UnsupportedCase:
        return kUnsupported;
      default:
        return kSolverFailure;
    }
  }
}

int cmd_normalize(const std::string& path, std::ostream& out) {
  const EquationFile file = load_equation_file(path);
  const NormalForm nf = collect(file.word());
  out << render(nf) << "\n";
  out << "u1:\n" << nf.u1;
  out << "tail_exponent=" << tail_exponent(nf) << "\n";
  return kOk;
}

int cmd_embed(const std::string& path, const std::string& kind_text, int s, std::ostream& out) {
  const EquationFile file = load_equation_file(path);
  const EmbeddingDescriptor e = build_embedding(parse_embedding_kind(kind_text), file.n, file.p, s);
  for (const auto& [name, g] : file.matrices) out << "matrix " << name << "\n" << apply(e, g);
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& candidate_path, const std::string& kind_text,
               std::ostream& out, std::ostream& err) {
  const EquationFile file = load_equation_file(path);
  const Word w = file.word();
  const GroupElement x = read_candidate(candidate_path, file.p);
  std::optional<EmbeddingDescriptor> lift;
  if (x.size() != file.n) {
    const int m = x.size();
    const auto s = (m - 1) % (file.n - 1) == 0 ? prime_power_exponent((m - 1) / (file.n - 1), file.p) : std::nullopt;
    if (!s || *s == 0) {
      err << "candidate size " << m << " is not (n-1)p^s+1 for n=" << file.n << ", p=" << file.p << "\n";
      return kInputError;
    }
    EmbeddingKind kind = EmbeddingKind::Phi;
    if (!kind_text.empty()) {
      kind = parse_embedding_kind(kind_text);
    } else if (detect_case(collect(w).u1) == SolveCase::Two) {
      kind = EmbeddingKind::Psi;
    }
    lift = build_embedding(kind, file.n, file.p, *s);
  }
  if (evaluate(w, x, lift ? &*lift : nullptr).is_identity()) {
    out << "solution\n";
    return kOk;
  }
  out << "not a solution\n";
  return kNotSolution;
}

int cmd_oracle(const std::string& path, int s, const std::string& kind_text, std::optional<std::uint64_t> seed,
               std::uint64_t trials, std::uint64_t cap, unsigned threads, std::ostream& out) {
  const EquationFile file = load_equation_file(path);
  SearchSpec spec{file.word(), std::nullopt, SearchMode::Exhaustive, 0, trials, cap, threads};
  if (s > 0) spec.lift = build_embedding(parse_embedding_kind(kind_text), file.n, file.p, s);
  if (seed) {
    spec.mode = SearchMode::Random;
    spec.seed = *seed;
  }
  if (const auto found = brute_solve(spec)) {
    out << "found:\n" << *found;
    return kOk;
  }
  out << "no solution\n";
  return kNotSolution;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive solver for regular equations over UT_n(F_p)", "utsolve"};
  app.require_subcommand(1);

  std::string path;
  bool trace = false;
  std::string embed_kind;
  std::string verify_kind;
  std::string oracle_kind;
  int embed_s = 1;
  int oracle_s = 0;
  std::string candidate;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 100000;
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;

  auto* solve = app.add_subcommand("solve", "Solve the equation and verify the solution by substitution");
  solve->add_option("file", path, "Equation file")->required();
  solve->add_flag("--trace", trace, "Print the per-level correction log");
  solve->add_option("--cap", cap, "Enumeration cap for exponents coprime to p");
  solve->add_option("--threads", threads, "Worker threads for enumeration");

  auto* normalize = app.add_subcommand("normalize", "Print the collected form x^eps u(1) v(x)");
  normalize->add_option("file", path, "Equation file")->required();

  auto* embed = app.add_subcommand("embed", "Print the image of every matrix in UT_m");
  embed->add_option("file", path, "Equation file")->required();
  embed->add_option("--kind", embed_kind, "phi or psi")->default_val("phi");
  embed->add_option("--s", embed_s, "Resolution exponent, q = p^s")->default_val(1);

  auto* verify = app.add_subcommand("verify", "Check a candidate solution by substitution");
  verify->add_option("file", path, "Equation file")->required();
  verify->add_option("--candidate", candidate, "Matrix file or solve output")->required();
  verify->add_option("--kind", verify_kind, "Embedding for an overgroup candidate (default: as the solver picks)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force search for a solution");
  oracle->add_option("file", path, "Equation file")->required();
  oracle->add_option("--s", oracle_s, "Search UT_m for q = p^s (0: the coefficient group)")->default_val(0);
  oracle->add_option("--kind", oracle_kind, "phi or psi")->default_val("phi");
  oracle->add_option("--seed", seed, "Random search with this seed instead of enumeration");
  oracle->add_option("--trials", trials, "Draws in random mode");
  oracle->add_option("--cap", cap, "Enumeration cap");
  oracle->add_option("--threads", threads, "Worker threads for enumeration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(path, trace, cap, threads, out, err);
    if (normalize->parsed()) return cmd_normalize(path, out);
    if (embed->parsed()) return cmd_embed(path, embed_kind, embed_s, out);
    if (verify->parsed()) return cmd_verify(path, candidate, verify_kind, out, err);
    if (oracle->parsed()) return cmd_oracle(path, oracle_s, oracle_kind, seed, trials, cap, threads, out);
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
    return kInputError;
  } catch (const MatrixFormatError& e) {
    err << "bad matrix: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace utsolve::cli
