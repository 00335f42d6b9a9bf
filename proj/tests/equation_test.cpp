#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "utsolve/equation.hpp"
#include "utsolve/equation_file.hpp"
#include "utsolve/oracle.hpp"

using namespace utsolve;

namespace {

CoefficientTable random_table(Residue p, int n, int count, std::mt19937_64& rng) {
  CoefficientTable table;
  for (int c = 1; c <= count; ++c) table.emplace("g" + std::to_string(c), testing::random_element(p, n, rng));
  return table;
}

// Word value computed with plain integer matrices, independent of the library's group code.
testing::Dense dense_value(const Word& w, const GroupElement& x) {
  const auto inverse = [&](const testing::Dense& d) {
    // Unitriangular inverse through the finite geometric series of the nilpotent part.
    const std::size_t m = d.size();
    testing::Dense u = d;
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 0;
    testing::Dense term = testing::dense_identity(static_cast<int>(m));
    testing::Dense sum = term;
    for (std::size_t k = 1; k < m; ++k) {
      term = testing::dense_mul(term, u, w.p);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const long long sign = k % 2 ? w.p - 1 : 1;
          sum[i][j] = (sum[i][j] + sign * term[i][j]) % w.p;
        }
    }
    return sum;
  };
  const auto dx = testing::to_dense(x);
  const auto dxi = inverse(dx);
  testing::Dense out = testing::dense_identity(x.size());
  for (const auto& letter : w.letters) {
    if (const auto* u = std::get_if<UnknownLetter>(&letter)) {
      out = testing::dense_mul(out, u->sign > 0 ? dx : dxi, w.p);
    } else {
      out = testing::dense_mul(out, testing::to_dense(w.coefficients.at(std::get<CoefficientLetter>(letter).name)), w.p);
    }
  }
  return out;
}

std::vector<GroupElement> all_elements(Residue p, int n) {
  std::vector<GroupElement> out;
  for (const auto& g : enumerate(p, n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("parse") {
  std::mt19937_64 rng(1);
  const auto table = random_table(3, 3, 3, rng);
  const auto w = parse_word("x g1 x g2", table, 3, 3);
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[0] == Letter{UnknownLetter{+1}});
  CHECK(w.letters[1] == Letter{CoefficientLetter{"g1"}});
  CHECK(w.letters[2] == Letter{UnknownLetter{+1}});
  CHECK(w.letters[3] == Letter{CoefficientLetter{"g2"}});
  CHECK(w.coefficients.size() == 2);

  const auto inv = parse_word("x^-1", table, 3, 3);
  CHECK(inv.letters == std::vector<Letter>{UnknownLetter{-1}});

  try {
    parse_word("x g1 y", table, 3, 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
    CHECK(e.message().find("unknown token y") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_word("x^2 g1", table, 3, 3), ParseError);
  CHECK_THROWS_AS(parse_word("x^", table, 3, 3), ParseError);
  CHECK_THROWS_AS(parse_word("x g1*g2", table, 3, 3), ParseError);
  CHECK_THROWS_AS(parse_word("   ", table, 3, 3), ParseError);
  CHECK_THROWS_AS(parse_word("x g1", table, 3, 4), std::invalid_argument);
}

TEST_CASE("exponent") {
  std::mt19937_64 rng(2);
  const auto table = random_table(2, 3, 3, rng);
  CHECK(exponent(parse_word("x g1 x g2", table, 2, 3)) == 2);
  CHECK(exponent(parse_word("x x^-1 g1", table, 2, 3)) == 0);
  CHECK(exponent(parse_word("x^-1 g1 x^-1 g2 x^-1 g3", table, 2, 3)) == -3);
}

TEST_CASE("parser round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const long long eps = static_cast<long long>(rng() % 7) - 3;
    const auto w = testing::random_word(3, 3, eps, static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), rng);
    const auto again = parse_word(render(w), w.coefficients, w.p, w.n);
    REQUIRE(again.letters == w.letters);
    REQUIRE(exponent(again) == eps);
  }
}

TEST_CASE("substitute on words") {
  std::mt19937_64 rng(4);
  const auto table = random_table(2, 3, 2, rng);
  CHECK(render(substitute(parse_word("x g1", table, 2, 3), -1)) == "x^-1 g1");
  CHECK(exponent(substitute(parse_word("x g1 x g2", table, 2, 3), 2)) == 4);
  CHECK(render(substitute(parse_word("x^-1 g2", table, 2, 3), -2)) == "x x g2");
  CHECK_THROWS_AS(substitute(parse_word("x g1", table, 2, 3), 0), std::invalid_argument);
  for (const auto& x : all_elements(2, 3)) {
    const auto w = parse_word("x g1 x^-1 x g2", table, 2, 3);
    CHECK(evaluate(substitute(w, 3), x) == evaluate(w, pow(x, 3)));
  }
}

TEST_CASE("evaluate") {
  std::mt19937_64 rng(5);
  const auto table = random_table(3, 3, 2, rng);
  const auto one = GroupElement::identity(3, 3);
  CHECK(evaluate(parse_word("x", table, 3, 3), one).is_identity());
  CHECK(evaluate(parse_word("x g1 x g2", table, 3, 3), one) == table.at("g1") * table.at("g2"));
  const auto w = parse_word("x^-1 g2 x g1 x", table, 3, 3);
  for (const auto& x : all_elements(3, 3)) REQUIRE(testing::to_dense(evaluate(w, x)) == dense_value(w, x));
  CHECK_THROWS_AS(evaluate(w, GroupElement::identity(3, 4)), std::invalid_argument);
}

TEST_CASE("evaluate with a lift") {
  std::mt19937_64 rng(6);
  const auto table = random_table(2, 3, 2, rng);
  const auto w = parse_word("x g1 x^-1 g2 x", table, 2, 3);
  const auto e = build_embedding(EmbeddingKind::Phi, 3, 2, 1);
  const auto lifted = lift_coefficients(table, e);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testing::random_element(2, e.m, rng);
    const auto expected = x * lifted.at("g1") * x.inverse() * lifted.at("g2") * x;
    CHECK(evaluate(w, x, &e) == expected);
    CHECK(evaluate_resolved(w, lifted, x) == expected);
  }
}

TEST_CASE("collect worked example") {
  std::mt19937_64 rng(7);
  const auto table = random_table(3, 3, 2, rng);
  const auto w = parse_word("x g1 x g2", table, 3, 3);
  const auto nf = collect(w);
  CHECK(nf.epsilon == 2);
  CHECK(nf.u1 == table.at("g1") * table.at("g2"));
  CHECK(nf.u1_factors == std::vector<std::string>{"g1", "g2"});
  REQUIRE(nf.tail.size() == 2);
  CHECK(render(*nf.tail[0]) == "[g1,x]");
  CHECK(render(*nf.tail[1]) == "[g1,x,g2]");
  CHECK(render(nf) == "eps=2; u1=g1*g2; tail=[g1,x][g1,x,g2]");
  CHECK(tail_exponent(nf) == 0);

  const auto& g1 = table.at("g1");
  const auto& g2 = table.at("g2");
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_element(3, 3, rng);
    const auto c1 = commutator(g1, x);
    const auto expected = g1 * g2 * c1 * commutator(c1, g2);
    REQUIRE(evaluate_normal_form(nf, x) == expected);
    REQUIRE(x * x * expected == evaluate(w, x));
  }

  // Inverting the unknown gives x^2 = g1 g2 [g1,x^-1][g1,x^-1,g2] for the new unknown.
  const auto inverted = substitute(nf, -1);
  CHECK(render(inverted) == "eps=-2; u1=g1*g2; tail=[g1,x^-1][g1,x^-1,g2]");
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_element(3, 3, rng);
    const auto c1 = commutator(g1, x.inverse());
    REQUIRE(evaluate_normal_form(inverted, x) == g1 * g2 * c1 * commutator(c1, g2));
  }
}

TEST_CASE("collect trivial shapes") {
  std::mt19937_64 rng(8);
  const auto table = random_table(2, 3, 2, rng);
  const auto only = collect(parse_word("g1", table, 2, 3));
  CHECK(only.epsilon == 0);
  CHECK(only.u1 == table.at("g1"));
  CHECK(only.tail.empty());
  const auto lead = collect(parse_word("x^-1 g1", table, 2, 3));
  CHECK(lead.epsilon == -1);
  CHECK(lead.u1 == table.at("g1"));
  CHECK(lead.tail.empty());
  CHECK(render(collect(parse_word("x x^-1", table, 2, 3))) == "eps=0; u1=1; tail=");
  CHECK(evaluate_normal_form(lead, GroupElement::identity(2, 3)) == lead.u1);
  CHECK(evaluate_normal_form(collect(parse_word("g2 x g1 x^-1", table, 2, 3)), GroupElement::identity(2, 3)) ==
        table.at("g2") * table.at("g1"));
}

TEST_CASE("collecting soundness exhaustively in x") {
  std::mt19937_64 rng(9);
  for (Residue p : {2u, 3u}) {
    const auto elements = all_elements(p, 3);
    for (int trial = 0; trial < 300; ++trial) {
      // At most 6 letters in total.
      const int coefficients = 1 + static_cast<int>(rng() % 3);
      const int extra = static_cast<int>(rng() % 2);
      const int budget = 6 - coefficients - 2 * extra;
      const long long eps = static_cast<long long>(rng() % (2 * budget + 1)) - budget;
      const auto w = testing::random_word(p, 3, eps, extra, coefficients, rng);
      REQUIRE(w.letters.size() <= 6);
      const auto nf = collect(w);
      CAPTURE(render(w));
      REQUIRE(nf.epsilon == exponent(w));
      REQUIRE(tail_exponent(nf) == 0);
      REQUIRE(nf.u1 == evaluate(w, GroupElement::identity(p, 3)));
      for (const auto& x : elements) {
        const auto lhs = evaluate(w, x);
        REQUIRE(testing::to_dense(lhs) == dense_value(w, x));
        REQUIRE(lhs == pow(x, nf.epsilon) * evaluate_normal_form(nf, x));
      }
    }
  }
}

TEST_CASE("normal form substitution matches word substitution") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = testing::random_word(3, 3, 2, 1, 2, rng);
    const auto nf = collect(w);
    for (long long k : {-1LL, 2LL, -5LL}) {
      const auto sub = substitute(nf, k);
      REQUIRE(sub.epsilon == k * nf.epsilon);
      REQUIRE(tail_exponent(sub) == 0);
      const auto x = testing::random_element(3, 3, rng);
      REQUIRE(evaluate_normal_form(sub, x) == evaluate_normal_form(nf, pow(x, k)));
      REQUIRE(evaluate(substitute(w, k), x) == pow(x, sub.epsilon) * evaluate_normal_form(sub, x));
    }
  }
}

TEST_CASE("commutator atoms move by a deep amount when x moves") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : {std::pair<Residue, int>{2, 5}, {3, 5}, {3, 7}}) {
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 1 + static_cast<int>(rng() % 3);
      const int t = 1 + static_cast<int>(rng() % 3);
      CoefficientTable resolved;
      resolved.emplace("g1", testing::random_element(p, m, rng, r));
      resolved.emplace("g2", testing::random_element(p, m, rng));
      const long long sigma = rng() % 2 ? 1 : -1;
      AtomPtr atom = Atom::commutator(Atom::base("g1"), Atom::unknown_power(sigma));
      const int depth = static_cast<int>(rng() % 3);
      for (int k = 0; k < depth; ++k) {
        atom = Atom::commutator(atom, rng() % 2 ? Atom::base("g2") : Atom::unknown_power(rng() % 2 ? 1 : -1));
      }
      const auto x = testing::random_element(p, m, rng);
      const auto d = testing::random_algebra(p, m, rng, t);
      AtomEvaluator at_x(resolved, x);
      AtomEvaluator at_moved(resolved, GroupElement(x.algebra() + d));
      const auto diff = at_moved.value(atom).algebra() - at_x.value(atom).algebra();
      REQUIRE(filtration_level(diff) >= r + t);
    }
  }
}

TEST_CASE("atoms") {
  const auto a = Atom::commutator(Atom::base("g1"), Atom::unknown_power(-1));
  const auto b = Atom::commutator(a, Atom::base("g2"));
  CHECK(render(*b) == "[g1,x^-1,g2]");
  CHECK(render(*Atom::commutator(Atom::base("g1"), Atom::unknown_power(3))) == "[g1,x^3]");
  CHECK(unknown_exponent_sum(*b) == 0);
  CHECK(unknown_exponent_sum(*Atom::unknown_power(-1)) == -1);
  CHECK(leaves(b).size() == 3);
  CHECK(b->weight() == 3);
  CHECK_THROWS_AS(Atom::unknown_power(0), std::invalid_argument);
}

TEST_CASE("equation file") {
  const std::string text =
      "# sample\n"
      "p 3\n"
      "n 3\n"
      "\n"
      "matrix a\n"
      "1 1 2\n"
      "0 1 2\n"
      "0 0 1\n"
      "word x^-1 a\n";
  const auto file = parse_equation_file(text);
  CHECK(file.p == 3);
  CHECK(file.n == 3);
  REQUIRE(file.matrices.size() == 1);
  CHECK(file.matrices[0].first == "a");
  CHECK(format_matrix(file.matrices[0].second) == "1 1 2\n0 1 2\n0 0 1\n");
  CHECK(render(file.word()) == "x^-1 a");
  CHECK(file.word_line == 9);

  const auto error_at = [](const std::string& bad) -> std::pair<int, int> {
    try {
      parse_equation_file(bad);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("p 4\nn 3\nword x\n").first == 1);
  CHECK(error_at("p 3\nn 1\nword x\n").first == 2);
  CHECK(error_at("p 3\nn 2\nmatrix a\n1 1\nword x a\n").first == 5);
  CHECK(error_at("p 3\nn 2\nmatrix a\n1 1\n0 1\nword x b\n") == std::pair{6, 8});
  CHECK(error_at("p 3\nn 2\nmatrix a\n1 1\n0 1\nmatrix a\n1 0\n0 1\nword x a\n").first == 6);
  CHECK(error_at("p 3\nn 2\n").first != 0);
  CHECK(error_at("p 3\nn 2\nword x\nword x\n").first == 4);
  CHECK(error_at("p 3\nn 2\nfoo\nword x\n").first == 3);
  CHECK_THROWS(load_equation_file("/nonexistent/file.eq"));
}
