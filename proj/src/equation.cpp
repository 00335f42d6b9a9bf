#include "utsolve/equation.hpp"

#include <cctype>
#include <sstream>

namespace utsolve {

namespace {

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(token[0])) || token[0] == '_')) return false;
  for (char c : token) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

void require_member(const GroupElement& g, Residue p, int n, const std::string& what) {
  if (g.modulus() != p || g.size() != n) {
    throw std::invalid_argument(what + " is not an element of UT_" + std::to_string(n) + "(F_" +
                                std::to_string(p) + ")");
  }
}

}  // namespace

Word parse_word(std::string_view text, const CoefficientTable& table, Residue p, int n) {
  for (const auto& [name, g] : table) require_member(g, p, n, "coefficient " + name);
  Word w{p, n, {}, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view token = text.substr(start, i - start);
    const int column = static_cast<int>(start) + 1;
    if (token == "x") {
      w.letters.emplace_back(UnknownLetter{+1});
    } else if (token == "x^-1") {
      w.letters.emplace_back(UnknownLetter{-1});
    } else if (token.starts_with("x^")) {
      throw ParseError("malformed power of the unknown '" + std::string(token) + "' (only x^-1 is allowed)", 1,
                       column);
    } else if (is_identifier(token)) {
      const std::string name(token);
      auto it = table.find(name);
      if (it == table.end()) throw ParseError("unknown token " + name + " (unbound coefficient name)", 1, column);
      w.letters.emplace_back(CoefficientLetter{name});
      w.coefficients.insert_or_assign(name, it->second);
    } else {
      throw ParseError("invalid token '" + std::string(token) + "'", 1, column);
    }
  }
  if (w.letters.empty()) throw ParseError("empty word", 1, 1);
  return w;
}

std::string render(const Word& w) {
  std::string out;
  for (const auto& letter : w.letters) {
    if (!out.empty()) out += ' ';
    if (const auto* x = std::get_if<UnknownLetter>(&letter)) {
      out += x->sign > 0 ? "x" : "x^-1";
    } else {
      out += std::get<CoefficientLetter>(letter).name;
    }
  }
  return out;
}

long long exponent(const Word& w) {
  long long e = 0;
  for (const auto& letter : w.letters) {
    if (const auto* x = std::get_if<UnknownLetter>(&letter)) e += x->sign;
  }
  return e;
}

Word substitute(const Word& w, long long k) {
  if (k == 0) throw std::invalid_argument("substitution x -> x^0 is not allowed");
  Word out{w.p, w.n, {}, w.coefficients};
  const long long copies = k < 0 ? -k : k;
  for (const auto& letter : w.letters) {
    if (const auto* x = std::get_if<UnknownLetter>(&letter)) {
      const int sign = (k < 0 ? -1 : 1) * x->sign;
      for (long long c = 0; c < copies; ++c) out.letters.emplace_back(UnknownLetter{sign});
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

CoefficientTable lift_coefficients(const CoefficientTable& table, const EmbeddingDescriptor& lift) {
  CoefficientTable out;
  for (const auto& [name, g] : table) out.emplace(name, apply(lift, g));
  return out;
}

GroupElement evaluate_resolved(const Word& w, const CoefficientTable& resolved, const GroupElement& x) {
  const GroupElement x_inv = x.inverse();
  GroupElement acc = GroupElement::identity(x.modulus(), x.size());
  for (const auto& letter : w.letters) {
    if (const auto* u = std::get_if<UnknownLetter>(&letter)) {
      acc *= u->sign > 0 ? x : x_inv;
    } else {
      const auto& name = std::get<CoefficientLetter>(letter).name;
      auto it = resolved.find(name);
      if (it == resolved.end()) throw std::invalid_argument("coefficient " + name + " is not bound");
      acc *= it->second;
    }
  }
  return acc;
}

GroupElement evaluate(const Word& w, const GroupElement& x, const EmbeddingDescriptor* lift) {
  if (lift == nullptr) {
    require_member(x, w.p, w.n, "unknown value");
    return evaluate_resolved(w, w.coefficients, x);
  }
  if (lift->n != w.n || lift->p != w.p) throw std::invalid_argument("embedding does not match the equation");
  require_member(x, w.p, lift->m, "unknown value");
  return evaluate_resolved(w, lift_coefficients(w.coefficients, *lift), x);
}

// ---------------------------------------------------------------------------
// Commutator atoms

Atom::Atom(Kind kind, std::string name, long long power, AtomPtr left, AtomPtr right)
    : kind_(kind), name_(std::move(name)), power_(power), left_(std::move(left)), right_(std::move(right)) {}

AtomPtr Atom::base(std::string name) {
  return AtomPtr(new Atom(Kind::Base, std::move(name), 0, nullptr, nullptr));
}

AtomPtr Atom::unknown_power(long long power) {
  if (power == 0) throw std::invalid_argument("x^0 is not an atom");
  return AtomPtr(new Atom(Kind::UnknownPower, {}, power, nullptr, nullptr));
}

AtomPtr Atom::commutator(AtomPtr left, AtomPtr right) {
  if (!left || !right) throw std::invalid_argument("commutator of a null atom");
  return AtomPtr(new Atom(Kind::Commutator, {}, 0, std::move(left), std::move(right)));
}

int Atom::weight() const {
  if (kind_ != Kind::Commutator) return 1;
  return left_->weight() + right_->weight();
}

namespace {

std::string render_leaf(const Atom& atom) {
  switch (atom.kind()) {
    case Atom::Kind::Base:
      return atom.name();
    case Atom::Kind::UnknownPower:
      return atom.power() == 1 ? "x" : "x^" + std::to_string(atom.power());
    case Atom::Kind::Commutator:
      break;
  }
  return render(atom);
}

}  // namespace

std::vector<AtomPtr> leaves(const AtomPtr& atom) {
  if (atom->kind() != Atom::Kind::Commutator) return {atom};
  std::vector<AtomPtr> out = leaves(atom->left());
  out.push_back(atom->right());
  return out;
}

std::string render(const Atom& atom) {
  if (atom.kind() != Atom::Kind::Commutator) return render_leaf(atom);
  std::vector<const Atom*> spine;
  const Atom* node = &atom;
  while (node->kind() == Atom::Kind::Commutator) {
    spine.push_back(node->right().get());
    node = node->left().get();
  }
  std::string out = "[" + render_leaf(*node);
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) out += "," + render_leaf(**it);
  return out + "]";
}

long long unknown_exponent_sum(const Atom& atom) {
  switch (atom.kind()) {
    case Atom::Kind::Base:
      return 0;
    case Atom::Kind::UnknownPower:
      return atom.power();
    case Atom::Kind::Commutator: {
      // [a, b] = a^-1 b^-1 a b
      const long long a = unknown_exponent_sum(*atom.left());
      const long long b = unknown_exponent_sum(*atom.right());
      return -a - b + a + b;
    }
  }
  return 0;
}

AtomEvaluator::AtomEvaluator(const CoefficientTable& resolved, GroupElement x)
    : resolved_(resolved), x_(std::move(x)) {}

const GroupElement& AtomEvaluator::unknown_power(long long k) {
  auto it = powers_.find(k);
  if (it == powers_.end()) it = powers_.emplace(k, pow(x_, k)).first;
  return it->second;
}

const GroupElement& AtomEvaluator::value(const AtomPtr& atom) {
  if (auto it = memo_.find(atom.get()); it != memo_.end()) return it->second;
  switch (atom->kind()) {
    case Atom::Kind::Base: {
      auto it = resolved_.find(atom->name());
      if (it == resolved_.end()) throw std::invalid_argument("coefficient " + atom->name() + " is not bound");
      return it->second;
    }
    case Atom::Kind::UnknownPower:
      return unknown_power(atom->power());
    case Atom::Kind::Commutator:
      break;
  }
  GroupElement v = commutator(value(atom->left()), value(atom->right()));
  return memo_.emplace(atom.get(), std::move(v)).first->second;
}

// ---------------------------------------------------------------------------
// Collecting

namespace {

// Moves `mover` from the right end to the left end of `atoms`:
// A mover = mover A [A, mover], applied from the last atom to the first.
std::vector<AtomPtr> pass_left(const std::vector<AtomPtr>& atoms, const AtomPtr& mover) {
  std::vector<AtomPtr> out;
  out.reserve(atoms.size() * 2);
  for (const auto& a : atoms) {
    out.push_back(a);
    out.push_back(Atom::commutator(a, mover));
  }
  return out;
}

}  // namespace

NormalForm collect(const Word& w) {
  // Phase 1: the unknown letters, in order, travel to the front.
  long long epsilon = 0;
  std::vector<AtomPtr> atoms;
  std::map<std::string, AtomPtr> bases;
  std::map<int, AtomPtr> unknowns;
  for (const auto& letter : w.letters) {
    if (const auto* x = std::get_if<UnknownLetter>(&letter)) {
      epsilon += x->sign;
      auto& mover = unknowns[x->sign];
      if (!mover) mover = Atom::unknown_power(x->sign);
      atoms = pass_left(atoms, mover);
    } else {
      const auto& name = std::get<CoefficientLetter>(letter).name;
      auto& base = bases[name];
      if (!base) base = Atom::base(name);
      atoms.push_back(base);
    }
  }

  // Phase 2: plain coefficients travel left past the commutators.
  NormalForm nf{w.p, w.n, epsilon, GroupElement::identity(w.p, w.n), {}, {}, w.coefficients};
  for (const auto& atom : atoms) {
    if (atom->kind() == Atom::Kind::Base) {
      nf.tail = pass_left(nf.tail, atom);
      nf.u1_factors.push_back(atom->name());
      nf.u1 *= w.coefficients.at(atom->name());
    } else {
      nf.tail.push_back(atom);
    }
  }
  return nf;
}

GroupElement evaluate_tail_resolved(const NormalForm& nf, const CoefficientTable& resolved, const GroupElement& x) {
  AtomEvaluator eval(resolved, x);
  GroupElement acc = GroupElement::identity(x.modulus(), x.size());
  for (const auto& atom : nf.tail) acc *= eval.value(atom);
  return acc;
}

GroupElement evaluate_normal_form_resolved(const NormalForm& nf, const CoefficientTable& resolved,
                                           const GroupElement& x) {
  GroupElement acc = GroupElement::identity(x.modulus(), x.size());
  for (const auto& name : nf.u1_factors) acc *= resolved.at(name);
  return acc * evaluate_tail_resolved(nf, resolved, x);
}

GroupElement evaluate_normal_form(const NormalForm& nf, const GroupElement& x, const EmbeddingDescriptor* lift) {
  if (lift == nullptr) {
    require_member(x, nf.p, nf.n, "unknown value");
    return evaluate_normal_form_resolved(nf, nf.coefficients, x);
  }
  if (lift->n != nf.n || lift->p != nf.p) throw std::invalid_argument("embedding does not match the equation");
  require_member(x, nf.p, lift->m, "unknown value");
  return evaluate_normal_form_resolved(nf, lift_coefficients(nf.coefficients, *lift), x);
}

NormalForm substitute(const NormalForm& nf, long long k) {
  if (k == 0) throw std::invalid_argument("substitution x -> x^0 is not allowed");
  NormalForm out = nf;
  out.epsilon = nf.epsilon * k;
  std::unordered_map<const Atom*, AtomPtr> rebuilt;
  auto rebuild = [&](auto&& self, const AtomPtr& atom) -> AtomPtr {
    if (auto it = rebuilt.find(atom.get()); it != rebuilt.end()) return it->second;
    AtomPtr r;
    switch (atom->kind()) {
      case Atom::Kind::Base:
        r = atom;
        break;
      case Atom::Kind::UnknownPower:
        r = Atom::unknown_power(atom->power() * k);
        break;
      case Atom::Kind::Commutator:
        r = Atom::commutator(self(self, atom->left()), self(self, atom->right()));
        break;
    }
    rebuilt.emplace(atom.get(), r);
    return r;
  };
  for (auto& atom : out.tail) atom = rebuild(rebuild, atom);
  return out;
}

long long tail_exponent(const NormalForm& nf) {
  long long sum = 0;
  for (const auto& atom : nf.tail) sum += unknown_exponent_sum(*atom);
  return sum;
}

std::string render(const NormalForm& nf) {
  std::ostringstream os;
  os << "eps=" << nf.epsilon << "; u1=";
  if (nf.u1_factors.empty()) os << "1";
  for (std::size_t i = 0; i < nf.u1_factors.size(); ++i) os << (i ? "*" : "") << nf.u1_factors[i];
  os << "; tail=";
  for (const auto& atom : nf.tail) os << render(*atom);
  return os.str();
}

}  // namespace utsolve
