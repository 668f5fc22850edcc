#include "reslat/logic.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "reslat/enumeration.hpp"

namespace reslat {

Formula Formula::var(std::size_t index) {
  if (index == 0) throw Error(ErrorKind::InvalidArgument, "variables are numbered from 1");
  return Formula(std::make_shared<const Node>(Node{Kind::Var, index, nullptr, nullptr}));
}

Formula Formula::unit() { return Formula(std::make_shared<const Node>(Node{Kind::Unit, 0, nullptr, nullptr})); }
Formula Formula::falsum() { return Formula(std::make_shared<const Node>(Node{Kind::Falsum, 0, nullptr, nullptr})); }
Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Kind::Bottom, 0, nullptr, nullptr})); }
Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::Top, 0, nullptr, nullptr})); }

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{kind, 0, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::mul(Formula a, Formula b) { return binary(Kind::Mul, std::move(a), std::move(b)); }
Formula Formula::ldiv(Formula a, Formula b) { return binary(Kind::LDiv, std::move(a), std::move(b)); }
Formula Formula::rdiv(Formula a, Formula b) { return binary(Kind::RDiv, std::move(a), std::move(b)); }
Formula Formula::meet(Formula a, Formula b) { return binary(Kind::Meet, std::move(a), std::move(b)); }
Formula Formula::join(Formula a, Formula b) { return binary(Kind::Join, std::move(a), std::move(b)); }
Formula Formula::neg(Formula a) { return ldiv(std::move(a), falsum()); }
Formula Formula::iff(Formula a, Formula b) { return meet(ldiv(a, b), ldiv(b, a)); }

std::size_t Formula::variable_count() const {
  if (kind() == Kind::Var) return var_index();
  if (!is_binary()) return 0;
  return std::max(left().variable_count(), right().variable_count());
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.var_index() != b.var_index()) return false;
  if (!a.is_binary()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Var, Unit, Falsum, Bottom, Top, Mul, LDiv, RDiv, Meet, Join, Not, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::size_t index = 0;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Var: return "variable";
    case Tok::Unit: return "'e'";
    case Tok::Falsum: return "'f'";
    case Tok::Bottom: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::Mul: return "'*'";
    case Tok::LDiv: return "'\\'";
    case Tok::RDiv: return "'/'";
    case Tok::Meet: return "'&'";
    case Tok::Join: return "'|'";
    case Tok::Not: return "'~'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

[[noreturn]] void parse_error(std::size_t pos, const std::string& what) {
  throw PositionedError(ErrorKind::ParseError, pos,
                        "parse error at offset " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '*': out.push_back({Tok::Mul, start}); ++i; continue;
      case '\\': out.push_back({Tok::LDiv, start}); ++i; continue;
      case '/': out.push_back({Tok::RDiv, start}); ++i; continue;
      case '&': out.push_back({Tok::Meet, start}); ++i; continue;
      case '|': out.push_back({Tok::Join, start}); ++i; continue;
      case '~': out.push_back({Tok::Not, start}); ++i; continue;
      case '(': out.push_back({Tok::LParen, start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start}); ++i; continue;
      default: break;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, start});
      i += 3;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      parse_error(start, std::string("unexpected character '") + c + "'");
    }
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    const std::string_view word = s.substr(start, i - start);
    if (word == "e") {
      out.push_back({Tok::Unit, start});
    } else if (word == "f") {
      out.push_back({Tok::Falsum, start});
    } else if (word == "bot") {
      out.push_back({Tok::Bottom, start});
    } else if (word == "top") {
      out.push_back({Tok::Top, start});
    } else if (word.size() > 1 && word[0] == 'x' &&
               std::all_of(word.begin() + 1, word.end(),
                           [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }) &&
               word[1] != '0' && word.size() <= 10) {
      out.push_back({Tok::Var, start, std::stoul(std::string(word.substr(1)))});
    } else {
      parse_error(start, "unknown identifier '" + std::string(word) + "'");
    }
  }
  out.push_back({Tok::End, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula p = formula();
    expect(Tok::End);
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  void expect(Tok t) {
    if (peek().kind != t) {
      parse_error(peek().pos,
                  std::string("expected ") + describe(t) + ", found " + describe(peek().kind));
    }
    ++pos_;
  }

  Formula formula() {
    Formula p = disj();
    if (peek().kind == Tok::Iff) {
      take();
      Formula q = disj();
      if (peek().kind == Tok::Iff) parse_error(peek().pos, "'<->' does not chain; add parentheses");
      return Formula::iff(std::move(p), std::move(q));
    }
    return p;
  }

  Formula disj() {
    Formula p = conj();
    while (peek().kind == Tok::Join) {
      take();
      p = Formula::join(std::move(p), conj());
    }
    return p;
  }

  Formula conj() {
    Formula p = resid();
    while (peek().kind == Tok::Meet) {
      take();
      p = Formula::meet(std::move(p), resid());
    }
    return p;
  }

  Formula resid() {
    Formula p = prod();
    const Tok t = peek().kind;
    if (t != Tok::LDiv && t != Tok::RDiv) return p;
    take();
    Formula q = prod();
    if (peek().kind == Tok::LDiv || peek().kind == Tok::RDiv) {
      parse_error(peek().pos, "residuals do not associate; add parentheses");
    }
    return t == Tok::LDiv ? Formula::ldiv(std::move(p), std::move(q))
                          : Formula::rdiv(std::move(p), std::move(q));
  }

  Formula prod() {
    Formula p = unary();
    while (peek().kind == Tok::Mul) {
      take();
      p = Formula::mul(std::move(p), unary());
    }
    return p;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      take();
      return Formula::neg(unary());
    }
    return atom();
  }

  Formula atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Var: return Formula::var(t.index);
      case Tok::Unit: return Formula::unit();
      case Tok::Falsum: return Formula::falsum();
      case Tok::Bottom: return Formula::bottom();
      case Tok::Top: return Formula::top();
      case Tok::LParen: {
        Formula p = formula();
        expect(Tok::RParen);
        return p;
      }
      default:
        parse_error(t.pos, std::string("expected a formula, found ") + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength of the printed form; atoms bind tightest.
int level(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Join: return 1;
    case Formula::Kind::Meet: return 2;
    case Formula::Kind::LDiv:
    case Formula::Kind::RDiv: return 3;
    case Formula::Kind::Mul: return 4;
    default: return 5;
  }
}

void print(const Formula& p, int min_level, std::string& out) {
  const int lv = level(p.kind());
  const bool paren = lv < min_level;
  if (paren) out += '(';
  switch (p.kind()) {
    case Formula::Kind::Var: out += 'x' + std::to_string(p.var_index()); break;
    case Formula::Kind::Unit: out += 'e'; break;
    case Formula::Kind::Falsum: out += 'f'; break;
    case Formula::Kind::Bottom: out += "bot"; break;
    case Formula::Kind::Top: out += "top"; break;
    default: {
      const bool resid = lv == 3;
      print(p.left(), resid ? lv + 1 : lv, out);
      switch (p.kind()) {
        case Formula::Kind::Mul: out += " * "; break;
        case Formula::Kind::LDiv: out += " \\ "; break;
        case Formula::Kind::RDiv: out += " / "; break;
        case Formula::Kind::Meet: out += " & "; break;
        default: out += " | "; break;
      }
      print(p.right(), lv + 1, out);
    }
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string to_string(const Formula& p) {
  std::string out;
  print(p, 0, out);
  return out;
}

Formula fin_axiom() {
  const Formula x = Formula::var(1);
  return Formula::iff(Formula::ldiv(x, Formula::unit()),
                      Formula::ldiv(Formula::mul(x, x), Formula::unit()));
}

// ---------------------------------------------------------------------------
// Semantics

namespace {

Element eval_checked(const Formula& p, const FiniteResiduatedLattice& a,
                     const std::vector<Element>& v) {
  switch (p.kind()) {
    case Formula::Kind::Var: return v[p.var_index() - 1];
    case Formula::Kind::Unit: return a.e();
    case Formula::Kind::Falsum: return a.f();
    case Formula::Kind::Bottom: return a.bot();
    case Formula::Kind::Top: return a.top();
    default: break;
  }
  const Element l = eval_checked(p.left(), a, v);
  const Element r = eval_checked(p.right(), a, v);
  switch (p.kind()) {
    case Formula::Kind::Mul: return a.mul(l, r);
    case Formula::Kind::LDiv: return a.ldiv(l, r);
    case Formula::Kind::RDiv: return a.rdiv(l, r);
    case Formula::Kind::Meet: return a.meet(l, r);
    default: return a.join(l, r);
  }
}

// Advances an odometer over carrier^k, x1 fastest; false after the last.
bool next_assignment(std::vector<Element>& v, std::size_t n) {
  for (Element& x : v) {
    if (++x < n) return true;
    x = 0;
  }
  return false;
}

}  // namespace

Element eval(const Formula& p, const FiniteResiduatedLattice& a,
             const std::vector<Element>& assignment) {
  if (p.variable_count() > assignment.size()) {
    throw Error(ErrorKind::UnboundVariable,
                "x" + std::to_string(p.variable_count()) + " has no value");
  }
  for (Element x : assignment) {
    if (x >= a.size()) {
      throw Error(ErrorKind::RangeError, "assigned value " + std::to_string(x) + " out of range");
    }
  }
  return eval_checked(p, a, assignment);
}

bool designated(const FiniteResiduatedLattice& a, Element x) { return a.leq(a.e(), x); }

std::optional<Counterexample> refute(const FiniteResiduatedLattice& a,
                                     const std::vector<Formula>& premises,
                                     const Formula& conclusion) {
  std::size_t k = conclusion.variable_count();
  for (const Formula& g : premises) k = std::max(k, g.variable_count());
  std::vector<Element> v(k, 0);
  do {
    const Element c = eval_checked(conclusion, a, v);
    if (designated(a, c)) continue;
    std::vector<Element> values;
    bool holds = true;
    for (const Formula& g : premises) {
      values.push_back(eval_checked(g, a, v));
      if (!designated(a, values.back())) {
        holds = false;
        break;
      }
    }
    if (holds) return Counterexample{a, v, std::move(values), c};
  } while (next_assignment(v, a.size()));
  return std::nullopt;
}

bool validates(const FiniteResiduatedLattice& a, const std::vector<Formula>& premises,
               const Formula& conclusion) {
  return !refute(a, premises, conclusion).has_value();
}

bool fin_bridge(const FiniteResiduatedLattice& a) { return validates(a, {}, fin_axiom()); }

bool confirms(const Counterexample& c, const std::vector<Formula>& premises,
              const Formula& conclusion) {
  const FiniteResiduatedLattice& a = c.algebra;
  for (const Formula& g : premises) {
    if (!designated(a, eval(g, a, c.assignment))) return false;
  }
  return !designated(a, eval(conclusion, a, c.assignment));
}

Verdict decide_over(const std::vector<FiniteResiduatedLattice>& algebras,
                    const std::vector<Formula>& premises, const Formula& conclusion) {
  Verdict verdict;
  for (const FiniteResiduatedLattice& a : algebras) {
    ++verdict.algebras_checked;
    verdict.bound = std::max(verdict.bound, a.size());
    if (auto c = refute(a, premises, conclusion)) {
      if (!confirms(*c, premises, conclusion)) {
        throw Error(ErrorKind::AxiomViolation, "counter-model failed re-evaluation");
      }
      verdict.counterexample = std::move(c);
      return verdict;
    }
  }
  return verdict;
}

Verdict decide_bounded(const std::vector<Formula>& premises, const Formula& conclusion,
                       AlgebraClass cls, std::size_t n_max) {
  Verdict verdict = decide_over(enumerate_chains(n_max, cls).chains, premises, conclusion);
  verdict.bound = n_max;
  return verdict;
}

}  // namespace reslat
