#pragma once

// Formulas over {&, |, *, \, /, e, f, bot, top} with variables x1, x2, ...
// and their algebraic semantics: a formula holds under an assignment when
// its value is >= e.
//
// Grammar, loosest binding first:
//   formula := disj ('<->' disj)?
//   disj    := conj ('|' conj)*
//   conj    := resid ('&' resid)*
//   resid   := prod (('\' | '/') prod)?
//   prod    := unary ('*' unary)*
//   unary   := '~' unary | atom
//   atom    := xN | e | f | bot | top | '(' formula ')'
// ~p abbreviates p \ f and p <-> q abbreviates (p \ q) & (q \ p).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

class Formula {
 public:
  enum class Kind { Var, Unit, Falsum, Bottom, Top, Mul, LDiv, RDiv, Meet, Join };

  static Formula var(std::size_t index);  // index >= 1
  static Formula unit();
  static Formula falsum();
  static Formula bottom();
  static Formula top();
  static Formula mul(Formula a, Formula b);
  static Formula ldiv(Formula a, Formula b);  // a \ b
  static Formula rdiv(Formula a, Formula b);  // a / b
  static Formula meet(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula neg(Formula a);              // a \ f
  static Formula iff(Formula a, Formula b);   // (a \ b) & (b \ a)

  Kind kind() const noexcept { return node_->kind; }
  std::size_t var_index() const noexcept { return node_->index; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  bool is_binary() const noexcept { return node_->left != nullptr; }

  // Largest variable index occurring, 0 for closed formulas.
  std::size_t variable_count() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

// Throws PositionedError(ParseError) carrying the character offset.
Formula parse_formula(std::string_view text);

// Minimal parentheses; parse_formula(to_string(p)) == p.
std::string to_string(const Formula& p);

// The axiom (x1 \ e) <-> ((x1 * x1) \ e).
Formula fin_axiom();

// assignment[i] is the value of x(i+1). Throws UnboundVariable when a
// variable has no value, RangeError for values outside the carrier.
Element eval(const Formula& p, const FiniteResiduatedLattice& a,
             const std::vector<Element>& assignment);

bool designated(const FiniteResiduatedLattice& a, Element x);

struct Counterexample {
  FiniteResiduatedLattice algebra;
  std::vector<Element> assignment;
  std::vector<Element> premise_values;
  Element conclusion_value = 0;
};

// First assignment (odometer order, x1 fastest) making every premise
// designated and the conclusion undesignated.
std::optional<Counterexample> refute(const FiniteResiduatedLattice& a,
                                     const std::vector<Formula>& premises,
                                     const Formula& conclusion);

// True iff no assignment into A refutes the consequence.
bool validates(const FiniteResiduatedLattice& a, const std::vector<Formula>& premises,
               const Formula& conclusion);

// Whether A validates fin_axiom(); agrees with check_axioms(a).has_fin.
bool fin_bridge(const FiniteResiduatedLattice& a);

// Re-evaluates the counter-model from scratch.
bool confirms(const Counterexample& c, const std::vector<Formula>& premises,
              const Formula& conclusion);

struct Verdict {
  // Without a counterexample the verdict only says that no chain of the
  // class up to `bound` elements refutes the consequence.
  std::optional<Counterexample> counterexample;
  std::size_t bound = 0;
  std::size_t algebras_checked = 0;

  bool valid_up_to_bound() const noexcept { return !counterexample.has_value(); }
};

// Sweeps the given algebras in order and stops at the first refutation.
Verdict decide_over(const std::vector<FiniteResiduatedLattice>& algebras,
                    const std::vector<Formula>& premises, const Formula& conclusion);

// Sweeps every canonical chain of the class with 2..n_max elements.
// Throws InvalidArgument when n_max < 2.
Verdict decide_bounded(const std::vector<Formula>& premises, const Formula& conclusion,
                       AlgebraClass cls, std::size_t n_max);

}  // namespace reslat
