#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "reslat/enumeration.hpp"
#include "reslat/io.hpp"
#include "reslat/logic.hpp"

using namespace reslat;

namespace {

FiniteResiduatedLattice l3() {
  return FiniteResiduatedLattice::chain(3, {0, 0, 0, 0, 0, 1, 0, 1, 2}, 2, 0);
}

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const PositionedError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 4);
  switch (pick(rng)) {
    case 0: return Formula::unit();
    case 1: return Formula::falsum();
    case 2: return Formula::bottom();
    case 3: return Formula::top();
    case 4: return Formula::var(1 + rng() % 3);
    case 5: return Formula::mul(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return Formula::ldiv(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7: return Formula::rdiv(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8: return Formula::meet(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::join(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing atoms and precedence") {
  CHECK(parse_formula("e") == Formula::unit());
  CHECK(parse_formula(" top ") == Formula::top());
  const Formula x1 = Formula::var(1);
  const Formula x2 = Formula::var(2);
  const Formula x3 = Formula::var(3);
  CHECK(parse_formula("x1 * x2 \\ x3") == Formula::ldiv(Formula::mul(x1, x2), x3));
  CHECK(parse_formula("x1 & x2 | x3") == Formula::join(Formula::meet(x1, x2), x3));
  CHECK(parse_formula("x1 | x2 & x3") == Formula::join(x1, Formula::meet(x2, x3)));
  CHECK(parse_formula("~x1 * x2") == Formula::mul(Formula::neg(x1), x2));
  CHECK(parse_formula("x1 * x2 * x3") == Formula::mul(Formula::mul(x1, x2), x3));
  CHECK(parse_formula("x1 / x2 & x3") == Formula::meet(Formula::rdiv(x1, x2), x3));
  CHECK(parse_formula("x1 <-> x2") == Formula::iff(x1, x2));
}

TEST_CASE("the Fin axiom parses to its AST") {
  CHECK(parse_formula("(x1 \\ e) <-> ((x1 * x1) \\ e)") == fin_axiom());
}

TEST_CASE("parse errors carry offsets") {
  CHECK(parse_error_offset("x1 \\ x2 \\ x3") == 8);
  CHECK(parse_error_offset("x1 / x2 \\ x3") == 8);
  CHECK(parse_error_offset("x1 <-> x2 <-> x3") == 10);
  CHECK(parse_error_offset("(x1 * x2") == 8);
  CHECK(parse_error_offset("x1 + x2") == 3);
  CHECK(parse_error_offset("x0") == 0);
  CHECK(parse_error_offset("y1") == 0);
  CHECK(parse_error_offset("") == 0);
  CHECK(parse_error_offset("x1 x2") == 3);
}

TEST_CASE("printing round trips") {
  for (const char* text : {"x1", "x1 \\ e", "(x1 \\ x2) \\ x3", "x1 \\ (x2 \\ x3)",
                           "x1 * (x2 * x3)", "(x1 | x2) & x3", "~~x1", "x1 <-> x2",
                           "(x1 \\ e) <-> ((x1 * x1) \\ e)", "x2 / (x1 * x3) | bot"}) {
    const Formula p = parse_formula(text);
    CHECK(parse_formula(to_string(p)) == p);
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Formula p = random_formula(rng, 4);
    const std::string s = to_string(p);
    CAPTURE(s);
    REQUIRE(parse_formula(s) == p);
    REQUIRE(to_string(parse_formula(s)) == s);
  }
  CHECK(to_string(parse_formula("((x1 * x2))")) == "x1 * x2");
}

TEST_CASE("evaluation") {
  const auto a = l3();
  CHECK(eval(Formula::unit(), a, {}) == a.e());
  CHECK(eval(parse_formula("x1 * x1"), a, {1}) == 0);
  CHECK(eval(parse_formula("x1 \\ x2"), a, {1, 0}) == 1);
  CHECK(eval(parse_formula("x2 / x1"), a, {1, 0}) == 1);
  try {
    eval(parse_formula("x1 * x3"), a, {1, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
  CHECK_THROWS_AS(eval(parse_formula("x1"), a, {5}), Error);
  for_each_chain(5, AlgebraClass::IUL, [](const FiniteResiduatedLattice& c) {
    for (Element x = 0; x < c.size(); ++x) REQUIRE(eval(parse_formula("~~x1"), c, {x}) == x);
  });
}

TEST_CASE("consequence") {
  const auto a = l3();
  const Formula x1 = Formula::var(1);
  CHECK(validates(a, {x1}, x1));
  CHECK(validates(a, {}, fin_axiom()));
  CHECK_FALSE(validates(a, {}, x1));
  CHECK(validates(a, {}, parse_formula("x1 \\ x1")));
}

TEST_CASE("formula and identity forms of Fin agree") {
  CHECK(fin_bridge(l3()));
  CHECK(fin_bridge(trivial_algebra()));
  for_each_chain(5, AlgebraClass::HpsUL, [&](const FiniteResiduatedLattice& c) {
    const ClassReport r = check_axioms(c);
    REQUIRE(fin_bridge(c) == r.has_fin);
    if (r.has_wcm) REQUIRE(fin_bridge(c));
  });
  // Subsets of Z2 under pointwise sum: {1}\{0} = {1} but {0}\{0} = {0}.
  const FiniteResiduatedLattice diamond(load_algebra(RESLAT_FIXTURES "/diamond.alg").tables);
  CHECK_FALSE(check_axioms(diamond).has_fin);
  CHECK_FALSE(fin_bridge(diamond));
  CHECK_FALSE(fin_bridge(direct_product(diamond, l3())));
}

TEST_CASE("integrality fails on a chain with e below top") {
  // Witness search over enumerated commutative chains.
  const Formula integrality = parse_formula("x1 \\ e");
  std::optional<Counterexample> witness;
  for_each_chain(3, AlgebraClass::ULOmega, [&](const FiniteResiduatedLattice& c) {
    if (!witness) witness = refute(c, {}, integrality);
  });
  REQUIRE(witness.has_value());
  CHECK(witness->algebra.lt(witness->algebra.e(), witness->algebra.top()));
  CHECK(witness->assignment == std::vector<Element>{witness->algebra.top()});
  CHECK(confirms(*witness, {}, integrality));
}

TEST_CASE("bounded decision") {
  const Verdict unit = decide_bounded({}, Formula::unit(), AlgebraClass::ULOmega, 4);
  CHECK(unit.valid_up_to_bound());
  CHECK(unit.bound == 4);
  CHECK(unit.algebras_checked == enumerate_chains(4, AlgebraClass::ULOmega).chains.size());

  const Verdict integrality = decide_bounded({}, parse_formula("x1 \\ e"), AlgebraClass::ULOmega, 3);
  REQUIRE_FALSE(integrality.valid_up_to_bound());
  CHECK(integrality.counterexample->algebra.size() == 3);
  CHECK(confirms(*integrality.counterexample, {}, parse_formula("x1 \\ e")));

  CHECK(decide_bounded({}, fin_axiom(), AlgebraClass::ULOmega, 5).valid_up_to_bound());
  CHECK(decide_bounded({}, fin_axiom(), AlgebraClass::HpsULStar, 4).valid_up_to_bound());
  // Small chains satisfy Fin even without Wcm.
  CHECK(decide_bounded({}, fin_axiom(), AlgebraClass::HpsUL, 4).valid_up_to_bound());

  // Premises restrict the assignments.
  const Verdict mp = decide_bounded({Formula::var(1), parse_formula("x1 \\ x2")}, Formula::var(2),
                                    AlgebraClass::HpsUL, 4);
  CHECK(mp.valid_up_to_bound());
  CHECK_THROWS_AS(decide_bounded({}, Formula::unit(), AlgebraClass::UL, 1), Error);
}

TEST_CASE("decision is deterministic") {
  const Formula p = parse_formula("(x1 \\ x2) | (x2 \\ x1)");
  const Formula q = parse_formula("x1 * x2 \\ x2 * x1");
  for (const Formula& f : {p, q}) {
    const Verdict a = decide_bounded({}, f, AlgebraClass::HpsUL, 4);
    const Verdict b = decide_bounded({}, f, AlgebraClass::HpsUL, 4);
    CHECK(a.valid_up_to_bound() == b.valid_up_to_bound());
    if (a.counterexample) {
      CHECK(a.counterexample->algebra == b.counterexample->algebra);
      CHECK(a.counterexample->assignment == b.counterexample->assignment);
    }
  }
}
