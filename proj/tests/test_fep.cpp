#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "reslat/enumeration.hpp"
#include "reslat/fep.hpp"

using namespace reslat;

namespace {

FiniteResiduatedLattice l3() {
  return FiniteResiduatedLattice::chain(3, {0, 0, 0, 0, 0, 1, 0, 1, 2}, 2, 0);
}

std::vector<std::vector<Element>> valid_subsets(const FiniteResiduatedLattice& a) {
  std::vector<std::vector<Element>> out;
  const Constants& c = a.constants();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    bool ok = true;
    for (Element k : {c.e, c.f, c.bot, c.top}) ok = ok && ((mask >> k) & 1U);
    if (!ok) continue;
    std::vector<Element> s;
    for (Element x = 0; x < a.size(); ++x) {
      if ((mask >> x) & 1U) s.push_back(x);
    }
    out.push_back(s);
  }
  return out;
}

std::set<std::uint32_t> elements_of(const DownsetAlgebra& d, const MSubset& s) {
  std::set<std::uint32_t> out;
  for (std::size_t i = 0; i < s.universe(); ++i) {
    if (s.contains(i)) out.insert(d.monoid().elements[i]);
  }
  return out;
}

void compare_with_oracle(const FiniteResiduatedLattice& a, const std::vector<Element>& b,
                         FepMode mode) {
  const DownsetAlgebra d = build_D(a, b, mode);
  const oracle::DownsetOracle o(a, d.subalgebra().elements(), mode == FepMode::TwoSided);
  REQUIRE(std::set<std::uint32_t>(d.monoid().elements.begin(), d.monoid().elements.end()) ==
          o.monoid);
  REQUIRE(d.carrier().size() == o.carrier.size());
  REQUIRE(d.context_sets().size() == o.context_sets.size());
  std::map<std::set<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < d.carrier().size(); ++i) {
    const auto s = elements_of(d, d.as_set(i));
    REQUIRE(o.carrier.count(s) == 1);
    index[s] = i;
  }
  for (const auto& x : o.carrier) {
    for (const auto& y : o.carrier) {
      REQUIRE(d.algebra().mul(static_cast<Element>(index.at(x)),
                              static_cast<Element>(index.at(y))) == index.at(o.product(a, x, y)));
    }
  }
}

}  // namespace

TEST_CASE("construction modes") {
  CHECK(parse_fep_mode("ul") == FepMode::Commutative);
  CHECK(parse_fep_mode("psul") == FepMode::TwoSided);
  CHECK(parse_fep_mode("iul") == FepMode::Involutive);
  CHECK_THROWS_AS(parse_fep_mode("mv"), Error);
  CHECK(std::string(fep_mode_name(FepMode::TwoSided)) == "psul");
}

TEST_CASE("partial subalgebra") {
  const auto a = l3();
  try {
    PartialSubalgebra b(a, {0, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
  try {
    PartialSubalgebra b(a, {0, 2, 7});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RangeError);
  }
  const PartialSubalgebra b(a, {2, 0, 0});
  CHECK(b.elements() == std::vector<Element>{0, 2});
  CHECK(b.mul(2, 2) == std::optional<Element>(2));
  CHECK(b.ldiv(2, 0) == std::optional<Element>(0));
  const PartialSubalgebra full(a, {0, 1, 2});
  CHECK(full.mul(1, 1) == std::optional<Element>(0));
  CHECK(full.closed_under_negation());

  // On the 4-element Lukasiewicz chain 1.2 = 0 and 2\1 = 2.
  const auto l4 = FiniteResiduatedLattice::chain(4, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 2, 0, 1, 2, 3}, 3, 0);
  const PartialSubalgebra part(l4, {0, 2, 3});
  CHECK_FALSE(part.ldiv(2, 0).has_value());
  CHECK_FALSE(part.closed_under_negation());
  CHECK(part.negation_closure().elements() == std::vector<Element>{0, 1, 2, 3});
}

TEST_CASE("generated monoid") {
  const auto a = l3();
  CHECK(generate_monoid(PartialSubalgebra(a, {0, 1, 2})).elements == std::vector<Element>{0, 1, 2});
  CHECK(generate_monoid(PartialSubalgebra(a, {0, 2})).elements == std::vector<Element>{0, 2});
  for_each_chain(5, AlgebraClass::HpsULStar, [](const FiniteResiduatedLattice& c) {
    for (const auto& s : valid_subsets(c)) {
      const PartialSubalgebra b(c, s);
      const GeneratedMonoid m = generate_monoid(b);
      REQUIRE(std::is_sorted(m.elements.begin(), m.elements.end()));
      for (Element x : s) REQUIRE(m.position(x).has_value());
      for (Element x : m.elements) {
        for (Element y : m.elements) REQUIRE(m.position(c.mul(x, y)).has_value());
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        const Derivation& d = m.certificate[i];
        if (d.generator) {
          REQUIRE((b.contains(m.elements[i]) || m.elements[i] == c.e()));
        } else {
          REQUIRE(c.mul(m.elements[d.left], m.elements[d.right]) == m.elements[i]);
        }
      }
    }
  });
}

TEST_CASE("context sets and closure on the Lukasiewicz chain") {
  const auto a = l3();
  const DownsetAlgebra d = build_D(a, {0, 1, 2}, FepMode::Commutative);
  const GeneratedMonoid& m = d.monoid();
  CHECK(context_set(a, m, Context{1, 2, 0}).max_pos == 1);  // (1 -> 0] = {0, 1}
  for (Element b = 0; b < 3; ++b) CHECK(context_set(a, m, Context{2, 2, b}).max_pos == b);
  for (Element x = 0; x < 3; ++x) CHECK(context_set(a, m, Context{x, 2, 2}).max_pos == 2);

  CHECK(d.closure(d.bottom()) == d.bottom());
  CHECK(d.closure(d.whole()) == d.whole());
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const MSubset x = MSubset::from_mask(3, mask);
    CHECK(d.closure(d.closure(x)) == d.closure(x));
  }
}

TEST_CASE("the Lukasiewicz chain reconstructs itself") {
  const auto a = l3();
  const DownsetAlgebra d = build_D(a, {0, 1, 2}, FepMode::Commutative);
  CHECK(d.monoid_size() == 3);
  REQUIRE(d.carrier().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d.carrier()[i].max_pos == i);
  CHECK(d.algebra() == a);
  const EmbeddingReport r = verify_embedding(d);
  CHECK(r.image == std::vector<Element>{0, 1, 2});

  const MtoPResult top = check_MtoP(d, 2);
  CHECK(top.size == 1);
  const MtoPResult zero = check_MtoP(d, 0);
  CHECK(zero.size == 3);
  CHECK(zero.is_linear);
  for (const LemmaCheck& c : verify_lemmas(d)) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
    CHECK(c.instances > 0);
  }
}

TEST_CASE("carrier and product agree with the set-level oracle") {
  for_each_chain(4, AlgebraClass::UL, [](const FiniteResiduatedLattice& a) {
    for (const auto& s : valid_subsets(a)) compare_with_oracle(a, s, FepMode::Commutative);
  });
  for_each_chain(4, AlgebraClass::HpsULStar, [](const FiniteResiduatedLattice& a) {
    for (const auto& s : valid_subsets(a)) compare_with_oracle(a, s, FepMode::TwoSided);
  });
}

TEST_CASE("every property holds on small instances") {
  for_each_chain(4, AlgebraClass::UL, [](const FiniteResiduatedLattice& a) {
    for (const auto& s : valid_subsets(a)) {
      const DownsetAlgebra d = build_D(a, s, FepMode::Commutative);
      CHECK(belongs(check_axioms(d.algebra()), AlgebraClass::ULOmega));
      CHECK(d.unit() == d.principal(a.e()));
      for (const LemmaCheck& c : verify_lemmas(d)) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        REQUIRE(c.passed);
      }
    }
  });
}

TEST_CASE("involutive mode closes the subset under negation") {
  const auto l4 = FiniteResiduatedLattice::chain(4, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 2, 0, 1, 2, 3}, 3, 0);
  const DownsetAlgebra d = build_D(l4, {0, 2, 3}, FepMode::Involutive);
  CHECK(d.subset_enlarged());
  CHECK(d.subalgebra().elements() == std::vector<Element>{0, 1, 2, 3});
  for (std::size_t i = 0; i < d.carrier().size(); ++i) {
    const MSubset x = d.as_set(i);
    CHECK(d.tilde(d.tilde(x)) == x);
  }
  CHECK(belongs(check_axioms(d.algebra()), AlgebraClass::IULOmega));
  CHECK_FALSE(build_D(l4, {0, 1, 2, 3}, FepMode::Involutive).subset_enlarged());
}

TEST_CASE("preconditions") {
  const auto l = l3();
  const auto product = direct_product(l, l);
  try {
    build_D(product, {0, 8}, FepMode::Commutative);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
  // A chain outside the commutative classes.
  std::optional<FiniteResiduatedLattice> noncommutative;
  for_each_chain(4, AlgebraClass::HpsULStar, [&](const FiniteResiduatedLattice& a) {
    if (!noncommutative && !check_axioms(a).is_commutative) noncommutative = a;
  });
  REQUIRE(noncommutative.has_value());
  std::vector<Element> all;
  for (Element x = 0; x < noncommutative->size(); ++x) all.push_back(x);
  CHECK_THROWS_AS(build_D(*noncommutative, all, FepMode::Commutative), Error);
  CHECK_NOTHROW(build_D(*noncommutative, all, FepMode::TwoSided));
  CHECK_THROWS_AS(check_MtoP(build_D(l, {0, 2}, FepMode::Commutative), 1), Error);
}

TEST_CASE("subset helpers") {
  const MSubset a = MSubset::from_mask(4, 0b0011);
  CHECK(a.downset_max() == std::optional<std::size_t>(1));
  CHECK_FALSE(MSubset::from_mask(4, 0b0101).downset_max().has_value());
  CHECK_FALSE(MSubset(4).downset_max().has_value());
  CHECK((a | MSubset::from_mask(4, 0b0100)) == MSubset::prefix(4, 2));
  CHECK((a & MSubset::from_mask(4, 0b0110)).count() == 1);
  CHECK(a.subset_of(MSubset::prefix(4, 3)));
}
