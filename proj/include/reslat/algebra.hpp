#pragma once

// Finite bounded residuated lattices stored as dense index tables.
//
// Elements are the indices 0..n-1. The order is an n*n relation; a chain is
// stored canonically, with index order equal to lattice order, bot = 0 and
// top = n-1. Join, meet and both residuals are precomputed on construction.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reslat/error.hpp"

namespace reslat {

using Element = std::uint32_t;

struct Constants {
  Element e = 0;
  Element f = 0;
  Element bot = 0;
  Element top = 0;

  friend bool operator==(const Constants&, const Constants&) = default;
};

// Unvalidated algebra data, as read from a file or produced by a search.
struct AlgebraTables {
  std::size_t size = 0;
  std::vector<char> leq;         // leq[x * size + y] != 0 iff x <= y
  std::vector<Element> product;  // product[x * size + y] = x . y
  Constants constants;

  static AlgebraTables chain(std::size_t n, std::vector<Element> product,
                             Element e, Element f);
};

struct ResidualTables {
  std::vector<Element> left;   // left[x * n + z]  = x \ z
  std::vector<Element> right;  // right[z * n + y] = z / y
};

// x\z = max{y : x.y <= z} and z/y = max{x : x.y <= z}. Throws
// Error(NotResiduated) if the product is not order preserving, bot is not
// absorbing, or one of the defining sets has no greatest element.
ResidualTables derive_residuals(std::size_t n, std::span<const Element> product,
                                std::span<const char> leq, Element bot);

class FiniteResiduatedLattice {
 public:
  // Throws MalformedTable (indices, order, lattice), AxiomViolation (monoid)
  // or NotResiduated.
  explicit FiniteResiduatedLattice(AlgebraTables tables);

  static FiniteResiduatedLattice chain(std::size_t n, std::vector<Element> product,
                                       Element e, Element f);

  std::size_t size() const noexcept { return n_; }
  const Constants& constants() const noexcept { return c_; }
  Element e() const noexcept { return c_.e; }
  Element f() const noexcept { return c_.f; }
  Element bot() const noexcept { return c_.bot; }
  Element top() const noexcept { return c_.top; }

  // True when the order is total and coincides with the index order.
  bool is_canonical_chain() const noexcept { return canonical_chain_; }

  bool leq(Element x, Element y) const { return t_.leq[x * n_ + y] != 0; }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  Element mul(Element x, Element y) const { return t_.product[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  // x \ z
  Element ldiv(Element x, Element z) const { return ldiv_[x * n_ + z]; }
  // z / y
  Element rdiv(Element z, Element y) const { return rdiv_[z * n_ + y]; }
  // x \ f
  Element neg(Element x) const { return ldiv(x, c_.f); }
  // f / x
  Element neg_right(Element x) const { return rdiv(c_.f, x); }
  // x^k with x^0 = e
  Element power(Element x, unsigned k) const;

  std::span<const Element> product_table() const noexcept { return t_.product; }
  std::span<const char> order_relation() const noexcept { return t_.leq; }
  const AlgebraTables& tables() const noexcept { return t_; }

  friend bool operator==(const FiniteResiduatedLattice& a,
                         const FiniteResiduatedLattice& b) {
    return a.n_ == b.n_ && a.c_ == b.c_ && a.t_.leq == b.t_.leq &&
           a.t_.product == b.t_.product;
  }

 private:
  AlgebraTables t_;
  std::size_t n_;
  Constants c_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  bool canonical_chain_;
};

struct ClassReport {
  bool is_lattice_monoid = false;
  bool is_residuated = false;
  bool is_chain = false;
  bool is_semilinear = false;
  bool has_wcm = false;
  bool is_commutative = false;
  bool is_involutive = false;
  bool has_fin = false;

  bool hpsul = false;
  bool hpsul_star = false;
  bool ul = false;
  bool iul = false;
  bool hpsul_star_omega = false;
  bool ul_omega = false;
  bool iul_omega = false;

  // Strongest class name followed by "chain" or "algebra", e.g.
  // "IUL_omega chain"; "none" when not an HpsUL-algebra.
  std::string verdict() const;
};

// Throws MalformedTable for out-of-range indices or a non-lattice order.
ClassReport check_axioms(const AlgebraTables& tables);
ClassReport check_axioms(const FiniteResiduatedLattice& a);

// (a \ (b.a)) /\ e
Element lambda_poly(const FiniteResiduatedLattice& alg, Element a, Element b);
// ((a.b) / a) /\ e
Element rho_poly(const FiniteResiduatedLattice& alg, Element a, Element b);

bool check_semilinearity(const FiniteResiduatedLattice& a);

// Two-generator, bounded-exponent form of the exponent invariance of
// products below e: for all x, y and 1 <= k1,k2,l1,l2 <= n_max,
// x^k1 y^k2 <= e iff x^l1 y^l2 <= e (and likewise for single powers).
// Throws PreconditionViolated unless the algebra has Wcm and Fin.
bool check_fin_exponents(const FiniteResiduatedLattice& a, unsigned n_max);

// For all x, y: x.y <= e iff x.x.y <= e. Equivalent to x\e = x^2\e.
bool fin_by_exponents(const FiniteResiduatedLattice& a);

// The classes of the HpsUL family a chain or algebra can be filtered by.
enum class AlgebraClass {
  HpsUL,
  HpsULStar,
  HpsULStarOmega,
  UL,
  ULOmega,
  IUL,
  IULOmega,
};

// Accepts the CLI spellings: hpsul, hpsul-star, hpsul-star-omega, ul,
// ul-omega, iul, iul-omega. Throws InvalidArgument otherwise.
AlgebraClass parse_class(const std::string& name);
const char* class_name(AlgebraClass c) noexcept;
bool belongs(const ClassReport& report, AlgebraClass c) noexcept;
bool requires_commutative(AlgebraClass c) noexcept;

}  // namespace reslat
