#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

// Canonical finite chains of one class, sizes 2..max_size. Stream order is
// size, then e, then f, then product table (row-major, ascending values).
struct ChainFamily {
  std::size_t max_size = 0;
  AlgebraClass cls = AlgebraClass::HpsUL;
  std::vector<FiniteResiduatedLattice> chains;
};

// All order-preserving, associative product tables on the n-chain with unit
// e and absorbing bot, in row-major ascending order. Requires n >= 2.
std::vector<std::vector<Element>> chain_monoid_tables(std::size_t n, Element e,
                                                      bool commutative);

// Visits each canonical chain of the class in stream order.
void for_each_chain(std::size_t max_size, AlgebraClass cls,
                    const std::function<void(const FiniteResiduatedLattice&)>& visit);

// Throws InvalidArgument when max_size < 2.
ChainFamily enumerate_chains(std::size_t max_size, AlgebraClass cls);

// Componentwise order, operations and constants; (a, b) has index
// a * |B| + b.
FiniteResiduatedLattice direct_product(const FiniteResiduatedLattice& a,
                                       const FiniteResiduatedLattice& b);

FiniteResiduatedLattice trivial_algebra();

// A partition of the carrier. Block ids are numbered in order of first
// appearance, so equal partitions compare equal.
class Congruence {
 public:
  explicit Congruence(std::vector<Element> block_of);

  static Congruence diagonal(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  Element block(Element x) const { return block_of_[x]; }
  bool related(Element x, Element y) const { return block_of_[x] == block_of_[y]; }
  const std::vector<Element>& blocks() const noexcept { return block_of_; }

  bool is_diagonal() const noexcept { return blocks_ == block_of_.size(); }
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  std::vector<Element> block_of_;
  std::size_t blocks_;
};

Congruence meet(const Congruence& a, const Congruence& b);
Congruence join(const Congruence& a, const Congruence& b);

// True when every basic operation is block-wise well defined.
bool is_congruence(const FiniteResiduatedLattice& a, const Congruence& theta);

// Smallest congruence identifying x and y.
Congruence principal_congruence(const FiniteResiduatedLattice& a, Element x, Element y);

// Every congruence, sorted by partition order; built from principal
// congruences by join closure.
std::vector<Congruence> all_congruences(const FiniteResiduatedLattice& a);

struct Quotient {
  FiniteResiduatedLattice algebra;
  std::vector<Element> projection;  // x -> image of x in the quotient
};

// A chain quotient is relabelled into canonical chain form.
Quotient quotient(const FiniteResiduatedLattice& a, const Congruence& theta);

struct SubdirectFactor {
  Congruence theta;
  Quotient image;
};

struct SubdirectDecomposition {
  std::vector<SubdirectFactor> factors;

  // x -> (projection_1(x), ..., projection_m(x))
  std::vector<Element> embed(Element x) const;
};

// Represents a finite algebra as a subdirect product of chain quotients in
// the same classes as the input. Throws DecompositionFailed if no family of
// chain quotients separates all elements.
SubdirectDecomposition subdirect_decompose(const FiniteResiduatedLattice& a);

}  // namespace reslat
