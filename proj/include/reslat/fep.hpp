#pragma once

// Finite embedding construction over a finite chain A and a finite partial
// subalgebra B containing e, f, bot and top.
//
// M is the submonoid of A generated by B. A context names the downset
// {c in M : a1.c.a2 <= b} of M (a2 = e in the commutative modes). The
// closure C(X) of X is the intersection of all context sets containing X,
// and D is the set of all intersections of context sets. D carries the
// operations X.Y = C(XY), X\Y = {a : Xa in Y}, Y/X = {a : aX in Y},
// X v Y = C(X u Y) and X ^ Y = X n Y; b -> (b] embeds B into it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

enum class FepMode {
  Commutative,  // UL_omega chains, contexts (a -> b]
  TwoSided,     // HpsUL*_omega chains, contexts {c : a1 c a2 <= b}
  Involutive,   // IUL_omega chains; B is closed under negation first
};

// Accepts ul, psul, iul.
FepMode parse_fep_mode(const std::string& name);
const char* fep_mode_name(FepMode mode) noexcept;

class PartialSubalgebra {
 public:
  // Sorts and deduplicates the subset. Throws PreconditionViolated when it
  // misses e, f, bot or top, RangeError for indices outside A.
  PartialSubalgebra(FiniteResiduatedLattice parent, std::vector<Element> subset);

  const FiniteResiduatedLattice& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  bool contains(Element x) const { return x < member_.size() && member_[x] != 0; }

  // Partial operations: defined only when the parent's result lies in B.
  std::optional<Element> mul(Element a, Element b) const { return restrict(parent_.mul(a, b)); }
  std::optional<Element> ldiv(Element a, Element b) const { return restrict(parent_.ldiv(a, b)); }
  std::optional<Element> rdiv(Element a, Element b) const { return restrict(parent_.rdiv(a, b)); }
  std::optional<Element> join(Element a, Element b) const { return restrict(parent_.join(a, b)); }
  std::optional<Element> meet(Element a, Element b) const { return restrict(parent_.meet(a, b)); }

  bool closed_under_negation() const;
  PartialSubalgebra negation_closure() const;

 private:
  std::optional<Element> restrict(Element x) const {
    return contains(x) ? std::optional<Element>(x) : std::nullopt;
  }

  FiniteResiduatedLattice parent_;
  std::vector<Element> elements_;
  std::vector<char> member_;
};

// How an element of M was obtained: a generator from B, or the product of
// two earlier elements of M (given as positions in M).
struct Derivation {
  bool generator = true;
  std::size_t left = 0;
  std::size_t right = 0;
};

struct GeneratedMonoid {
  std::vector<Element> elements;  // ascending in the chain order
  std::vector<Derivation> certificate;

  std::size_t size() const noexcept { return elements.size(); }
  // Position of x in M, if present.
  std::optional<std::size_t> position(Element x) const;
};

// Throws PreconditionViolated unless the parent is a canonical chain.
GeneratedMonoid generate_monoid(const PartialSubalgebra& b);

// A set of positions of M.
class MSubset {
 public:
  MSubset() = default;
  explicit MSubset(std::size_t m) : bits_(m, 0) {}

  static MSubset from_mask(std::size_t m, std::uint64_t mask);
  // Positions 0..max_pos.
  static MSubset prefix(std::size_t m, std::size_t max_pos);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(std::size_t pos) const { return bits_[pos] != 0; }
  void insert(std::size_t pos) { bits_[pos] = 1; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const MSubset& other) const;
  // The downset's maximum position, if this is a nonempty downset of M.
  std::optional<std::size_t> downset_max() const;

  friend MSubset operator&(const MSubset& a, const MSubset& b);
  friend MSubset operator|(const MSubset& a, const MSubset& b);
  friend bool operator==(const MSubset&, const MSubset&) = default;

 private:
  std::vector<char> bits_;
};

// A nonempty downset of the finite chain M, stored by its maximum position.
struct Downset {
  std::size_t max_pos = 0;

  friend auto operator<=>(const Downset&, const Downset&) = default;
};

// (left . c . right <= bound); commutative contexts use right = e.
struct Context {
  Element left = 0;
  Element right = 0;
  Element bound = 0;
};

// {c in M : ctx.left . c . ctx.right <= ctx.bound}
Downset context_set(const FiniteResiduatedLattice& a, const GeneratedMonoid& m,
                    const Context& ctx);

class DownsetAlgebra {
 public:
  FepMode mode() const noexcept { return mode_; }
  const PartialSubalgebra& subalgebra() const noexcept { return b_; }
  const FiniteResiduatedLattice& parent() const noexcept { return b_.parent(); }
  const GeneratedMonoid& monoid() const noexcept { return m_; }
  // True when involutive mode had to add negations to the requested subset.
  bool subset_enlarged() const noexcept { return enlarged_; }

  const std::vector<Context>& contexts() const noexcept { return contexts_; }
  // Distinct context sets, ascending.
  const std::vector<Downset>& context_sets() const noexcept { return context_sets_; }
  // The carrier D, ascending under inclusion; index i is element i of
  // algebra().
  const std::vector<Downset>& carrier() const noexcept { return carrier_; }
  const FiniteResiduatedLattice& algebra() const noexcept { return *algebra_; }

  std::size_t monoid_size() const noexcept { return m_.size(); }
  MSubset as_set(std::size_t d) const;
  MSubset as_set(const Downset& d) const;
  std::optional<std::size_t> index_of(const MSubset& x) const;

  // Set-level operations on arbitrary subsets of M.
  MSubset closure(const MSubset& x) const;
  MSubset times(const MSubset& x, const MSubset& y) const;  // C(XY)
  MSubset raw_product(const MSubset& x, const MSubset& y) const;  // XY
  MSubset ldiv(const MSubset& x, const MSubset& y) const;  // {a : Xa in Y}
  MSubset rdiv(const MSubset& y, const MSubset& x) const;  // {a : aX in Y}
  MSubset join(const MSubset& x, const MSubset& y) const;  // C(X u Y)
  MSubset meet(const MSubset& x, const MSubset& y) const;  // X n Y
  MSubset tilde(const MSubset& x) const;                   // X \ (f]
  MSubset principal(Element b) const;                      // (b]

  MSubset unit() const;
  MSubset falsum() const;
  MSubset bottom() const;
  MSubset whole() const;

  // Tables computed from the set-level definitions, indexed by carrier
  // position; algebra() is built from times() and inclusion, these record
  // the construction's own residuals and lattice operations.
  const std::vector<Element>& construction_ldiv() const noexcept { return ldiv_table_; }
  const std::vector<Element>& construction_rdiv() const noexcept { return rdiv_table_; }
  const std::vector<Element>& construction_join() const noexcept { return join_table_; }
  const std::vector<Element>& construction_meet() const noexcept { return meet_table_; }

 private:
  friend DownsetAlgebra build_D(const FiniteResiduatedLattice&, const std::vector<Element>&,
                                FepMode);
  DownsetAlgebra(PartialSubalgebra b, FepMode mode) : mode_(mode), b_(std::move(b)) {}

  FepMode mode_;
  PartialSubalgebra b_;
  GeneratedMonoid m_;
  bool enlarged_ = false;
  std::vector<Context> contexts_;
  std::vector<Downset> context_sets_;
  std::vector<Downset> carrier_;
  std::optional<FiniteResiduatedLattice> algebra_;
  std::vector<Element> ldiv_table_;
  std::vector<Element> rdiv_table_;
  std::vector<Element> join_table_;
  std::vector<Element> meet_table_;
};

// The class a parent chain must belong to for the mode.
AlgebraClass fep_source_class(FepMode mode) noexcept;

// Throws PreconditionViolated if A is not a canonical chain of the mode's
// class or the subset misses a constant. Throws AxiomViolation if a
// constructed operation leaves D.
DownsetAlgebra build_D(const FiniteResiduatedLattice& a, const std::vector<Element>& subset,
                       FepMode mode);

struct EmbeddingReport {
  std::size_t checks = 0;
  std::vector<Element> image;  // image[i] = D index of (b_i]
};

// Confirms b -> (b] is a partial embedding of B into D that preserves the
// constants and all meets and joins existing in B. Throws
// EmbeddingViolation naming the first failure.
EmbeddingReport verify_embedding(const DownsetAlgebra& d);

struct MtoPResult {
  bool is_linear = false;
  std::size_t size = 0;
};

// The family {(m -> p] : m in M} (pairs (m1, m2) in two-sided mode).
MtoPResult check_MtoP(const DownsetAlgebra& d, Element p);

struct LemmaCheck {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string detail;  // first counterexample, if any
};

// Runs every property the construction must satisfy on this instance, in a
// fixed order. Items that only hold in the commutative modes are omitted in
// two-sided mode, involution items outside involutive mode.
std::vector<LemmaCheck> verify_lemmas(const DownsetAlgebra& d);

}  // namespace reslat
