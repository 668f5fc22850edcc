#include "reslat/fep.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace reslat {

FepMode parse_fep_mode(const std::string& name) {
  if (name == "ul") return FepMode::Commutative;
  if (name == "psul") return FepMode::TwoSided;
  if (name == "iul") return FepMode::Involutive;
  throw Error(ErrorKind::InvalidArgument, "unknown construction mode '" + name + "'");
}

const char* fep_mode_name(FepMode mode) noexcept {
  switch (mode) {
    case FepMode::Commutative: return "ul";
    case FepMode::TwoSided: return "psul";
    case FepMode::Involutive: return "iul";
  }
  return "?";
}

AlgebraClass fep_source_class(FepMode mode) noexcept {
  switch (mode) {
    case FepMode::Commutative: return AlgebraClass::ULOmega;
    case FepMode::TwoSided: return AlgebraClass::HpsULStarOmega;
    case FepMode::Involutive: return AlgebraClass::IULOmega;
  }
  return AlgebraClass::HpsUL;
}

// ---------------------------------------------------------------------------
// PartialSubalgebra

PartialSubalgebra::PartialSubalgebra(FiniteResiduatedLattice parent,
                                     std::vector<Element> subset)
    : parent_(std::move(parent)), member_(parent_.size(), 0) {
  for (Element x : subset) {
    if (x >= parent_.size()) {
      throw Error(ErrorKind::RangeError, "subset element " + std::to_string(x) + " out of range");
    }
    member_[x] = 1;
  }
  for (Element x = 0; x < parent_.size(); ++x) {
    if (member_[x]) elements_.push_back(x);
  }
  const Constants& c = parent_.constants();
  for (Element k : {c.e, c.f, c.bot, c.top}) {
    if (!member_[k]) {
      throw Error(ErrorKind::PreconditionViolated,
                  "subset must contain e, f, bot and top (missing " + std::to_string(k) + ")");
    }
  }
}

bool PartialSubalgebra::closed_under_negation() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element b) { return contains(parent_.neg(b)); });
}

PartialSubalgebra PartialSubalgebra::negation_closure() const {
  std::vector<char> member = member_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < member.size(); ++x) {
      if (member[x] && !member[parent_.neg(x)]) {
        member[parent_.neg(x)] = 1;
        changed = true;
      }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < member.size(); ++x) {
    if (member[x]) out.push_back(x);
  }
  return PartialSubalgebra(parent_, std::move(out));
}

// ---------------------------------------------------------------------------
// Generated monoid

std::optional<std::size_t> GeneratedMonoid::position(Element x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

GeneratedMonoid generate_monoid(const PartialSubalgebra& b) {
  const FiniteResiduatedLattice& a = b.parent();
  if (!a.is_canonical_chain()) {
    throw Error(ErrorKind::PreconditionViolated, "the generated monoid needs a chain parent");
  }
  std::vector<Element> found;
  std::vector<Derivation> how;
  std::vector<std::size_t> slot(a.size(), a.size());
  auto add = [&](Element x, Derivation d) {
    if (slot[x] != a.size()) return false;
    slot[x] = found.size();
    found.push_back(x);
    how.push_back(d);
    return true;
  };
  add(a.e(), Derivation{});
  for (Element x : b.elements()) add(x, Derivation{});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = 0; j < found.size(); ++j) {
        changed |= add(a.mul(found[i], found[j]), Derivation{false, i, j});
      }
    }
  }

  // Re-index in chain order.
  GeneratedMonoid m;
  m.elements = found;
  std::sort(m.elements.begin(), m.elements.end());
  std::vector<std::size_t> new_pos(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) new_pos[i] = *m.position(found[i]);
  m.certificate.resize(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    Derivation d = how[i];
    if (!d.generator) {
      d.left = new_pos[d.left];
      d.right = new_pos[d.right];
    }
    m.certificate[new_pos[i]] = d;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subsets of M

MSubset MSubset::from_mask(std::size_t m, std::uint64_t mask) {
  MSubset s(m);
  for (std::size_t i = 0; i < m && i < 64; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

MSubset MSubset::prefix(std::size_t m, std::size_t max_pos) {
  MSubset s(m);
  for (std::size_t i = 0; i <= max_pos && i < m; ++i) s.insert(i);
  return s;
}

std::size_t MSubset::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool MSubset::subset_of(const MSubset& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::optional<std::size_t> MSubset::downset_max() const {
  std::size_t k = 0;
  while (k < bits_.size() && bits_[k]) ++k;
  if (k == 0) return std::nullopt;
  for (std::size_t i = k; i < bits_.size(); ++i) {
    if (bits_[i]) return std::nullopt;
  }
  return k - 1;
}

MSubset operator&(const MSubset& a, const MSubset& b) {
  MSubset s(a.universe());
  for (std::size_t i = 0; i < a.universe(); ++i) {
    if (a.contains(i) && b.contains(i)) s.insert(i);
  }
  return s;
}

MSubset operator|(const MSubset& a, const MSubset& b) {
  MSubset s(a.universe());
  for (std::size_t i = 0; i < a.universe(); ++i) {
    if (a.contains(i) || b.contains(i)) s.insert(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Contexts

Downset context_set(const FiniteResiduatedLattice& a, const GeneratedMonoid& m,
                    const Context& ctx) {
  MSubset s(m.size());
  for (std::size_t pos = 0; pos < m.size(); ++pos) {
    const Element value = a.mul(a.mul(ctx.left, m.elements[pos]), ctx.right);
    if (a.leq(value, ctx.bound)) s.insert(pos);
  }
  const auto top = s.downset_max();
  if (!top) {
    throw Error(ErrorKind::AxiomViolation, "context set is not a nonempty downset of M");
  }
  return Downset{*top};
}

// ---------------------------------------------------------------------------
// DownsetAlgebra

MSubset DownsetAlgebra::as_set(const Downset& d) const {
  return MSubset::prefix(m_.size(), d.max_pos);
}

MSubset DownsetAlgebra::as_set(std::size_t d) const { return as_set(carrier_.at(d)); }

std::optional<std::size_t> DownsetAlgebra::index_of(const MSubset& x) const {
  const auto top = x.downset_max();
  if (!top) return std::nullopt;
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), Downset{*top});
  if (it == carrier_.end() || it->max_pos != *top) return std::nullopt;
  return static_cast<std::size_t>(it - carrier_.begin());
}

MSubset DownsetAlgebra::closure(const MSubset& x) const {
  MSubset out = whole();
  for (const Downset& d : context_sets_) {
    MSubset s = as_set(d);
    if (x.subset_of(s)) out = out & s;
  }
  return out;
}

MSubset DownsetAlgebra::raw_product(const MSubset& x, const MSubset& y) const {
  const FiniteResiduatedLattice& a = parent();
  const std::size_t k = m_.size();
  MSubset out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!x.contains(i)) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y.contains(j)) out.insert(*m_.position(a.mul(m_.elements[i], m_.elements[j])));
    }
  }
  return out;
}

MSubset DownsetAlgebra::times(const MSubset& x, const MSubset& y) const {
  return closure(raw_product(x, y));
}

MSubset DownsetAlgebra::ldiv(const MSubset& x, const MSubset& y) const {
  const FiniteResiduatedLattice& a = parent();
  const std::size_t k = m_.size();
  MSubset out(k);
  for (std::size_t c = 0; c < k; ++c) {
    bool inside = true;
    for (std::size_t i = 0; i < k && inside; ++i) {
      if (x.contains(i)) inside = y.contains(*m_.position(a.mul(m_.elements[i], m_.elements[c])));
    }
    if (inside) out.insert(c);
  }
  return out;
}

MSubset DownsetAlgebra::rdiv(const MSubset& y, const MSubset& x) const {
  const FiniteResiduatedLattice& a = parent();
  const std::size_t k = m_.size();
  MSubset out(k);
  for (std::size_t c = 0; c < k; ++c) {
    bool inside = true;
    for (std::size_t i = 0; i < k && inside; ++i) {
      if (x.contains(i)) inside = y.contains(*m_.position(a.mul(m_.elements[c], m_.elements[i])));
    }
    if (inside) out.insert(c);
  }
  return out;
}

MSubset DownsetAlgebra::join(const MSubset& x, const MSubset& y) const {
  return closure(x | y);
}

MSubset DownsetAlgebra::meet(const MSubset& x, const MSubset& y) const { return x & y; }

MSubset DownsetAlgebra::tilde(const MSubset& x) const { return ldiv(x, falsum()); }

MSubset DownsetAlgebra::principal(Element b) const {
  const FiniteResiduatedLattice& a = parent();
  MSubset out(m_.size());
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (a.leq(m_.elements[i], b)) out.insert(i);
  }
  return out;
}

MSubset DownsetAlgebra::unit() const { return principal(parent().e()); }
MSubset DownsetAlgebra::falsum() const { return principal(parent().f()); }
MSubset DownsetAlgebra::bottom() const { return principal(parent().bot()); }
MSubset DownsetAlgebra::whole() const { return MSubset::prefix(m_.size(), m_.size() - 1); }

DownsetAlgebra build_D(const FiniteResiduatedLattice& a, const std::vector<Element>& subset,
                       FepMode mode) {
  if (!a.is_canonical_chain()) {
    throw Error(ErrorKind::PreconditionViolated, "the construction requires a chain");
  }
  if (!belongs(check_axioms(a), fep_source_class(mode))) {
    throw Error(ErrorKind::PreconditionViolated,
                std::string("parent chain is not in class ") + class_name(fep_source_class(mode)));
  }
  PartialSubalgebra requested(a, subset);
  bool enlarged = false;
  if (mode == FepMode::Involutive && !requested.closed_under_negation()) {
    requested = requested.negation_closure();
    enlarged = true;
  }

  DownsetAlgebra d(std::move(requested), mode);
  d.enlarged_ = enlarged;
  d.m_ = generate_monoid(d.b_);
  const GeneratedMonoid& m = d.m_;

  if (mode == FepMode::TwoSided) {
    for (Element a1 : m.elements) {
      for (Element a2 : m.elements) {
        for (Element b : d.b_.elements()) d.contexts_.push_back(Context{a1, a2, b});
      }
    }
  } else {
    for (Element a1 : m.elements) {
      for (Element b : d.b_.elements()) d.contexts_.push_back(Context{a1, a.e(), b});
    }
  }
  std::set<Downset> distinct;
  for (const Context& ctx : d.contexts_) distinct.insert(context_set(a, m, ctx));
  d.context_sets_.assign(distinct.begin(), distinct.end());

  // D: all intersections of context sets, the empty one being M.
  std::set<Downset> carrier(distinct.begin(), distinct.end());
  carrier.insert(Downset{m.size() - 1});
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Downset> snapshot(carrier.begin(), carrier.end());
    for (const Downset& x : snapshot) {
      for (const Downset& y : snapshot) {
        const auto top = (d.as_set(x) & d.as_set(y)).downset_max();
        if (!top) throw Error(ErrorKind::AxiomViolation, "empty intersection of context sets");
        grew |= carrier.insert(Downset{*top}).second;
      }
    }
  }
  d.carrier_.assign(carrier.begin(), carrier.end());

  const std::size_t k = d.carrier_.size();
  auto locate = [&](const MSubset& s, const char* what) {
    const auto idx = d.index_of(s);
    if (!idx) throw Error(ErrorKind::AxiomViolation, std::string(what) + " leaves the carrier D");
    return static_cast<Element>(*idx);
  };

  AlgebraTables t;
  t.size = k;
  t.leq.assign(k * k, 0);
  t.product.assign(k * k, 0);
  d.ldiv_table_.assign(k * k, 0);
  d.rdiv_table_.assign(k * k, 0);
  d.join_table_.assign(k * k, 0);
  d.meet_table_.assign(k * k, 0);
  std::vector<MSubset> sets;
  for (std::size_t i = 0; i < k; ++i) sets.push_back(d.as_set(i));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t cell = i * k + j;
      t.leq[cell] = sets[i].subset_of(sets[j]);
      t.product[cell] = locate(d.times(sets[i], sets[j]), "product");
      d.ldiv_table_[cell] = locate(d.ldiv(sets[i], sets[j]), "left residual");
      d.rdiv_table_[cell] = locate(d.rdiv(sets[i], sets[j]), "right residual");
      d.join_table_[cell] = locate(d.join(sets[i], sets[j]), "join");
      d.meet_table_[cell] = locate(d.meet(sets[i], sets[j]), "meet");
    }
  }
  t.constants = Constants{locate(d.unit(), "e^D"), locate(d.falsum(), "f^D"),
                          locate(d.bottom(), "bot^D"), locate(d.whole(), "top^D")};
  d.algebra_.emplace(std::move(t));
  return d;
}

// ---------------------------------------------------------------------------
// Embedding and finiteness checks

namespace {

std::string describe(const std::vector<Element>& m, const MSubset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < s.universe(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) os << ',';
    os << m[i];
    first = false;
  }
  os << '}';
  return os.str();
}

[[noreturn]] void embedding_violation(const std::string& what) {
  throw Error(ErrorKind::EmbeddingViolation, what);
}

}  // namespace

EmbeddingReport verify_embedding(const DownsetAlgebra& d) {
  const PartialSubalgebra& b = d.subalgebra();
  const FiniteResiduatedLattice& a = d.parent();
  const FiniteResiduatedLattice& alg = d.algebra();
  const std::vector<Element>& elems = b.elements();
  EmbeddingReport report;

  std::vector<Element> image(a.size(), 0);
  for (Element x : elems) {
    const auto idx = d.index_of(d.principal(x));
    if (!idx) embedding_violation("(" + std::to_string(x) + "] is not an element of D");
    image[x] = static_cast<Element>(*idx);
    report.image.push_back(image[x]);
    ++report.checks;
  }

  for (Element x : elems) {
    for (Element y : elems) {
      ++report.checks;
      if (x != y && image[x] == image[y]) {
        embedding_violation("elements " + std::to_string(x) + " and " + std::to_string(y) +
                            " have the same image");
      }
      if (a.leq(x, y) != alg.leq(image[x], image[y])) {
        embedding_violation("order between " + std::to_string(x) + " and " +
                            std::to_string(y) + " is not preserved and reflected");
      }
    }
  }

  struct Op {
    const char* name;
    std::optional<Element> (PartialSubalgebra::*partial)(Element, Element) const;
    Element (FiniteResiduatedLattice::*total)(Element, Element) const;
  };
  const Op ops[] = {
      {"product", &PartialSubalgebra::mul, &FiniteResiduatedLattice::mul},
      {"left residual", &PartialSubalgebra::ldiv, &FiniteResiduatedLattice::ldiv},
      {"right residual", &PartialSubalgebra::rdiv, &FiniteResiduatedLattice::rdiv},
      {"join", &PartialSubalgebra::join, &FiniteResiduatedLattice::join},
      {"meet", &PartialSubalgebra::meet, &FiniteResiduatedLattice::meet},
  };
  for (const Op& op : ops) {
    for (Element x : elems) {
      for (Element y : elems) {
        const auto value = (b.*op.partial)(x, y);
        if (!value) continue;
        ++report.checks;
        if (image[*value] != (alg.*op.total)(image[x], image[y])) {
          embedding_violation(std::string(op.name) + " of " + std::to_string(x) + " and " +
                              std::to_string(y) + " is not preserved");
        }
      }
    }
  }

  const Constants& c = a.constants();
  const Constants& cd = alg.constants();
  report.checks += 4;
  if (image[c.e] != cd.e) embedding_violation("e is not mapped to e^D");
  if (image[c.f] != cd.f) embedding_violation("f is not mapped to f^D");
  if (image[c.bot] != cd.bot) embedding_violation("bot is not mapped to bot^D");
  if (image[c.top] != cd.top) embedding_violation("top is not mapped to top^D");

  // Meets and joins of arbitrary nonempty subsets of B (min and max on a
  // chain) go to intersections and closed unions in D.
  if (elems.size() <= 16) {
    const std::uint64_t limit = std::uint64_t{1} << elems.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Element lo = a.top();
      Element hi = a.bot();
      MSubset inter = d.whole();
      MSubset uni(d.monoid_size());
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!((mask >> i) & 1U)) continue;
        lo = a.meet(lo, elems[i]);
        hi = a.join(hi, elems[i]);
        const MSubset s = d.as_set(image[elems[i]]);
        inter = inter & s;
        uni = uni | s;
      }
      report.checks += 2;
      if (d.index_of(inter) != std::optional<std::size_t>(image[lo])) {
        embedding_violation("a meet existing in B is not preserved");
      }
      if (d.index_of(d.closure(uni)) != std::optional<std::size_t>(image[hi])) {
        embedding_violation("a join existing in B is not preserved");
      }
    }
  }
  return report;
}

MtoPResult check_MtoP(const DownsetAlgebra& d, Element p) {
  if (!d.subalgebra().contains(p)) {
    throw Error(ErrorKind::InvalidArgument, "p must be an element of B");
  }
  const FiniteResiduatedLattice& a = d.parent();
  const GeneratedMonoid& m = d.monoid();
  std::set<Downset> family;
  if (d.mode() == FepMode::TwoSided) {
    for (Element m1 : m.elements) {
      for (Element m2 : m.elements) family.insert(context_set(a, m, Context{m1, m2, p}));
    }
  } else {
    for (Element m1 : m.elements) family.insert(context_set(a, m, Context{m1, a.e(), p}));
  }
  MtoPResult r;
  r.size = family.size();
  r.is_linear = true;
  for (const Downset& x : family) {
    for (const Downset& y : family) {
      const MSubset sx = d.as_set(x);
      const MSubset sy = d.as_set(y);
      if (!sx.subset_of(sy) && !sy.subset_of(sx)) r.is_linear = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

constexpr std::size_t kExhaustiveSubsetLimit = 5;
constexpr std::size_t kExhaustiveFamilyLimit = 10;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = detail();
    }
  }

  LemmaCheck done() { return std::move(result_); }

 private:
  LemmaCheck result_;
};

// Every subset of M when M is small; otherwise the empty set, singletons
// and all downsets.
std::vector<MSubset> subset_family(std::size_t m) {
  std::vector<MSubset> out;
  if (m <= kExhaustiveSubsetLimit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      out.push_back(MSubset::from_mask(m, mask));
    }
    return out;
  }
  out.emplace_back(m);
  for (std::size_t i = 0; i < m; ++i) {
    MSubset s(m);
    s.insert(i);
    out.push_back(s);
  }
  for (std::size_t i = 1; i < m; ++i) out.push_back(MSubset::prefix(m, i));
  return out;
}

// Nonempty subfamilies of D as bit masks; all of them when D is small,
// otherwise singletons and pairs.
std::vector<std::vector<std::size_t>> subfamilies(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k <= kExhaustiveFamilyLimit) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) f.push_back(i);
      }
      out.push_back(std::move(f));
    }
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) out.push_back(i == j ? std::vector{i} : std::vector{i, j});
  }
  return out;
}

}  // namespace

std::vector<LemmaCheck> verify_lemmas(const DownsetAlgebra& d) {
  const FiniteResiduatedLattice& a = d.parent();
  const FiniteResiduatedLattice& alg = d.algebra();
  const PartialSubalgebra& b = d.subalgebra();
  const std::vector<Element>& melems = d.monoid().elements;
  const std::size_t k = d.carrier().size();
  const bool commutative_mode = d.mode() != FepMode::TwoSided;
  auto show = [&](const MSubset& s) { return describe(melems, s); };

  std::vector<MSubset> dset;
  for (std::size_t i = 0; i < k; ++i) dset.push_back(d.as_set(i));
  const std::vector<MSubset> family = subset_family(d.monoid_size());
  const MSubset unit = d.unit();

  std::vector<LemmaCheck> out;

  {
    Check c("constants-are-context-sets");
    std::vector<MSubset> contexts;
    for (const Downset& s : d.context_sets()) contexts.push_back(d.as_set(s));
    auto is_context = [&](const MSubset& s) {
      return std::find(contexts.begin(), contexts.end(), s) != contexts.end();
    };
    c.expect(is_context(d.bottom()), [] { return "bot^D is not a context set"; });
    c.expect(is_context(d.whole()), [] { return "top^D is not a context set"; });
    c.expect(is_context(unit), [] { return "e^D is not a context set"; });
    c.expect(is_context(d.falsum()), [] { return "f^D is not a context set"; });
    for (const MSubset& x : dset) {
      c.expect(d.closure(x) == x, [&] { return "C(X) != X for X = " + show(x); });
    }
    out.push_back(c.done());
  }
  {
    Check c("closure-operator");
    for (const MSubset& x : family) {
      const MSubset cx = d.closure(x);
      c.expect(x.subset_of(cx), [&] { return "X not in C(X) for X = " + show(x); });
      c.expect(d.closure(cx) == cx, [&] { return "C(C(X)) != C(X) for X = " + show(x); });
      for (const MSubset& y : family) {
        if (!x.subset_of(y)) continue;
        c.expect(cx.subset_of(d.closure(y)),
                 [&] { return "C not monotone on " + show(x) + ", " + show(y); });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("residual-of-join");
    for (const MSubset& x : dset) {
      for (const MSubset& y : dset) {
        for (const MSubset& z : dset) {
          c.expect(d.ldiv(d.join(x, y), z) == d.meet(d.ldiv(x, z), d.ldiv(y, z)), [&] {
            return "(X v Y)\\Z differs for " + show(x) + ", " + show(y) + ", " + show(z);
          });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("residual-of-intersection");
    for (const MSubset& x : family) {
      for (const MSubset& y1 : family) {
        for (const MSubset& y2 : family) {
          const MSubset y = y1 & y2;
          c.expect(d.ldiv(x, y) == (d.ldiv(x, y1) & d.ldiv(x, y2)),
                   [&] { return "X\\(Y1 n Y2) differs for " + show(x); });
          c.expect(d.rdiv(y, x) == (d.rdiv(y1, x) & d.rdiv(y2, x)),
                   [&] { return "(Y1 n Y2)/X differs for " + show(x); });
        }
      }
      MSubset all = d.whole();
      MSubset left = d.whole();
      MSubset right = d.whole();
      for (const MSubset& y : dset) {
        all = all & y;
        left = left & d.ldiv(x, y);
        right = right & d.rdiv(y, x);
      }
      c.expect(d.ldiv(x, all) == left, [&] { return "X\\(n D) differs for " + show(x); });
      c.expect(d.rdiv(all, x) == right, [&] { return "(n D)/X differs for " + show(x); });
    }
    out.push_back(c.done());
  }
  {
    Check c("residuals-stay-in-carrier");
    for (const MSubset& x : family) {
      for (const MSubset& y : dset) {
        c.expect(d.index_of(d.ldiv(x, y)).has_value(),
                 [&] { return "X\\Y not in D for " + show(x) + ", " + show(y); });
        c.expect(d.index_of(d.rdiv(y, x)).has_value(),
                 [&] { return "Y/X not in D for " + show(x) + ", " + show(y); });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("monoid-laws");
    for (const MSubset& x : dset) {
      c.expect(d.times(x, unit) == x && d.times(unit, x) == x,
               [&] { return "e^D is not a unit at " + show(x); });
      for (const MSubset& y : dset) {
        c.expect(d.times(x, y).subset_of(unit) == d.times(y, x).subset_of(unit),
                 [&] { return "X.Y <= e^D but not Y.X for " + show(x) + ", " + show(y); });
        for (const MSubset& z : dset) {
          const MSubset lhs = d.times(d.times(x, y), z);
          const MSubset rhs = d.times(x, d.times(y, z));
          const MSubset flat = d.closure(d.raw_product(d.raw_product(x, y), z));
          c.expect(lhs == rhs && rhs == flat, [&] {
            return "associativity fails for " + show(x) + ", " + show(y) + ", " + show(z);
          });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("residuation");
    for (const MSubset& x : dset) {
      for (const MSubset& y : dset) {
        for (const MSubset& z : dset) {
          const bool p = d.times(x, y).subset_of(z);
          const bool l = y.subset_of(d.ldiv(x, z));
          const bool r = x.subset_of(d.rdiv(z, y));
          c.expect(p == l && l == r, [&] {
            return "residuation fails for " + show(x) + ", " + show(y) + ", " + show(z);
          });
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto xi = static_cast<Element>(i);
        const auto xj = static_cast<Element>(j);
        c.expect(d.construction_ldiv()[i * k + j] == alg.ldiv(xi, xj) &&
                     d.construction_rdiv()[i * k + j] == alg.rdiv(xi, xj),
                 [&] { return "set-level residual disagrees with the derived table"; });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("residual-currying");
    for (const MSubset& x : family) {
      for (const MSubset& y : family) {
        for (const MSubset& z : dset) {
          c.expect(d.ldiv(x, d.ldiv(y, z)) == d.ldiv(d.times(y, x), z), [&] {
            return "X\\(Y\\Z) != (Y.X)\\Z for " + show(x) + ", " + show(y) + ", " + show(z);
          });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("semilinearity");
    auto lambda = [&](const MSubset& u, const MSubset& w) {
      return d.meet(d.ldiv(u, d.times(w, u)), unit);
    };
    auto rho = [&](const MSubset& v, const MSubset& w) {
      return d.meet(d.rdiv(d.times(v, w), v), unit);
    };
    for (const MSubset& x : dset) {
      for (const MSubset& y : dset) {
        const MSubset xy = d.join(x, y);
        const MSubset p = d.ldiv(xy, x);
        const MSubset q = d.ldiv(xy, y);
        for (const MSubset& u : dset) {
          const MSubset l = lambda(u, p);
          for (const MSubset& v : dset) {
            c.expect(d.join(l, rho(v, q)) == unit, [&] {
              return "prelinearity identity fails for X = " + show(x) + ", Y = " + show(y);
            });
          }
        }
      }
    }
    out.push_back(c.done());
  }
  if (commutative_mode) {
    Check c("triple-negation");
    for (const MSubset& x : family) {
      c.expect(d.tilde(d.tilde(d.tilde(x))) == d.tilde(x),
               [&] { return "~~~X != ~X for X = " + show(x); });
    }
    out.push_back(c.done());
  }
  if (commutative_mode) {
    Check c("residual-embedding");
    for (Element x : b.elements()) {
      for (Element y : b.elements()) {
        if (!b.contains(a.ldiv(x, y))) continue;
        c.expect(d.principal(a.ldiv(x, y)) == d.ldiv(d.principal(x), d.principal(y)), [&] {
          return "(a\\b] != (a]\\(b] for a = " + std::to_string(x) + ", b = " + std::to_string(y);
        });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("square-below-unit");
    for (const MSubset& x : dset) {
      for (const MSubset& y : dset) {
        const MSubset xy = d.times(x, y);
        c.expect(xy.subset_of(unit) == d.times(xy, y).subset_of(unit), [&] {
          return "X.Y <= e^D iff X.Y.Y <= e^D fails for " + show(x) + ", " + show(y);
        });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("class-membership");
    const ClassReport r = check_axioms(alg);
    const AlgebraClass target = fep_source_class(d.mode());
    c.expect(belongs(r, target), [&] {
      return std::string("D is not in class ") + class_name(target) + " (" + r.verdict() + ")";
    });
    c.expect(r.has_fin, [] { return "D does not satisfy x\\e = x^2\\e"; });
    out.push_back(c.done());
  }
  const auto families = subfamilies(k);
  {
    Check c("complete-lattice");
    for (const auto& f : families) {
      MSubset inter = d.whole();
      MSubset uni(d.monoid_size());
      for (std::size_t i : f) {
        inter = inter & dset[i];
        uni = uni | dset[i];
      }
      const MSubset sup = d.closure(uni);
      c.expect(d.index_of(inter).has_value() && d.index_of(sup).has_value(),
               [] { return "a meet or join of a subfamily leaves D"; });
      for (const MSubset& z : dset) {
        if (uni.subset_of(z)) {
          c.expect(sup.subset_of(z), [] { return "C(union) is not the least upper bound"; });
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto xi = static_cast<Element>(i);
        const auto xj = static_cast<Element>(j);
        c.expect(d.construction_join()[i * k + j] == alg.join(xi, xj) &&
                     d.construction_meet()[i * k + j] == alg.meet(xi, xj),
                 [] { return "constructed join/meet disagree with inclusion order"; });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("residual-distributes-over-families");
    for (const auto& f : families) {
      MSubset inter = d.whole();
      MSubset uni(d.monoid_size());
      for (std::size_t i : f) {
        inter = inter & dset[i];
        uni = uni | dset[i];
      }
      const MSubset sup = d.closure(uni);
      for (const MSubset& y : dset) {
        MSubset join_of_residuals(d.monoid_size());
        MSubset meet_of_residuals = d.whole();
        for (std::size_t i : f) {
          const MSubset r = d.ldiv(dset[i], y);
          join_of_residuals = join_of_residuals | r;
          meet_of_residuals = meet_of_residuals & r;
        }
        c.expect(d.ldiv(inter, y) == d.closure(join_of_residuals),
                 [&] { return "(meet Xi)\\Y != join(Xi\\Y) for Y = " + show(y); });
        c.expect(d.ldiv(sup, y) == meet_of_residuals,
                 [&] { return "(join Xi)\\Y != meet(Xi\\Y) for Y = " + show(y); });
      }
    }
    out.push_back(c.done());
  }
  if (d.mode() == FepMode::Involutive) {
    Check c("double-negation");
    for (Element x : b.elements()) {
      const MSubset s = d.principal(x);
      c.expect(d.tilde(d.tilde(s)) == s,
               [&] { return "~~(b] != (b] for b = " + std::to_string(x); });
    }
    for (const Downset& s : d.context_sets()) {
      const MSubset set = d.as_set(s);
      c.expect(d.tilde(d.tilde(set)) == set,
               [&] { return "~~S != S for context set " + show(set); });
    }
    for (const MSubset& x : dset) {
      c.expect(d.tilde(d.tilde(x)) == x, [&] { return "~~X != X for X = " + show(x); });
    }
    c.expect(belongs(check_axioms(alg), AlgebraClass::IULOmega),
             [] { return "D is not an IUL_omega-algebra"; });
    out.push_back(c.done());
  }
  {
    Check c("partial-embedding");
    std::string failure;
    try {
      verify_embedding(d);
    } catch (const Error& err) {
      failure = err.what();
    }
    c.expect(failure.empty(), [&] { return failure; });
    out.push_back(c.done());
  }
  {
    Check c("residual-families-linear");
    const std::size_t m = d.monoid_size();
    const std::size_t bound = d.mode() == FepMode::TwoSided ? m * m : m;
    for (Element p : b.elements()) {
      const MtoPResult r = check_MtoP(d, p);
      c.expect(r.is_linear && r.size >= 1 && r.size <= bound, [&] {
        return "family for p = " + std::to_string(p) + " is not a finite chain";
      });
    }
    out.push_back(c.done());
  }
  {
    Check c("finite-carrier");
    c.expect(k <= d.context_sets().size() + 1,
             [] { return "D has more elements than intersections of context sets"; });
    for (const MSubset& x : dset) {
      c.expect(x.contains(0), [&] { return "element of D misses bot: " + show(x); });
    }
    out.push_back(c.done());
  }
  return out;
}

}  // namespace reslat
