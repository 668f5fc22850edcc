#include "reslat/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace reslat {

namespace {

// Backtracking search over product tables of a canonical n-chain. Cells in
// row 0 / column 0 are fixed to bot, row e / column e to the unit law; the
// rest are filled row-major with ascending candidate values.
class TableSearch {
 public:
  TableSearch(std::size_t n, Element e, bool commutative)
      : n_(n), e_(e), commutative_(commutative), p_(n * n, 0), known_(n * n, 0) {
    for (std::size_t x = 0; x < n; ++x) {
      set(0, x, 0);
      set(x, 0, 0);
    }
    for (std::size_t x = 1; x < n; ++x) {
      set(e, x, static_cast<Element>(x));
      set(x, e, static_cast<Element>(x));
    }
    for (std::size_t x = 1; x < n; ++x) {
      if (x == e) continue;
      for (std::size_t y = commutative ? x : 1; y < n; ++y) {
        if (y == e) continue;
        cells_.emplace_back(x, y);
      }
    }
  }

  std::vector<std::vector<Element>> run() {
    // The fixed rows must already be consistent (they are for e != 0).
    descend(0);
    return std::move(found_);
  }

 private:
  void set(std::size_t x, std::size_t y, Element v) {
    p_[x * n_ + y] = v;
    known_[x * n_ + y] = 1;
  }

  int at(std::size_t x, std::size_t y) const {
    return known_[x * n_ + y] ? static_cast<int>(p_[x * n_ + y]) : -1;
  }

  void descend(std::size_t idx) {
    if (idx == cells_.size()) {
      found_.push_back(p_);
      return;
    }
    const auto [x, y] = cells_[idx];
    int lo = 0;
    int hi = static_cast<int>(n_) - 1;
    auto bound = [&](std::size_t a, std::size_t b) {
      // Monotone neighbours of (a, b) that are already determined.
      if (a > 0 && at(a - 1, b) >= 0) lo = std::max(lo, at(a - 1, b));
      if (b > 0 && at(a, b - 1) >= 0) lo = std::max(lo, at(a, b - 1));
      if (a + 1 < n_ && at(a + 1, b) >= 0) hi = std::min(hi, at(a + 1, b));
      if (b + 1 < n_ && at(a, b + 1) >= 0) hi = std::min(hi, at(a, b + 1));
    };
    bound(x, y);
    if (commutative_) bound(y, x);
    for (int v = lo; v <= hi; ++v) {
      set(x, y, static_cast<Element>(v));
      if (commutative_) set(y, x, static_cast<Element>(v));
      if (associative_around(x, y) && (!commutative_ || associative_around(y, x))) {
        descend(idx + 1);
      }
      known_[x * n_ + y] = 0;
      known_[y * n_ + x] = commutative_ ? 0 : known_[y * n_ + x];
    }
  }

  // Checks every triple (a, b, c) whose associativity instance uses cell
  // (x, y) and whose other lookups are already determined.
  bool associative_around(std::size_t x, std::size_t y) const {
    const int v = at(x, y);
    for (std::size_t c = 0; c < n_; ++c) {
      // (x y) c = x (y c)
      const int lhs = at(v, c);
      const int yc = at(y, c);
      const int rhs = yc < 0 ? -1 : at(x, yc);
      if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
    }
    for (std::size_t a = 0; a < n_; ++a) {
      // (a x) y = a (x y)
      const int ax = at(a, x);
      const int lhs = ax < 0 ? -1 : at(ax, y);
      const int rhs = at(a, v);
      if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (at(a, b) == static_cast<int>(x)) {
          // (a b) y = a (b y) with a b = x
          const int by = at(b, y);
          const int rhs = by < 0 ? -1 : at(a, by);
          if (rhs >= 0 && rhs != v) return false;
        }
        if (at(a, b) == static_cast<int>(y)) {
          // (x a) b = x (a b) with a b = y
          const int xa = at(x, a);
          const int lhs = xa < 0 ? -1 : at(xa, b);
          if (lhs >= 0 && lhs != v) return false;
        }
      }
    }
    return true;
  }

  std::size_t n_;
  Element e_;
  bool commutative_;
  std::vector<Element> p_;
  std::vector<char> known_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<Element>> found_;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<Element> labels() {
    std::vector<Element> out(parent_.size());
    for (Element x = 0; x < parent_.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Element> parent_;
};

using BinaryOp = Element (FiniteResiduatedLattice::*)(Element, Element) const;

constexpr BinaryOp kBasicOps[] = {
    &FiniteResiduatedLattice::meet, &FiniteResiduatedLattice::join,
    &FiniteResiduatedLattice::mul,  &FiniteResiduatedLattice::ldiv,
    &FiniteResiduatedLattice::rdiv,
};

constexpr AlgebraClass kAllClasses[] = {
    AlgebraClass::HpsUL,   AlgebraClass::HpsULStar, AlgebraClass::HpsULStarOmega,
    AlgebraClass::UL,      AlgebraClass::ULOmega,   AlgebraClass::IUL,
    AlgebraClass::IULOmega,
};

}  // namespace

std::vector<std::vector<Element>> chain_monoid_tables(std::size_t n, Element e,
                                                      bool commutative) {
  if (n < 2 || e == 0 || e >= n) return {};
  return TableSearch(n, e, commutative).run();
}

void for_each_chain(std::size_t max_size, AlgebraClass cls,
                    const std::function<void(const FiniteResiduatedLattice&)>& visit) {
  const bool commutative = requires_commutative(cls);
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (Element e = 1; e < n; ++e) {
      const auto tables = chain_monoid_tables(n, e, commutative);
      for (Element f = 0; f < n; ++f) {
        for (const auto& table : tables) {
          FiniteResiduatedLattice a = FiniteResiduatedLattice::chain(n, table, e, f);
          if (belongs(check_axioms(a), cls)) visit(a);
        }
      }
    }
  }
}

ChainFamily enumerate_chains(std::size_t max_size, AlgebraClass cls) {
  if (max_size < 2) {
    throw Error(ErrorKind::InvalidArgument, "chain enumeration needs a size bound of at least 2");
  }
  ChainFamily family;
  family.max_size = max_size;
  family.cls = cls;
  for_each_chain(max_size, cls,
                 [&](const FiniteResiduatedLattice& a) { family.chains.push_back(a); });
  return family;
}

FiniteResiduatedLattice direct_product(const FiniteResiduatedLattice& a,
                                       const FiniteResiduatedLattice& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  auto idx = [nb](Element x, Element y) { return static_cast<Element>(x * nb + y); };
  AlgebraTables t;
  t.size = n;
  t.leq.assign(n * n, 0);
  t.product.assign(n * n, 0);
  for (Element x1 = 0; x1 < na; ++x1) {
    for (Element y1 = 0; y1 < nb; ++y1) {
      for (Element x2 = 0; x2 < na; ++x2) {
        for (Element y2 = 0; y2 < nb; ++y2) {
          const std::size_t cell = idx(x1, y1) * n + idx(x2, y2);
          t.leq[cell] = a.leq(x1, x2) && b.leq(y1, y2);
          t.product[cell] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  t.constants = Constants{idx(a.e(), b.e()), idx(a.f(), b.f()), idx(a.bot(), b.bot()),
                          idx(a.top(), b.top())};
  return FiniteResiduatedLattice(std::move(t));
}

FiniteResiduatedLattice trivial_algebra() {
  return FiniteResiduatedLattice::chain(1, {0}, 0, 0);
}

Congruence::Congruence(std::vector<Element> block_of) : block_of_(std::move(block_of)) {
  std::vector<Element> relabel(block_of_.size(), static_cast<Element>(-1));
  Element next = 0;
  for (Element& b : block_of_) {
    if (b >= relabel.size()) {
      throw Error(ErrorKind::InvalidArgument, "block label out of range");
    }
    if (relabel[b] == static_cast<Element>(-1)) relabel[b] = next++;
    b = relabel[b];
  }
  blocks_ = next;
}

Congruence Congruence::diagonal(std::size_t n) {
  std::vector<Element> b(n);
  std::iota(b.begin(), b.end(), Element{0});
  return Congruence(std::move(b));
}

Congruence Congruence::total(std::size_t n) {
  return Congruence(std::vector<Element>(n, 0));
}

bool Congruence::refines(const Congruence& other) const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (related(x, y) && !other.related(x, y)) return false;
    }
  }
  return true;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.size();
  std::vector<Element> out(n);
  for (Element x = 0; x < n; ++x) {
    // First element sharing both blocks labels the intersection block.
    for (Element y = 0; y <= x; ++y) {
      if (a.related(x, y) && b.related(x, y)) {
        out[x] = y;
        break;
      }
    }
  }
  return Congruence(std::move(out));
}

Congruence join(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.size();
  UnionFind uf(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (a.related(x, y) || b.related(x, y)) uf.unite(x, y);
    }
  }
  return Congruence(uf.labels());
}

bool is_congruence(const FiniteResiduatedLattice& a, const Congruence& theta) {
  const auto n = static_cast<Element>(a.size());
  if (theta.size() != n) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!theta.related(x, y)) continue;
      for (Element c = 0; c < n; ++c) {
        for (BinaryOp op : kBasicOps) {
          if (!theta.related((a.*op)(x, c), (a.*op)(y, c))) return false;
          if (!theta.related((a.*op)(c, x), (a.*op)(c, y))) return false;
        }
      }
    }
  }
  return true;
}

Congruence principal_congruence(const FiniteResiduatedLattice& a, Element x, Element y) {
  const auto n = static_cast<Element>(a.size());
  if (x >= n || y >= n) throw Error(ErrorKind::RangeError, "element index out of range");
  UnionFind uf(n);
  uf.unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element u = 0; u < n; ++u) {
      const Element r = uf.find(u);
      if (r == u) continue;
      // Translations of each generating pair (u, root) suffice.
      for (Element c = 0; c < n; ++c) {
        for (BinaryOp op : kBasicOps) {
          changed |= uf.unite((a.*op)(u, c), (a.*op)(r, c));
          changed |= uf.unite((a.*op)(c, u), (a.*op)(c, r));
        }
      }
    }
  }
  return Congruence(uf.labels());
}

std::vector<Congruence> all_congruences(const FiniteResiduatedLattice& a) {
  const auto n = static_cast<Element>(a.size());
  std::set<Congruence> found{Congruence::diagonal(n)};
  std::vector<Congruence> frontier;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      Congruence p = principal_congruence(a, x, y);
      if (found.insert(p).second) frontier.push_back(std::move(p));
    }
  }
  const std::vector<Congruence> principals(frontier.begin(), frontier.end());
  // Every congruence of a finite algebra is a join of principal ones.
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& c : frontier) {
      for (const Congruence& p : principals) {
        Congruence j = join(c, p);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

Quotient quotient(const FiniteResiduatedLattice& a, const Congruence& theta) {
  const auto n = static_cast<Element>(a.size());
  if (theta.size() != n || !is_congruence(a, theta)) {
    throw Error(ErrorKind::InvalidArgument, "partition is not a congruence of the algebra");
  }
  const std::size_t k = theta.block_count();
  std::vector<Element> rep(k, n);
  for (Element x = 0; x < n; ++x) {
    if (rep[theta.block(x)] == n) rep[theta.block(x)] = x;
  }
  auto block_leq = [&](std::size_t b1, std::size_t b2) {
    return theta.block(a.join(rep[b1], rep[b2])) == b2;
  };

  // Rank blocks by the number of blocks below them; a total order then
  // becomes the canonical chain labelling.
  bool total = true;
  std::vector<Element> label(k);
  for (std::size_t b1 = 0; b1 < k; ++b1) {
    Element below = 0;
    for (std::size_t b2 = 0; b2 < k; ++b2) {
      if (!block_leq(b1, b2) && !block_leq(b2, b1)) total = false;
      if (b2 != b1 && block_leq(b2, b1)) ++below;
    }
    label[b1] = below;
  }
  if (!total) std::iota(label.begin(), label.end(), Element{0});

  AlgebraTables t;
  t.size = k;
  t.leq.assign(k * k, 0);
  t.product.assign(k * k, 0);
  for (std::size_t b1 = 0; b1 < k; ++b1) {
    for (std::size_t b2 = 0; b2 < k; ++b2) {
      const std::size_t cell = label[b1] * k + label[b2];
      t.leq[cell] = block_leq(b1, b2);
      t.product[cell] = label[theta.block(a.mul(rep[b1], rep[b2]))];
    }
  }
  auto image = [&](Element x) { return label[theta.block(x)]; };
  t.constants = Constants{image(a.e()), image(a.f()), image(a.bot()), image(a.top())};

  std::vector<Element> projection(n);
  for (Element x = 0; x < n; ++x) projection[x] = image(x);
  return Quotient{FiniteResiduatedLattice(std::move(t)), std::move(projection)};
}

std::vector<Element> SubdirectDecomposition::embed(Element x) const {
  std::vector<Element> out;
  out.reserve(factors.size());
  for (const SubdirectFactor& f : factors) out.push_back(f.image.projection.at(x));
  return out;
}

SubdirectDecomposition subdirect_decompose(const FiniteResiduatedLattice& a) {
  const ClassReport source = check_axioms(a);
  const std::size_t n = a.size();

  auto same_classes = [&](const ClassReport& r) {
    for (AlgebraClass c : kAllClasses) {
      if (belongs(source, c) && !belongs(r, c)) return false;
    }
    return true;
  };

  SubdirectDecomposition out;
  if (source.is_chain) {
    Congruence diag = Congruence::diagonal(n);
    Quotient q = quotient(a, diag);
    out.factors.push_back(SubdirectFactor{std::move(diag), std::move(q)});
    return out;
  }

  const std::vector<Congruence> all = all_congruences(a);
  auto meet_irreducible = [&](const Congruence& theta) {
    if (theta.block_count() == 1) return false;
    std::vector<const Congruence*> above;
    for (const Congruence& psi : all) {
      if (psi != theta && theta.refines(psi)) above.push_back(&psi);
    }
    std::size_t minimal = 0;
    for (const Congruence* psi : above) {
      bool is_min = true;
      for (const Congruence* phi : above) {
        if (phi != psi && phi->refines(*psi)) {
          is_min = false;
          break;
        }
      }
      if (is_min) ++minimal;
    }
    return minimal == 1;
  };

  struct Candidate {
    Congruence theta;
    Quotient image;
  };
  std::vector<Candidate> candidates;
  for (const Congruence& theta : all) {
    if (!meet_irreducible(theta)) continue;
    Quotient q = quotient(a, theta);
    const ClassReport r = check_axioms(q.algebra);
    if (!r.is_chain || !same_classes(r)) continue;
    candidates.push_back(Candidate{theta, std::move(q)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) {
                     if (x.theta.block_count() != y.theta.block_count()) {
                       return x.theta.block_count() < y.theta.block_count();
                     }
                     return x.theta < y.theta;
                   });

  Congruence current = Congruence::total(n);
  for (Candidate& c : candidates) {
    if (current.is_diagonal()) break;
    Congruence next = meet(current, c.theta);
    if (next == current) continue;
    current = std::move(next);
    out.factors.push_back(SubdirectFactor{std::move(c.theta), std::move(c.image)});
  }
  if (!current.is_diagonal()) {
    throw Error(ErrorKind::DecompositionFailed,
                "no family of chain quotients separates all elements");
  }
  // The induced map into the product of the factors must be injective.
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (out.embed(x) == out.embed(y)) {
        throw Error(ErrorKind::DecompositionFailed, "subdirect embedding is not injective");
      }
    }
  }
  return out;
}

}  // namespace reslat
