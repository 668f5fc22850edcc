#include "reslat/algebra.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace reslat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::EmbeddingViolation: return "EmbeddingViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedTable, what);
}

struct LatticeTables {
  std::vector<Element> join;
  std::vector<Element> meet;
};

// Checks indices and order axioms and builds join/meet tables.
LatticeTables validate_lattice(const AlgebraTables& t) {
  const std::size_t n = t.size;
  if (n == 0) malformed("algebra must have at least one element");
  if (t.leq.size() != n * n) malformed("order relation has wrong dimensions");
  if (t.product.size() != n * n) malformed("product table has wrong dimensions");
  for (Element v : t.product) {
    if (v >= n) malformed("product entry out of range");
  }
  const Constants& c = t.constants;
  if (c.e >= n || c.f >= n || c.bot >= n || c.top >= n) {
    malformed("constant out of range");
  }
  auto le = [&](std::size_t x, std::size_t y) { return t.leq[x * n + y] != 0; };
  for (std::size_t x = 0; x < n; ++x) {
    if (!le(x, x)) malformed("order is not reflexive");
    if (!le(c.bot, x)) malformed("bot is not the minimum");
    if (!le(x, c.top)) malformed("top is not the maximum");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x)) malformed("order is not antisymmetric");
      if (!le(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (le(y, z) && !le(x, z)) malformed("order is not transitive");
      }
    }
  }
  LatticeTables lt{std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::optional<std::size_t> lub;
      std::optional<std::size_t> glb;
      for (std::size_t z = 0; z < n; ++z) {
        if (le(x, z) && le(y, z) && (!lub || le(z, *lub))) lub = z;
        if (le(z, x) && le(z, y) && (!glb || le(*glb, z))) glb = z;
      }
      // The candidates found above are minimal/maximal; confirm they bound
      // every other candidate.
      for (std::size_t z = 0; z < n; ++z) {
        if (le(x, z) && le(y, z) && !le(*lub, z)) malformed("order is not a lattice (missing join)");
        if (le(z, x) && le(z, y) && !le(z, *glb)) malformed("order is not a lattice (missing meet)");
      }
      lt.join[x * n + y] = static_cast<Element>(*lub);
      lt.meet[x * n + y] = static_cast<Element>(*glb);
    }
  }
  return lt;
}

bool is_monoid(const AlgebraTables& t) {
  const std::size_t n = t.size;
  const Element e = t.constants.e;
  auto mul = [&](std::size_t x, std::size_t y) { return t.product[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(e, x) != x || mul(x, e) != x) return false;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = mul(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_numeric_total_order(const AlgebraTables& t) {
  const std::size_t n = t.size;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((t.leq[x * n + y] != 0) != (x <= y)) return false;
    }
  }
  return true;
}

}  // namespace

AlgebraTables AlgebraTables::chain(std::size_t n, std::vector<Element> product,
                                   Element e, Element f) {
  AlgebraTables t;
  t.size = n;
  t.leq.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) t.leq[x * n + y] = 1;
  }
  t.product = std::move(product);
  t.constants = Constants{e, f, 0, static_cast<Element>(n == 0 ? 0 : n - 1)};
  return t;
}

ResidualTables derive_residuals(std::size_t n, std::span<const Element> product,
                                std::span<const char> leq, Element bot) {
  auto le = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };
  auto mul = [&](std::size_t x, std::size_t y) { return product[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x) {
    if (mul(bot, x) != bot || mul(x, bot) != bot) {
      throw Error(ErrorKind::NotResiduated, "bot is not absorbing for the product");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!le(x, y) || x == y) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!le(mul(x, z), mul(y, z)) || !le(mul(z, x), mul(z, y))) {
          std::ostringstream os;
          os << "product is not order preserving at " << x << " <= " << y;
          throw Error(ErrorKind::NotResiduated, os.str());
        }
      }
    }
  }

  ResidualTables r{std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      std::optional<std::size_t> best_left;   // max{y : x.y <= z}
      std::optional<std::size_t> best_right;  // max{y : y.x <= z}
      for (std::size_t y = 0; y < n; ++y) {
        if (le(mul(x, y), z)) {
          if (!best_left || le(*best_left, y)) best_left = y;
        }
        if (le(mul(y, x), z)) {
          if (!best_right || le(*best_right, y)) best_right = y;
        }
      }
      // Both sets contain bot. If a maximum exists the scan above ends on it;
      // otherwise the candidate fails to dominate some member.
      for (std::size_t y = 0; y < n; ++y) {
        if (le(mul(x, y), z) && !le(y, *best_left)) {
          throw Error(ErrorKind::NotResiduated, "left residual has no greatest element");
        }
        if (le(mul(y, x), z) && !le(y, *best_right)) {
          throw Error(ErrorKind::NotResiduated, "right residual has no greatest element");
        }
      }
      r.left[x * n + z] = static_cast<Element>(*best_left);
      r.right[z * n + x] = static_cast<Element>(*best_right);
    }
  }
  return r;
}

FiniteResiduatedLattice::FiniteResiduatedLattice(AlgebraTables tables)
    : t_(std::move(tables)), n_(t_.size), c_(t_.constants) {
  LatticeTables lt = validate_lattice(t_);
  join_ = std::move(lt.join);
  meet_ = std::move(lt.meet);
  if (!is_monoid(t_)) {
    throw Error(ErrorKind::AxiomViolation, "product is not an associative operation with unit e");
  }
  ResidualTables r = derive_residuals(n_, t_.product, t_.leq, c_.bot);
  ldiv_ = std::move(r.left);
  rdiv_ = std::move(r.right);
  canonical_chain_ = is_numeric_total_order(t_);
}

FiniteResiduatedLattice FiniteResiduatedLattice::chain(std::size_t n,
                                                       std::vector<Element> product,
                                                       Element e, Element f) {
  return FiniteResiduatedLattice(AlgebraTables::chain(n, std::move(product), e, f));
}

Element FiniteResiduatedLattice::power(Element x, unsigned k) const {
  Element r = c_.e;
  for (unsigned i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Element lambda_poly(const FiniteResiduatedLattice& alg, Element a, Element b) {
  return alg.meet(alg.ldiv(a, alg.mul(b, a)), alg.e());
}

Element rho_poly(const FiniteResiduatedLattice& alg, Element a, Element b) {
  return alg.meet(alg.rdiv(alg.mul(a, b), a), alg.e());
}

bool check_semilinearity(const FiniteResiduatedLattice& alg) {
  const auto n = static_cast<Element>(alg.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element j = alg.join(x, y);
      const Element p = alg.ldiv(j, x);
      const Element q = alg.ldiv(j, y);
      for (Element u = 0; u < n; ++u) {
        const Element l = lambda_poly(alg, u, p);
        for (Element v = 0; v < n; ++v) {
          if (alg.join(l, rho_poly(alg, v, q)) != alg.e()) return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool has_wcm(const FiniteResiduatedLattice& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.leq(a.mul(x, y), a.e()) && !a.leq(a.mul(y, x), a.e())) return false;
    }
  }
  return true;
}

bool is_commutative(const FiniteResiduatedLattice& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (a.mul(x, y) != a.mul(y, x)) return false;
    }
  }
  return true;
}

bool has_fin(const FiniteResiduatedLattice& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    if (a.ldiv(x, a.e()) != a.ldiv(a.mul(x, x), a.e())) return false;
  }
  return true;
}

bool is_total(const AlgebraTables& t) {
  const std::size_t n = t.size;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t.leq[x * n + y] == 0 && t.leq[y * n + x] == 0) return false;
    }
  }
  return true;
}

void fill_classes(ClassReport& r) {
  r.hpsul = r.is_lattice_monoid && r.is_residuated && r.is_semilinear;
  r.hpsul_star = r.hpsul && r.has_wcm;
  r.ul = r.hpsul && r.is_commutative;
  r.iul = r.ul && r.is_involutive;
  r.hpsul_star_omega = r.hpsul_star && r.has_fin;
  r.ul_omega = r.ul && r.has_fin;
  r.iul_omega = r.iul && r.has_fin;
}

}  // namespace

ClassReport check_axioms(const FiniteResiduatedLattice& a) {
  ClassReport r;
  r.is_lattice_monoid = true;
  r.is_residuated = true;
  r.is_chain = is_total(a.tables());
  r.is_semilinear = check_semilinearity(a);
  r.has_wcm = has_wcm(a);
  r.is_commutative = is_commutative(a);
  bool double_negation = true;
  for (Element x = 0; x < a.size(); ++x) {
    if (a.neg(a.neg(x)) != x) {
      double_negation = false;
      break;
    }
  }
  r.is_involutive = r.is_commutative && double_negation;
  r.has_fin = has_fin(a);
  fill_classes(r);
  return r;
}

ClassReport check_axioms(const AlgebraTables& tables) {
  validate_lattice(tables);
  ClassReport r;
  r.is_chain = is_total(tables);
  if (!is_monoid(tables)) return r;
  r.is_lattice_monoid = true;
  try {
    return check_axioms(FiniteResiduatedLattice(tables));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotResiduated) throw;
  }
  return r;
}

std::string ClassReport::verdict() const {
  const char* name = nullptr;
  if (iul_omega) name = "IUL_omega";
  else if (iul) name = "IUL";
  else if (ul_omega) name = "UL_omega";
  else if (ul) name = "UL";
  else if (hpsul_star_omega) name = "HpsUL*_omega";
  else if (hpsul_star) name = "HpsUL*";
  else if (hpsul) name = "HpsUL";
  if (name == nullptr) return "none";
  return std::string(name) + (is_chain ? " chain" : " algebra");
}

bool check_fin_exponents(const FiniteResiduatedLattice& a, unsigned n_max) {
  if (!has_wcm(a) || !has_fin(a)) {
    throw Error(ErrorKind::PreconditionViolated,
                "exponent check requires an algebra with Wcm and Fin");
  }
  const auto n = static_cast<Element>(a.size());
  std::vector<Element> powers(static_cast<std::size_t>(n) * n_max);
  for (Element x = 0; x < n; ++x) {
    Element p = x;
    for (unsigned k = 1; k <= n_max; ++k) {
      powers[x * n_max + (k - 1)] = p;
      p = a.mul(p, x);
    }
  }
  auto pw = [&](Element x, unsigned k) { return powers[x * n_max + (k - 1)]; };
  for (Element x = 0; x < n; ++x) {
    const bool single = a.leq(x, a.e());
    for (unsigned k = 1; k <= n_max; ++k) {
      if (a.leq(pw(x, k), a.e()) != single) return false;
    }
    for (Element y = 0; y < n; ++y) {
      const bool base = a.leq(a.mul(x, y), a.e());
      for (unsigned k1 = 1; k1 <= n_max; ++k1) {
        for (unsigned k2 = 1; k2 <= n_max; ++k2) {
          if (a.leq(a.mul(pw(x, k1), pw(y, k2)), a.e()) != base) return false;
        }
      }
    }
  }
  return true;
}

bool fin_by_exponents(const FiniteResiduatedLattice& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    const Element xx = a.mul(x, x);
    for (Element y = 0; y < n; ++y) {
      if (a.leq(a.mul(x, y), a.e()) != a.leq(a.mul(xx, y), a.e())) return false;
    }
  }
  return true;
}

AlgebraClass parse_class(const std::string& name) {
  if (name == "hpsul") return AlgebraClass::HpsUL;
  if (name == "hpsul-star") return AlgebraClass::HpsULStar;
  if (name == "hpsul-star-omega") return AlgebraClass::HpsULStarOmega;
  if (name == "ul") return AlgebraClass::UL;
  if (name == "ul-omega") return AlgebraClass::ULOmega;
  if (name == "iul") return AlgebraClass::IUL;
  if (name == "iul-omega") return AlgebraClass::IULOmega;
  throw Error(ErrorKind::InvalidArgument, "unknown algebra class '" + name + "'");
}

const char* class_name(AlgebraClass c) noexcept {
  switch (c) {
    case AlgebraClass::HpsUL: return "hpsul";
    case AlgebraClass::HpsULStar: return "hpsul-star";
    case AlgebraClass::HpsULStarOmega: return "hpsul-star-omega";
    case AlgebraClass::UL: return "ul";
    case AlgebraClass::ULOmega: return "ul-omega";
    case AlgebraClass::IUL: return "iul";
    case AlgebraClass::IULOmega: return "iul-omega";
  }
  return "?";
}

bool belongs(const ClassReport& r, AlgebraClass c) noexcept {
  switch (c) {
    case AlgebraClass::HpsUL: return r.hpsul;
    case AlgebraClass::HpsULStar: return r.hpsul_star;
    case AlgebraClass::HpsULStarOmega: return r.hpsul_star_omega;
    case AlgebraClass::UL: return r.ul;
    case AlgebraClass::ULOmega: return r.ul_omega;
    case AlgebraClass::IUL: return r.iul;
    case AlgebraClass::IULOmega: return r.iul_omega;
  }
  return false;
}

bool requires_commutative(AlgebraClass c) noexcept {
  switch (c) {
    case AlgebraClass::UL:
    case AlgebraClass::ULOmega:
    case AlgebraClass::IUL:
    case AlgebraClass::IULOmega:
      return true;
    default:
      return false;
  }
}

}  // namespace reslat
