#include "reslat/report.hpp"

#include <filesystem>
#include <sstream>

#include "reslat/algebra.hpp"
#include "reslat/combinatorics.hpp"
#include "reslat/enumeration.hpp"
#include "reslat/fep.hpp"
#include "reslat/io.hpp"
#include "reslat/logic.hpp"

namespace reslat {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <typename Seq>
std::string joined(const Seq& items, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : items) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

std::vector<Element> parse_subset(const std::string& text) {
  std::vector<Element> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "empty entry in subset '" + text + "'");
    }
    const std::string word = item.substr(b, e - b + 1);
    if (word.find_first_not_of("0123456789") != std::string::npos || word.size() > 9) {
      throw Error(ErrorKind::InvalidArgument, "subset entry '" + word + "' is not an index");
    }
    out.push_back(static_cast<Element>(std::stoul(word)));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty subset");
  return out;
}

std::string table_rows(const FiniteResiduatedLattice& a) {
  std::ostringstream os;
  for (Element x = 0; x < a.size(); ++x) {
    if (x) os << ';';
    for (Element y = 0; y < a.size(); ++y) os << (y ? " " : "") << a.mul(x, y);
  }
  return os.str();
}

void indented(std::ostringstream& os, const std::string& block) {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) os << "  " << line << '\n';
}

}  // namespace

Report report_check(const std::string& algebra_path) {
  const AlgebraFile file = load_algebra(algebra_path);
  const ClassReport r = check_axioms(file.tables);
  std::ostringstream os;
  os << "algebra " << file.name << '\n'
     << "size " << file.tables.size << '\n'
     << "lattice_monoid " << yes_no(r.is_lattice_monoid) << '\n'
     << "residuated " << yes_no(r.is_residuated) << '\n'
     << "chain " << yes_no(r.is_chain) << '\n'
     << "semilinear " << yes_no(r.is_semilinear) << '\n'
     << "wcm " << yes_no(r.has_wcm) << '\n'
     << "commutative " << yes_no(r.is_commutative) << '\n'
     << "involutive " << yes_no(r.is_involutive) << '\n'
     << "fin " << yes_no(r.has_fin) << '\n';
  std::vector<std::string> members;
  for (AlgebraClass c : {AlgebraClass::HpsUL, AlgebraClass::HpsULStar,
                         AlgebraClass::HpsULStarOmega, AlgebraClass::UL, AlgebraClass::ULOmega,
                         AlgebraClass::IUL, AlgebraClass::IULOmega}) {
    if (belongs(r, c)) members.emplace_back(class_name(c));
  }
  os << "member_of " << (members.empty() ? "-" : joined(members, " ")) << '\n';
  os << "class " << r.verdict() << '\n';
  return Report{r.hpsul ? 0 : 1, os.str()};
}

Report report_fep(const std::string& algebra_path, const std::string& subset,
                  const std::string& mode_name) {
  const AlgebraFile file = load_algebra(algebra_path);
  const FepMode mode = parse_fep_mode(mode_name);
  const FiniteResiduatedLattice a(file.tables);
  const DownsetAlgebra d = build_D(a, parse_subset(subset), mode);

  std::ostringstream os;
  os << "algebra " << file.name << '\n'
     << "mode " << fep_mode_name(mode) << '\n'
     << "subset " << joined(d.subalgebra().elements(), ",") << '\n'
     << "subset_enlarged " << yes_no(d.subset_enlarged()) << '\n'
     << "M " << joined(d.monoid().elements, ",") << '\n'
     << "contexts " << d.contexts().size() << '\n'
     << "context_sets " << d.context_sets().size() << '\n';
  os << "D";
  for (const Downset& x : d.carrier()) os << " (" << d.monoid().elements[x.max_pos] << ']';
  os << '\n';
  os << "D_class " << check_axioms(d.algebra()).verdict() << '\n';
  os << "D_product " << table_rows(d.algebra()) << '\n';

  std::string embedding = "ok";
  try {
    const EmbeddingReport e = verify_embedding(d);
    os << "embedding_image " << joined(e.image, ",") << '\n';
    os << "embedding_checks " << e.checks << '\n';
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::EmbeddingViolation) throw;
    embedding = "failed";
    os << "embedding_failure " << err.what() << '\n';
  }
  bool all_pass = embedding == "ok";
  for (const LemmaCheck& c : verify_lemmas(d)) {
    os << "check " << c.name << ' ' << (c.passed ? "pass" : "FAIL") << ' ' << c.instances;
    if (!c.passed) os << ' ' << c.detail;
    os << '\n';
    all_pass = all_pass && c.passed;
  }
  for (Element p : d.subalgebra().elements()) {
    const MtoPResult r = check_MtoP(d, p);
    os << "residual_family " << p << " size " << r.size << (r.is_linear ? " linear" : " NONLINEAR")
       << '\n';
    all_pass = all_pass && r.is_linear;
  }
  os << "|M|=" << d.monoid_size() << " |D|=" << d.carrier().size() << " embedding=" << embedding
     << '\n';
  return Report{all_pass ? 0 : 1, os.str()};
}

Report report_enumerate(std::size_t max_size, const std::string& cls_name,
                        const std::string& emit_dir) {
  const AlgebraClass cls = parse_class(cls_name);
  const ChainFamily family = enumerate_chains(max_size, cls);
  if (!emit_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(emit_dir, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create '" + emit_dir + "': " + ec.message());
  }

  std::ostringstream os;
  os << "class " << class_name(cls) << '\n' << "max_size " << max_size << '\n';
  std::vector<std::size_t> counts(max_size + 1, 0);
  std::size_t id = 0;
  for (const FiniteResiduatedLattice& a : family.chains) {
    ++id;
    const std::size_t ordinal = ++counts[a.size()];
    os << "chain " << id << " size " << a.size() << " e " << a.e() << " f " << a.f()
       << " product " << table_rows(a) << '\n';
    if (!emit_dir.empty()) {
      const std::string name = std::string(class_name(cls)) + "-" + std::to_string(a.size()) +
                               "-" + std::to_string(ordinal);
      save_algebra(to_file(a, name), (std::filesystem::path(emit_dir) / (name + ".alg")).string());
    }
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    os << "count " << n << ' ' << counts[n] << '\n';
  }
  os << "total " << family.chains.size() << '\n';
  return Report{0, os.str()};
}

Report report_decide(const std::string& cls_name, std::size_t max_size,
                     const std::string& formula, const std::vector<std::string>& premises) {
  const AlgebraClass cls = parse_class(cls_name);
  const Formula conclusion = parse_formula(formula);
  std::vector<Formula> gamma;
  for (const std::string& p : premises) gamma.push_back(parse_formula(p));
  const Verdict v = decide_bounded(gamma, conclusion, cls, max_size);

  std::ostringstream os;
  os << "class " << class_name(cls) << '\n' << "bound " << max_size << '\n';
  for (const Formula& g : gamma) os << "premise " << to_string(g) << '\n';
  os << "formula " << to_string(conclusion) << '\n'
     << "algebras_checked " << v.algebras_checked << '\n';
  if (v.valid_up_to_bound()) {
    os << "verdict valid-up-to-bound " << max_size << '\n';
    return Report{0, os.str()};
  }
  const Counterexample& c = *v.counterexample;
  os << "verdict counterexample\n"
     << "countermodel_class " << check_axioms(c.algebra).verdict() << '\n';
  indented(os, format_algebra(to_file(c.algebra, "countermodel")));
  for (std::size_t i = 0; i < c.assignment.size(); ++i) {
    os << "assign x" << (i + 1) << ' ' << c.assignment[i] << '\n';
  }
  for (std::size_t i = 0; i < c.premise_values.size(); ++i) {
    os << "premise_value " << (i + 1) << ' ' << c.premise_values[i] << '\n';
  }
  os << "formula_value " << c.conclusion_value << " (e = " << c.algebra.e() << ")\n"
     << "reverified " << yes_no(confirms(c, gamma, conclusion)) << '\n';
  return Report{1, os.str()};
}

Report report_decompose(const std::string& algebra_path) {
  const AlgebraFile file = load_algebra(algebra_path);
  const FiniteResiduatedLattice a(file.tables);
  std::ostringstream os;
  os << "algebra " << file.name << '\n' << "size " << a.size() << '\n';
  try {
    const SubdirectDecomposition s = subdirect_decompose(a);
    os << "factors " << s.factors.size() << '\n';
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      const SubdirectFactor& f = s.factors[i];
      os << "factor " << (i + 1) << " partition " << joined(f.theta.blocks(), " ")
         << " class " << check_axioms(f.image.algebra).verdict() << '\n';
      indented(os, format_algebra(to_file(f.image.algebra, "factor" + std::to_string(i + 1))));
    }
    for (Element x = 0; x < a.size(); ++x) {
      os << "embed " << x << " (" << joined(s.embed(x), ",") << ")\n";
    }
    os << "decomposition ok\n";
    return Report{0, os.str()};
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::DecompositionFailed) throw;
    os << "decomposition failed: " << err.what() << '\n';
    return Report{1, os.str()};
  }
}

Report report_omega(const std::string& sequence_path, std::size_t length) {
  const NatVecSeq seq = load_sequence(sequence_path);
  std::ostringstream os;
  os << "k " << seq.k << '\n' << "entries " << seq.entries.size() << '\n' << "target " << length
     << '\n';
  const auto x = omega_extract(seq, length);
  if (!x) {
    os << "result insufficient\n";
    return Report{1, os.str()};
  }
  os << "positions " << joined(x->index.positions(), " ") << '\n';
  for (std::size_t c = 0; c < seq.k; ++c) {
    os << "coordinate " << (c + 1) << ' ' << trend_name(x->trends[c]) << '\n';
  }
  os << "result ok\n";
  return Report{0, os.str()};
}

}  // namespace reslat
