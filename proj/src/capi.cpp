#include "reslat/reslat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/io.hpp"
#include "reslat/logic.hpp"
#include "reslat/report.hpp"

struct rl_algebra {
  reslat::FiniteResiduatedLattice value;
};

namespace {

thread_local std::string last_error;

rl_status status_of(reslat::ErrorKind kind) {
  using reslat::ErrorKind;
  switch (kind) {
    case ErrorKind::MalformedTable: return RL_MALFORMED_TABLE;
    case ErrorKind::AxiomViolation: return RL_AXIOM_VIOLATION;
    case ErrorKind::NotResiduated: return RL_NOT_RESIDUATED;
    case ErrorKind::PreconditionViolated: return RL_PRECONDITION_VIOLATED;
    case ErrorKind::DecompositionFailed: return RL_DECOMPOSITION_FAILED;
    case ErrorKind::EmbeddingViolation: return RL_EMBEDDING_VIOLATION;
    case ErrorKind::ParseError: return RL_PARSE_ERROR;
    case ErrorKind::UnboundVariable: return RL_UNBOUND_VARIABLE;
    case ErrorKind::RangeError: return RL_RANGE_ERROR;
    case ErrorKind::FormatError: return RL_FORMAT_ERROR;
    case ErrorKind::IoError: return RL_IO_ERROR;
    case ErrorKind::InvalidArgument: return RL_INVALID_ARGUMENT;
  }
  return RL_INTERNAL_ERROR;
}

rl_status fail(rl_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <typename F>
rl_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return RL_OK;
  } catch (const reslat::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RL_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(RL_INTERNAL_ERROR, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw reslat::Error(reslat::ErrorKind::InvalidArgument, what);
}

void element_in_range(const rl_algebra* a, uint32_t x) {
  if (x >= a->value.size()) {
    throw reslat::Error(reslat::ErrorKind::RangeError,
                        "element " + std::to_string(x) + " out of range");
  }
}

rl_status emit(const reslat::Report& r, int* outcome, char** text) {
  *text = duplicate(r.text);
  *outcome = r.outcome;
  return RL_OK;
}

}  // namespace

extern "C" {

const char* rl_status_name(rl_status status) {
  switch (status) {
    case RL_OK: return "ok";
    case RL_MALFORMED_TABLE: return "malformed table";
    case RL_AXIOM_VIOLATION: return "axiom violation";
    case RL_NOT_RESIDUATED: return "not residuated";
    case RL_PRECONDITION_VIOLATED: return "precondition violated";
    case RL_DECOMPOSITION_FAILED: return "decomposition failed";
    case RL_EMBEDDING_VIOLATION: return "embedding violation";
    case RL_PARSE_ERROR: return "parse error";
    case RL_UNBOUND_VARIABLE: return "unbound variable";
    case RL_RANGE_ERROR: return "range error";
    case RL_FORMAT_ERROR: return "format error";
    case RL_IO_ERROR: return "i/o error";
    case RL_INVALID_ARGUMENT: return "invalid argument";
    case RL_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* rl_last_error(void) { return last_error.c_str(); }

void rl_string_free(char* s) { std::free(s); }

rl_status rl_algebra_chain(size_t n, const uint32_t* product, uint32_t e, uint32_t f,
                           rl_algebra** out) {
  return guarded([&] {
    require(out != nullptr && (product != nullptr || n == 0), "null argument");
    std::vector<reslat::Element> table(product, product + n * n);
    *out = new rl_algebra{reslat::FiniteResiduatedLattice::chain(n, std::move(table), e, f)};
  });
}

rl_status rl_algebra_load(const char* path, rl_algebra** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new rl_algebra{reslat::FiniteResiduatedLattice(reslat::load_algebra(path).tables)};
  });
}

rl_status rl_algebra_save(const rl_algebra* a, const char* name, const char* path) {
  return guarded([&] {
    require(a != nullptr && name != nullptr && path != nullptr, "null argument");
    reslat::save_algebra(reslat::to_file(a->value, name), path);
  });
}

void rl_algebra_free(rl_algebra* a) { delete a; }

size_t rl_algebra_size(const rl_algebra* a) { return a == nullptr ? 0 : a->value.size(); }

rl_status rl_algebra_mul(const rl_algebra* a, uint32_t x, uint32_t y, uint32_t* out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    element_in_range(a, x);
    element_in_range(a, y);
    *out = a->value.mul(x, y);
  });
}

rl_status rl_algebra_ldiv(const rl_algebra* a, uint32_t x, uint32_t z, uint32_t* out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    element_in_range(a, x);
    element_in_range(a, z);
    *out = a->value.ldiv(x, z);
  });
}

rl_status rl_algebra_rdiv(const rl_algebra* a, uint32_t z, uint32_t y, uint32_t* out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    element_in_range(a, z);
    element_in_range(a, y);
    *out = a->value.rdiv(z, y);
  });
}

rl_status rl_algebra_classify(const rl_algebra* a, char** verdict) {
  return guarded([&] {
    require(a != nullptr && verdict != nullptr, "null argument");
    *verdict = duplicate(reslat::check_axioms(a->value).verdict());
  });
}

rl_status rl_formula_eval(const rl_algebra* a, const char* formula, const uint32_t* assignment,
                          size_t count, uint32_t* out) {
  return guarded([&] {
    require(a != nullptr && formula != nullptr && out != nullptr, "null argument");
    require(assignment != nullptr || count == 0, "null assignment");
    std::vector<reslat::Element> v(assignment, assignment + count);
    *out = reslat::eval(reslat::parse_formula(formula), a->value, v);
  });
}

rl_status rl_formula_normalize(const char* formula, char** out) {
  return guarded([&] {
    require(formula != nullptr && out != nullptr, "null argument");
    *out = duplicate(reslat::to_string(reslat::parse_formula(formula)));
  });
}

rl_status rl_report_check(const char* algebra_path, int* outcome, char** text) {
  return guarded([&] {
    require(algebra_path != nullptr && outcome != nullptr && text != nullptr, "null argument");
    emit(reslat::report_check(algebra_path), outcome, text);
  });
}

rl_status rl_report_fep(const char* algebra_path, const char* subset, const char* mode,
                        int* outcome, char** text) {
  return guarded([&] {
    require(algebra_path && subset && mode && outcome && text, "null argument");
    emit(reslat::report_fep(algebra_path, subset, mode), outcome, text);
  });
}

rl_status rl_report_enumerate(size_t max_size, const char* cls, const char* emit_dir,
                              int* outcome, char** text) {
  return guarded([&] {
    require(cls && outcome && text, "null argument");
    emit(reslat::report_enumerate(max_size, cls, emit_dir ? emit_dir : ""), outcome, text);
  });
}

rl_status rl_report_decide(const char* cls, size_t max_size, const char* formula,
                           const char* const* premises, size_t premise_count, int* outcome,
                           char** text) {
  return guarded([&] {
    require(cls && formula && outcome && text, "null argument");
    require(premises != nullptr || premise_count == 0, "null premises");
    std::vector<std::string> gamma;
    for (size_t i = 0; i < premise_count; ++i) {
      require(premises[i] != nullptr, "null premise");
      gamma.emplace_back(premises[i]);
    }
    emit(reslat::report_decide(cls, max_size, formula, gamma), outcome, text);
  });
}

rl_status rl_report_decompose(const char* algebra_path, int* outcome, char** text) {
  return guarded([&] {
    require(algebra_path && outcome && text, "null argument");
    emit(reslat::report_decompose(algebra_path), outcome, text);
  });
}

rl_status rl_report_omega(const char* sequence_path, size_t length, int* outcome, char** text) {
  return guarded([&] {
    require(sequence_path && outcome && text, "null argument");
    emit(reslat::report_omega(sequence_path, length), outcome, text);
  });
}

}  // extern "C"
