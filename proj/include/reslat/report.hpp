#pragma once

// Deterministic text reports behind the command-line subcommands. Each
// report is a block of "key value" lines followed by a one-line summary.
// Input problems surface as reslat::Error.

#include <cstddef>
#include <string>
#include <vector>

namespace reslat {

struct Report {
  // 0: success or valid, 1: counterexample or violation found.
  int outcome = 0;
  std::string text;
};

Report report_check(const std::string& algebra_path);

// subset: comma-separated carrier indices; mode: ul, psul or iul.
Report report_fep(const std::string& algebra_path, const std::string& subset,
                  const std::string& mode);

// Writes one algebra file per chain into emit_dir when it is non-empty.
Report report_enumerate(std::size_t max_size, const std::string& cls,
                        const std::string& emit_dir);

Report report_decide(const std::string& cls, std::size_t max_size, const std::string& formula,
                     const std::vector<std::string>& premises);

Report report_decompose(const std::string& algebra_path);

Report report_omega(const std::string& sequence_path, std::size_t length);

}  // namespace reslat
