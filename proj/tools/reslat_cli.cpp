// Command-line front end over the C interface.
//
// Exit codes: 0 success or valid, 1 counterexample or violation found,
// 2 usage or input error.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reslat/reslat.h"

namespace {

constexpr int kUsageError = 2;

int finish(rl_status status, int outcome, char* text) {
  if (status != RL_OK) {
    std::fprintf(stderr, "error: %s: %s\n", rl_status_name(status), rl_last_error());
    return kUsageError;
  }
  std::fputs(text, stdout);
  rl_string_free(text);
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite residuated lattices: classification, enumeration, embeddings, decisions"};
  app.require_subcommand(1);

  std::string path;
  std::string subset;
  std::string mode;
  std::string cls;
  std::string emit_dir;
  std::string formula;
  std::vector<std::string> premises;
  std::size_t size = 0;
  std::size_t length = 0;

  auto* check = app.add_subcommand("check", "Check the axioms and report the class of an algebra");
  check->add_option("file", path, "Algebra file")->required();

  auto* fep = app.add_subcommand("fep", "Build the finite downset algebra for a subset and verify it");
  fep->add_option("file", path, "Algebra file (a chain)")->required();
  fep->add_option("--subset", subset, "Comma-separated element indices")->required();
  fep->add_option("--mode", mode, "Construction mode")
      ->required()
      ->check(CLI::IsMember({"ul", "iul", "psul"}));

  const std::vector<std::string> classes{"hpsul", "hpsul-star", "hpsul-star-omega", "ul",
                                         "ul-omega",  "iul",        "iul-omega"};
  auto* enumerate = app.add_subcommand("enumerate", "List all chains of a class up to a size");
  enumerate->add_option("--size", size, "Largest chain size")->required();
  enumerate->add_option("--class", cls, "Class")->required()->check(CLI::IsMember(classes));
  enumerate->add_option("--emit", emit_dir, "Directory to write one algebra file per chain");

  auto* decide = app.add_subcommand("decide", "Search the chains of a class for a counter-model");
  decide->add_option("--class", cls, "Class")->required()->check(CLI::IsMember(classes));
  decide->add_option("--max-size", size, "Largest chain size")->required();
  decide->add_option("--formula", formula, "Conclusion")->required();
  decide->add_option("--premise", premises, "Premise (repeatable)");

  auto* decompose = app.add_subcommand("decompose", "Split an algebra into chain quotients");
  decompose->add_option("file", path, "Algebra file")->required();

  auto* omega = app.add_subcommand("omega", "Extract a monotone subsequence from a sequence file");
  omega->add_option("seqfile", path, "Sequence file")->required();
  omega->add_option("--len", length, "Target length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  int outcome = 0;
  char* text = nullptr;
  rl_status status = RL_OK;
  if (*check) {
    status = rl_report_check(path.c_str(), &outcome, &text);
  } else if (*fep) {
    status = rl_report_fep(path.c_str(), subset.c_str(), mode.c_str(), &outcome, &text);
  } else if (*enumerate) {
    status = rl_report_enumerate(size, cls.c_str(), emit_dir.empty() ? nullptr : emit_dir.c_str(),
                                 &outcome, &text);
  } else if (*decide) {
    std::vector<const char*> gamma;
    for (const std::string& p : premises) gamma.push_back(p.c_str());
    status = rl_report_decide(cls.c_str(), size, formula.c_str(), gamma.data(), gamma.size(),
                              &outcome, &text);
  } else if (*decompose) {
    status = rl_report_decompose(path.c_str(), &outcome, &text);
  } else {
    status = rl_report_omega(path.c_str(), length, &outcome, &text);
  }
  return finish(status, outcome, text);
}
