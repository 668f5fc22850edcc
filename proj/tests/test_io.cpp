#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "reslat/enumeration.hpp"
#include "reslat/io.hpp"
#include "reslat/report.hpp"

using namespace reslat;

namespace {

const std::string kFixtures = RESLAT_FIXTURES;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::size_t format_error_line(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const PositionedError& e) {
    CHECK(e.kind() == ErrorKind::FormatError);
    return e.position();
  }
  FAIL("expected a format error");
  return 0;
}

bool contains_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("reslat-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("the Lukasiewicz fixture loads to its tables") {
  const AlgebraFile f = load_algebra(fixture("l3.alg"));
  CHECK(f.name == "l3");
  CHECK(f.chain);
  const FiniteResiduatedLattice a(f.tables);
  CHECK(a == FiniteResiduatedLattice::chain(3, {0, 0, 0, 0, 0, 1, 0, 1, 2}, 2, 0));
}

TEST_CASE("fixtures round trip byte for byte") {
  for (const char* name : {"l3.alg", "diamond.alg", "two_by_two.alg"}) {
    const std::string text = read_file(fixture(name));
    CHECK(format_algebra(parse_algebra(text)) == text);
  }
}

TEST_CASE("save then load") {
  const auto dir = scratch_dir("save");
  for_each_chain(4, AlgebraClass::HpsUL, [&](const FiniteResiduatedLattice& a) {
    const std::string path = (dir / "a.alg").string();
    save_algebra(to_file(a, "x"), path);
    REQUIRE(FiniteResiduatedLattice(load_algebra(path).tables) == a);
  });
  const auto b = FiniteResiduatedLattice::chain(2, {0, 0, 0, 1}, 1, 0);
  const auto bb = direct_product(b, b);
  const AlgebraFile f = to_file(bb, "bb");
  CHECK_FALSE(f.chain);
  CHECK(FiniteResiduatedLattice(parse_algebra(format_algebra(f)).tables) == bb);
  std::filesystem::remove_all(dir);
}

TEST_CASE("format errors name the line") {
  CHECK(format_error_line(read_file(fixture("bad_row.alg"))) == 10);
  CHECK(format_error_line("algebra a\nsize 2\nchain\ne 1\nf 0\nbot 0\ntop 1\nproduct\n0 0\n") == 9);
  CHECK(format_error_line("algebra a\nsize 2\nchain\ne 3\n") == 4);
  CHECK(format_error_line("algebra a\nsize x\n") == 2);
  CHECK(format_error_line("size 2\n") == 1);
  CHECK(format_error_line("algebra a\nsize 2\nlattice\n") == 3);
  CHECK(format_error_line("algebra a\nsize 2\nchain\ne 1\nf 0\nbot 0\ntop 1\nproduct\n0 0\n0 1\n0 0\n") == 11);
  CHECK(format_error_line("algebra a\nsize 2\norder\n0 1 2\n") == 4);
  // Comments and blank lines do not shift line numbers.
  CHECK(format_error_line("# header\n\nalgebra a\nsize 0\n") == 4);
}

TEST_CASE("missing files") {
  try {
    load_algebra(fixture("does-not-exist.alg"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
}

TEST_CASE("sequence files") {
  const NatVecSeq s = load_sequence(fixture("seq_k2.txt"));
  CHECK(s.k == 2);
  CHECK(s.entries.size() == 10);
  CHECK(s.entries[1] == std::vector<std::uint64_t>{0, 4});
  CHECK_THROWS_AS(parse_sequence("2\n1 2\n3\n"), PositionedError);
  CHECK_THROWS_AS(parse_sequence("0\n"), PositionedError);
  CHECK_THROWS_AS(parse_sequence(""), PositionedError);
  CHECK(parse_sequence("1\n").entries.empty());
}

TEST_CASE("check report") {
  const Report r = report_check(fixture("l3.alg"));
  CHECK(r.outcome == 0);
  CHECK(contains_line(r.text, "class IUL_omega chain"));
  const Report d = report_check(fixture("diamond.alg"));
  CHECK(d.outcome == 1);
  CHECK(contains_line(d.text, "semilinear no"));
  CHECK(contains_line(d.text, "class none"));
  const Report p = report_check(fixture("two_by_two.alg"));
  CHECK(contains_line(p.text, "class IUL_omega algebra"));
}

TEST_CASE("fep report") {
  const Report r = report_fep(fixture("l3.alg"), "0,1,2", "ul");
  CHECK(r.outcome == 0);
  CHECK(contains_line(r.text, "|M|=3 |D|=3 embedding=ok"));
  CHECK(r.text.find("FAIL") == std::string::npos);
  const Report small = report_fep(fixture("l3.alg"), "0, 2", "iul");
  CHECK(contains_line(small.text, "M 0,2"));
  CHECK(contains_line(small.text, "subset_enlarged no"));
  CHECK_THROWS_AS(report_fep(fixture("l3.alg"), "0,x", "ul"), Error);
  CHECK_THROWS_AS(report_fep(fixture("l3.alg"), "0,1", "ul"), Error);
  CHECK_THROWS_AS(report_fep(fixture("two_by_two.alg"), "0,3", "ul"), Error);
}

TEST_CASE("decide report") {
  const Report r = report_decide("ul-omega", 3, "x1 \\ e", {});
  CHECK(r.outcome == 1);
  CHECK(contains_line(r.text, "verdict counterexample"));
  CHECK(contains_line(r.text, "reverified yes"));
  const Report v = report_decide("ul-omega", 4, "(x1 \\ e) <-> ((x1 * x1) \\ e)", {});
  CHECK(v.outcome == 0);
  CHECK(contains_line(v.text, "verdict valid-up-to-bound 4"));
  const Report p = report_decide("hpsul", 3, "x2", {"x1", "x1 \\ x2"});
  CHECK(p.outcome == 0);
  CHECK(contains_line(p.text, "premise x1 \\ x2"));
}

TEST_CASE("decompose report") {
  const Report r = report_decompose(fixture("two_by_two.alg"));
  CHECK(r.outcome == 0);
  CHECK(contains_line(r.text, "factors 2"));
  const Report d = report_decompose(fixture("diamond.alg"));
  CHECK(d.outcome == 1);
}

TEST_CASE("omega report") {
  const Report r = report_omega(fixture("seq_k2.txt"), 3);
  CHECK(r.outcome == 0);
  CHECK(contains_line(r.text, "result ok"));
  CHECK(report_omega(fixture("seq_k2.txt"), 11).outcome == 1);
}

TEST_CASE("enumerate report and emitted files") {
  const auto dir = scratch_dir("emit");
  const Report r = report_enumerate(3, "iul", dir.string());
  CHECK(r.outcome == 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    const AlgebraFile f = load_algebra(entry.path().string());
    CHECK(check_axioms(FiniteResiduatedLattice(f.tables)).iul);
  }
  CHECK(contains_line(r.text, "total " + std::to_string(files)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(report_enumerate(4, "hpsul-star", "").text == report_enumerate(4, "hpsul-star", "").text);
  CHECK(report_decide("hpsul", 4, "(x1 \\ x2) | (x2 \\ x1)", {}).text ==
        report_decide("hpsul", 4, "(x1 \\ x2) | (x2 \\ x1)", {}).text);
  CHECK(report_fep(fixture("l3.alg"), "0,1,2", "psul").text ==
        report_fep(fixture("l3.alg"), "0,1,2", "psul").text);
}
