#pragma once

// Text formats.
//
// Algebra file:
//   algebra <name>
//   size <n>
//   chain                      (or: order, then one "i j" line per covering pair i < j)
//   e <i>
//   f <i>
//   bot <i>
//   top <i>
//   product
//   <n rows of n indices>
// Blank lines and lines starting with '#' are skipped.
//
// Sequence file: the dimension k on the first line, then one k-tuple of
// naturals per line.

#include <iosfwd>
#include <string>

#include "reslat/algebra.hpp"
#include "reslat/combinatorics.hpp"

namespace reslat {

struct AlgebraFile {
  std::string name;
  bool chain = false;  // written as `chain` rather than covering pairs
  AlgebraTables tables;
};

// Throws PositionedError(FormatError) with the 1-based line number. The
// tables are not checked beyond shape and index ranges.
AlgebraFile parse_algebra(const std::string& text);
std::string format_algebra(const AlgebraFile& file);

// An algebra file for a validated algebra; `chain` when it is canonical.
AlgebraFile to_file(const FiniteResiduatedLattice& a, const std::string& name);

// Throw IoError when the file cannot be read or written.
AlgebraFile load_algebra(const std::string& path);
void save_algebra(const AlgebraFile& file, const std::string& path);

NatVecSeq parse_sequence(const std::string& text);
NatVecSeq load_sequence(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace reslat
