#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "thermalops/linalg.hpp"

namespace thermalops {

// Plain-text matrix interchange format:
//
//   <rows> <cols>
//   <re>,<im> <re>,<im> ...     (one line per row)
//
// Entries are written with 17 significant digits so that a write/read round
// trip reproduces the doubles bit for bit. Lines starting with '#' and blank
// lines are skipped on input.
void writeMatrix(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix readMatrix(std::istream& in);

// Several named matrices in one stream; each block is introduced by a line
// "matrix <name>" followed by the single-matrix format above.
using NamedMatrices = std::vector<std::pair<std::string, ComplexMatrix>>;
void writeNamedMatrices(std::ostream& out, const NamedMatrices& matrices);
NamedMatrices readNamedMatrices(std::istream& in);

// Fixed-format scalar used across all text output: %.16e.
std::string formatDouble(double value);

}  // namespace thermalops
