#pragma once

#include <iosfwd>
#include <vector>

#include "grm/code.hpp"

namespace grm {

/// A codeword-shaped symbol file: header line `r m q`, then n = q^m lines
/// each holding one decimal symbol in [0, q) or `?` for an erasure.
struct SymbolFile {
    CodeParams params;
    std::vector<int> symbols;
};

/// Parse a symbol file. Bad header parameters raise std::invalid_argument;
/// out-of-range values, wrong symbol counts or trailing junk raise
/// IntegrityError.
SymbolFile readSymbolFile(std::istream& in);

void writeSymbolFile(std::ostream& out, const CodeParams& params, const std::vector<int>& symbols);

/// Headerless value list (message files): one decimal symbol per line,
/// erasures not allowed. expectCount and q bound the contents; violations
/// raise IntegrityError.
std::vector<int> readValues(std::istream& in, int expectCount, int q);

void writeValues(std::ostream& out, const std::vector<int>& values);

} // namespace grm
