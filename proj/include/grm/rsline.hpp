#pragma once

#include <vector>

#include "grm/gf.hpp"

namespace grm {

/// Marker for an erased symbol slot.
constexpr int kErased = -1;

/// The q evaluations along one line: values[i] is the symbol observed at
/// abscissa gamma[i], or kErased. All abscissae are distinct.
struct LineView {
    std::vector<int> gamma;
    std::vector<int> values;
};

int knownCount(const LineView& view);

/// Erasure decoding of a degree-<= r slice: fits the unique polynomial
/// through the first r+1 known slots (slot order, so results are bit-exact
/// across runs) and returns all q values. Known slots are returned verbatim;
/// any known slot beyond the first r+1 is checked against the fit and a
/// mismatch raises IntegrityError, which cannot happen on erasure-only
/// corruption of a real codeword. Fewer than r+1 known slots:
/// std::invalid_argument.
std::vector<int> interpolateLine(const Field& f, const LineView& view, int r);

/// Additions-only shortcut for the full-degree case r = q-2 with exactly one
/// erasure: over such a line the q values sum to zero, so the missing one is
/// the negated sum of the rest. Agrees with interpolateLine; preconditions
/// violations raise std::invalid_argument.
std::vector<int> paritySumDecode(const Field& f, const LineView& view, int r);

} // namespace grm
