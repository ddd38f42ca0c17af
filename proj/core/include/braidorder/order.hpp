#pragma once

// The right-invariant total order on B_n: a > b when the curve diagram of
// a, pulled tight against that of b, first branches off into the upper
// component.

#include <compare>

#include "braidorder/braid.hpp"
#include "braidorder/cutting.hpp"

namespace braidorder {

/// Through the sign of a b^-1.
std::strong_ordering compare(const BraidWord& a, const BraidWord& b);

/// Directly from two reduced cutting sequences: finds where the two paths
/// from -1 first part and compares the departing arcs by their turning
/// angle around the last shared point. Ties between occurrences of one gap
/// letter are settled with the real-axis ranks of that diagram.
std::strong_ordering compare_sequences(const CuttingSequence& s,
                                       const CuttingSequence& t);

SignResult sign(const BraidWord& w);

}  // namespace braidorder
