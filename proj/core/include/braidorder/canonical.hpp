#pragma once

// Left-consistent canonical form. Each main step slides a puncture back
// along the leftmost useful arc of the current curve diagram, records the
// slide as a braid word, and acts with it on the cutting sequence until
// the diagram is trivial. The inverse of the recorded word is sigma-
// consistent and represents the input braid.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "braidorder/braid.hpp"
#include "braidorder/cutting.hpp"

namespace braidorder {

/// Where the arc starts (gap letter i or hole _i) and the direction it is
/// read in the sequence.
enum class UsefulKind { from_gap_forward, from_hole_forward,
                        from_gap_backward, from_hole_backward };

struct UsefulSubword {
  UsefulKind kind = UsefulKind::from_gap_forward;
  std::size_t anchor = 0;  // position of the letter i or _i
  std::size_t first = 0;   // span in the sequence, inclusive
  std::size_t last = 0;
  CutLetters letters;      // in reading order, starting at i or _i

  [[nodiscard]] bool from_hole() const {
    return kind == UsefulKind::from_hole_forward ||
           kind == UsefulKind::from_hole_backward;
  }
  [[nodiscard]] int end_hole() const { return letters.back().value; }
};

/// Sequence must start Hole(0) ... Hole(i) followed by `direction`.
std::vector<UsefulSubword> find_useful_subwords(const CuttingSequence& s,
                                                int i, Arrow direction);

/// An arc from the hole _i wins outright; otherwise the candidate whose
/// gap letter i lies leftmost on the real axis.
UsefulSubword leftmost_useful_subword(const CuttingSequence& s, int i,
                                      Arrow direction);

/// The slide of the end hole back along `u`, as a braid word on
/// s.strands() strands.
BraidWord emit_slide_word(const UsefulSubword& u, const CuttingSequence& s);

/// The fragment a'_0 ~ a'_1 ... the slide word is read from (exposed for
/// tests).
CutLetters slide_fragment(const UsefulSubword& u);
BraidWord slide_word_from_fragment(const CutLetters& fragment, int strands);

/// (j, m): j is the first curve differing from the trivial diagram, m the
/// number of gap letters j-1. Larger j is simpler; for equal j smaller m
/// is simpler. The trivial sequence is (n+2, 0).
struct Complexity {
  int j = 0;
  std::size_t m = 0;

  friend bool operator==(const Complexity&, const Complexity&) = default;
  friend std::strong_ordering operator<=>(const Complexity& a,
                                          const Complexity& b) {
    if (a.j != b.j) return b.j <=> a.j;
    return a.m <=> b.m;
  }
};

Complexity complexity(const CuttingSequence& s);

struct CanonicalResult {
  BraidWord word;
  SignResult sign;
  std::size_t iterations = 0;
};

struct CanonicalOptions {
  /// Default 10 * (1 + number of gap letters of the input sequence).
  std::optional<std::size_t> iteration_cap;
};

CanonicalResult canonical_form(const BraidWord& w,
                               const CanonicalOptions& options = {});
CanonicalResult canonical_form(const CuttingSequence& s,
                               const CanonicalOptions& options = {});

}  // namespace braidorder
