#pragma once

// Reconstruction of the real cutting sequence: where, inside (k, k+1),
// each occurrence of the gap letter k sits relative to the others.
// Occurrences are ranked by comparing the turning pattern of the arcs
// leaving them (up-strings first, then down-strings).

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidorder/cutting.hpp"

namespace braidorder {

/// x in {0, 1/2, 1, ..., n+1} stored as 2x.
class HalfGrid {
 public:
  constexpr HalfGrid() = default;
  static constexpr HalfGrid from_doubled(int doubled) {
    HalfGrid h;
    h.doubled_ = doubled;
    return h;
  }
  /// Hole k sits at k, gap k at k + 1/2.
  static HalfGrid of(const CutLetter& c);

  [[nodiscard]] constexpr int doubled() const { return doubled_; }
  [[nodiscard]] constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  friend constexpr auto operator<=>(HalfGrid, HalfGrid) = default;

 private:
  int doubled_ = 0;
};

std::string format_half(HalfGrid h);

struct DirectedString {
  std::vector<HalfGrid> values;
  std::vector<Arrow> arrows;  // arrows[j] sits between values[j], values[j+1]
  std::size_t anchor = 0;     // position of the starting gap letter
  bool forward = true;        // reading direction in the source sequence
};

/// Reads from the gap letter at `pos` in the direction whose first arrow
/// is `first`, up to and including the next hole.
DirectedString directed_string(const CuttingSequence& s, std::size_t pos,
                               Arrow first);
DirectedString up_string(const CuttingSequence& s, std::size_t pos);
DirectedString down_string(const CuttingSequence& s, std::size_t pos);

struct CyclicKey {
  std::vector<HalfGrid> entries;  // each in {1/2, 1, ..., n + 1/2}

  friend auto operator<=>(const CyclicKey&, const CyclicKey&) = default;
};

/// Per arrow, the representative of the signed step (x_{j+1} - x_j for an
/// up arrow, x_j - x_{j+1} for a down arrow) modulo n+1.
CyclicKey cyclic_key(const DirectedString& d, int strands);

/// Step representative for a single arc from `from` to `to`; 0 means the
/// step is a multiple of n+1, which never happens in a reduced sequence.
int cyclic_step_doubled(HalfGrid from, HalfGrid to, Arrow side, int strands);

/// Raised when two occurrences cannot be told apart, which happens only
/// for sequences that do not come from an embedded curve diagram.
class AmbiguousOrder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Positions of gap letter k, leftmost point of (k, k+1) first.
std::vector<std::size_t> occurrence_order(const CuttingSequence& s, int k);

/// True when the gap letter at `p` lies left of the one at `q` (same k).
bool occurs_left_of(const CuttingSequence& s, std::size_t p, std::size_t q);

/// For every letter, its rank among the occurrences of the same gap letter
/// (0 = leftmost); holes and arrows get 0.
std::vector<int> real_ranks(const CuttingSequence& s);

struct Validation {
  enum class Reason {
    none,
    hole_segment_crossed,  // _i _{i+1} adjacency and a gap letter i
    arcs_cross,            // two arcs on the same side are not nested
    unorderable,           // occurrences of a gap letter cannot be ranked
  };
  Reason reason = Reason::none;
  std::string detail;

  [[nodiscard]] bool valid() const { return reason == Reason::none; }
};

Validation validate(const CuttingSequence& s);

/// "hole_segment_crossed", "arcs_cross", "unorderable", or "none".
std::string_view reason_name(Validation::Reason r);

/// A point on the real axis of the realised diagram: gap points of the
/// same interval are ordered by rank.
struct RealPoint {
  int integer_part = 0;  // hole k or gap k
  int sub = 0;           // 0 for holes, rank + 1 for gap points

  friend auto operator<=>(const RealPoint&, const RealPoint&) = default;
};

RealPoint real_point(const CutLetter& c, int rank);

}  // namespace braidorder
