#pragma once

// Cutting sequences: the word read off a curve diagram along its
// intersections with the real axis, and the action of the Artin
// generators on reduced sequences.
//
// Letters: Hole(k) for 0 <= k <= n+1 (k = 0 and k = n+1 are the points
// -1 and +1 of the boundary, 1..n are the punctures), Gap(k) for an
// intersection with the open interval (k, k+1), and Up/Down for an arc in
// the upper/lower half plane. ASCII form: `_k`, `k`, `^`, `v`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidorder/braid.hpp"

namespace braidorder {

enum class Arrow : std::uint8_t { up, down };

inline Arrow opposite(Arrow a) {
  return a == Arrow::up ? Arrow::down : Arrow::up;
}

struct CutLetter {
  enum class Kind : std::uint8_t { hole, gap, up, down };
  Kind kind = Kind::hole;
  int value = 0;  // hole or gap index; unused for arrows

  static CutLetter hole(int k) { return {Kind::hole, k}; }
  static CutLetter gap(int k) { return {Kind::gap, k}; }
  static CutLetter arrow(Arrow a) {
    return {a == Arrow::up ? Kind::up : Kind::down, 0};
  }
  static CutLetter up() { return {Kind::up, 0}; }
  static CutLetter down() { return {Kind::down, 0}; }

  [[nodiscard]] bool is_hole() const { return kind == Kind::hole; }
  [[nodiscard]] bool is_gap() const { return kind == Kind::gap; }
  [[nodiscard]] bool is_number() const { return is_hole() || is_gap(); }
  [[nodiscard]] bool is_arrow() const { return !is_number(); }
  [[nodiscard]] bool is_hole(int k) const { return is_hole() && value == k; }
  [[nodiscard]] bool is_gap(int k) const { return is_gap() && value == k; }
  /// Only meaningful for arrows.
  [[nodiscard]] Arrow arrow_dir() const {
    return kind == Kind::up ? Arrow::up : Arrow::down;
  }

  friend bool operator==(const CutLetter&, const CutLetter&) = default;
};

using CutLetters = std::vector<CutLetter>;

/// Raised when letters do not satisfy the cutting-sequence conditions:
/// bounded by Hole(0) ... Hole(n+1), every hole exactly once, numbers and
/// arrows alternating except for Hole(k) Hole(k+-1) adjacencies.
class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CuttingSequence {
 public:
  CuttingSequence(int strands, CutLetters letters);

  static CuttingSequence trivial(int strands);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const CutLetters& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] const CutLetter& operator[](std::size_t i) const {
    return letters_[i];
  }
  [[nodiscard]] bool is_trivial() const {
    return letters_.size() == static_cast<std::size_t>(strands_) + 2;
  }
  [[nodiscard]] std::size_t gap_count() const;

  friend bool operator==(const CuttingSequence&,
                         const CuttingSequence&) = default;

 private:
  int strands_;
  CutLetters letters_;
};

/// Empty optional when the letters form a valid cutting sequence,
/// otherwise a description of the first violated condition.
std::optional<std::string> check_sequence(int strands, const CutLetters& letters);

std::string format_letter(const CutLetter& c);
std::string format_sequence(const CuttingSequence& s);
std::string format_sequence(const CutLetters& s);

/// Parses the ASCII form. When `strands` is empty it is inferred from the
/// largest hole, which must be n+1.
CuttingSequence parse_sequence(std::string_view text,
                               std::optional<int> strands = std::nullopt);
CutLetters parse_letters(std::string_view text);

// ---------------------------------------------------------------- reduction

enum class ReductionRule : std::uint8_t {
  hole_absorbs_gap,   // _i ~ i -> _i, _{i+1} ~ i -> _{i+1} and mirrors
  arrow_gap_arrow,    // v i v -> v, ^ i ^ -> ^
  gap_arrow_gap,      // i ~ i -> i
  adjacent_holes,     // _i ~ _{i+1} -> _i _{i+1} and mirror
};

/// A rewrite applicable to the three letters starting at `position`.
struct Redex {
  std::size_t position = 0;
  ReductionRule rule = ReductionRule::hole_absorbs_gap;

  friend bool operator==(const Redex&, const Redex&) = default;
};

std::optional<ReductionRule> match_rule(const CutLetter& a, const CutLetter& b,
                                        const CutLetter& c);
std::vector<Redex> find_redexes(const CuttingSequence& s);
CuttingSequence rewrite(const CuttingSequence& s, const Redex& r);

[[nodiscard]] bool is_reduced(const CuttingSequence& s);
CuttingSequence reduce(const CuttingSequence& s);

// ------------------------------------------------------------------- action

/// One simultaneous replacement pass for sigma_i^sign, no reduction.
/// Input must be reduced; the output is a valid but possibly unreduced
/// cutting sequence for beta sigma_i^sign.
CuttingSequence act_unreduced(const CuttingSequence& s, int i, int sign);
CuttingSequence apply_generator(const CuttingSequence& s, int i, int sign);
CuttingSequence apply_word(const CuttingSequence& s, const BraidWord& w);
CuttingSequence word_to_cutseq(const BraidWord& w);

// --------------------------------------------------------------------- sign

struct SignResult {
  enum class Kind { trivial, positive, negative };
  Kind kind = Kind::trivial;
  int index = 0;  // 0 when trivial

  friend bool operator==(const SignResult&, const SignResult&) = default;
};

/// Decided by the arrow following the maximal run Hole(0) ... Hole(k).
SignResult sign_of(const CuttingSequence& s);

std::string format_sign(const SignResult& r);

}  // namespace braidorder
