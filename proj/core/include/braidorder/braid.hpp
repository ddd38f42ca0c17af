#pragma once

// Braid words in the Artin generators and their elementary invariants.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidorder {

/// Raised for malformed textual input (words, sequences).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm reaches a state its invariants rule out.
/// Seeing one of these means a bug, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// sigma_index^sign, sign is +1 or -1.
struct Generator {
  int index = 1;
  int sign = 1;

  [[nodiscard]] Generator inverse() const { return {index, -sign}; }
  [[nodiscard]] int as_int() const { return index * sign; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Generator> letters = {});

  /// Builds from signed integers (k > 0 is sigma_k, k < 0 its inverse).
  static BraidWord from_ints(int strands, const std::vector<int>& letters);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<Generator>& letters() const {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::vector<int> to_ints() const;

  [[nodiscard]] BraidWord inverse() const;
  [[nodiscard]] BraidWord operator*(const BraidWord& rhs) const;
  [[nodiscard]] BraidWord pow(int exponent) const;

  /// Inserts `g` so that it becomes the letter at `position`.
  [[nodiscard]] BraidWord inserted(std::size_t position, Generator g) const;
  [[nodiscard]] BraidWord inserted(std::size_t position,
                                   const BraidWord& w) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Generator> letters_;
};

/// Whitespace separated nonzero integers; empty text is the identity.
BraidWord parse_word(std::string_view text, int strands);
/// Single-space separated signed integers; the identity formats as "".
std::string format_word(const BraidWord& w);

/// Largest |k| occurring in the text, 0 for an empty word. Used for
/// strand inference; throws ParseError on non-integer tokens.
int max_generator_index(std::string_view text);

BraidWord free_reduce(const BraidWord& w);

/// images()[i - 1] is the final position of the strand starting at i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int i) const { return images_.at(i - 1); }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation permutation_image(const BraidWord& w);

/// Algebraic crossing numbers of strings labelled by start position.
class CrossingMatrix {
 public:
  explicit CrossingMatrix(int n);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int operator()(int i, int j) const;
  void add(int i, int j, int delta);

  friend bool operator==(const CrossingMatrix&, const CrossingMatrix&) =
      default;

 private:
  int n_;
  std::vector<int> cells_;
};

CrossingMatrix crossing_numbers(const BraidWord& w);

struct SigmaConsistency {
  enum class Kind { trivial, positive, negative, inconsistent };
  Kind kind = Kind::trivial;
  int index = 0;  // smallest generator index, 0 for the empty word

  friend bool operator==(const SigmaConsistency&,
                         const SigmaConsistency&) = default;
};

SigmaConsistency is_sigma_consistent(const BraidWord& w);

namespace relators {
/// sigma_i sigma_j sigma_i^-1 sigma_j^-1 for |i - j| >= 2.
BraidWord commutation(int strands, int i, int j);
/// sigma_i sigma_{i+1} sigma_i sigma_{i+1}^-1 sigma_i^-1 sigma_{i+1}^-1.
BraidWord braid(int strands, int i);
}  // namespace relators

}  // namespace braidorder
