#pragma once

// Braid equality through the Artin action on the free group, and
// exhaustive enumeration of short words under combinatorial constraints.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "braidorder/braid.hpp"

namespace braidorder {

/// Freely reduced word in x_1..x_n; letter k > 0 is x_k, k < 0 is x_k^-1.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);  // reduces on construction

  static FreeWord generator(int k) { return FreeWord({k}); }

  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] FreeWord inverse() const;
  /// Appends with cancellation at the seam.
  FreeWord& operator*=(const FreeWord& rhs);
  [[nodiscard]] FreeWord operator*(const FreeWord& rhs) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// The automorphism of F_n induced by a braid, stored as generator images.
class ArtinAutomorphism {
 public:
  static ArtinAutomorphism identity(int n);

  [[nodiscard]] int rank() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] const FreeWord& image(int k) const { return images_.at(k - 1); }
  [[nodiscard]] const std::vector<FreeWord>& images() const { return images_; }
  [[nodiscard]] bool is_identity() const;

  /// Image of an arbitrary free word.
  [[nodiscard]] FreeWord apply(const FreeWord& w) const;
  /// this o sigma_i^sign: substitutes the current images into sigma's.
  void compose_generator(int i, int sign);

  friend bool operator==(const ArtinAutomorphism&,
                         const ArtinAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; the word acts as the
/// composite sigma_{w_1} o sigma_{w_2} o ... .
ArtinAutomorphism artin_action(const BraidWord& w);

bool braid_equal(const BraidWord& a, const BraidWord& b);

struct EnumerationConstraints {
  std::optional<Permutation> permutation;
  std::optional<CrossingMatrix> crossings;
  /// Letters (as signed ints) that may not occur.
  std::set<int> forbidden;
};

/// Upper bound on (2(n-1))^length accepted by enumerate_constrained.
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

/// Every word of exactly `length` letters meeting the constraints, in
/// lexicographic order of the letter alphabet -1, 1, -2, 2, ...
std::vector<BraidWord> enumerate_constrained(
    int n, int length, const EnumerationConstraints& constraints = {});

/// Groups words into classes of equal braids (first occurrence order).
std::vector<std::vector<BraidWord>> group_by_braid(
    const std::vector<BraidWord>& words);

}  // namespace braidorder
