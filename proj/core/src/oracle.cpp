#include "braidorder/oracle.hpp"

#include <cstdlib>

namespace braidorder {

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int k : letters) {
    if (k == 0) throw std::invalid_argument("free generator 0 does not exist");
    if (!letters_.empty() && letters_.back() == -k) {
      letters_.pop_back();
    } else {
      letters_.push_back(k);
    }
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(-*it);
  }
  return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  std::size_t skip = 0;
  while (skip < rhs.letters_.size() && !letters_.empty() &&
         letters_.back() == -rhs.letters_[skip]) {
    letters_.pop_back();
    ++skip;
  }
  letters_.insert(letters_.end(),
                  rhs.letters_.begin() + static_cast<std::ptrdiff_t>(skip),
                  rhs.letters_.end());
  return *this;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord out = *this;
  out *= rhs;
  return out;
}

ArtinAutomorphism ArtinAutomorphism::identity(int n) {
  ArtinAutomorphism out;
  for (int k = 1; k <= n; ++k) out.images_.push_back(FreeWord::generator(k));
  return out;
}

bool ArtinAutomorphism::is_identity() const {
  for (int k = 1; k <= rank(); ++k) {
    if (!(image(k) == FreeWord::generator(k))) return false;
  }
  return true;
}

FreeWord ArtinAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (int k : w.letters()) {
    const FreeWord& img = images_.at(static_cast<std::size_t>(std::abs(k)) - 1);
    out *= k > 0 ? img : img.inverse();
  }
  return out;
}

void ArtinAutomorphism::compose_generator(int i, int sign) {
  FreeWord& xi = images_.at(static_cast<std::size_t>(i) - 1);
  FreeWord& xj = images_.at(static_cast<std::size_t>(i));
  if (sign > 0) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    FreeWord new_i = xi * xj * xi.inverse();
    xj = xi;
    xi = std::move(new_i);
  } else {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    FreeWord new_j = xj.inverse() * xi * xj;
    xi = xj;
    xj = std::move(new_j);
  }
}

ArtinAutomorphism artin_action(const BraidWord& w) {
  auto phi = ArtinAutomorphism::identity(w.strands());
  for (const auto& g : w.letters()) phi.compose_generator(g.index, g.sign);
  return phi;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("braid_equal: strand mismatch");
  }
  return artin_action(free_reduce(a * b.inverse())).is_identity();
}

std::vector<BraidWord> enumerate_constrained(
    int n, int length, const EnumerationConstraints& constraints) {
  if (n < 2) throw std::invalid_argument("enumeration needs n >= 2");
  if (length < 0) throw std::invalid_argument("negative word length");
  const std::uint64_t alphabet = 2 * static_cast<std::uint64_t>(n - 1);
  std::uint64_t space = 1;
  for (int k = 0; k < length; ++k) {
    space *= alphabet;
    if (space > kMaxEnumeration) {
      throw std::length_error("enumeration space exceeds the search guard");
    }
  }
  std::vector<int> letters;
  for (int k = 1; k < n; ++k) {
    for (int s : {-1, 1}) {
      if (!constraints.forbidden.contains(s * k)) letters.push_back(s * k);
    }
  }
  std::vector<BraidWord> out;
  if (letters.empty() && length > 0) return out;

  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  std::vector<int> word(static_cast<std::size_t>(length));
  while (true) {
    for (std::size_t p = 0; p < digits.size(); ++p) word[p] = letters[digits[p]];
    BraidWord w = BraidWord::from_ints(n, word);
    const bool ok =
        (!constraints.permutation ||
         permutation_image(w) == *constraints.permutation) &&
        (!constraints.crossings || crossing_numbers(w) == *constraints.crossings);
    if (ok) out.push_back(std::move(w));
    // odometer, last position fastest
    std::size_t p = digits.size();
    while (p > 0) {
      --p;
      if (++digits[p] < letters.size()) break;
      digits[p] = 0;
      if (p == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

std::vector<std::vector<BraidWord>> group_by_braid(
    const std::vector<BraidWord>& words) {
  std::vector<std::vector<BraidWord>> classes;
  for (const auto& w : words) {
    bool placed = false;
    for (auto& cls : classes) {
      if (braid_equal(cls.front(), w)) {
        cls.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({w});
  }
  return classes;
}

}  // namespace braidorder
