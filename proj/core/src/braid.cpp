#include "braidorder/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace braidorder {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw std::invalid_argument("braid words need at least 2 strands, got " +
                                std::to_string(strands));
  }
}

template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    if (end > pos) fn(text.substr(pos, end - pos));
    pos = end;
  }
}

int parse_int_token(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands_);
  for (const auto& g : letters_) {
    if (g.index < 1 || g.index > strands_ - 1 || (g.sign != 1 && g.sign != -1)) {
      throw std::out_of_range("generator " + std::to_string(g.as_int()) +
                              " out of range for B_" +
                              std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::from_ints(int strands, const std::vector<int>& letters) {
  std::vector<Generator> gens;
  gens.reserve(letters.size());
  for (int k : letters) {
    if (k == 0) throw std::out_of_range("generator 0 does not exist");
    gens.push_back({std::abs(k), k > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(gens));
}

std::vector<int> BraidWord::to_ints() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& g : letters_) out.push_back(g.as_int());
  return out;
}

BraidWord BraidWord::inverse() const {
  std::vector<Generator> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    inv.push_back(it->inverse());
  }
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) {
    throw std::invalid_argument("strand mismatch in braid product");
  }
  std::vector<Generator> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::pow(int exponent) const {
  const BraidWord base = exponent < 0 ? inverse() : *this;
  BraidWord out(strands_);
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

BraidWord BraidWord::inserted(std::size_t position, Generator g) const {
  return inserted(position, BraidWord(strands_, {g}));
}

BraidWord BraidWord::inserted(std::size_t position, const BraidWord& w) const {
  if (position > letters_.size()) {
    throw std::out_of_range("insertion position past end of word");
  }
  if (w.strands_ != strands_) {
    throw std::invalid_argument("strand mismatch in insertion");
  }
  std::vector<Generator> out = letters_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(position),
             w.letters_.begin(), w.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord parse_word(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<Generator> gens;
  for_each_token(text, [&](std::string_view token) {
    const int k = parse_int_token(token);
    if (k == 0 || std::abs(k) > strands - 1) {
      throw ParseError("generator " + std::string(token) +
                       " out of range for " + std::to_string(strands) +
                       " strands");
    }
    gens.push_back({std::abs(k), k > 0 ? 1 : -1});
  });
  return BraidWord(strands, std::move(gens));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g.as_int());
  }
  return out;
}

int max_generator_index(std::string_view text) {
  int best = 0;
  for_each_token(text, [&](std::string_view token) {
    best = std::max(best, std::abs(parse_int_token(token)));
  });
  return best;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (const auto& g : w.letters()) {
    if (!stack.empty() && stack.back() == g.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("images do not form a permutation");
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto images = identity(n).images_;
  std::swap(images.at(a - 1), images.at(b - 1));
  return Permutation(std::move(images));
}

Permutation permutation_image(const BraidWord& w) {
  // label_at[p] = which starting strand currently sits at position p
  std::vector<int> label_at(static_cast<std::size_t>(w.strands()));
  std::iota(label_at.begin(), label_at.end(), 1);
  for (const auto& g : w.letters()) {
    std::swap(label_at[g.index - 1], label_at[g.index]);
  }
  std::vector<int> images(label_at.size());
  for (std::size_t p = 0; p < label_at.size(); ++p) {
    images[label_at[p] - 1] = static_cast<int>(p) + 1;
  }
  return Permutation(std::move(images));
}

CrossingMatrix::CrossingMatrix(int n)
    : n_(n), cells_(static_cast<std::size_t>(n * n), 0) {}

int CrossingMatrix::operator()(int i, int j) const {
  return cells_.at(static_cast<std::size_t>((i - 1) * n_ + (j - 1)));
}

void CrossingMatrix::add(int i, int j, int delta) {
  if (i == j) throw std::invalid_argument("a string does not cross itself");
  cells_.at(static_cast<std::size_t>((i - 1) * n_ + (j - 1))) += delta;
  cells_.at(static_cast<std::size_t>((j - 1) * n_ + (i - 1))) += delta;
}

CrossingMatrix crossing_numbers(const BraidWord& w) {
  CrossingMatrix c(w.strands());
  std::vector<int> label_at(static_cast<std::size_t>(w.strands()));
  std::iota(label_at.begin(), label_at.end(), 1);
  for (const auto& g : w.letters()) {
    int& left = label_at[g.index - 1];
    int& right = label_at[g.index];
    c.add(left, right, g.sign);
    std::swap(left, right);
  }
  return c;
}

SigmaConsistency is_sigma_consistent(const BraidWord& w) {
  if (w.empty()) return {};
  int lowest = w.strands();
  for (const auto& g : w.letters()) lowest = std::min(lowest, g.index);
  bool pos = false;
  bool neg = false;
  for (const auto& g : w.letters()) {
    if (g.index != lowest) continue;
    (g.sign > 0 ? pos : neg) = true;
  }
  using Kind = SigmaConsistency::Kind;
  if (pos && neg) return {Kind::inconsistent, lowest};
  return {pos ? Kind::positive : Kind::negative, lowest};
}

namespace relators {

BraidWord commutation(int strands, int i, int j) {
  return BraidWord::from_ints(strands, {i, j, -i, -j});
}

BraidWord braid(int strands, int i) {
  return BraidWord::from_ints(strands, {i, i + 1, i, -(i + 1), -i, -(i + 1)});
}

}  // namespace relators

}  // namespace braidorder
