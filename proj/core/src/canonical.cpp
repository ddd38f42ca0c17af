#include "braidorder/canonical.hpp"

#include <algorithm>
#include <string>

#include "braidorder/geometry.hpp"

namespace braidorder {

namespace {

std::size_t initial_hole_run(const CuttingSequence& s) {
  std::size_t k = 0;
  while (k + 1 < s.size() && s[k + 1].is_hole(static_cast<int>(k) + 1)) ++k;
  return k;
}

// Reads from `anchor` one letter at a time in the given direction until the
// first hole. Fails when the walk meets another gap letter i or ends in a
// hole that is not a puncture other than i, i+1.
std::optional<UsefulSubword> read_useful(const CuttingSequence& s,
                                         std::size_t anchor, bool forward,
                                         int i, UsefulKind kind) {
  UsefulSubword u;
  u.kind = kind;
  u.anchor = anchor;
  u.letters.push_back(s[anchor]);
  std::size_t idx = anchor;
  while (true) {
    idx = forward ? idx + 1 : idx - 1;  // arrow
    u.letters.push_back(s[idx]);
    idx = forward ? idx + 1 : idx - 1;  // number
    const CutLetter& c = s[idx];
    u.letters.push_back(c);
    if (c.is_hole()) break;
    if (c.is_gap(i)) return std::nullopt;
  }
  const int end = u.letters.back().value;
  if (end < 1 || end > s.strands() || end == i || end == i + 1) {
    return std::nullopt;
  }
  u.first = std::min(anchor, idx);
  u.last = std::max(anchor, idx);
  return u;
}

std::optional<std::size_t> hole_position(const CuttingSequence& s, int k) {
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p].is_hole(k)) return p;
  }
  return std::nullopt;
}

// Reduction inside the modified fragment: x ~ x -> x, and equal arrows
// around a number collapse. The underlined end letter never takes part.
CutLetters reduce_fragment(const CutLetters& in) {
  CutLetters out;
  for (const CutLetter& c : in) {
    out.push_back(c);
    while (out.size() >= 3) {
      const CutLetter& a = out[out.size() - 3];
      const CutLetter& b = out[out.size() - 2];
      const CutLetter& d = out[out.size() - 1];
      if (a.is_gap() && b.is_arrow() && d.is_gap() && a.value == d.value) {
        out.resize(out.size() - 2);
      } else if (a.is_arrow() && b.is_gap() && a == d) {
        out.resize(out.size() - 2);
      } else {
        break;
      }
    }
  }
  return out;
}

void append_run(std::vector<Generator>& out, int from, int to, int sign) {
  // from..to inclusive, either direction
  const int step = from <= to ? 1 : -1;
  for (int g = from;; g += step) {
    out.push_back({g, sign});
    if (g == to) break;
  }
}

}  // namespace

std::vector<UsefulSubword> find_useful_subwords(const CuttingSequence& s,
                                                int i, Arrow direction) {
  const std::size_t run = initial_hole_run(s);
  if (static_cast<int>(run) != i || run + 1 >= s.size() ||
      !(s[run + 1] == CutLetter::arrow(direction))) {
    throw std::invalid_argument("sequence does not start _0 ... _" +
                                std::to_string(i) + " followed by the arrow");
  }
  const CutLetter want = CutLetter::arrow(direction);
  std::vector<UsefulSubword> out;
  for (std::size_t p = 1; p + 1 < s.size(); ++p) {
    if (s[p].is_gap(i)) {
      const bool fwd = s[p + 1] == want;
      const bool bwd = s[p - 1] == want;
      if (fwd == bwd) {
        throw std::invalid_argument("sequence is not reduced");
      }
      const auto u = read_useful(s, p, fwd, i,
                                 fwd ? UsefulKind::from_gap_forward
                                     : UsefulKind::from_gap_backward);
      if (u) out.push_back(*u);
    }
  }
  if (const auto h = hole_position(s, i)) {
    const std::size_t p = *h;
    if (p + 1 < s.size() && s[p + 1] == want) {
      if (auto u = read_useful(s, p, true, i, UsefulKind::from_hole_forward)) {
        out.push_back(*u);
      }
    }
    if (p > 0 && s[p - 1] == want) {
      if (auto u = read_useful(s, p, false, i, UsefulKind::from_hole_backward)) {
        out.push_back(*u);
      }
    }
  }
  return out;
}

UsefulSubword leftmost_useful_subword(const CuttingSequence& s, int i,
                                      Arrow direction) {
  const auto all = find_useful_subwords(s, i, direction);
  if (all.empty()) {
    throw InternalError("no useful subword in " + format_sequence(s));
  }
  for (const auto& u : all) {
    if (u.from_hole()) return u;
  }
  if (all.size() == 1) return all.front();
  const auto order = occurrence_order(s, i);
  for (std::size_t p : order) {
    for (const auto& u : all) {
      if (u.anchor == p) return u;
    }
  }
  throw InternalError("useful subword anchor missing from occurrence order");
}

CutLetters slide_fragment(const UsefulSubword& u) {
  CutLetters f(u.letters.rbegin(), u.letters.rend());
  const int c = f.front().value;
  f.front() = CutLetter::gap(c);
  // every letter but the final i (the only one below c) is a_k, k >= 1
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    if (f[k].is_gap() && f[k].value >= c) f[k] = CutLetter::gap(f[k].value - 1);
  }
  return reduce_fragment(f);
}

BraidWord slide_word_from_fragment(const CutLetters& fragment, int strands) {
  std::vector<Generator> out;
  for (std::size_t k = 0; k + 2 < fragment.size(); k += 2) {
    const int a = fragment[k].value;
    const int b = fragment[k + 2].value;
    const bool up = fragment[k + 1].arrow_dir() == Arrow::up;
    if (a == b) {
      throw InternalError("slide fragment not reduced: " +
                          format_sequence(fragment));
    }
    if (a < b) {
      append_run(out, a + 1, b, up ? 1 : -1);
    } else {
      append_run(out, a, b + 1, up ? -1 : 1);
    }
  }
  return BraidWord(strands, std::move(out));
}

BraidWord emit_slide_word(const UsefulSubword& u, const CuttingSequence& s) {
  return slide_word_from_fragment(slide_fragment(u), s.strands());
}

Complexity complexity(const CuttingSequence& s) {
  if (s.is_trivial()) return {s.strands() + 2, 0};
  const std::size_t run = initial_hole_run(s);
  const int k = static_cast<int>(run);
  std::size_t m = 0;
  for (const auto& c : s.letters()) m += c.is_gap(k) ? 1 : 0;
  return {k + 1, m};
}

CanonicalResult canonical_form(const BraidWord& w,
                               const CanonicalOptions& options) {
  return canonical_form(word_to_cutseq(w), options);
}

CanonicalResult canonical_form(const CuttingSequence& input,
                               const CanonicalOptions& options) {
  if (!is_reduced(input)) {
    throw std::invalid_argument("canonical_form needs a reduced sequence");
  }
  const std::size_t cap =
      options.iteration_cap.value_or(10 * (1 + input.gap_count()));
  std::vector<Generator> recorded;
  CuttingSequence chi = input;
  Complexity current = complexity(chi);
  std::size_t iterations = 0;
  while (!chi.is_trivial()) {
    if (iterations == cap) {
      throw InternalError("canonical form exceeded " + std::to_string(cap) +
                          " main steps");
    }
    const int i = static_cast<int>(initial_hole_run(chi));
    const Arrow dir = chi[static_cast<std::size_t>(i) + 1].arrow_dir();
    const UsefulSubword u = leftmost_useful_subword(chi, i, dir);
    const BraidWord v = emit_slide_word(u, chi);
    recorded.insert(recorded.end(), v.letters().begin(), v.letters().end());
    chi = apply_word(chi, v);
    const Complexity next = complexity(chi);
    if (!(next < current)) {
      throw InternalError("complexity did not drop after sliding along " +
                          format_sequence(u.letters));
    }
    current = next;
    ++iterations;
  }
  const BraidWord word = BraidWord(input.strands(), std::move(recorded)).inverse();
  return {word, sign_of(input), iterations};
}

}  // namespace braidorder
