#include "braidorder/cutting.hpp"

#include <charconv>
#include <cstdlib>

namespace braidorder {

namespace {

using Kind = CutLetter::Kind;

bool holes_adjacent(const CutLetter& a, const CutLetter& b) {
  return a.is_hole() && b.is_hole() && std::abs(a.value - b.value) == 1;
}

}  // namespace

std::optional<std::string> check_sequence(int strands,
                                          const CutLetters& letters) {
  if (strands < 2) return "cutting sequences need at least 2 strands";
  const int last_hole = strands + 1;
  if (letters.size() < static_cast<std::size_t>(strands) + 2) {
    return "sequence too short";
  }
  if (!letters.front().is_hole(0)) return "does not start with _0";
  if (!letters.back().is_hole(last_hole)) {
    return "does not end with _" + std::to_string(last_hole);
  }
  std::vector<int> seen(static_cast<std::size_t>(last_hole) + 1, 0);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    const CutLetter& c = letters[p];
    if (c.is_hole()) {
      if (c.value < 0 || c.value > last_hole) {
        return "hole _" + std::to_string(c.value) + " out of range";
      }
      if (++seen[static_cast<std::size_t>(c.value)] > 1) {
        return "hole _" + std::to_string(c.value) + " occurs twice";
      }
    } else if (c.is_gap() && (c.value < 0 || c.value > strands)) {
      return "gap " + std::to_string(c.value) + " out of range";
    }
    if (p == 0) continue;
    const CutLetter& prev = letters[p - 1];
    if (prev.is_arrow() && c.is_arrow()) {
      return "two arrows adjacent at position " + std::to_string(p);
    }
    if (prev.is_number() && c.is_number() && !holes_adjacent(prev, c)) {
      return "numbers " + format_letter(prev) + " " + format_letter(c) +
             " adjacent at position " + std::to_string(p);
    }
  }
  for (int k = 0; k <= last_hole; ++k) {
    if (seen[static_cast<std::size_t>(k)] == 0) {
      return "hole _" + std::to_string(k) + " missing";
    }
  }
  return std::nullopt;
}

CuttingSequence::CuttingSequence(int strands, CutLetters letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (auto problem = check_sequence(strands_, letters_)) {
    throw InvalidSequence("invalid cutting sequence: " + *problem);
  }
}

CuttingSequence CuttingSequence::trivial(int strands) {
  if (strands < 2) {
    throw std::invalid_argument("trivial sequence needs at least 2 strands");
  }
  CutLetters letters;
  for (int k = 0; k <= strands + 1; ++k) letters.push_back(CutLetter::hole(k));
  return CuttingSequence(strands, std::move(letters));
}

std::size_t CuttingSequence::gap_count() const {
  std::size_t count = 0;
  for (const auto& c : letters_) count += c.is_gap() ? 1 : 0;
  return count;
}

std::string format_letter(const CutLetter& c) {
  switch (c.kind) {
    case Kind::hole:
      return "_" + std::to_string(c.value);
    case Kind::gap:
      return std::to_string(c.value);
    case Kind::up:
      return "^";
    case Kind::down:
      return "v";
  }
  return "?";
}

std::string format_sequence(const CutLetters& s) {
  std::string out;
  for (const auto& c : s) {
    if (!out.empty()) out += ' ';
    out += format_letter(c);
  }
  return out;
}

std::string format_sequence(const CuttingSequence& s) {
  return format_sequence(s.letters());
}

CutLetters parse_letters(std::string_view text) {
  CutLetters out;
  std::size_t pos = 0;
  auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    if (end == pos) break;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "^") {
      out.push_back(CutLetter::up());
      continue;
    }
    if (token == "v") {
      out.push_back(CutLetter::down());
      continue;
    }
    const bool hole = token.front() == '_';
    std::string_view digits = hole ? token.substr(1) : token;
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} ||
        ptr != digits.data() + digits.size() || value < 0) {
      throw ParseError("bad cutting-sequence token '" + std::string(token) +
                       "'");
    }
    out.push_back(hole ? CutLetter::hole(value) : CutLetter::gap(value));
  }
  return out;
}

CuttingSequence parse_sequence(std::string_view text,
                               std::optional<int> strands) {
  CutLetters letters = parse_letters(text);
  int n = 0;
  if (strands) {
    n = *strands;
  } else {
    int top = -1;
    for (const auto& c : letters) {
      if (c.is_hole()) top = std::max(top, c.value);
    }
    n = top - 1;
  }
  if (auto problem = check_sequence(n, letters)) {
    throw ParseError("invalid cutting sequence: " + *problem);
  }
  return CuttingSequence(n, std::move(letters));
}

// ---------------------------------------------------------------- reduction

std::optional<ReductionRule> match_rule(const CutLetter& a, const CutLetter& b,
                                        const CutLetter& c) {
  if (b.is_arrow()) {
    // hole h next to gap h or gap h-1
    auto absorbs = [](const CutLetter& h, const CutLetter& g) {
      return h.is_hole() && g.is_gap() &&
             (g.value == h.value || g.value == h.value - 1);
    };
    if (absorbs(a, c) || absorbs(c, a)) return ReductionRule::hole_absorbs_gap;
    if (a.is_gap() && c.is_gap() && a.value == c.value) {
      return ReductionRule::gap_arrow_gap;
    }
    if (holes_adjacent(a, c)) return ReductionRule::adjacent_holes;
    return std::nullopt;
  }
  if (b.is_gap() && a.is_arrow() && a.kind == c.kind) {
    return ReductionRule::arrow_gap_arrow;
  }
  return std::nullopt;
}

namespace {

// Replacement for a matched window (a, b, c).
void emit_rewrite(CutLetters& out, ReductionRule rule, const CutLetter& a,
                  const CutLetter& b, const CutLetter& c) {
  switch (rule) {
    case ReductionRule::hole_absorbs_gap:
      out.push_back(a.is_hole() ? a : c);
      return;
    case ReductionRule::arrow_gap_arrow:
      out.push_back(a);
      return;
    case ReductionRule::gap_arrow_gap:
      out.push_back(a);
      return;
    case ReductionRule::adjacent_holes:
      out.push_back(a);
      out.push_back(c);
      return;
  }
  (void)b;
}

}  // namespace

std::vector<Redex> find_redexes(const CuttingSequence& s) {
  std::vector<Redex> out;
  const auto& l = s.letters();
  for (std::size_t p = 0; p + 2 < l.size(); ++p) {
    if (auto rule = match_rule(l[p], l[p + 1], l[p + 2])) {
      out.push_back({p, *rule});
    }
  }
  return out;
}

CuttingSequence rewrite(const CuttingSequence& s, const Redex& r) {
  const auto& l = s.letters();
  if (r.position + 2 >= l.size()) {
    throw std::out_of_range("redex position past end of sequence");
  }
  auto rule = match_rule(l[r.position], l[r.position + 1], l[r.position + 2]);
  if (!rule || *rule != r.rule) {
    throw std::invalid_argument("redex does not match the sequence");
  }
  CutLetters out(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(r.position));
  emit_rewrite(out, r.rule, l[r.position], l[r.position + 1],
               l[r.position + 2]);
  out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(r.position) + 3,
             l.end());
  return CuttingSequence(s.strands(), std::move(out));
}

bool is_reduced(const CuttingSequence& s) {
  const auto& l = s.letters();
  for (std::size_t p = 0; p + 2 < l.size(); ++p) {
    if (match_rule(l[p], l[p + 1], l[p + 2])) return false;
  }
  return true;
}

CuttingSequence reduce(const CuttingSequence& s) {
  // Every rule rewrites a window of three letters, so after pushing a
  // letter only windows ending at the top of the stack can have become
  // reducible.
  CutLetters stack;
  stack.reserve(s.size());
  CutLetters replacement;
  for (const CutLetter& next : s.letters()) {
    stack.push_back(next);
    while (stack.size() >= 3) {
      const std::size_t top = stack.size();
      const CutLetter a = stack[top - 3];
      const CutLetter b = stack[top - 2];
      const CutLetter c = stack[top - 1];
      auto rule = match_rule(a, b, c);
      if (!rule) break;
      stack.resize(top - 3);
      replacement.clear();
      emit_rewrite(replacement, *rule, a, b, c);
      stack.insert(stack.end(), replacement.begin(), replacement.end());
    }
  }
  return CuttingSequence(s.strands(), std::move(stack));
}

// ------------------------------------------------------------------- action

CuttingSequence act_unreduced(const CuttingSequence& s, int i, int sign) {
  const int n = s.strands();
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("generator " + std::to_string(i) +
                            " out of range for " + std::to_string(n) +
                            " strands");
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (!is_reduced(s)) {
    throw std::invalid_argument("generator action needs a reduced sequence");
  }
  // The rules are written for sigma_i; sigma_i^-1 swaps the arrows.
  const CutLetter up = CutLetter::arrow(sign > 0 ? Arrow::up : Arrow::down);
  const CutLetter down = CutLetter::arrow(sign > 0 ? Arrow::down : Arrow::up);
  const CutLetter lo = CutLetter::gap(i - 1);
  const CutLetter mid = CutLetter::gap(i);
  const CutLetter hi = CutLetter::gap(i + 1);

  const auto& l = s.letters();
  CutLetters out;
  out.reserve(l.size() + 8);
  for (std::size_t p = 0; p < l.size(); ++p) {
    const CutLetter& c = l[p];
    if (c.is_hole(i)) {
      // _i becomes _{i+1}; context on each side decides an insertion
      const CutLetter& left = l.at(p - 1);
      if (left == down) {
        out.insert(out.end(), {lo, up});
      } else if (left.is_hole(i - 1)) {
        out.push_back(up);
      }
      out.push_back(CutLetter::hole(i + 1));
      const CutLetter& right = l.at(p + 1);
      if (right == down) {
        out.insert(out.end(), {up, lo});
      } else if (right.is_hole(i - 1)) {
        out.push_back(up);
      }
    } else if (c.is_hole(i + 1)) {
      const CutLetter& left = l.at(p - 1);
      if (left == up) {
        out.insert(out.end(), {hi, down});
      } else if (left.is_hole(i + 2)) {
        out.push_back(down);
      }
      out.push_back(CutLetter::hole(i));
      const CutLetter& right = l.at(p + 1);
      if (right == up) {
        out.insert(out.end(), {down, hi});
      } else if (right.is_hole(i + 2)) {
        out.push_back(down);
      }
    } else if (c.is_gap(i)) {
      // reduced, so the neighbours are opposite arrows
      if (l.at(p - 1) == down) {
        out.insert(out.end(), {lo, up, mid, down, hi});
      } else {
        out.insert(out.end(), {hi, down, mid, up, lo});
      }
    } else {
      out.push_back(c);
    }
  }
  if (auto problem = check_sequence(n, out)) {
    throw InternalError("generator action produced an invalid sequence (" +
                        *problem + ") from " + format_sequence(s));
  }
  return CuttingSequence(n, std::move(out));
}

CuttingSequence apply_generator(const CuttingSequence& s, int i, int sign) {
  return reduce(act_unreduced(s, i, sign));
}

CuttingSequence apply_word(const CuttingSequence& s, const BraidWord& w) {
  if (w.strands() != s.strands()) {
    throw std::invalid_argument("strand mismatch between word and sequence");
  }
  CuttingSequence out = s;
  for (const auto& g : w.letters()) out = apply_generator(out, g.index, g.sign);
  return out;
}

CuttingSequence word_to_cutseq(const BraidWord& w) {
  return apply_word(CuttingSequence::trivial(w.strands()), w);
}

// --------------------------------------------------------------------- sign

SignResult sign_of(const CuttingSequence& s) {
  if (!is_reduced(s)) {
    throw std::invalid_argument("sign_of needs a reduced sequence");
  }
  const auto& l = s.letters();
  std::size_t k = 0;
  while (k + 1 < l.size() && l[k + 1].is_hole(static_cast<int>(k) + 1)) ++k;
  if (k + 1 == l.size()) return {};
  const CutLetter& next = l[k + 1];
  if (!next.is_arrow()) {
    throw InternalError("hole run not followed by an arrow in " +
                        format_sequence(s));
  }
  return {next.kind == Kind::up ? SignResult::Kind::positive
                                : SignResult::Kind::negative,
          static_cast<int>(k) + 1};
}

std::string format_sign(const SignResult& r) {
  switch (r.kind) {
    case SignResult::Kind::trivial:
      return "trivial";
    case SignResult::Kind::positive:
      return "positive i=" + std::to_string(r.index);
    case SignResult::Kind::negative:
      return "negative i=" + std::to_string(r.index);
  }
  return "?";
}

}  // namespace braidorder
