#include "braidorder/geometry.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace braidorder {

HalfGrid HalfGrid::of(const CutLetter& c) {
  if (c.is_hole()) return from_doubled(2 * c.value);
  if (c.is_gap()) return from_doubled(2 * c.value + 1);
  throw std::invalid_argument("arrows have no position on the real axis");
}

std::string format_half(HalfGrid h) {
  const int d = h.doubled();
  if (d % 2 == 0) return std::to_string(d / 2);
  return std::to_string(d / 2) + ".5";
}

DirectedString directed_string(const CuttingSequence& s, std::size_t pos,
                               Arrow first) {
  const auto& l = s.letters();
  if (pos >= l.size() || !l[pos].is_gap()) {
    throw std::invalid_argument("directed strings start at a gap letter");
  }
  const CutLetter want = CutLetter::arrow(first);
  const bool fwd = l[pos + 1] == want;
  const bool bwd = l[pos - 1] == want;
  if (fwd == bwd) {
    throw std::invalid_argument(
        "gap letter not flanked by opposite arrows; sequence not reduced");
  }
  DirectedString d;
  d.anchor = pos;
  d.forward = fwd;
  d.values.push_back(HalfGrid::of(l[pos]));
  std::size_t idx = pos;
  while (true) {
    idx = fwd ? idx + 1 : idx - 1;
    d.arrows.push_back(l[idx].arrow_dir());
    idx = fwd ? idx + 1 : idx - 1;
    d.values.push_back(HalfGrid::of(l[idx]));
    if (l[idx].is_hole()) break;
  }
  return d;
}

DirectedString up_string(const CuttingSequence& s, std::size_t pos) {
  return directed_string(s, pos, Arrow::up);
}

DirectedString down_string(const CuttingSequence& s, std::size_t pos) {
  return directed_string(s, pos, Arrow::down);
}

int cyclic_step_doubled(HalfGrid from, HalfGrid to, Arrow side, int strands) {
  const int modulus = 2 * (strands + 1);
  const int diff = side == Arrow::up ? to.doubled() - from.doubled()
                                     : from.doubled() - to.doubled();
  return ((diff % modulus) + modulus) % modulus;
}

CyclicKey cyclic_key(const DirectedString& d, int strands) {
  CyclicKey key;
  key.entries.reserve(d.arrows.size());
  for (std::size_t j = 0; j < d.arrows.size(); ++j) {
    const int step =
        cyclic_step_doubled(d.values[j], d.values[j + 1], d.arrows[j], strands);
    if (step == 0) {
      throw AmbiguousOrder("arc step " + format_half(d.values[j]) + " -> " +
                           format_half(d.values[j + 1]) +
                           " is a multiple of n+1");
    }
    key.entries.push_back(HalfGrid::from_doubled(step));
  }
  return key;
}

namespace {

struct OccurrenceKeys {
  std::size_t position;
  CyclicKey up;
  CyclicKey down;
};

OccurrenceKeys keys_at(const CuttingSequence& s, std::size_t pos) {
  return {pos, cyclic_key(up_string(s, pos), s.strands()),
          cyclic_key(down_string(s, pos), s.strands())};
}

// A larger up-key means further left; on equal up-keys a larger down-key
// means further right.
bool left_of(const OccurrenceKeys& a, const OccurrenceKeys& b) {
  if (a.up != b.up) return a.up > b.up;
  return a.down < b.down;
}

}  // namespace

bool occurs_left_of(const CuttingSequence& s, std::size_t p, std::size_t q) {
  if (!s[p].is_gap() || !s[q].is_gap() || s[p].value != s[q].value) {
    throw std::invalid_argument("occurrences must hold the same gap letter");
  }
  if (p == q) return false;
  const auto a = keys_at(s, p);
  const auto b = keys_at(s, q);
  if (a.up == b.up && a.down == b.down) {
    throw AmbiguousOrder("gap occurrences at " + std::to_string(p) + " and " +
                         std::to_string(q) + " have identical strings");
  }
  return left_of(a, b);
}

std::vector<std::size_t> occurrence_order(const CuttingSequence& s, int k) {
  std::vector<OccurrenceKeys> occ;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p].is_gap(k)) occ.push_back(keys_at(s, p));
  }
  std::sort(occ.begin(), occ.end(), left_of);
  for (std::size_t j = 1; j < occ.size(); ++j) {
    if (occ[j - 1].up == occ[j].up && occ[j - 1].down == occ[j].down) {
      throw AmbiguousOrder(
          "gap " + std::to_string(k) + " occurrences at " +
          std::to_string(occ[j - 1].position) + " and " +
          std::to_string(occ[j].position) + " have identical strings");
    }
  }
  std::vector<std::size_t> out;
  out.reserve(occ.size());
  for (const auto& o : occ) out.push_back(o.position);
  return out;
}

std::vector<int> real_ranks(const CuttingSequence& s) {
  std::vector<int> ranks(s.size(), 0);
  std::map<int, int> counts;
  for (const auto& c : s.letters()) {
    if (c.is_gap()) ++counts[c.value];
  }
  for (const auto& [k, count] : counts) {
    if (count < 2) continue;
    const auto order = occurrence_order(s, k);
    for (std::size_t r = 0; r < order.size(); ++r) {
      ranks[order[r]] = static_cast<int>(r);
    }
  }
  return ranks;
}

RealPoint real_point(const CutLetter& c, int rank) {
  if (c.is_hole()) return {c.value, 0};
  if (c.is_gap()) return {c.value, rank + 1};
  throw std::invalid_argument("arrows have no position on the real axis");
}

Validation validate(const CuttingSequence& s) {
  using Reason = Validation::Reason;
  const auto& l = s.letters();

  std::map<int, int> gap_counts;
  for (const auto& c : l) {
    if (c.is_gap()) ++gap_counts[c.value];
  }
  for (std::size_t p = 0; p + 1 < l.size(); ++p) {
    if (l[p].is_hole() && l[p + 1].is_hole()) {
      const int lo = std::min(l[p].value, l[p + 1].value);
      if (gap_counts.contains(lo)) {
        return {Reason::hole_segment_crossed,
                "segment _" + std::to_string(lo) + " _" +
                    std::to_string(lo + 1) + " is crossed by gap letter " +
                    std::to_string(lo)};
      }
    }
  }

  for (std::size_t p = 0; p < l.size(); ++p) {
    if (!l[p].is_gap() || gap_counts[l[p].value] < 2) continue;
    if (l[p - 1] == l[p + 1]) {
      return {Reason::unorderable,
              "repeated gap letter " + std::to_string(l[p].value) +
                  " at position " + std::to_string(p) +
                  " is not flanked by opposite arrows"};
    }
  }

  std::vector<int> ranks;
  try {
    ranks = real_ranks(s);
  } catch (const AmbiguousOrder& e) {
    return {Reason::unorderable, e.what()};
  }

  struct Arc {
    RealPoint lo;
    RealPoint hi;
    std::size_t arrow_pos;
  };
  std::vector<Arc> sides[2];
  for (std::size_t p = 1; p + 1 < l.size(); ++p) {
    if (!l[p].is_arrow()) continue;
    RealPoint a = real_point(l[p - 1], ranks[p - 1]);
    RealPoint b = real_point(l[p + 1], ranks[p + 1]);
    if (b < a) std::swap(a, b);
    sides[l[p].arrow_dir() == Arrow::up ? 0 : 1].push_back({a, b, p});
  }
  for (auto& arcs : sides) {
    // laminar check: outer arcs first among equal left ends
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
      if (x.lo != y.lo) return x.lo < y.lo;
      return x.hi > y.hi;
    });
    std::vector<const Arc*> open;
    for (const Arc& arc : arcs) {
      while (!open.empty() && open.back()->hi <= arc.lo) open.pop_back();
      if (!open.empty() && open.back()->hi < arc.hi) {
        return {Reason::arcs_cross,
                "arcs at positions " + std::to_string(open.back()->arrow_pos) +
                    " and " + std::to_string(arc.arrow_pos) + " cross"};
      }
      open.push_back(&arc);
    }
  }
  return {};
}

std::string_view reason_name(Validation::Reason r) {
  switch (r) {
    case Validation::Reason::none:
      return "none";
    case Validation::Reason::hole_segment_crossed:
      return "hole_segment_crossed";
    case Validation::Reason::arcs_cross:
      return "arcs_cross";
    case Validation::Reason::unorderable:
      return "unorderable";
  }
  return "unknown";
}

}  // namespace braidorder
