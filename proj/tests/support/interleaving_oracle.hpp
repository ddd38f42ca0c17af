#pragma once

// Independent check of gap-occurrence ranks: try every relative order of
// the occurrences of each gap letter, realise all arcs as semicircles and
// keep the orders where no two arcs on the same side cross and no gap
// letter i coexists with a _i _{i+1} segment. Only relative order
// matters, so points are (interval, rank) pairs.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidorder/cutting.hpp"

namespace braidorder::testing {

struct Interleavings {
  std::size_t accepted = 0;
  std::vector<int> ranks;  // last accepted assignment, per letter
  std::size_t explored = 0;
};

namespace detail {

using Point = std::pair<int, int>;  // (integer part, rank + 1 or 0 for holes)

struct Arc {
  std::size_t from;
  std::size_t to;
  int side;  // 0 upper, 1 lower
};

inline bool segment_crossed(const CuttingSequence& s) {
  const auto& l = s.letters();
  for (std::size_t p = 0; p + 1 < l.size(); ++p) {
    if (l[p].is_hole() && l[p + 1].is_hole()) {
      const int lo = std::min(l[p].value, l[p + 1].value);
      for (const auto& c : l) {
        if (c.is_gap(lo)) return true;
      }
    }
  }
  return false;
}

inline std::vector<Arc> arcs_of(const CuttingSequence& s) {
  std::vector<Arc> arcs;
  for (std::size_t p = 1; p + 1 < s.size(); ++p) {
    if (s[p].is_arrow()) {
      arcs.push_back({p - 1, p + 1, s[p].arrow_dir() == Arrow::up ? 0 : 1});
    }
  }
  return arcs;
}

inline Point point(const CuttingSequence& s, const std::vector<int>& ranks,
                   std::size_t p) {
  return s[p].is_hole() ? Point{s[p].value, 0} : Point{s[p].value, ranks[p] + 1};
}

inline bool cross(const CuttingSequence& s, const std::vector<int>& ranks,
                  const Arc& x, const Arc& y) {
  if (x.side != y.side) return false;
  auto span = [&](const Arc& arc) {
    Point a = point(s, ranks, arc.from);
    Point b = point(s, ranks, arc.to);
    if (b < a) std::swap(a, b);
    return std::pair{a, b};
  };
  const auto [a, b] = span(x);
  const auto [c, d] = span(y);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool accepts(const CuttingSequence& s, const std::vector<int>& ranks) {
  if (segment_crossed(s)) return false;
  const auto arcs = arcs_of(s);
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      if (cross(s, ranks, arcs[x], arcs[y])) return false;
    }
  }
  return true;
}

}  // namespace detail

inline std::map<int, std::vector<std::size_t>> gap_occurrences(
    const CuttingSequence& s) {
  std::map<int, std::vector<std::size_t>> occ;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p].is_gap()) occ[s[p].value].push_back(p);
  }
  return occ;
}

/// Joint search over the orders of all gap letters. Occurrences receive
/// ranks one at a time in sequence order, and each arc is checked against
/// the earlier arcs as soon as both of its endpoints are placed; this
/// prunes without skipping any complete assignment. Stops after two
/// acceptances; empty when more than `limit` partial assignments would be
/// visited.
inline std::optional<Interleavings> all_interleavings(const CuttingSequence& s,
                                                      std::size_t limit) {
  Interleavings out;
  if (detail::segment_crossed(s)) return out;
  const auto occ = gap_occurrences(s);
  std::vector<std::size_t> vars;
  std::vector<std::size_t> group_size(s.size(), 0);
  std::vector<int> group_key(s.size(), -1);
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p].is_gap()) {
      vars.push_back(p);
      group_size[p] = occ.at(s[p].value).size();
      group_key[p] = s[p].value;
    }
  }
  // ready[v]: arcs complete once vars[v - 1] is placed (v = 0: hole arcs)
  std::vector<std::vector<detail::Arc>> ready(vars.size() + 1);
  std::vector<std::size_t> var_of(s.size(), 0);
  for (std::size_t v = 0; v < vars.size(); ++v) var_of[vars[v]] = v + 1;
  for (const auto& arc : detail::arcs_of(s)) {
    ready[std::max(var_of[arc.from], var_of[arc.to])].push_back(arc);
  }
  std::vector<detail::Arc> placed;
  std::vector<int> ranks(s.size(), 0);
  std::map<int, std::vector<bool>> used;
  for (const auto& [k, v] : occ) used[k].assign(v.size(), false);

  auto fits = [&](const std::vector<detail::Arc>& fresh) {
    for (std::size_t x = 0; x < fresh.size(); ++x) {
      for (const auto& y : placed) {
        if (detail::cross(s, ranks, fresh[x], y)) return false;
      }
      for (std::size_t y = 0; y < x; ++y) {
        if (detail::cross(s, ranks, fresh[x], fresh[y])) return false;
      }
    }
    return true;
  };
  if (!fits(ready[0])) return out;
  placed = ready[0];

  bool aborted = false;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (aborted || out.accepted > 1) return;
    if (++out.explored > limit) {
      aborted = true;
      return;
    }
    if (v == vars.size()) {
      ++out.accepted;
      out.ranks = ranks;
      return;
    }
    const std::size_t p = vars[v];
    auto& taken = used[group_key[p]];
    for (std::size_t r = 0; r < group_size[p]; ++r) {
      if (taken[r]) continue;
      taken[r] = true;
      ranks[p] = static_cast<int>(r);
      const auto& fresh = ready[v + 1];
      if (fits(fresh)) {
        placed.insert(placed.end(), fresh.begin(), fresh.end());
        rec(v + 1);
        placed.resize(placed.size() - fresh.size());
      }
      taken[r] = false;
      if (aborted || out.accepted > 1) return;
    }
  };
  rec(0);
  if (aborted) return std::nullopt;
  return out;
}

/// Search over the orders of gap letter k alone, all other letters keeping
/// the ranks in `others`.
inline Interleavings interleavings_of(const CuttingSequence& s, int k,
                                      std::vector<int> others) {
  const auto occ = gap_occurrences(s);
  Interleavings out;
  const auto it = occ.find(k);
  if (it == occ.end()) return out;
  const auto& positions = it->second;
  std::vector<int> perm(positions.size());
  for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = static_cast<int>(r);
  do {
    for (std::size_t r = 0; r < perm.size(); ++r) others[positions[r]] = perm[r];
    ++out.explored;
    if (detail::accepts(s, others)) {
      ++out.accepted;
      out.ranks = others;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace braidorder::testing
