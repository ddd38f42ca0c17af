#include "braidorder/order.hpp"

#include <utility>
#include <vector>

#include "braidorder/geometry.hpp"

namespace braidorder {

std::strong_ordering compare(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("compare: strand mismatch");
  }
  const SignResult r = sign(free_reduce(a * b.inverse()));
  switch (r.kind) {
    case SignResult::Kind::positive:
      return std::strong_ordering::greater;
    case SignResult::Kind::negative:
      return std::strong_ordering::less;
    case SignResult::Kind::trivial:
      break;
  }
  return std::strong_ordering::equal;
}

SignResult sign(const BraidWord& w) { return sign_of(word_to_cutseq(w)); }

namespace {

// Rays leaving a point of the real axis, ordered counterclockwise from
// east: east, upper arcs, west, lower arcs. Semicircles all leave
// vertically; within a half plane the cyclic step orders them by angle,
// and arcs to the same gap letter are ordered by where their endpoint
// falls among the points already visited by the shared prefix.
struct Ray {
  int sector = 0;  // 0 east, 1 upper arc, 2 west, 3 lower arc
  int step = 0;    // cyclic step for arcs
  int slot = 0;    // side-adjusted position among shared prefix points

  friend auto operator<=>(const Ray&, const Ray&) = default;
};

// Ranks of the prefix points visited so far, per gap letter.
class PrefixPoints {
 public:
  explicit PrefixPoints(int strands)
      : ranks_(static_cast<std::size_t>(strands) + 1) {}

  // Number of prefix points on gap k strictly left of `rank`.
  [[nodiscard]] int left_of(int k, int rank) const {
    int m = 0;
    for (int r : ranks_[static_cast<std::size_t>(k)]) m += r < rank ? 1 : 0;
    return m;
  }
  [[nodiscard]] bool contains(int k, int rank) const {
    for (int r : ranks_[static_cast<std::size_t>(k)]) {
      if (r == rank) return true;
    }
    return false;
  }
  void add(int k, int rank) { ranks_[static_cast<std::size_t>(k)].push_back(rank); }

 private:
  std::vector<std::vector<int>> ranks_;
};

struct Diagram {
  const CuttingSequence& seq;
  std::vector<int> ranks;
  PrefixPoints prefix;

  explicit Diagram(const CuttingSequence& s)
      : seq(s), ranks(real_ranks(s)), prefix(s.strands()) {}

  // Slot of a gap point: 2m + 1 when it is the prefix point with m prefix
  // points to its left, 2m when it is new with m prefix points to its left.
  [[nodiscard]] int slot(std::size_t idx) const {
    const CutLetter& c = seq[idx];
    if (!c.is_gap()) return 0;
    const int m = prefix.left_of(c.value, ranks[idx]);
    return prefix.contains(c.value, ranks[idx]) ? 2 * m + 1 : 2 * m;
  }

  [[nodiscard]] Ray ray(std::size_t p, std::size_t q) const {
    const CutLetter& via = seq[q];
    if (via.is_number()) return {via.value > seq[p].value ? 0 : 2, 0, 0};
    const std::size_t target = q > p ? q + 1 : q - 1;
    const Arrow side = via.arrow_dir();
    const int step = cyclic_step_doubled(HalfGrid::of(seq[p]),
                                         HalfGrid::of(seq[target]), side,
                                         seq.strands());
    // upper arcs: endpoint further left comes first; lower arcs: reverse
    const int s = slot(target);
    return side == Arrow::up ? Ray{1, step, s} : Ray{3, step, -s};
  }
};

// Counterclockwise position of the departure from point p, measured from
// the arrival direction (west for the starting point -1).
std::pair<int, Ray> departure_angle(const Diagram& x, std::size_t p) {
  const Ray arrival = p == 0 ? Ray{2, 0, 0} : x.ray(p, p - 1);
  const Ray departure = x.ray(p, p + 1);
  return {departure > arrival ? 0 : 1, departure};
}

}  // namespace

std::strong_ordering compare_sequences(const CuttingSequence& s,
                                       const CuttingSequence& t) {
  if (s.strands() != t.strands()) {
    throw std::invalid_argument("compare_sequences: strand mismatch");
  }
  if (!is_reduced(s) || !is_reduced(t)) {
    throw std::invalid_argument("compare_sequences needs reduced sequences");
  }
  if (s == t) return std::strong_ordering::equal;

  Diagram ds(s);
  Diagram dt(t);
  // Walk the shared prefix. It ends at the first differing letter, or at
  // a gap point that falls between the earlier prefix points differently
  // in the two diagrams.
  std::size_t d = 1;
  while (true) {
    if (d >= s.size() || d >= t.size()) {
      throw InternalError("distinct sequences with one a prefix of the other");
    }
    if (!(s[d] == t[d])) break;
    if (s[d].is_gap()) {
      const int k = s[d].value;
      if (ds.prefix.left_of(k, ds.ranks[d]) != dt.prefix.left_of(k, dt.ranks[d])) {
        break;
      }
      ds.prefix.add(k, ds.ranks[d]);
      dt.prefix.add(k, dt.ranks[d]);
    }
    ++d;
  }
  // p is the last shared point; the paths leave it through index p + 1.
  const std::size_t p = s[d - 1].is_number() ? d - 1 : d - 2;
  const auto as = departure_angle(ds, p);
  const auto at = departure_angle(dt, p);
  if (as == at) {
    throw InternalError("paths parted without a distinguishable direction");
  }
  // Turned further counterclockwise from the shared arrival, ie left of
  // the other path, means greater.
  return as > at ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace braidorder
