#include "doctest.h"

#include "braidorder/oracle.hpp"
#include "braidorder/order.hpp"
#include "support/random_words.hpp"

using namespace braidorder;

namespace {

BraidWord w(int n, const char* text) { return parse_word(text, n); }

bool positive(const BraidWord& x) {
  return sign(x).kind == SignResult::Kind::positive;
}

}  // namespace

TEST_CASE("the chain 1 < s1 s2^-1 < s1") {
  const BraidWord e(3);
  const BraidWord mid = w(3, "1 -2");
  const BraidWord top = w(3, "1");
  CHECK(compare(e, mid) == std::strong_ordering::less);
  CHECK(compare(mid, top) == std::strong_ordering::less);
  CHECK(compare(e, top) == std::strong_ordering::less);
  CHECK(compare(top, e) == std::strong_ordering::greater);
  CHECK(compare(mid, mid) == std::strong_ordering::equal);

  const auto seq = [](const BraidWord& x) { return word_to_cutseq(x); };
  CHECK(compare_sequences(seq(e), seq(mid)) == std::strong_ordering::less);
  CHECK(compare_sequences(seq(mid), seq(top)) == std::strong_ordering::less);
  CHECK(compare_sequences(seq(top), CuttingSequence::trivial(3)) ==
        std::strong_ordering::greater);
  CHECK(compare_sequences(seq(top), seq(top)) == std::strong_ordering::equal);
  CHECK_THROWS(compare(e, BraidWord(4)));
  CHECK_THROWS(compare_sequences(seq(e), CuttingSequence::trivial(4)));
}

TEST_CASE("sign") {
  using K = SignResult::Kind;
  CHECK(sign(w(4, "-2 -3 1 -2 1 3 2")) == SignResult{K::positive, 1});
  CHECK(sign(BraidWord(4)) == SignResult{K::trivial, 0});
  CHECK(sign(w(3, "-1 2")) == SignResult{K::negative, 1});
  CHECK(sign(w(3, "-1 2").inverse()) == SignResult{K::positive, 1});
}

TEST_CASE("a positive braid with a negative conjugate") {
  const BraidWord x = w(3, "1 1 -2 -2");
  const BraidWord g = w(3, "2 1 1 2");
  const BraidWord conj = g.inverse() * x * g;
  const BraidWord published = w(3, "-2 -1 2 2 2 -1 2 -1");
  CHECK(braid_equal(conj, published));
  CHECK_FALSE(braid_equal(g * x * g.inverse(), published));
  CHECK(positive(x));
  CHECK(compare(conj, BraidWord(3)) == std::strong_ordering::less);
  // left multiplication does not preserve the order
  CHECK(compare(x, BraidWord(3)) == std::strong_ordering::greater);
  CHECK(compare(g.inverse() * x, g.inverse()) == std::strong_ordering::less);
}

TEST_CASE("compare_sequences agrees with compare") {
  testing::WordSource src;
  for (int t = 0; t < 500; ++t) {
    const int n = src.strands();
    const BraidWord a = src.word(n);
    const BraidWord b = src.coin() ? src.word(n) : a * src.word(n, 3);
    CHECK(compare_sequences(word_to_cutseq(a), word_to_cutseq(b)) == compare(a, b));
  }
}

TEST_CASE("order laws on samples") {
  testing::WordSource src;
  for (int t = 0; t < 300; ++t) {
    const int n = src.strands();
    const BraidWord a = src.word(n, 10);
    const BraidWord b = src.word(n, 10);
    const BraidWord c = src.word(n, 10);
    const BraidWord g = src.word(n, 10);
    const auto ab = compare(a, b);
    CHECK(compare(b, a) == 0 <=> ab);
    CHECK(compare(a * g, b * g) == ab);
    CHECK((ab == 0) == braid_equal(a, b));
    if (ab < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
  }
}

TEST_CASE("inserting a positive generator increases the braid") {
  testing::WordSource src;
  for (int t = 0; t < 300; ++t) {
    const int n = src.strands();
    const BraidWord x = src.word(n);
    const Generator g{src.uniform(1, n - 1), 1};
    const auto p = static_cast<std::size_t>(src.uniform(0, static_cast<int>(x.size())));
    CHECK(compare(x.inserted(p, g), x) == std::strong_ordering::greater);
  }
}
