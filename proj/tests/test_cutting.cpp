#include "doctest.h"

#include "braidorder/cutting.hpp"
#include "braidorder/geometry.hpp"
#include "braidorder/oracle.hpp"
#include "support/random_words.hpp"
#include "support/sequences.hpp"

using namespace braidorder;
using testing::seq;

namespace {

const char* const kSigma1 = "_0 ^ _2 _1 v _3 _4";
const char* const kSigma1InvSigma2 = "_0 ^ 1 v _3 v _1 v 3 ^ _2 ^ _4";

}  // namespace

TEST_CASE("trivial sequences") {
  CHECK(format_sequence(CuttingSequence::trivial(3)) == "_0 _1 _2 _3 _4");
  CHECK(format_sequence(CuttingSequence::trivial(2)) == "_0 _1 _2 _3");
  CHECK(format_sequence(CuttingSequence::trivial(4)) == "_0 _1 _2 _3 _4 _5");
  CHECK(CuttingSequence::trivial(3).is_trivial());
  CHECK_THROWS(CuttingSequence::trivial(1));
}

TEST_CASE("ASCII format parses and prints back") {
  const CuttingSequence s = seq(kSigma1InvSigma2);
  CHECK(s.strands() == 3);
  CHECK(s.gap_count() == 2);
  CHECK(format_sequence(s) == kSigma1InvSigma2);
  CHECK(parse_sequence(kSigma1, 3) == seq(kSigma1));
  CHECK_THROWS_AS(parse_sequence(kSigma1, 4), ParseError);
  CHECK_THROWS_AS(parse_sequence("_0 ^ x _3"), ParseError);
}

TEST_CASE("sequence conditions are enforced") {
  // must start at _0 and end at _{n+1}
  CHECK(check_sequence(2, parse_letters("_1 _0 _2 _3")).has_value());
  CHECK(check_sequence(2, parse_letters("_0 _1 _3 _2")).has_value());
  // every hole exactly once
  CHECK(check_sequence(2, parse_letters("_0 _1 ^ _1 _2 _3")).has_value());
  CHECK(check_sequence(2, parse_letters("_0 _2 _3")).has_value());
  // alternation, with hole adjacency only between neighbours
  CHECK(check_sequence(2, parse_letters("_0 ^ ^ _1 _2 _3")).has_value());
  CHECK(check_sequence(2, parse_letters("_0 _2 _1 _3")).has_value());
  CHECK(check_sequence(2, parse_letters("_0 1 _1 _2 _3")).has_value());
  CHECK_FALSE(check_sequence(2, parse_letters("_0 _1 _2 _3")).has_value());
  CHECK_FALSE(check_sequence(3, parse_letters(kSigma1)).has_value());
  CHECK_THROWS_AS(CuttingSequence(2, parse_letters("_0 _2 _1 _3")), InvalidSequence);
}

TEST_CASE("reduction rules") {
  using R = ReductionRule;
  auto rule = [](const char* text) {
    const CutLetters l = parse_letters(text);
    return match_rule(l[0], l[1], l[2]);
  };
  CHECK(rule("_1 ^ 1") == R::hole_absorbs_gap);
  CHECK(rule("_1 v 0") == R::hole_absorbs_gap);
  CHECK(rule("1 ^ _1") == R::hole_absorbs_gap);
  CHECK(rule("0 v _1") == R::hole_absorbs_gap);
  CHECK(rule("v 2 v") == R::arrow_gap_arrow);
  CHECK(rule("^ 2 ^") == R::arrow_gap_arrow);
  CHECK(rule("2 v 2") == R::gap_arrow_gap);
  CHECK(rule("_1 ^ _2") == R::adjacent_holes);
  CHECK(rule("_2 v _1") == R::adjacent_holes);
  CHECK_FALSE(rule("_1 ^ 2").has_value());
  CHECK_FALSE(rule("^ 2 v").has_value());
  CHECK_FALSE(rule("1 ^ 2").has_value());
  CHECK_FALSE(rule("_1 ^ _3").has_value());
}

TEST_CASE("reduce") {
  CHECK(reduce(seq("_0 ^ 0 ^ _1 _2 _3 _4")) == CuttingSequence::trivial(3));
  CHECK(reduce(seq(kSigma1)) == seq(kSigma1));
  CHECK(is_reduced(seq(kSigma1)));
  CHECK(is_reduced(seq(kSigma1InvSigma2)));
  CHECK_FALSE(is_reduced(seq("_0 ^ 0 ^ _1 _2 _3 _4")));
  CHECK(reduce(seq("_0 ^ 2 v 2 ^ _2 _1 v _3 _4")) == seq(kSigma1));
}

TEST_CASE("generator action reproduces the coded examples") {
  const CuttingSequence s1 = apply_generator(CuttingSequence::trivial(3), 1, 1);
  CHECK(format_sequence(s1) == kSigma1);
  CHECK(format_sequence(apply_generator(s1, 2, -1)) == kSigma1InvSigma2);
  CHECK(format_sequence(word_to_cutseq(parse_word("1", 3))) == kSigma1);
  CHECK(format_sequence(word_to_cutseq(parse_word("1 -2", 3))) == kSigma1InvSigma2);
  CHECK(word_to_cutseq(BraidWord(4)) == CuttingSequence::trivial(4));
  CHECK_THROWS(apply_generator(s1, 3, 1));
  CHECK_THROWS(apply_generator(s1, 0, 1));
  CHECK_THROWS(act_unreduced(seq("_0 ^ 0 ^ _1 _2 _3 _4"), 1, 1));
}

TEST_CASE("generator then its inverse restores the sequence") {
  testing::WordSource src;
  for (int t = 0; t < 300; ++t) {
    const int n = src.strands();
    const CuttingSequence s = word_to_cutseq(src.word(n));
    const int i = src.uniform(1, n - 1);
    const int e = src.coin() ? 1 : -1;
    CHECK(apply_generator(apply_generator(s, i, e), i, -e) == s);
  }
}

TEST_CASE("reduction is confluent") {
  testing::WordSource src;
  for (int t = 0; t < 200; ++t) {
    const int n = src.strands();
    const CuttingSequence base = word_to_cutseq(src.word(n, 8));
    CuttingSequence s = testing::pad(base, src, src.uniform(1, 4));
    if (src.coin()) s = act_unreduced(reduce(s), src.uniform(1, n - 1), src.coin() ? 1 : -1);
    const CuttingSequence expect = reduce(s);
    CHECK(is_reduced(expect));
    for (int r = 0; r < 3; ++r) CHECK(testing::reduce_randomly(s, src) == expect);
  }
}

TEST_CASE("sign_of reads the first arrow after the hole run") {
  using K = SignResult::Kind;
  CHECK(sign_of(CuttingSequence::trivial(3)) == SignResult{K::trivial, 0});
  CHECK(sign_of(seq(kSigma1)) == SignResult{K::positive, 1});
  CHECK(sign_of(word_to_cutseq(parse_word("-2 -1 2 2 2 -1 2 -1", 3))) ==
        SignResult{K::negative, 1});
  CHECK(sign_of(word_to_cutseq(parse_word("2", 3))) == SignResult{K::positive, 2});
  CHECK(sign_of(word_to_cutseq(parse_word("-3", 4))) == SignResult{K::negative, 3});
  CHECK(format_sign(SignResult{K::positive, 1}) == "positive i=1");
  CHECK(format_sign(SignResult{K::negative, 2}) == "negative i=2");
  CHECK(format_sign(SignResult{}) == "trivial");
  CHECK_THROWS(sign_of(seq("_0 ^ 0 ^ _1 _2 _3 _4")));
}

TEST_CASE("sequence properties over random words") {
  testing::WordSource src;
  int top_index = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = src.strands();
    const BraidWord w = src.word(n);
    const CuttingSequence s = word_to_cutseq(w);
    CHECK(is_reduced(s));
    CHECK(validate(s).valid());
    CHECK(word_to_cutseq(src.perturb(w)) == s);
    const SignResult r = sign_of(s);
    CHECK((r.kind == SignResult::Kind::trivial) == braid_equal(w, BraidWord(n)));
    if (r.kind != SignResult::Kind::trivial) {
      CHECK(r.index >= 1);
      CHECK(r.index <= n - 1);
      top_index = std::max(top_index, r.index);
    }
  }
  CHECK(top_index >= 2);
}
