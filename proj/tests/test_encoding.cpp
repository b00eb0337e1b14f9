#include <gtest/gtest.h>

#include "pmatch/encoding.hpp"
#include "pmatch/oracle.hpp"
#include "support.hpp"

using namespace pmatch;
using pmatch::testing::bytes_alphabet;

namespace {

std::vector<Code> codes_of(std::string_view s, std::string_view statics = "") {
  return encode(PString::from_bytes(bytes_alphabet(statics, {s}), s)).codes;
}

// Independent two-loop scan: distance back to the previous equal symbol.
std::vector<OptPosition> naive_prev(std::span<const Symbol> s) {
  std::vector<OptPosition> out(s.size(), kNoPosition);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (s[j] == s[i]) out[i] = static_cast<OptPosition>(j + 1);
    }
  }
  return out;
}

}  // namespace

TEST(Encode, WorkedPattern) { EXPECT_EQ(codes_of("deeeef"), (std::vector<Code>{0, 0, 1, 1, 1, 0})); }

TEST(Encode, DistinctSymbolsAreAllZero) { EXPECT_EQ(codes_of("abcdef"), std::vector<Code>(6, 0)); }

TEST(Encode, StaticSymbolsKeepTheirCode) {
  const auto enc = encode(PString::from_bytes(bytes_alphabet("a", {"aba"}), "aba"));
  EXPECT_EQ(enc.static_base, 4U);
  EXPECT_EQ(enc.codes, (std::vector<Code>{4, 0, 4}));
  EXPECT_TRUE(enc.is_static_code(enc.codes[0]));
  EXPECT_FALSE(enc.is_static_code(enc.codes[1]));
}

TEST(Encode, StaticRanksAreDistinct) {
  const auto enc = encode(PString::from_bytes(bytes_alphabet("XY", {"XaY"}), "XaY"));
  EXPECT_EQ(enc.codes, (std::vector<Code>{4, 0, 5}));
}

TEST(Encode, RejectsSmallStaticBase) {
  const auto a = bytes_alphabet("", {"abc"});
  EXPECT_THROW(encode(PString::from_bytes(a, "abc"), 2), InputError);
}

TEST(Encode, EmptyString) { EXPECT_TRUE(codes_of("").empty()); }

TEST(Encode, ExactPMatchIffEncodingsEqual) {
  experiment::Generator gen(11);
  for (int it = 0; it < 3000; ++it) {
    const auto pair = pmatch::testing::random_pair(gen, 8, 8, 3, it % 3 == 0 ? 1 : 0);
    const PString x = pair.text.substr(1, pair.pattern.size());
    const bool same = encode(x) == encode(pair.pattern);
    EXPECT_EQ(same, oracle::p_match(*pair.alphabet, x.symbols(), pair.pattern.symbols()))
        << pair.text_bytes << " / " << pair.pattern_bytes;
  }
}

TEST(Encode, DistancesMatchNaiveScan) {
  experiment::Generator gen(12);
  for (int it = 0; it < 500; ++it) {
    const auto pair = pmatch::testing::random_pair(gen, 40, 1, 4, 0);
    const auto enc = encode(pair.text);
    const auto prev = naive_prev(pair.text.symbols());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const Code expected = prev[i] == kNoPosition ? 0 : static_cast<Code>(static_cast<OptPosition>(i + 1) - prev[i]);
      ASSERT_EQ(enc.codes[i], expected);
    }
  }
}

TEST(OccurrenceIndex, Aab) {
  const auto a = bytes_alphabet("", {"aab"});
  const auto occ = occurrence_index(PString::from_bytes(a, "aab"));
  EXPECT_EQ(occ.prevs, (std::vector<OptPosition>{-1, 1, -1}));
  EXPECT_EQ(occ.nexts, (std::vector<OptPosition>{2, -1, -1}));
}

TEST(OccurrenceIndex, SingleAndDistinct) {
  const auto a = bytes_alphabet("", {"abcd"});
  EXPECT_EQ(occurrence_index(PString::from_bytes(a, "a")).prevs, (std::vector<OptPosition>{-1}));
  const auto occ = occurrence_index(PString::from_bytes(a, "abcd"));
  EXPECT_EQ(occ.prevs, std::vector<OptPosition>(4, -1));
  EXPECT_EQ(occ.nexts, std::vector<OptPosition>(4, -1));
}

TEST(OccurrenceIndex, PrevNextAreInverse) {
  experiment::Generator gen(13);
  for (int it = 0; it < 300; ++it) {
    const auto pair = pmatch::testing::random_pair(gen, 50, 1, 5, 2);
    const auto occ = occurrence_index(pair.text);
    EXPECT_EQ(occ.prevs, naive_prev(pair.text.symbols()));
    for (Position i = 1; i <= occ.size(); ++i) {
      if (occ.next(i) != kNoPosition) {
        EXPECT_GT(occ.next(i), static_cast<OptPosition>(i));
        EXPECT_EQ(occ.prev(static_cast<Position>(occ.next(i))), static_cast<OptPosition>(i));
      }
    }
  }
}

TEST(Discard, CaseAOnAabAndCdd) {
  const auto a = bytes_alphabet("", {"aab", "cdd"});
  const PString t = PString::from_bytes(a, "aab");
  const PString p = PString::from_bytes(a, "cdd");
  const auto r = discard_position(encode(t), encode(p), 2, occurrence_index(t), occurrence_index(p));
  EXPECT_EQ(r.text.codes, (std::vector<Code>{0, 0, 0}));
  EXPECT_EQ(r.pattern.codes, (std::vector<Code>{0, 0, 0}));
}

TEST(Discard, FirstOccurrenceMakesNextFirst) {
  const auto a = bytes_alphabet("", {"ccc"});
  const PString p = PString::from_bytes(a, "ccc");
  EncodedString enc = encode(p);
  UndoLog log;
  discard_in_place(enc, 1, occurrence_index(p), log);
  EXPECT_EQ(enc.codes, (std::vector<Code>{0, 0, 1}));
}

TEST(Discard, MiddleOccurrenceRelinks) {
  const auto a = bytes_alphabet("", {"abaca"});
  const PString s = PString::from_bytes(a, "abaca");
  EncodedString enc = encode(s);
  UndoLog log;
  discard_in_place(enc, 3, occurrence_index(s), log);
  EXPECT_EQ(enc.codes, (std::vector<Code>{0, 0, 0, 0, 4}));
}

TEST(Discard, LoneSymbolChangesOnlyItself) {
  const auto a = bytes_alphabet("", {"aabaa"});
  const PString s = PString::from_bytes(a, "aabaa");
  EncodedString enc = encode(s);
  const EncodedString before = enc;
  UndoLog log;
  discard_in_place(enc, 3, occurrence_index(s), log);
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (i != 2) {
      EXPECT_EQ(enc.codes[i], before.codes[i]);
    }
  }
  EXPECT_EQ(log.size(), 1U);
}

TEST(Discard, StaticDoesNotRelink) {
  const auto a = bytes_alphabet("X", {"XaX"});
  const PString s = PString::from_bytes(a, "XaX");
  EncodedString enc = encode(s);
  UndoLog log;
  discard_in_place(enc, 1, occurrence_index(s), log);
  EXPECT_EQ(enc.codes, (std::vector<Code>{0, 0, 4}));
}

TEST(Discard, RevertRestoresExactly) {
  experiment::Generator gen(14);
  for (int it = 0; it < 300; ++it) {
    const auto pair = pmatch::testing::random_pair(gen, 30, 1, 4, 1);
    const auto occ = occurrence_index(pair.text);
    EncodedString enc = encode(pair.text);
    const EncodedString before = enc;
    UndoLog log;
    discard_in_place(enc, 1 + gen.below(enc.size()), occ, log);
    revert(enc, log);
    ASSERT_EQ(enc, before);
  }
}

TEST(Discard, OutOfRangeThrows) {
  const auto a = bytes_alphabet("", {"ab"});
  const PString s = PString::from_bytes(a, "ab");
  EncodedString enc = encode(s);
  UndoLog log;
  EXPECT_THROW(discard_in_place(enc, 3, occurrence_index(s), log), InputError);
  EXPECT_THROW(discard_in_place(enc, 0, occurrence_index(s), log), InputError);
}
