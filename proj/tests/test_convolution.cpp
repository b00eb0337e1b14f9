#include <gtest/gtest.h>

#include "pmatch/convolution.hpp"
#include "support.hpp"

using namespace pmatch;
using pmatch::testing::bytes_alphabet;

namespace {

struct Worked {
  std::shared_ptr<const Alphabet> alphabet = bytes_alphabet("", {"abcbbbaaaca", "deeeef"});
  PString t = PString::from_bytes(alphabet, "abcbbbaaaca");
  PString p = PString::from_bytes(alphabet, "deeeef");
};

std::vector<std::uint32_t> schoolbook(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST(Indicator, WorkedTextSide) {
  const Worked w;
  using E = std::vector<std::size_t>;
  EXPECT_EQ(build_indicator(w.t, 'a', Side::kText).exponents(), (E{0, 6, 7, 8, 10}));
  EXPECT_EQ(build_indicator(w.t, 'b', Side::kText).exponents(), (E{1, 3, 4, 5}));
  EXPECT_EQ(build_indicator(w.t, 'c', Side::kText).exponents(), (E{2, 9}));
  for (Symbol s : {'d', 'e', 'f'}) EXPECT_TRUE(build_indicator(w.t, s, Side::kText).is_zero());
}

TEST(Indicator, WorkedPatternSideIsReversed) {
  const Worked w;
  using E = std::vector<std::size_t>;
  for (Symbol s : {'a', 'b', 'c'}) EXPECT_TRUE(build_indicator(w.p, s, Side::kPattern).is_zero());
  EXPECT_EQ(build_indicator(w.p, 'd', Side::kPattern).exponents(), (E{5}));
  EXPECT_EQ(build_indicator(w.p, 'e', Side::kPattern).exponents(), (E{1, 2, 3, 4}));
  EXPECT_EQ(build_indicator(w.p, 'f', Side::kPattern).exponents(), (E{0}));
}

TEST(Indicator, UnknownSymbolThrows) {
  const Worked w;
  EXPECT_THROW(build_indicator(w.t, 'z', Side::kText), InputError);
}

TEST(Convolve, WorkedProducts) {
  const Worked w;
  const auto ae = convolve_exact(build_indicator(w.t, 'a', Side::kText), build_indicator(w.p, 'e', Side::kPattern));
  EXPECT_EQ(ae, (std::vector<std::uint32_t>{0, 1, 1, 1, 1, 0, 0, 1, 2, 3, 3, 3, 2, 1, 1, 0}));
  const auto ce = convolve_exact(build_indicator(w.t, 'c', Side::kText), build_indicator(w.p, 'e', Side::kPattern));
  EXPECT_EQ(ce, (std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0}));
}

TEST(Convolve, ZeroOperand) {
  const std::vector<std::uint32_t> a{1, 0, 1};
  const std::vector<std::uint32_t> z(4, 0);
  EXPECT_EQ(convolve_exact(a, z), std::vector<std::uint32_t>(6, 0));
  EXPECT_TRUE(convolve_exact(a, std::vector<std::uint32_t>{}).empty());
}

TEST(Convolve, MatchesSchoolbookOnRandomBinary) {
  experiment::Generator gen(21);
  for (int it = 0; it < 1000; ++it) {
    std::vector<std::uint32_t> a(1 + gen.below(201));
    std::vector<std::uint32_t> b(1 + gen.below(201));
    for (auto& c : a) c = static_cast<std::uint32_t>(gen.below(2));
    for (auto& c : b) c = static_cast<std::uint32_t>(gen.below(2));
    ASSERT_EQ(convolve_exact(a, b), schoolbook(a, b));
  }
}

TEST(Ntt, RejectsOversizedProducts) { EXPECT_THROW(ntt::transform_length(ntt::kMaxLength + 1), ConfigError); }

TEST(AlignmentCounts, WorkedSeries) {
  const Worked w;
  for (auto method : {CountingMethod::kTransform, CountingMethod::kDirect}) {
    const auto counts = alignment_counts(w.t, w.p, method);
    EXPECT_EQ(counts.series(*w.alphabet, 'a', 'e'), (std::vector<std::uint32_t>{0, 0, 1, 2, 3, 3}));
    EXPECT_EQ(counts.series(*w.alphabet, 'c', 'e'), (std::vector<std::uint32_t>{1, 1, 0, 0, 0, 1}));
  }
}

TEST(AlignmentCounts, MatchDirectCountOnRandomInstances) {
  experiment::Generator gen(22);
  for (int it = 0; it < 300; ++it) {
    const auto pair = pmatch::testing::random_pair(gen, 60, 15, 1 + gen.below(4), gen.below(3));
    const auto& alphabet = *pair.alphabet;
    const auto counts = alignment_counts(pair.text, pair.pattern, CountingMethod::kTransform);
    const std::size_t m = pair.pattern.size();
    for (Position w = 1; w + m <= pair.text.size() + 1; ++w) {
      for (Symbol a : alphabet.param_symbols()) {
        for (Symbol b : alphabet.param_symbols()) {
          std::uint32_t expected = 0;
          for (Position k = 1; k <= m; ++k) expected += pair.text.at(w + k - 1) == a && pair.pattern.at(k) == b;
          ASSERT_EQ(counts.pair(alphabet.rank(a), alphabet.rank(b), w), expected);
        }
      }
      for (Symbol s : alphabet.static_symbols()) {
        std::uint32_t expected = 0;
        for (Position k = 1; k <= m; ++k) expected += pair.text.at(w + k - 1) == s && pair.pattern.at(k) == s;
        ASSERT_EQ(counts.static_pair(alphabet.rank(s), w), expected);
      }
    }
  }
}

TEST(AlignmentCounts, SubrangeEqualsSliceOfFullRange) {
  experiment::Generator gen(23);
  for (int it = 0; it < 100; ++it) {
    const auto pair = pmatch::testing::random_pair(gen, 80, 10, 3, 1);
    const std::size_t total = pair.text.size() - pair.pattern.size() + 1;
    const Position first = 1 + gen.below(total);
    const std::size_t count = 1 + gen.below(total - first + 1);
    const auto full = alignment_counts(pair.text, pair.pattern);
    const auto part = alignment_counts(pair.text, pair.pattern, first, count);
    for (Position w = first; w < first + count; ++w) {
      const auto a = full.row(w);
      const auto b = part.row(w);
      ASSERT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
}

TEST(AlignmentCounts, RangeChecks) {
  const Worked w;
  EXPECT_THROW(alignment_counts(w.t, w.p, 0, 1), InputError);
  EXPECT_THROW(alignment_counts(w.t, w.p, 6, 2), InputError);
  EXPECT_THROW(alignment_counts(w.p, w.t), InputError);
  const auto counts = alignment_counts(w.t, w.p);
  EXPECT_THROW((void)counts.series(*w.alphabet, 'a', 'a' + 100), InputError);
}
