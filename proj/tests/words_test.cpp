#include "support.hpp"
#include "tperm/demazure.hpp"
#include "tperm/words.hpp"
#include "tperm_check/generators.hpp"
#include "tperm_check/oracles.hpp"

namespace tperm {
namespace {

using testing::raises;

Word W(int k, std::vector<std::optional<Int>> letters, WordFlavor f = WordFlavor::Reduced) {
  return {k, std::move(letters), f};
}

const Perm kS3Longest = make_finitary(0, 0, {2, 1, 0});
const Perm kS4Longest = make_finitary(0, 0, {3, 2, 1, 0});

TEST(EvaluateWord, Examples) {
  EXPECT_EQ(evaluate_word(W(0, {0, 1, 0}), EvalMode::Ordinary), kS3Longest);
  EXPECT_EQ(inv_count(kS3Longest), 3);
  EXPECT_EQ(evaluate_word(W(0, {0, 0}), EvalMode::Demazure), sigma(0, 0));
  EXPECT_EQ(evaluate_word(W(0, {0, 0}), EvalMode::Ordinary), identity(0));
  EXPECT_EQ(evaluate_word(W(0, {}), EvalMode::Ordinary), identity(0));
  EXPECT_EQ(evaluate_word(W(2, {0, std::nullopt, 0}, WordFlavor::Hecke), EvalMode::Demazure), sigma(0, 2));
}

TEST(ConjugateByIota, ReindexesGenerators) {
  for (int k : {0, 2, 3}) {
    for (Int c = -4; c <= 4; ++c) {
      for (Int m = -3; m <= 3; ++m) ASSERT_EQ(conjugate_by_iota(sigma(m, k), c), sigma(m - c, k));
    }
  }
}

TEST(ReducedWords, Examples) {
  EXPECT_EQ(reduced_words(sigma(3, 0)), std::vector<Word>{W(0, {3})});
  EXPECT_EQ(reduced_words(kS3Longest), (std::vector<Word>{W(0, {0, 1, 0}), W(0, {1, 0, 1})}));
  EXPECT_EQ(reduced_word_count(kS3Longest), 2);
  EXPECT_EQ(reduced_word_count(kS4Longest), 16);
  EXPECT_EQ(reduced_words(kS4Longest).size(), 16u);
  const Perm affine = evaluate_word(W(2, {0, 1, 0}), EvalMode::Ordinary);
  EXPECT_EQ(reduced_word_count(affine), 1);
  EXPECT_EQ(reduced_words(identity(2)), std::vector<Word>{W(2, {})});
  EXPECT_TRUE(raises(ErrorKind::ShiftNonzero, [] { reduced_words(iota(1, 0)); }));
  EXPECT_TRUE(raises(ErrorKind::ShiftNonzero, [] { reduced_word_count(iota(1, 2)); }));
}

TEST(ReducedWords, SpellTargetInOrderWithinWindow) {
  check::Rng rng(31);
  for (std::size_t i = 0; i < 150; ++i) {
    const int k = check::period_for(i);
    const Perm p = check::random_shift0(rng, k, k == 0 ? 5 : 3);
    const auto words = reduced_words(p);
    ASSERT_EQ(Count(words.size()), reduced_word_count(p)) << format_perm(p);
    ASSERT_TRUE(std::is_sorted(words.begin(), words.end()));
    for (const Word& w : words) {
      ASSERT_EQ(static_cast<Int>(w.letters.size()), inv_count(p));
      ASSERT_EQ(evaluate_word(w, EvalMode::Ordinary), p);
      ASSERT_EQ(evaluate_word(w, EvalMode::Demazure), p);
      for (const auto& m : w.letters) {
        if (k == 0) {
          ASSERT_GE(*m, p.window_begin());
          ASSERT_LE(*m + 1, p.window_end() - 1);
        } else {
          ASSERT_TRUE(*m >= 0 && *m < k);
        }
      }
    }
  }
}

TEST(ReducedTuples, Examples) {
  const std::vector<Int> zero2{0, 0};
  const Perm target = compose(sigma(0, 2), sigma(1, 2));
  const auto t = reduced_tuples(target, zero2, 1);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].factors, (std::vector<Perm>{sigma(0, 2), sigma(1, 2)}));

  const std::vector<Int> zero1{0};
  const auto single = reduced_tuples(sigma(0, 0), zero1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].factors, std::vector<Perm>{sigma(0, 0)});

  const std::vector<Int> split{1, -1};
  const auto iotas = reduced_tuples(identity(0), split);
  ASSERT_EQ(iotas.size(), 1u);
  EXPECT_EQ(iotas[0].factors, (std::vector<Perm>{iota(1, 0), iota(-1, 0)}));

  EXPECT_TRUE(raises(ErrorKind::ShiftSumMismatch, [&] { reduced_tuples(iota(1, 0), zero2); }));
  EXPECT_TRUE(raises(ErrorKind::EmptySequence, [] { reduced_tuples(identity(0), std::vector<Int>{}); }));
}

TEST(ReducedTuples, MatchBruteForce) {
  check::Rng rng(32);
  const std::vector<std::vector<Int>> shift_patterns{{0}, {0, 0}, {1, -1}, {0, 0, 0}, {-1, 2, -1}, {2, 0}};
  int compared = 0;
  for (std::size_t i = 0; compared < 120 && i < 2000; ++i) {
    const int k = check::period_for(i);
    const Perm p = check::random_perm(rng, k, 3);
    if (inv_count(p) > 4) continue;
    const auto& pattern = shift_patterns[i % shift_patterns.size()];
    Int sum = 0;
    for (Int c : pattern) sum += c;
    // Move the target to the pattern's total shift.
    const Perm target = compose(iota(sum - p.shift(), k), p);
    for (std::optional<Int> cap : {std::optional<Int>{}, std::optional<Int>{1}}) {
      const auto fast = reduced_tuples(target, pattern, cap);
      const auto slow = check::reduced_tuples_bruteforce(target, pattern, cap);
      ASSERT_EQ(fast, slow) << format_perm(target);
      for (const auto& t : fast) {
        ASSERT_TRUE(is_reduced_tuple(t.factors));
        ASSERT_EQ(product(t.factors), target);
        for (std::size_t j = 0; j < pattern.size(); ++j) ASSERT_EQ(t.factors[j].shift(), pattern[j]);
      }
    }
    ++compared;
  }
  EXPECT_EQ(compared, 120);
}

TEST(Hecke, Examples) {
  EXPECT_EQ(hecke_word_count(identity(2), 0), 1);
  EXPECT_EQ(hecke_word_count(identity(0), 1), 1);
  EXPECT_EQ(hecke_word_count(sigma(0, 0), 2), 3);
  EXPECT_EQ(hecke_word_count(kS3Longest, 2), 0);
  EXPECT_TRUE(raises(ErrorKind::ShiftNonzero, [] { hecke_word_count(iota(2, 3), 2); }));
  EXPECT_TRUE(raises(ErrorKind::BadParameters, [] { hecke_word_count(identity(0), -1); }));
}

TEST(Hecke, MatchesNaiveEnumeration) {
  std::vector<Perm> targets = check::shift0_ball(0, 3, 4);
  for (const Perm& p : check::shift0_ball(2, 3)) targets.push_back(p);
  for (const Perm& p : check::shift0_ball(3, 2)) targets.push_back(p);
  for (const Perm& p : targets) {
    for (Int g = 0; g <= 4; ++g) ASSERT_EQ(hecke_word_count(p, g), check::hecke_count_naive(p, g)) << format_perm(p) << " g=" << g;
  }
}

TEST(Hecke, MinimalLengthCountsReducedWords) {
  for (const Perm& p : check::corpus()) {
    if (p.shift() != 0) continue;
    ASSERT_EQ(hecke_word_count(p, inv_count(p)), reduced_word_count(p)) << format_perm(p);
  }
}

TEST(Hecke, BigCountsStayExact) {
  // Reduced words of the longest element of S_8 are standard tableaux of the
  // staircase: 28! / (13 * 11^2 * 9^3 * 7^4 * 5^5 * 3^6).
  const Perm w8 = make_finitary(0, 0, {7, 6, 5, 4, 3, 2, 1, 0});
  EXPECT_EQ(reduced_word_count(w8), Count("48608795688960"));
  // Words over {id, s} with Demazure product s: every nonempty subset of
  // positions carries s, so 2^g - 1.
  const Count expected = (Count(1) << 100) - 1;
  EXPECT_EQ(hecke_word_count(sigma(0, 2), 100), expected);
  EXPECT_EQ(hecke_word_count(sigma(5, 0), 100), expected);
}

}  // namespace
}  // namespace tperm
