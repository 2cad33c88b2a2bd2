#include "support.hpp"
#include "tperm/demazure.hpp"
#include "tperm_check/generators.hpp"
#include "tperm_check/oracles.hpp"

namespace tperm {
namespace {

using check::random_perm;
using testing::raises;

TEST(SlipfaceTable, RecoversShiftsAndGenerators) {
  for (int k : {0, 2, 3}) {
    for (Int n = -3; n <= 3; ++n) {
      const Box box{-10, 10, -2, 4};
      SlipfaceTable t(box, n, 4);
      for (Int a = box.a_lo; a <= box.a_hi; ++a) {
        for (Int b = box.b_lo; b <= box.b_hi; ++b) t(a, b) = std::max<Int>(0, a - b + n);
      }
      EXPECT_EQ(perm_from_slipface(t, k), iota(n, k));
    }
  }
  const Box box{-8, 8, -1, 2};
  SlipfaceTable t(box, 0, 2);
  for (Int a = box.a_lo; a <= box.a_hi; ++a) {
    for (Int b = box.b_lo; b <= box.b_hi; ++b) t(a, b) = check::iota_sigma_slipface(0, 0, 2, a, b);
  }
  EXPECT_EQ(perm_from_slipface(t, 2), sigma(0, 2));
}

TEST(SlipfaceTable, RoundTrip) {
  check::Rng rng(21);
  for (std::size_t i = 0; i < 1000; ++i) {
    const int k = check::period_for(i);
    const Perm p = random_perm(rng, k);
    ASSERT_EQ(perm_from_slipface(tabulate(p, default_box(p)), k), p);
  }
}

TEST(SlipfaceTable, RejectsBadTables) {
  const Perm p = make_finitary(1, -1, {1, -1, 0, -2});
  auto t = tabulate(p, default_box(p));
  t(0, 0) += 1;
  EXPECT_TRUE(raises(ErrorKind::NotSubmodular, [&] { validate_table(t); }));
  auto far = tabulate(p, default_box(p));
  far(far.box().a_hi, far.box().b_lo) += 1;
  EXPECT_TRUE(raises(ErrorKind::BadAsymptotics, [&] { validate_table(far); }));
  // A 2-periodic table read as period 3.
  const Perm s = sigma(0, 2);
  const Box box{-10, 10, -1, 3};
  EXPECT_TRUE(raises(ErrorKind::InconsistentPeriod, [&] { perm_from_slipface(tabulate(s, box), 3); }));
}

TEST(Demazure, Examples) {
  const Perm s0 = sigma(0, 0);
  const Perm s1 = sigma(1, 0);
  EXPECT_EQ(demazure(s0, s0), s0);
  EXPECT_EQ(demazure(s0, s1), compose(s0, s1));
  EXPECT_TRUE(is_reduced_pair(s0, s1));
  const Perm a0 = sigma(0, 2);
  const Perm a1 = sigma(1, 2);
  const Perm prod = demazure(a0, demazure(a1, a0));
  EXPECT_EQ(prod, make_affine(2, {3, -2}));
  EXPECT_EQ(prod, demazure_by_max_oracle(a0, demazure_by_max_oracle(a1, a0)));
  EXPECT_EQ(inv_count(prod), 3);
}

TEST(Demazure, Fold) {
  const std::vector<Perm> iotas{iota(1, 0), iota(2, 0), iota(-3, 0)};
  EXPECT_EQ(demazure_fold(iotas), identity(0));
  const std::vector<Perm> pair{sigma(0, 2), sigma(1, 2)};
  EXPECT_EQ(demazure_fold(pair), compose(sigma(0, 2), sigma(1, 2)));
  for (std::size_t g = 1; g <= 5; ++g) {
    const std::vector<Perm> copies(g, sigma(0, 0));
    EXPECT_EQ(demazure_fold(copies), sigma(0, 0));
  }
  EXPECT_TRUE(raises(ErrorKind::EmptySequence, [] { demazure_fold(std::vector<Perm>{}); }));
  EXPECT_TRUE(raises(ErrorKind::PeriodMismatch, [] { demazure(sigma(0, 2), sigma(0, 0)); }));
}

TEST(Demazure, OracleOnSmallGroups) {
  std::vector<Perm> s3;
  std::vector<Int> vals{0, 1, 2};
  do {
    s3.push_back(make_finitary(0, 0, vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
  ASSERT_EQ(s3.size(), 6u);
  for (const Perm& a : s3) {
    for (const Perm& b : s3) ASSERT_EQ(demazure(a, b), demazure_by_max_oracle(a, b));
  }
  const auto affine = check::shift0_ball(2, 4);
  ASSERT_EQ(affine.size(), 9u);
  for (const Perm& a : affine) {
    for (const Perm& b : affine) ASSERT_EQ(demazure(a, b), demazure_by_max_oracle(a, b));
  }
}

TEST(Demazure, OracleOnShiftedPairs) {
  check::Rng rng(22);
  for (std::size_t i = 0; i < 150; ++i) {
    const int k = check::period_for(i);
    const Perm a = random_perm(rng, k, 2);
    const Perm b = random_perm(rng, k, 2);
    if (inv_count(a) + inv_count(b) > 6) continue;
    ASSERT_EQ(demazure(a, b), demazure_by_max_oracle(a, b)) << format_perm(a) << " * " << format_perm(b);
  }
}

TEST(Demazure, Laws) {
  check::Rng rng(23);
  for (std::size_t i = 0; i < 500; ++i) {
    const int k = check::period_for(i);
    const Perm a = random_perm(rng, k);
    const Perm b = random_perm(rng, k);
    const Perm c = random_perm(rng, k);
    const Perm ab = demazure(a, b);
    ASSERT_EQ(ab.shift(), a.shift() + b.shift());
    ASSERT_EQ(compose(a, b).shift(), a.shift() + b.shift());
    ASSERT_EQ(demazure(ab, c), demazure(a, demazure(b, c)));
    // Reduced-pair theorem, both directions.
    ASSERT_EQ(is_reduced_pair(a, b), ab == compose(a, b)) << format_perm(a) << " * " << format_perm(b);
    // a * b dominates a once the shift of b is undone.
    ASSERT_TRUE(bruhat_leq(compose(a, iota(b.shift(), k)), ab));
    // Slipface of the product is the min-plus product.
    for (Int x = -5; x <= 5; ++x) {
      for (Int y = -5; y <= 5; ++y) {
        Int best = std::numeric_limits<Int>::max();
        for (Int l = -30; l <= 30; ++l) best = std::min(best, slipface(a, x, l) + slipface(b, l, y));
        ASSERT_EQ(slipface(ab, x, y), best);
      }
    }
  }
}

TEST(Reduced, Predicates) {
  const Perm s0 = sigma(0, 0);
  const Perm s1 = sigma(1, 0);
  EXPECT_FALSE(is_reduced_pair(s0, s0));
  EXPECT_TRUE(is_reduced_pair(s0, s1));
  check::Rng rng(24);
  for (std::size_t i = 0; i < 50; ++i) {
    const int k = check::period_for(i);
    EXPECT_TRUE(is_reduced_pair(iota(static_cast<Int>(i % 5) - 2, k), random_perm(rng, k)));
  }
  EXPECT_TRUE(is_reduced_tuple(std::vector<Perm>{s0, s1}));
  EXPECT_FALSE(is_reduced_tuple(std::vector<Perm>{s0, s0}));
  EXPECT_TRUE(is_reduced_tuple(std::vector<Perm>{iota(2, 2), sigma(0, 2), iota(-2, 2)}));
  EXPECT_TRUE(is_reduced_tuple(std::vector<Perm>{identity(0), identity(0), identity(0)}));
}

TEST(Reduced, EquivalentToLengthAdditive) {
  check::Rng rng(25);
  for (std::size_t i = 0; i < 600; ++i) {
    const int k = check::period_for(i);
    std::vector<Perm> ps;
    for (std::size_t j = 0; j < 1 + i % 3; ++j) ps.push_back(random_perm(rng, k, 3));
    ASSERT_EQ(is_reduced_tuple(ps), is_length_additive(ps));
    if (ps.size() == 2) ASSERT_EQ(is_reduced_pair(ps[0], ps[1]), is_reduced_tuple(ps));
  }
}

TEST(LowerSet, Examples) {
  EXPECT_EQ(bruhat_lower_set(sigma(0, 0)), (std::vector<Perm>{identity(0), sigma(0, 0)}));
  const auto below = bruhat_lower_set(make_affine(2, {3, -2}));
  EXPECT_EQ(below.size(), 6u);
  EXPECT_TRUE(raises(ErrorKind::TooLarge, [] { bruhat_lower_set(make_finitary(0, 0, {5, 4, 3, 2, 1, 0}), 100); }));
}

TEST(LowerSet, MatchesBruhatFilter) {
  // Every element of a small ball lies below p exactly when it is listed.
  for (int k : {0, 2, 3}) {
    const auto ball = check::shift0_ball(k, 4, 4);
    check::Rng rng(26 + k);
    for (int trial = 0; trial < 8; ++trial) {
      const Perm& p = ball[rng() % ball.size()];
      const auto below = bruhat_lower_set(p);
      for (const Perm& q : ball) {
        const bool listed = std::binary_search(below.begin(), below.end(), q);
        ASSERT_EQ(listed, bruhat_leq(q, p)) << format_perm(q) << " <= " << format_perm(p);
      }
    }
  }
}

}  // namespace
}  // namespace tperm
