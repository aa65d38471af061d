#include <spgauge/gauge.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <map>

using namespace spgauge;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Internal;
}

TEST(Sutherland, Examples) {
  EXPECT_EQ(sutherland_invariant({2, 28}), 2);
  EXPECT_EQ(sutherland_invariant({1, 0}), 12);
  EXPECT_EQ(sutherland_invariant({3, 7}), 7);
}

TEST(Refined, Examples) {
  EXPECT_EQ(refined_invariant({2, 28}), 4);
  EXPECT_EQ(refined_invariant({1, 5}), 1);
  for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(refined_invariant({n, 0}), classification_modulus(n));
}

TEST(Refined, RefinesSutherland) {
  // Equal refined invariants force equal Sutherland invariants.
  for (unsigned n = 1; n <= 8; ++n)
    for (int k = -50; k <= 50; ++k)
      EXPECT_EQ(sutherland_invariant({n, refined_invariant({n, k})}), sutherland_invariant({n, k}));
}

TEST(MappingGroup, Examples) {
  EXPECT_EQ(mapping_group_sp_n(2), 40);
  EXPECT_EQ(mapping_group_sp_n(4), 120960);
  EXPECT_EQ(code_of([] { mapping_group_sp_n(3); }), ErrorCode::OddRank);
}

TEST(ImDelta, Examples) {
  EXPECT_EQ(im_delta_gen(2, 1), 1);
  EXPECT_EQ(im_delta_gen(4, 1), 840);
  EXPECT_EQ(im_delta_gen(2, 5), 5);
  EXPECT_EQ(im_delta_gen(2, 0), 0);
  EXPECT_EQ(code_of([] { im_delta_gen(5, 1); }), ErrorCode::OddRank);
}

TEST(ImDelta, LinearInK) {
  for (unsigned n = 2; n <= 16; n += 2)
    for (int k = -30; k <= 30; ++k) ASSERT_EQ(im_delta_gen(n, k), abs_value(BigInt(k)) * im_delta_gen(n, 1));
}

TEST(Q2Invariant, Examples) {
  auto a = q2_mapping_invariant(2, 12);
  EXPECT_EQ(a.value, 4);
  EXPECT_EQ(a.closed_form, 4);
  EXPECT_TRUE(a.agrees());
  EXPECT_EQ(q2_mapping_invariant(2, 0).value, 40);
  auto b = q2_mapping_invariant(4, 1);
  EXPECT_EQ(b.value, 840);
  EXPECT_EQ(b.closed_form, 1);
  EXPECT_FALSE(b.agrees());
}

TEST(Q2Invariant, EqualsScaledRefinedInvariant) {
  // gcd((2n+1)!/3, k(2n-1)!/6) = (2n-1)!/6 * gcd(k, 4n(2n+1)).
  for (unsigned n = 2; n <= 12; n += 2)
    for (int k = 0; k <= 200; ++k)
      ASSERT_EQ(q2_mapping_invariant(n, k).value, factorial(2 * n - 1) / 6 * gcd_nonneg(k, classification_modulus(n)));
}

TEST(Q2Invariant, SeparatesExactlyLikeRefinedInvariant) {
  for (unsigned n = 2; n <= 20; n += 2) {
    const unsigned bound = static_cast<unsigned>(classification_modulus(n));
    std::vector<BigInt> q(bound + 1), g(bound + 1);
    for (unsigned k = 0; k <= bound; ++k) {
      q[k] = q2_mapping_invariant(n, k).value;
      g[k] = gcd_nonneg(k, bound);
    }
    std::map<BigInt, int> qid, gid;
    std::vector<int> qc(bound + 1), gc(bound + 1);
    for (unsigned k = 0; k <= bound; ++k) {
      qc[k] = qid.emplace(q[k], static_cast<int>(qid.size())).first->second;
      gc[k] = gid.emplace(g[k], static_cast<int>(gid.size())).first->second;
    }
    for (unsigned k = 0; k <= bound; ++k)
      for (unsigned l = 0; l <= bound; ++l) ASSERT_EQ(qc[k] == qc[l], gc[k] == gc[l]) << n << " " << k << " " << l;
  }
}

TEST(Q2Invariant, RankTwoIsGcdWithForty) {
  for (int k = 0; k <= 80; ++k) EXPECT_EQ(q2_mapping_invariant(2, k).value, gcd_nonneg(k, 40));
}

TEST(Q2Invariant, ZeroClassIsWholeMappingGroup) {
  for (unsigned n = 2; n <= 40; n += 2) ASSERT_EQ(mapping_group_sp_n(n), q2_mapping_invariant(n, 0).value);
}

TEST(ImPartial, Examples) {
  auto a = im_partial_order(2, 1);
  EXPECT_EQ(a.value, 40);
  EXPECT_EQ(a.closed_form, 40);
  EXPECT_EQ(im_partial_order(2, 40).value, 1);
  EXPECT_EQ(im_partial_order(2, 0).value, 1);
  auto b = im_partial_order(4, 3);
  EXPECT_EQ(b.value, 48);
  EXPECT_EQ(b.closed_form, 40320);
  EXPECT_FALSE(b.agrees());
}

TEST(ImPartial, IndexFormula) {
  for (unsigned n = 2; n <= 10; n += 2) {
    const BigInt m = classification_modulus(n);
    for (int k = 1; k <= 100; ++k) ASSERT_EQ(im_partial_order(n, k).value, m / gcd_nonneg(k, m));
  }
}

TEST(DecideLocal, Examples) {
  const Verdict a = decide_local(2, 5, 10, 5);
  EXPECT_EQ(a.outcome, Outcome::Equivalent);
  EXPECT_EQ(a.invariant_values, std::make_pair(BigInt(5), BigInt(5)));
  EXPECT_EQ(decide_local(2, 1, 5, 5).outcome, Outcome::Distinct);
  const Verdict c = decide_local(3, 7, 14, 3);
  EXPECT_EQ(c.outcome, Outcome::NotDetermined);
  ASSERT_EQ(c.guards.size(), 1u);
  EXPECT_FALSE(c.guards[0].passed);
  EXPECT_EQ(c.guards[0].detail, "5 < 6");
  EXPECT_EQ(code_of([] { decide_local(2, 1, 1, 4); }), ErrorCode::NotPrime);
}

TEST(DecideLocal, VerdictConsistentWithValues) {
  for (int k = 0; k <= 40; ++k)
    for (int l = 0; l <= 40; ++l) {
      const Verdict v = decide_local(2, k, l, 5);
      if (v.outcome == Outcome::Distinct) ASSERT_NE(v.invariant_values.first, v.invariant_values.second);
      if (v.outcome == Outcome::Equivalent) {
        ASSERT_EQ(v.invariant_values.first, v.invariant_values.second);
        ASSERT_TRUE(v.guards_passed());
      }
    }
}

TEST(DecideLocal, EquivalenceRelation) {
  for (auto [n, p] : {std::pair<unsigned, std::int64_t>{2, 5}, {3, 5}, {4, 5}, {5, 7}}) {
    const int bound = static_cast<int>(classification_modulus(n));
    auto eq = [&](int k, int l) { return decide_local(n, k, l, p).outcome == Outcome::Equivalent; };
    std::vector<std::vector<bool>> m(bound + 1, std::vector<bool>(bound + 1));
    for (int k = 0; k <= bound; ++k)
      for (int l = 0; l <= bound; ++l) m[k][l] = eq(k, l);
    for (int k = 0; k <= bound; ++k) {
      ASSERT_TRUE(m[k][k]);
      for (int l = 0; l <= bound; ++l) {
        ASSERT_EQ(m[k][l], m[l][k]);
        if (!m[k][l]) continue;
        for (int j = 0; j <= bound; ++j)
          if (m[l][j]) ASSERT_TRUE(m[k][j]);
      }
    }
  }
}

TEST(DecideLocal, InvariantUnderShiftAndNegation) {
  for (auto [n, p] : {std::pair<unsigned, std::int64_t>{2, 5}, {3, 7}, {4, 5}, {4, 3}}) {
    const BigInt b = classification_modulus(n);
    for (int k = -20; k <= 60; ++k)
      for (int l = 0; l <= 30; l += 3) {
        const auto base = decide_local(n, k, l, p).outcome;
        for (int t : {-3, -1, 1, 2}) ASSERT_EQ(decide_local(n, k + b * t, l, p).outcome, base);
        ASSERT_EQ(decide_local(n, -k, l, p).outcome, base);
      }
  }
}

TEST(DecideSpin, Examples) {
  EXPECT_EQ(decide_spin(7, 84, 0, 7).outcome, Outcome::Equivalent);
  const Verdict b = decide_spin(8, 1, 3, 3);
  EXPECT_EQ(b.outcome, Outcome::NotDetermined);
  EXPECT_FALSE(b.guards_passed());
  const Verdict c = decide_spin(9, 9, 18, 3);
  EXPECT_EQ(c.invariant_values, std::make_pair(BigInt(9), BigInt(9)));
  // equal invariants, but 5 < 8 so the guard decides
  EXPECT_EQ(c.outcome, Outcome::NotDetermined);
  EXPECT_EQ(decide_spin(9, 9, 18, 5).outcome, Outcome::Equivalent);
  EXPECT_EQ(decide_spin(9, 1, 3, 2).outcome, Outcome::NotDetermined);
  EXPECT_EQ(code_of([] { decide_spin(6, 1, 1, 5); }), ErrorCode::BadDimension);
  EXPECT_EQ(code_of([] { decide_spin(7, 1, 1, 9); }), ErrorCode::NotPrime);
}

TEST(DecideSpin, BothParitiesShareTheSpCriterion) {
  for (unsigned m = 7; m <= 16; ++m)
    for (std::int64_t p : {3, 5, 7, 11})
      for (int k = 0; k <= 30; ++k) {
        const unsigned n = (m - 1) / 2;
        const auto spin = decide_spin(m, k, 12, p).outcome;
        ASSERT_EQ(spin, decide_local(n, k, 12, p).outcome);
      }
}

TEST(Pi4n1, Examples) {
  EXPECT_EQ(pi4n1_order(2, 20, 5), 5);
  EXPECT_EQ(pi4n1_order(2, 3, 5), 1);
  EXPECT_EQ(pi4n1_order(4, 48, 3), 3);
  EXPECT_EQ(code_of([] { pi4n1_order(2, 3, 2); }), ErrorCode::EvenPrime);
  EXPECT_EQ(code_of([] { pi4n1_order(2, 3, 15); }), ErrorCode::NotPrime);
}

TEST(Retractible, TableRows) {
  EXPECT_TRUE(retractible(LieFamily::Sp, 2, 3));
  EXPECT_FALSE(retractible(LieFamily::Sp, 3, 3));
  EXPECT_TRUE(retractible(LieFamily::E8, 0, 7));
  EXPECT_FALSE(retractible(LieFamily::E7, 0, 5));
  EXPECT_TRUE(retractible(LieFamily::G2, 0, 5));
  EXPECT_FALSE(retractible(LieFamily::F4, 0, 3));
  EXPECT_TRUE(retractible(LieFamily::SU, 5, 3));
  EXPECT_FALSE(retractible(LieFamily::SU, 6, 3));
  EXPECT_TRUE(retractible(LieFamily::SpinOdd, 2, 3));
  EXPECT_EQ(parse_lie_family("E6"), LieFamily::E6);
  EXPECT_THROW(parse_lie_family("Spin"), Error);
}

}  // namespace
