#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using C = Chor<ML>;
C P(const std::string& s) { return parse_chor<ML>(s); }

std::vector<C> results_of(const C& c, SwapRule rule) {
  std::vector<C> out;
  for (auto& rw : swap_rewrites(c))
    if (rw.rule == rule) out.push_back(rw.result);
  return out;
}
}  // namespace

TEST(Equivalence, SwapSendSend) {
  auto r = results_of(P("A.1 ~> B.x; Q.2 ~> D.y; D.y"), SwapRule::SendSend);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], P("Q.2 ~> D.y; A.1 ~> B.x; D.y"));
  EXPECT_TRUE(results_of(P("A.1 ~> B.x; B.2 ~> Q.y; Q.y"), SwapRule::SendSend).empty());
  EXPECT_TRUE(swap_rewrites(P("A.5")).empty());
}

TEST(Equivalence, SwapSendSendNeedsIndependentMessages) {
  // Q's x is not B's x
  EXPECT_EQ(results_of(P("A.1 ~> B.x; Q.x ~> D.y; D.y"), SwapRule::SendSend).size(), 1u);
  EXPECT_EQ(results_of(P("A.1 ~> B.x; Q.2 ~> D.x; B.x"), SwapRule::SendSend).size(), 1u);
  EXPECT_TRUE(results_of(P("A.1 ~> B.x; B.x ~> D.y; D.y"), SwapRule::SendSend).empty());
  EXPECT_TRUE(results_of(P("A.1 ~> B.x; Q.2 ~> A.y; A.y"), SwapRule::SendSend).empty());
}

TEST(Equivalence, IfSendAndSendIf) {
  auto c = P("if A.true then B.1 ~> Q.x; Q.x else B.1 ~> Q.x; Q.(x + 1)");
  auto r = results_of(c, SwapRule::IfSend);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(alpha_equal(r[0], P("B.1 ~> Q.x; if A.true then Q.x else Q.(x + 1)")));
  auto back = results_of(r[0], SwapRule::SendIf);
  ASSERT_FALSE(back.empty());
  EXPECT_TRUE(alpha_equal(back[0], c));
}

TEST(Equivalence, IfIf) {
  auto c = P("if A.true then (if B.true then Q.1 else Q.2) else (if B.true then Q.3 else Q.4)");
  auto r = results_of(c, SwapRule::IfIf);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], P("if B.true then (if A.true then Q.1 else Q.3) else (if A.true then Q.2 else Q.4)"));
}

TEST(Equivalence, SyncSwaps) {
  EXPECT_EQ(results_of(P("A[L] ~> B; Q[R] ~> D; D.0"), SwapRule::SyncSync).at(0), P("Q[R] ~> D; A[L] ~> B; D.0"));
  EXPECT_EQ(results_of(P("A[L] ~> B; Q.1 ~> D.x; D.x"), SwapRule::SyncSend).at(0), P("Q.1 ~> D.x; A[L] ~> B; D.x"));
}

TEST(Equivalence, EverySwapIsInvertible) {
  for (int seed = 1; seed <= 200; ++seed) {
    GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    auto c = gen_typed_chor<ML>(cfg).chor;
    for (auto& rw : swap_rewrites(c)) {
      bool back = false;
      for (auto& rw2 : swap_rewrites(rw.result))
        if (canon_key(rw2.result) == canon_key(c)) back = true;
      EXPECT_TRUE(back) << print_chor(c) << " via " << swap_rule_name(rw.rule);
    }
  }
}

TEST(Equivalence, RandomVariant) {
  auto c = P("A.1 ~> B.x; Q.2 ~> D.y; D.y");
  EXPECT_EQ(random_equiv_variant(c, 5, 0), c);
  EXPECT_EQ(random_equiv_variant(c, 5, 1), P("Q.2 ~> D.y; A.1 ~> B.x; D.y"));
  EXPECT_EQ(random_equiv_variant(c, 9, 4), random_equiv_variant(c, 9, 4));
}

TEST(Equivalence, BoundedSearch) {
  auto c = P("A.1 ~> B.x; Q.2 ~> D.y; D.y");
  EXPECT_TRUE(equiv_bounded(c, c, 0));
  EXPECT_TRUE(equiv_bounded(c, P("Q.2 ~> D.y; A.1 ~> B.x; D.y"), 1));
  EXPECT_FALSE(equiv_bounded(P("A.5"), P("B.5"), 3));
  EXPECT_EQ(equiv_search(P("A.5"), P("B.5"), 3), EquivVerdict::NotFound);
}

TEST(Equivalence, PreservesTypesAndSyntax) {
  for (int seed = 1; seed <= 100; ++seed) {
    GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    auto g = gen_typed_chor<ML>(cfg);
    for (auto& rw : swap_rewrites(g.chor)) {
      auto t = chor_infer(rw.result);
      ASSERT_TRUE(t) << print_chor(rw.result);
      EXPECT_EQ(*t, g.type);
      EXPECT_EQ(fev(rw.result), fev(g.chor));
      EXPECT_EQ(fcv(rw.result), fcv(g.chor));
      EXPECT_EQ(location_names(rw.result), location_names(g.chor));
      EXPECT_EQ(chor_is_value(rw.result), chor_is_value(g.chor));
    }
  }
}
