#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using NB = NatBool;
using ML = MiniLambda;
using UL = UniLambda;

GenConfig base(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  return cfg;
}

template <class L>
void expect_holds(const std::string& name, int cases) {
  auto r = check_theorem<L>(name, base(1), cases);
  EXPECT_TRUE(r.ok()) << r.summary() << "\n" << r.counterexample;
  EXPECT_FALSE(r.hypothesis_unsatisfiable) << r.summary();
  EXPECT_FALSE(r.not_applicable) << r.summary();
  EXPECT_GE(r.passed, cases * 9 / 10) << r.summary();
}
}  // namespace

TEST(Generator, ProducesTypedChoreographies) {
  for (int i = 1; i <= 300; ++i) {
    auto g = gen_typed_chor<ML>(base(static_cast<std::uint64_t>(i)));
    auto t = chor_infer(g.chor);
    ASSERT_TRUE(t) << print_chor(g.chor);
    EXPECT_EQ(*t, g.type);
    EXPECT_TRUE(fev(g.chor).empty());
    EXPECT_TRUE(fcv(g.chor).empty());
  }
}

TEST(Generator, Deterministic) {
  EXPECT_EQ(gen_typed_chor<NB>(base(42)).chor, gen_typed_chor<NB>(base(42)).chor);
}

TEST(Generator, MostlyProjectable) {
  int ok = 0;
  for (int i = 1; i <= 200; ++i) ok += project_system(gen_typed_chor<ML>(base(static_cast<std::uint64_t>(i))).chor).has_value();
  EXPECT_GT(ok, 150);
}

TEST(Shrinking, FindsASmallerFailure) {
  auto c = parse_chor<ML>("A.1 ~> B.x; if B.true then Q.(1 + 1) ~> B.y; B.y else B.2");
  auto has_q = [](const Chor<ML>& d) { return location_names(d).count(Location{"Q"}) > 0; };
  auto s = shrink_chor(c, has_q);
  EXPECT_TRUE(has_q(s));
  EXPECT_LT(print_chor(s).size(), print_chor(c).size());
}

TEST(Theorems, NamesAreKnown) {
  EXPECT_EQ(theorem_names().size(), 21u);
  for (auto& n : theorem_names()) EXPECT_NO_THROW(check_theorem<NB>(n, base(3), 1)) << n;
  EXPECT_THROW(check_theorem<NB>("no-such-theorem", base(1), 1), std::invalid_argument);
}

TEST(Theorems, TypeSoundness) {
  expect_holds<NB>("relative-preservation", 100);
  expect_holds<ML>("relative-preservation", 100);
  expect_holds<ML>("relative-progress", 100);
  expect_holds<ML>("equivalence-respects-types", 100);
}

TEST(Theorems, Semantics) {
  expect_holds<ML>("semantics-laws", 100);
  expect_holds<ML>("weak-semantics", 100);
  expect_holds<ML>("structural-rules", 100);
  expect_holds<ML>("equiv-syntactic-ops", 100);
  expect_holds<ML>("simulates-equivalence", 100);
}

TEST(Theorems, Projection) {
  expect_holds<ML>("merge-algebra", 200);
  expect_holds<ML>("merge-simulation", 200);
  expect_holds<ML>("lnd-order", 200);
  expect_holds<ML>("projection-syntactic-ops", 100);
  expect_holds<ML>("lift-lower-system", 100);
  expect_holds<NB>("local-completeness", 100);
  expect_holds<NB>("global-soundness", 100);
  expect_holds<ML>("deadlock-freedom", 100);
}

TEST(Theorems, LocalLanguageLaws) {
  expect_holds<NB>("local-language-laws", 100);
  expect_holds<ML>("local-language-laws", 100);
  expect_holds<UL>("local-language-laws", 100);
}

TEST(Theorems, UnsoundLanguage) {
  auto p = check_theorem<UL>("relative-progress", base(1), 50);
  EXPECT_TRUE(p.not_applicable);
  EXPECT_TRUE(check_theorem<UL>("deadlock-freedom", base(1), 50).not_applicable);
  expect_holds<UL>("relative-preservation", 300);
  auto w = stuck_witness<UL>();
  ASSERT_TRUE(w);
  EXPECT_TRUE(chor_infer(*w));
  EXPECT_EQ(check_progress(*w), ProgressVerdict::NotApplicable);
  EXPECT_FALSE(stuck_witness<ML>(1, 50));
}

TEST(Theorems, ReportsSeedOnFailure) {
  auto r = check_theorem<ML>("merge-monotonicity", base(1), 100);
  EXPECT_GT(r.failed, 0);
  EXPECT_NE(r.counterexample.find("seed "), std::string::npos);
  EXPECT_NE(r.summary().find("FAILED"), std::string::npos);
}
