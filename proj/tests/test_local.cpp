#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {

template <class L>
typename L::Expr E(const std::string& s) {
  return parse_local<L>(s);
}

using NB = NatBool;
using ML = MiniLambda;
using UL = UniLambda;

}  // namespace

TEST(NatBool, FreeVars) {
  EXPECT_EQ(NB::free_vars(E<NB>("S x")), NameSet{"x"});
  EXPECT_TRUE(NB::free_vars(E<NB>("S 0")).empty());
}

TEST(NatBool, Subst) {
  EXPECT_EQ(NB::subst(NB::var("x"), "x", E<NB>("0")), E<NB>("0"));
  EXPECT_EQ(NB::subst(E<NB>("S x"), "x", E<NB>("S 0")), E<NB>("S (S 0)"));
  auto e = E<NB>("S (S y)");
  EXPECT_EQ(NB::subst(e, "x", NB::var("x")), e);
}

TEST(NatBool, ValuesAndSteps) {
  EXPECT_TRUE(NB::is_value(E<NB>("S (S 0)")));
  EXPECT_FALSE(NB::is_value(E<NB>("S x")));
  EXPECT_TRUE(NB::step(E<NB>("S 0")).empty());
}

TEST(NatBool, Types) {
  EXPECT_EQ(NB::infer({}, E<NB>("S 0")), std::optional(NB::Type::Int));
  LocalCtx<NB::Type> ctx{{"x", NB::bool_type()}};
  EXPECT_EQ(NB::infer(ctx, NB::var("x")), std::optional(NB::bool_type()));
  LocalCtx<NB::Type> shadow{{"x", NB::Type::Int}, {"x", NB::Type::Bool}};
  EXPECT_EQ(NB::infer(shadow, NB::var("x")), std::optional(NB::Type::Bool));
  EXPECT_FALSE(NB::infer({}, E<NB>("S true")).has_value());
}

TEST(SoundnessFlags, PerInstance) {
  EXPECT_TRUE(NB::soundness.preservation && NB::soundness.progress && NB::soundness.bool_invertibility);
  EXPECT_TRUE(ML::soundness.preservation && ML::soundness.progress && ML::soundness.bool_invertibility);
  EXPECT_TRUE(UL::soundness.preservation);
  EXPECT_FALSE(UL::soundness.progress);
  EXPECT_FALSE(UL::soundness.bool_invertibility);
}

TEST(MiniLambda, FreeVarsRespectBinders) {
  EXPECT_EQ(ML::free_vars(E<ML>("\\x:Int. y")), NameSet{"y"});
  EXPECT_TRUE(ML::free_vars(E<ML>("\\x:Int. x")).empty());
  EXPECT_TRUE(ML::free_vars(E<ML>("rec f(x:Int):Int. f x")).empty());
}

TEST(MiniLambda, Steps) {
  auto s = ML::step(E<ML>("(\\x:Bool. x) true"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], ML::true_value());
  EXPECT_FALSE(ML::is_value(E<ML>("(\\x:Bool. x) true")));
  auto a = ML::step(E<ML>("2 + 3"));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], E<ML>("5"));
  EXPECT_EQ(ML::step(E<ML>("3 * 4"))[0], E<ML>("12"));
  // truncated subtraction
  EXPECT_EQ(ML::step(E<ML>("2 - 5"))[0], E<ML>("0"));
  EXPECT_EQ(ML::step(E<ML>("2 < 5"))[0], ML::true_value());
}

TEST(MiniLambda, CaptureAvoidingSubst) {
  // y is free in the argument; the binder must be renamed, not captured
  auto r = ML::subst(E<ML>("\\y:Int. x + y"), "x", ML::var("y"));
  EXPECT_EQ(ML::free_vars(r), NameSet{"y"});
  auto applied = ML::step(ML::subst(E<ML>("(\\y:Int. x + y) 1"), "x", E<ML>("2")));
  ASSERT_EQ(applied.size(), 1u);
  EXPECT_EQ(applied[0], E<ML>("2 + 1"));
}

TEST(MiniLambda, AlphaEquality) {
  EXPECT_EQ(E<ML>("\\x:Int. x"), E<ML>("\\z:Int. z"));
  EXPECT_NE(E<ML>("\\x:Int. y"), E<ML>("\\z:Int. z"));
}

TEST(MiniLambda, Recursion) {
  // sum 0..3 by recursion
  auto e = E<ML>("(rec f(n:Int):Int. if n < 1 then 0 else n + f (n - 1)) 3");
  for (int i = 0; i < 200 && !ML::is_value(e); ++i) e = ML::step(e).at(0);
  EXPECT_EQ(e, E<ML>("6"));
  EXPECT_EQ(ML::infer({}, E<ML>("rec f(n:Int):Int. f n")).has_value(), true);
}

TEST(MiniLambda, TypesAreUnique) {
  EXPECT_EQ(ML::print_type(*ML::infer({}, E<ML>("\\x:Int. x < 1"))), "Int -> Bool");
  EXPECT_FALSE(ML::infer({}, E<ML>("1 + true")).has_value());
  EXPECT_FALSE(ML::infer({}, E<ML>("if 1 then 2 else 3")).has_value());
}

TEST(UniLambda, EverythingHasTheOneType) {
  auto t = UL::infer({}, E<UL>("\\x. x x"));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(UL::print_type(*t), "*");
  EXPECT_EQ(*t, UL::bool_type());
}

TEST(UniLambda, IfOnAFunctionIsStuck) {
  auto e = E<UL>("if (\\x. x) then 0 else 1");
  EXPECT_FALSE(UL::is_value(e));
  EXPECT_TRUE(UL::step(e).empty());
  EXPECT_TRUE(UL::infer({}, e).has_value());
}

TEST(LocalLanguage, PrintParseRoundTrip) {
  for (auto* s : {"(\\x:Int. x + 1) 2", "if 1 < 2 then true else false", "rec f(n:Int):Int. f (n - 1)", "2 * (3 + 4)"}) {
    auto e = E<ML>(s);
    EXPECT_EQ(E<ML>(ML::print(e)), e) << s;
  }
  for (auto* s : {"S (S x)", "true", "S 0"}) EXPECT_EQ(E<NB>(NB::print(E<NB>(s))), E<NB>(s));
}

TEST(LocalLanguage, SubstitutionEquations) {
  // e[x := x] = e and x[x := v] = v on generated terms
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto t = ML::gen_type(rng);
    LocalCtx<ML::Type> ctx{{"x", ML::int_type()}, {"y", ML::bool_type()}};
    auto e = ML::gen_expr(rng, ctx, t, 3);
    EXPECT_EQ(ML::subst(e, "x", ML::var("x")), e);
    auto v = E<ML>("3");
    EXPECT_EQ(ML::subst(ML::var("x"), "x", v), v);
    // commutation with x not free in the second value
    auto w = E<ML>("true");
    EXPECT_EQ(ML::subst(ML::subst(e, "x", v), "y", w), ML::subst(ML::subst(e, "y", w), "x", v));
  }
}
