#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using C = Chor<ML>;
C P(const std::string& s) { return parse_chor<ML>(s); }
ML::Expr E(const std::string& s) { return parse_local<ML>(s); }
const Location A{"A"}, B{"B"}, D{"D"};
}  // namespace

TEST(ChorAst, FreeChoreographyVariables) {
  EXPECT_EQ(fcv(P("X")), NameSet{"X"});
  EXPECT_TRUE(fcv(P("funG F(X) := appG F X")).empty());
  EXPECT_EQ(fcv(P("appG X Y")), (NameSet{"X", "Y"}));
  EXPECT_EQ(fcv(P("funL F(A.x) := G")), NameSet{"G"});
}

TEST(ChorAst, FreeLocatedVariables) {
  EXPECT_EQ(fev(P("A.x")), (LocVarSet{{A, "x"}}));
  EXPECT_TRUE(fev(P("A.5 ~> B.x; B.x")).empty());
  // the binder lives at B only
  EXPECT_EQ(fev(P("A.5 ~> B.x; A.x")), (LocVarSet{{A, "x"}}));
  EXPECT_TRUE(fev_at(P("A.x"), B).empty());
  EXPECT_TRUE(fev(P("let A.x := A.1 in A.x")).empty());
  EXPECT_TRUE(fev(P("funL F(A.x) := A.x")).empty());
}

TEST(ChorAst, LocationNames) {
  EXPECT_EQ(location_names(P("A.5")), LocSet{A});
  EXPECT_EQ(location_names(P("A.5 ~> B.x; B.x")), (LocSet{A, B}));
  EXPECT_TRUE(location_names(P("X")).empty());
  EXPECT_EQ(location_names(P("A[L] ~> B; D.0")), (LocSet{A, B, D}));
}

TEST(ChorAst, GlobalSubstitution) {
  EXPECT_EQ(subst_global(P("X"), "X", P("A.5")), P("A.5"));
  auto shadow = P("funG F(X) := X");
  EXPECT_EQ(subst_global(shadow, "X", P("A.5")), shadow);
  // parallel: both variables replaced at once
  auto w = P("funG G(Y) := Y");
  auto r = subst_global(P("appG F X"), ChorSubst<ML>{{"X", P("A.5")}, {"F", w}});
  EXPECT_EQ(r, C::app_global(w, P("A.5")));
  EXPECT_EQ(subst_global(P("A.1"), "X", P("B.2")), P("A.1"));
}

TEST(ChorAst, GlobalSubstitutionAvoidsCapture) {
  // the substituted term mentions Y free; the binder Y must be renamed
  auto r = subst_global(P("funG F(Y) := appG X Y"), "X", P("Y"));
  EXPECT_EQ(fcv(r), NameSet{"Y"});
  EXPECT_TRUE(alpha_equal(r, P("funG F(Z) := appG Y Z")));
}

TEST(ChorAst, LocalSubstitution) {
  EXPECT_EQ(subst_local(P("A.x"), A, "x", E("5")), P("A.5"));
  EXPECT_EQ(subst_local(P("B.x"), A, "x", E("5")), P("B.x"));
  EXPECT_EQ(subst_local(P("A.(x + 1) ~> B.y; A.x"), A, "x", E("5")), P("A.(5 + 1) ~> B.y; A.5"));
  // a receive at A shadows x in the continuation
  EXPECT_EQ(subst_local(P("B.1 ~> A.x; A.x"), A, "x", E("5")), P("B.1 ~> A.x; A.x"));
  // but not at other locations
  EXPECT_EQ(subst_local(P("B.1 ~> D.x; A.x"), A, "x", E("5")), P("B.1 ~> D.x; A.5"));
}

TEST(ChorAst, Values) {
  EXPECT_TRUE(chor_is_value(P("A.5")));
  EXPECT_FALSE(chor_is_value(P("A.(2 + 3)")));
  EXPECT_FALSE(chor_is_value(P("funG F(X) := Y")));
  EXPECT_TRUE(chor_is_value(P("funG F(X) := appG F X")));
  EXPECT_TRUE(chor_is_value(P("funL F(A.x) := A.x")));
  EXPECT_FALSE(chor_is_value(P("funL F(A.x) := A.y")));
  EXPECT_FALSE(chor_is_value(P("A.5 ~> B.x; B.x")));
}

TEST(ChorAst, Canonicalization) {
  EXPECT_TRUE(alpha_equal(P("A.5 ~> B.x; B.x"), P("A.5 ~> B.y; B.y")));
  EXPECT_FALSE(alpha_equal(P("A.5 ~> B.x; B.x"), P("A.5 ~> B.x; B.y")));
  EXPECT_TRUE(alpha_equal(P("funG F(X) := X"), P("funG G(Y) := Y")));
}

TEST(ChorAst, PrintParseRoundTrip) {
  for (auto* s : {"A.(2 + 3) ~> B.x; B.x", "if A.true then A[L] ~> B; B.0 else A[R] ~> B; B.1",
                  "let A.x := B.1 ~> A.y; A.y in A.(x + 1)", "appG (funG F(X : At(A, Int)) : At(A, Int) := X) (A.1)",
                  "appL A (funL F(A.x : Int) : At(B, Int) := A.x ~> B.y; B.y) 3"}) {
    auto c = P(s);
    EXPECT_EQ(P(print_chor(c)), c) << s;
  }
}
