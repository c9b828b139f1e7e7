#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using UL = UniLambda;
using C = Chor<ML>;
using T = ChorType<ML>;
C P(const std::string& s) { return parse_chor<ML>(s); }
std::string type_of(const std::string& s) {
  auto t = chor_infer(P(s));
  return t ? print_ctype(*t) : "error: " + t.error().str();
}
const Location A{"A"}, B{"B"};
}  // namespace

TEST(ChorTypes, ContextProjection) {
  TypeCtx<ML> g;
  g = g.bind_local(A, "x", ML::int_type()).bind_local(B, "y", ML::bool_type());
  auto pa = ctx_project(g, A);
  ASSERT_EQ(pa.size(), 1u);
  EXPECT_EQ(pa[0].first, "x");
  EXPECT_TRUE(ctx_project(TypeCtx<ML>{}, A).empty());
  auto g2 = TypeCtx<ML>{}.bind_local(A, "x", ML::int_type()).bind_local(A, "x", ML::bool_type());
  auto p2 = ctx_project(g2, A);
  ASSERT_EQ(p2.size(), 2u);
  EXPECT_EQ(ctx_lookup(p2, "x"), std::optional(ML::bool_type()));
}

TEST(ChorTypes, BasicRules) {
  EXPECT_EQ(type_of("A.true"), "At(A, Bool)");
  EXPECT_EQ(type_of("A.5 ~> B.x; B.x"), "At(B, Int)");
  EXPECT_EQ(type_of("A[L] ~> B; B.1"), "At(B, Int)");
  EXPECT_EQ(type_of("if A.true then B.0 else B.1"), "At(B, Int)");
  EXPECT_EQ(type_of("let A.x := B.1 ~> A.y; A.y in A.(x < 2)"), "At(A, Bool)");
  EXPECT_EQ(type_of("funL F(A.x : Int) : At(A, Int) := A.x"), "LocalFun(A, Int, At(A, Int))");
  EXPECT_EQ(type_of("appL A (funL F(A.x : Int) : At(B, Int) := A.x ~> B.y; B.y) 3"), "At(B, Int)");
  EXPECT_EQ(type_of("appG (funG F(X : At(A, Int)) : At(A, Int) := X) (A.1)"), "At(A, Int)");
}

TEST(ChorTypes, Rejections) {
  EXPECT_FALSE(chor_infer(P("A.true ~> A.x; A.x")));
  EXPECT_FALSE(chor_infer(P("A[L] ~> A; A.1")));
  EXPECT_FALSE(chor_infer(P("if A.5 then B.0 else B.1")));
  EXPECT_FALSE(chor_infer(P("if A.true then B.0 else B.true")));
  EXPECT_FALSE(chor_infer(P("A.x")));
  EXPECT_FALSE(chor_infer(P("X")));
  EXPECT_FALSE(chor_infer(P("appG (funG F(X : At(A, Int)) : At(A, Int) := X) (A.true)")));
  // a variable bound at B is not in scope at A
  EXPECT_FALSE(chor_infer(P("A.5 ~> B.x; A.x")));
}

TEST(ChorTypes, BooksellerShape) {
  auto src = R"(
    funG Bookseller(F : LocalFun(seller, Int, At(buyer, Bool))) : At(buyer, Int) :=
      buyer.1 ~> seller.b;
      let buyer.decision := appL seller F ((\t:Int. if t < 2 then 30 else 80) b) in
      if buyer.decision
      then buyer[L] ~> seller; seller.(b + 100) ~> buyer.the_date; buyer.the_date
      else buyer[R] ~> seller; buyer.0)";
  EXPECT_EQ(type_of(src), "GlobalFun(LocalFun(seller, Int, At(buyer, Bool)), At(buyer, Int))");
}

TEST(ChorTypes, RecursiveNameIsInScope) {
  EXPECT_EQ(type_of("funG F(X : At(A, Int)) : At(A, Int) := appG F X"), "GlobalFun(At(A, Int), At(A, Int))");
}

TEST(ChorTypes, Preservation) {
  EXPECT_TRUE(check_preservation(P("A.(2 + 3)"), 10).ok);
  EXPECT_TRUE(check_preservation(P("A.5"), 10).ok);
  EXPECT_TRUE(check_preservation(P("if A.true then B.0 else B.0"), 10).ok);
  EXPECT_TRUE(check_preservation(P("appL A (funL F(A.x : Int) : At(B, Int) := A.x ~> B.y; B.y) (1 + 2)"), 50).ok);
}

TEST(ChorTypes, ProgressOnASoundLanguage) {
  EXPECT_EQ(check_progress(P("A.5")), ProgressVerdict::Holds);
  EXPECT_EQ(check_progress(P("if A.(1 < 2) then B.0 else B.1")), ProgressVerdict::Holds);
}

TEST(ChorTypes, UnitypedStuckWitness) {
  auto c = parse_chor<UL>("if A.(\\x. x) then B.0 else B.0");
  EXPECT_TRUE(chor_infer(c));
  EXPECT_FALSE(chor_is_value(c));
  EXPECT_TRUE(enabled_steps(c).empty());
  EXPECT_EQ(check_progress(c), ProgressVerdict::NotApplicable);
  EXPECT_TRUE(check_preservation(c, 10).ok);
}

TEST(ChorTypes, DiagnosticsCarryPaths) {
  auto t = chor_infer(P("A.1 ~> B.x; if B.x then B.0 else B.1"));
  ASSERT_FALSE(t);
  EXPECT_EQ(t.error().path, (Path{0}));
}
