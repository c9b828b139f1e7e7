#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using K = Ctrl<ML>;
using Lb = CtrlLabel<ML>;
K P(const std::string& s) { return parse_ctrl<ML>(s); }
ML::Expr E(const std::string& s) { return parse_local<ML>(s); }
const Location A{"A"}, B{"B"};

std::vector<std::string> labels(const K& c, std::vector<ML::Expr> vals = {}) {
  std::vector<std::string> out;
  for (auto& s : ctrl_enabled_steps(c, vals)) out.push_back(print_label(s.label));
  return out;
}
}  // namespace

TEST(Control, Values) {
  EXPECT_TRUE(ctrl_is_value(P("unit")));
  EXPECT_TRUE(ctrl_is_value(P("ret(5)")));
  EXPECT_FALSE(ctrl_is_value(P("ret(2 + 3)")));
  EXPECT_TRUE(ctrl_is_value(P("funG F(X) := X")));
  EXPECT_FALSE(ctrl_is_value(P("send 5 to B; unit")));
}

TEST(Control, FreeVariables) {
  EXPECT_EQ(ctrl_fv_global(P("appG F X")), (NameSet{"F", "X"}));
  EXPECT_TRUE(ctrl_fv_global(P("funG F(X) := appG F X")).empty());
  EXPECT_EQ(ctrl_fv_local(P("recv x from A; ret(x + y)")), NameSet{"y"});
  EXPECT_TRUE(ctrl_fv_local(P("let ret x := ret(1) in ret(x)")).empty());
}

TEST(Control, LocalRules) {
  EXPECT_EQ(labels(P("ret(2 + 3)")), std::vector<std::string>{"iota"});
  EXPECT_EQ(ctrl_step_with(P("ret(2 + 3)"), Lb::iota()), std::optional(P("ret(5)")));
  EXPECT_EQ(ctrl_step_with(P("if true then ret(0) else ret(1)"), Lb::iota()), std::optional(P("ret(0)")));
  EXPECT_EQ(ctrl_step_with(P("if false then ret(0) else ret(1)"), Lb::iota()), std::optional(P("ret(1)")));
  EXPECT_TRUE(labels(P("unit")).empty());
}

TEST(Control, Communication) {
  EXPECT_EQ(labels(P("send 5 to B; unit")), std::vector<std::string>{"send(5, B)"});
  EXPECT_EQ(labels(P("send (2 + 3) to B; unit")), std::vector<std::string>{"iota"});
  EXPECT_EQ(ctrl_step_with(P("recv x from A; ret(x + 1)"), Lb::recv(A, E("4"))), std::optional(P("ret(4 + 1)")));
  EXPECT_TRUE(labels(P("recv x from A; ret(x)")).empty());
  EXPECT_EQ(labels(P("recv x from A; ret(x)"), {E("1"), E("2")}).size(), 2u);
}

TEST(Control, Choices) {
  EXPECT_EQ(labels(P("choose L for B; unit")), std::vector<std::string>{"choose(L, B)"});
  auto lr = labels(P("allow A choice |L=> ret(0) |R=> ret(1)"));
  EXPECT_EQ(lr, (std::vector<std::string>{"allow(A, L)", "allow(A, R)"}));
  EXPECT_EQ(labels(P("allow A choice |R=> ret(1)")), std::vector<std::string>{"allow(A, R)"});
  EXPECT_EQ(ctrl_step_with(P("allow A choice |L=> ret(0) |R=> ret(1)"), Lb::allow(A, Dir::R)), std::optional(P("ret(1)")));
}

TEST(Control, ChoiceLabels) {
  EXPECT_TRUE(is_choice_label(Lb::choose(Dir::L, B)));
  EXPECT_TRUE(is_choice_label(Lb::allow(A, Dir::R)));
  EXPECT_TRUE(is_choice_label(Lb::fun(Lb::arg(Lb::allow(A, Dir::R)))));
  EXPECT_FALSE(is_choice_label(Lb::iota()));
  EXPECT_FALSE(is_choice_label(Lb::send(E("1"), B)));
  EXPECT_FALSE(is_choice_label(Lb::fun(Lb::sync_iota())));
}

TEST(Control, Synchronised) {
  EXPECT_EQ(ctrl_step_with(P("let ret x := ret(5) in ret(x + 1)"), Lb::sync_iota()), std::optional(P("ret(5 + 1)")));
  EXPECT_EQ(labels(P("let ret x := ret(2 + 3) in ret(x)")), std::vector<std::string>{"Arg(iota)"});
  EXPECT_EQ(ctrl_step_with(P("appL (funL F(x) := ret(x)) 3"), Lb::sync_iota()), std::optional(P("ret(3)")));
  EXPECT_EQ(ctrl_step_with(P("appG (funG F(X) := X) unit"), Lb::sync_iota()), std::optional(P("unit")));
  // the body sees the function under its own name
  auto rec = P("funL F(x) := appL F x");
  auto n = ctrl_step_with(K::app_local(rec, E("1")), Lb::sync_iota());
  ASSERT_TRUE(n);
  EXPECT_EQ(*n, K::app_local(rec, E("1")));
  EXPECT_EQ(labels(P("appG (funG F(X) := X) (send 1 to B; unit)")), std::vector<std::string>{"Arg(send(1, B))"});
}

TEST(Control, CaptureAvoidingLocalSubstitution) {
  auto r = ctrl_subst_local(P("recv y from A; ret(x + y)"), "x", ML::var("y"));
  EXPECT_EQ(ctrl_fv_local(r), NameSet{"y"});
  EXPECT_TRUE(ctrl_alpha_equal(r, P("recv z from A; ret(y + z)")));
}

TEST(Control, PrintParseRoundTrip) {
  for (auto* s : {"send 3 to A; allow A choice |L=> ret(0) |R=> ret(1)", "recv x from B; if x < 1 then choose L for B; unit else choose R for B; unit",
                  "let ret y := appL (funL F(x) := ret(x + 1)) 2 in ret(y)", "appG (funG F(X) := appG F X) unit"}) {
    auto c = P(s);
    EXPECT_EQ(P(print_ctrl(c)), c) << s;
  }
}
