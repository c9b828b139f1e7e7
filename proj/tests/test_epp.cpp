#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using R = Redex<ML>;
using Lb = CtrlLabel<ML>;
Chor<ML> P(const std::string& s) { return parse_chor<ML>(s); }
Ctrl<ML> K(const std::string& s) { return parse_ctrl<ML>(s); }
ML::Expr E(const std::string& s) { return parse_local<ML>(s); }
const Location A{"A"}, B{"B"}, Q{"Q"};

Ctrl<ML> proj(const std::string& s, const Location& l) {
  auto r = project(P(s), l);
  EXPECT_TRUE(r) << s;
  return r ? *r : Ctrl<ML>::unit();
}
}  // namespace

TEST(Projection, Basics) {
  EXPECT_EQ(proj("A.5", A), K("ret(5)"));
  EXPECT_EQ(proj("A.5", B), K("unit"));
  EXPECT_EQ(proj("X", A), K("X"));
  EXPECT_EQ(proj("A.(2 + 3) ~> B.x; B.x", A), K("send (2 + 3) to B; unit"));
  EXPECT_EQ(proj("A.(2 + 3) ~> B.x; B.x", B), K("recv x from A; ret(x)"));
  EXPECT_EQ(proj("A.(2 + 3) ~> B.x; B.x", Q), K("unit"));
  EXPECT_EQ(proj("A[L] ~> B; B.1", A), K("choose L for B; unit"));
  EXPECT_EQ(proj("A[R] ~> B; B.1", B), K("allow A choice |R=> ret(1)"));
}

TEST(Projection, ConditionalsMergeAtOthers) {
  auto src = "B.3 ~> A.x; if A.(x < 5) then A[L] ~> B; B.0 else A[R] ~> B; B.1";
  EXPECT_EQ(proj(src, B), K("send 3 to A; allow A choice |L=> ret(0) |R=> ret(1)"));
  EXPECT_EQ(proj(src, A), K("recv x from B; if x < 5 then choose L for B; unit else choose R for B; unit"));
  EXPECT_EQ(proj("if A.true then B.0 else B.0", B), K("ret(0)"));
}

TEST(Projection, Errors) {
  auto self = project(P("A.1 ~> A.x; A.x"), A);
  ASSERT_FALSE(self);
  EXPECT_EQ(self.error().kind, ProjectionError::Kind::SelfComm);
  auto sync = project(P("A[L] ~> A; A.1"), A);
  ASSERT_FALSE(sync);
  EXPECT_EQ(sync.error().kind, ProjectionError::Kind::SelfSync);
  auto unsync = project(P("if A.true then B.0 else B.1"), B);
  ASSERT_FALSE(unsync);
  EXPECT_EQ(unsync.error().kind, ProjectionError::Kind::MergeFailure);
  EXPECT_EQ(unsync.error().loc, B);
  // the deciding location itself is fine
  EXPECT_TRUE(project(P("if A.true then B.0 else B.1"), A));
  auto sys = project_system(P("if A.true then B.0 else B.1"));
  EXPECT_FALSE(sys);
}

TEST(Projection, Functions) {
  EXPECT_EQ(proj("funG F(X) := X", B), K("funG F(X) := X"));
  EXPECT_EQ(proj("funL F(A.x) := A.x ~> B.y; B.y", A), K("funL F(x) := send x to B; unit"));
  // elsewhere a local function becomes a global one over a fresh parameter
  EXPECT_TRUE(ctrl_alpha_equal(proj("funL F(A.x) := A.x ~> B.y; B.y", B), K("funG F(X) := recv y from A; ret(y)")));
  EXPECT_EQ(proj("appL A (funL F(A.x) := A.x) 3", A), K("appL (funL F(x) := ret(x)) 3"));
  EXPECT_TRUE(ctrl_alpha_equal(proj("appL A (funL F(A.x) := A.x) 3", B), K("appG (funG F(X) := unit) unit")));
  EXPECT_EQ(proj("let A.x := B.1 ~> A.y; A.y in A.x", A), K("let ret x := recv y from B; ret(y) in ret(x)"));
  EXPECT_TRUE(ctrl_alpha_equal(proj("let A.x := B.1 ~> A.y; A.y in A.x", B), K("appG (funG F(X) := unit) (send 1 to A; unit)")));
}

TEST(Projection, Redexes) {
  EXPECT_EQ(project_redex(R::done_e(A, E("1 + 1"), E("2")), A), std::optional(Lb::iota()));
  EXPECT_FALSE(project_redex(R::done_e(A, E("1 + 1"), E("2")), B));
  EXPECT_EQ(project_redex(R::send_v(A, E("5"), B), A), std::optional(Lb::send(E("5"), B)));
  EXPECT_EQ(project_redex(R::send_v(A, E("5"), B), B), std::optional(Lb::recv(A, E("5"))));
  EXPECT_FALSE(project_redex(R::send_v(A, E("5"), B), Q));
  EXPECT_EQ(project_redex(R::sync(A, Dir::R, B), B), std::optional(Lb::allow(A, Dir::R)));
  EXPECT_EQ(project_redex(R::app_global_v(), Q), std::optional(Lb::sync_iota()));
  EXPECT_EQ(project_redex(R::fun(R::send_e(A, E("1 + 1"), E("2"), B)), A), std::optional(Lb::fun(Lb::iota())));
  EXPECT_FALSE(project_redex(R::fun(R::send_e(A, E("1 + 1"), E("2"), B)), B));
}

TEST(Projection, CompileRedex) {
  using S = SystemLabel<ML>;
  EXPECT_EQ(compile_redex(R::send_v(A, E("5"), B)), S::comm(A, E("5"), B));
  EXPECT_EQ(compile_redex(R::sync(A, Dir::L, B)), S::choice(A, Dir::L, B));
  EXPECT_EQ(compile_redex(R::if_t(A)), S::sys_iota());
  EXPECT_EQ(compile_redex(R::def_local_v(A, E("1"))), S::sys_sync_iota());
  EXPECT_EQ(compile_redex(R::arg(R::send_v(A, E("5"), B))), S::comm(A, E("5"), B));
}

TEST(Projection, StepsCorrespond) {
  // each choreography step is matched by the projected system
  auto c = P("A.(2 + 3) ~> B.x; if B.(x < 9) then B[L] ~> A; A.1 else B[R] ~> A; A.2");
  auto sys = project_system(c);
  ASSERT_TRUE(sys);
  auto r = run(c, Scheduler::First, 50);
  auto s = simulate(*sys, Scheduler::First, 50);
  EXPECT_EQ(s.verdict, SimVerdict::AllValues);
  EXPECT_EQ(s.final.at(A), K("ret(1)"));
  EXPECT_EQ(r.final, P("A.1"));
  std::vector<SystemLabel<ML>> comms;
  for (auto& rd : r.history)
    if (compile_redex(rd).kind != SystemLabel<ML>::Kind::SysIota) comms.push_back(compile_redex(rd));
  std::vector<SystemLabel<ML>> seen;
  for (auto& l : s.trace)
    if (l.kind != SystemLabel<ML>::Kind::SysIota) seen.push_back(l);
  EXPECT_EQ(comms, seen);
}
