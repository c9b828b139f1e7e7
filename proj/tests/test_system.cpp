#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using Lb = CtrlLabel<ML>;
using S = SystemLabel<ML>;
Ctrl<ML> K(const std::string& s) { return parse_ctrl<ML>(s); }
ML::Expr E(const std::string& s) { return parse_local<ML>(s); }
const Location A{"A"}, B{"B"};

System<ML> sys(const std::string& src) {
  auto s = parse_system_file<ML>(src);
  EXPECT_TRUE(s) << src;
  return s ? *s : System<ML>{};
}
}  // namespace

TEST(System, LabelMerge) {
  EXPECT_EQ(label_merge(Lb::iota(), Lb::iota()), std::optional(S::sys_iota()));
  EXPECT_EQ(label_merge(Lb::send(E("5"), B), Lb::recv(A, E("5"))), std::optional(S::comm(A, E("5"), B)));
  EXPECT_FALSE(label_merge(Lb::send(E("5"), B), Lb::recv(A, E("6"))));
  EXPECT_EQ(label_merge(Lb::choose(Dir::R, B), Lb::allow(A, Dir::R)), std::optional(S::choice(A, Dir::R, B)));
  EXPECT_FALSE(label_merge(Lb::choose(Dir::L, B), Lb::allow(A, Dir::R)));
  EXPECT_EQ(label_merge(Lb::fun(Lb::sync_iota()), Lb::fun(Lb::sync_iota())), std::optional(S::sys_sync_iota()));
  EXPECT_FALSE(label_merge(Lb::fun(Lb::sync_iota()), Lb::arg(Lb::sync_iota())));
  EXPECT_FALSE(label_merge(Lb::iota(), Lb::sync_iota()));
}

TEST(System, CommunicationStep) {
  auto s = sys("at A { send 5 to B; ret(0) } at B { recv x from A; ret(x + 1) }");
  auto steps = sys_enabled_steps(s);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].label, S::comm(A, E("5"), B));
  EXPECT_EQ(steps[0].next.at(B), K("ret(5 + 1)"));
  EXPECT_EQ(steps[0].next.at(A), K("ret(0)"));
}

TEST(System, SynchronisedStepAdvancesEveryone) {
  auto s = sys("at A { let ret x := ret(1) in ret(x) } at B { let ret y := ret(1) in ret(y) }");
  auto steps = sys_enabled_steps(s);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].label, S::sys_sync_iota());
  EXPECT_EQ(steps[0].next.at(A), K("ret(1)"));
  EXPECT_EQ(steps[0].next.at(B), K("ret(1)"));
  // one location not ready blocks the synchronisation
  auto s2 = sys("at A { let ret x := ret(1) in ret(x) } at B { let ret y := recv z from A; unit in unit }");
  EXPECT_TRUE(sys_enabled_steps(s2).empty());
}

TEST(System, Deadlock) {
  auto s = sys("at A { recv x from B; ret(x) } at B { recv y from A; ret(y) }");
  EXPECT_FALSE(is_terminal(s));
  EXPECT_TRUE(sys_enabled_steps(s).empty());
  EXPECT_EQ(simulate(s, Scheduler::First, 10).verdict, SimVerdict::Deadlock);
  EXPECT_TRUE(sys_explore(s, 100).deadlock.has_value());
}

TEST(System, Terminal) {
  EXPECT_TRUE(is_terminal(System<ML>{}));
  EXPECT_TRUE(is_terminal(sys("at A { ret(1) } at B { unit }")));
  EXPECT_FALSE(is_terminal(sys("at A { ret(1 + 1) }")));
}

TEST(System, ChoiceStepAndTrace) {
  auto s = sys("at A { choose L for B; ret(0) } at B { allow A choice |L=> ret(1) |R=> ret(2) }");
  auto r = simulate(s, Scheduler::First, 10);
  EXPECT_EQ(r.verdict, SimVerdict::AllValues);
  EXPECT_EQ(r.final.at(B), K("ret(1)"));
  ASSERT_EQ(r.trace.size(), 1u);
  auto line = trace_jsonl(r.trace);
  auto j = nlohmann::json::parse(line.substr(0, line.find('\n')));
  EXPECT_EQ(j["kind"], "Choice");
  EXPECT_EQ(j["from"], "A");
  EXPECT_EQ(j["to"], "B");
  EXPECT_EQ(j["index"], 0);
}

TEST(System, ExploreCountsStates) {
  auto s = sys("at A { ret(1 + 1) } at B { ret(2 + 2) }");
  auto r = sys_explore(s, 100);
  EXPECT_EQ(r.states, 4u);
  EXPECT_EQ(r.terminal, 1u);
  EXPECT_FALSE(r.deadlock);
  EXPECT_FALSE(r.truncated);
  EXPECT_TRUE(sys_explore(s, 2).truncated);
}
