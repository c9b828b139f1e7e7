#include <gtest/gtest.h>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {
using ML = MiniLambda;
using K = Ctrl<ML>;
K P(const std::string& s) { return parse_ctrl<ML>(s); }
std::optional<K> M(const std::string& a, const std::string& b) { return merge(P(a), P(b)); }
}  // namespace

TEST(Merge, IdenticalPrograms) {
  EXPECT_EQ(M("ret(1)", "ret(1)"), std::optional(P("ret(1)")));
  EXPECT_EQ(M("unit", "unit"), std::optional(P("unit")));
  EXPECT_FALSE(M("ret(1)", "ret(2)"));
  EXPECT_FALSE(M("unit", "ret(1)"));
  EXPECT_FALSE(M("send 1 to B; unit", "send 2 to B; unit"));
}

TEST(Merge, AllowBranchesCombine) {
  EXPECT_EQ(M("allow A choice |L=> ret(0)", "allow A choice |R=> ret(1)"), std::optional(P("allow A choice |L=> ret(0) |R=> ret(1)")));
  EXPECT_EQ(M("allow A choice |R=> ret(1)", "allow A choice |L=> ret(0)"), std::optional(P("allow A choice |L=> ret(0) |R=> ret(1)")));
  EXPECT_EQ(M("allow A choice |L=> ret(0)", "allow A choice |L=> ret(0) |R=> ret(1)"), std::optional(P("allow A choice |L=> ret(0) |R=> ret(1)")));
  EXPECT_FALSE(M("allow A choice |L=> ret(0)", "allow A choice |L=> ret(1)"));
  EXPECT_FALSE(M("allow A choice |L=> ret(0)", "allow B choice |R=> ret(1)"));
}

TEST(Merge, Congruence) {
  EXPECT_EQ(M("send 3 to A; allow A choice |L=> ret(0)", "send 3 to A; allow A choice |R=> ret(1)"),
            std::optional(P("send 3 to A; allow A choice |L=> ret(0) |R=> ret(1)")));
  EXPECT_EQ(M("if true then allow A choice |L=> unit else unit", "if true then allow A choice |R=> unit else unit"),
            std::optional(P("if true then allow A choice |L=> unit |R=> unit else unit")));
  EXPECT_FALSE(M("choose L for B; unit", "choose R for B; unit"));
}

TEST(Merge, BindersUpToRenaming) {
  auto m = M("recv x from A; ret(x)", "recv y from A; ret(y)");
  ASSERT_TRUE(m);
  EXPECT_TRUE(ctrl_alpha_equal(*m, P("recv z from A; ret(z)")));
  EXPECT_FALSE(M("recv x from A; ret(x)", "recv y from A; ret(x)"));
}

TEST(Merge, AlgebraOnGeneratedPrograms) {
  CtrlGen<ML> g(11, 3);
  int merged = 0;
  for (int i = 0; i < 300; ++i) {
    auto fam = g.family(3, 4);
    auto &p = fam[0], &q = fam[1], &r = fam[2];
    // idempotent
    ASSERT_TRUE(merge(p, p));
    EXPECT_TRUE(ctrl_alpha_equal(*merge(p, p), p));
    // commutative
    auto pq = merge(p, q), qp = merge(q, p);
    ASSERT_EQ(pq.has_value(), qp.has_value());
    if (pq) EXPECT_TRUE(ctrl_alpha_equal(*pq, *qp));
    // associative
    auto l = pq ? merge(*pq, r) : std::nullopt;
    auto qr = merge(q, r);
    auto rr = qr ? merge(p, *qr) : std::nullopt;
    ASSERT_EQ(l.has_value(), rr.has_value());
    if (l) {
      ++merged;
      EXPECT_TRUE(ctrl_alpha_equal(*l, *rr));
      // the merge is an upper bound
      EXPECT_TRUE(lnd(p, *l));
      EXPECT_TRUE(lnd(q, *l));
    }
  }
  EXPECT_GT(merged, 30);
}

TEST(Lnd, Examples) {
  EXPECT_TRUE(lnd(P("allow A choice |L=> ret(0)"), P("allow A choice |L=> ret(0) |R=> ret(1)")));
  EXPECT_TRUE(lnd(P("allow A choice |R=> ret(1)"), P("allow A choice |L=> ret(0) |R=> ret(1)")));
  EXPECT_FALSE(lnd(P("allow A choice |L=> ret(0) |R=> ret(1)"), P("allow A choice |L=> ret(0)")));
  EXPECT_TRUE(lnd(P("ret(1)"), P("ret(1)")));
  EXPECT_FALSE(lnd(P("ret(1)"), P("ret(2)")));
  EXPECT_TRUE(lnd(P("recv x from A; ret(x)"), P("recv y from A; ret(y)")));
}

TEST(Lnd, MergeIsNotMonotone) {
  // e1 below e2 and e3 below e4, e1 merges with e3, yet e2 and e4 do not merge
  auto e1 = P("allow A choice |R=> unit");
  auto e2 = P("allow A choice |L=> ret(0) |R=> unit");
  auto e4 = P("allow A choice |L=> ret(1) |R=> unit");
  EXPECT_TRUE(lnd(e1, e2));
  EXPECT_TRUE(lnd(e1, e4));
  EXPECT_TRUE(merge(e1, e1));
  EXPECT_FALSE(merge(e2, e4));
  GenConfig cfg;
  cfg.seed = 1;
  auto rep = check_theorem<ML>("merge-monotonicity", cfg, 300);
  EXPECT_GT(rep.failed, 0);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.counterexample.empty());
}
