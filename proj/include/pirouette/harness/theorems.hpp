#pragma once

#include <chrono>
#include <functional>

#include "pirouette/equivalence.hpp"
#include "pirouette/harness/gen.hpp"

namespace pirouette {

enum class Outcome { Pass, Fail, Discard, Inconclusive };

struct CaseResult {
  Outcome outcome = Outcome::Pass;
  std::string detail;
  static CaseResult pass() { return {}; }
  static CaseResult fail(std::string d) { return {Outcome::Fail, std::move(d)}; }
  static CaseResult discard(std::string d = {}) { return {Outcome::Discard, std::move(d)}; }
  static CaseResult inconclusive(std::string d = {}) { return {Outcome::Inconclusive, std::move(d)}; }
};

struct TheoremReport {
  std::string name;
  std::string language;
  int cases = 0, passed = 0, failed = 0, discarded = 0, inconclusive = 0;
  bool not_applicable = false;
  bool hypothesis_unsatisfiable = false;
  std::string counterexample;
  double seconds = 0;
  bool ok() const { return failed == 0; }
  std::string summary() const {
    std::string s = name + " [" + language + "]: ";
    if (not_applicable) return s + "not applicable (local language is not sound)";
    if (hypothesis_unsatisfiable) return s + "hypothesis unsatisfiable under config";
    s += std::to_string(passed) + "/" + std::to_string(cases) + " passed";
    if (discarded) s += ", " + std::to_string(discarded) + " discarded";
    if (inconclusive) s += ", " + std::to_string(inconclusive) + " inconclusive";
    if (failed) s += ", " + std::to_string(failed) + " FAILED";
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", seconds);
    return s + buf;
  }
};

inline const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {
      "relative-preservation", "relative-progress",  "equivalence-respects-types", "simulates-equivalence",
      "weak-semantics",        "equivalence-begets-equality", "lift-lower-system", "local-completeness",
      "global-completeness",   "local-soundness",    "global-soundness",           "deadlock-freedom",
      "structural-rules",      "equiv-syntactic-ops", "merge-algebra",             "merge-simulation",
      "projection-syntactic-ops", "lnd-order",       "merge-monotonicity",         "local-language-laws",
      "semantics-laws"};
  return names;
}

namespace detail {

template <class L>
std::optional<System<L>> proj_all(const Chor<L>& c, const LocSet& locs) {
  auto r = project_system(c, locs);
  if (!r) return std::nullopt;
  return *r;
}

template <class L>
LocSet theorem_locs(const Chor<L>& c, const GenConfig& cfg) {
  LocSet s = location_names(c);
  for (auto& l : location_pool(cfg.locations)) s.insert(l);
  return s;
}

template <class L>
std::vector<LocSet> block_sets(const Chor<L>& c) {
  std::vector<LocSet> out{{}};
  auto names = location_names(c);
  for (auto& l : names) out.push_back({l});
  if (names.size() >= 2) out.push_back({*names.begin(), *std::next(names.begin())});
  return out;
}

template <class L>
std::string ctrl_key(const Ctrl<L>& e) {
  return print_ctrl(ctrl_canonicalize(e));
}

template <class L>
std::vector<typename L::Expr> recv_values_for(const CtrlLabel<L>& lab) {
  if (lab.core().kind == CtrlLabel<L>::Kind::Recv) return {lab.core().v};
  return {};
}

// Does `e` step with exactly `lab` to something alpha-equal to `target`?
template <class L>
bool ctrl_steps_to(const Ctrl<L>& e, const CtrlLabel<L>& lab, const Ctrl<L>& target) {
  for (auto& s : ctrl_enabled_steps(e, recv_values_for(lab)))
    if (s.label == lab && ctrl_alpha_equal(s.next, target)) return true;
  return false;
}

// The full swap-equivalence class of c, if it has at most `max` members.
template <class L>
std::optional<std::unordered_set<std::string>> equiv_class(const Chor<L>& c, std::size_t max) {
  std::unordered_set<std::string> seen{canon_key(c)};
  std::vector<Chor<L>> front{c};
  while (!front.empty()) {
    std::vector<Chor<L>> next;
    for (auto& x : front)
      for (auto& rw : swap_rewrites(x))
        if (seen.insert(canon_key(rw.result)).second) {
          if (seen.size() > max) return std::nullopt;
          next.push_back(rw.result);
        }
    front = std::move(next);
  }
  return seen;
}

// Equivalence decided exactly when one side's class is small enough; otherwise bounded search.
template <class L>
EquivVerdict decide_equiv(const Chor<L>& a, const Chor<L>& b, std::size_t max = 4000) {
  if (auto cls = equiv_class(a, max)) return cls->count(canon_key(b)) ? EquivVerdict::Equivalent : EquivVerdict::NotFound;
  auto v = equiv_search(a, b, 8, max);
  return v == EquivVerdict::Equivalent ? v : EquivVerdict::Truncated;
}

inline GenConfig case_config(const GenConfig& base, int i) {
  GenConfig c = base;
  c.seed = base.seed * 1000003ULL + static_cast<std::uint64_t>(i) * 7919ULL + 17;
  return c;
}

// ---- choreography properties; each receives the generated closed, typed term

template <class L>
using ChorProp = std::function<CaseResult(const Chor<L>&, const ChorType<L>&, const GenConfig&)>;

template <class L>
CaseResult prop_preservation(const Chor<L>& c, const ChorType<L>&, const GenConfig&) {
  auto r = check_preservation(c, 60);
  return r.ok ? CaseResult::pass() : CaseResult::fail(r.detail);
}

template <class L>
CaseResult prop_progress(const Chor<L>& c, const ChorType<L>&, const GenConfig&) {
  auto ex = explore(c, 200);
  for (auto& [s, st] : ex.outcomes)
    if (st == RunStatus::Stuck) return CaseResult::fail("reachable stuck state " + print_chor(s));
  return CaseResult::pass();
}

template <class L>
CaseResult prop_equiv_types(const Chor<L>& c, const ChorType<L>& t, const GenConfig& cfg) {
  Chor<L> v = random_equiv_variant(c, cfg.seed, 5);
  auto tv = chor_infer(v);
  if (!tv || !(*tv == t))
    return CaseResult::fail("variant " + print_chor(v) + (tv ? " has type " + print_ctype(*tv) : " is ill-typed: " + tv.error().str()));
  return CaseResult::pass();
}

template <class L>
CaseResult prop_simulates_equiv(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  auto rws = swap_rewrites(c);
  if (rws.empty()) return CaseResult::discard("no swap applies");
  Rng rng(cfg.seed);
  const auto& rw = rws[rng.below(rws.size())];
  bool inconclusive = false;
  for (auto& B : block_sets(c)) {
    auto theirs = enabled_steps(rw.result, B);
    for (auto& s : enabled_steps(c, B)) {
      bool found = false;
      for (auto& s2 : theirs) {
        if (!(s2.redex == s.redex)) continue;
        auto v = equiv_search(s.next, s2.next, 3);
        if (v == EquivVerdict::Equivalent) {
          found = true;
          break;
        }
        if (v == EquivVerdict::Truncated) inconclusive = true;
      }
      if (!found && !inconclusive)
        return CaseResult::fail("step " + print_redex(s.redex) + " of " + print_chor(c) + " has no match after " +
                                swap_rule_name(rw.rule) + " at " + path_str(rw.path) + " giving " + print_chor(rw.result));
    }
  }
  return inconclusive ? CaseResult::inconclusive() : CaseResult::pass();
}

template <class L>
CaseResult prop_weak(const Chor<L>& c, const ChorType<L>&, const GenConfig&) {
  auto weak = weak_enabled_steps(c);
  auto eq = equiv_semantics_step(c, 4, 3000);
  bool inconclusive = false;
  auto matches = [&](const Chor<L>& x, const auto& pool) {
    for (auto& s : pool) {
      auto v = decide_equiv(x, s.next);
      if (v == EquivVerdict::Equivalent) return true;
      if (v == EquivVerdict::Truncated) inconclusive = true;
    }
    return false;
  };
  for (auto& w : weak)
    if (!matches(w.next, eq)) {
      // The bounded closure may be too shallow to expose a deep redex.
      if (!equiv_class(c, 3000)) return CaseResult::inconclusive();
      auto deep = equiv_semantics_step(c, 1000, 3000);
      if (!matches(w.next, deep) && !inconclusive)
        return CaseResult::fail("weak step " + print_redex(w.redex) + " of " + print_chor(c) + " has no equivalence-based counterpart");
    }
  for (auto& e : eq)
    if (!matches(e.next, weak) && !inconclusive)
      return CaseResult::fail("equivalence-based step " + print_redex(e.redex) + " of " + print_chor(c) + " to " +
                              print_chor(e.next) + " has no weak counterpart");
  return inconclusive ? CaseResult::inconclusive() : CaseResult::pass();
}

template <class L>
CaseResult prop_begets_equality(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  LocSet locs = theorem_locs(c, cfg);
  auto p1 = proj_all(c, locs);
  if (!p1) return CaseResult::discard("not projectable");
  Chor<L> v = random_equiv_variant(c, cfg.seed ^ 0x5eedULL, 5);
  for (auto& l : locs) {
    auto q = project(v, l);
    if (!q) return CaseResult::fail("variant " + print_chor(v) + " does not project: " + q.error().str());
    if (ctrl_key(p1->at(l)) != ctrl_key(*q))
      return CaseResult::fail("at " + l.name + ": " + print_chor(c) + " projects to " + print_ctrl(p1->at(l)) + " but " +
                              print_chor(v) + " projects to " + print_ctrl(*q));
  }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_lift_lower(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  LocSet locs = theorem_locs(c, cfg);
  auto p1 = proj_all(c, locs);
  if (!p1) return CaseResult::discard("not projectable");
  CtrlGen<L> cg(cfg.seed, cfg.locations);
  System<L> p2;
  for (auto& [l, e] : *p1) p2[l] = cg.widen(e);
  if (!sys_lnd(*p1, p2)) return CaseResult::fail("widened system is not above the projection");
  auto s2 = sys_enabled_steps(p2);
  for (auto& st : sys_enabled_steps(*p1)) {
    bool ok = false;
    for (auto& t : s2)
      if (t.label == st.label && sys_lnd(st.next, t.next)) ok = true;
    if (!ok) return CaseResult::fail("lifting: step " + print_sys_label(st.label) + " of\n" + print_system(*p1) + "has no match in\n" + print_system(p2));
  }
  auto s1 = sys_enabled_steps(*p1);
  for (auto& t : s2) {
    bool ok = false;
    for (auto& st : s1)
      if (t.label == st.label && sys_lnd(st.next, t.next)) ok = true;
    if (!ok) return CaseResult::fail("lowering: step " + print_sys_label(t.label) + " of\n" + print_system(p2) + "has no match in\n" + print_system(*p1));
  }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_local_completeness(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  LocSet locs = theorem_locs(c, cfg);
  auto p1 = proj_all(c, locs);
  if (!p1) return CaseResult::discard("not projectable");
  for (auto& B : block_sets(c))
    for (auto& s : enabled_steps(c, B)) {
      auto p2 = proj_all(s.next, locs);
      if (!p2) return CaseResult::fail("successor " + print_chor(s.next) + " is not projectable");
      for (auto& l : locs) {
        auto lab = project_redex(s.redex, l);
        const auto &e1 = p1->at(l), &e2 = p2->at(l);
        if (lab) {
          if (!ctrl_steps_to(e1, *lab, e2))
            return CaseResult::fail("at " + l.name + ": " + print_ctrl(e1) + " does not step with " + print_label(*lab) + " to " +
                                    print_ctrl(e2) + " (choreography step " + print_redex(s.redex) + " from " + print_chor(c) + ")");
        } else if (!lnd(e2, e1)) {
          return CaseResult::fail("at " + l.name + ": " + print_ctrl(e2) + " is not below " + print_ctrl(e1) + " after " +
                                  print_redex(s.redex) + " from " + print_chor(c));
        }
      }
    }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_global_completeness(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  LocSet locs = theorem_locs(c, cfg);
  auto p1 = proj_all(c, locs);
  if (!p1) return CaseResult::discard("not projectable");
  auto sys = sys_enabled_steps(*p1);
  for (auto& s : enabled_steps(c)) {
    auto p2 = proj_all(s.next, locs);
    if (!p2) return CaseResult::fail("successor " + print_chor(s.next) + " is not projectable");
    auto want = compile_redex(s.redex);
    bool ok = false;
    for (auto& st : sys)
      if (st.label == want && sys_lnd(*p2, st.next)) ok = true;
    if (!ok) return CaseResult::fail("no system step " + print_sys_label(want) + " for " + print_redex(s.redex) + " from " + print_chor(c));
  }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_local_soundness(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  using SK = typename SystemLabel<L>::Kind;
  LocSet locs = theorem_locs(c, cfg);
  auto p1 = proj_all(c, locs);
  if (!p1) return CaseResult::discard("not projectable");
  struct Succ {
    Redex<L> redex;
    System<L> proj;
  };
  std::vector<Succ> succs;
  for (auto& s : enabled_steps(c)) {
    auto p2 = proj_all(s.next, locs);
    if (!p2) return CaseResult::fail("successor " + print_chor(s.next) + " is not projectable");
    succs.push_back({s.redex, *p2});
  }
  auto here = [&](const Succ& s, const Location& l, const CtrlLabel<L>& lab) {
    auto pr = project_redex(s.redex, l);
    return pr && *pr == lab;
  };
  for (auto& l : locs)
    for (auto& st : ctrl_enabled_steps(p1->at(l))) {
      auto m = label_merge(st.label, st.label);
      if (!m || m->kind != SK::SysIota) continue;
      bool ok = false;
      for (auto& s : succs)
        if (here(s, l, st.label) && ctrl_alpha_equal(s.proj.at(l), st.next)) ok = true;
      if (!ok) return CaseResult::fail("internal step " + print_label(st.label) + " at " + l.name + " of " + print_ctrl(p1->at(l)) + " has no choreography counterpart in " + print_chor(c));
    }
  for (auto& a : locs)
    for (auto& st : ctrl_enabled_steps(p1->at(a))) {
      const auto& core = st.label.core();
      using LK = typename CtrlLabel<L>::Kind;
      if (core.kind != LK::Send && core.kind != LK::Choose) continue;
      const Location& b = core.loc;
      if (!locs.count(b) || b == a) continue;
      std::vector<typename L::Expr> vals;
      if (core.kind == LK::Send) vals.push_back(core.v);
      for (auto& rt : ctrl_enabled_steps(p1->at(b), vals)) {
        auto m = label_merge(st.label, rt.label);
        if (!m || m->from != a) continue;
        bool ok = false;
        for (auto& s : succs)
          if (here(s, a, st.label) && here(s, b, rt.label) && ctrl_alpha_equal(s.proj.at(a), st.next) &&
              ctrl_alpha_equal(s.proj.at(b), rt.next))
            ok = true;
        if (!ok) return CaseResult::fail("paired step " + print_sys_label(*m) + " has no choreography counterpart in " + print_chor(c));
      }
    }
  // Synchronised steps: every location steps with one label.
  std::vector<std::string> tried;
  for (auto& st : ctrl_enabled_steps(p1->begin()->second)) {
    auto m = label_merge(st.label, st.label);
    if (!m || m->kind != SK::SysSyncIota) continue;
    bool everyone = true;
    for (auto& l : locs) {
      bool has = false;
      for (auto& t : ctrl_enabled_steps(p1->at(l)))
        if (t.label == st.label) has = true;
      everyone = everyone && has;
    }
    if (!everyone) continue;
    bool ok = false;
    for (auto& s : succs) {
      bool all = true;
      for (auto& l : locs) all = all && here(s, l, st.label);
      ok = ok || all;
    }
    if (!ok) return CaseResult::fail("synchronised step " + print_label(st.label) + " has no choreography counterpart in " + print_chor(c));
  }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_global_soundness(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  LocSet locs = theorem_locs(c, cfg);
  auto p1 = proj_all(c, locs);
  if (!p1) return CaseResult::discard("not projectable");
  std::vector<std::pair<Redex<L>, System<L>>> succs;
  for (auto& s : enabled_steps(c)) {
    auto p2 = proj_all(s.next, locs);
    if (!p2) return CaseResult::fail("successor " + print_chor(s.next) + " is not projectable");
    succs.push_back({s.redex, *p2});
  }
  for (auto& st : sys_enabled_steps(*p1)) {
    bool ok = false;
    for (auto& [r, p2] : succs)
      if (compile_redex(r) == st.label && sys_lnd(p2, st.next)) ok = true;
    if (!ok) return CaseResult::fail("system step " + print_sys_label(st.label) + " of\n" + print_system(*p1) + "has no choreography counterpart in " + print_chor(c));
  }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_deadlock_freedom(const Chor<L>& c, const ChorType<L>&, const GenConfig& cfg) {
  LocSet locs = theorem_locs(c, cfg);
  auto p = proj_all(c, locs);
  if (!p) return CaseResult::discard("not projectable");
  for (std::uint64_t k = 0; k < 3; ++k) {
    auto r = simulate(*p, Scheduler::Random, 10000, cfg.seed + k);
    if (r.verdict == SimVerdict::Deadlock)
      return CaseResult::fail("deadlock after " + std::to_string(r.trace.size()) + " steps:\n" + print_system(r.final) + "from " + print_chor(c));
    if (r.verdict == SimVerdict::FuelExhausted && sys_enabled_steps(r.final).empty())
      return CaseResult::fail("fuel exhausted in a state with no step");
  }
  return CaseResult::pass();
}

// ---- properties that need open terms

template <class L>
TypeCtx<L> random_ctx(ChorGen<L>& g) {
  TypeCtx<L> ctx;
  int nl = static_cast<int>(g.rng.below(4)), nc = static_cast<int>(g.rng.below(3));
  for (int i = 0; i < nl; ++i) ctx = ctx.bind_local(g.loc(), g.local_name(), L::gen_type(g.rng));
  for (int i = 0; i < nc; ++i) ctx = ctx.bind_chor(g.chor_name(), g.ctype(0));
  return ctx;
}

template <class L>
std::optional<typename L::Expr> closed_value_of(const typename L::Type& t) {
  for (auto& v : L::sample_values()) {
    auto vt = L::infer({}, v);
    if (vt && *vt == t) return v;
  }
  return std::nullopt;
}

template <class L>
CaseResult prop_structural(const GenConfig& cfg) {
  ChorGen<L> g(cfg);
  TypeCtx<L> ctx = random_ctx(g);
  auto [c, t] = gen_typed_chor_in<L>(cfg, ctx);
  auto same = [&](const TypeCtx<L>& g2, const char* rule) -> std::optional<CaseResult> {
    auto r = chor_infer(g2, c);
    if (!r || !(*r == t)) return CaseResult::fail(std::string(rule) + " changed the type of " + print_chor(c));
    return std::nullopt;
  };
  TypeCtx<L> w = ctx;
  auto pos = w.gamma.begin() + static_cast<long>(g.rng.below(w.gamma.size() + 1));
  w.gamma.insert(pos, {g.loc(), "unused_w", L::gen_type(g.rng)});
  if (auto f = same(w, "local weakening")) return *f;
  w = ctx;
  w.delta.insert(w.delta.begin() + static_cast<long>(g.rng.below(w.delta.size() + 1)), {"UnusedW", g.ctype(0)});
  if (auto f = same(w, "global weakening")) return *f;
  for (std::size_t i = 0; i + 1 < ctx.gamma.size(); ++i) {
    auto& [l1, x1, t1] = ctx.gamma[i];
    auto& [l2, x2, t2] = ctx.gamma[i + 1];
    if (l1 == l2 && x1 == x2) continue;
    TypeCtx<L> e = ctx;
    std::swap(e.gamma[i], e.gamma[i + 1]);
    if (auto f = same(e, "local exchange")) return *f;
  }
  for (std::size_t i = 0; i + 1 < ctx.delta.size(); ++i) {
    if (ctx.delta[i].first == ctx.delta[i + 1].first) continue;
    TypeCtx<L> e = ctx;
    std::swap(e.delta[i], e.delta[i + 1]);
    if (auto f = same(e, "global exchange")) return *f;
  }
  TypeCtx<L> s;
  auto used = fev(c);
  for (auto& b : ctx.gamma)
    if (used.count({std::get<0>(b), std::get<1>(b)})) s.gamma.push_back(b);
  auto usedc = fcv(c);
  for (auto& b : ctx.delta)
    if (usedc.count(b.first)) s.delta.push_back(b);
  if (auto f = same(s, "strengthening")) return *f;
  return CaseResult::pass();
}

template <class L>
CaseResult prop_equiv_syntactic(const GenConfig& cfg) {
  ChorGen<L> g(cfg);
  TypeCtx<L> ctx = random_ctx(g);
  auto [c, t] = gen_typed_chor_in<L>(cfg, ctx);
  Chor<L> v = random_equiv_variant(c, cfg.seed, 4);
  if (fev(c) != fev(v)) return CaseResult::fail("free local variables differ for " + print_chor(c) + " and " + print_chor(v));
  if (fcv(c) != fcv(v)) return CaseResult::fail("free choreography variables differ");
  if (location_names(c) != location_names(v)) return CaseResult::fail("location names differ");
  if (chor_is_value(c) != chor_is_value(v)) return CaseResult::fail("value predicate differs");
  bool inconclusive = false;
  if (!ctx.gamma.empty()) {
    auto& [l, x, ty] = ctx.gamma[g.rng.below(ctx.gamma.size())];
    if (auto val = closed_value_of<L>(ty)) {
      auto verdict = decide_equiv(subst_local(c, l, x, *val), subst_local(v, l, x, *val));
      if (verdict == EquivVerdict::NotFound) return CaseResult::fail("local substitution breaks equivalence of " + print_chor(c) + " and " + print_chor(v));
      inconclusive = inconclusive || verdict == EquivVerdict::Truncated;
    }
  }
  if (!ctx.delta.empty()) {
    auto& [x, ty] = ctx.delta[g.rng.below(ctx.delta.size())];
    GenConfig c2 = cfg;
    c2.seed ^= 0xabcdefULL;
    c2.max_depth = 2;
    auto arg = gen_typed_chor_in<L>(c2, TypeCtx<L>{}, ty).chor;
    Chor<L> arg2 = random_equiv_variant(arg, c2.seed, 2);
    auto verdict = decide_equiv(subst_global(c, x, arg), subst_global(v, x, arg2));
    if (verdict == EquivVerdict::NotFound) return CaseResult::fail("global substitution breaks equivalence of " + print_chor(c) + " and " + print_chor(v));
    inconclusive = inconclusive || verdict == EquivVerdict::Truncated;
  }
  return inconclusive ? CaseResult::inconclusive() : CaseResult::pass();
}

template <class L>
CaseResult prop_projection_syntactic(const GenConfig& cfg) {
  ChorGen<L> g(cfg);
  TypeCtx<L> ctx = random_ctx(g);
  auto [c, t] = gen_typed_chor_in<L>(cfg, ctx);
  LocSet locs = theorem_locs(c, cfg);
  auto p = proj_all(c, locs);
  if (!p) return CaseResult::discard("not projectable");
  for (auto& l : locs) {
    const auto& e = p->at(l);
    if (fev_at(c, l) != ctrl_fv_local(e)) return CaseResult::fail("free local variables at " + l.name + " differ for " + print_chor(c));
    if (fcv(c) != ctrl_fv_global(e)) return CaseResult::fail("free choreography variables differ at " + l.name + " for " + print_chor(c));
  }
  if (!ctx.gamma.empty()) {
    auto& [l1, x, ty] = ctx.gamma[g.rng.below(ctx.gamma.size())];
    if (auto val = closed_value_of<L>(ty)) {
      auto q = proj_all(subst_local(c, l1, x, *val), locs);
      if (!q) return CaseResult::fail("local substitution made " + print_chor(c) + " unprojectable");
      for (auto& l2 : locs) {
        Ctrl<L> want = l1 == l2 ? ctrl_subst_local(p->at(l2), x, *val) : p->at(l2);
        if (!ctrl_alpha_equal(q->at(l2), want)) return CaseResult::fail("projection does not commute with local substitution at " + l2.name + " for " + print_chor(c));
      }
    }
  }
  if (!ctx.delta.empty()) {
    auto& [x, ty] = ctx.delta[g.rng.below(ctx.delta.size())];
    GenConfig c2 = cfg;
    c2.seed ^= 0x1234ULL;
    c2.max_depth = 2;
    auto arg = gen_typed_chor_in<L>(c2, TypeCtx<L>{}, ty).chor;
    auto pa = proj_all(arg, locs);
    auto q = proj_all(subst_global(c, x, arg), locs);
    if (pa && q)
      for (auto& l : locs)
        if (!ctrl_alpha_equal(q->at(l), ctrl_subst_global(p->at(l), x, pa->at(l))))
          return CaseResult::fail("projection does not commute with substitution of " + x + " at " + l.name + " for " + print_chor(c));
    if (pa && !q) return CaseResult::fail("global substitution made " + print_chor(c) + " unprojectable");
  }
  if (chor_is_value(c))
    for (auto& [l, e] : *p)
      if (!ctrl_is_value(e)) return CaseResult::fail("value " + print_chor(c) + " projects to non-value " + print_ctrl(e));
  bool all_values = true;
  for (auto& [l, e] : *p) all_values = all_values && ctrl_is_value(e);
  if (all_values && !chor_is_value(c) && fcv(c).empty()) return CaseResult::fail("every projection of " + print_chor(c) + " is a value");
  return CaseResult::pass();
}

// ---- control-language properties

template <class L>
CaseResult prop_merge_algebra(const GenConfig& cfg) {
  CtrlGen<L> g(cfg.seed, cfg.locations);
  auto fam = g.family(3, 4);
  const auto &e1 = fam[0], &e2 = fam[1], &e3 = fam[2];
  auto key = [](const std::optional<Ctrl<L>>& e) { return e ? ctrl_key(*e) : std::string("<undefined>"); };
  if (key(merge(e1, e1)) != ctrl_key(e1)) return CaseResult::fail("not idempotent on " + print_ctrl(e1));
  if (key(merge(e1, e2)) != key(merge(e2, e1))) return CaseResult::fail("not symmetric on " + print_ctrl(e1) + " and " + print_ctrl(e2));
  auto m12 = merge(e1, e2), m23 = merge(e2, e3);
  std::optional<Ctrl<L>> left = m12 ? merge(*m12, e3) : std::nullopt;
  std::optional<Ctrl<L>> right = m23 ? merge(e1, *m23) : std::nullopt;
  if (key(left) != key(right))
    return CaseResult::fail("not associative on " + print_ctrl(e1) + ", " + print_ctrl(e2) + ", " + print_ctrl(e3) + ": " + key(left) + " vs " + key(right));
  if (m12) {
    if (ctrl_fv_global(*m12) != set_union(ctrl_fv_global(e1), ctrl_fv_global(e2))) return CaseResult::fail("free variables of merge");
    if (ctrl_fv_local(*m12) != set_union(ctrl_fv_local(e1), ctrl_fv_local(e2))) return CaseResult::fail("free local variables of merge");
    auto v = g.val();
    auto s = merge(ctrl_subst_local(e1, "x", v), ctrl_subst_local(e2, "x", v));
    if (key(s) != ctrl_key(ctrl_subst_local(*m12, "x", v))) return CaseResult::fail("merge does not commute with local substitution on " + print_ctrl(e1) + " and " + print_ctrl(e2));
    auto V = Ctrl<L>::ret(v);
    auto s2 = merge(ctrl_subst_global(e1, "X", V), ctrl_subst_global(e2, "X", V));
    if (key(s2) != ctrl_key(ctrl_subst_global(*m12, "X", V))) return CaseResult::fail("merge does not commute with global substitution");
    if (ctrl_is_value(*m12) && !(ctrl_alpha_equal(e1, *m12) && ctrl_alpha_equal(e2, *m12)))
      return CaseResult::fail("merge is a value but its arguments differ");
  }
  for (auto* val : {&e1, &e2})
    if (ctrl_is_value(*val)) {
      auto m = merge(*val, e3);
      if (m && !(ctrl_alpha_equal(*m, *val) && ctrl_alpha_equal(e3, *val))) return CaseResult::fail("merge with a value");
    }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_merge_simulation(const GenConfig& cfg) {
  CtrlGen<L> g(cfg.seed, cfg.locations);
  auto fam = g.family(2, 4);
  auto m = merge(fam[0], fam[1]);
  if (!m) return CaseResult::discard("merge undefined");
  auto vals = L::sample_values();
  auto s2 = ctrl_enabled_steps(fam[1], vals);
  for (auto& a : ctrl_enabled_steps(fam[0], vals))
    for (auto& b : s2) {
      if (!(a.label == b.label)) continue;
      auto mn = merge(a.next, b.next);
      if (!mn) return CaseResult::fail("merge of successors undefined: " + print_ctrl(a.next) + " and " + print_ctrl(b.next));
      if (!ctrl_steps_to(*m, a.label, *mn))
        return CaseResult::fail("merge " + print_ctrl(*m) + " does not step with " + print_label(a.label) + " to " + print_ctrl(*mn));
    }
  return CaseResult::pass();
}

template <class L>
CaseResult prop_lnd(const GenConfig& cfg) {
  CtrlGen<L> g(cfg.seed, cfg.locations);
  auto fam = g.family(2, 4);
  auto e1 = fam[0], f1 = fam[1];
  auto e2 = g.widen(e1), e3 = g.widen(e2), f2 = g.widen(f1);
  if (!lnd(e1, e1)) return CaseResult::fail("not reflexive on " + print_ctrl(e1));
  if (!lnd(e1, e2) || !lnd(e2, e3)) return CaseResult::fail("widening is not above " + print_ctrl(e1));
  if (!lnd(e1, e3)) return CaseResult::fail("not transitive");
  if (lnd(e2, e1) && !ctrl_alpha_equal(e1, e2)) return CaseResult::fail("not antisymmetric on " + print_ctrl(e1) + " and " + print_ctrl(e2));
  if (lnd(e1, f1) && lnd(f1, e1) && !ctrl_alpha_equal(e1, f1)) return CaseResult::fail("not antisymmetric");
  auto v = g.val();
  if (!lnd(ctrl_subst_local(e1, "x", v), ctrl_subst_local(e2, "x", v))) return CaseResult::fail("local substitution");
  auto V = Ctrl<L>::ret(v);
  if (!lnd(ctrl_subst_global(e1, "X", V), ctrl_subst_global(e2, "X", V))) return CaseResult::fail("global substitution");
  if (auto m = merge(e1, f1))
    if (!lnd(e1, *m) || !lnd(f1, *m)) return CaseResult::fail("merge is not an upper bound of " + print_ctrl(e1) + " and " + print_ctrl(f1));
  if ((ctrl_is_value(e1) || ctrl_is_value(e2)) && !ctrl_alpha_equal(e1, e2)) return CaseResult::fail("value related to a different program");
  auto vals = L::sample_values();
  auto up = ctrl_enabled_steps(e2, vals);
  for (auto& s : ctrl_enabled_steps(e1, vals)) {
    bool ok = false;
    for (auto& t : up)
      if (t.label == s.label && lnd(s.next, t.next)) ok = true;
    if (!ok) return CaseResult::fail("step " + print_label(s.label) + " of " + print_ctrl(e1) + " does not lift to " + print_ctrl(e2));
  }
  auto down = ctrl_enabled_steps(e1, vals);
  for (auto& t : up) {
    if (is_choice_label(t.label)) continue;
    bool ok = false;
    for (auto& s : down)
      if (t.label == s.label && lnd(s.next, t.next)) ok = true;
    if (!ok) return CaseResult::fail("step " + print_label(t.label) + " of " + print_ctrl(e2) + " does not lower to " + print_ctrl(e1));
  }
  return CaseResult::pass();
}

// E1 below E2, E3 below E4, E1 merge E3 defined: E2 merge E4 defined and above it.
template <class L>
CaseResult prop_merge_monotone(const GenConfig& cfg) {
  CtrlGen<L> g(cfg.seed, cfg.locations);
  auto fam = g.family(2, 4);
  auto m = merge(fam[0], fam[1]);
  if (!m) return CaseResult::discard("merge undefined");
  auto e2 = g.widen(fam[0]), e4 = g.widen(fam[1]);
  auto m2 = merge(e2, e4);
  if (!m2)
    return CaseResult::fail("merge of " + print_ctrl(fam[0]) + " and " + print_ctrl(fam[1]) + " is defined but merge of " +
                            print_ctrl(e2) + " and " + print_ctrl(e4) + " is not");
  if (!lnd(*m, *m2)) return CaseResult::fail("merge is not monotone on " + print_ctrl(e2) + " and " + print_ctrl(e4));
  return CaseResult::pass();
}

template <class L>
CaseResult prop_local_language(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  LocalCtx<typename L::Type> ctx;
  int n = static_cast<int>(rng.below(3));
  for (int i = 0; i < n; ++i) ctx.emplace_back(rng.pick(std::vector<Name>{"x", "y", "z"}), L::gen_type(rng));
  auto t = L::gen_type(rng);
  auto e = L::gen_expr(rng, ctx, t, 3);
  auto te = L::infer(ctx, e);
  if (!te || !(*te == t)) return CaseResult::fail(L::print(e) + " was generated at " + L::print_type(t));
  auto canon = L::canonicalize(e, {}, 0);
  if (!(canon == e) || !(L::canonicalize(canon, {}, 0) == canon)) return CaseResult::fail("canonicalisation of " + L::print(e));
  if (!(parse_local<L>(L::print(e)) == e)) return CaseResult::fail("print/parse round trip of " + L::print(e));
  auto w = ctx;
  w.insert(w.begin(), {"unused_w", L::gen_type(rng)});
  auto tw = L::infer(w, e);
  if (!tw || !(*tw == t)) return CaseResult::fail("weakening for " + L::print(e));
  if (!ctx.empty()) {
    auto [x, tx] = ctx.back();
    if (auto v = closed_value_of<L>(tx)) {
      auto shorter = ctx;
      shorter.pop_back();
      auto s = L::subst(e, x, *v);
      auto ts = L::infer(shorter, s);
      if (L::free_vars(e).count(x) || !ctx_lookup(shorter, x))
        if (!ts || !(*ts == t)) return CaseResult::fail("substitution lemma for " + L::print(e));
      NameSet want = L::free_vars(e);
      want.erase(x);
      if (L::free_vars(s) != want) return CaseResult::fail("free variables after substitution in " + L::print(e));
    }
  }
  if (L::soundness.preservation)
    for (auto& e2 : L::step(e)) {
      auto t2 = L::infer(ctx, e2);
      if (!t2 || !(*t2 == t)) return CaseResult::fail("preservation: " + L::print(e) + " steps to " + L::print(e2));
    }
  if (ctx.empty()) {
    auto cur = e;
    for (int i = 0; i < 200; ++i) {
      if (L::is_value(cur)) break;
      auto next = L::step(cur);
      if (next.empty()) {
        if (L::soundness.progress) return CaseResult::fail("progress: " + L::print(cur) + " is stuck");
        break;
      }
      cur = next[0];
    }
    if (L::soundness.bool_invertibility && L::is_value(cur) && L::infer({}, cur) == std::optional(L::bool_type()))
      if (!(cur == L::true_value()) && !(cur == L::false_value())) return CaseResult::fail("boolean value " + L::print(cur));
  }
  return CaseResult::pass();
}

// Locations a redex needs unblocked; a SendE only needs its sender.
template <class L>
LocSet acting_locations(const Redex<L>& r) {
  using K = typename Redex<L>::Kind;
  if (r.kind == K::SendE) return {r.l1};
  if (r.kind == K::Fun || r.kind == K::Arg) return acting_locations(*r.inner);
  return redex_locations(r);
}

template <class L>
CaseResult prop_semantics_laws(const Chor<L>& c, const ChorType<L>&, const GenConfig&) {
  for (auto& B : block_sets(c)) {
    auto strong = enabled_steps(c, B);
    for (auto& w : weak_enabled_steps(c, B)) {
      bool ok = false;
      for (auto& s : strong)
        if (s.redex == w.redex && s.next == w.next) ok = true;
      if (!ok) return CaseResult::fail("weak step " + print_redex(w.redex) + " missing from the block-set semantics of " + print_chor(c));
    }
    for (auto& s : strong) {
      for (auto& l : acting_locations(s.redex))
        if (B.count(l)) return CaseResult::fail("step " + print_redex(s.redex) + " involves blocked " + l.name);
      if (!B.empty()) {
        bool ok = false;
        for (auto& s0 : enabled_steps(c))
          if (s0.redex == s.redex && s0.next == s.next) ok = true;
        if (!ok) return CaseResult::fail("step " + print_redex(s.redex) + " under a block set is missing with none");
      }
    }
  }
  return CaseResult::pass();
}

}  // namespace detail

// Runs `cases` generated instances of the named property.
template <class L>
TheoremReport check_theorem(const std::string& name, const GenConfig& base, int cases) {
  TheoremReport rep;
  rep.name = name;
  rep.language = std::string(L::name);
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&] {
    rep.hypothesis_unsatisfiable = rep.cases > 0 && rep.discarded == rep.cases;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };
  auto tally = [&](const CaseResult& r) {
    ++rep.cases;
    switch (r.outcome) {
      case Outcome::Pass: ++rep.passed; break;
      case Outcome::Discard: ++rep.discarded; break;
      case Outcome::Inconclusive: ++rep.inconclusive; break;
      case Outcome::Fail:
        ++rep.failed;
        if (rep.counterexample.empty()) rep.counterexample = r.detail;
        break;
    }
  };

  std::optional<detail::ChorProp<L>> chor_prop;
  std::function<CaseResult(const GenConfig&)> open_prop;
  if (name == "relative-preservation") chor_prop = detail::prop_preservation<L>;
  else if (name == "relative-progress") {
    if (!L::soundness.all()) {
      rep.not_applicable = true;
      return finish();
    }
    chor_prop = detail::prop_progress<L>;
  } else if (name == "equivalence-respects-types") chor_prop = detail::prop_equiv_types<L>;
  else if (name == "simulates-equivalence") chor_prop = detail::prop_simulates_equiv<L>;
  else if (name == "weak-semantics") chor_prop = detail::prop_weak<L>;
  else if (name == "equivalence-begets-equality") chor_prop = detail::prop_begets_equality<L>;
  else if (name == "lift-lower-system") chor_prop = detail::prop_lift_lower<L>;
  else if (name == "local-completeness") chor_prop = detail::prop_local_completeness<L>;
  else if (name == "global-completeness") chor_prop = detail::prop_global_completeness<L>;
  else if (name == "local-soundness") chor_prop = detail::prop_local_soundness<L>;
  else if (name == "global-soundness") chor_prop = detail::prop_global_soundness<L>;
  else if (name == "deadlock-freedom") {
    if (!L::soundness.all()) {
      rep.not_applicable = true;
      return finish();
    }
    chor_prop = detail::prop_deadlock_freedom<L>;
  } else if (name == "semantics-laws") chor_prop = detail::prop_semantics_laws<L>;
  else if (name == "structural-rules") open_prop = detail::prop_structural<L>;
  else if (name == "equiv-syntactic-ops") open_prop = detail::prop_equiv_syntactic<L>;
  else if (name == "merge-algebra") open_prop = detail::prop_merge_algebra<L>;
  else if (name == "merge-simulation") open_prop = detail::prop_merge_simulation<L>;
  else if (name == "projection-syntactic-ops") open_prop = detail::prop_projection_syntactic<L>;
  else if (name == "lnd-order") open_prop = detail::prop_lnd<L>;
  else if (name == "merge-monotonicity") open_prop = detail::prop_merge_monotone<L>;
  else if (name == "local-language-laws") open_prop = detail::prop_local_language<L>;
  else throw std::invalid_argument("unknown theorem " + name);

  for (int i = 0; i < cases; ++i) {
    GenConfig cfg = detail::case_config(base, i);
    if (open_prop) {
      CaseResult r = open_prop(cfg);
      for (int retry = 1; r.outcome == Outcome::Discard && retry < 40; ++retry) {
        cfg.seed += 0x9e3779b97f4a7c15ULL;
        r = open_prop(cfg);
      }
      if (r.outcome == Outcome::Fail) r.detail = "seed " + std::to_string(cfg.seed) + ": " + r.detail;
      tally(r);
      continue;
    }
    // Discarded samples are regenerated so that hypotheses such as projectability filter rather than shrink the run.
    auto g = gen_typed_chor<L>(cfg);
    CaseResult r = (*chor_prop)(g.chor, g.type, cfg);
    for (int retry = 1; r.outcome == Outcome::Discard && retry < 40; ++retry) {
      cfg.seed += 0x9e3779b97f4a7c15ULL;
      g = gen_typed_chor<L>(cfg);
      r = (*chor_prop)(g.chor, g.type, cfg);
    }
    if (r.outcome == Outcome::Fail && rep.counterexample.empty()) {
      auto still = [&](const Chor<L>& c) {
        auto t = chor_infer(c);
        return t && (*chor_prop)(c, *t, cfg).outcome == Outcome::Fail;
      };
      Chor<L> small = shrink_chor(g.chor, still);
      auto t = chor_infer(small);
      r.detail = "seed " + std::to_string(cfg.seed) + ", shrunk to " + print_chor(small) + "\n  " + (*chor_prop)(small, *t, cfg).detail;
    }
    tally(r);
  }
  return finish();
}

// A closed, typed choreography that reaches a stuck state; exists only when the local language lacks progress.
template <class L>
std::optional<Chor<L>> stuck_witness(std::uint64_t seed = 1, int attempts = 2000) {
  auto reaches_stuck = [](const Chor<L>& c) {
    if (!chor_infer(c)) return false;
    for (auto& [s, st] : explore(c, 200).outcomes)
      if (st == RunStatus::Stuck) return true;
    return false;
  };
  Location a{"A"}, b{"B"};
  for (auto& v : L::sample_values()) {
    auto t = L::infer({}, v);
    if (!t || !(*t == L::bool_type()) || v == L::true_value() || v == L::false_value()) continue;
    auto c = Chor<L>::ite(a, v, Chor<L>::done(b, L::true_value()), Chor<L>::done(b, L::true_value()));
    if (reaches_stuck(c)) return c;
  }
  GenConfig cfg;
  for (int i = 0; i < attempts; ++i) {
    auto g = gen_typed_chor<L>(detail::case_config(cfg, static_cast<int>(seed) + i));
    if (reaches_stuck(g.chor)) return g.chor;
  }
  return std::nullopt;
}

}  // namespace pirouette
