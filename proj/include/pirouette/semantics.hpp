#pragma once

#include <deque>
#include <unordered_set>

#include "pirouette/chor.hpp"

namespace pirouette {

template <class L>
struct Redex {
  enum class Kind { DoneE, IfE, IfT, IfF, SendE, SendV, Sync, DefLocalV, AppLocalE, AppLocalV, AppGlobalV, Fun, Arg };
  using Expr = typename L::Expr;

  Kind kind;
  Location l1, l2;
  Expr e1{}, e2{};
  Dir d = Dir::L;
  std::shared_ptr<const Redex> inner;

  static Redex local(Kind k, Location l, Expr a, Expr b = {}) { return Redex{k, std::move(l), {}, a, b}; }
  static Redex done_e(Location l, Expr a, Expr b) { return local(Kind::DoneE, l, a, b); }
  static Redex if_e(Location l, Expr a, Expr b) { return local(Kind::IfE, l, a, b); }
  static Redex if_t(Location l) { return Redex{Kind::IfT, std::move(l)}; }
  static Redex if_f(Location l) { return Redex{Kind::IfF, std::move(l)}; }
  static Redex send_e(Location a, Expr e1, Expr e2, Location b) {
    return Redex{Kind::SendE, std::move(a), std::move(b), e1, e2};
  }
  static Redex send_v(Location a, Expr v, Location b) { return Redex{Kind::SendV, std::move(a), std::move(b), v}; }
  static Redex sync(Location a, Dir d, Location b) {
    Redex r{Kind::Sync, std::move(a), std::move(b)};
    r.d = d;
    return r;
  }
  static Redex def_local_v(Location l, Expr v) { return local(Kind::DefLocalV, l, v); }
  static Redex app_local_e(Location l, Expr a, Expr b) { return local(Kind::AppLocalE, l, a, b); }
  static Redex app_local_v(Location l, Expr v) { return local(Kind::AppLocalV, l, v); }
  static Redex app_global_v() { return Redex{Kind::AppGlobalV}; }
  static Redex fun(Redex r) {
    Redex o{Kind::Fun};
    o.inner = std::make_shared<const Redex>(std::move(r));
    return o;
  }
  static Redex arg(Redex r) {
    Redex o{Kind::Arg};
    o.inner = std::make_shared<const Redex>(std::move(r));
    return o;
  }

  friend bool operator==(const Redex& a, const Redex& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::DoneE:
      case Kind::IfE:
      case Kind::AppLocalE: return a.l1 == b.l1 && a.e1 == b.e1 && a.e2 == b.e2;
      case Kind::IfT:
      case Kind::IfF: return a.l1 == b.l1;
      case Kind::SendE: return a.l1 == b.l1 && a.l2 == b.l2 && a.e1 == b.e1 && a.e2 == b.e2;
      case Kind::SendV: return a.l1 == b.l1 && a.l2 == b.l2 && a.e1 == b.e1;
      case Kind::Sync: return a.l1 == b.l1 && a.l2 == b.l2 && a.d == b.d;
      case Kind::DefLocalV:
      case Kind::AppLocalV: return a.l1 == b.l1 && a.e1 == b.e1;
      case Kind::AppGlobalV: return true;
      case Kind::Fun:
      case Kind::Arg: return *a.inner == *b.inner;
    }
    return false;
  }
};

template <class L>
LocSet redex_locations(const Redex<L>& r) {
  using K = typename Redex<L>::Kind;
  switch (r.kind) {
    case K::SendE:
    case K::SendV:
    case K::Sync: return {r.l1, r.l2};
    case K::AppGlobalV: return {};
    case K::Fun:
    case K::Arg: return redex_locations(*r.inner);
    default: return {r.l1};
  }
}

template <class L>
std::string print_redex(const Redex<L>& r) {
  using K = typename Redex<L>::Kind;
  auto e = [](const typename L::Expr& x) { return L::print(x); };
  switch (r.kind) {
    case K::DoneE: return "DoneE(" + r.l1.name + ", " + e(r.e1) + ", " + e(r.e2) + ")";
    case K::IfE: return "IfE(" + r.l1.name + ", " + e(r.e1) + ", " + e(r.e2) + ")";
    case K::IfT: return "IfT(" + r.l1.name + ")";
    case K::IfF: return "IfF(" + r.l1.name + ")";
    case K::SendE: return "SendE(" + r.l1.name + ", " + e(r.e1) + ", " + e(r.e2) + ", " + r.l2.name + ")";
    case K::SendV: return "SendV(" + r.l1.name + ", " + e(r.e1) + ", " + r.l2.name + ")";
    case K::Sync: return std::string("Sync(") + r.l1.name + ", " + dir_name(r.d) + ", " + r.l2.name + ")";
    case K::DefLocalV: return "DefLocalV(" + r.l1.name + ", " + e(r.e1) + ")";
    case K::AppLocalE: return "AppLocalE(" + r.l1.name + ", " + e(r.e1) + ", " + e(r.e2) + ")";
    case K::AppLocalV: return "AppLocalV(" + r.l1.name + ", " + e(r.e1) + ")";
    case K::AppGlobalV: return "AppGlobalV";
    case K::Fun: return "Fun(" + print_redex(*r.inner) + ")";
    case K::Arg: return "Arg(" + print_redex(*r.inner) + ")";
  }
  return "?";
}

template <class L>
struct ChorStep {
  Redex<L> redex;
  Chor<L> next;
};

enum class StepMode { BlockSet, Weak };

namespace detail {

inline LocSet with_locs(LocSet b, std::initializer_list<Location> ls) {
  for (auto& l : ls) b.insert(l);
  return b;
}

template <class L>
void steps_into(const Chor<L>& c, const LocSet& B, StepMode mode, std::vector<ChorStep<L>>& out) {
  using K = typename Chor<L>::Kind;
  using R = Redex<L>;
  const bool weak = mode == StepMode::Weak;
  const bool empty = B.empty();
  auto free = [&](const Location& l) { return !B.count(l); };
  switch (c.kind()) {
    case K::Var:
    case K::FunLocal:
    case K::FunGlobal: return;
    case K::Done:
      if (weak ? empty : free(c->l1))
        for (auto& e2 : L::step(c->e)) out.push_back({R::done_e(c->l1, c->e, e2), c.with_expr(e2)});
      return;
    case K::Send: {
      const Location &a = c->l1, &b = c->l2;
      if (a != b && free(a) && (!weak || free(b)))
        for (auto& e2 : L::step(c->e)) out.push_back({R::send_e(a, c->e, e2, b), c.with_expr(e2)});
      if (a != b && free(a) && free(b) && L::is_value(c->e))
        out.push_back({R::send_v(a, c->e, b), subst_local(c.c1(), b, c->x, c->e)});
      std::vector<ChorStep<L>> inner;
      steps_into(c.c1(), with_locs(B, {a, b}), mode, inner);
      for (auto& s : inner) out.push_back({s.redex, c.with(s.next)});
      return;
    }
    case K::If: {
      const Location& l = c->l1;
      if (free(l)) {
        for (auto& e2 : L::step(c->e)) out.push_back({R::if_e(l, c->e, e2), c.with_expr(e2)});
        if (c->e == L::true_value()) out.push_back({R::if_t(l), c.c1()});
        if (c->e == L::false_value()) out.push_back({R::if_f(l), c.c2()});
      }
      std::vector<ChorStep<L>> s1, s2;
      auto B2 = with_locs(B, {l});
      steps_into(c.c1(), B2, mode, s1);
      if (s1.empty()) return;
      steps_into(c.c2(), B2, mode, s2);
      for (auto& x : s1)
        for (auto& y : s2)
          if (x.redex == y.redex) out.push_back({x.redex, c.with(x.next, y.next)});
      return;
    }
    case K::Sync: {
      const Location &a = c->l1, &b = c->l2;
      if (a != b && free(a) && free(b)) out.push_back({R::sync(a, c->d, b), c.c1()});
      std::vector<ChorStep<L>> inner;
      steps_into(c.c1(), with_locs(B, {a, b}), mode, inner);
      for (auto& s : inner) out.push_back({s.redex, c.with(s.next)});
      return;
    }
    case K::DefLocal: {
      if (weak && !empty) return;
      std::vector<ChorStep<L>> inner;
      steps_into(c.c1(), B, mode, inner);
      for (auto& s : inner) out.push_back({R::arg(s.redex), c.with(s.next)});
      Chor<L> bound = c.c1();
      // Fires only with an empty block set: every location takes part in the binding.
      if (empty && bound.kind() == K::Done && bound->l1 == c->l1 && L::is_value(bound->e))
        out.push_back({R::def_local_v(c->l1, bound->e), subst_local(c.c2(), c->l1, c->x, bound->e)});
      return;
    }
    case K::AppLocal: {
      if (weak && !empty) return;
      std::vector<ChorStep<L>> inner;
      steps_into(c.c1(), B, mode, inner);
      for (auto& s : inner) out.push_back({R::fun(s.redex), c.with(s.next)});
      if (free(c->l1))
        for (auto& e2 : L::step(c->e)) out.push_back({R::app_local_e(c->l1, c->e, e2), c.with_expr(e2)});
      Chor<L> fn = c.c1();
      if (empty && fn.kind() == K::FunLocal && fn->l1 == c->l1 && L::is_value(c->e)) {
        Chor<L> body = subst_local(fn.c1(), c->l1, fn->x, c->e);
        out.push_back({R::app_local_v(c->l1, c->e), subst_global(body, fn->f, fn)});
      }
      return;
    }
    case K::AppGlobal: {
      if (weak && !empty) return;
      std::vector<ChorStep<L>> inner;
      steps_into(c.c1(), B, mode, inner);
      for (auto& s : inner) out.push_back({R::fun(s.redex), c.with(s.next)});
      inner.clear();
      steps_into(c.c2(), B, mode, inner);
      for (auto& s : inner) out.push_back({R::arg(s.redex), c.with(std::nullopt, s.next)});
      Chor<L> fn = c.c1(), arg = c.c2();
      if (empty && fn.kind() == K::FunGlobal && chor_is_value(arg))
        out.push_back({R::app_global_v(), subst_global(fn.c1(), ChorSubst<L>{{fn->x, arg}, {fn->f, fn}})});
      return;
    }
  }
}

}  // namespace detail

// All (R, C') with C --R,B--> C' under the block-set semantics.
template <class L>
std::vector<ChorStep<L>> enabled_steps(const Chor<L>& c, const LocSet& blocked = {}) {
  std::vector<ChorStep<L>> out;
  detail::steps_into(c, blocked, StepMode::BlockSet, out);
  return out;
}

template <class L>
std::vector<ChorStep<L>> weak_enabled_steps(const Chor<L>& c, const LocSet& blocked = {}) {
  std::vector<ChorStep<L>> out;
  detail::steps_into(c, blocked, StepMode::Weak, out);
  return out;
}

template <class L>
std::optional<Chor<L>> step_with(const Chor<L>& c, const Redex<L>& r, const LocSet& blocked = {}) {
  for (auto& s : enabled_steps(c, blocked))
    if (s.redex == r) return s.next;
  return std::nullopt;
}

enum class RunStatus { Value, Stuck, FuelExhausted };

inline const char* run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Value: return "value";
    case RunStatus::Stuck: return "stuck";
    case RunStatus::FuelExhausted: return "fuel-exhausted";
  }
  return "?";
}

enum class Scheduler { First, Random, Exhaustive };

template <class L>
struct RunResult {
  Chor<L> final;
  std::vector<Redex<L>> history;
  RunStatus status;
};

template <class L>
RunResult<L> run(const Chor<L>& c0, Scheduler sched, std::size_t fuel, std::uint64_t seed = 0) {
  Rng rng(seed);
  Chor<L> c = c0;
  std::vector<Redex<L>> hist;
  for (;;) {
    if (chor_is_value(c)) return {c, hist, RunStatus::Value};
    auto steps = enabled_steps(c);
    if (steps.empty()) return {c, hist, RunStatus::Stuck};
    if (hist.size() >= fuel) return {c, hist, RunStatus::FuelExhausted};
    std::size_t i = sched == Scheduler::Random ? rng.below(steps.size()) : 0;
    hist.push_back(steps[i].redex);
    c = steps[i].next;
  }
}

template <class L>
struct ExploreResult {
  std::vector<std::pair<Chor<L>, RunStatus>> outcomes;  // distinct up to renaming
  std::size_t states = 0;
  bool truncated = false;
};

// Breadth-first enumeration of every reachable state from the top level.
template <class L>
ExploreResult<L> explore(const Chor<L>& c0, std::size_t max_states) {
  ExploreResult<L> res;
  std::set<std::string> seen_canon;
  std::deque<Chor<L>> queue{c0};
  auto seen = [&](const Chor<L>& c) { return !seen_canon.insert(print_chor(canonicalize(c))).second; };
  seen(c0);
  while (!queue.empty()) {
    if (res.states >= max_states) {
      res.truncated = true;
      break;
    }
    Chor<L> c = queue.front();
    queue.pop_front();
    ++res.states;
    if (chor_is_value(c)) {
      res.outcomes.push_back({c, RunStatus::Value});
      continue;
    }
    auto steps = enabled_steps(c);
    if (steps.empty()) {
      res.outcomes.push_back({c, RunStatus::Stuck});
      continue;
    }
    for (auto& s : steps)
      if (!seen(s.next)) queue.push_back(s.next);
  }
  return res;
}

}  // namespace pirouette
