#pragma once

#include <deque>
#include <tuple>

#include "pirouette/semantics.hpp"

namespace pirouette {

// Gamma: located local variables; Delta: choreography variables. Rightmost binding wins.
template <class L>
struct TypeCtx {
  std::vector<std::tuple<Location, Name, typename L::Type>> gamma;
  std::vector<std::pair<Name, ChorType<L>>> delta;

  TypeCtx bind_local(Location l, Name x, typename L::Type t) const {
    TypeCtx c = *this;
    c.gamma.emplace_back(std::move(l), std::move(x), std::move(t));
    return c;
  }
  TypeCtx bind_chor(Name x, ChorType<L> t) const {
    TypeCtx c = *this;
    c.delta.emplace_back(std::move(x), std::move(t));
    return c;
  }
  std::optional<ChorType<L>> lookup(const Name& x) const {
    for (auto it = delta.rbegin(); it != delta.rend(); ++it)
      if (it->first == x) return it->second;
    return std::nullopt;
  }
};

template <class L>
LocalCtx<typename L::Type> ctx_project(const TypeCtx<L>& g, const Location& l) {
  LocalCtx<typename L::Type> out;
  for (auto& [loc, x, t] : g.gamma)
    if (loc == l) out.emplace_back(x, t);
  return out;
}

struct TypeError {
  std::string rule;
  Path path;
  std::string message;
  std::string str() const { return rule + " at " + path_str(path) + ": " + message; }
};

template <class L>
using TypeResult = Expected<ChorType<L>, TypeError>;

namespace detail {

template <class L>
struct Checker {
  using C = Chor<L>;
  using K = typename C::Kind;
  using T = ChorType<L>;
  using TK = typename T::Kind;

  static TypeResult<L> err(const char* rule, const Path& p, std::string msg) { return TypeError{rule, p, std::move(msg)}; }

  static std::optional<typename L::Type> local(const TypeCtx<L>& g, const Location& l, const typename L::Expr& e) {
    return L::infer(ctx_project(g, l), e);
  }

  static TypeResult<L> synth(const TypeCtx<L>& g, const C& c, const Path& p) { return go(g, c, p, std::nullopt); }

  // Synthesis when `want` is empty, otherwise checking against `want`.
  static TypeResult<L> go(const TypeCtx<L>& g, const C& c, const Path& p, const std::optional<T>& want) {
    auto finish = [&](TypeResult<L> r, const char* rule) -> TypeResult<L> {
      if (!r || !want || *r == *want) return r;
      return err(rule, p, "expected " + print_ctype(*want) + " but found " + print_ctype(*r));
    };
    switch (c.kind()) {
      case K::Var: {
        auto t = g.lookup(c->x);
        if (!t) return err("Var", p, "unbound choreography variable " + c->x);
        return finish(*t, "Var");
      }
      case K::Done: {
        auto t = local(g, c->l1, c->e);
        if (!t) return err("Done", p, "local expression " + L::print(c->e) + " is ill-typed at " + c->l1.name);
        return finish(T::at(c->l1, *t), "Done");
      }
      case K::Send: {
        if (c->l1 == c->l2) return err("Send", p, "location " + c->l1.name + " sends to itself");
        auto t = local(g, c->l1, c->e);
        if (!t) return err("Send", p, "sent expression " + L::print(c->e) + " is ill-typed at " + c->l1.name);
        return go(g.bind_local(c->l2, c->x, *t), c.c1(), extend(p, 0), want);
      }
      case K::Sync:
        if (c->l1 == c->l2) return err("Sync", p, "location " + c->l1.name + " synchronises with itself");
        return go(g, c.c1(), extend(p, 0), want);
      case K::If: {
        auto t = local(g, c->l1, c->e);
        if (!t || !(*t == L::bool_type())) return err("If", p, "guard " + L::print(c->e) + " is not a boolean at " + c->l1.name);
        auto t1 = go(g, c.c1(), extend(p, 0), want);
        if (!t1) return t1;
        auto t2 = go(g, c.c2(), extend(p, 1), *t1);
        if (!t2) return t2;
        return t1;
      }
      case K::DefLocal: {
        auto t1 = synth(g, c.c1(), extend(p, 0));
        if (!t1) return t1;
        if (t1->kind() != TK::At || (*t1)->loc != c->l1)
          return err("DefLocal", p, "bound choreography has type " + print_ctype(*t1) + ", expected a value at " + c->l1.name);
        return go(g.bind_local(c->l1, c->x, (*t1)->t), c.c2(), extend(p, 1), want);
      }
      case K::FunLocal: return fun_local(g, c, p, want, std::nullopt);
      case K::FunGlobal: return fun_global(g, c, p, want, std::nullopt);
      case K::AppLocal: {
        C fn = c.c1();
        TypeResult<L> tf = err("AppLocal", p, "");
        if (fn.kind() == K::FunLocal && !fn->param_local) {
          auto ta = local(g, c->l1, c->e);
          if (!ta) return err("AppLocal", p, "argument " + L::print(c->e) + " is ill-typed at " + c->l1.name);
          tf = fun_local(g, fn, extend(p, 0), std::nullopt, *ta);
        } else {
          tf = synth(g, fn, extend(p, 0));
        }
        if (!tf) return tf;
        if (tf->kind() != TK::LocalFun || (*tf)->loc != c->l1)
          return err("AppLocal", p, "function has type " + print_ctype(*tf) + ", expected a local function at " + c->l1.name);
        auto ta = local(g, c->l1, c->e);
        if (!ta || !(*ta == (*tf)->t))
          return err("AppLocal", p, "argument " + L::print(c->e) + " does not have type " + L::print_type((*tf)->t));
        return finish(tf->res(), "AppLocal");
      }
      case K::AppGlobal: {
        C fn = c.c1();
        TypeResult<L> tf = err("AppGlobal", p, "");
        if (fn.kind() == K::FunGlobal && !fn->param_chor) {
          auto ta = synth(g, c.c2(), extend(p, 1));
          if (!ta) return ta;
          tf = fun_global(g, fn, extend(p, 0), std::nullopt, *ta);
        } else {
          tf = synth(g, fn, extend(p, 0));
        }
        if (!tf) return tf;
        if (tf->kind() != TK::GlobalFun)
          return err("AppGlobal", p, "function has type " + print_ctype(*tf) + ", expected a global function");
        auto ta = go(g, c.c2(), extend(p, 1), tf->arg());
        if (!ta) return ta;
        return finish(tf->res(), "AppGlobal");
      }
    }
    return err("?", p, "unknown construct");
  }

  static TypeResult<L> fun_local(const TypeCtx<L>& g, const C& c, const Path& p, const std::optional<T>& want,
                                 std::optional<typename L::Type> param_hint) {
    std::optional<typename L::Type> param = c->param_local;
    std::optional<T> result = c->result;
    if (want) {
      if (want->kind() != TK::LocalFun || (*want)->loc != c->l1)
        return err("FunLocal", p, "expected " + print_ctype(*want) + " but found a local function at " + c->l1.name);
      if (param && !(*param == (*want)->t)) return err("FunLocal", p, "parameter annotation disagrees with " + print_ctype(*want));
      if (result && !(*result == want->res())) return err("FunLocal", p, "result annotation disagrees with " + print_ctype(*want));
      param = (*want)->t;
      result = want->res();
    }
    if (!param) param = param_hint;
    if (!param) return err("FunLocal", p, "cannot infer the parameter type of " + c->f + "; annotate it");
    auto g2 = g.bind_local(c->l1, c->x, *param);
    if (!result) {
      if (fcv(c.c1()).count(c->f)) return err("FunLocal", p, "recursive function " + c->f + " needs a result annotation");
      auto r = synth(g2, c.c1(), extend(p, 0));
      if (!r) return r;
      return T::local_fun(c->l1, *param, *r);
    }
    T self = T::local_fun(c->l1, *param, *result);
    auto r = go(g2.bind_chor(c->f, self), c.c1(), extend(p, 0), *result);
    if (!r) return r;
    return self;
  }

  static TypeResult<L> fun_global(const TypeCtx<L>& g, const C& c, const Path& p, const std::optional<T>& want,
                                  std::optional<T> param_hint) {
    std::optional<T> param = c->param_chor;
    std::optional<T> result = c->result;
    if (want) {
      if (want->kind() != TK::GlobalFun) return err("FunGlobal", p, "expected " + print_ctype(*want) + " but found a global function");
      if (param && !(*param == want->arg())) return err("FunGlobal", p, "parameter annotation disagrees with " + print_ctype(*want));
      if (result && !(*result == want->res())) return err("FunGlobal", p, "result annotation disagrees with " + print_ctype(*want));
      param = want->arg();
      result = want->res();
    }
    if (!param) param = param_hint;
    if (!param) return err("FunGlobal", p, "cannot infer the parameter type of " + c->f + "; annotate it");
    if (!result) {
      if (fcv(c.c1()).count(c->f)) return err("FunGlobal", p, "recursive function " + c->f + " needs a result annotation");
      auto r = synth(g.bind_chor(c->x, *param), c.c1(), extend(p, 0));
      if (!r) return r;
      return T::global_fun(*param, *r);
    }
    T self = T::global_fun(*param, *result);
    auto r = go(g.bind_chor(c->f, self).bind_chor(c->x, *param), c.c1(), extend(p, 0), *result);
    if (!r) return r;
    return self;
  }
};

}  // namespace detail

template <class L>
TypeResult<L> chor_infer(const TypeCtx<L>& g, const Chor<L>& c) {
  return detail::Checker<L>::synth(g, c, {});
}

template <class L>
TypeResult<L> chor_infer(const Chor<L>& c) {
  return chor_infer(TypeCtx<L>{}, c);
}

template <class L>
TypeResult<L> chor_check(const TypeCtx<L>& g, const Chor<L>& c, const ChorType<L>& t) {
  return detail::Checker<L>::go(g, c, {}, t);
}

struct PreservationReport {
  bool ok = true;
  std::size_t states = 0;
  std::string detail;
};

// Walks states reachable under the block-set semantics (top-level block sets: empty and singletons)
// and checks that every successor has the original type.
template <class L>
PreservationReport check_preservation(const Chor<L>& c0, std::size_t budget) {
  PreservationReport rep;
  auto t0 = chor_infer(c0);
  if (!t0) {
    rep.ok = false;
    rep.detail = "initial choreography is ill-typed: " + t0.error().str();
    return rep;
  }
  std::deque<Chor<L>> queue{c0};
  std::set<std::string> seen{print_chor(canonicalize(c0))};
  while (!queue.empty() && rep.states < budget) {
    Chor<L> c = queue.front();
    queue.pop_front();
    ++rep.states;
    std::vector<LocSet> blocks{{}};
    for (auto& l : location_names(c)) blocks.push_back({l});
    for (auto& B : blocks) {
      for (auto& s : enabled_steps(c, B)) {
        auto t = chor_infer(s.next);
        if (!t || !(*t == *t0)) {
          rep.ok = false;
          rep.detail = "step " + print_redex(s.redex) + " from " + print_chor(c) + " gives " + print_chor(s.next) +
                       (t ? " of type " + print_ctype(*t) : " which is ill-typed: " + t.error().str());
          return rep;
        }
        if (B.empty() && seen.insert(print_chor(canonicalize(s.next))).second) queue.push_back(s.next);
      }
    }
  }
  return rep;
}

enum class ProgressVerdict { Holds, Fails, NotApplicable };

template <class L>
ProgressVerdict check_progress(const Chor<L>& c) {
  if (!L::soundness.all()) return ProgressVerdict::NotApplicable;
  if (chor_is_value(c)) return ProgressVerdict::Holds;
  return enabled_steps(c).empty() ? ProgressVerdict::Fails : ProgressVerdict::Holds;
}

}  // namespace pirouette
