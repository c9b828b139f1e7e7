#pragma once

#include <map>

#include "pirouette/control_semantics.hpp"
#include "pirouette/merge.hpp"
#include "pirouette/semantics.hpp"

namespace pirouette {

struct ProjectionError {
  enum class Kind { SelfComm, SelfSync, MergeFailure };
  Kind kind;
  Path path;
  Location loc;
  std::string message;
  std::string str() const {
    const char* k = kind == Kind::SelfComm ? "self-communication" : kind == Kind::SelfSync ? "self-synchronisation" : "merge failure";
    return std::string(k) + " at " + path_str(path) + " projecting to " + loc.name + ": " + message;
  }
};

template <class L>
using ProjResult = Expected<Ctrl<L>, ProjectionError>;

namespace detail {

template <class L>
struct Projector {
  using C = Chor<L>;
  using K = typename C::Kind;
  using E = Ctrl<L>;
  Location loc;
  std::map<const void*, ProjResult<L>> memo;

  ProjResult<L> fail(ProjectionError::Kind k, const Path& p, std::string msg) { return ProjectionError{k, p, loc, std::move(msg)}; }

  ProjResult<L> go(const C& c, const Path& p) {
    auto it = memo.find(c.id());
    if (it != memo.end()) {
      // Paths in a cached error refer to the first occurrence; fine for diagnostics.
      return it->second;
    }
    auto r = compute(c, p);
    memo.emplace(c.id(), r);
    return r;
  }

  ProjResult<L> compute(const C& c, const Path& p) {
    const Location& me = loc;
    switch (c.kind()) {
      case K::Var: return E::var(c->x);
      case K::Done: return c->l1 == me ? E::ret(c->e) : E::unit();
      case K::Send: {
        if (c->l1 == c->l2) return fail(ProjectionError::Kind::SelfComm, p, c->l1.name + " sends to itself");
        auto k = go(c.c1(), extend(p, 0));
        if (!k) return k;
        if (c->l1 == me) return E::send(c->e, c->l2, *k);
        if (c->l2 == me) return E::recv(c->x, c->l1, *k);
        return k;
      }
      case K::If: {
        auto a = go(c.c1(), extend(p, 0));
        if (!a) return a;
        auto b = go(c.c2(), extend(p, 1));
        if (!b) return b;
        if (c->l1 == me) return E::ite(c->e, *a, *b);
        auto m = merge(*a, *b);
        if (!m) return fail(ProjectionError::Kind::MergeFailure, p, "branches project to " + print_ctrl(*a) + " and " + print_ctrl(*b));
        return *m;
      }
      case K::Sync: {
        if (c->l1 == c->l2) return fail(ProjectionError::Kind::SelfSync, p, c->l1.name + " synchronises with itself");
        auto k = go(c.c1(), extend(p, 0));
        if (!k) return k;
        if (c->l1 == me) return E::choose(c->d, c->l2, *k);
        if (c->l2 == me) return c->d == Dir::L ? E::allow_l(c->l1, *k) : E::allow_r(c->l1, *k);
        return k;
      }
      case K::DefLocal: {
        auto a = go(c.c1(), extend(p, 0));
        if (!a) return a;
        auto b = go(c.c2(), extend(p, 1));
        if (!b) return b;
        if (c->l1 == me) return E::let_ret(c->x, *a, *b);
        NameSet avoid = all_names(c);
        Name f = fresh_name("F", avoid);
        avoid.insert(f);
        Name x = fresh_name("X", avoid);
        return E::app_global(E::fun_global(f, x, *b), *a);
      }
      case K::FunLocal: {
        auto b = go(c.c1(), extend(p, 0));
        if (!b) return b;
        if (c->l1 == me) return E::fun_local(c->f, c->x, *b);
        NameSet avoid = all_names(c);
        return E::fun_global(c->f, fresh_name("X", avoid), *b);
      }
      case K::FunGlobal: {
        auto b = go(c.c1(), extend(p, 0));
        if (!b) return b;
        return E::fun_global(c->f, c->x, *b);
      }
      case K::AppLocal: {
        auto f = go(c.c1(), extend(p, 0));
        if (!f) return f;
        if (c->l1 == me) return E::app_local(*f, c->e);
        return E::app_global(*f, E::unit());
      }
      case K::AppGlobal: {
        auto f = go(c.c1(), extend(p, 0));
        if (!f) return f;
        auto a = go(c.c2(), extend(p, 1));
        if (!a) return a;
        return E::app_global(*f, *a);
      }
    }
    return fail(ProjectionError::Kind::MergeFailure, p, "unknown construct");
  }
};

}  // namespace detail

template <class L>
ProjResult<L> project(const Chor<L>& c, const Location& l) {
  detail::Projector<L> pr{l};
  return pr.go(c, {});
}

template <class L>
using System = std::map<Location, Ctrl<L>>;

template <class L>
Expected<System<L>, ProjectionError> project_system(const Chor<L>& c, const LocSet& locs) {
  System<L> out;
  for (auto& l : locs) {
    auto r = project(c, l);
    if (!r) return r.error();
    out.emplace(l, *r);
  }
  return out;
}

template <class L>
Expected<System<L>, ProjectionError> project_system(const Chor<L>& c) {
  return project_system(c, location_names(c));
}

// A location's view of a redex; empty when the location does not take part.
template <class L>
std::optional<CtrlLabel<L>> project_redex(const Redex<L>& r, const Location& l) {
  using K = typename Redex<L>::Kind;
  using Lb = CtrlLabel<L>;
  switch (r.kind) {
    case K::DoneE:
    case K::IfE:
    case K::IfT:
    case K::IfF:
    case K::AppLocalE:
    case K::SendE: return r.l1 == l ? std::optional(Lb::iota()) : std::nullopt;
    case K::SendV:
      if (r.l1 == l && r.l2 != l) return Lb::send(r.e1, r.l2);
      if (r.l1 != l && r.l2 == l) return Lb::recv(r.l1, r.e1);
      return std::nullopt;
    case K::Sync:
      if (r.l1 == l && r.l2 != l) return Lb::choose(r.d, r.l2);
      if (r.l1 != l && r.l2 == l) return Lb::allow(r.l1, r.d);
      return std::nullopt;
    case K::DefLocalV:
    case K::AppLocalV:
    case K::AppGlobalV: return Lb::sync_iota();
    case K::Fun: {
      auto i = project_redex(*r.inner, l);
      return i ? std::optional(Lb::fun(*i)) : std::nullopt;
    }
    case K::Arg: {
      auto i = project_redex(*r.inner, l);
      return i ? std::optional(Lb::arg(*i)) : std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace pirouette
