#pragma once

#include "pirouette/control.hpp"

namespace pirouette {

template <class L>
struct CtrlLabel {
  // Iota: internal. SyncIota: a step every location must take together.
  // Send: loc is the receiver. Recv: loc is the sender. Choose: loc is the follower. Allow: loc is the chooser.
  enum class Kind { Iota, Send, Recv, Choose, Allow, SyncIota, Fun, Arg };
  Kind kind;
  Location loc;
  typename L::Expr v{};
  Dir d = Dir::L;
  std::shared_ptr<const CtrlLabel> inner;

  static CtrlLabel iota() { return {Kind::Iota}; }
  static CtrlLabel sync_iota() { return {Kind::SyncIota}; }
  static CtrlLabel send(typename L::Expr v, Location to) { return {Kind::Send, std::move(to), std::move(v)}; }
  static CtrlLabel recv(Location from, typename L::Expr v) { return {Kind::Recv, std::move(from), std::move(v)}; }
  static CtrlLabel choose(Dir d, Location to) {
    CtrlLabel l{Kind::Choose, std::move(to)};
    l.d = d;
    return l;
  }
  static CtrlLabel allow(Location from, Dir d) {
    CtrlLabel l{Kind::Allow, std::move(from)};
    l.d = d;
    return l;
  }
  static CtrlLabel fun(CtrlLabel l) {
    CtrlLabel o{Kind::Fun};
    o.inner = std::make_shared<const CtrlLabel>(std::move(l));
    return o;
  }
  static CtrlLabel arg(CtrlLabel l) {
    CtrlLabel o{Kind::Arg};
    o.inner = std::make_shared<const CtrlLabel>(std::move(l));
    return o;
  }

  // Strips Fun/Arg wrappers.
  const CtrlLabel& core() const { return inner ? inner->core() : *this; }

  friend bool operator==(const CtrlLabel& a, const CtrlLabel& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Iota:
      case Kind::SyncIota: return true;
      case Kind::Send:
      case Kind::Recv: return a.loc == b.loc && a.v == b.v;
      case Kind::Choose:
      case Kind::Allow: return a.loc == b.loc && a.d == b.d;
      case Kind::Fun:
      case Kind::Arg: return *a.inner == *b.inner;
    }
    return false;
  }
};

template <class L>
std::string print_label(const CtrlLabel<L>& l) {
  using K = typename CtrlLabel<L>::Kind;
  switch (l.kind) {
    case K::Iota: return "iota";
    case K::SyncIota: return "sync-iota";
    case K::Send: return "send(" + L::print(l.v) + ", " + l.loc.name + ")";
    case K::Recv: return "recv(" + l.loc.name + ", " + L::print(l.v) + ")";
    case K::Choose: return std::string("choose(") + dir_name(l.d) + ", " + l.loc.name + ")";
    case K::Allow: return "allow(" + l.loc.name + ", " + dir_name(l.d) + ")";
    case K::Fun: return "Fun(" + print_label(*l.inner) + ")";
    case K::Arg: return "Arg(" + print_label(*l.inner) + ")";
  }
  return "?";
}

template <class L>
bool is_choice_label(const CtrlLabel<L>& l) {
  using K = typename CtrlLabel<L>::Kind;
  auto k = l.core().kind;
  return k == K::Choose || k == K::Allow;
}

template <class L>
struct CtrlStep {
  CtrlLabel<L> label;
  Ctrl<L> next;
};

// Steps of one control program. Receives are instantiated with each value in `recv_values`.
template <class L>
void ctrl_steps_into(const Ctrl<L>& c, const std::vector<typename L::Expr>& recv_values, std::vector<CtrlStep<L>>& out) {
  using K = typename Ctrl<L>::Kind;
  using C = Ctrl<L>;
  using Lb = CtrlLabel<L>;
  auto local = [&](auto rebuild) {
    for (auto& e2 : L::step(c->e)) out.push_back({Lb::iota(), rebuild(e2)});
  };
  switch (c.kind()) {
    case K::Var:
    case K::Unit:
    case K::FunLocal:
    case K::FunGlobal: return;
    case K::Ret: local([&](auto& e2) { return c.with_expr(e2); }); return;
    case K::If:
      local([&](auto& e2) { return c.with_expr(e2); });
      if (c->e == L::true_value()) out.push_back({Lb::iota(), c.a()});
      if (c->e == L::false_value()) out.push_back({Lb::iota(), c.b()});
      return;
    case K::Send:
      local([&](auto& e2) { return c.with_expr(e2); });
      if (L::is_value(c->e)) out.push_back({Lb::send(c->e, c->loc), c.a()});
      return;
    case K::Recv:
      for (auto& v : recv_values) out.push_back({Lb::recv(c->loc, v), ctrl_subst_local(c.a(), c->x, v)});
      return;
    case K::Choose: out.push_back({Lb::choose(c->d, c->loc), c.a()}); return;
    case K::AllowLR:
      out.push_back({Lb::allow(c->loc, Dir::L), c.a()});
      out.push_back({Lb::allow(c->loc, Dir::R), c.b()});
      return;
    case K::AllowL: out.push_back({Lb::allow(c->loc, Dir::L), c.a()}); return;
    case K::AllowR: out.push_back({Lb::allow(c->loc, Dir::R), c.a()}); return;
    case K::LetRet: {
      std::vector<CtrlStep<L>> inner;
      ctrl_steps_into(c.a(), recv_values, inner);
      for (auto& s : inner) out.push_back({Lb::arg(s.label), c.with(s.next)});
      C a = c.a();
      if (a.kind() == K::Ret && L::is_value(a->e)) out.push_back({Lb::sync_iota(), ctrl_subst_local(c.b(), c->x, a->e)});
      return;
    }
    case K::AppLocal: {
      std::vector<CtrlStep<L>> inner;
      ctrl_steps_into(c.a(), recv_values, inner);
      for (auto& s : inner) out.push_back({Lb::fun(s.label), c.with(s.next)});
      local([&](auto& e2) { return c.with_expr(e2); });
      C fn = c.a();
      if (fn.kind() == K::FunLocal && L::is_value(c->e))
        out.push_back({Lb::sync_iota(), ctrl_subst_global(ctrl_subst_local(fn.a(), fn->x, c->e), fn->f, fn)});
      return;
    }
    case K::AppGlobal: {
      std::vector<CtrlStep<L>> inner;
      ctrl_steps_into(c.a(), recv_values, inner);
      for (auto& s : inner) out.push_back({Lb::fun(s.label), c.with(s.next)});
      inner.clear();
      ctrl_steps_into(c.b(), recv_values, inner);
      for (auto& s : inner) out.push_back({Lb::arg(s.label), c.with(std::nullopt, s.next)});
      C fn = c.a(), arg = c.b();
      if (fn.kind() == K::FunGlobal && ctrl_is_value(arg))
        out.push_back({Lb::sync_iota(), ctrl_subst_global(fn.a(), CtrlSubst<L>{{fn->x, arg}, {fn->f, fn}})});
      return;
    }
  }
}

template <class L>
std::vector<CtrlStep<L>> ctrl_enabled_steps(const Ctrl<L>& c, const std::vector<typename L::Expr>& recv_values = {}) {
  std::vector<CtrlStep<L>> out;
  ctrl_steps_into(c, recv_values, out);
  return out;
}

// Successor of c under exactly label l, if any. Receives are instantiated from the label itself.
template <class L>
std::optional<Ctrl<L>> ctrl_step_with(const Ctrl<L>& c, const CtrlLabel<L>& l) {
  std::vector<typename L::Expr> vals;
  if (l.core().kind == CtrlLabel<L>::Kind::Recv) vals.push_back(l.core().v);
  for (auto& s : ctrl_enabled_steps(c, vals))
    if (s.label == l) return s.next;
  return std::nullopt;
}

}  // namespace pirouette
