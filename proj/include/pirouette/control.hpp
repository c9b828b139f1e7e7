#pragma once

#include "pirouette/chor.hpp"

namespace pirouette {

template <class L>
class Ctrl {
 public:
  using Expr = typename L::Expr;
  enum class Kind {
    Var, FunLocal, FunGlobal, AppLocal, AppGlobal, Unit, Ret, LetRet, Send, Recv, If, Choose, AllowLR, AllowL, AllowR
  };

  // Field use by kind:
  //   Var x | FunLocal f x a | FunGlobal f x a | AppLocal a e | AppGlobal a b | Unit | Ret e
  //   LetRet x a b | Send e loc a | Recv x loc a | If e a b | Choose d loc a
  //   AllowLR loc a b | AllowL loc a | AllowR loc a
  struct Node {
    Kind kind;
    Name x, f;
    Location loc;
    Dir d = Dir::L;
    Expr e{};
    std::shared_ptr<const Node> a, b;
  };

  Ctrl() = default;
  explicit Ctrl(std::shared_ptr<const Node> n) : p_(std::move(n)) {}
  const Node* operator->() const { return p_.get(); }
  Kind kind() const { return p_->kind; }
  Ctrl a() const { return Ctrl(p_->a); }
  Ctrl b() const { return Ctrl(p_->b); }
  const void* id() const { return p_.get(); }

  static Ctrl make(Node n) { return Ctrl(std::make_shared<const Node>(std::move(n))); }
  static Ctrl var(Name x) { return make(Node{Kind::Var, std::move(x)}); }
  static Ctrl unit() { return make(Node{Kind::Unit}); }
  static Ctrl ret(Expr e) {
    Node n{Kind::Ret};
    n.e = std::move(e);
    return make(std::move(n));
  }
  static Ctrl fun_local(Name f, Name x, Ctrl body) {
    Node n{Kind::FunLocal, std::move(x), std::move(f)};
    n.a = body.p_;
    return make(std::move(n));
  }
  static Ctrl fun_global(Name f, Name x, Ctrl body) {
    Node n{Kind::FunGlobal, std::move(x), std::move(f)};
    n.a = body.p_;
    return make(std::move(n));
  }
  static Ctrl app_local(Ctrl fn, Expr arg) {
    Node n{Kind::AppLocal};
    n.a = fn.p_;
    n.e = std::move(arg);
    return make(std::move(n));
  }
  static Ctrl app_global(Ctrl fn, Ctrl arg) {
    Node n{Kind::AppGlobal};
    n.a = fn.p_;
    n.b = arg.p_;
    return make(std::move(n));
  }
  static Ctrl let_ret(Name x, Ctrl bound, Ctrl body) {
    Node n{Kind::LetRet, std::move(x)};
    n.a = bound.p_;
    n.b = body.p_;
    return make(std::move(n));
  }
  static Ctrl send(Expr e, Location to, Ctrl k) {
    Node n{Kind::Send};
    n.e = std::move(e);
    n.loc = std::move(to);
    n.a = k.p_;
    return make(std::move(n));
  }
  static Ctrl recv(Name x, Location from, Ctrl k) {
    Node n{Kind::Recv, std::move(x)};
    n.loc = std::move(from);
    n.a = k.p_;
    return make(std::move(n));
  }
  static Ctrl ite(Expr e, Ctrl t, Ctrl f) {
    Node n{Kind::If};
    n.e = std::move(e);
    n.a = t.p_;
    n.b = f.p_;
    return make(std::move(n));
  }
  static Ctrl choose(Dir d, Location to, Ctrl k) {
    Node n{Kind::Choose};
    n.d = d;
    n.loc = std::move(to);
    n.a = k.p_;
    return make(std::move(n));
  }
  static Ctrl allow_lr(Location from, Ctrl l, Ctrl r) {
    Node n{Kind::AllowLR};
    n.loc = std::move(from);
    n.a = l.p_;
    n.b = r.p_;
    return make(std::move(n));
  }
  static Ctrl allow_l(Location from, Ctrl k) {
    Node n{Kind::AllowL};
    n.loc = std::move(from);
    n.a = k.p_;
    return make(std::move(n));
  }
  static Ctrl allow_r(Location from, Ctrl k) {
    Node n{Kind::AllowR};
    n.loc = std::move(from);
    n.a = k.p_;
    return make(std::move(n));
  }

  Ctrl with(std::optional<Ctrl> a, std::optional<Ctrl> b = std::nullopt) const {
    Node n = *p_;
    if (a) n.a = a->p_;
    if (b) n.b = b->p_;
    return make(std::move(n));
  }
  Ctrl with_expr(Expr e) const {
    Node n = *p_;
    n.e = std::move(e);
    return make(std::move(n));
  }
  Ctrl with_names(Name f, Name x) const {
    Node n = *p_;
    n.f = std::move(f);
    n.x = std::move(x);
    return make(std::move(n));
  }

  std::vector<Ctrl> children() const {
    std::vector<Ctrl> out;
    if (p_->a) out.push_back(a());
    if (p_->b) out.push_back(b());
    return out;
  }

  friend bool operator==(const Ctrl& p, const Ctrl& q) {
    if (p.p_ == q.p_) return true;
    if (!p.p_ || !q.p_) return false;
    const Node &x = *p.p_, &y = *q.p_;
    if (x.kind != y.kind || x.x != y.x || x.f != y.f || x.loc != y.loc || x.d != y.d) return false;
    if (x.e.p || y.e.p) {
      if (!x.e.p || !y.e.p || !(x.e == y.e)) return false;
    }
    if ((x.a == nullptr) != (y.a == nullptr) || (x.b == nullptr) != (y.b == nullptr)) return false;
    if (x.a && !(p.a() == q.a())) return false;
    if (x.b && !(p.b() == q.b())) return false;
    return true;
  }

 private:
  std::shared_ptr<const Node> p_;
};

// ---- free variables

template <class L>
NameSet ctrl_fv_global(const Ctrl<L>& c) {
  using K = typename Ctrl<L>::Kind;
  switch (c.kind()) {
    case K::Var: return {c->x};
    case K::FunLocal: {
      auto s = ctrl_fv_global(c.a());
      s.erase(c->f);
      return s;
    }
    case K::FunGlobal: {
      auto s = ctrl_fv_global(c.a());
      s.erase(c->f);
      s.erase(c->x);
      return s;
    }
    default: {
      NameSet s;
      for (auto& ch : c.children()) s = set_union(s, ctrl_fv_global(ch));
      return s;
    }
  }
}

template <class L>
NameSet ctrl_fv_local(const Ctrl<L>& c) {
  using K = typename Ctrl<L>::Kind;
  NameSet s;
  if (c->e.p) s = L::free_vars(c->e);
  switch (c.kind()) {
    case K::FunLocal:
    case K::Recv: {
      auto in = ctrl_fv_local(c.a());
      in.erase(c->x);
      return set_union(s, in);
    }
    case K::LetRet: {
      auto in = ctrl_fv_local(c.b());
      in.erase(c->x);
      return set_union(set_union(s, in), ctrl_fv_local(c.a()));
    }
    default:
      for (auto& ch : c.children()) s = set_union(s, ctrl_fv_local(ch));
      return s;
  }
}

template <class L>
void ctrl_collect_names(const Ctrl<L>& c, NameSet& out) {
  if (!c->x.empty()) out.insert(c->x);
  if (!c->f.empty()) out.insert(c->f);
  if (c->e.p) {
    auto fv = L::free_vars(c->e);
    out.insert(fv.begin(), fv.end());
  }
  for (auto& ch : c.children()) ctrl_collect_names(ch, out);
}

template <class L>
NameSet ctrl_all_names(const Ctrl<L>& c) {
  NameSet s;
  ctrl_collect_names(c, s);
  return s;
}

// ---- substitution (one flat namespace for local variables, one for control variables)

template <class L>
Ctrl<L> ctrl_subst_local(const Ctrl<L>& c, const Name& y, const typename L::Expr& v);

namespace detail {

template <class L>
std::pair<Name, Ctrl<L>> ctrl_local_under(const Name& bx, const Ctrl<L>& body, const Name& y, const typename L::Expr& v) {
  auto vfv = L::free_vars(v);
  if (vfv.count(bx) && ctrl_fv_local(body).count(y)) {
    Name nx = fresh_name(bx, set_union(set_union(vfv, ctrl_all_names(body)), NameSet{y}));
    return {nx, ctrl_subst_local(ctrl_subst_local(body, bx, L::var(nx)), y, v)};
  }
  return {bx, ctrl_subst_local(body, y, v)};
}

}  // namespace detail

template <class L>
Ctrl<L> ctrl_subst_local(const Ctrl<L>& c, const Name& y, const typename L::Expr& v) {
  using K = typename Ctrl<L>::Kind;
  using C = Ctrl<L>;
  auto se = [&](const typename L::Expr& e) { return L::subst(e, y, v); };
  switch (c.kind()) {
    case K::Var:
    case K::Unit:
    case K::FunGlobal:
      if (c.kind() == K::FunGlobal) return c.with(ctrl_subst_local(c.a(), y, v));
      return c;
    case K::Ret: return c.with_expr(se(c->e));
    case K::FunLocal: {
      if (c->x == y) return c;
      auto [nx, body] = detail::ctrl_local_under(c->x, c.a(), y, v);
      return C::fun_local(c->f, nx, body);
    }
    case K::AppLocal: return C::app_local(ctrl_subst_local(c.a(), y, v), se(c->e));
    case K::AppGlobal: return c.with(ctrl_subst_local(c.a(), y, v), ctrl_subst_local(c.b(), y, v));
    case K::LetRet: {
      auto bound = ctrl_subst_local(c.a(), y, v);
      if (c->x == y) return c.with(bound);
      auto [nx, body] = detail::ctrl_local_under(c->x, c.b(), y, v);
      return C::let_ret(nx, bound, body);
    }
    case K::Send: return C::send(se(c->e), c->loc, ctrl_subst_local(c.a(), y, v));
    case K::Recv: {
      if (c->x == y) return c;
      auto [nx, body] = detail::ctrl_local_under(c->x, c.a(), y, v);
      return C::recv(nx, c->loc, body);
    }
    case K::If: return C::ite(se(c->e), ctrl_subst_local(c.a(), y, v), ctrl_subst_local(c.b(), y, v));
    case K::Choose:
    case K::AllowL:
    case K::AllowR: return c.with(ctrl_subst_local(c.a(), y, v));
    case K::AllowLR: return c.with(ctrl_subst_local(c.a(), y, v), ctrl_subst_local(c.b(), y, v));
  }
  return c;
}

template <class L>
using CtrlSubst = std::map<Name, Ctrl<L>>;

template <class L>
Ctrl<L> ctrl_subst_global(const Ctrl<L>& c, const CtrlSubst<L>& s0) {
  using K = typename Ctrl<L>::Kind;
  if (s0.empty()) return c;
  auto free = ctrl_fv_global(c);
  CtrlSubst<L> s;
  for (auto& [k, v] : s0)
    if (free.count(k)) s.emplace(k, v);
  if (s.empty()) return c;
  NameSet cv, lv;
  for (auto& [k, v] : s) {
    cv = set_union(cv, ctrl_fv_global(v));
    lv = set_union(lv, ctrl_fv_local(v));
  }
  auto avoid_for = [&](const Ctrl<L>& body) {
    NameSet a = set_union(set_union(ctrl_all_names(body), cv), lv);
    for (auto& [k, v] : s) a.insert(k);
    return a;
  };
  // Local binders whose names occur free in a replacement get renamed first.
  auto fresh_local = [&](const Name& x, const Ctrl<L>& body) -> std::pair<Name, Ctrl<L>> {
    if (!lv.count(x)) return {x, body};
    Name nx = fresh_name(x, avoid_for(body));
    return {nx, ctrl_subst_local(body, x, L::var(nx))};
  };
  switch (c.kind()) {
    case K::Var: {
      auto it = s.find(c->x);
      return it == s.end() ? c : it->second;
    }
    case K::FunLocal:
    case K::FunGlobal: {
      bool global = c.kind() == K::FunGlobal;
      CtrlSubst<L> inner = s;
      inner.erase(c->f);
      if (global) inner.erase(c->x);
      if (inner.empty()) return c;
      Ctrl<L> body = c.a();
      Name f = c->f, x = c->x;
      if (cv.count(f)) {
        Name nf = fresh_name(f, set_union(avoid_for(body), NameSet{x}));
        body = ctrl_subst_global(body, CtrlSubst<L>{{f, Ctrl<L>::var(nf)}});
        f = nf;
      }
      if (global && cv.count(x)) {
        Name nx = fresh_name(x, set_union(avoid_for(body), NameSet{f}));
        body = ctrl_subst_global(body, CtrlSubst<L>{{x, Ctrl<L>::var(nx)}});
        x = nx;
      }
      if (!global) {
        auto [nx, nb] = fresh_local(x, body);
        x = nx;
        body = nb;
      }
      return c.with_names(f, x).with(ctrl_subst_global(body, inner));
    }
    case K::LetRet: {
      auto bound = ctrl_subst_global(c.a(), s);
      auto [nx, body] = fresh_local(c->x, c.b());
      return Ctrl<L>::let_ret(nx, bound, ctrl_subst_global(body, s));
    }
    case K::Recv: {
      auto [nx, body] = fresh_local(c->x, c.a());
      return Ctrl<L>::recv(nx, c->loc, ctrl_subst_global(body, s));
    }
    default: {
      std::optional<Ctrl<L>> a, b;
      if (c->a) a = ctrl_subst_global(c.a(), s);
      if (c->b) b = ctrl_subst_global(c.b(), s);
      return c.with(a, b);
    }
  }
}

template <class L>
Ctrl<L> ctrl_subst_global(const Ctrl<L>& c, const Name& x, const Ctrl<L>& v) {
  return ctrl_subst_global(c, CtrlSubst<L>{{x, v}});
}

// ---- values

template <class L>
bool ctrl_is_value(const Ctrl<L>& c) {
  using K = typename Ctrl<L>::Kind;
  switch (c.kind()) {
    case K::Unit: return true;
    case K::Ret: return L::is_value(c->e);
    case K::FunLocal: return subset(ctrl_fv_global(c.a()), NameSet{c->f}) && subset(ctrl_fv_local(c.a()), NameSet{c->x});
    case K::FunGlobal: return subset(ctrl_fv_global(c.a()), NameSet{c->f, c->x}) && ctrl_fv_local(c.a()).empty();
    default: return false;
  }
}

// ---- canonical renaming

template <class L>
Ctrl<L> ctrl_canonicalize(const Ctrl<L>& c, const Renaming& lenv, const Renaming& genv, int depth) {
  using K = typename Ctrl<L>::Kind;
  using C = Ctrl<L>;
  auto ce = [&](const typename L::Expr& e) { return L::canonicalize(e, lenv, depth); };
  auto rec = [&](const C& x) { return ctrl_canonicalize(x, lenv, genv, depth); };
  switch (c.kind()) {
    case K::Var: return C::var(rename_lookup(genv, c->x));
    case K::Unit: return c;
    case K::Ret: return c.with_expr(ce(c->e));
    case K::FunLocal: {
      Renaming g2 = genv, l2 = lenv;
      g2[c->f] = canonical_binder(depth);
      l2[c->x] = canonical_binder(depth + 1);
      return C::fun_local(canonical_binder(depth), canonical_binder(depth + 1), ctrl_canonicalize(c.a(), l2, g2, depth + 2));
    }
    case K::FunGlobal: {
      Renaming g2 = genv;
      g2[c->f] = canonical_binder(depth);
      g2[c->x] = canonical_binder(depth + 1);
      return C::fun_global(canonical_binder(depth), canonical_binder(depth + 1), ctrl_canonicalize(c.a(), lenv, g2, depth + 2));
    }
    case K::AppLocal: return C::app_local(rec(c.a()), ce(c->e));
    case K::LetRet: {
      Renaming l2 = lenv;
      l2[c->x] = canonical_binder(depth);
      return C::let_ret(canonical_binder(depth), rec(c.a()), ctrl_canonicalize(c.b(), l2, genv, depth + 1));
    }
    case K::Send: return C::send(ce(c->e), c->loc, rec(c.a()));
    case K::Recv: {
      Renaming l2 = lenv;
      l2[c->x] = canonical_binder(depth);
      return C::recv(canonical_binder(depth), c->loc, ctrl_canonicalize(c.a(), l2, genv, depth + 1));
    }
    case K::If: return C::ite(ce(c->e), rec(c.a()), rec(c.b()));
    default: {
      std::optional<C> a, b;
      if (c->a) a = rec(c.a());
      if (c->b) b = rec(c.b());
      return c.with(a, b);
    }
  }
}

template <class L>
Ctrl<L> ctrl_canonicalize(const Ctrl<L>& c) {
  return ctrl_canonicalize(c, {}, {}, 0);
}

template <class L>
bool ctrl_alpha_equal(const Ctrl<L>& a, const Ctrl<L>& b) {
  return ctrl_canonicalize(a) == ctrl_canonicalize(b);
}

// ---- printing

template <class L>
std::string print_ctrl(const Ctrl<L>& c);

template <class L>
bool ctrl_is_atomic(const Ctrl<L>& c) {
  using K = typename Ctrl<L>::Kind;
  return c.kind() == K::Var || c.kind() == K::Unit || c.kind() == K::Ret;
}

template <class L>
std::string print_ctrl_atomic(const Ctrl<L>& c) {
  return ctrl_is_atomic(c) ? print_ctrl(c) : "(" + print_ctrl(c) + ")";
}

template <class L>
std::string print_ctrl(const Ctrl<L>& c) {
  using K = typename Ctrl<L>::Kind;
  auto pe = [](const typename L::Expr& e) { return L::print_atomic(e); };
  switch (c.kind()) {
    case K::Var: return c->x;
    case K::Unit: return "unit";
    case K::Ret: return "ret(" + L::print(c->e) + ")";
    case K::FunLocal: return "funL " + c->f + "(" + c->x + ") := " + print_ctrl(c.a());
    case K::FunGlobal: return "funG " + c->f + "(" + c->x + ") := " + print_ctrl(c.a());
    case K::AppLocal: return "appL " + print_ctrl_atomic(c.a()) + " " + pe(c->e);
    case K::AppGlobal: return "appG " + print_ctrl_atomic(c.a()) + " " + print_ctrl_atomic(c.b());
    case K::LetRet: return "let ret " + c->x + " := " + print_ctrl(c.a()) + " in " + print_ctrl(c.b());
    case K::Send: return "send " + pe(c->e) + " to " + c->loc.name + "; " + print_ctrl(c.a());
    case K::Recv: return "recv " + c->x + " from " + c->loc.name + "; " + print_ctrl(c.a());
    case K::If: return "if " + pe(c->e) + " then " + print_ctrl(c.a()) + " else " + print_ctrl(c.b());
    case K::Choose: return std::string("choose ") + dir_name(c->d) + " for " + c->loc.name + "; " + print_ctrl(c.a());
    case K::AllowLR:
      return "allow " + c->loc.name + " choice |L=> " + print_ctrl_atomic(c.a()) + " |R=> " + print_ctrl_atomic(c.b());
    case K::AllowL: return "allow " + c->loc.name + " choice |L=> " + print_ctrl_atomic(c.a());
    case K::AllowR: return "allow " + c->loc.name + " choice |R=> " + print_ctrl_atomic(c.a());
  }
  return "?";
}

// ---- parsing (the printer's notation)

template <class L>
Ctrl<L> parse_ctrl(TokenStream& ts);

template <class L>
Ctrl<L> parse_ctrl_atom(TokenStream& ts) {
  using C = Ctrl<L>;
  if (ts.accept_sym("(")) {
    C c = parse_ctrl<L>(ts);
    ts.expect_sym(")");
    return c;
  }
  if (ts.accept_word("unit")) return C::unit();
  if (ts.accept_word("ret")) {
    ts.expect_sym("(");
    auto e = L::parse(ts);
    ts.expect_sym(")");
    return C::ret(e);
  }
  return C::var(ts.ident("control expression"));
}

template <class L>
Ctrl<L> parse_ctrl(TokenStream& ts) {
  using C = Ctrl<L>;
  auto loc = [&]() { return Location(ts.ident("location")); };
  auto dir = [&]() {
    if (ts.accept_word("L")) return Dir::L;
    if (ts.accept_word("R")) return Dir::R;
    ts.fail("expected L or R");
  };
  if (ts.is_word("funL") || ts.is_word("funG")) {
    bool global = ts.next().text == "funG";
    Name f = ts.ident("function name");
    ts.expect_sym("(");
    Name x = ts.ident("parameter");
    ts.expect_sym(")");
    ts.expect_sym(":=");
    C body = parse_ctrl<L>(ts);
    return global ? C::fun_global(f, x, body) : C::fun_local(f, x, body);
  }
  if (ts.accept_word("appL")) {
    C fn = parse_ctrl_atom<L>(ts);
    return C::app_local(fn, L::parse(ts));
  }
  if (ts.accept_word("appG")) {
    C fn = parse_ctrl_atom<L>(ts);
    return C::app_global(fn, parse_ctrl_atom<L>(ts));
  }
  if (ts.accept_word("let")) {
    ts.expect_word("ret");
    Name x = ts.ident("variable");
    ts.expect_sym(":=");
    C a = parse_ctrl<L>(ts);
    ts.expect_word("in");
    return C::let_ret(x, a, parse_ctrl<L>(ts));
  }
  if (ts.accept_word("send")) {
    auto e = L::parse(ts);
    ts.expect_word("to");
    Location to = loc();
    ts.expect_sym(";");
    return C::send(e, to, parse_ctrl<L>(ts));
  }
  if (ts.accept_word("recv")) {
    Name x = ts.ident("variable");
    ts.expect_word("from");
    Location from = loc();
    ts.expect_sym(";");
    return C::recv(x, from, parse_ctrl<L>(ts));
  }
  if (ts.accept_word("if")) {
    auto e = L::parse(ts);
    ts.expect_word("then");
    C a = parse_ctrl<L>(ts);
    ts.expect_word("else");
    return C::ite(e, a, parse_ctrl<L>(ts));
  }
  if (ts.accept_word("choose")) {
    Dir d = dir();
    ts.expect_word("for");
    Location to = loc();
    ts.expect_sym(";");
    return C::choose(d, to, parse_ctrl<L>(ts));
  }
  if (ts.accept_word("allow")) {
    Location from = loc();
    ts.expect_word("choice");
    std::optional<C> l, r;
    while (ts.accept_sym("|")) {
      Dir d = dir();
      ts.expect_sym("=>");
      (d == Dir::L ? l : r) = parse_ctrl_atom<L>(ts);
    }
    if (l && r) return C::allow_lr(from, *l, *r);
    if (l) return C::allow_l(from, *l);
    if (r) return C::allow_r(from, *r);
    ts.fail("allow needs at least one branch");
  }
  return parse_ctrl_atom<L>(ts);
}

template <class L>
Ctrl<L> parse_ctrl(const std::string& src) {
  TokenStream ts(src);
  auto c = parse_ctrl<L>(ts);
  if (!ts.at_end()) ts.fail("trailing input");
  return c;
}

}  // namespace pirouette
