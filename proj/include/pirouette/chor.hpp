#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "pirouette/local/concept.hpp"

namespace pirouette {

// Choreography types: At(l, t) | LocalFun(l, t, T) | GlobalFun(T1, T2).
template <class L>
struct ChorType {
  enum class Kind { At, LocalFun, GlobalFun };
  struct Node {
    Kind kind;
    Location loc;
    typename L::Type t;
    std::shared_ptr<const Node> a, b;
  };
  std::shared_ptr<const Node> p;

  const Node* operator->() const { return p.get(); }
  Kind kind() const { return p->kind; }
  ChorType arg() const { return {p->a}; }
  ChorType res() const { return {p->b}; }

  static ChorType at(Location l, typename L::Type t) {
    return {std::make_shared<const Node>(Node{Kind::At, std::move(l), std::move(t), nullptr, nullptr})};
  }
  static ChorType local_fun(Location l, typename L::Type t, ChorType res) {
    return {std::make_shared<const Node>(Node{Kind::LocalFun, std::move(l), std::move(t), nullptr, res.p})};
  }
  static ChorType global_fun(ChorType a, ChorType r) {
    return {std::make_shared<const Node>(Node{Kind::GlobalFun, {}, {}, a.p, r.p})};
  }

  friend bool operator==(const ChorType& x, const ChorType& y) {
    if (x.p == y.p) return true;
    if (!x.p || !y.p || x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::At: return x->loc == y->loc && x->t == y->t;
      case Kind::LocalFun: return x->loc == y->loc && x->t == y->t && x.res() == y.res();
      case Kind::GlobalFun: return x.arg() == y.arg() && x.res() == y.res();
    }
    return false;
  }
};

template <class L>
std::string print_ctype(const ChorType<L>& t) {
  using K = typename ChorType<L>::Kind;
  switch (t.kind()) {
    case K::At: return "At(" + t->loc.name + ", " + L::print_type_atomic(t->t) + ")";
    case K::LocalFun:
      return "LocalFun(" + t->loc.name + ", " + L::print_type_atomic(t->t) + ", " + print_ctype(t.res()) + ")";
    case K::GlobalFun: return "GlobalFun(" + print_ctype(t.arg()) + ", " + print_ctype(t.res()) + ")";
  }
  return "?";
}

template <class L>
class Chor {
 public:
  using Expr = typename L::Expr;
  using LType = typename L::Type;
  enum class Kind { Var, Done, Send, If, Sync, DefLocal, FunLocal, FunGlobal, AppLocal, AppGlobal };

  // Field use by kind:
  //   Var x | Done l1 e | Send l1 e l2 x c1 | If l1 e c1 c2 | Sync l1 d l2 c1
  //   DefLocal l1 x c1 c2 | FunLocal l1 f x c1 | FunGlobal f x c1 | AppLocal l1 c1 e | AppGlobal c1 c2
  // Functions may carry type annotations for the checker.
  struct Node {
    Kind kind;
    Location l1, l2;
    Name x, f;
    Dir d = Dir::L;
    Expr e{};
    std::shared_ptr<const Node> c1, c2;
    std::optional<LType> param_local;
    std::optional<ChorType<L>> param_chor, result;
  };

  Chor() = default;
  explicit Chor(std::shared_ptr<const Node> n) : p_(std::move(n)) {}

  const Node* operator->() const { return p_.get(); }
  const Node& node() const { return *p_; }
  Kind kind() const { return p_->kind; }
  Chor c1() const { return Chor(p_->c1); }
  Chor c2() const { return Chor(p_->c2); }
  const void* id() const { return p_.get(); }
  bool valid() const { return p_ != nullptr; }

  static Chor make(Node n) { return Chor(std::make_shared<const Node>(std::move(n))); }
  static Chor var(Name x) {
    Node n{Kind::Var};
    n.x = std::move(x);
    return make(std::move(n));
  }
  static Chor done(Location l, Expr e) {
    Node n{Kind::Done, std::move(l)};
    n.e = std::move(e);
    return make(std::move(n));
  }
  static Chor send(Location from, Expr e, Location to, Name x, Chor k) {
    Node n{Kind::Send, std::move(from), std::move(to), std::move(x)};
    n.e = std::move(e);
    n.c1 = k.p_;
    return make(std::move(n));
  }
  static Chor ite(Location l, Expr e, Chor a, Chor b) {
    Node n{Kind::If, std::move(l)};
    n.e = std::move(e);
    n.c1 = a.p_;
    n.c2 = b.p_;
    return make(std::move(n));
  }
  static Chor sync(Location from, Dir d, Location to, Chor k) {
    Node n{Kind::Sync, std::move(from), std::move(to)};
    n.d = d;
    n.c1 = k.p_;
    return make(std::move(n));
  }
  static Chor def_local(Location l, Name x, Chor bound, Chor body) {
    Node n{Kind::DefLocal, std::move(l)};
    n.x = std::move(x);
    n.c1 = bound.p_;
    n.c2 = body.p_;
    return make(std::move(n));
  }
  static Chor fun_local(Location l, Name f, Name x, Chor body, std::optional<LType> param = std::nullopt,
                        std::optional<ChorType<L>> result = std::nullopt) {
    Node n{Kind::FunLocal, std::move(l)};
    n.f = std::move(f);
    n.x = std::move(x);
    n.c1 = body.p_;
    n.param_local = std::move(param);
    n.result = std::move(result);
    return make(std::move(n));
  }
  static Chor fun_global(Name f, Name x, Chor body, std::optional<ChorType<L>> param = std::nullopt,
                         std::optional<ChorType<L>> result = std::nullopt) {
    Node n{Kind::FunGlobal};
    n.f = std::move(f);
    n.x = std::move(x);
    n.c1 = body.p_;
    n.param_chor = std::move(param);
    n.result = std::move(result);
    return make(std::move(n));
  }
  static Chor app_local(Location l, Chor fn, Expr arg) {
    Node n{Kind::AppLocal, std::move(l)};
    n.c1 = fn.p_;
    n.e = std::move(arg);
    return make(std::move(n));
  }
  static Chor app_global(Chor fn, Chor arg) {
    Node n{Kind::AppGlobal};
    n.c1 = fn.p_;
    n.c2 = arg.p_;
    return make(std::move(n));
  }

  // Same node with replaced children / expression; annotations are kept.
  Chor with(std::optional<Chor> a, std::optional<Chor> b = std::nullopt) const {
    Node n = *p_;
    if (a) n.c1 = a->p_;
    if (b) n.c2 = b->p_;
    return make(std::move(n));
  }
  Chor with_expr(Expr e) const {
    Node n = *p_;
    n.e = std::move(e);
    return make(std::move(n));
  }
  Chor with_binder(Name x) const {
    Node n = *p_;
    n.x = std::move(x);
    return make(std::move(n));
  }
  Chor with_fun_name(Name f) const {
    Node n = *p_;
    n.f = std::move(f);
    return make(std::move(n));
  }

  friend bool operator==(const Chor& a, const Chor& b) {
    if (a.p_ == b.p_) return true;
    if (!a.p_ || !b.p_) return false;
    const Node &x = *a.p_, &y = *b.p_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case Kind::Var: return x.x == y.x;
      case Kind::Done: return x.l1 == y.l1 && x.e == y.e;
      case Kind::Send: return x.l1 == y.l1 && x.l2 == y.l2 && x.x == y.x && x.e == y.e && a.c1() == b.c1();
      case Kind::If: return x.l1 == y.l1 && x.e == y.e && a.c1() == b.c1() && a.c2() == b.c2();
      case Kind::Sync: return x.l1 == y.l1 && x.l2 == y.l2 && x.d == y.d && a.c1() == b.c1();
      case Kind::DefLocal: return x.l1 == y.l1 && x.x == y.x && a.c1() == b.c1() && a.c2() == b.c2();
      case Kind::FunLocal:
        return x.l1 == y.l1 && x.f == y.f && x.x == y.x && x.param_local == y.param_local &&
               x.result == y.result && a.c1() == b.c1();
      case Kind::FunGlobal:
        return x.f == y.f && x.x == y.x && x.param_chor == y.param_chor && x.result == y.result &&
               a.c1() == b.c1();
      case Kind::AppLocal: return x.l1 == y.l1 && x.e == y.e && a.c1() == b.c1();
      case Kind::AppGlobal: return a.c1() == b.c1() && a.c2() == b.c2();
    }
    return false;
  }

  // Children in a fixed order; subterm paths index into this list.
  std::vector<Chor> children() const {
    std::vector<Chor> out;
    if (p_->c1) out.push_back(c1());
    if (p_->c2) out.push_back(c2());
    return out;
  }

 private:
  std::shared_ptr<const Node> p_;
};

using LocVar = std::pair<Location, Name>;
using LocVarSet = std::set<LocVar>;

template <class L>
NameSet fcv(const Chor<L>& c) {
  using K = typename Chor<L>::Kind;
  switch (c.kind()) {
    case K::Var: return {c->x};
    case K::Done: return {};
    case K::FunLocal: {
      auto s = fcv(c.c1());
      s.erase(c->f);
      return s;
    }
    case K::FunGlobal: {
      auto s = fcv(c.c1());
      s.erase(c->f);
      s.erase(c->x);
      return s;
    }
    default: {
      NameSet s;
      for (auto& ch : c.children()) s = set_union(s, fcv(ch));
      return s;
    }
  }
}

template <class L>
LocVarSet fev_expr(const Location& l, const typename L::Expr& e) {
  LocVarSet s;
  for (auto& x : L::free_vars(e)) s.insert({l, x});
  return s;
}

template <class L>
LocVarSet fev(const Chor<L>& c) {
  using K = typename Chor<L>::Kind;
  switch (c.kind()) {
    case K::Var: return {};
    case K::Done: return fev_expr<L>(c->l1, c->e);
    case K::Send: {
      auto s = fev(c.c1());
      s.erase({c->l2, c->x});
      return set_union(s, fev_expr<L>(c->l1, c->e));
    }
    case K::If: return set_union(fev_expr<L>(c->l1, c->e), set_union(fev(c.c1()), fev(c.c2())));
    case K::DefLocal: {
      auto s = fev(c.c2());
      s.erase({c->l1, c->x});
      return set_union(s, fev(c.c1()));
    }
    case K::FunLocal: {
      auto s = fev(c.c1());
      s.erase({c->l1, c->x});
      return s;
    }
    case K::AppLocal: return set_union(fev(c.c1()), fev_expr<L>(c->l1, c->e));
    default: {
      LocVarSet s;
      for (auto& ch : c.children()) s = set_union(s, fev(ch));
      return s;
    }
  }
}

template <class L>
NameSet fev_at(const Chor<L>& c, const Location& l) {
  NameSet out;
  for (auto& [loc, x] : fev(c))
    if (loc == l) out.insert(x);
  return out;
}

template <class L>
void collect_locations(const Chor<L>& c, LocSet& out) {
  using K = typename Chor<L>::Kind;
  switch (c.kind()) {
    case K::Var:
    case K::FunGlobal:
    case K::AppGlobal: break;
    case K::Send:
    case K::Sync:
      out.insert(c->l1);
      out.insert(c->l2);
      break;
    default: out.insert(c->l1);
  }
  for (auto& ch : c.children()) collect_locations(ch, out);
}

template <class L>
LocSet location_names(const Chor<L>& c) {
  LocSet s;
  collect_locations(c, s);
  return s;
}

// Every name that appears anywhere (binders, variables, free local variables).
template <class L>
void collect_names(const Chor<L>& c, NameSet& out) {
  if (!c->x.empty()) out.insert(c->x);
  if (!c->f.empty()) out.insert(c->f);
  if (c->e.p) {
    auto fv = L::free_vars(c->e);
    out.insert(fv.begin(), fv.end());
  }
  for (auto& ch : c.children()) collect_names(ch, out);
}

template <class L>
NameSet all_names(const Chor<L>& c) {
  NameSet s;
  collect_names(c, s);
  return s;
}

// ---- substitution of a local expression for a located variable: C[l.y := e]

template <class L>
Chor<L> subst_local(const Chor<L>& c, const Location& l, const Name& y, const typename L::Expr& e);

namespace detail {

// Substitutes under a binder (bl, bx); renames the binder when it would capture a free variable of e.
template <class L>
std::pair<Name, Chor<L>> subst_local_under(const Location& bl, const Name& bx, const Chor<L>& body,
                                           const Location& l, const Name& y, const typename L::Expr& e) {
  if (bl == l) {
    auto efv = L::free_vars(e);
    if (efv.count(bx)) {
      auto body_fv = fev_at(body, l);
      if (!body_fv.count(y)) return {bx, body};
      Name nx = fresh_name(bx, set_union(set_union(efv, all_names(body)), NameSet{y}));
      Chor<L> renamed = subst_local(body, l, bx, L::var(nx));
      return {nx, subst_local(renamed, l, y, e)};
    }
  }
  return {bx, subst_local(body, l, y, e)};
}

}  // namespace detail

template <class L>
Chor<L> subst_local(const Chor<L>& c, const Location& l, const Name& y, const typename L::Expr& e) {
  using K = typename Chor<L>::Kind;
  auto sub_e = [&](const Location& at, const typename L::Expr& ex) { return at == l ? L::subst(ex, y, e) : ex; };
  switch (c.kind()) {
    case K::Var: return c;
    case K::Done: return c->l1 == l ? c.with_expr(L::subst(c->e, y, e)) : c;
    case K::Send: {
      auto e1 = sub_e(c->l1, c->e);
      if (c->l2 == l && c->x == y) return c.with_expr(e1);
      auto [nx, body] = detail::subst_local_under(c->l2, c->x, c.c1(), l, y, e);
      return Chor<L>::send(c->l1, e1, c->l2, nx, body);
    }
    case K::If:
      return Chor<L>::ite(c->l1, sub_e(c->l1, c->e), subst_local(c.c1(), l, y, e), subst_local(c.c2(), l, y, e));
    case K::Sync: return c.with(subst_local(c.c1(), l, y, e));
    case K::DefLocal: {
      auto bound = subst_local(c.c1(), l, y, e);
      if (c->l1 == l && c->x == y) return c.with(bound);
      auto [nx, body] = detail::subst_local_under(c->l1, c->x, c.c2(), l, y, e);
      return Chor<L>::def_local(c->l1, nx, bound, body);
    }
    case K::FunLocal: {
      if (c->l1 == l && c->x == y) return c;
      auto [nx, body] = detail::subst_local_under(c->l1, c->x, c.c1(), l, y, e);
      return c.with_binder(nx).with(body);
    }
    case K::FunGlobal: return c.with(subst_local(c.c1(), l, y, e));
    case K::AppLocal: return Chor<L>::app_local(c->l1, subst_local(c.c1(), l, y, e), sub_e(c->l1, c->e));
    case K::AppGlobal: return c.with(subst_local(c.c1(), l, y, e), subst_local(c.c2(), l, y, e));
  }
  return c;
}

// ---- simultaneous substitution of choreographies for choreography variables

template <class L>
using ChorSubst = std::map<Name, Chor<L>>;

template <class L>
Chor<L> subst_global(const Chor<L>& c, const ChorSubst<L>& s);

namespace detail {

template <class L>
ChorSubst<L> restrict_subst(const ChorSubst<L>& s, const NameSet& free, const NameSet& drop) {
  ChorSubst<L> out;
  for (auto& [k, v] : s)
    if (free.count(k) && !drop.count(k)) out.emplace(k, v);
  return out;
}

template <class L>
void subst_free_names(const ChorSubst<L>& s, NameSet& cvars, LocVarSet& lvars) {
  for (auto& [k, v] : s) {
    auto a = fcv(v);
    cvars.insert(a.begin(), a.end());
    auto b = fev(v);
    lvars.insert(b.begin(), b.end());
  }
}

// Renames a local binder (bl, bx) in body if a replacement mentions bl.bx freely.
template <class L>
std::pair<Name, Chor<L>> freshen_local_binder(const Location& bl, const Name& bx, const Chor<L>& body,
                                              const ChorSubst<L>& s) {
  NameSet cv;
  LocVarSet lv;
  subst_free_names(s, cv, lv);
  if (!lv.count({bl, bx})) return {bx, body};
  NameSet avoid = all_names(body);
  for (auto& [loc, x] : lv) avoid.insert(x);
  Name nx = fresh_name(bx, avoid);
  return {nx, subst_local(body, bl, bx, L::var(nx))};
}

}  // namespace detail

template <class L>
Chor<L> subst_global(const Chor<L>& c, const ChorSubst<L>& s0) {
  using K = typename Chor<L>::Kind;
  if (s0.empty()) return c;
  auto free = fcv(c);
  auto s = detail::restrict_subst(s0, free, {});
  if (s.empty()) return c;
  switch (c.kind()) {
    case K::Var: {
      auto it = s.find(c->x);
      return it == s.end() ? c : it->second;
    }
    case K::Done: return c;
    case K::Send: {
      auto [nx, body] = detail::freshen_local_binder(c->l2, c->x, c.c1(), s);
      return Chor<L>::send(c->l1, c->e, c->l2, nx, subst_global(body, s));
    }
    case K::DefLocal: {
      auto bound = subst_global(c.c1(), s);
      auto [nx, body] = detail::freshen_local_binder(c->l1, c->x, c.c2(), s);
      return Chor<L>::def_local(c->l1, nx, bound, subst_global(body, s));
    }
    case K::FunLocal:
    case K::FunGlobal: {
      bool global = c.kind() == K::FunGlobal;
      NameSet binders = {c->f};
      if (global) binders.insert(c->x);
      auto inner = detail::restrict_subst(s, fcv(c.c1()), binders);
      if (inner.empty()) return c;
      NameSet cv;
      LocVarSet lv;
      detail::subst_free_names(inner, cv, lv);
      Chor<L> body = c.c1();
      Name f = c->f, x = c->x;
      NameSet avoid = set_union(all_names(body), cv);
      for (auto& [loc, n] : lv) avoid.insert(n);
      for (auto& [k, v] : inner) avoid.insert(k);
      avoid.insert(f);
      avoid.insert(x);
      if (cv.count(f)) {
        Name nf = fresh_name(f, avoid);
        avoid.insert(nf);
        body = subst_global(body, ChorSubst<L>{{f, Chor<L>::var(nf)}});
        f = nf;
      }
      if (global && cv.count(x)) {
        Name nx = fresh_name(x, avoid);
        body = subst_global(body, ChorSubst<L>{{x, Chor<L>::var(nx)}});
        x = nx;
      }
      if (!global && lv.count({c->l1, x})) {
        Name nx = fresh_name(x, avoid);
        body = subst_local(body, c->l1, x, L::var(nx));
        x = nx;
      }
      return c.with_fun_name(f).with_binder(x).with(subst_global(body, inner));
    }
    case K::If: return c.with(subst_global(c.c1(), s), subst_global(c.c2(), s));
    case K::Sync:
    case K::AppLocal: return c.with(subst_global(c.c1(), s));
    case K::AppGlobal: return c.with(subst_global(c.c1(), s), subst_global(c.c2(), s));
  }
  return c;
}

template <class L>
Chor<L> subst_global(const Chor<L>& c, const Name& x, const Chor<L>& v) {
  return subst_global(c, ChorSubst<L>{{x, v}});
}

// ---- values

template <class L>
bool chor_is_value(const Chor<L>& c) {
  using K = typename Chor<L>::Kind;
  switch (c.kind()) {
    case K::Done: return L::is_value(c->e);
    case K::FunLocal: return subset(fcv(c.c1()), NameSet{c->f}) && subset(fev(c.c1()), LocVarSet{{c->l1, c->x}});
    case K::FunGlobal: return subset(fcv(c.c1()), NameSet{c->f, c->x}) && fev(c.c1()).empty();
    default: return false;
  }
}

// ---- canonical renaming of every binder (choreography- and local-level)

template <class L>
struct CanonEnv {
  std::map<Location, Renaming> local;
  Renaming global;
};

template <class L>
Chor<L> canonicalize(const Chor<L>& c, const CanonEnv<L>& env, int depth) {
  using K = typename Chor<L>::Kind;
  auto ce = [&](const Location& l, const typename L::Expr& e) {
    auto it = env.local.find(l);
    static const Renaming empty;
    return L::canonicalize(e, it == env.local.end() ? empty : it->second, depth);
  };
  auto bind_local = [&](const Location& l, const Name& x, int d) {
    CanonEnv<L> e2 = env;
    e2.local[l][x] = canonical_binder(d);
    return e2;
  };
  switch (c.kind()) {
    case K::Var: return Chor<L>::var(rename_lookup(env.global, c->x));
    case K::Done: return c.with_expr(ce(c->l1, c->e));
    case K::Send: {
      auto e2 = bind_local(c->l2, c->x, depth);
      return Chor<L>::send(c->l1, ce(c->l1, c->e), c->l2, canonical_binder(depth), canonicalize(c.c1(), e2, depth + 1));
    }
    case K::If:
      return Chor<L>::ite(c->l1, ce(c->l1, c->e), canonicalize(c.c1(), env, depth), canonicalize(c.c2(), env, depth));
    case K::Sync: return c.with(canonicalize(c.c1(), env, depth));
    case K::DefLocal: {
      auto e2 = bind_local(c->l1, c->x, depth);
      return Chor<L>::def_local(c->l1, canonical_binder(depth), canonicalize(c.c1(), env, depth),
                                canonicalize(c.c2(), e2, depth + 1));
    }
    case K::FunLocal: {
      auto e2 = bind_local(c->l1, c->x, depth + 1);
      e2.global[c->f] = canonical_binder(depth);
      return c.with_fun_name(canonical_binder(depth))
          .with_binder(canonical_binder(depth + 1))
          .with(canonicalize(c.c1(), e2, depth + 2));
    }
    case K::FunGlobal: {
      CanonEnv<L> e2 = env;
      e2.global[c->f] = canonical_binder(depth);
      e2.global[c->x] = canonical_binder(depth + 1);
      return c.with_fun_name(canonical_binder(depth))
          .with_binder(canonical_binder(depth + 1))
          .with(canonicalize(c.c1(), e2, depth + 2));
    }
    case K::AppLocal: return Chor<L>::app_local(c->l1, canonicalize(c.c1(), env, depth), ce(c->l1, c->e));
    case K::AppGlobal: return c.with(canonicalize(c.c1(), env, depth), canonicalize(c.c2(), env, depth));
  }
  return c;
}

template <class L>
Chor<L> canonicalize(const Chor<L>& c) {
  return canonicalize(c, CanonEnv<L>{}, 0);
}

template <class L>
bool alpha_equal(const Chor<L>& a, const Chor<L>& b) {
  return canonicalize(a) == canonicalize(b);
}

// ---- subterm access by path

template <class L>
std::optional<Chor<L>> subterm(const Chor<L>& c, const Path& p, std::size_t i = 0) {
  if (i == p.size()) return c;
  auto ch = c.children();
  if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= ch.size()) return std::nullopt;
  return subterm(ch[static_cast<std::size_t>(p[i])], p, i + 1);
}

template <class L>
Chor<L> replace_at(const Chor<L>& c, const Path& p, const Chor<L>& r, std::size_t i = 0) {
  if (i == p.size()) return r;
  if (p[i] == 0) return c.with(replace_at(c.c1(), p, r, i + 1));
  return c.with(std::nullopt, replace_at(c.c2(), p, r, i + 1));
}

template <class L>
std::size_t chor_size(const Chor<L>& c) {
  std::size_t n = 1;
  for (auto& ch : c.children()) n += chor_size(ch);
  return n;
}

// ---- printing in the surface syntax accepted by the parser

template <class L>
std::string print_chor(const Chor<L>& c);

template <class L>
std::string print_chor_arg(const Chor<L>& c) {
  if (c.kind() == Chor<L>::Kind::Var) return c->x;
  return "(" + print_chor(c) + ")";
}

template <class L>
std::string print_chor(const Chor<L>& c) {
  using K = typename Chor<L>::Kind;
  switch (c.kind()) {
    case K::Var: return c->x;
    case K::Done: return c->l1.name + "." + L::print_atomic(c->e);
    case K::Send:
      return c->l1.name + "." + L::print_atomic(c->e) + " ~> " + c->l2.name + "." + c->x + "; " + print_chor(c.c1());
    case K::If:
      return "if " + c->l1.name + "." + L::print_atomic(c->e) + " then " + print_chor(c.c1()) + " else " +
             print_chor(c.c2());
    case K::Sync:
      return c->l1.name + "[" + dir_name(c->d) + "] ~> " + c->l2.name + "; " + print_chor(c.c1());
    case K::DefLocal:
      return "let " + c->l1.name + "." + c->x + " := " + print_chor(c.c1()) + " in " + print_chor(c.c2());
    case K::FunLocal: {
      std::string s = "funL " + c->f + "(" + c->l1.name + "." + c->x;
      if (c->param_local) s += " : " + L::print_type_atomic(*c->param_local);
      s += ")";
      if (c->result) s += " : " + print_ctype(*c->result);
      return s + " := " + print_chor(c.c1());
    }
    case K::FunGlobal: {
      std::string s = "funG " + c->f + "(" + c->x;
      if (c->param_chor) s += " : " + print_ctype(*c->param_chor);
      s += ")";
      if (c->result) s += " : " + print_ctype(*c->result);
      return s + " := " + print_chor(c.c1());
    }
    case K::AppLocal: return "appL " + c->l1.name + " " + print_chor_arg(c.c1()) + " " + L::print_atomic(c->e);
    case K::AppGlobal: return "appG " + print_chor_arg(c.c1()) + " " + print_chor_arg(c.c2());
  }
  return "?";
}

}  // namespace pirouette
