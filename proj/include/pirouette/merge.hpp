#pragma once

#include "pirouette/control.hpp"

namespace pirouette {

namespace detail {

// Renames two local binders to a common name so that their bodies can be compared.
template <class L>
std::tuple<Name, Ctrl<L>, Ctrl<L>> unify_ctrl_binders(const Name& x, const Ctrl<L>& a, const Name& y, const Ctrl<L>& b) {
  if (x == y) return {x, a, b};
  if (!ctrl_fv_local(b).count(x)) return {x, a, ctrl_subst_local(b, y, L::var(x))};
  Name z = fresh_name(x, set_union(ctrl_all_names(a), ctrl_all_names(b)));
  return {z, ctrl_subst_local(a, x, L::var(z)), ctrl_subst_local(b, y, L::var(z))};
}

}  // namespace detail

// Partial merge of two control programs. Binders are compared up to renaming.
template <class L>
std::optional<Ctrl<L>> merge(const Ctrl<L>& p, const Ctrl<L>& q) {
  using K = typename Ctrl<L>::Kind;
  using C = Ctrl<L>;
  using Opt = std::optional<C>;
  auto both = [](const Opt& a, const Opt& b, auto mk) -> Opt {
    if (!a || !b) return std::nullopt;
    return mk(*a, *b);
  };
  const K kp = p.kind(), kq = q.kind();
  const bool allow_p = kp == K::AllowL || kp == K::AllowR || kp == K::AllowLR;
  const bool allow_q = kq == K::AllowL || kq == K::AllowR || kq == K::AllowLR;
  if (allow_p && allow_q) {
    if (p->loc != q->loc) return std::nullopt;
    const Location& l = p->loc;
    auto lr = [&](const Opt& a, const Opt& b) -> Opt {
      if (!a || !b) return std::nullopt;
      return C::allow_lr(l, *a, *b);
    };
    if (kp == K::AllowL && kq == K::AllowL) {
      auto m = merge(p.a(), q.a());
      return m ? Opt(C::allow_l(l, *m)) : std::nullopt;
    }
    if (kp == K::AllowR && kq == K::AllowR) {
      auto m = merge(p.a(), q.a());
      return m ? Opt(C::allow_r(l, *m)) : std::nullopt;
    }
    if (kp == K::AllowL && kq == K::AllowR) return C::allow_lr(l, p.a(), q.a());
    if (kp == K::AllowR && kq == K::AllowL) return C::allow_lr(l, q.a(), p.a());
    if (kp == K::AllowL && kq == K::AllowLR) return lr(merge(p.a(), q.a()), q.b());
    if (kp == K::AllowR && kq == K::AllowLR) return lr(q.a(), merge(p.a(), q.b()));
    if (kp == K::AllowLR && kq == K::AllowL) return lr(merge(p.a(), q.a()), p.b());
    if (kp == K::AllowLR && kq == K::AllowR) return lr(p.a(), merge(p.b(), q.a()));
    return lr(merge(p.a(), q.a()), merge(p.b(), q.b()));
  }
  if (kp != kq) return std::nullopt;
  switch (kp) {
    case K::Var: return p->x == q->x ? Opt(p) : std::nullopt;
    case K::Unit: return p;
    case K::Ret: return p->e == q->e ? Opt(p) : std::nullopt;
    case K::FunLocal:
    case K::FunGlobal: return ctrl_alpha_equal(p, q) ? Opt(p) : std::nullopt;
    case K::AppLocal: {
      if (!(p->e == q->e)) return std::nullopt;
      auto m = merge(p.a(), q.a());
      return m ? Opt(C::app_local(*m, p->e)) : std::nullopt;
    }
    case K::AppGlobal:
      return both(merge(p.a(), q.a()), merge(p.b(), q.b()), [](const C& a, const C& b) { return C::app_global(a, b); });
    case K::LetRet: {
      auto [z, pb, qb] = detail::unify_ctrl_binders(p->x, p.b(), q->x, q.b());
      return both(merge(p.a(), q.a()), merge(pb, qb), [&](const C& a, const C& b) { return C::let_ret(z, a, b); });
    }
    case K::Send: {
      if (!(p->e == q->e) || p->loc != q->loc) return std::nullopt;
      auto m = merge(p.a(), q.a());
      return m ? Opt(C::send(p->e, p->loc, *m)) : std::nullopt;
    }
    case K::Recv: {
      if (p->loc != q->loc) return std::nullopt;
      auto [z, pb, qb] = detail::unify_ctrl_binders(p->x, p.a(), q->x, q.a());
      auto m = merge(pb, qb);
      return m ? Opt(C::recv(z, p->loc, *m)) : std::nullopt;
    }
    case K::If:
      if (!(p->e == q->e)) return std::nullopt;
      return both(merge(p.a(), q.a()), merge(p.b(), q.b()), [&](const C& a, const C& b) { return C::ite(p->e, a, b); });
    case K::Choose: {
      if (p->d != q->d || p->loc != q->loc) return std::nullopt;
      auto m = merge(p.a(), q.a());
      return m ? Opt(C::choose(p->d, p->loc, *m)) : std::nullopt;
    }
    default: return std::nullopt;
  }
}

// p is "less nondeterministic" than q: q may offer extra allow branches.
template <class L>
bool lnd(const Ctrl<L>& p, const Ctrl<L>& q) {
  using K = typename Ctrl<L>::Kind;
  const K kp = p.kind(), kq = q.kind();
  if (kp == K::AllowL && (kq == K::AllowL || kq == K::AllowLR)) return p->loc == q->loc && lnd(p.a(), q.a());
  if (kp == K::AllowR && kq == K::AllowR) return p->loc == q->loc && lnd(p.a(), q.a());
  if (kp == K::AllowR && kq == K::AllowLR) return p->loc == q->loc && lnd(p.a(), q.b());
  if (kp != kq) return false;
  switch (kp) {
    case K::Var: return p->x == q->x;
    case K::Unit: return true;
    case K::Ret: return p->e == q->e;
    case K::FunLocal:
    case K::FunGlobal: return ctrl_alpha_equal(p, q);
    case K::AppLocal: return p->e == q->e && lnd(p.a(), q.a());
    case K::AppGlobal: return lnd(p.a(), q.a()) && lnd(p.b(), q.b());
    case K::LetRet: {
      auto [z, pb, qb] = detail::unify_ctrl_binders(p->x, p.b(), q->x, q.b());
      return lnd(p.a(), q.a()) && lnd(pb, qb);
    }
    case K::Send: return p->e == q->e && p->loc == q->loc && lnd(p.a(), q.a());
    case K::Recv: {
      if (p->loc != q->loc) return false;
      auto [z, pb, qb] = detail::unify_ctrl_binders(p->x, p.a(), q->x, q.a());
      return lnd(pb, qb);
    }
    case K::If: return p->e == q->e && lnd(p.a(), q.a()) && lnd(p.b(), q.b());
    case K::Choose: return p->d == q->d && p->loc == q->loc && lnd(p.a(), q.a());
    case K::AllowLR: return p->loc == q->loc && lnd(p.a(), q.a()) && lnd(p.b(), q.b());
    default: return false;
  }
}

}  // namespace pirouette
