#pragma once

#include <deque>
#include <unordered_set>

#include "pirouette/semantics.hpp"

namespace pirouette {

enum class SwapRule { SendSend, SendSync, SyncSend, SendIf, IfSend, SyncSync, SyncIf, IfSync, IfIf };

inline constexpr SwapRule all_swap_rules[] = {SwapRule::SendSend, SwapRule::SendSync, SwapRule::SyncSend,
                                              SwapRule::SendIf,   SwapRule::IfSend,   SwapRule::SyncSync,
                                              SwapRule::SyncIf,   SwapRule::IfSync,   SwapRule::IfIf};

inline const char* swap_rule_name(SwapRule r) {
  switch (r) {
    case SwapRule::SendSend: return "SwapSendSend";
    case SwapRule::SendSync: return "SwapSendSync";
    case SwapRule::SyncSend: return "SwapSyncSend";
    case SwapRule::SendIf: return "SwapSendIf";
    case SwapRule::IfSend: return "SwapIfSend";
    case SwapRule::SyncSync: return "SwapSyncSync";
    case SwapRule::SyncIf: return "SwapSyncIf";
    case SwapRule::IfSync: return "SwapIfSync";
    case SwapRule::IfIf: return "SwapIfIf";
  }
  return "?";
}

inline SwapRule swap_inverse(SwapRule r) {
  switch (r) {
    case SwapRule::SendSync: return SwapRule::SyncSend;
    case SwapRule::SyncSend: return SwapRule::SendSync;
    case SwapRule::SendIf: return SwapRule::IfSend;
    case SwapRule::IfSend: return SwapRule::SendIf;
    case SwapRule::SyncIf: return SwapRule::IfSync;
    case SwapRule::IfSync: return SwapRule::SyncIf;
    default: return r;
  }
}

namespace detail {

inline bool disjoint2(const Location& a, const Location& b, const Location& c, const Location& d) {
  return a != c && a != d && b != c && b != d;
}

// Brings the binders of two sends at the same receiver to a common name.
template <class L>
std::optional<std::tuple<Name, Chor<L>, Chor<L>>> unify_recv_binders(const Location& at, const Name& x, const Chor<L>& k1,
                                                                     const Name& y, const Chor<L>& k2) {
  if (x == y) return std::tuple{x, k1, k2};
  if (!fev_at(k2, at).count(x)) return std::tuple{x, k1, subst_local(k2, at, y, L::var(x))};
  Name z = fresh_name(x, set_union(all_names(k1), all_names(k2)));
  return std::tuple{z, subst_local(k1, at, x, L::var(z)), subst_local(k2, at, y, L::var(z))};
}

}  // namespace detail

// Applies one swap schema at the root, if its shape and side conditions match.
template <class L>
std::optional<Chor<L>> apply_swap(SwapRule rule, const Chor<L>& c) {
  using C = Chor<L>;
  using K = typename C::Kind;
  auto is = [](const C& x, K k) { return x.kind() == k; };
  switch (rule) {
    case SwapRule::SendSend: {
      if (!is(c, K::Send) || !is(c.c1(), K::Send)) break;
      C in = c.c1();
      if (!detail::disjoint2(c->l1, c->l2, in->l1, in->l2)) break;
      return C::send(in->l1, in->e, in->l2, in->x, C::send(c->l1, c->e, c->l2, c->x, in.c1()));
    }
    case SwapRule::SendSync: {
      if (!is(c, K::Send) || !is(c.c1(), K::Sync)) break;
      C in = c.c1();
      if (!detail::disjoint2(c->l1, c->l2, in->l1, in->l2)) break;
      return C::sync(in->l1, in->d, in->l2, C::send(c->l1, c->e, c->l2, c->x, in.c1()));
    }
    case SwapRule::SyncSend: {
      if (!is(c, K::Sync) || !is(c.c1(), K::Send)) break;
      C in = c.c1();
      if (!detail::disjoint2(c->l1, c->l2, in->l1, in->l2)) break;
      return C::send(in->l1, in->e, in->l2, in->x, C::sync(c->l1, c->d, c->l2, in.c1()));
    }
    case SwapRule::SyncSync: {
      if (!is(c, K::Sync) || !is(c.c1(), K::Sync)) break;
      C in = c.c1();
      if (!detail::disjoint2(c->l1, c->l2, in->l1, in->l2)) break;
      return C::sync(in->l1, in->d, in->l2, C::sync(c->l1, c->d, c->l2, in.c1()));
    }
    case SwapRule::SendIf: {
      if (!is(c, K::Send) || !is(c.c1(), K::If)) break;
      C in = c.c1();
      if (c->l1 == in->l1 || c->l2 == in->l1) break;
      return C::ite(in->l1, in->e, C::send(c->l1, c->e, c->l2, c->x, in.c1()),
                    C::send(c->l1, c->e, c->l2, c->x, in.c2()));
    }
    case SwapRule::SyncIf: {
      if (!is(c, K::Sync) || !is(c.c1(), K::If)) break;
      C in = c.c1();
      if (c->l1 == in->l1 || c->l2 == in->l1) break;
      return C::ite(in->l1, in->e, C::sync(c->l1, c->d, c->l2, in.c1()), C::sync(c->l1, c->d, c->l2, in.c2()));
    }
    case SwapRule::IfSend: {
      if (!is(c, K::If) || !is(c.c1(), K::Send) || !is(c.c2(), K::Send)) break;
      C a = c.c1(), b = c.c2();
      if (a->l1 != b->l1 || a->l2 != b->l2 || !(a->e == b->e)) break;
      if (c->l1 == a->l1 || c->l1 == a->l2) break;
      auto u = detail::unify_recv_binders(a->l2, a->x, a.c1(), b->x, b.c1());
      auto& [z, k1, k2] = *u;
      return C::send(a->l1, a->e, a->l2, z, C::ite(c->l1, c->e, k1, k2));
    }
    case SwapRule::IfSync: {
      if (!is(c, K::If) || !is(c.c1(), K::Sync) || !is(c.c2(), K::Sync)) break;
      C a = c.c1(), b = c.c2();
      if (a->l1 != b->l1 || a->l2 != b->l2 || a->d != b->d) break;
      if (c->l1 == a->l1 || c->l1 == a->l2) break;
      return C::sync(a->l1, a->d, a->l2, C::ite(c->l1, c->e, a.c1(), b.c1()));
    }
    case SwapRule::IfIf: {
      if (!is(c, K::If) || !is(c.c1(), K::If) || !is(c.c2(), K::If)) break;
      C a = c.c1(), b = c.c2();
      if (a->l1 != b->l1 || !(a->e == b->e) || c->l1 == a->l1) break;
      return C::ite(a->l1, a->e, C::ite(c->l1, c->e, a.c1(), b.c1()), C::ite(c->l1, c->e, a.c2(), b.c2()));
    }
  }
  return std::nullopt;
}

template <class L>
struct SwapRewrite {
  Path path;
  SwapRule rule;
  Chor<L> result;
};

namespace detail {

template <class L>
void rewrites_into(const Chor<L>& root, const Chor<L>& c, Path& path, std::vector<SwapRewrite<L>>& out) {
  for (SwapRule r : all_swap_rules)
    if (auto res = apply_swap(r, c)) out.push_back({path, r, replace_at(root, path, *res)});
  auto ch = c.children();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    path.push_back(static_cast<int>(i));
    rewrites_into(root, ch[i], path, out);
    path.pop_back();
  }
}

}  // namespace detail

// Every single-step swap rewrite at any subterm position.
template <class L>
std::vector<SwapRewrite<L>> swap_rewrites(const Chor<L>& c) {
  std::vector<SwapRewrite<L>> out;
  Path p;
  detail::rewrites_into(c, c, p, out);
  return out;
}

template <class L>
Chor<L> random_equiv_variant(const Chor<L>& c0, std::uint64_t seed, int steps) {
  Rng rng(seed);
  Chor<L> c = c0;
  for (int i = 0; i < steps; ++i) {
    auto rw = swap_rewrites(c);
    if (rw.empty()) break;
    c = rw[rng.below(rw.size())].result;
  }
  return c;
}

template <class L>
std::string canon_key(const Chor<L>& c) {
  return print_chor(canonicalize(c));
}

enum class EquivVerdict { Equivalent, NotFound, Truncated };

// Bidirectional search for C1 == C2 modulo swaps with at most `fuel` rewrites in total.
template <class L>
EquivVerdict equiv_search(const Chor<L>& a, const Chor<L>& b, int fuel, std::size_t max_states = 20000) {
  std::string ka = canon_key(a), kb = canon_key(b);
  if (ka == kb) return EquivVerdict::Equivalent;
  std::unordered_set<std::string> seen_a{ka}, seen_b{kb};
  std::vector<Chor<L>> front_a{a}, front_b{b};
  for (int used = 0; used < fuel; ++used) {
    if (front_a.empty() && front_b.empty()) return EquivVerdict::NotFound;
    bool expand_a = !front_a.empty() && (front_b.empty() || front_a.size() <= front_b.size());
    auto& front = expand_a ? front_a : front_b;
    auto& seen = expand_a ? seen_a : seen_b;
    auto& other = expand_a ? seen_b : seen_a;
    std::vector<Chor<L>> next;
    for (auto& c : front) {
      for (auto& rw : swap_rewrites(c)) {
        std::string k = canon_key(rw.result);
        if (other.count(k)) return EquivVerdict::Equivalent;
        if (seen.insert(k).second) next.push_back(rw.result);
        if (seen_a.size() + seen_b.size() > max_states) return EquivVerdict::Truncated;
      }
    }
    front = std::move(next);
  }
  return EquivVerdict::NotFound;
}

// false means "not found within fuel".
template <class L>
bool equiv_bounded(const Chor<L>& a, const Chor<L>& b, int fuel, std::size_t max_states = 20000) {
  return equiv_search(a, b, fuel, max_states) == EquivVerdict::Equivalent;
}

// Every choreography reachable by at most `fuel` swap rewrites, one representative per renaming class.
template <class L>
std::vector<Chor<L>> equiv_closure(const Chor<L>& c, int fuel, std::size_t max_states = 20000) {
  std::vector<Chor<L>> all{c};
  std::unordered_set<std::string> seen{canon_key(c)};
  std::vector<Chor<L>> front{c};
  for (int i = 0; i < fuel && !front.empty(); ++i) {
    std::vector<Chor<L>> next;
    for (auto& x : front)
      for (auto& rw : swap_rewrites(x))
        if (seen.insert(canon_key(rw.result)).second) {
          next.push_back(rw.result);
          all.push_back(rw.result);
          if (all.size() >= max_states) return all;
        }
    front = std::move(next);
  }
  return all;
}

namespace detail {

// Head reductions of the equivalence-based semantics: no block sets and no reduction under prefixes.
template <class L>
void head_steps(const Chor<L>& c, std::vector<ChorStep<L>>& out) {
  using K = typename Chor<L>::Kind;
  using R = Redex<L>;
  switch (c.kind()) {
    case K::Done:
      for (auto& e2 : L::step(c->e)) out.push_back({R::done_e(c->l1, c->e, e2), c.with_expr(e2)});
      return;
    case K::Send:
      if (c->l1 == c->l2) return;
      for (auto& e2 : L::step(c->e)) out.push_back({R::send_e(c->l1, c->e, e2, c->l2), c.with_expr(e2)});
      if (L::is_value(c->e)) out.push_back({R::send_v(c->l1, c->e, c->l2), subst_local(c.c1(), c->l2, c->x, c->e)});
      return;
    case K::If:
      for (auto& e2 : L::step(c->e)) out.push_back({R::if_e(c->l1, c->e, e2), c.with_expr(e2)});
      if (c->e == L::true_value()) out.push_back({R::if_t(c->l1), c.c1()});
      if (c->e == L::false_value()) out.push_back({R::if_f(c->l1), c.c2()});
      return;
    case K::Sync:
      if (c->l1 != c->l2) out.push_back({R::sync(c->l1, c->d, c->l2), c.c1()});
      return;
    case K::DefLocal: {
      std::vector<ChorStep<L>> inner;
      head_steps(c.c1(), inner);
      for (auto& s : inner) out.push_back({R::arg(s.redex), c.with(s.next)});
      Chor<L> bound = c.c1();
      if (bound.kind() == K::Done && bound->l1 == c->l1 && L::is_value(bound->e))
        out.push_back({R::def_local_v(c->l1, bound->e), subst_local(c.c2(), c->l1, c->x, bound->e)});
      return;
    }
    case K::AppLocal: {
      std::vector<ChorStep<L>> inner;
      head_steps(c.c1(), inner);
      for (auto& s : inner) out.push_back({R::fun(s.redex), c.with(s.next)});
      for (auto& e2 : L::step(c->e)) out.push_back({R::app_local_e(c->l1, c->e, e2), c.with_expr(e2)});
      Chor<L> fn = c.c1();
      if (fn.kind() == K::FunLocal && fn->l1 == c->l1 && L::is_value(c->e))
        out.push_back({R::app_local_v(c->l1, c->e), subst_global(subst_local(fn.c1(), c->l1, fn->x, c->e), fn->f, fn)});
      return;
    }
    case K::AppGlobal: {
      std::vector<ChorStep<L>> inner;
      head_steps(c.c1(), inner);
      for (auto& s : inner) out.push_back({R::fun(s.redex), c.with(s.next)});
      inner.clear();
      head_steps(c.c2(), inner);
      for (auto& s : inner) out.push_back({R::arg(s.redex), c.with(std::nullopt, s.next)});
      Chor<L> fn = c.c1(), arg = c.c2();
      if (fn.kind() == K::FunGlobal && chor_is_value(arg))
        out.push_back({R::app_global_v(), subst_global(fn.c1(), ChorSubst<L>{{fn->x, arg}, {fn->f, fn}})});
      return;
    }
    default: return;
  }
}

}  // namespace detail

// Steps of the equivalence-based semantics, exploring at most `fuel` swap rewrites before the head step.
// Results are representatives of their equivalence class.
template <class L>
std::vector<ChorStep<L>> equiv_semantics_step(const Chor<L>& c, int fuel, std::size_t max_states = 20000) {
  std::vector<ChorStep<L>> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (auto& v : equiv_closure(c, fuel, max_states)) {
    std::vector<ChorStep<L>> steps;
    detail::head_steps(v, steps);
    for (auto& s : steps)
      if (seen.insert({print_redex(s.redex), canon_key(s.next)}).second) out.push_back(s);
  }
  return out;
}

}  // namespace pirouette
