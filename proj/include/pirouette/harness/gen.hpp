#pragma once

#include <stdexcept>

#include "pirouette/system.hpp"
#include "pirouette/types.hpp"

namespace pirouette {

struct GenWeights {
  int intro = 20, var = 10, send = 20, ite = 10, sync = 8, def_local = 10, app_local = 8, app_global = 6;
};

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 4;
  int locations = 4;
  bool projectable = true;
  GenWeights weights{};
};

inline std::vector<Location> location_pool(int n) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  std::vector<Location> out;
  for (int i = 0; i < n && i < 8; ++i) out.push_back(Location{names[i]});
  return out;
}

template <class L>
struct ChorGen {
  using C = Chor<L>;
  using T = ChorType<L>;
  using TK = typename T::Kind;
  using LT = typename L::Type;

  Rng rng;
  GenConfig cfg;
  std::vector<Location> locs;

  explicit ChorGen(const GenConfig& c) : rng(c.seed), cfg(c), locs(location_pool(c.locations)) {}

  Location loc() { return rng.pick(locs); }
  std::pair<Location, Location> two_locs() {
    Location a = loc(), b = loc();
    while (b == a && locs.size() > 1) b = loc();
    return {a, b};
  }
  Name local_name() { return rng.pick(std::vector<Name>{"x", "y", "z"}); }
  Name fun_name() { return rng.pick(std::vector<Name>{"F", "G", "H"}); }
  Name chor_name() { return rng.pick(std::vector<Name>{"X", "Y"}); }

  typename L::Expr expr(const TypeCtx<L>& g, const Location& l, const LT& t, int depth = 2) {
    return L::gen_expr(rng, ctx_project(g, l), t, depth);
  }

  T ctype(int depth) {
    int r = static_cast<int>(rng.below(100));
    if (depth <= 0 || r < 70) return T::at(loc(), L::gen_type(rng));
    if (r < 90) return T::local_fun(loc(), L::gen_type(rng), T::at(loc(), L::gen_type(rng)));
    return T::global_fun(T::at(loc(), L::gen_type(rng)), T::at(loc(), L::gen_type(rng)));
  }

  std::vector<Name> vars_of(const TypeCtx<L>& g, const T& t) {
    std::vector<Name> out;
    for (auto& [x, ty] : g.delta) {
      auto cur = g.lookup(x);
      if (cur && *cur == t && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  }

  // Canonical constructor of the type.
  C intro(const TypeCtx<L>& g, const T& t, int depth) {
    switch (t.kind()) {
      case TK::At: return C::done(t->loc, expr(g, t->loc, t->t));
      case TK::LocalFun: {
        Name x = local_name();
        C body = gen(g.bind_local(t->loc, x, t->t), t.res(), depth - 1);
        return C::fun_local(t->loc, fun_name(), x, body, t->t, t.res());
      }
      case TK::GlobalFun: {
        Name x = chor_name();
        C body = gen(g.bind_chor(x, t.arg()), t.res(), depth - 1);
        return C::fun_global(fun_name(), x, body, t.arg(), t.res());
      }
    }
    throw std::logic_error("bad type");
  }

  // Inserts Sync pairs from the guard to every location whose branch projections do not merge.
  std::pair<C, C> inform(const Location& guard, C a, C b) {
    for (auto& l : locs) {
      if (l == guard) continue;
      auto pa = project(a, l), pb = project(b, l);
      if (!pa || !pb) continue;
      if (merge(*pa, *pb)) continue;
      a = C::sync(guard, Dir::L, l, a);
      b = C::sync(guard, Dir::R, l, b);
    }
    return {a, b};
  }

  C gen(const TypeCtx<L>& g, const T& t, int depth) {
    auto vars = vars_of(g, t);
    if (depth <= 0) {
      if (!vars.empty() && rng.chance(40)) return C::var(rng.pick(vars));
      return intro(g, t, 0);
    }
    const GenWeights& w = cfg.weights;
    int total = w.intro + (vars.empty() ? 0 : w.var) + w.send + w.ite + w.sync + w.def_local + w.app_local + w.app_global;
    int r = static_cast<int>(rng.below(static_cast<std::size_t>(total)));
    auto take = [&](int weight) {
      if (r < weight) return true;
      r -= weight;
      return false;
    };
    if (take(w.intro)) return intro(g, t, depth);
    if (!vars.empty() && take(w.var)) return C::var(rng.pick(vars));
    if (take(w.send)) {
      auto [a, b] = two_locs();
      LT ty = L::gen_type(rng);
      Name x = local_name();
      auto e = expr(g, a, ty);
      return C::send(a, e, b, x, gen(g.bind_local(b, x, ty), t, depth - 1));
    }
    if (take(w.ite)) {
      Location l = loc();
      auto e = expr(g, l, L::bool_type());
      C a = gen(g, t, depth - 1), b = gen(g, t, depth - 1);
      if (cfg.projectable) std::tie(a, b) = inform(l, a, b);
      return C::ite(l, e, a, b);
    }
    if (take(w.sync)) {
      auto [a, b] = two_locs();
      return C::sync(a, rng.chance(50) ? Dir::L : Dir::R, b, gen(g, t, depth - 1));
    }
    if (take(w.def_local)) {
      Location l = loc();
      LT ty = L::gen_type(rng);
      Name x = local_name();
      C bound = gen(g, T::at(l, ty), depth - 1);
      return C::def_local(l, x, bound, gen(g.bind_local(l, x, ty), t, depth - 1));
    }
    if (take(w.app_local)) {
      Location l = loc();
      LT ty = L::gen_type(rng);
      C fn = gen(g, T::local_fun(l, ty, t), depth - 1);
      return C::app_local(l, fn, expr(g, l, ty));
    }
    T arg_t = ctype(0);
    C fn = gen(g, T::global_fun(arg_t, t), depth - 1);
    return C::app_global(fn, gen(g, arg_t, depth - 1));
  }
};

template <class L>
struct GeneratedChor {
  Chor<L> chor;
  ChorType<L> type;
};

// Generates C with `g ⊢ C : T`; the type is re-derived by the checker as a guard against generator bugs.
template <class L>
GeneratedChor<L> gen_typed_chor_in(const GenConfig& cfg, const TypeCtx<L>& g, std::optional<ChorType<L>> want = std::nullopt) {
  ChorGen<L> gen(cfg);
  ChorType<L> t = want ? *want : gen.ctype(1);
  Chor<L> c = gen.gen(g, t, cfg.max_depth);
  auto got = chor_infer(g, c);
  if (!got || !(*got == t))
    throw std::logic_error("generator produced " + print_chor(c) + " which does not have type " + print_ctype(t) +
                           (got ? " (got " + print_ctype(*got) + ")" : " (" + got.error().str() + ")"));
  return {c, t};
}

template <class L>
GeneratedChor<L> gen_typed_chor(const GenConfig& cfg) {
  return gen_typed_chor_in<L>(cfg, TypeCtx<L>{});
}

// ---- control programs

template <class L>
struct CtrlGen {
  using E = Ctrl<L>;
  using K = typename E::Kind;
  Rng rng;
  std::vector<Location> locs;
  std::vector<typename L::Expr> values;

  CtrlGen(std::uint64_t seed, int nlocs) : rng(seed), locs(location_pool(nlocs)), values(L::sample_values()) {}

  typename L::Expr val() { return rng.pick(values); }
  Location loc() { return rng.pick(locs); }
  Name name() { return rng.pick(std::vector<Name>{"x", "y"}); }
  Dir dir() { return rng.chance(50) ? Dir::L : Dir::R; }

  E leaf() {
    switch (rng.below(4)) {
      case 0: return E::unit();
      case 1: return E::ret(val());
      case 2: return E::var(rng.pick(std::vector<Name>{"X", "Y"}));
      default: return E::ret(L::var(name()));
    }
  }

  E allow(const Location& l, Dir d, std::vector<E> kids) {
    if (kids.size() == 2) return E::allow_lr(l, kids[0], kids[1]);
    return d == Dir::L ? E::allow_l(l, kids[0]) : E::allow_r(l, kids[0]);
  }

  // n programs sharing a skeleton; allow nodes pick their branches independently so that merges are often defined.
  std::vector<E> family(std::size_t n, int depth) {
    std::vector<E> out;
    if (depth <= 0 || rng.chance(15)) {
      E l = leaf();
      for (std::size_t i = 0; i < n; ++i) out.push_back(rng.chance(8) ? leaf() : l);
      return out;
    }
    if (rng.chance(5)) {
      for (std::size_t i = 0; i < n; ++i) out.push_back(family(1, depth - 1)[0]);
      return out;
    }
    auto same = [&](auto mk, int arity) {
      std::vector<std::vector<E>> kids;
      for (int k = 0; k < arity; ++k) kids.push_back(family(n, depth - 1));
      for (std::size_t i = 0; i < n; ++i) out.push_back(arity == 1 ? mk(kids[0][i], kids[0][i]) : mk(kids[0][i], kids[1][i]));
    };
    switch (rng.below(10)) {
      case 0: {
        auto e = val();
        Location l = loc();
        same([&](E a, E) { return E::send(e, l, a); }, 1);
        break;
      }
      case 1: {
        Name x = name();
        Location l = loc();
        same([&](E a, E) { return E::recv(x, l, a); }, 1);
        break;
      }
      case 2: {
        auto e = rng.chance(50) ? L::true_value() : L::var(name());
        same([&](E a, E b) { return E::ite(e, a, b); }, 2);
        break;
      }
      case 3: {
        Dir d = dir();
        Location l = loc();
        same([&](E a, E) { return E::choose(d, l, a); }, 1);
        break;
      }
      case 4: {
        Name x = name();
        same([&](E a, E b) { return E::let_ret(x, a, b); }, 2);
        break;
      }
      case 5: {
        E body = family(1, depth - 1)[0];
        Name f = rng.pick(std::vector<Name>{"F", "G"});
        E fn = rng.chance(50) ? E::fun_local(f, name(), body) : E::fun_global(f, "X", body);
        auto args = family(n, depth - 1);
        for (std::size_t i = 0; i < n; ++i) out.push_back(fn.kind() == K::FunLocal ? E::app_local(fn, val()) : E::app_global(fn, args[i]));
        break;
      }
      case 6:
        same([&](E a, E b) { return E::app_global(a, b); }, 2);
        break;
      default: {
        Location l = loc();
        auto lefts = family(n, depth - 1), rights = family(n, depth - 1);
        for (std::size_t i = 0; i < n; ++i) {
          switch (rng.below(3)) {
            case 0: out.push_back(E::allow_l(l, lefts[i])); break;
            case 1: out.push_back(E::allow_r(l, rights[i])); break;
            default: out.push_back(E::allow_lr(l, lefts[i], rights[i])); break;
          }
        }
        break;
      }
    }
    return out;
  }

  // A program at least as nondeterministic as e: some one-branch allows gain the other branch.
  E widen(const E& e) {
    switch (e.kind()) {
      case K::AllowL:
        if (rng.chance(50)) return E::allow_lr(e->loc, widen(e.a()), family(1, 2)[0]);
        return E::allow_l(e->loc, widen(e.a()));
      case K::AllowR:
        if (rng.chance(50)) return E::allow_lr(e->loc, family(1, 2)[0], widen(e.a()));
        return E::allow_r(e->loc, widen(e.a()));
      case K::FunLocal:
      case K::FunGlobal: return e;
      default: {
        auto ch = e.children();
        if (ch.empty()) return e;
        if (ch.size() == 1) return e.with(widen(ch[0]));
        return e.with(widen(ch[0]), widen(ch[1]));
      }
    }
  }
};

// ---- shrinking

template <class L>
void collect_paths(const Chor<L>& c, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  auto ch = c.children();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    cur.push_back(static_cast<int>(i));
    collect_paths(ch[i], cur, out);
    cur.pop_back();
  }
}

// Greedy shrinking: replace the whole term or a subterm by one of its own subterms while `still_fails` holds.
template <class L, class Pred>
Chor<L> shrink_chor(Chor<L> c, Pred still_fails, int max_rounds = 200) {
  for (int round = 0; round < max_rounds; ++round) {
    bool improved = false;
    std::vector<Path> paths;
    Path cur;
    collect_paths(c, cur, paths);
    for (auto& p : paths) {
      Chor<L> s = *subterm(c, p);
      for (auto& child : s.children()) {
        Chor<L> cand = replace_at(c, p, child);
        if (chor_size(cand) >= chor_size(c)) continue;
        if (!fcv(cand).empty() || !fev(cand).empty()) continue;
        if (!chor_infer(cand)) continue;
        if (still_fails(cand)) {
          c = cand;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
  }
  return c;
}

}  // namespace pirouette
