#pragma once

#include <algorithm>
#include <memory>
#include <string>

#include "pirouette/local/concept.hpp"

namespace pirouette {

struct LType;
using LTypePtr = std::shared_ptr<const LType>;

// Int | Bool | T -> T for the typed calculus; Star is the single type of the untyped one.
struct LType {
  enum class Kind { Int, Bool, Arrow, Star } kind;
  LTypePtr dom, cod;
};

struct LambdaType {
  LTypePtr p;
  const LType* operator->() const { return p.get(); }
  static LambdaType make(LType::Kind k, LambdaType a = {}, LambdaType b = {}) {
    return {std::make_shared<const LType>(LType{k, a.p, b.p})};
  }
  static LambdaType Int() { return make(LType::Kind::Int); }
  static LambdaType Bool() { return make(LType::Kind::Bool); }
  static LambdaType Star() { return make(LType::Kind::Star); }
  static LambdaType Arrow(LambdaType a, LambdaType b) { return make(LType::Kind::Arrow, a, b); }
  LambdaType dom() const { return {p->dom}; }
  LambdaType cod() const { return {p->cod}; }
  friend bool operator==(const LambdaType& a, const LambdaType& b) {
    if (a.p == b.p) return true;
    if (a->kind != b->kind) return false;
    if (a->kind != LType::Kind::Arrow) return true;
    return a.dom() == b.dom() && a.cod() == b.cod();
  }
};

// Call-by-value lambda calculus with naturals, booleans, arithmetic and conditionals.
// Typed = true: binders carry annotations and typing is simple types.
// Typed = false: no annotations, every term has type Star.
template <bool Typed>
struct LambdaLang {
  enum class Kind { Var, Num, True, False, Lam, Rec, App, Bin, If };
  enum class Op { Add, Sub, Mul, Lt };
  struct Node;
  struct Expr {
    std::shared_ptr<const Node> p;
    const Node* operator->() const { return p.get(); }
  };
  using Type = LambdaType;
  struct Node {
    Kind kind;
    Name x;       // variable, or parameter of Lam/Rec
    Name f;       // Rec self name
    unsigned long long n = 0;
    Op op = Op::Add;
    Type t1, t2;  // Lam: t1 param. Rec: t1 param, t2 result. Empty when untyped.
    Expr a, b, c;
  };

  static constexpr std::string_view name = Typed ? "minilambda" : "unilambda";
  static constexpr SoundnessFlags soundness = Typed ? SoundnessFlags{true, true, true}
                                                    : SoundnessFlags{true, false, false};

  static Expr mk(Node n) { return Expr{std::make_shared<const Node>(std::move(n))}; }
  static Expr var(const Name& x) { return mk(Node{Kind::Var, x}); }
  static Expr num(unsigned long long n) {
    Node nd{Kind::Num};
    nd.n = n;
    return mk(nd);
  }
  static Expr true_value() { return mk(Node{Kind::True}); }
  static Expr false_value() { return mk(Node{Kind::False}); }
  static Expr lam(const Name& x, Type t, Expr body) {
    Node nd{Kind::Lam, x};
    nd.t1 = t;
    nd.a = body;
    return mk(nd);
  }
  static Expr lam(const Name& x, Expr body) { return lam(x, Type{}, body); }
  static Expr rec(const Name& f, const Name& x, Type t1, Type t2, Expr body) {
    Node nd{Kind::Rec, x, f};
    nd.t1 = t1;
    nd.t2 = t2;
    nd.a = body;
    return mk(nd);
  }
  static Expr app(Expr a, Expr b) {
    Node nd{Kind::App};
    nd.a = a;
    nd.b = b;
    return mk(nd);
  }
  static Expr bin(Op op, Expr a, Expr b) {
    Node nd{Kind::Bin};
    nd.op = op;
    nd.a = a;
    nd.b = b;
    return mk(nd);
  }
  static Expr ite(Expr c, Expr t, Expr e) {
    Node nd{Kind::If};
    nd.a = c;
    nd.b = t;
    nd.c = e;
    return mk(nd);
  }
  static Type bool_type() { return Typed ? Type::Bool() : Type::Star(); }
  static Type int_type() { return Typed ? Type::Int() : Type::Star(); }

  // ---- free variables and substitution

  static void fv_into(const Expr& e, NameSet& bound, NameSet& out) {
    switch (e->kind) {
      case Kind::Var:
        if (!bound.count(e->x)) out.insert(e->x);
        return;
      case Kind::Lam:
      case Kind::Rec: {
        NameSet inner = bound;
        inner.insert(e->x);
        if (e->kind == Kind::Rec) inner.insert(e->f);
        fv_into(e->a, inner, out);
        return;
      }
      case Kind::App:
      case Kind::Bin:
        fv_into(e->a, bound, out);
        fv_into(e->b, bound, out);
        return;
      case Kind::If:
        fv_into(e->a, bound, out);
        fv_into(e->b, bound, out);
        fv_into(e->c, bound, out);
        return;
      default: return;
    }
  }
  static NameSet free_vars(const Expr& e) {
    NameSet bound, out;
    fv_into(e, bound, out);
    return out;
  }

  static Expr subst(const Expr& e, const Name& x, const Expr& v) {
    switch (e->kind) {
      case Kind::Var: return e->x == x ? v : e;
      case Kind::Num:
      case Kind::True:
      case Kind::False: return e;
      case Kind::App: return app(subst(e->a, x, v), subst(e->b, x, v));
      case Kind::Bin: return bin(e->op, subst(e->a, x, v), subst(e->b, x, v));
      case Kind::If: return ite(subst(e->a, x, v), subst(e->b, x, v), subst(e->c, x, v));
      case Kind::Lam:
      case Kind::Rec: {
        bool is_rec = e->kind == Kind::Rec;
        if (e->x == x || (is_rec && e->f == x)) return e;
        NameSet body_fv = free_vars(e->a);
        if (!body_fv.count(x)) return e;
        NameSet vfv = free_vars(v);
        NameSet avoid = set_union(set_union(vfv, body_fv), NameSet{x});
        Expr body = e->a;
        Name px = e->x, pf = e->f;
        if (vfv.count(px)) {
          Name nx = fresh_name(px, set_union(avoid, NameSet{pf}));
          body = subst(body, px, var(nx));
          avoid.insert(nx);
          px = nx;
        }
        if (is_rec && vfv.count(pf)) {
          Name nf = fresh_name(pf, set_union(avoid, NameSet{px}));
          body = subst(body, pf, var(nf));
          pf = nf;
        }
        body = subst(body, x, v);
        return is_rec ? rec(pf, px, e->t1, e->t2, body) : lam(px, e->t1, body);
      }
    }
    return e;
  }

  // ---- values and reduction

  static bool is_value(const Expr& e) {
    switch (e->kind) {
      case Kind::Num:
      case Kind::True:
      case Kind::False: return true;
      case Kind::Lam:
      case Kind::Rec: return free_vars(e).empty();
      default: return false;
    }
  }

  static std::vector<Expr> step(const Expr& e) {
    std::vector<Expr> out;
    auto congr = [&](const Expr& sub, auto rebuild) {
      for (auto& s : step(sub)) out.push_back(rebuild(s));
    };
    switch (e->kind) {
      case Kind::App:
        if (!is_value(e->a)) {
          congr(e->a, [&](const Expr& s) { return app(s, e->b); });
        } else if (!is_value(e->b)) {
          congr(e->b, [&](const Expr& s) { return app(e->a, s); });
        } else if (e->a->kind == Kind::Lam) {
          out.push_back(subst(e->a->a, e->a->x, e->b));
        } else if (e->a->kind == Kind::Rec) {
          out.push_back(subst(subst(e->a->a, e->a->x, e->b), e->a->f, e->a));
        }
        return out;
      case Kind::Bin:
        if (!is_value(e->a)) {
          congr(e->a, [&](const Expr& s) { return bin(e->op, s, e->b); });
        } else if (!is_value(e->b)) {
          congr(e->b, [&](const Expr& s) { return bin(e->op, e->a, s); });
        } else if (e->a->kind == Kind::Num && e->b->kind == Kind::Num) {
          auto l = e->a->n, r = e->b->n;
          switch (e->op) {
            case Op::Add: out.push_back(num(l + r)); break;
            case Op::Sub: out.push_back(num(l > r ? l - r : 0)); break;
            case Op::Mul: out.push_back(num(l * r)); break;
            case Op::Lt: out.push_back(l < r ? true_value() : false_value()); break;
          }
        }
        return out;
      case Kind::If:
        if (!is_value(e->a)) {
          congr(e->a, [&](const Expr& s) { return ite(s, e->b, e->c); });
        } else if (e->a->kind == Kind::True) {
          out.push_back(e->b);
        } else if (e->a->kind == Kind::False) {
          out.push_back(e->c);
        }
        return out;
      default: return out;
    }
  }

  // ---- typing

  static std::optional<Type> infer(const LocalCtx<Type>& ctx, const Expr& e) {
    if constexpr (!Typed) {
      (void)ctx;
      (void)e;
      return Type::Star();
    } else {
      switch (e->kind) {
        case Kind::Var: return ctx_lookup(ctx, e->x);
        case Kind::Num: return Type::Int();
        case Kind::True:
        case Kind::False: return Type::Bool();
        case Kind::Lam: {
          auto c2 = ctx;
          c2.emplace_back(e->x, e->t1);
          auto tb = infer(c2, e->a);
          if (!tb) return std::nullopt;
          return Type::Arrow(e->t1, *tb);
        }
        case Kind::Rec: {
          auto c2 = ctx;
          Type ft = Type::Arrow(e->t1, e->t2);
          c2.emplace_back(e->f, ft);
          c2.emplace_back(e->x, e->t1);
          auto tb = infer(c2, e->a);
          if (!tb || !(*tb == e->t2)) return std::nullopt;
          return ft;
        }
        case Kind::App: {
          auto tf = infer(ctx, e->a);
          auto ta = infer(ctx, e->b);
          if (!tf || !ta || (*tf)->kind != LType::Kind::Arrow || !(tf->dom() == *ta)) return std::nullopt;
          return tf->cod();
        }
        case Kind::Bin: {
          auto ta = infer(ctx, e->a);
          auto tb = infer(ctx, e->b);
          if (!ta || !tb || (*ta)->kind != LType::Kind::Int || (*tb)->kind != LType::Kind::Int)
            return std::nullopt;
          return e->op == Op::Lt ? Type::Bool() : Type::Int();
        }
        case Kind::If: {
          auto tc = infer(ctx, e->a);
          auto tt = infer(ctx, e->b);
          auto te = infer(ctx, e->c);
          if (!tc || (*tc)->kind != LType::Kind::Bool || !tt || !te || !(*tt == *te)) return std::nullopt;
          return tt;
        }
      }
      return std::nullopt;
    }
  }

  // ---- alpha-equivalence and canonical naming

  static int bound_index(const std::vector<Name>& env, const Name& x) {
    for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
      if (env[static_cast<std::size_t>(i)] == x) return i;
    return -1;
  }
  static bool alpha_eq(const Expr& a, const Expr& b, std::vector<Name>& ea, std::vector<Name>& eb) {
    if (a.p == b.p && ea == eb) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Var: {
        int i = bound_index(ea, a->x), j = bound_index(eb, b->x);
        if (i < 0 && j < 0) return a->x == b->x;
        return i == j;
      }
      case Kind::Num: return a->n == b->n;
      case Kind::True:
      case Kind::False: return true;
      case Kind::Lam:
      case Kind::Rec: {
        if (Typed && !(a->t1 == b->t1)) return false;
        if (Typed && a->kind == Kind::Rec && !(a->t2 == b->t2)) return false;
        std::size_t na = ea.size(), nb = eb.size();
        if (a->kind == Kind::Rec) {
          ea.push_back(a->f);
          eb.push_back(b->f);
        }
        ea.push_back(a->x);
        eb.push_back(b->x);
        bool r = alpha_eq(a->a, b->a, ea, eb);
        ea.resize(na);
        eb.resize(nb);
        return r;
      }
      case Kind::App: return alpha_eq(a->a, b->a, ea, eb) && alpha_eq(a->b, b->b, ea, eb);
      case Kind::Bin: return a->op == b->op && alpha_eq(a->a, b->a, ea, eb) && alpha_eq(a->b, b->b, ea, eb);
      case Kind::If:
        return alpha_eq(a->a, b->a, ea, eb) && alpha_eq(a->b, b->b, ea, eb) && alpha_eq(a->c, b->c, ea, eb);
    }
    return false;
  }

  static Expr canonicalize(const Expr& e, const Renaming& env, int depth) {
    switch (e->kind) {
      case Kind::Var: return var(rename_lookup(env, e->x));
      case Kind::Num:
      case Kind::True:
      case Kind::False: return e;
      case Kind::App: return app(canonicalize(e->a, env, depth), canonicalize(e->b, env, depth));
      case Kind::Bin: return bin(e->op, canonicalize(e->a, env, depth), canonicalize(e->b, env, depth));
      case Kind::If:
        return ite(canonicalize(e->a, env, depth), canonicalize(e->b, env, depth), canonicalize(e->c, env, depth));
      case Kind::Lam: {
        Renaming inner = env;
        Name nx = canonical_binder(depth);
        inner[e->x] = nx;
        return lam(nx, e->t1, canonicalize(e->a, inner, depth + 1));
      }
      case Kind::Rec: {
        Renaming inner = env;
        Name nf = canonical_binder(depth), nx = canonical_binder(depth + 1);
        inner[e->f] = nf;
        inner[e->x] = nx;
        return rec(nf, nx, e->t1, e->t2, canonicalize(e->a, inner, depth + 2));
      }
    }
    return e;
  }

  // ---- printing
  // precedence: 0 binders/if, 1 '<', 2 '+' '-', 3 '*', 4 application, 5 atoms

  static std::string print_type(const Type& t) {
    switch (t->kind) {
      case LType::Kind::Int: return "Int";
      case LType::Kind::Bool: return "Bool";
      case LType::Kind::Star: return "*";
      case LType::Kind::Arrow: return print_type_atomic(t.dom()) + " -> " + print_type(t.cod());
    }
    return "?";
  }
  static std::string print_type_atomic(const Type& t) {
    if (t->kind == LType::Kind::Arrow) return "(" + print_type(t) + ")";
    return print_type(t);
  }

  static int prec_of(const Expr& e) {
    switch (e->kind) {
      case Kind::Lam:
      case Kind::Rec:
      case Kind::If: return 0;
      case Kind::Bin: return e->op == Op::Lt ? 1 : (e->op == Op::Mul ? 3 : 2);
      case Kind::App: return 4;
      default: return 5;
    }
  }
  static const char* op_text(Op op) {
    switch (op) {
      case Op::Add: return "+";
      case Op::Sub: return "-";
      case Op::Mul: return "*";
      case Op::Lt: return "<";
    }
    return "?";
  }
  static std::string print_at(const Expr& e, int min_prec) {
    std::string s = print_raw(e);
    return prec_of(e) < min_prec ? "(" + s + ")" : s;
  }
  static std::string print_raw(const Expr& e) {
    switch (e->kind) {
      case Kind::Var: return e->x;
      case Kind::Num: return std::to_string(e->n);
      case Kind::True: return "true";
      case Kind::False: return "false";
      case Kind::Lam:
        if constexpr (Typed) return "\\" + e->x + ":" + print_type(e->t1) + ". " + print_at(e->a, 0);
        else return "\\" + e->x + ". " + print_at(e->a, 0);
      case Kind::Rec:
        if constexpr (Typed)
          return "rec " + e->f + "(" + e->x + ":" + print_type(e->t1) + "):" + print_type(e->t2) + ". " +
                 print_at(e->a, 0);
        else return "rec " + e->f + "(" + e->x + "). " + print_at(e->a, 0);
      case Kind::App: return print_at(e->a, 4) + " " + print_at(e->b, 5);
      case Kind::Bin: {
        int p = prec_of(e);
        if (e->op == Op::Lt) return print_at(e->a, 2) + " < " + print_at(e->b, 2);
        return print_at(e->a, p) + " " + op_text(e->op) + " " + print_at(e->b, p + 1);
      }
      case Kind::If:
        return "if " + print_at(e->a, 0) + " then " + print_at(e->b, 0) + " else " + print_at(e->c, 0);
    }
    return "?";
  }
  static std::string print(const Expr& e) { return print_raw(e); }
  static std::string print_atomic(const Expr& e) { return print_at(e, 5); }

  // ---- parsing

  static Type parse_type_atom(TokenStream& ts) {
    if constexpr (Typed) {
      if (ts.accept_word("Int")) return Type::Int();
      if (ts.accept_word("Bool")) return Type::Bool();
      if (ts.accept_sym("(")) {
        Type t = parse_type(ts);
        ts.expect_sym(")");
        return t;
      }
      ts.fail("expected type");
    } else {
      if (ts.accept_sym("*")) return Type::Star();
      if (ts.accept_sym("(")) {
        Type t = parse_type_atom(ts);
        ts.expect_sym(")");
        return t;
      }
      ts.fail("expected '*'");
    }
  }
  static Type parse_type(TokenStream& ts) {
    Type a = parse_type_atom(ts);
    if (Typed && ts.accept_sym("->")) return Type::Arrow(a, parse_type(ts));
    return a;
  }

  static Expr parse(TokenStream& ts) {
    if (ts.accept_sym("\\")) {
      Name x = ts.ident("parameter name");
      Type t;
      if constexpr (Typed) {
        ts.expect_sym(":");
        t = parse_type(ts);
      }
      ts.expect_sym(".");
      return lam(x, t, parse(ts));
    }
    if (ts.accept_word("rec")) {
      Name f = ts.ident("function name");
      ts.expect_sym("(");
      Name x = ts.ident("parameter name");
      Type t1, t2;
      if constexpr (Typed) {
        ts.expect_sym(":");
        t1 = parse_type(ts);
      }
      ts.expect_sym(")");
      if constexpr (Typed) {
        ts.expect_sym(":");
        t2 = parse_type(ts);
      }
      ts.expect_sym(".");
      return rec(f, x, t1, t2, parse(ts));
    }
    if (ts.accept_word("if")) {
      Expr c = parse(ts);
      ts.expect_word("then");
      Expr t = parse(ts);
      ts.expect_word("else");
      Expr e = parse(ts);
      return ite(c, t, e);
    }
    Expr l = parse_add(ts);
    if (ts.accept_sym("<")) return bin(Op::Lt, l, parse_add(ts));
    return l;
  }
  static Expr parse_add(TokenStream& ts) {
    Expr l = parse_mul(ts);
    for (;;) {
      if (ts.accept_sym("+")) l = bin(Op::Add, l, parse_mul(ts));
      else if (ts.accept_sym("-")) l = bin(Op::Sub, l, parse_mul(ts));
      else return l;
    }
  }
  static Expr parse_mul(TokenStream& ts) {
    Expr l = parse_app(ts);
    while (ts.accept_sym("*")) l = bin(Op::Mul, l, parse_app(ts));
    return l;
  }
  static bool starts_atom(const TokenStream& ts) {
    return ts.is_ident() || ts.peek().kind == Tok::Number || ts.is_word("true") || ts.is_word("false") ||
           ts.is_sym("(");
  }
  static Expr parse_app(TokenStream& ts) {
    Expr l = parse_atom(ts);
    while (starts_atom(ts)) l = app(l, parse_atom(ts));
    return l;
  }
  static Expr parse_atom(TokenStream& ts) {
    if (ts.accept_sym("(")) {
      Expr e = parse(ts);
      ts.expect_sym(")");
      return e;
    }
    if (ts.peek().kind == Tok::Number) return num(std::stoull(ts.next().text));
    if (ts.accept_word("true")) return true_value();
    if (ts.accept_word("false")) return false_value();
    if (ts.is_ident()) return var(ts.next().text);
    ts.fail(std::string("expected ") + std::string(name) + " expression");
  }

  // ---- generators

  static Type gen_type(Rng& rng) {
    if constexpr (!Typed) {
      (void)rng;
      return Type::Star();
    } else {
      int r = static_cast<int>(rng.below(100));
      if (r < 45) return Type::Int();
      if (r < 92) return Type::Bool();
      return Type::Arrow(Type::Int(), Type::Int());
    }
  }

  static std::vector<Name> vars_of(const LocalCtx<Type>& ctx, const Type& t) {
    std::vector<Name> out;
    for (auto& [x, ty] : ctx) {
      auto cur = ctx_lookup(ctx, x);
      if (cur && *cur == t && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  }

  static Expr gen_expr(Rng& rng, const LocalCtx<Type>& ctx, const Type& t, int depth) {
    if constexpr (Typed) return gen_typed(rng, ctx, t, depth);
    else return gen_untyped(rng, ctx, depth);
  }

  static Expr gen_typed(Rng& rng, const LocalCtx<Type>& ctx, const Type& t, int depth) {
    static const std::vector<Name> binders = {"x", "y", "z", "n"};
    auto vars = vars_of(ctx, t);
    if (!vars.empty() && rng.chance(30)) return var(rng.pick(vars));
    bool leaf = depth <= 0 || rng.chance(40);
    switch (t->kind) {
      case LType::Kind::Int:
        if (leaf) return num(rng.below(6));
        switch (rng.below(5)) {
          case 0: return bin(Op::Add, gen_typed(rng, ctx, t, depth - 1), gen_typed(rng, ctx, t, depth - 1));
          case 1: return bin(Op::Sub, gen_typed(rng, ctx, t, depth - 1), gen_typed(rng, ctx, t, depth - 1));
          case 2: return bin(Op::Mul, gen_typed(rng, ctx, t, depth - 1), num(rng.below(3)));
          case 3:
            return ite(gen_typed(rng, ctx, Type::Bool(), depth - 1), gen_typed(rng, ctx, t, depth - 1),
                       gen_typed(rng, ctx, t, depth - 1));
          default: {
            Name x = rng.pick(binders);
            auto c2 = ctx;
            c2.emplace_back(x, Type::Int());
            return app(lam(x, Type::Int(), gen_typed(rng, c2, t, depth - 1)), gen_typed(rng, ctx, Type::Int(), depth - 1));
          }
        }
      case LType::Kind::Bool:
        if (leaf) return rng.chance(50) ? true_value() : false_value();
        switch (rng.below(3)) {
          case 0:
            return bin(Op::Lt, gen_typed(rng, ctx, Type::Int(), depth - 1), gen_typed(rng, ctx, Type::Int(), depth - 1));
          case 1:
            return ite(gen_typed(rng, ctx, t, depth - 1), gen_typed(rng, ctx, t, depth - 1),
                       gen_typed(rng, ctx, t, depth - 1));
          default: {
            Name x = rng.pick(binders);
            auto c2 = ctx;
            c2.emplace_back(x, Type::Int());
            return app(lam(x, Type::Int(), gen_typed(rng, c2, t, depth - 1)), num(rng.below(4)));
          }
        }
      case LType::Kind::Arrow: {
        Name x = rng.pick(binders);
        auto c2 = ctx;
        c2.emplace_back(x, t.dom());
        return lam(x, t.dom(), gen_typed(rng, c2, t.cod(), depth - 1));
      }
      default: return num(0);
    }
  }

  static Expr gen_untyped(Rng& rng, const LocalCtx<Type>& ctx, int depth) {
    static const std::vector<Name> binders = {"x", "y", "z"};
    std::vector<Name> vars;
    for (auto& [x, ty] : ctx) vars.push_back(x);
    if (!vars.empty() && rng.chance(30)) return var(rng.pick(vars));
    if (depth <= 0 || rng.chance(35)) {
      switch (rng.below(4)) {
        case 0: return true_value();
        case 1: return false_value();
        default: return num(rng.below(5));
      }
    }
    switch (rng.below(4)) {
      case 0: {
        Name x = rng.pick(binders);
        auto c2 = ctx;
        c2.emplace_back(x, Type::Star());
        return lam(x, gen_untyped(rng, c2, depth - 1));
      }
      case 1: return app(gen_untyped(rng, ctx, depth - 1), gen_untyped(rng, ctx, depth - 1));
      case 2: return bin(Op::Add, gen_untyped(rng, ctx, depth - 1), gen_untyped(rng, ctx, depth - 1));
      default:
        return ite(gen_untyped(rng, ctx, depth - 1), gen_untyped(rng, ctx, depth - 1),
                   gen_untyped(rng, ctx, depth - 1));
    }
  }

  static std::vector<Expr> sample_values() {
    if constexpr (Typed) return {num(0), num(1), num(2), true_value(), false_value(), lam("x", Type::Int(), var("x"))};
    else return {num(0), num(1), true_value(), false_value(), lam("x", var("x"))};
  }
};

using MiniLambda = LambdaLang<true>;
using UniLambda = LambdaLang<false>;

// Expression equality for the lambda calculi is alpha-equivalence.
inline bool operator==(const MiniLambda::Expr& a, const MiniLambda::Expr& b) {
  std::vector<Name> ea, eb;
  return MiniLambda::alpha_eq(a, b, ea, eb);
}
inline bool operator==(const UniLambda::Expr& a, const UniLambda::Expr& b) {
  std::vector<Name> ea, eb;
  return UniLambda::alpha_eq(a, b, ea, eb);
}

}  // namespace pirouette
