#pragma once

#include <memory>
#include <string>

#include "pirouette/local/concept.hpp"

namespace pirouette {

// Naturals and booleans: x | 0 | S e | true | false. Closed terms are values and nothing steps.
struct NatBool {
  enum class Kind { Var, Zero, Succ, True, False };
  struct Node;
  struct Expr {
    std::shared_ptr<const Node> p;
    const Node* operator->() const { return p.get(); }
    friend bool operator==(const Expr& a, const Expr& b);
  };
  struct Node {
    Kind kind;
    Name name;
    Expr sub;
  };
  enum class Type { Int, Bool };

  static constexpr std::string_view name = "natbool";
  static constexpr SoundnessFlags soundness{true, true, true};

  static Expr mk(Kind k, Name n = {}, Expr s = {}) {
    return Expr{std::make_shared<const Node>(Node{k, std::move(n), std::move(s)})};
  }
  static Expr var(const Name& x) { return mk(Kind::Var, x); }
  static Expr zero() { return mk(Kind::Zero); }
  static Expr succ(Expr e) { return mk(Kind::Succ, {}, std::move(e)); }
  static Expr num(unsigned n) {
    Expr e = zero();
    while (n--) e = succ(e);
    return e;
  }
  static Expr true_value() { return mk(Kind::True); }
  static Expr false_value() { return mk(Kind::False); }
  static Type bool_type() { return Type::Bool; }
  static Type int_type() { return Type::Int; }

  static NameSet free_vars(const Expr& e) {
    switch (e->kind) {
      case Kind::Var: return {e->name};
      case Kind::Succ: return free_vars(e->sub);
      default: return {};
    }
  }
  static Expr subst(const Expr& e, const Name& x, const Expr& v) {
    switch (e->kind) {
      case Kind::Var: return e->name == x ? v : e;
      case Kind::Succ: return succ(subst(e->sub, x, v));
      default: return e;
    }
  }
  static bool is_value(const Expr& e) { return free_vars(e).empty(); }
  static std::vector<Expr> step(const Expr&) { return {}; }

  static std::optional<Type> infer(const LocalCtx<Type>& ctx, const Expr& e) {
    switch (e->kind) {
      case Kind::Var: return ctx_lookup(ctx, e->name);
      case Kind::Zero: return Type::Int;
      case Kind::Succ: {
        auto t = infer(ctx, e->sub);
        if (t && *t == Type::Int) return Type::Int;
        return std::nullopt;
      }
      default: return Type::Bool;
    }
  }

  static Expr canonicalize(const Expr& e, const Renaming& env, int) {
    switch (e->kind) {
      case Kind::Var: return var(rename_lookup(env, e->name));
      case Kind::Succ: return succ(canonicalize(e->sub, env, 0));
      default: return e;
    }
  }

  static std::optional<unsigned> as_numeral(const Expr& e) {
    unsigned n = 0;
    const Node* p = e.p.get();
    while (p->kind == Kind::Succ) {
      ++n;
      p = p->sub.p.get();
    }
    if (p->kind == Kind::Zero) return n;
    return std::nullopt;
  }

  static std::string print(const Expr& e) {
    if (auto n = as_numeral(e)) return std::to_string(*n);
    switch (e->kind) {
      case Kind::Var: return e->name;
      case Kind::Succ: return "S " + print_atomic(e->sub);
      case Kind::True: return "true";
      case Kind::False: return "false";
      default: return "0";
    }
  }
  static std::string print_atomic(const Expr& e) {
    if (e->kind == Kind::Succ && !as_numeral(e)) return "(" + print(e) + ")";
    return print(e);
  }
  static std::string print_type(Type t) { return t == Type::Int ? "Int" : "Bool"; }
  static std::string print_type_atomic(Type t) { return print_type(t); }

  static Expr parse(TokenStream& ts) {
    if (ts.accept_word("S")) return succ(parse_atom(ts));
    return parse_atom(ts);
  }
  static Expr parse_atom(TokenStream& ts) {
    if (ts.accept_sym("(")) {
      Expr e = parse(ts);
      ts.expect_sym(")");
      return e;
    }
    if (ts.peek().kind == Tok::Number) return num(static_cast<unsigned>(std::stoul(ts.next().text)));
    if (ts.accept_word("true")) return true_value();
    if (ts.accept_word("false")) return false_value();
    if (ts.is_ident() && !ts.is_word("S")) return var(ts.next().text);
    ts.fail("expected natbool expression");
  }
  static Type parse_type_atom(TokenStream& ts) {
    if (ts.accept_word("Int")) return Type::Int;
    if (ts.accept_word("Bool")) return Type::Bool;
    ts.fail("expected natbool type");
  }

  static Type gen_type(Rng& rng) { return rng.chance(50) ? Type::Int : Type::Bool; }
  static Expr gen_expr(Rng& rng, const LocalCtx<Type>& ctx, const Type& t, int depth) {
    std::vector<Name> vars;
    for (auto& [x, ty] : ctx)
      if (ctx_lookup(ctx, x) == t) vars.push_back(x);
    if (!vars.empty() && rng.chance(35)) return var(rng.pick(vars));
    if (t == Type::Bool) return rng.chance(50) ? true_value() : false_value();
    if (depth > 0 && rng.chance(30)) return succ(gen_expr(rng, ctx, t, depth - 1));
    return num(static_cast<unsigned>(rng.below(4)));
  }
  static std::vector<Expr> sample_values() { return {num(0), num(1), num(2), true_value(), false_value()}; }
};

inline bool operator==(const NatBool::Expr& a, const NatBool::Expr& b) {
  if (a.p == b.p) return true;
  if (!a.p || !b.p || a->kind != b->kind) return false;
  switch (a->kind) {
    case NatBool::Kind::Var: return a->name == b->name;
    case NatBool::Kind::Succ: return a->sub == b->sub;
    default: return true;
  }
}

}  // namespace pirouette
