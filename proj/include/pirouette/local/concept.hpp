#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pirouette/core.hpp"
#include "pirouette/lexer.hpp"

namespace pirouette {

// Typing context for local expressions; lookups take the rightmost binding.
template <class Type>
using LocalCtx = std::vector<std::pair<Name, Type>>;

template <class Type>
std::optional<Type> ctx_lookup(const LocalCtx<Type>& ctx, const Name& x) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->first == x) return it->second;
  return std::nullopt;
}

struct SoundnessFlags {
  bool preservation = false;
  bool progress = false;
  bool bool_invertibility = false;
  bool all() const { return preservation && progress && bool_invertibility; }
};

template <class L>
concept LocalLanguage = requires(const typename L::Expr& e, const typename L::Type& t, const Name& x,
                                 Rng& rng, TokenStream& ts, const LocalCtx<typename L::Type>& ctx,
                                 const Renaming& ren) {
  { L::name } -> std::convertible_to<std::string_view>;
  { L::var(x) } -> std::same_as<typename L::Expr>;
  { L::true_value() } -> std::same_as<typename L::Expr>;
  { L::false_value() } -> std::same_as<typename L::Expr>;
  { L::free_vars(e) } -> std::same_as<NameSet>;
  { L::subst(e, x, e) } -> std::same_as<typename L::Expr>;
  { L::is_value(e) } -> std::same_as<bool>;
  { L::step(e) } -> std::same_as<std::vector<typename L::Expr>>;
  { L::infer(ctx, e) } -> std::same_as<std::optional<typename L::Type>>;
  { L::bool_type() } -> std::same_as<typename L::Type>;
  { L::soundness } -> std::convertible_to<SoundnessFlags>;
  { L::canonicalize(e, ren, 0) } -> std::same_as<typename L::Expr>;
  { L::print(e) } -> std::same_as<std::string>;
  { L::print_atomic(e) } -> std::same_as<std::string>;
  { L::print_type(t) } -> std::same_as<std::string>;
  { L::print_type_atomic(t) } -> std::same_as<std::string>;
  { L::parse(ts) } -> std::same_as<typename L::Expr>;
  { L::parse_atom(ts) } -> std::same_as<typename L::Expr>;
  { L::parse_type_atom(ts) } -> std::same_as<typename L::Type>;
  { L::gen_type(rng) } -> std::same_as<typename L::Type>;
  { L::gen_expr(rng, ctx, t, 0) } -> std::same_as<typename L::Expr>;
  { L::sample_values() } -> std::same_as<std::vector<typename L::Expr>>;
  { e == e } -> std::convertible_to<bool>;
  { t == t } -> std::convertible_to<bool>;
};

template <class L>
typename L::Expr parse_local(const std::string& src) {
  TokenStream ts(src);
  auto e = L::parse(ts);
  if (!ts.at_end()) ts.fail("trailing input");
  return e;
}

}  // namespace pirouette
