#pragma once

#include "pirouette/system.hpp"

namespace pirouette {

struct Diagnostic {
  std::string severity = "error";
  int line = 0, col = 0;
  std::string message;
  Path path;
  std::string str() const {
    std::string s = severity + ": ";
    if (line > 0) s += std::to_string(line) + ":" + std::to_string(col) + ": ";
    s += message;
    if (!path.empty()) s += " (at " + path_str(path) + ")";
    return s;
  }
};

// Optional header: `language NAME;` and `locations A, B, ...;`
struct SourceHeader {
  std::optional<std::string> language;
  std::optional<LocSet> locations;
  std::size_t body_start = 0;
};

inline SourceHeader parse_header(TokenStream& ts) {
  SourceHeader h;
  for (;;) {
    if (ts.accept_word("language")) {
      if (ts.peek().kind != Tok::Ident) ts.fail("expected language name");
      h.language = ts.next().text;
      ts.expect_sym(";");
    } else if (ts.accept_word("locations")) {
      LocSet ls;
      do ls.insert(Location{ts.ident("location name")});
      while (ts.accept_sym(","));
      ts.expect_sym(";");
      h.locations = ls;
    } else {
      break;
    }
  }
  h.body_start = ts.pos();
  return h;
}

template <class L>
ChorType<L> parse_ctype(TokenStream& ts) {
  using T = ChorType<L>;
  if (ts.accept_sym("(")) {
    T t = parse_ctype<L>(ts);
    ts.expect_sym(")");
    return t;
  }
  if (ts.accept_word("At")) {
    ts.expect_sym("(");
    Location l{ts.ident("location")};
    ts.expect_sym(",");
    auto t = L::parse_type_atom(ts);
    ts.expect_sym(")");
    return T::at(l, t);
  }
  if (ts.accept_word("LocalFun")) {
    ts.expect_sym("(");
    Location l{ts.ident("location")};
    ts.expect_sym(",");
    auto t = L::parse_type_atom(ts);
    ts.expect_sym(",");
    T r = parse_ctype<L>(ts);
    ts.expect_sym(")");
    return T::local_fun(l, t, r);
  }
  if (ts.accept_word("GlobalFun")) {
    ts.expect_sym("(");
    T a = parse_ctype<L>(ts);
    ts.expect_sym(",");
    T r = parse_ctype<L>(ts);
    ts.expect_sym(")");
    return T::global_fun(a, r);
  }
  ts.fail("expected choreography type");
}

template <class L>
Chor<L> parse_chor(TokenStream& ts);

template <class L>
Chor<L> parse_chor_atom(TokenStream& ts) {
  using C = Chor<L>;
  if (ts.accept_sym("(")) {
    C c = parse_chor<L>(ts);
    ts.expect_sym(")");
    return c;
  }
  if (ts.is_ident() && !ts.is_sym(".", 1) && !ts.is_sym("[", 1)) return C::var(ts.next().text);
  if (ts.is_ident() && ts.is_sym(".", 1)) {
    Location l{ts.next().text};
    ts.next();
    return C::done(l, L::parse_atom(ts));
  }
  ts.fail("expected choreography argument");
}

template <class L>
Chor<L> parse_chor(TokenStream& ts) {
  using C = Chor<L>;
  if (ts.accept_word("if")) {
    Location l{ts.ident("location")};
    ts.expect_sym(".");
    auto e = L::parse_atom(ts);
    ts.expect_word("then");
    C a = parse_chor<L>(ts);
    ts.expect_word("else");
    C b = parse_chor<L>(ts);
    return C::ite(l, e, a, b);
  }
  if (ts.accept_word("let")) {
    Location l{ts.ident("location")};
    ts.expect_sym(".");
    Name x = ts.ident("variable");
    ts.expect_sym(":=");
    C a = parse_chor<L>(ts);
    ts.expect_word("in");
    return C::def_local(l, x, a, parse_chor<L>(ts));
  }
  if (ts.accept_word("funL")) {
    Name f = ts.ident("function name");
    ts.expect_sym("(");
    Location l{ts.ident("location")};
    ts.expect_sym(".");
    Name x = ts.ident("parameter");
    std::optional<typename L::Type> pt;
    if (ts.accept_sym(":")) pt = L::parse_type_atom(ts);
    ts.expect_sym(")");
    std::optional<ChorType<L>> rt;
    if (ts.accept_sym(":")) rt = parse_ctype<L>(ts);
    ts.expect_sym(":=");
    return C::fun_local(l, f, x, parse_chor<L>(ts), pt, rt);
  }
  if (ts.accept_word("funG")) {
    Name f = ts.ident("function name");
    ts.expect_sym("(");
    Name x = ts.ident("parameter");
    std::optional<ChorType<L>> pt, rt;
    if (ts.accept_sym(":")) pt = parse_ctype<L>(ts);
    ts.expect_sym(")");
    if (ts.accept_sym(":")) rt = parse_ctype<L>(ts);
    ts.expect_sym(":=");
    return C::fun_global(f, x, parse_chor<L>(ts), pt, rt);
  }
  if (ts.accept_word("appL")) {
    Location l{ts.ident("location")};
    C fn = parse_chor_atom<L>(ts);
    return C::app_local(l, fn, L::parse_atom(ts));
  }
  if (ts.accept_word("appG")) {
    C fn = parse_chor_atom<L>(ts);
    return C::app_global(fn, parse_chor_atom<L>(ts));
  }
  if (ts.is_ident() && ts.is_sym("[", 1)) {
    Location a{ts.next().text};
    ts.next();
    Dir d;
    if (ts.accept_word("L")) d = Dir::L;
    else if (ts.accept_word("R")) d = Dir::R;
    else ts.fail("expected L or R");
    ts.expect_sym("]");
    ts.expect_sym("~>");
    Location b{ts.ident("location")};
    ts.expect_sym(";");
    return C::sync(a, d, b, parse_chor<L>(ts));
  }
  if (ts.is_ident() && ts.is_sym(".", 1)) {
    Location a{ts.next().text};
    ts.next();
    auto e = L::parse_atom(ts);
    if (!ts.accept_sym("~>")) return C::done(a, e);
    Location b{ts.ident("location")};
    ts.expect_sym(".");
    Name x = ts.ident("variable");
    ts.expect_sym(";");
    return C::send(a, e, b, x, parse_chor<L>(ts));
  }
  return parse_chor_atom<L>(ts);
}

template <class L>
Chor<L> parse_chor(const std::string& src) {
  TokenStream ts(src);
  parse_header(ts);
  auto c = parse_chor<L>(ts);
  if (!ts.at_end()) ts.fail("trailing input");
  return c;
}

template <class L>
struct ChorFile {
  SourceHeader header;
  Chor<L> body;
};

inline Diagnostic diag_of(const ParseError& e) { return Diagnostic{"error", e.line, e.col, e.what(), {}}; }

// Parses the choreography after the header; also checks that used locations were declared.
template <class L>
Expected<ChorFile<L>, Diagnostic> parse_chor_file(const std::string& src) {
  try {
    TokenStream ts(src);
    ChorFile<L> f;
    f.header = parse_header(ts);
    f.body = parse_chor<L>(ts);
    if (!ts.at_end()) ts.fail("trailing input");
    if (f.header.locations) {
      for (auto& l : location_names(f.body))
        if (!f.header.locations->count(l)) return Diagnostic{"error", 0, 0, "location " + l.name + " is not declared", {}};
    }
    return f;
  } catch (const ParseError& e) {
    return diag_of(e);
  }
}

// System files: an optional header followed by blocks `at A { E }`.
template <class L>
Expected<System<L>, Diagnostic> parse_system_file(const std::string& src) {
  try {
    TokenStream ts(src);
    parse_header(ts);
    System<L> s;
    while (!ts.at_end()) {
      ts.expect_word("at");
      Location l{ts.ident("location")};
      ts.expect_sym("{");
      auto e = parse_ctrl<L>(ts);
      ts.expect_sym("}");
      if (!s.emplace(l, e).second) return Diagnostic{"error", 0, 0, "location " + l.name + " defined twice", {}};
    }
    return s;
  } catch (const ParseError& e) {
    return diag_of(e);
  }
}

// Heuristic: a file whose body starts with `at` is a system file.
inline bool looks_like_system_file(const std::string& src) {
  try {
    TokenStream ts(src);
    parse_header(ts);
    return ts.is_word("at");
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace pirouette
