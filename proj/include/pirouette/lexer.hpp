#pragma once

#include <string>
#include <vector>

#include "pirouette/core.hpp"

namespace pirouette {

enum class Tok { Ident, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& src) {
  static const char* multi[] = {"~>", ":=", "->", "=>", "==", "||"};
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') adv(1);
      continue;
    }
    Token t{Tok::Sym, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      t.kind = Tok::Ident;
      t.text = src.substr(i, j - i);
      adv(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
      t.text = src.substr(i, j - i);
      adv(j - i);
    } else {
      bool found = false;
      for (const char* m : multi) {
        if (src.compare(i, 2, m) == 0) {
          t.text = m;
          adv(2);
          found = true;
          break;
        }
      }
      if (!found) {
        static const std::string singles = ".;[](),\\:+-*<|{}=";
        if (singles.find(c) == std::string::npos)
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        t.text = std::string(1, c);
        adv(1);
      }
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "<end of input>", line, col});
  return out;
}

// Words that never parse as identifiers in either the choreography or local grammars.
inline bool is_keyword(const std::string& s) {
  static const std::set<std::string> kw = {"if",   "then", "else", "let",  "in",   "funL",  "funG",
                                           "appL", "appG", "true", "false", "rec", "ret",   "unit",
                                           "send", "recv", "to",   "from", "choose", "for", "allow",
                                           "choice", "at", "language", "locations"};
  return kw.count(s) > 0;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  explicit TokenStream(const std::string& src) : toks_(lex(src)) {}

  const Token& peek(std::size_t k = 0) const {
    std::size_t j = pos_ + k;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const std::string& s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Sym && peek(k).text == s;
  }
  bool is_word(const std::string& s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == s;
  }
  bool is_ident(std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && !is_keyword(peek(k).text);
  }
  bool accept_sym(const std::string& s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  bool accept_word(const std::string& s) {
    if (!is_word(s)) return false;
    next();
    return true;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }
  void expect_word(const std::string& s) {
    if (!accept_word(s)) fail("expected '" + s + "'");
  }
  std::string ident(const char* what = "identifier") {
    if (!is_ident()) fail(std::string("expected ") + what);
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + " but found '" + t.text + "'", t.line, t.col);
  }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace pirouette
