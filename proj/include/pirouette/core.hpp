#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pirouette {

struct Location {
  std::string name;
  Location() = default;
  Location(std::string n) : name(std::move(n)) {}
  Location(const char* n) : name(n) {}
  auto operator<=>(const Location&) const = default;
  bool operator==(const Location&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Location& l) { return os << l.name; }

using LocSet = std::set<Location>;
using Name = std::string;
using NameSet = std::set<Name>;

enum class Dir { L, R };

inline const char* dir_name(Dir d) { return d == Dir::L ? "L" : "R"; }

// Result-or-error; C++20 has no std::expected.
template <class T, class E>
class Expected {
 public:
  Expected(T v) : v_(std::in_place_index<0>, std::move(v)) {}
  Expected(E e) : v_(std::in_place_index<1>, std::move(e)) {}
  bool has_value() const { return v_.index() == 0; }
  explicit operator bool() const { return has_value(); }
  const T& value() const {
    if (!has_value()) throw std::logic_error("Expected: no value");
    return std::get<0>(v_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const E& error() const { return std::get<1>(v_); }

 private:
  std::variant<T, E> v_;
};

// Picks base1, base2, ... until the name is not in `avoid`.
inline Name fresh_name(const Name& base, const NameSet& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (int i = 1;; ++i) {
    Name cand = stem + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

// Binder names used by canonicalisation; '%' never appears in parsed identifiers.
inline Name canonical_binder(int depth) { return "%" + std::to_string(depth); }

using Renaming = std::map<Name, Name>;

inline Name rename_lookup(const Renaming& env, const Name& x) {
  auto it = env.find(x);
  return it == env.end() ? x : it->second;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Modulo reduction keeps sequences identical across standard libraries.
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }

 private:
  std::mt19937_64 eng_;
};

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg), line(l), col(c) {}
};

using Path = std::vector<int>;

inline std::string path_str(const Path& p) {
  std::string s = "/";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "/";
    s += std::to_string(p[i]);
  }
  return s;
}

inline Path extend(Path p, int i) {
  p.push_back(i);
  return p;
}

template <class T>
std::set<T> set_union(std::set<T> a, const std::set<T>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

template <class T>
bool subset(const std::set<T>& a, const std::set<T>& b) {
  for (auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

}  // namespace pirouette
