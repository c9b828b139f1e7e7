#pragma once

#include <json.hpp>

#include "pirouette/epp.hpp"

namespace pirouette {

template <class L>
struct SystemLabel {
  enum class Kind { SysIota, Comm, Choice, SysSyncIota };
  Kind kind;
  Location from, to;
  typename L::Expr v{};
  Dir d = Dir::L;

  static SystemLabel sys_iota() { return {Kind::SysIota}; }
  static SystemLabel sys_sync_iota() { return {Kind::SysSyncIota}; }
  static SystemLabel comm(Location a, typename L::Expr v, Location b) { return {Kind::Comm, std::move(a), std::move(b), std::move(v)}; }
  static SystemLabel choice(Location a, Dir d, Location b) {
    SystemLabel l{Kind::Choice, std::move(a), std::move(b)};
    l.d = d;
    return l;
  }

  friend bool operator==(const SystemLabel& a, const SystemLabel& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::SysIota:
      case Kind::SysSyncIota: return true;
      case Kind::Comm: return a.from == b.from && a.to == b.to && a.v == b.v;
      case Kind::Choice: return a.from == b.from && a.to == b.to && a.d == b.d;
    }
    return false;
  }
};

template <class L>
const char* sys_label_kind(const SystemLabel<L>& l) {
  using K = typename SystemLabel<L>::Kind;
  switch (l.kind) {
    case K::SysIota: return "SysIota";
    case K::SysSyncIota: return "SysSyncIota";
    case K::Comm: return "Comm";
    case K::Choice: return "Choice";
  }
  return "?";
}

template <class L>
std::string print_sys_label(const SystemLabel<L>& l) {
  using K = typename SystemLabel<L>::Kind;
  switch (l.kind) {
    case K::Comm: return "Comm(" + l.from.name + ", " + L::print(l.v) + ", " + l.to.name + ")";
    case K::Choice: return std::string("Choice(") + l.from.name + ", " + dir_name(l.d) + ", " + l.to.name + ")";
    default: return sys_label_kind(l);
  }
}

template <class L>
SystemLabel<L> compile_redex(const Redex<L>& r) {
  using K = typename Redex<L>::Kind;
  using S = SystemLabel<L>;
  switch (r.kind) {
    case K::SendV: return S::comm(r.l1, r.e1, r.l2);
    case K::Sync: return S::choice(r.l1, r.d, r.l2);
    case K::DefLocalV:
    case K::AppLocalV:
    case K::AppGlobalV: return S::sys_sync_iota();
    case K::Fun:
    case K::Arg: return compile_redex(*r.inner);
    default: return S::sys_iota();
  }
}

template <class L>
std::optional<SystemLabel<L>> label_merge(const CtrlLabel<L>& a, const CtrlLabel<L>& b) {
  using K = typename CtrlLabel<L>::Kind;
  using S = SystemLabel<L>;
  if (a.kind == K::Fun || a.kind == K::Arg) {
    if (b.kind != a.kind) return std::nullopt;
    return label_merge(*a.inner, *b.inner);
  }
  switch (a.kind) {
    case K::Iota: return b.kind == K::Iota ? std::optional(S::sys_iota()) : std::nullopt;
    case K::SyncIota: return b.kind == K::SyncIota ? std::optional(S::sys_sync_iota()) : std::nullopt;
    // a.loc is the receiver, b.loc the sender; the sender's identity is not recorded in its own label.
    case K::Send:
      if (b.kind == K::Recv && a.v == b.v && a.loc != b.loc) return S::comm(b.loc, a.v, a.loc);
      return std::nullopt;
    case K::Choose:
      if (b.kind == K::Allow && a.d == b.d && a.loc != b.loc) return S::choice(b.loc, a.d, a.loc);
      return std::nullopt;
    default: return std::nullopt;
  }
}

template <class L>
struct SysStep {
  SystemLabel<L> label;
  System<L> next;
  std::vector<Location> actors;
};

template <class L>
bool is_terminal(const System<L>& s) {
  for (auto& [l, e] : s)
    if (!ctrl_is_value(e)) return false;
  return true;
}

// Every system step, in lexicographic location order: internal, then communication and choice, then synchronised.
template <class L>
std::vector<SysStep<L>> sys_enabled_steps(const System<L>& s) {
  using K = typename CtrlLabel<L>::Kind;
  std::vector<SysStep<L>> out;
  std::map<Location, std::vector<CtrlStep<L>>> own;
  for (auto& [l, e] : s) own[l] = ctrl_enabled_steps(e);
  for (auto& [l, steps] : own)
    for (auto& st : steps)
      if (auto m = label_merge(st.label, st.label); m && m->kind == SystemLabel<L>::Kind::SysIota) {
        System<L> n = s;
        n[l] = st.next;
        out.push_back({*m, std::move(n), {l}});
      }
  for (auto& [a, steps] : own)
    for (auto& st : steps) {
      const auto& core = st.label.core();
      if (core.kind != K::Send && core.kind != K::Choose) continue;
      const Location& b = core.loc;
      if (b == a || !s.count(b)) continue;
      std::vector<typename L::Expr> vals;
      if (core.kind == K::Send) vals.push_back(core.v);
      for (auto& rs : ctrl_enabled_steps(s.at(b), vals)) {
        auto m = label_merge(st.label, rs.label);
        if (!m || m->from != a) continue;
        System<L> n = s;
        n[a] = st.next;
        n[b] = rs.next;
        out.push_back({*m, std::move(n), {a, b}});
      }
    }
  if (!s.empty()) {
    auto first = s.begin();
    std::vector<std::string> seen;
    for (auto& st : own[first->first]) {
      auto m = label_merge(st.label, st.label);
      if (!m || m->kind != SystemLabel<L>::Kind::SysSyncIota) continue;
      std::string key = print_label(st.label);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      // Every location contributes each of its steps carrying this exact label.
      std::vector<System<L>> partial{System<L>{}};
      for (auto& [l, steps] : own) {
        std::vector<System<L>> grown;
        for (auto& p : partial)
          for (auto& t : steps)
            if (t.label == st.label) {
              System<L> q = p;
              q[l] = t.next;
              grown.push_back(std::move(q));
            }
        partial = std::move(grown);
        if (partial.empty()) break;
      }
      std::vector<Location> all;
      for (auto& [l, e] : s) all.push_back(l);
      for (auto& p : partial) out.push_back({*m, std::move(p), all});
    }
  }
  return out;
}

enum class SimVerdict { AllValues, FuelExhausted, Deadlock };

inline const char* sim_verdict_name(SimVerdict v) {
  switch (v) {
    case SimVerdict::AllValues: return "AllValues";
    case SimVerdict::FuelExhausted: return "FuelExhausted";
    case SimVerdict::Deadlock: return "Deadlock";
  }
  return "?";
}

template <class L>
struct SimResult {
  System<L> final;
  std::vector<SystemLabel<L>> trace;
  SimVerdict verdict;
};

template <class L>
SimResult<L> simulate(const System<L>& s0, Scheduler sched, std::size_t fuel, std::uint64_t seed = 0) {
  Rng rng(seed);
  System<L> s = s0;
  std::vector<SystemLabel<L>> trace;
  for (;;) {
    if (is_terminal(s)) return {s, trace, SimVerdict::AllValues};
    auto steps = sys_enabled_steps(s);
    if (steps.empty()) return {s, trace, SimVerdict::Deadlock};
    if (trace.size() >= fuel) return {s, trace, SimVerdict::FuelExhausted};
    std::size_t i = sched == Scheduler::Random ? rng.below(steps.size()) : 0;
    trace.push_back(steps[i].label);
    s = std::move(steps[i].next);
  }
}

template <class L>
std::string system_key(const System<L>& s) {
  std::string k;
  for (auto& [l, e] : s) k += l.name + "|" + print_ctrl(ctrl_canonicalize(e)) + "\n";
  return k;
}

template <class L>
struct SysExploreResult {
  std::size_t states = 0;
  std::size_t terminal = 0;
  std::optional<System<L>> deadlock;
  bool truncated = false;
};

// Breadth-first search of every reachable system state, stopping at the first deadlock.
template <class L>
SysExploreResult<L> sys_explore(const System<L>& s0, std::size_t max_states) {
  SysExploreResult<L> res;
  std::set<std::string> seen{system_key(s0)};
  std::deque<System<L>> queue{s0};
  while (!queue.empty()) {
    if (res.states >= max_states) {
      res.truncated = true;
      break;
    }
    System<L> s = std::move(queue.front());
    queue.pop_front();
    ++res.states;
    if (is_terminal(s)) {
      ++res.terminal;
      continue;
    }
    auto steps = sys_enabled_steps(s);
    if (steps.empty()) {
      res.deadlock = s;
      break;
    }
    for (auto& st : steps)
      if (seen.insert(system_key(st.next)).second) queue.push_back(std::move(st.next));
  }
  return res;
}

template <class L>
nlohmann::ordered_json trace_record(std::size_t index, const SystemLabel<L>& l) {
  using K = typename SystemLabel<L>::Kind;
  nlohmann::ordered_json j;
  j["index"] = index;
  j["kind"] = sys_label_kind(l);
  if (l.kind == K::Comm || l.kind == K::Choice) {
    j["from"] = l.from.name;
    j["to"] = l.to.name;
  }
  if (l.kind == K::Comm) j["value"] = L::print(l.v);
  if (l.kind == K::Choice) j["choice"] = dir_name(l.d);
  return j;
}

template <class L>
std::string trace_jsonl(const std::vector<SystemLabel<L>>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += trace_record<L>(i, t[i]).dump() + "\n";
  return out;
}

template <class L>
std::string print_system(const System<L>& s) {
  std::string out;
  for (auto& [l, e] : s) out += l.name + " : " + print_ctrl(e) + "\n";
  return out;
}

// Pointwise order on systems over the same locations.
template <class L>
bool sys_lnd(const System<L>& a, const System<L>& b) {
  if (a.size() != b.size()) return false;
  for (auto& [l, e] : a) {
    auto it = b.find(l);
    if (it == b.end() || !lnd(e, it->second)) return false;
  }
  return true;
}

}  // namespace pirouette
