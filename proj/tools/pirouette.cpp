#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pirouette/pirouette.hpp"

using namespace pirouette;

namespace {

enum Exit { Ok = 0, Diagnostics = 1, ProjectionFailed = 2, Deadlocked = 3, MetatheoryFailed = 4 };

struct Options {
  std::string file;
  std::string lang;
  std::uint64_t seed = 0;
  std::size_t fuel = 10000;
  std::string scheduler = "first";
  std::string loc;
  bool all = false;
  std::string trace;
  std::string theorem = "all";
  int cases = 100;
  int depth = 4;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scheduler scheduler_of(const std::string& s) {
  if (s == "random") return Scheduler::Random;
  if (s == "exhaustive") return Scheduler::Exhaustive;
  return Scheduler::First;
}

template <class L>
int diag(const std::string& file, const Diagnostic& d) {
  std::cerr << file << ": " << d.str() << "\n";
  return Diagnostics;
}

template <class L>
std::optional<ChorFile<L>> load_chor(const Options& o, const std::string& src) {
  auto f = parse_chor_file<L>(src);
  if (!f) {
    diag<L>(o.file, f.error());
    return std::nullopt;
  }
  return *f;
}

template <class L>
int cmd_check(const Options& o, const std::string& src) {
  auto f = load_chor<L>(o, src);
  if (!f) return Diagnostics;
  auto t = chor_infer(f->body);
  if (!t) return diag<L>(o.file, Diagnostic{"error", 0, 0, "type error: " + t.error().rule + ": " + t.error().message, t.error().path});
  std::cout << print_ctype(*t) << "\n";
  return Ok;
}

template <class L>
int cmd_run(const Options& o, const std::string& src) {
  auto f = load_chor<L>(o, src);
  if (!f) return Diagnostics;
  if (auto t = chor_infer(f->body); !t)
    return diag<L>(o.file, Diagnostic{"error", 0, 0, "type error: " + t.error().rule + ": " + t.error().message, t.error().path});
  auto sched = scheduler_of(o.scheduler);
  if (sched == Scheduler::Exhaustive) {
    auto ex = explore(f->body, o.fuel);
    std::cout << "states: " << ex.states << (ex.truncated ? " (truncated)" : "") << "\n";
    for (auto& [c, st] : ex.outcomes) std::cout << run_status_name(st) << ": " << print_chor(c) << "\n";
    return Ok;
  }
  auto r = run(f->body, sched, o.fuel, o.seed);
  for (std::size_t i = 0; i < r.history.size(); ++i) std::cout << "step " << i + 1 << ": " << print_redex(r.history[i]) << "\n";
  std::cout << "status: " << run_status_name(r.status) << "\n";
  std::cout << "result: " << print_chor(r.final) << "\n";
  return Ok;
}

template <class L>
LocSet declared_locations(const ChorFile<L>& f) {
  return f.header.locations ? *f.header.locations : location_names(f.body);
}

template <class L>
int projection_failure(const Options& o, const ProjectionError& e) {
  std::cerr << o.file << ": error: " << e.str() << "\n";
  return ProjectionFailed;
}

template <class L>
int cmd_project(const Options& o, const std::string& src) {
  auto f = load_chor<L>(o, src);
  if (!f) return Diagnostics;
  if (!o.loc.empty()) {
    auto r = project(f->body, Location{o.loc});
    if (!r) return projection_failure<L>(o, r.error());
    std::cout << print_ctrl(*r) << "\n";
    return Ok;
  }
  auto s = project_system(f->body, declared_locations(*f));
  if (!s) return projection_failure<L>(o, s.error());
  std::cout << print_system(*s);
  return Ok;
}

template <class L>
int cmd_simulate(const Options& o, const std::string& src) {
  System<L> sys;
  if (looks_like_system_file(src)) {
    auto s = parse_system_file<L>(src);
    if (!s) return diag<L>(o.file, s.error());
    sys = *s;
  } else {
    auto f = load_chor<L>(o, src);
    if (!f) return Diagnostics;
    auto s = project_system(f->body, declared_locations(*f));
    if (!s) return projection_failure<L>(o, s.error());
    sys = *s;
  }
  auto sched = scheduler_of(o.scheduler);
  if (sched == Scheduler::Exhaustive) {
    auto ex = sys_explore(sys, o.fuel);
    std::cout << "states: " << ex.states << (ex.truncated ? " (truncated)" : "") << "\n";
    std::cout << "terminal: " << ex.terminal << "\n";
    if (ex.deadlock) {
      std::cout << "verdict: Deadlock\n" << print_system(*ex.deadlock);
      return Deadlocked;
    }
    std::cout << "verdict: " << (ex.truncated ? "FuelExhausted" : "AllValues") << "\n";
    return Ok;
  }
  auto r = simulate(sys, sched, o.fuel, o.seed);
  if (!o.trace.empty()) {
    std::ofstream out(o.trace);
    if (!out) {
      std::cerr << "cannot write " << o.trace << "\n";
      return Diagnostics;
    }
    out << trace_jsonl(r.trace);
  }
  std::cout << "steps: " << r.trace.size() << "\n";
  std::cout << "verdict: " << sim_verdict_name(r.verdict) << "\n";
  std::cout << print_system(r.final);
  return r.verdict == SimVerdict::Deadlock ? Deadlocked : Ok;
}

template <class L>
int cmd_metatheory(const Options& o) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_depth = o.depth;
  std::vector<std::string> names;
  if (o.theorem == "all") {
    names = theorem_names();
  } else {
    if (std::find(theorem_names().begin(), theorem_names().end(), o.theorem) == theorem_names().end()) {
      std::cerr << "unknown theorem " << o.theorem << "; known:";
      for (auto& n : theorem_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return Diagnostics;
    }
    names = {o.theorem};
  }
  bool ok = true;
  for (auto& n : names) {
    auto rep = check_theorem<L>(n, cfg, o.cases);
    std::cout << rep.summary() << "\n";
    if (!rep.counterexample.empty()) std::cout << "  counterexample: " << rep.counterexample << "\n";
    if (n == "relative-progress" && rep.not_applicable) {
      if (auto w = stuck_witness<L>()) std::cout << "  stuck witness: " << print_chor(*w) << "\n";
    }
    ok = ok && rep.ok();
  }
  return ok ? Ok : MetatheoryFailed;
}

template <class L>
int dispatch(const std::string& cmd, const Options& o, const std::string& src) {
  if (cmd == "check") return cmd_check<L>(o, src);
  if (cmd == "run") return cmd_run<L>(o, src);
  if (cmd == "project") return cmd_project<L>(o, src);
  if (cmd == "simulate") return cmd_simulate<L>(o, src);
  return cmd_metatheory<L>(o);
}

std::string header_language(const std::string& src) {
  try {
    TokenStream ts(src);
    auto h = parse_header(ts);
    if (h.language) return *h.language;
  } catch (const ParseError&) {
  }
  return "natbool";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pirouette: typed higher-order choreographies"};
  app.require_subcommand(1);
  Options o;
  if (const char* s = std::getenv("PIROUETTE_SEED")) o.seed = std::strtoull(s, nullptr, 10);

  auto add_common = [&](CLI::App* sub, bool file) {
    if (file) sub->add_option("file", o.file, "source file")->required();
    sub->add_option("--local-lang", o.lang, "natbool, minilambda or unilambda (default: from the file header)");
    sub->add_option("--seed", o.seed, "random seed (default: PIROUETTE_SEED or 0)");
  };
  auto* check = app.add_subcommand("check", "type-check a choreography and print its type");
  add_common(check, true);
  auto* runc = app.add_subcommand("run", "evaluate a choreography with the centralised semantics");
  add_common(runc, true);
  auto* proj = app.add_subcommand("project", "project a choreography to control programs");
  add_common(proj, true);
  proj->add_option("--loc", o.loc, "project to one location");
  proj->add_flag("--all", o.all, "project to every declared location (default)");
  auto* sim = app.add_subcommand("simulate", "run the projected system (or a system file)");
  add_common(sim, true);
  sim->add_option("--trace", o.trace, "write the label trace as JSON lines");
  for (auto* sub : {runc, sim}) {
    sub->add_option("--fuel", o.fuel, "step budget");
    sub->add_option("--scheduler", o.scheduler, "first, random or exhaustive")
        ->check(CLI::IsMember({"first", "random", "exhaustive"}));
  }
  auto* meta = app.add_subcommand("test-metatheory", "property-test the metatheory on generated programs");
  add_common(meta, false);
  meta->add_option("--theorem", o.theorem, "theorem name or all");
  meta->add_option("--cases", o.cases, "generated cases per theorem");
  meta->add_option("--depth", o.depth, "maximum generation depth");

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  std::string src;
  if (cmd != "test-metatheory") {
    auto s = read_file(o.file);
    if (!s) {
      std::cerr << "cannot read " << o.file << "\n";
      return Diagnostics;
    }
    src = *s;
  }
  std::string lang = !o.lang.empty() ? o.lang : cmd == "test-metatheory" ? "natbool" : header_language(src);
  if (lang == "natbool") return dispatch<NatBool>(cmd, o, src);
  if (lang == "minilambda") return dispatch<MiniLambda>(cmd, o, src);
  if (lang == "unilambda") return dispatch<UniLambda>(cmd, o, src);
  std::cerr << "unknown local language " << lang << "\n";
  return Diagnostics;
}
