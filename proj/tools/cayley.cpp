// Command-line front end for the group lattice engine.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cayley/checks.hpp"
#include "cayley/json_io.hpp"

using namespace cayley;

namespace {

struct Args {
  std::string group;
  std::string s;
  std::string h;
  std::string config;
  std::string out;
  std::string format = "json";
  int m = 2;
  int trials = 20;
  int grade_cap = 4;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw std::runtime_error("cannot write " + a.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

LatticePtr lattice(const Args& a) {
  if (a.group.empty() || a.s.empty()) throw std::invalid_argument("--group and --s are required");
  return build_lattice(a.group, a.s, LatticeOptions{a.tol, a.grade_cap});
}

void add_lattice_flags(CLI::App* c, Args& a) {
  c->add_option("--group", a.group, "group spec, e.g. \"S(3)\" or \"Z(3)xZ(3)\"")->required();
  c->add_option("--s", a.s, "comma separated elements of S")->required();
  c->add_option("--tol", a.tol, "numerical tolerance");
  c->add_option("--grade-cap", a.grade_cap, "highest form grade materialized");
  c->add_option("--out", a.out, "write output here instead of stdout");
}

int cmd_analyze(const Args& a) {
  emit(a, dump(lattice_report(*lattice(a))));
  return 0;
}

int cmd_dot(const Args& a) {
  emit(a, export_dot(*lattice(a)));
  return 0;
}

int cmd_coset(const Args& a) {
  LatticePtr L = lattice(a);
  if (a.h.empty()) throw std::invalid_argument("--h is required");
  CosetDiagram D = build_coset_diagram(L, parse_elements(L->group(), a.h));
  if (a.format == "dot") {
    emit(a, export_coset_dot(D));
    return 0;
  }
  json r = coset_report(D);
  r["dot"] = export_coset_dot(D);
  emit(a, dump(r));
  return 0;
}

int cmd_ym(const Args& a) {
  std::ifstream f(a.config);
  if (!f) throw std::runtime_error("cannot read " + a.config);
  json cfg = json::parse(f);
  LatticeOptions opts;
  opts.tol = a.tol;
  opts.grade_cap = a.grade_cap;
  GaugeConfig g = gauge_config_from_json(cfg, opts);
  json r = yang_mills_report(yang_mills(g.W), *g.L);
  r["group"] = g.L->group().spec().str();
  r["m"] = g.W.m;
  r["unitary"] = g.W.unitary;
  emit(a, dump(r));
  return 0;
}

int cmd_check(const Args& a) {
  LatticePtr L = lattice(a);
  CheckOptions o;
  o.trials = a.trials;
  o.seed = a.seed;
  o.tol = a.tol;
  o.m = a.m;
  bool all = true;
  json suites = json::array();
  for (const auto& s : run_invariant_suites(L, o)) {
    all = all && s.passed;
    json e = {{"name", s.name}, {"passed", s.passed}, {"trials", s.trials}, {"worst", s.worst}};
    if (!s.detail.empty()) e["detail"] = s.detail;
    suites.push_back(std::move(e));
  }
  json r = {{"group", L->group().spec().str()}, {"S", L->element_list(L->S())}, {"seed", a.seed},
            {"trials", a.trials}, {"m", a.m}, {"tol", a.tol}, {"suites", std::move(suites)}, {"passed", all}};
  emit(a, dump(r));
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential calculus on finite group lattices"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  Args a;

  auto* analyze = app.add_subcommand("analyze", "classify S, count 2-forms, list cycles");
  add_lattice_flags(analyze, a);

  auto* dot = app.add_subcommand("dot", "export the lattice as a DOT digraph");
  add_lattice_flags(dot, a);

  auto* coset = app.add_subcommand("coset", "Schreier diagram of right cosets of H");
  add_lattice_flags(coset, a);
  coset->add_option("--h", a.h, "comma separated subgroup elements")->required();
  coset->add_option("--format", a.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* ym = app.add_subcommand("ym", "evaluate the Yang-Mills action of a gauge configuration");
  ym->alias("ym-eval");
  ym->add_option("--config", a.config, "gauge configuration JSON")->required()->check(CLI::ExistingFile);
  ym->add_option("--tol", a.tol, "numerical tolerance");
  ym->add_option("--grade-cap", a.grade_cap, "highest form grade materialized");
  ym->add_option("--out", a.out, "write output here instead of stdout");

  auto* check = app.add_subcommand("check", "run the seeded invariant suites");
  add_lattice_flags(check, a);
  check->add_option("--seed", a.seed, "random seed");
  check->add_option("--trials", a.trials, "trials per randomized suite");
  check->add_option("--m", a.m, "fiber dimension for the gauge suites")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(a);
    if (*dot) return cmd_dot(a);
    if (*coset) return cmd_coset(a);
    if (*ym) return cmd_ym(a);
    if (*check) return cmd_check(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
