#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "condmodel.h"

namespace {

constexpr int kExitSyntax = 2;
constexpr int kExitConfig = 3;
constexpr int kExitScenario = 4;

int exit_code_for(cm_status status) {
  switch (status) {
    case CM_OK: return 0;
    case CM_ERR_SYNTAX: return kExitSyntax;
    case CM_ERR_CONFIG: return kExitConfig;
    case CM_ERR_SCENARIO: return kExitScenario;
    default: return 1;
  }
}

bool read_file(const std::string& path, std::string* out, int* exit_code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    *exit_code = kExitConfig;
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return true;
}

int emit(char* report, const std::string& out_path) {
  int code = 0;
  if (out_path.empty()) {
    std::cout << report << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << report << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      code = kExitConfig;
    }
  }
  cm_string_free(report);
  return code;
}

int fail(cm_status status) {
  std::cerr << "error: " << cm_last_error() << "\n";
  return exit_code_for(status);
}

struct SpaceGuard {
  cm_space* handle = nullptr;
  ~SpaceGuard() { cm_space_destroy(handle); }
};

bool open_space(const std::string& path, SpaceGuard* guard, int* exit_code) {
  std::string text;
  if (!read_file(path, &text, exit_code)) return false;
  cm_status status = cm_space_create(text.c_str(), &guard->handle);
  if (status != CM_OK) {
    std::cerr << "error: " << cm_last_error() << "\n";
    *exit_code = exit_code_for(status);
    return false;
  }
  return true;
}

bool parse_bounds(const std::string& text, uint32_t* num_bound, uint32_t* set_bound) {
  return std::sscanf(text.c_str(), "%u,%u", num_bound, set_bound) == 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-valued model engine for second-order arithmetic"};
  app.require_subcommand(1);

  std::string space_path, bounds_text = "4,5", out_path, assignment_path;
  uint64_t trials = 200, seed = 0;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a formula file to truth events");
  std::string formula_path;
  eval->add_option("--space", space_path, "space JSON file")->required();
  eval->add_option("--bounds", bounds_text, "quantifier bounds B,Bset");
  eval->add_option("--assignment", assignment_path, "assignment JSON file");
  eval->add_option("--out", out_path, "report output path (default stdout)");
  eval->add_option("file", formula_path, "formula file, one per line")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name;
  suite->add_option("name", suite_name, "axioms | rules | boolean-laws")->required();
  suite->add_option("--space", space_path, "space JSON file")->required();
  suite->add_option("--bounds", bounds_text, "quantifier bounds B,Bset");
  suite->add_option("--trials", trials, "trials per axiom / rule");
  suite->add_option("--seed", seed, "sampler seed");
  suite->add_option("--out", out_path, "report output path (default stdout)");

  // argmin
  auto* amin = app.add_subcommand("argmin", "grid-exact scenario minimization");
  std::string scenario_path;
  amin->add_option("scenario", scenario_path, "scenario JSON file")->required();
  amin->add_option("--out", out_path, "selection output path (default stdout)");

  // bw
  auto* bw = app.add_subcommand("bw", "Bolzano-Weierstrass subsequence extraction");
  std::string request_path;
  bw->add_option("request", request_path, "request JSON file")->required();
  bw->add_option("--out", out_path, "report output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  uint32_t num_bound = 4, set_bound = 5;
  if (!parse_bounds(bounds_text, &num_bound, &set_bound)) {
    std::cerr << "error: --bounds expects B,Bset\n";
    return kExitConfig;
  }

  int exit_code = 0;
  char* report = nullptr;

  if (eval->parsed()) {
    SpaceGuard space;
    if (!open_space(space_path, &space, &exit_code)) return exit_code;
    std::string formulas, assignment;
    if (!read_file(formula_path, &formulas, &exit_code)) return exit_code;
    if (!assignment_path.empty() && !read_file(assignment_path, &assignment, &exit_code))
      return exit_code;
    cm_status status =
        cm_eval_file(space.handle, formulas.c_str(),
                     assignment.empty() ? nullptr : assignment.c_str(), num_bound, set_bound,
                     &report);
    if (status != CM_OK) return fail(status);
    return emit(report, out_path);
  }

  if (suite->parsed()) {
    SpaceGuard space;
    if (!open_space(space_path, &space, &exit_code)) return exit_code;
    cm_status status;
    if (suite_name == "axioms") {
      status = cm_suite_axioms(space.handle, num_bound, set_bound, trials, seed, &report);
    } else if (suite_name == "rules") {
      status = cm_suite_rules(space.handle, num_bound, set_bound, trials, seed, &report);
    } else if (suite_name == "boolean-laws") {
      status = cm_suite_boolean_laws(space.handle, &report);
    } else {
      std::cerr << "error: unknown suite '" << suite_name << "'\n";
      return kExitConfig;
    }
    if (status != CM_OK) return fail(status);
    return emit(report, out_path);
  }

  if (amin->parsed()) {
    std::string scenario;
    if (!read_file(scenario_path, &scenario, &exit_code)) return exit_code;
    cm_status status = cm_argmin(scenario.c_str(), &report);
    if (status != CM_OK) return fail(status);
    return emit(report, out_path);
  }

  if (bw->parsed()) {
    std::string request;
    if (!read_file(request_path, &request, &exit_code)) return exit_code;
    cm_status status = cm_bw(request.c_str(), &report);
    if (status != CM_OK) return fail(status);
    return emit(report, out_path);
  }

  return 0;
}
