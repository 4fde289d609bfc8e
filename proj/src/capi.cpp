#include "condmodel.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "condmodel/serialize.hpp"

using nlohmann::json;
using namespace condmodel;

namespace {

thread_local std::string g_last_error;

cm_status status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SyntaxError:
    case ErrorCode::MixedCaseVariable:
      return CM_ERR_SYNTAX;
    case ErrorCode::ConfigError:
    case ErrorCode::EmptySpace:
    case ErrorCode::NonpositiveWeight:
      return CM_ERR_CONFIG;
    case ErrorCode::MalformedScenario:
      return CM_ERR_SCENARIO;
    default:
      return CM_ERR_EVAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cm_status fail(cm_status status, const char* msg) {
  g_last_error = msg;
  return status;
}

template <typename F>
cm_status guarded(char** out, F&& body) {
  if (!out) return fail(CM_ERR_INVALID_ARG, "null output pointer");
  *out = nullptr;
  try {
    json report = body();
    *out = dup_string(report.dump(2));
    if (!*out) return fail(CM_ERR_INTERNAL, "out of memory");
    return CM_OK;
  } catch (const json::exception& e) {
    return fail(CM_ERR_CONFIG, e.what());
  } catch (const Error& e) {
    return fail(status_for(e), e.what());
  } catch (const std::exception& e) {
    return fail(CM_ERR_INTERNAL, e.what());
  }
}

const SpacePtr& unwrap(const cm_space* space) {
  return *reinterpret_cast<const SpacePtr*>(space);
}

Assignment parse_assignment(const SpacePtr& space, const char* assignment_json) {
  if (!assignment_json || !*assignment_json) return Assignment(space);
  return assignment_from_json(space, json::parse(assignment_json));
}

}  // namespace

extern "C" {

const char* cm_last_error(void) { return g_last_error.c_str(); }

void cm_string_free(char* s) { std::free(s); }

cm_status cm_space_create(const char* weights_json, cm_space** out_space) {
  if (!weights_json || !out_space) return fail(CM_ERR_INVALID_ARG, "null argument");
  *out_space = nullptr;
  try {
    SpacePtr space = space_from_json(json::parse(weights_json));
    *out_space = reinterpret_cast<cm_space*>(new SpacePtr(std::move(space)));
    return CM_OK;
  } catch (const json::exception& e) {
    return fail(CM_ERR_CONFIG, e.what());
  } catch (const Error& e) {
    return fail(status_for(e), e.what());
  } catch (const std::exception& e) {
    return fail(CM_ERR_INTERNAL, e.what());
  }
}

void cm_space_destroy(cm_space* space) {
  delete reinterpret_cast<SpacePtr*>(space);
}

size_t cm_space_atom_count(const cm_space* space) {
  return space ? unwrap(space)->atom_count() : 0;
}

cm_status cm_eval_formula(const cm_space* space, const char* formula,
                          const char* assignment_json, uint32_t num_bound, uint32_t set_bound,
                          char** out_report_json) {
  if (!space || !formula) return fail(CM_ERR_INVALID_ARG, "null argument");
  return guarded(out_report_json, [&] {
    Assignment beta = parse_assignment(unwrap(space), assignment_json);
    Bounds bounds{num_bound, set_bound};
    return truth_report_to_json(evaluate_with_report(parse_formula(formula), beta, bounds));
  });
}

cm_status cm_eval_file(const cm_space* space, const char* file_text,
                       const char* assignment_json, uint32_t num_bound, uint32_t set_bound,
                       char** out_reports_json) {
  if (!space || !file_text) return fail(CM_ERR_INVALID_ARG, "null argument");
  return guarded(out_reports_json, [&] {
    Assignment beta = parse_assignment(unwrap(space), assignment_json);
    Bounds bounds{num_bound, set_bound};
    json reports = json::array();
    for (const FormulaPtr& f : parse_formula_file(file_text))
      reports.push_back(truth_report_to_json(evaluate_with_report(f, beta, bounds)));
    return reports;
  });
}

cm_status cm_suite_axioms(const cm_space* space, uint32_t num_bound, uint32_t set_bound,
                          uint64_t trials, uint64_t seed, char** out_report_json) {
  if (!space) return fail(CM_ERR_INVALID_ARG, "null space");
  return guarded(out_report_json, [&] {
    Rng rng(seed);
    return axiom_suite_report_to_json(
        axiom_suite(unwrap(space), Bounds{num_bound, set_bound}, trials, rng));
  });
}

cm_status cm_suite_rules(const cm_space* space, uint32_t num_bound, uint32_t set_bound,
                         uint64_t trials, uint64_t seed, char** out_report_json) {
  if (!space) return fail(CM_ERR_INVALID_ARG, "null space");
  return guarded(out_report_json, [&] {
    Rng rng(seed);
    json rules = json::array();
    bool all_passed = true;
    for (RuleKind kind : all_rule_kinds()) {
      RuleReport report = check_rule(kind, unwrap(space), Bounds{num_bound, set_bound},
                                     trials, rng);
      all_passed = all_passed && report.passed();
      rules.push_back(rule_report_to_json(report));
    }
    return json{{"schema", kSchemaTag}, {"rules", std::move(rules)}, {"all_passed", all_passed}};
  });
}

cm_status cm_suite_boolean_laws(const cm_space* space, char** out_report_json) {
  if (!space) return fail(CM_ERR_INVALID_ARG, "null space");
  return guarded(out_report_json, [&] {
    std::size_t cases = check_boolean_laws(unwrap(space));
    return json{{"schema", kSchemaTag}, {"cases", cases}, {"passed", true}};
  });
}

cm_status cm_argmin(const char* scenario_json, char** out_selection_json) {
  if (!scenario_json) return fail(CM_ERR_INVALID_ARG, "null scenario");
  return guarded(out_selection_json, [&] {
    json scenario;
    try {
      scenario = json::parse(scenario_json);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedScenario, e.what());
    }
    auto [field, f] = scenario_from_json(scenario);
    return argmin_result_to_json(argmin(field, f));
  });
}

cm_status cm_bw(const char* request_json, char** out_report_json) {
  if (!request_json) return fail(CM_ERR_INVALID_ARG, "null request");
  return guarded(out_report_json, [&] {
    json request;
    try {
      request = json::parse(request_json);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedScenario, e.what());
    }
    return run_bw_request(request);
  });
}

}  // extern "C"
