#include "condmodel/serialize.hpp"

#include <nlohmann/json.hpp>

namespace condmodel {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& msg) {
  throw Error(ErrorCode::ConfigError, msg);
}

[[noreturn]] void bad_scenario(const std::string& msg) {
  throw Error(ErrorCode::MalformedScenario, msg);
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad_config("expected a rational as a string or integer");
}

}  // namespace

SpacePtr space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
    bad_config("space needs a \"weights\" array");
  std::vector<Rat> weights;
  for (const auto& w : j["weights"]) weights.push_back(rat_from_json(w));
  try {
    return MeasureSpace::make(std::move(weights));
  } catch (const Error& e) {
    bad_config(e.what());
  }
}

json space_to_json(const SpacePtr& space) {
  json weights = json::array();
  for (const Rat& w : space->weights()) weights.push_back(rational_to_string(w));
  return json{{"weights", std::move(weights)}};
}

json event_to_json(const Event& e) {
  json atoms = json::array();
  for (std::size_t a : e.atoms()) atoms.push_back(a);
  return atoms;
}

Event event_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_array()) bad_config("event must be an array of atom indices");
  std::vector<std::size_t> atoms;
  for (const auto& a : j) {
    if (!a.is_number_unsigned() || a.get<std::size_t>() >= space->atom_count())
      bad_config("atom index out of range");
    atoms.push_back(a.get<std::size_t>());
  }
  return Event::of_atoms(space, atoms);
}

json condset_to_json(const CondSet& n) {
  json fibers = json::array();
  for (std::size_t a = 0; a < n.space()->atom_count(); ++a) {
    if (!n.carrier().contains(a)) {
      fibers.push_back(nullptr);
      continue;
    }
    const Fiber& f = n.fiber(a);
    json elems = json::array();
    for (std::uint64_t v : f.listed()) elems.push_back(v);
    fibers.push_back(json{{f.is_cofinite() ? "cofin" : "fin", std::move(elems)}});
  }
  return json{{"carrier", event_to_json(n.carrier())}, {"fibers", std::move(fibers)}};
}

CondSet condset_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("fibers"))
    bad_config("set needs \"carrier\" and \"fibers\"");
  Event carrier = event_from_json(space, j["carrier"]);
  const json& jf = j["fibers"];
  if (!jf.is_array() || jf.size() != space->atom_count())
    bad_config("\"fibers\" needs one entry per atom");
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    const json& f = jf[a];
    if (f.is_null()) {
      if (carrier.contains(a)) bad_config("null fiber on a carrier atom");
      continue;
    }
    bool cofin = f.contains("cofin");
    if (!f.is_object() || (!f.contains("fin") && !cofin))
      bad_config("fiber must be {\"fin\":[...]} or {\"cofin\":[...]}");
    std::vector<std::uint64_t> elems;
    for (const auto& v : f[cofin ? "cofin" : "fin"]) {
      if (!v.is_number_unsigned()) bad_config("fiber elements must be nonnegative integers");
      elems.push_back(v.get<std::uint64_t>());
    }
    fibers[a] = cofin ? Fiber::cofinite(std::move(elems)) : Fiber::finite(std::move(elems));
  }
  return CondSet::make_stable(space, fibers, carrier);
}

json condnat_to_json(const CondNat& n) {
  json out = json::array();
  for (const Int& v : n.values()) out.push_back(int_to_string(v));
  return out;
}

CondNat condnat_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_array() || j.size() != space->atom_count())
    bad_config("number needs one value per atom");
  std::vector<Int> values;
  for (const auto& v : j) {
    if (v.is_number_unsigned()) {
      values.emplace_back(static_cast<unsigned long>(v.get<std::uint64_t>()));
    } else if (v.is_string()) {
      Int z = parse_integer(v.get<std::string>());
      if (z < 0) bad_config("number values must be nonnegative");
      values.push_back(std::move(z));
    } else {
      bad_config("number values must be integers or strings");
    }
  }
  return CondNat(space, std::move(values));
}

json condreal_to_json(const CondReal& x) {
  json out = json::array();
  for (const Rat& v : x.values()) out.push_back(rational_to_string(v));
  return out;
}

CondReal condreal_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_array() || j.size() != space->atom_count())
    bad_config("real needs one value per atom");
  std::vector<Rat> values;
  for (const auto& v : j) values.push_back(rat_from_json(v));
  return CondReal(space, std::move(values));
}

Assignment assignment_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_object()) bad_config("assignment must be an object");
  Assignment beta(space);
  if (j.contains("num")) {
    for (const auto& [name, value] : j["num"].items())
      beta = beta.with_num(name, condnat_from_json(space, value));
  }
  if (j.contains("set")) {
    for (const auto& [name, value] : j["set"].items())
      beta = beta.with_set(name, condset_from_json(space, value));
  }
  return beta;
}

json truth_report_to_json(const TruthReport& report) {
  json witnesses = json::array();
  for (const auto& [quant, value] : report.witnesses)
    witnesses.push_back(json{{"quantifier", quant}, {"witness", value}});
  json out{{"schema", kSchemaTag},
           {"formula", report.formula},
           {"event", event_to_json(report.event)},
           {"measure", rational_to_string(report.event.measure())},
           {"holds_everywhere", report.event.is_all()},
           {"witnesses", std::move(witnesses)}};
  if (report.warnings.bound_too_small) out["warnings"] = report.warnings.notes;
  return out;
}

json axiom_suite_report_to_json(const AxiomSuiteReport& report) {
  auto entry = [](const AxiomResult& r) {
    return json{{"name", r.name}, {"formula", r.formula}, {"holds", r.holds}};
  };
  json basic = json::array();
  for (const auto& r : report.basic) basic.push_back(entry(r));
  json comprehension = json::array();
  for (const auto& r : report.comprehension) comprehension.push_back(entry(r));
  return json{{"schema", kSchemaTag},
              {"basic", std::move(basic)},
              {"induction", entry(report.induction)},
              {"comprehension", std::move(comprehension)},
              {"all_hold", report.all_hold()}};
}

json rule_report_to_json(const RuleReport& report) {
  json counterexamples = json::array();
  for (const auto& c : report.counterexamples)
    counterexamples.push_back(json{{"trial", c.trial}, {"description", c.description}});
  return json{{"schema", kSchemaTag},
              {"rule", rule_kind_name(report.kind)},
              {"trials", report.trials},
              {"premises_held", report.premises_held},
              {"counterexamples", std::move(counterexamples)},
              {"passed", report.passed()}};
}

std::pair<CompactField, Integrand> scenario_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("rows"))
    bad_scenario("scenario needs \"space\" and \"rows\"");
  SpacePtr space;
  try {
    space = space_from_json(j["space"]);
  } catch (const Error& e) {
    bad_scenario(e.what());
  }
  std::size_t k = space->atom_count();
  if (!j["rows"].is_array() || j["rows"].size() != k)
    bad_scenario("scenario needs one row per atom");

  CompactField field{space, std::vector<std::vector<Box>>(k), std::vector<Rat>(k),
                     std::vector<std::size_t>(k)};
  Integrand f{space, std::vector<ExprPtr>(k)};
  std::vector<bool> seen(k, false);
  for (const auto& row : j["rows"]) {
    if (!row.is_object() || !row.contains("atom") || !row.contains("boxes") ||
        !row.contains("delta") || !row.contains("f"))
      bad_scenario("row needs \"atom\", \"boxes\", \"delta\", \"f\"");
    std::size_t a = row["atom"].get<std::size_t>();
    if (a >= k || seen[a]) bad_scenario("bad or repeated atom index");
    seen[a] = true;
    try {
      field.delta[a] = rat_from_json(row["delta"]);
    } catch (const Error& e) {
      bad_scenario(e.what());
    }
    bool first = true;
    for (const auto& jb : row["boxes"]) {
      if (!jb.is_object() || !jb.contains("lo") || !jb.contains("hi"))
        bad_scenario("box needs \"lo\" and \"hi\"");
      Box box;
      try {
        for (const auto& v : jb["lo"]) box.lo.push_back(rat_from_json(v));
        for (const auto& v : jb["hi"]) box.hi.push_back(rat_from_json(v));
      } catch (const Error& e) {
        bad_scenario(e.what());
      }
      if (box.lo.size() != box.hi.size()) bad_scenario("box lo/hi length mismatch");
      if (first) field.dim[a] = box.lo.size();
      if (box.lo.size() != field.dim[a]) bad_scenario("boxes of one atom must share a dimension");
      first = false;
      field.boxes[a].push_back(std::move(box));
    }
    if (first) bad_scenario("row needs at least one box");
    try {
      f.exprs[a] = parse_expr(row["f"].get<std::string>());
    } catch (const SyntaxError& e) {
      bad_scenario(std::string("bad integrand: ") + e.what());
    }
  }
  return {std::move(field), std::move(f)};
}

json argmin_result_to_json(const ArgminResult& result) {
  json points = json::array();
  for (const auto& coords : result.point.coords) {
    json p = json::array();
    for (const Rat& c : coords) p.push_back(rational_to_string(c));
    points.push_back(std::move(p));
  }
  return json{{"schema", kSchemaTag},
              {"point", std::move(points)},
              {"value", condreal_to_json(result.value)}};
}

json run_bw_request(const json& request) {
  if (!request.is_object() || !request.contains("space") || !request.contains("sequences") ||
      !request.contains("target") || !request.contains("epsilons") ||
      !request.contains("horizon"))
    bad_scenario("request needs \"space\", \"sequences\", \"target\", \"epsilons\", \"horizon\"");
  SpacePtr space;
  try {
    space = space_from_json(request["space"]);
  } catch (const Error& e) {
    bad_scenario(e.what());
  }
  std::vector<std::string> exprs;
  for (const auto& s : request["sequences"]) {
    if (!s.is_string()) bad_scenario("sequence generators must be strings");
    exprs.push_back(s.get<std::string>());
  }
  CondSequence seq = [&] {
    try {
      return CondSequence::from_expressions(space, exprs);
    } catch (const SyntaxError& e) {
      bad_scenario(std::string("bad generator: ") + e.what());
    } catch (const Error& e) {
      bad_scenario(e.what());
    }
  }();
  CondReal target = condreal_from_json(space, request["target"]);
  std::vector<Rat> eps;
  for (const auto& e : request["epsilons"]) eps.push_back(rat_from_json(e));
  std::uint64_t horizon = request["horizon"].get<std::uint64_t>();

  json out{{"schema", kSchemaTag}};
  if (request.contains("window")) {
    std::uint64_t window = request["window"].get<std::uint64_t>();
    out["limsup"] = condreal_to_json(limsup(seq, horizon, window));
  }
  json indices = json::array();
  for (const CondNat& n : bw_subsequence(seq, target, eps, horizon))
    indices.push_back(condnat_to_json(n));
  out["indices"] = std::move(indices);
  return out;
}

}  // namespace condmodel
