#ifndef CONDMODEL_SERIALIZE_HPP
#define CONDMODEL_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "condmodel/analysis.hpp"
#include "condmodel/condset.hpp"
#include "condmodel/eval.hpp"
#include "condmodel/measure.hpp"
#include "condmodel/suites.hpp"

namespace condmodel {

inline constexpr const char* kSchemaTag = "condmodel/1";

// {"weights":["1/2","1/2"]}; throws ConfigError on malformed input.
SpacePtr space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const SpacePtr& space);

nlohmann::json event_to_json(const Event& e);
Event event_from_json(const SpacePtr& space, const nlohmann::json& j);

// {"carrier":[0],"fibers":[{"fin":[1,2]},null]}; cofinite fibers as
// {"cofin":[5]}.
nlohmann::json condset_to_json(const CondSet& n);
CondSet condset_from_json(const SpacePtr& space, const nlohmann::json& j);

nlohmann::json condnat_to_json(const CondNat& n);
CondNat condnat_from_json(const SpacePtr& space, const nlohmann::json& j);
nlohmann::json condreal_to_json(const CondReal& x);
CondReal condreal_from_json(const SpacePtr& space, const nlohmann::json& j);

// {"num":{"y":["2","3"]},"set":{"X":{...}}}
Assignment assignment_from_json(const SpacePtr& space, const nlohmann::json& j);

nlohmann::json truth_report_to_json(const TruthReport& report);

nlohmann::json axiom_suite_report_to_json(const AxiomSuiteReport& report);
nlohmann::json rule_report_to_json(const RuleReport& report);

// Scenario table: {"space":{...},"rows":[{"atom":0,"boxes":[{"lo":["-1"],
// "hi":["1"]}],"delta":"1","f":"x1*x1"}]}. Throws MalformedScenario.
std::pair<CompactField, Integrand> scenario_from_json(const nlohmann::json& j);
nlohmann::json argmin_result_to_json(const ArgminResult& result);

// BW request: {"space":{...},"sequences":["1/(k+1)",...],"target":["0",...],
// "epsilons":["1/2",...],"horizon":100,"window":8}
nlohmann::json run_bw_request(const nlohmann::json& request);

}  // namespace condmodel

#endif
