#pragma once

#include "ploi/analyzer.hpp"
#include "ploi/embedproc.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ploi {

using Json = nlohmann::json;

// All parsers throw ParseError on malformed input; maps are re-validated
// through make_plmap, so EndpointError and MonotonicityError also surface.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const PLMap& g);
PLMap plmap_from_json(const Json& j);

Json to_json(const Interval& a);
Interval interval_from_json(const Json& j);

Json to_json(const ClosedInterval& c);
ClosedInterval closed_interval_from_json(const Json& j);

Json to_json(const FixedSet& f);
FixedSet fixed_set_from_json(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const SignedOrbital& s);
SignedOrbital signed_orbital_from_json(const Json& j);

Json to_json(const TransitionChainWitness& w);
TransitionChainWitness chain_witness_from_json(const Json& j);

Json to_json(const Tower& t);
Tower tower_from_json(const Json& j);
// Entries as written, without checking that they are orbitals.
std::vector<TowerEntry> tower_entries_from_json(const Json& j);

Json to_json(const ImbalanceWitness& w);
ImbalanceWitness imbalance_witness_from_json(const Json& j);

Json to_json(const WreathCert& c);
Json to_json(const BCertificate& c);
Json to_json(const GeneratorFamily& f);
GeneratorFamily family_from_json(const Json& j);

Json to_json(const Census& c);
Census census_from_json(const Json& j);
Json to_json(const PipelineTrace& t);
PipelineTrace trace_from_json(const Json& j);

Json to_json(const ExtractResult& r);
Json to_json(const WWitnessResult& r);

Json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);

// A bare PLMap, a list of PLMaps, {"generators": [...]}, or a family bundle.
std::vector<PLMap> generators_from_json(const Json& j);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace ploi
