#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "lct/delta_table.hpp"
#include "lct/extremal.hpp"
#include "lct/facet_cone.hpp"

namespace lct::cli {

using Json = nlohmann::ordered_json;

/// Parses a document, mapping library and json failures to ParseError.
Json parse_document(const std::string& text);

bool is_table_document(const Json& doc);

/// Table document <-> explicit window.
RawWindow table_from_json(const Json& doc);
Json table_to_json(const RawWindow& w);

/// Difference-point document: {"d0": [{"n":..,"value":".."}], "d1": ..., "d2": ...}.
MPoint point_from_json(const Json& doc);
Json point_to_json(const MPoint& p);

/// Accepts either document form; tables are converted through their
/// difference image.
MPoint input_point(const Json& doc);

/// Module spec document -> weighted tables ready for combination.
std::vector<std::pair<Rational, DeltaTable>> spec_terms_from_json(const Json& doc);

Json decomposition_to_json(const Decomposition& dec);
Json generator_to_json(const GeneratorId& g);
Json generator_terms_to_json(const std::vector<std::pair<Rational, GeneratorId>>& terms);
Json functional_to_json(const FunctionalId& f);
Json violation_to_json(const Violation& v);
Json incidence_to_json(const Incidence& data);

}  // namespace lct::cli
