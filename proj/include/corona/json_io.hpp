#pragma once

#include <json.hpp>
#include <string>

#include "corona/solvers.hpp"
#include "corona/theorems.hpp"

namespace corona {

/// JSON shapes are stable: nlohmann::json keeps keys sorted, and every field
/// is an integer, string, or array thereof, so identical data serializes to
/// identical bytes.

nlohmann::json certificate_to_json(const Certificate& c);

/// Parses the shapes produced by certificate_to_json.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json prediction_to_json(const Prediction& p);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// Includes provenance labels ("satellite j of edge i") for refutation
/// witnesses that live on a product graph.
nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json exact_result_to_json(const ExactResult& r, const std::string& invariant);

std::string relation_name(Relation r);

}  // namespace corona
