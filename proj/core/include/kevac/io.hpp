#pragma once

#include <iosfwd>
#include <string>

#include "kevac/model.hpp"

namespace kevac {

enum class ObjectiveKind { EvacTime, MaxRegret };

const char* to_string(ObjectiveKind kind);

/// Contents of a plan file.
struct PlanRecord {
    Plan plan;
    Time objective = 0;
    ObjectiveKind kind = ObjectiveKind::EvacTime;
};

// Instance file:
//   { "vertices": [{"x": int, "w_min": int, "w_max": int}, ...], "capacity": int, "tau": int }
// Plan file:
//   { "parts": [{"l": int, "r": int, "sink": int}, ...], "objective": int,
//     "objective_kind": "evac_time" | "max_regret" }
// Scenario file:
//   { "weights": [int, ...] }
//
// Readers throw InvalidInput on malformed documents. Instance readers do not
// validate invariants; call validate_instance on the result.

std::string instance_to_json(const PathInstance& inst);
PathInstance instance_from_json(const std::string& text);

std::string plan_to_json(const PlanRecord& rec);
PlanRecord plan_from_json(const std::string& text);

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace kevac
