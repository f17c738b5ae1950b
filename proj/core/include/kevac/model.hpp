#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kevac {

/// Evacuation times, weights and coordinates are exact integers throughout.
using Time = std::int64_t;
using Weight = std::int64_t;
using Coord = std::int64_t;

/// Raised for malformed inputs: invalid instances, plans, index ranges, stale handles.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Discrete keeps the congestion ceiling ceil(W/c) - 1; Simplified evaluates with
/// c = 1 and drops the -1 constant.
enum class CostModel { Discrete, Simplified };

const char* to_string(CostModel cm);
CostModel cost_model_from_string(const std::string& name);

/// A dynamic path network: vertices x_0 < ... < x_n on a line, each holding an
/// integer weight interval [wminus, wplus] of evacuees. Uniform edge capacity
/// and travel time per unit distance.
struct PathInstance {
    std::vector<Coord> coords;
    std::vector<Weight> wminus;
    std::vector<Weight> wplus;
    std::int64_t capacity = 1;
    std::int64_t tau = 1;

    /// Index of the last vertex (the path has n + 1 vertices).
    int n() const { return static_cast<int>(coords.size()) - 1; }
    int num_vertices() const { return static_cast<int>(coords.size()); }
};

/// Empty iff the instance is well formed; every entry names the field and index.
std::vector<std::string> validate_instance(const PathInstance& inst);

/// Throws InvalidInput listing all violations.
void require_valid(const PathInstance& inst);

/// One concrete weight per vertex.
struct Scenario {
    std::vector<Weight> weights;

    bool operator==(const Scenario&) const = default;
};

bool in_scenario_space(const PathInstance& inst, const Scenario& s);

Scenario all_minus(const PathInstance& inst);
Scenario all_plus(const PathInstance& inst);

/// Step scenario: w- below t1, w+ on [t1, t2), w- from t2 on.
struct ScenarioDescriptor {
    int t1 = 0;
    int t2 = 0;

    auto operator<=>(const ScenarioDescriptor&) const = default;
};

Scenario realize_scenario(const PathInstance& inst, ScenarioDescriptor d);

/// True when both descriptors produce the same weight vector.
bool same_scenario(const PathInstance& inst, ScenarioDescriptor a, ScenarioDescriptor b);

struct Part {
    int l = 0;
    int r = 0;
    int sink = 0;

    bool operator==(const Part&) const = default;
};

/// A k-partition of the vertices into contiguous non-empty parts, one sink per part.
class Plan {
public:
    Plan() = default;

    /// Validates coverage of [0, n], contiguity and sink placement.
    Plan(std::vector<Part> parts, int n);

    /// From right ends r_1 < ... < r_k = n and per-part sinks.
    static Plan from_boundaries(const std::vector<int>& boundaries, const std::vector<int>& sinks,
                                int n);

    const std::vector<Part>& parts() const { return parts_; }
    int k() const { return static_cast<int>(parts_.size()); }
    int n() const { return parts_.empty() ? -1 : parts_.back().r; }

    std::vector<int> boundaries() const;
    std::vector<int> sinks() const;

    bool operator==(const Plan&) const = default;

private:
    std::vector<Part> parts_;
};

/// Empty iff `parts` is a valid plan over vertices [0, n].
std::vector<std::string> validate_plan(const std::vector<Part>& parts, int n);

}  // namespace kevac
