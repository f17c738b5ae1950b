#include "kevac/model.hpp"

#include <algorithm>
#include <sstream>

namespace kevac {

const char* to_string(CostModel cm) {
    return cm == CostModel::Discrete ? "discrete" : "simplified";
}

CostModel cost_model_from_string(const std::string& name) {
    if (name == "discrete") return CostModel::Discrete;
    if (name == "simplified") return CostModel::Simplified;
    throw InvalidInput("unknown cost model '" + name + "' (expected discrete|simplified)");
}

std::vector<std::string> validate_instance(const PathInstance& inst) {
    std::vector<std::string> out;
    const std::size_t size = inst.coords.size();
    if (size == 0) out.emplace_back("coords empty: instance needs at least one vertex");
    if (inst.wminus.size() != size)
        out.emplace_back("wminus size " + std::to_string(inst.wminus.size()) + " != coords size " +
                         std::to_string(size));
    if (inst.wplus.size() != size)
        out.emplace_back("wplus size " + std::to_string(inst.wplus.size()) + " != coords size " +
                         std::to_string(size));

    for (std::size_t i = 1; i < size; ++i) {
        if (inst.coords[i - 1] >= inst.coords[i])
            out.emplace_back("coords not strictly increasing at index " + std::to_string(i));
    }
    const std::size_t m = std::min(inst.wminus.size(), inst.wplus.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (inst.wminus[i] <= 0)
            out.emplace_back("weight lower bound not positive at index " + std::to_string(i));
        if (inst.wminus[i] > inst.wplus[i])
            out.emplace_back("weight interval empty at index " + std::to_string(i));
    }
    if (inst.capacity < 1) out.emplace_back("capacity must be >= 1");
    if (inst.tau < 1) out.emplace_back("tau must be >= 1");
    return out;
}

void require_valid(const PathInstance& inst) {
    const auto violations = validate_instance(inst);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid instance:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw InvalidInput(msg.str());
}

bool in_scenario_space(const PathInstance& inst, const Scenario& s) {
    if (s.weights.size() != inst.coords.size()) return false;
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
        if (s.weights[i] < inst.wminus[i] || s.weights[i] > inst.wplus[i]) return false;
    }
    return true;
}

Scenario all_minus(const PathInstance& inst) { return Scenario{inst.wminus}; }

Scenario all_plus(const PathInstance& inst) { return Scenario{inst.wplus}; }

Scenario realize_scenario(const PathInstance& inst, ScenarioDescriptor d) {
    const int n = inst.n();
    if (d.t1 < 0 || d.t1 > d.t2 || d.t2 > n + 1) {
        throw InvalidInput("scenario descriptor (" + std::to_string(d.t1) + "," +
                           std::to_string(d.t2) + ") outside 0 <= t1 <= t2 <= " +
                           std::to_string(n + 1));
    }
    Scenario s{inst.wminus};
    for (int i = d.t1; i < d.t2; ++i) s.weights[i] = inst.wplus[i];
    return s;
}

bool same_scenario(const PathInstance& inst, ScenarioDescriptor a, ScenarioDescriptor b) {
    return realize_scenario(inst, a) == realize_scenario(inst, b);
}

std::vector<std::string> validate_plan(const std::vector<Part>& parts, int n) {
    std::vector<std::string> out;
    if (parts.empty()) {
        out.emplace_back("plan has no parts");
        return out;
    }
    int expected_l = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const Part& part = parts[p];
        const std::string tag = "part " + std::to_string(p);
        if (part.l != expected_l)
            out.emplace_back(tag + ": left end " + std::to_string(part.l) + " expected " +
                             std::to_string(expected_l));
        if (part.r < part.l) out.emplace_back(tag + ": empty (r < l)");
        if (part.sink < part.l || part.sink > part.r)
            out.emplace_back(tag + ": sink " + std::to_string(part.sink) + " outside [" +
                             std::to_string(part.l) + "," + std::to_string(part.r) + "]");
        expected_l = part.r + 1;
    }
    if (parts.back().r != n)
        out.emplace_back("last part ends at " + std::to_string(parts.back().r) +
                         ", path ends at " + std::to_string(n));
    return out;
}

Plan::Plan(std::vector<Part> parts, int n) : parts_(std::move(parts)) {
    const auto violations = validate_plan(parts_, n);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid plan:";
        for (const auto& v : violations) msg << "\n  " << v;
        throw InvalidInput(msg.str());
    }
}

Plan Plan::from_boundaries(const std::vector<int>& boundaries, const std::vector<int>& sinks,
                           int n) {
    if (boundaries.size() != sinks.size())
        throw InvalidInput("plan needs one sink per part");
    std::vector<Part> parts;
    parts.reserve(boundaries.size());
    int l = 0;
    for (std::size_t p = 0; p < boundaries.size(); ++p) {
        parts.push_back(Part{l, boundaries[p], sinks[p]});
        l = boundaries[p] + 1;
    }
    return Plan(std::move(parts), n);
}

std::vector<int> Plan::boundaries() const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.r);
    return out;
}

std::vector<int> Plan::sinks() const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.sink);
    return out;
}

}  // namespace kevac
