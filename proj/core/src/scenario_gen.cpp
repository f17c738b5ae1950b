#include "kevac/scenario_gen.hpp"

#include <string>

namespace kevac {

std::vector<ScenarioDescriptor> enumerate_global_candidates(const PathInstance& inst) {
    const int n = inst.n();
    std::vector<ScenarioDescriptor> out;
    out.reserve(static_cast<std::size_t>(n + 2) * static_cast<std::size_t>(n + 3) / 2);
    for (int t1 = 0; t1 <= n + 1; ++t1)
        for (int t2 = t1; t2 <= n + 1; ++t2) out.push_back(ScenarioDescriptor{t1, t2});
    return out;
}

std::vector<ScenarioDescriptor> part_candidates(int l, int r) {
    if (l > r) throw InvalidInput("empty part [" + std::to_string(l) + "," + std::to_string(r) + "]");
    std::vector<ScenarioDescriptor> out;
    out.reserve(2 * static_cast<std::size_t>(r - l + 2));
    for (int i = l; i <= r + 1; ++i) out.push_back(ScenarioDescriptor{l, i});
    // (l, r + 1) is already present as the last left-dominant descriptor.
    for (int i = l + 1; i <= r + 1; ++i) out.push_back(ScenarioDescriptor{i, r + 1});
    return out;
}

std::vector<PartCandidate> enumerate_partition_candidates(const PathInstance& inst,
                                                          const Plan& plan) {
    if (plan.n() != inst.n())
        throw InvalidInput("plan covers [0," + std::to_string(plan.n()) + "], path is [0," +
                           std::to_string(inst.n()) + "]");
    std::vector<PartCandidate> out;
    for (int d = 0; d < plan.k(); ++d) {
        const Part& p = plan.parts()[d];
        for (const ScenarioDescriptor& s : part_candidates(p.l, p.r)) out.push_back(PartCandidate{d, s});
    }
    return out;
}

}  // namespace kevac
