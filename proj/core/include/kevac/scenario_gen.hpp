#pragma once

#include <vector>

#include "kevac/model.hpp"

namespace kevac {

/// Every step descriptor (t1, t2) with 0 <= t1 <= t2 <= n + 1, in lexicographic
/// order; (n + 2)(n + 3) / 2 entries. Descriptors with t1 == t2 all realize the
/// all-minus scenario.
std::vector<ScenarioDescriptor> enumerate_global_candidates(const PathInstance& inst);

struct PartCandidate {
    int part = 0;
    ScenarioDescriptor descriptor;

    bool operator==(const PartCandidate&) const = default;
};

/// Worst-case candidates of a plan: for each part [l, r], the left-dominant
/// descriptors (l, i) and the right-dominant descriptors (i, r + 1), l <= i <= r + 1,
/// deduplicated by (t1, t2) within the part. Weights outside the part stay at w-.
std::vector<PartCandidate> enumerate_partition_candidates(const PathInstance& inst,
                                                          const Plan& plan);

/// Candidates of a single part [l, r] (same order as above).
std::vector<ScenarioDescriptor> part_candidates(int l, int r);

}  // namespace kevac
