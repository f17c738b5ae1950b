#pragma once

#include <cstdint>
#include <random>

#include "kevac/model.hpp"

namespace kevac {

/// Seeded generator with a portable uniform integer draw (the standard
/// distributions are implementation-defined, so their output varies across
/// standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (engine_() & 1U) != 0; }

private:
    std::mt19937_64 engine_;
};

struct GenOptions {
    int n = 10;                 ///< index of the last vertex
    Coord coord_max = 100;      ///< coordinates drawn distinct from [0, coord_max]
    Weight w_max = 10;          ///< weights drawn from [1, w_max]
    std::int64_t capacity = 1;
    std::int64_t tau = 1;
    std::uint64_t seed = 1;
    /// Probability (percent) that a vertex gets a degenerate interval.
    int degenerate_percent = 0;
};

/// Deterministic for a given option set. Throws InvalidInput when coord_max < n
/// or any bound is non-positive.
PathInstance generate_instance(const GenOptions& opts);

/// Same draw using an existing generator.
PathInstance generate_instance(Rng& rng, const GenOptions& opts);

}  // namespace kevac
