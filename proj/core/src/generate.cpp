#include "kevac/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace kevac {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InvalidInput("empty range for uniform draw");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % range);
}

PathInstance generate_instance(const GenOptions& opts) {
    Rng rng(opts.seed);
    return generate_instance(rng, opts);
}

PathInstance generate_instance(Rng& rng, const GenOptions& opts) {
    if (opts.n < 0) throw InvalidInput("n must be >= 0");
    if (opts.coord_max < opts.n)
        throw InvalidInput("coord-max " + std::to_string(opts.coord_max) + " too small for " +
                           std::to_string(opts.n + 1) + " distinct coordinates");
    if (opts.w_max < 1) throw InvalidInput("w-max must be >= 1");
    if (opts.capacity < 1) throw InvalidInput("capacity must be >= 1");
    if (opts.tau < 1) throw InvalidInput("tau must be >= 1");

    PathInstance inst;
    inst.capacity = opts.capacity;
    inst.tau = opts.tau;

    // Floyd's sampling of n + 1 distinct coordinates.
    const std::int64_t universe = opts.coord_max + 1;
    const std::int64_t count = opts.n + 1;
    std::set<Coord> chosen;
    for (std::int64_t j = universe - count; j < universe; ++j) {
        const Coord v = rng.uniform(0, j);
        if (!chosen.insert(v).second) chosen.insert(j);
    }
    inst.coords.assign(chosen.begin(), chosen.end());

    for (int i = 0; i <= opts.n; ++i) {
        const Weight lo = rng.uniform(1, opts.w_max);
        const bool degenerate = opts.degenerate_percent > 0 &&
                                rng.uniform(0, 99) < opts.degenerate_percent;
        const Weight hi = degenerate ? lo : rng.uniform(lo, opts.w_max);
        inst.wminus.push_back(lo);
        inst.wplus.push_back(hi);
    }
    return inst;
}

}  // namespace kevac
