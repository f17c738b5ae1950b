#pragma once

#include <optional>
#include <vector>

#include "kevac/biheap.hpp"
#include "kevac/generate.hpp"
#include "kevac/model.hpp"
#include "kevac/oracle.hpp"

namespace kevac::testing {

inline PathInstance make_instance(std::vector<Coord> coords, std::vector<Weight> wminus,
                                  std::vector<Weight> wplus, std::int64_t capacity = 1,
                                  std::int64_t tau = 1) {
    PathInstance inst;
    inst.coords = std::move(coords);
    inst.wminus = std::move(wminus);
    inst.wplus = std::move(wplus);
    inst.capacity = capacity;
    inst.tau = tau;
    return inst;
}

/// Instance with fixed weights (w- = w+).
inline PathInstance fixed_instance(std::vector<Coord> coords, std::vector<Weight> w,
                                   std::int64_t capacity = 1, std::int64_t tau = 1) {
    return make_instance(std::move(coords), w, w, capacity, tau);
}

/// Random instance with n drawn from [n_min, n_max].
inline PathInstance random_instance(Rng& rng, int n_min, int n_max, Weight w_max,
                                    std::int64_t capacity = 1, std::int64_t tau = 1,
                                    int degenerate_percent = 0) {
    GenOptions g;
    g.n = static_cast<int>(rng.uniform(n_min, n_max));
    g.coord_max = 4 * (static_cast<Coord>(g.n) + 1);
    g.w_max = w_max;
    g.capacity = capacity;
    g.tau = tau;
    g.degenerate_percent = degenerate_percent;
    return generate_instance(rng, g);
}

/// Replays an operation sequence on the real Bi-Heap; maximum after every op.
inline std::vector<std::optional<Time>> run_biheap_ops(std::int64_t capacity,
                                                       const std::vector<BiHeapOp>& ops,
                                                       bool check_invariants = false) {
    BiHeap h(capacity);
    std::vector<BiHeap::Handle> handles;
    std::vector<std::optional<Time>> out;
    out.reserve(ops.size());
    for (const BiHeapOp& op : ops) {
        switch (op.kind) {
            case BiHeapOp::Kind::AddW:
                h.add_w(op.w);
                break;
            case BiHeapOp::Kind::AddL:
                h.add_l(op.l);
                break;
            case BiHeapOp::Kind::Insert:
                handles.push_back(h.insert(op.w, op.l));
                break;
            case BiHeapOp::Kind::Delete:
                h.erase(handles.at(op.target));
                break;
        }
        const auto m = h.max();
        out.push_back(m ? std::optional<Time>(m->cost) : std::nullopt);
        if (check_invariants) h.check_invariants();
    }
    return out;
}

/// True if v is non-increasing then non-decreasing.
inline bool is_quasi_convex(const std::vector<Time>& v) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i + 1] <= v[i]) ++i;
    while (i + 1 < v.size() && v[i + 1] >= v[i]) ++i;
    return i + 1 >= v.size();
}

}  // namespace kevac::testing
