#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "kevac/model.hpp"

namespace kevac {

struct UnimodalMin {
    int arg = 0;
    Time value = 0;
    std::uint64_t evaluations = 0;
};

/// Minimum of a quasi-convex integer function on [lo, hi] (non-increasing, then
/// non-decreasing; plateaus allowed). Ternary probes discard a third only when the
/// probe values differ; equal probes do not say on which side a lower value lies,
/// so the middle is searched first and the outer parts only if needed. Short
/// ranges are scanned linearly. Each point is evaluated at most once.
template <class F>
UnimodalMin minimize_unimodal(int lo, int hi, F&& f) {
    if (lo > hi) throw std::invalid_argument("minimize_unimodal: empty range");
    std::map<int, Time> memo;
    auto eval = [&](int x) {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        const Time v = f(x);
        memo.emplace(x, v);
        return v;
    };
    auto better = [](std::pair<int, Time> a, std::pair<int, Time> b) {
        return b.second < a.second || (b.second == a.second && b.first < a.first) ? b : a;
    };

    auto search = [&](auto&& self, int a, int b) -> std::pair<int, Time> {
        if (b - a + 1 <= 8) {
            std::pair<int, Time> best{a, eval(a)};
            for (int x = a + 1; x <= b; ++x) best = better(best, {x, eval(x)});
            return best;
        }
        const int m1 = a + (b - a) / 3;
        const int m2 = b - (b - a) / 3;
        const Time f1 = eval(m1);
        const Time f2 = eval(m2);
        if (f1 < f2) return self(self, a, m2 - 1);
        if (f1 > f2) return self(self, m1 + 1, b);
        const Time v = f1;
        std::pair<int, Time> mid = self(self, m1, m2);
        if (mid.second < v) return mid;
        std::pair<int, Time> best = mid;
        if (a <= m1 - 1) {
            const auto left = self(self, a, m1 - 1);
            if (left.second < v) return left;
            best = better(best, left);
        }
        if (m2 + 1 <= b) {
            const auto right = self(self, m2 + 1, b);
            if (right.second < v) return right;
            best = better(best, right);
        }
        return best;
    };

    const auto best = search(search, lo, hi);
    return UnimodalMin{best.first, best.second, memo.size()};
}

}  // namespace kevac
