#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kevac/model.hpp"

namespace kevac {

/// Floor division and the matching non-negative remainder (c > 0).
inline std::int64_t floor_div(std::int64_t a, std::int64_t c) {
    std::int64_t q = a / c;
    if ((a % c != 0) && (a < 0)) --q;
    return q;
}
inline std::int64_t floor_mod(std::int64_t a, std::int64_t c) { return a - floor_div(a, c) * c; }
inline std::int64_t ceil_div(std::int64_t a, std::int64_t c) { return -floor_div(-a, c); }

/// Max structure over a multiset of (W, L) pairs, cost ceil(W / c) + L, with
/// bulk AddW / AddL applied to every stored pair.
///
/// Pairs are grouped by W mod c. Within a group a bulk AddW shifts every cost by
/// the same amount, so each group is an ordinary max-heap. The group maxima are
/// the leaves of a 2-3 tree ordered by a shifted residue label; an AddW changes
/// the relative order of at most two contiguous label runs, so only the tree
/// paths above the two run boundaries need recomputing.
class BiHeap {
public:
    struct Handle {
        std::uint32_t slot = 0;
        std::uint32_t generation = 0;

        bool operator==(const Handle&) const = default;
    };

    struct Max {
        Time cost = 0;
        Handle handle;
    };

    struct Pair {
        std::int64_t w = 0;
        std::int64_t l = 0;
    };

    explicit BiHeap(std::int64_t capacity);

    BiHeap(const BiHeap&) = delete;
    BiHeap& operator=(const BiHeap&) = delete;
    BiHeap(BiHeap&&) = default;
    BiHeap& operator=(BiHeap&&) = default;

    std::optional<Max> max() const;

    void add_w(std::int64_t w);
    void add_l(std::int64_t l);
    Handle insert(std::int64_t w, std::int64_t l);
    /// Throws InvalidInput for a stale or foreign handle.
    void erase(Handle h);

    bool contains(Handle h) const;
    /// Current (W, L) of a live pair.
    Pair value(Handle h) const;
    Time cost(Handle h) const;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::int64_t capacity() const { return capacity_; }
    std::size_t num_classes() const { return classes_.size(); }
    void clear();

    /// Tree nodes visited (descents plus summary recomputations) since construction
    /// or the last reset.
    std::uint64_t node_touches() const { return touches_; }
    void reset_counters() { touches_ = 0; }

    /// Full structural check; throws std::logic_error on the first violation.
    void check_invariants() const;

private:
    struct Entry {
        std::int64_t w0 = 0;
        std::int64_t l0 = 0;
        std::int64_t wbar0 = 0;
        std::int64_t lbar0 = 0;
        std::int64_t label = 0;
        std::uint32_t generation = 0;
        int heap_pos = -1;  // -1 when the slot is free
    };

    struct ClassHeap {
        std::int64_t label = 0;
        std::vector<std::uint32_t> items;  // binary max-heap of slots
        int leaf = -1;
    };

    struct Node {
        int parent = -1;
        std::array<int, 4> child{-1, -1, -1, -1};  // a fourth child exists only mid-split
        int nchild = 0;
        bool leaf = false;
        std::int64_t min_label = 0;
        int best_leaf = -1;
        ClassHeap* cls = nullptr;
    };

    Time slot_cost(std::uint32_t slot) const;
    Time leaf_cost(int leaf) const;
    bool slot_valid(Handle h) const;

    void sift_up(ClassHeap& h, int pos);
    void sift_down(ClassHeap& h, int pos);
    void heap_remove(ClassHeap& h, int pos);

    int new_node();
    void free_node(int id);
    void pull(int id);
    void pull_to_root(int id);
    int insert_leaf(std::int64_t label, ClassHeap* cls);
    void erase_leaf(int leaf);
    void split(int id);
    int lower_bound_leaf(std::int64_t label);
    void set_child(int parent, int idx, int child);
    int child_index(int parent, int child) const;
    void remove_child(int parent, int idx);
    void insert_child(int parent, int idx, int child);

    std::int64_t capacity_;
    std::int64_t wbar_ = 0;
    std::int64_t lbar_ = 0;
    std::size_t size_ = 0;
    std::uint64_t touches_ = 0;

    std::vector<Entry> entries_;
    std::vector<std::uint32_t> free_slots_;
    std::map<std::int64_t, ClassHeap> classes_;

    std::vector<Node> nodes_;
    std::vector<int> free_nodes_;
    int root_ = -1;
};

}  // namespace kevac
