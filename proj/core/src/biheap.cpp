#include "kevac/biheap.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace kevac {

BiHeap::BiHeap(std::int64_t capacity) : capacity_(capacity) {
    if (capacity < 1) throw InvalidInput("BiHeap capacity must be >= 1");
}

Time BiHeap::slot_cost(std::uint32_t slot) const {
    const Entry& e = entries_[slot];
    const std::int64_t w = e.w0 + wbar_ - e.wbar0;
    const std::int64_t l = e.l0 + lbar_ - e.lbar0;
    return ceil_div(w, capacity_) + l;
}

Time BiHeap::leaf_cost(int leaf) const { return slot_cost(nodes_[leaf].cls->items.front()); }

bool BiHeap::slot_valid(Handle h) const {
    return h.slot < entries_.size() && entries_[h.slot].heap_pos >= 0 &&
           entries_[h.slot].generation == h.generation;
}

bool BiHeap::contains(Handle h) const { return slot_valid(h); }

BiHeap::Pair BiHeap::value(Handle h) const {
    if (!slot_valid(h)) throw InvalidInput("stale BiHeap handle");
    const Entry& e = entries_[h.slot];
    return Pair{e.w0 + wbar_ - e.wbar0, e.l0 + lbar_ - e.lbar0};
}

Time BiHeap::cost(Handle h) const {
    if (!slot_valid(h)) throw InvalidInput("stale BiHeap handle");
    return slot_cost(h.slot);
}

std::optional<BiHeap::Max> BiHeap::max() const {
    if (size_ == 0) return std::nullopt;
    const ClassHeap* cls = capacity_ == 1 ? &classes_.begin()->second
                                          : nodes_[nodes_[root_].best_leaf].cls;
    const std::uint32_t slot = cls->items.front();
    return Max{slot_cost(slot), Handle{slot, entries_[slot].generation}};
}

void BiHeap::add_l(std::int64_t l) { lbar_ += l; }

void BiHeap::add_w(std::int64_t w) {
    const std::int64_t c = capacity_;
    const std::int64_t x_old = floor_mod(wbar_, c);
    wbar_ += w;
    const std::int64_t b = floor_mod(w, c);
    if (c == 1 || b == 0 || root_ == -1) return;

    // A pair with residue d in [1, c - b] gains floor(w / c), every other pair one
    // more. In label space that set is the cyclic run starting at (1 - x_old) mod c
    // of length c - b. Only tree nodes spanning a run boundary change their argmax,
    // and those are ancestors of the first leaf at or after the boundary.
    const std::int64_t s = floor_mod(1 - x_old, c);
    const std::int64_t e = s + (c - b) - 1;
    const std::array<std::int64_t, 2> thresholds =
        e < c ? std::array<std::int64_t, 2>{s, e + 1} : std::array<std::int64_t, 2>{e - c + 1, s};
    for (std::int64_t t : thresholds) {
        if (t <= 0 || t >= c) continue;
        auto it = classes_.lower_bound(t);
        if (it == classes_.end()) continue;
        pull_to_root(nodes_[it->second.leaf].parent);
    }
}

BiHeap::Handle BiHeap::insert(std::int64_t w, std::int64_t l) {
    std::uint32_t slot;
    if (!free_slots_.empty()) {
        slot = free_slots_.back();
        free_slots_.pop_back();
    } else {
        slot = static_cast<std::uint32_t>(entries_.size());
        entries_.emplace_back();
    }
    Entry& e = entries_[slot];
    e.w0 = w;
    e.l0 = l;
    e.wbar0 = wbar_;
    e.lbar0 = lbar_;
    e.label = floor_mod(w - wbar_, capacity_);

    auto [it, created] = classes_.try_emplace(e.label);
    ClassHeap& cls = it->second;
    cls.label = e.label;
    cls.items.push_back(slot);
    e.heap_pos = static_cast<int>(cls.items.size()) - 1;
    sift_up(cls, e.heap_pos);
    ++size_;

    if (capacity_ > 1) {
        if (created)
            cls.leaf = insert_leaf(cls.label, &cls);
        else if (cls.items.front() == slot)
            pull_to_root(nodes_[cls.leaf].parent);
    }
    return Handle{slot, entries_[slot].generation};
}

void BiHeap::erase(Handle h) {
    if (!slot_valid(h)) throw InvalidInput("stale BiHeap handle");
    Entry& e = entries_[h.slot];
    auto it = classes_.find(e.label);
    ClassHeap& cls = it->second;
    const bool was_top = e.heap_pos == 0;
    heap_remove(cls, e.heap_pos);
    e.heap_pos = -1;
    ++e.generation;
    free_slots_.push_back(h.slot);
    --size_;

    if (cls.items.empty()) {
        if (capacity_ > 1) erase_leaf(cls.leaf);
        classes_.erase(it);
    } else if (was_top && capacity_ > 1) {
        pull_to_root(cls.leaf);
    }
}

void BiHeap::clear() {
    for (std::uint32_t slot = 0; size_ > 0 && slot < entries_.size(); ++slot) {
        if (entries_[slot].heap_pos >= 0) {
            entries_[slot].heap_pos = -1;
            ++entries_[slot].generation;
            free_slots_.push_back(slot);
        }
    }
    classes_.clear();
    nodes_.clear();
    free_nodes_.clear();
    root_ = -1;
    size_ = 0;
    wbar_ = 0;
    lbar_ = 0;
}

// ---- per-class heaps ----

void BiHeap::sift_up(ClassHeap& h, int pos) {
    const std::uint32_t slot = h.items[pos];
    const Time c = slot_cost(slot);
    while (pos > 0) {
        const int parent = (pos - 1) / 2;
        if (slot_cost(h.items[parent]) >= c) break;
        h.items[pos] = h.items[parent];
        entries_[h.items[pos]].heap_pos = pos;
        pos = parent;
    }
    h.items[pos] = slot;
    entries_[slot].heap_pos = pos;
}

void BiHeap::sift_down(ClassHeap& h, int pos) {
    const int n = static_cast<int>(h.items.size());
    const std::uint32_t slot = h.items[pos];
    const Time c = slot_cost(slot);
    while (true) {
        int child = 2 * pos + 1;
        if (child >= n) break;
        Time cc = slot_cost(h.items[child]);
        if (child + 1 < n) {
            const Time rc = slot_cost(h.items[child + 1]);
            if (rc > cc) {
                ++child;
                cc = rc;
            }
        }
        if (cc <= c) break;
        h.items[pos] = h.items[child];
        entries_[h.items[pos]].heap_pos = pos;
        pos = child;
    }
    h.items[pos] = slot;
    entries_[slot].heap_pos = pos;
}

void BiHeap::heap_remove(ClassHeap& h, int pos) {
    const std::uint32_t last = h.items.back();
    h.items.pop_back();
    if (pos == static_cast<int>(h.items.size())) return;
    h.items[pos] = last;
    entries_[last].heap_pos = pos;
    sift_up(h, pos);
    sift_down(h, entries_[last].heap_pos);
}

// ---- representative 2-3 tree ----

int BiHeap::new_node() {
    if (!free_nodes_.empty()) {
        const int id = free_nodes_.back();
        free_nodes_.pop_back();
        nodes_[id] = Node{};
        return id;
    }
    nodes_.emplace_back();
    return static_cast<int>(nodes_.size()) - 1;
}

void BiHeap::free_node(int id) {
    nodes_[id] = Node{};
    free_nodes_.push_back(id);
}

void BiHeap::pull(int id) {
    ++touches_;
    Node& n = nodes_[id];
    if (n.leaf) {
        n.best_leaf = id;
        n.min_label = n.cls->label;
        return;
    }
    n.min_label = nodes_[n.child[0]].min_label;
    int best = nodes_[n.child[0]].best_leaf;
    Time best_cost = leaf_cost(best);
    for (int i = 1; i < n.nchild; ++i) {
        const int cand = nodes_[n.child[i]].best_leaf;
        const Time cc = leaf_cost(cand);
        if (cc > best_cost) {
            best = cand;
            best_cost = cc;
        }
    }
    n.best_leaf = best;
}

void BiHeap::pull_to_root(int id) {
    for (int v = id; v != -1; v = nodes_[v].parent) pull(v);
}

void BiHeap::set_child(int parent, int idx, int child) {
    nodes_[parent].child[idx] = child;
    nodes_[child].parent = parent;
}

int BiHeap::child_index(int parent, int child) const {
    const Node& p = nodes_[parent];
    for (int i = 0; i < p.nchild; ++i)
        if (p.child[i] == child) return i;
    throw std::logic_error("BiHeap tree: child not found under parent");
}

void BiHeap::insert_child(int parent, int idx, int child) {
    Node& p = nodes_[parent];
    for (int i = p.nchild; i > idx; --i) p.child[i] = p.child[i - 1];
    ++p.nchild;
    set_child(parent, idx, child);
}

void BiHeap::remove_child(int parent, int idx) {
    Node& p = nodes_[parent];
    for (int i = idx; i + 1 < p.nchild; ++i) p.child[i] = p.child[i + 1];
    --p.nchild;
    p.child[p.nchild] = -1;
}

int BiHeap::insert_leaf(std::int64_t label, ClassHeap* cls) {
    const int leaf = new_node();
    nodes_[leaf].leaf = true;
    nodes_[leaf].cls = cls;
    pull(leaf);

    if (root_ == -1) {
        root_ = leaf;
        return leaf;
    }
    if (nodes_[root_].leaf) {
        const int r = new_node();
        const bool before = label < nodes_[root_].min_label;
        insert_child(r, 0, before ? leaf : root_);
        insert_child(r, 1, before ? root_ : leaf);
        pull(r);
        root_ = r;
        return leaf;
    }

    int v = root_;
    while (true) {
        ++touches_;
        const Node& n = nodes_[v];
        if (nodes_[n.child[0]].leaf) break;
        int idx = 0;
        for (int i = 1; i < n.nchild; ++i)
            if (nodes_[n.child[i]].min_label <= label) idx = i;
        v = n.child[idx];
    }
    int pos = nodes_[v].nchild;
    for (int i = 0; i < nodes_[v].nchild; ++i) {
        if (label < nodes_[nodes_[v].child[i]].min_label) {
            pos = i;
            break;
        }
    }
    insert_child(v, pos, leaf);
    if (nodes_[v].nchild == 4)
        split(v);
    else
        pull_to_root(v);
    return leaf;
}

void BiHeap::split(int id) {
    const int u = new_node();
    insert_child(u, 0, nodes_[id].child[2]);
    insert_child(u, 1, nodes_[id].child[3]);
    remove_child(id, 3);
    remove_child(id, 2);
    pull(id);
    pull(u);

    if (id == root_) {
        const int r = new_node();
        insert_child(r, 0, id);
        insert_child(r, 1, u);
        pull(r);
        root_ = r;
        return;
    }
    const int p = nodes_[id].parent;
    insert_child(p, child_index(p, id) + 1, u);
    if (nodes_[p].nchild == 4)
        split(p);
    else
        pull_to_root(p);
}

void BiHeap::erase_leaf(int leaf) {
    int p = nodes_[leaf].parent;
    if (p == -1) {
        free_node(leaf);
        root_ = -1;
        return;
    }
    remove_child(p, child_index(p, leaf));
    free_node(leaf);

    while (true) {
        if (p == root_) {
            if (nodes_[p].nchild == 1) {
                const int c = nodes_[p].child[0];
                nodes_[c].parent = -1;
                free_node(p);
                root_ = c;
            } else {
                pull(p);
            }
            return;
        }
        if (nodes_[p].nchild >= 2) {
            pull_to_root(p);
            return;
        }
        // p is down to one child: borrow from a 3-child sibling or merge into a 2-child one.
        const int g = nodes_[p].parent;
        const int i = child_index(g, p);
        const bool has_left = i > 0;
        const int s = nodes_[g].child[has_left ? i - 1 : 1];
        if (nodes_[s].nchild == 3) {
            if (has_left) {
                const int moved = nodes_[s].child[2];
                remove_child(s, 2);
                insert_child(p, 0, moved);
            } else {
                const int moved = nodes_[s].child[0];
                remove_child(s, 0);
                insert_child(p, 1, moved);
            }
            pull(s);
            pull_to_root(p);
            return;
        }
        const int moved = nodes_[p].child[0];
        insert_child(s, has_left ? 2 : 0, moved);
        pull(s);
        remove_child(g, i);
        free_node(p);
        p = g;
    }
}

// ---- invariant checking ----

void BiHeap::check_invariants() const {
    auto fail = [](const std::string& what) { throw std::logic_error("BiHeap invariant: " + what); };

    std::size_t counted = 0;
    for (const auto& [label, cls] : classes_) {
        if (cls.items.empty()) fail("empty class " + std::to_string(label));
        if (cls.label != label) fail("class label mismatch");
        for (std::size_t pos = 0; pos < cls.items.size(); ++pos) {
            const std::uint32_t slot = cls.items[pos];
            const Entry& e = entries_[slot];
            if (e.heap_pos != static_cast<int>(pos)) fail("heap position out of sync");
            if (e.label != label) fail("entry stored under wrong class");
            const std::int64_t w = e.w0 + wbar_ - e.wbar0;
            if (floor_mod(w, capacity_) != floor_mod(label + wbar_, capacity_))
                fail("residue does not match class label");
            if (pos > 0 && slot_cost(cls.items[(pos - 1) / 2]) < slot_cost(slot))
                fail("heap order violated in class " + std::to_string(label));
        }
        counted += cls.items.size();
    }
    if (counted != size_) fail("size mismatch");
    if (capacity_ == 1) {
        if (classes_.size() > 1) fail("more than one class with capacity 1");
        return;
    }

    if (classes_.empty()) {
        if (root_ != -1) fail("tree not empty");
        return;
    }
    if (root_ == -1) fail("tree empty");
    if (nodes_[root_].parent != -1) fail("root has a parent");

    std::vector<int> leaves;
    int leaf_depth = -1;
    // Returns the argmax leaf of the subtree, leftmost on ties.
    std::function<int(int, int)> walk = [&](int v, int depth) -> int {
        const Node& n = nodes_[v];
        if (n.leaf) {
            if (leaf_depth == -1) leaf_depth = depth;
            if (depth != leaf_depth) fail("leaves at different depths");
            if (n.cls == nullptr || n.cls->leaf != v) fail("leaf not linked to its class");
            if (n.min_label != n.cls->label) fail("leaf label mismatch");
            if (n.best_leaf != v) fail("leaf summary mismatch");
            leaves.push_back(v);
            return v;
        }
        if (n.nchild < 2 || n.nchild > 3) fail("internal node with " + std::to_string(n.nchild) + " children");
        int best = -1;
        for (int i = 0; i < n.nchild; ++i) {
            if (nodes_[n.child[i]].parent != v) fail("parent pointer mismatch");
            const int b = walk(n.child[i], depth + 1);
            if (best == -1 || leaf_cost(b) > leaf_cost(best)) best = b;
        }
        if (n.min_label != nodes_[n.child[0]].min_label) fail("min label summary stale");
        if (n.best_leaf != best) fail("argmax summary stale");
        return best;
    };
    walk(root_, 0);

    if (leaves.size() != classes_.size()) fail("leaf count differs from class count");
    for (std::size_t i = 1; i < leaves.size(); ++i)
        if (nodes_[leaves[i - 1]].min_label >= nodes_[leaves[i]].min_label)
            fail("leaves not sorted by label");
}

}  // namespace kevac
