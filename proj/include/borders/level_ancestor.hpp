#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace borders {

/// Incremental rooted tree with level-ancestor queries.
///
/// Skew-binary jump pointers: add_leaf is O(1) worst case, a query takes
/// O(log n) pointer steps. Nodes are numbered 1, 2, ... in insertion order;
/// node 1 is the root.
class LevelAncestorIndex {
public:
    LevelAncestorIndex() { clear(); }

    void clear();

    /// Adds the root (parent 0) or a leaf under an existing node. Returns its id.
    std::size_t add_leaf(std::size_t parent);

    std::size_t size() const noexcept { return parent_.size() - 1; }
    std::size_t depth(std::size_t v) const { return depth_.at(v); }
    std::size_t parent(std::size_t v) const { return parent_.at(v); }

    /// Ancestor of v that is `delta` levels above it. Throws OutOfRange when
    /// delta >= depth(v).
    std::size_t query(std::size_t v, std::size_t delta);

    /// Pointer steps taken by the last query and by all queries.
    std::uint64_t last_steps() const noexcept { return last_steps_; }
    std::uint64_t total_steps() const noexcept { return total_steps_; }

    /// Reference answer by walking parents one at a time.
    std::size_t naive_query(std::size_t v, std::size_t delta) const;

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> jump_;
    std::vector<std::uint32_t> depth_;
    std::uint64_t last_steps_ = 0;
    std::uint64_t total_steps_ = 0;
};

}  // namespace borders
