#pragma once

#include <borders/types.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace borders {

/// Online suffix tree (Ukkonen) over an integer stream, built to answer
///
///     is S[p+l..m] a prefix of S[p..m] ?
///
/// with m the current length. Positions are 1-based. A locus is a point
/// (node, pos, k): the string of node u followed by S[pos..pos+k-1].
/// Points obtained from `locus` keep pos = p + depth(u) for their suffix p,
/// which is what allows `extend` to follow an append with k += 1.
class SuffixIndex {
public:
    struct Point {
        std::uint32_t node = 0;
        std::size_t pos = 0;  // 1-based
        std::size_t k = 0;
    };

    SuffixIndex();

    void append(Value symbol);

    std::size_t size() const noexcept { return text_.size(); }
    Value at(std::size_t pos) const { return text_.at(pos - 1); }

    /// Suffixes starting before this position occur once and end at a leaf;
    /// the others are implicit.
    std::size_t first_implicit() const noexcept { return text_.size() - remainder_ + 1; }

    /// Point spelling S[q..m], q in [1, m+1].
    Point locus(std::size_t q);

    /// Moves a locus of S[q..m-1] to S[q..m] after one append.
    Point extend(Point point);

    /// Locus of S[q+times..m] from a locus of S[q..m].
    Point hop(Point point, std::size_t times);

    /// Point `ell` symbols above `point`.
    Point walk_up(Point point, std::size_t ell);

    bool same(Point a, Point b);

    /// True iff S[p+ell..m] == S[p..m-ell]. Requires m == size().
    bool is_suffix_prefix_of_suffix(std::size_t p, std::size_t ell, std::size_t m);

    /// Same query with a locus of S[p..m] supplied by the caller.
    bool overlap_from(Point locus_p, std::size_t p, std::size_t ell);

    /// Steps spent walking towards the root, and on suffix-link hops with
    /// their re-descents.
    std::uint64_t walk_steps() const noexcept { return walk_steps_; }
    std::uint64_t hop_steps() const noexcept { return hop_steps_; }
    std::uint64_t last_walk_steps() const noexcept { return last_walk_; }

    std::size_t node_count() const noexcept { return nodes_.size(); }

    /// Structural self-check for tests: suffix links, parent links, depths.
    bool check_structure() const;

private:
    static constexpr std::size_t kOpen = static_cast<std::size_t>(-1);
    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    struct Node {
        std::size_t start = 0;  // 0-based
        std::size_t end = 0;    // exclusive, kOpen for leaves
        std::uint32_t parent = 0;
        std::uint32_t link = kNone;
        std::size_t depth = 0;  // string depth, internal nodes only
        std::map<Value, std::uint32_t> children;
    };

    bool is_leaf(std::uint32_t v) const { return nodes_[v].end == kOpen; }
    std::size_t edge_len(std::uint32_t v) const {
        const auto& n = nodes_[v];
        return (n.end == kOpen ? text_.size() : n.end) - n.start;
    }
    std::uint32_t new_node(std::size_t start, std::size_t end, std::uint32_t parent);
    void link_pending(std::uint32_t node);
    Point canonical(Point point, std::uint64_t& steps) const;

    std::vector<Value> text_;
    std::vector<Node> nodes_;
    std::uint32_t pending_link_ = kNone;
    std::uint32_t active_node_ = 0;
    std::size_t active_edge_ = 0;
    std::size_t active_length_ = 0;
    std::size_t remainder_ = 0;
    std::vector<std::uint32_t> leaf_of_;  // 0-based suffix start -> leaf
    std::uint64_t walk_steps_ = 0;
    std::uint64_t hop_steps_ = 0;
    std::uint64_t last_walk_ = 0;
};

}  // namespace borders
