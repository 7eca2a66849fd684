#include <borders/suffix_index.hpp>

namespace borders {

SuffixIndex::SuffixIndex() {
    nodes_.push_back(Node{0, 0, 0, 0, 0, {}});
}

std::uint32_t SuffixIndex::new_node(std::size_t start, std::size_t end, std::uint32_t parent) {
    nodes_.push_back(Node{start, end, parent, kNone, 0, {}});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void SuffixIndex::link_pending(std::uint32_t node) {
    if (pending_link_ != kNone && pending_link_ != 0) nodes_[pending_link_].link = node;
    pending_link_ = node;
}

void SuffixIndex::append(Value symbol) {
    text_.push_back(symbol);
    const std::size_t pos = text_.size() - 1;
    pending_link_ = kNone;
    ++remainder_;
    leaf_of_.resize(text_.size(), kNone);
    while (remainder_ > 0) {
        if (active_length_ == 0) active_edge_ = pos;
        auto& kids = nodes_[active_node_].children;
        const auto it = kids.find(text_[active_edge_]);
        if (it == kids.end()) {
            const auto leaf = new_node(pos, kOpen, active_node_);
            nodes_[active_node_].children.emplace(text_[active_edge_], leaf);
            leaf_of_[pos + 1 - remainder_] = leaf;
            link_pending(active_node_);
        } else {
            const std::uint32_t next = it->second;
            const std::size_t len = edge_len(next);
            if (active_length_ >= len) {
                active_edge_ += len;
                active_length_ -= len;
                active_node_ = next;
                continue;
            }
            if (text_[nodes_[next].start + active_length_] == symbol) {
                ++active_length_;
                link_pending(active_node_);
                break;
            }
            const auto split = new_node(nodes_[next].start, nodes_[next].start + active_length_, active_node_);
            nodes_[split].depth = nodes_[active_node_].depth + active_length_;
            nodes_[active_node_].children[text_[active_edge_]] = split;
            const auto leaf = new_node(pos, kOpen, split);
            nodes_[split].children.emplace(symbol, leaf);
            leaf_of_[pos + 1 - remainder_] = leaf;
            nodes_[next].start += active_length_;
            nodes_[next].parent = split;
            nodes_[split].children.emplace(text_[nodes_[next].start], next);
            link_pending(split);
        }
        --remainder_;
        if (active_node_ == 0 && active_length_ > 0) {
            --active_length_;
            active_edge_ = pos + 1 - remainder_;
        } else {
            const auto link = nodes_[active_node_].link;
            active_node_ = link == kNone ? 0 : link;
        }
    }
}

SuffixIndex::Point SuffixIndex::canonical(Point point, std::uint64_t& steps) const {
    while (point.k > 0) {
        const auto& kids = nodes_[point.node].children;
        const auto it = kids.find(text_[point.pos - 1]);
        if (it == kids.end()) throw BorderError(ErrorCode::StateInvalid, "locus left the tree");
        const std::uint32_t v = it->second;
        if (is_leaf(v)) break;
        const std::size_t len = edge_len(v);
        if (point.k < len) break;
        point.node = v;
        point.pos += len;
        point.k -= len;
        ++steps;
    }
    return point;
}

SuffixIndex::Point SuffixIndex::locus(std::size_t q) {
    const std::size_t m = text_.size();
    if (q == 0 || q > m + 1) throw BorderError(ErrorCode::OutOfRange, "suffix start out of range");
    if (q == m + 1) return Point{0, q, 0};
    const std::size_t first = first_implicit();
    if (q < first) {
        const auto parent = nodes_[leaf_of_[q - 1]].parent;
        const std::size_t depth = nodes_[parent].depth;
        return Point{parent, q + depth, m - q + 1 - depth};
    }
    Point active{active_node_, first + nodes_[active_node_].depth, active_length_};
    active = canonical(active, hop_steps_);
    return hop(active, q - first);
}

SuffixIndex::Point SuffixIndex::extend(Point point) {
    ++point.k;
    return canonical(point, hop_steps_);
}

SuffixIndex::Point SuffixIndex::hop(Point point, std::size_t times) {
    for (std::size_t t = 0; t < times; ++t) {
        if (point.node == 0) {
            if (point.k == 0) throw BorderError(ErrorCode::OutOfRange, "hop past the empty suffix");
            ++point.pos;
            --point.k;
        } else {
            point.node = nodes_[point.node].link;
        }
        ++hop_steps_;
        point = canonical(point, hop_steps_);
    }
    return point;
}

SuffixIndex::Point SuffixIndex::walk_up(Point point, std::size_t ell) {
    std::uint64_t steps = 0;
    while (ell > point.k) {
        if (point.node == 0) throw BorderError(ErrorCode::OutOfRange, "walk above the root");
        ell -= point.k;
        point.pos = nodes_[point.node].start + 1;
        point.k = edge_len(point.node);
        point.node = nodes_[point.node].parent;
        ++steps;
    }
    point.k -= ell;
    last_walk_ = steps + 1;
    walk_steps_ += last_walk_;
    return point;
}

bool SuffixIndex::same(Point a, Point b) {
    std::uint64_t scratch = 0;
    a = canonical(a, scratch);
    b = canonical(b, scratch);
    if (a.node != b.node || a.k != b.k) return false;
    return a.k == 0 || text_[a.pos - 1] == text_[b.pos - 1];
}

bool SuffixIndex::overlap_from(Point locus_p, std::size_t p, std::size_t ell) {
    const std::size_t m = text_.size();
    if (ell == 0 || p + ell > m) return true;
    // A suffix ending at a leaf occurs once, so it cannot also start at p.
    if (p + ell < first_implicit()) return false;
    return same(walk_up(locus_p, ell), hop(locus_p, ell));
}

bool SuffixIndex::is_suffix_prefix_of_suffix(std::size_t p, std::size_t ell, std::size_t m) {
    if (m != text_.size()) throw BorderError(ErrorCode::OutOfRange, "index does not end at m");
    if (p == 0 || p > m + 1) throw BorderError(ErrorCode::OutOfRange, "suffix start out of range");
    if (ell == 0 || p + ell > m) return true;
    if (p + ell < first_implicit()) return false;
    return overlap_from(locus(p), p, ell);
}

bool SuffixIndex::check_structure() const {
    for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
        const auto& n = nodes_[v];
        for (const auto& [c, child] : n.children) {
            if (nodes_[child].parent != v) return false;
            if (text_[nodes_[child].start] != c) return false;
            if (!is_leaf(child) && nodes_[child].depth != n.depth + edge_len(child)) return false;
        }
        if (v != 0 && !is_leaf(v)) {
            if (n.link == kNone || nodes_[n.link].depth + 1 != n.depth) return false;
        }
    }
    return nodes_[active_node_].depth + active_length_ == remainder_;
}

}  // namespace borders
