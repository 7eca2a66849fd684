#include <borders/level_ancestor.hpp>
#include <borders/types.hpp>

namespace borders {

void LevelAncestorIndex::clear() {
    // Slot 0 is a placeholder so node ids match array positions.
    parent_.assign(1, 0);
    jump_.assign(1, 0);
    depth_.assign(1, 0);
    last_steps_ = total_steps_ = 0;
}

std::size_t LevelAncestorIndex::add_leaf(std::size_t parent) {
    const auto id = static_cast<std::uint32_t>(parent_.size());
    if (parent == 0) {
        if (id != 1) throw BorderError(ErrorCode::StateInvalid, "tree already has a root");
        parent_.push_back(0);
        jump_.push_back(1);
        depth_.push_back(1);
        return id;
    }
    if (parent >= id) throw BorderError(ErrorCode::OutOfRange, "unknown parent node");
    const auto p = static_cast<std::uint32_t>(parent);
    const std::uint32_t j = jump_[p];
    const std::uint32_t jj = jump_[j];
    const bool merge = depth_[p] - depth_[j] == depth_[j] - depth_[jj] && j != p;
    parent_.push_back(p);
    jump_.push_back(merge ? jj : p);
    depth_.push_back(depth_[p] + 1);
    return id;
}

std::size_t LevelAncestorIndex::query(std::size_t v, std::size_t delta) {
    if (v == 0 || v >= parent_.size() || delta >= depth_[v]) {
        throw BorderError(ErrorCode::OutOfRange, "level ancestor out of range");
    }
    const std::uint32_t target = depth_[v] - static_cast<std::uint32_t>(delta);
    auto u = static_cast<std::uint32_t>(v);
    std::uint64_t steps = 0;
    while (depth_[u] > target) {
        u = depth_[jump_[u]] >= target ? jump_[u] : parent_[u];
        ++steps;
    }
    last_steps_ = steps;
    total_steps_ += steps;
    return u;
}

std::size_t LevelAncestorIndex::naive_query(std::size_t v, std::size_t delta) const {
    if (v == 0 || v >= parent_.size() || delta >= depth_[v]) {
        throw BorderError(ErrorCode::OutOfRange, "level ancestor out of range");
    }
    while (delta-- > 0) v = parent_[v];
    return v;
}

}  // namespace borders
