#pragma once

#include <borders/level_ancestor.hpp>
#include <borders/types.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace borders {

struct RealtimeOptions {
    std::uint64_t n_max = std::uint64_t{1} << 32;
    // Re-derive every level-ancestor answer by walking parents.
    bool check_level_ancestor = false;
};

struct DelayStats {
    std::uint64_t pushes = 0;
    std::uint64_t max_ops = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // ops -> pushes
    std::uint64_t max_la_steps = 0;
    std::uint64_t total_la_steps = 0;
};

/// Constant-delay online border array validation.
///
/// Each position keeps its depth d in the tree of f, its depth d' in the
/// tree of f', and a bit vector over d' levels marking which levels hold a
/// legal candidate. A non-trivial value a is accepted iff a is an ancestor
/// of position i, the node below a on that path starts a new d' level, and
/// the bit for d'[a] is set.
class RealtimeValidator {
public:
    explicit RealtimeValidator(RealtimeOptions options = {});

    Verdict push(Value a);

    std::size_t size() const noexcept { return values_.size(); }
    bool failed() const noexcept { return failed_; }
    std::size_t max_alphabet() const noexcept { return max_alph_; }
    std::span<const Value> values() const noexcept { return values_; }
    Word witness() const;

    /// 1-based accessors, mostly for tests.
    std::size_t depth(std::size_t p) const { return d_.at(p); }
    std::size_t strict_depth(std::size_t p) const { return dp_.at(p); }
    Value strict_father(std::size_t p) const { return fp_.at(p); }
    bool candidate_bit(std::size_t p, std::size_t level) const;

    std::size_t bit_width() const noexcept { return words_ * 64; }
    std::uint64_t last_push_ops() const noexcept { return last_ops_; }
    std::uint64_t last_push_la_steps() const noexcept { return last_la_; }
    const DelayStats& delay_stats() const noexcept { return stats_; }

    /// d' never exceeds 3 log2(i) + 3 and f' obeys the halving bound on
    /// every accepted prefix; both are checked on each push.
    std::size_t max_strict_depth() const noexcept { return max_dp_; }

private:
    std::uint64_t* bits(std::size_t p) { return bcand_.data() + p * words_; }
    const std::uint64_t* bits(std::size_t p) const { return bcand_.data() + p * words_; }
    void set_bit(std::size_t p, std::size_t level);
    void clear_bit(std::size_t p, std::size_t level);
    Verdict finish(Verdict v, std::uint64_t ops);

    RealtimeOptions options_;
    std::size_t words_;
    LevelAncestorIndex la_;
    // Index 0 is unused so that position p lives at index p.
    std::vector<Value> values_;
    std::vector<std::uint32_t> d_{0};
    std::vector<std::uint32_t> dp_{0};
    std::vector<Value> fp_{0};
    std::vector<Value> strict_{-1};  // pi' with sentinel at 0
    std::vector<Symbol> letter_{0};
    std::vector<std::uint32_t> alph_{0};
    std::vector<std::uint64_t> bcand_;
    std::size_t max_alph_ = 0;
    std::size_t max_dp_ = 0;
    bool failed_ = false;
    std::uint64_t last_ops_ = 0;
    std::uint64_t last_la_ = 0;
    DelayStats stats_;
};

}  // namespace borders
