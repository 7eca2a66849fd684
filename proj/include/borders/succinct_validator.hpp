#pragma once

#include <borders/types.hpp>

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <unordered_map>
#include <vector>

namespace borders {

struct SuccinctOptions {
    std::uint64_t n_max = std::uint64_t{1} << 32;
    // Copy ancestor lists in the background instead of at block creation.
    bool lazy_copy = false;
    // Slots copied per push in lazy mode.
    std::uint32_t copy_budget = 128;
    // Longest chain of unfinished blocks a read may follow.
    std::uint32_t max_chase = 16;
};

struct SuccinctMemory {
    std::uint64_t logical_bits = 0;    // records + used groups and blocks + scheduler
    std::uint64_t record_bits = 0;
    std::uint64_t block_bits = 0;
    std::uint64_t group_bits = 0;
    std::uint64_t scheduler_bits = 0;
    std::uint64_t allocated_bits = 0;  // with every touched group fully reserved
    std::uint64_t physical_bytes = 0;  // what this implementation actually holds
    std::uint64_t groups = 0;
    std::uint64_t blocks = 0;
};

struct SuccinctStats {
    std::uint64_t max_group_fill = 0;
    std::uint64_t max_chase = 0;
    std::uint64_t copied_slots = 0;
    std::uint64_t jobs_done = 0;
    std::uint64_t max_pending_jobs = 0;
    std::uint64_t max_push_ops = 0;
    std::uint64_t last_push_ops = 0;
    std::uint64_t total_ops = 0;
};

/// Real-time border array validation with O(n log log n) bits.
///
/// Per position only a few O(log log n)-bit fields are kept. Everything that
/// depends on f'[x] (the strict-failure ancestors of f'[x] and which of them
/// are legal candidates) lives in a block shared by all positions of the
/// same window with the same f' value. For f'[x] - 1 in [2^a, 2^(a+1)) the
/// window is the run of 2^a positions containing x - 1, and at most 48
/// distinct such values share one window.
///
/// Block layout for class a: 2(a+2) slots, two per bit length, slot
/// 2(len-1) + (depth & 1). A slot holds an ancestor value and a flag that
/// marks it as a legal candidate.
class SuccinctValidator {
public:
    static constexpr std::size_t kGroupCapacity = 48;

    explicit SuccinctValidator(SuccinctOptions options = {});

    Verdict push(Value a);

    std::size_t size() const noexcept { return records_.size(); }
    bool failed() const noexcept { return failed_; }
    std::size_t max_alphabet() const noexcept { return max_alph_; }
    Word witness() const;

    /// Checks that no scheduled copy has passed its deadline. Throws
    /// CopyDeadline otherwise. Safe to call at any time.
    void finish() const;

    SuccinctMemory memory() const;
    std::uint64_t memory_bits() const { return memory().logical_bits; }
    const SuccinctStats& stats() const noexcept { return stats_; }
    std::uint64_t pending_jobs() const noexcept { return pending_; }

private:
    static constexpr std::uint8_t kNoClass = 0xFF;
    static constexpr std::uint8_t kUnitClass = 0xFE;  // f' = 1
    static constexpr std::uint8_t kNoSlot = 0xFF;

    struct Record {
        std::uint8_t cls = kNoClass;  // class of f'[x]
        std::uint8_t slot = 0;        // block index inside the group
        std::uint8_t removed = kNoSlot;
        std::uint32_t letter = 0;
        std::uint32_t alph = 0;
    };

    struct Block {
        std::uint32_t value = 0;
        std::uint32_t depth = 0;   // depth of value in the strict-failure forest
        std::uint32_t offset = 0;  // first slot in pool_
        std::uint8_t cls = 0;
        std::uint8_t nslots = 0;
        std::uint8_t cursor = 0;   // slots below this are materialized
        bool complete = false;
        std::uint64_t deadline = 0;
    };

    struct Group {
        std::uint8_t count = 0;
        std::array<std::uint32_t, kGroupCapacity> blocks{};
    };

    struct Entry {
        std::uint32_t value = 0;
        bool flag = false;
    };

    static std::uint8_t class_of(std::uint64_t v);
    static std::uint8_t slot_of(std::uint64_t v, std::uint32_t depth);
    static std::uint64_t group_key(std::uint8_t cls, std::uint64_t window) {
        return (window << 8) | cls;
    }

    // Block holding f'[x] for position x, or kNone (f'[x] = 0) / kUnit.
    std::uint32_t block_of_position(std::size_t x) const;
    std::uint32_t find_or_create(std::uint64_t v, std::size_t x, std::uint64_t& ops);
    Entry read(std::uint32_t block, std::uint8_t slot, std::uint32_t chase = 0);
    std::uint32_t depth_of(std::uint32_t block) const;
    void copy_some(std::size_t x);
    Verdict finish_push(Verdict v, std::uint64_t ops);

    static constexpr std::uint32_t kNone = 0xFFFFFFFFu;
    static constexpr std::uint32_t kUnit = 0xFFFFFFFEu;

    SuccinctOptions options_;
    unsigned lg_;  // bits of n_max
    std::vector<Record> records_;
    std::vector<Block> blocks_;
    std::vector<std::uint64_t> pool_;  // slot: value | flag << 63
    std::deque<Group> groups_;
    std::unordered_map<std::uint64_t, std::uint32_t> group_index_;
    Value prev_ = 0;
    std::size_t max_alph_ = 0;
    bool failed_ = false;
    SuccinctStats stats_;

    // Lazy copying: per class a waiting list (current window) and a ready
    // list, with bit masks of non-empty lists and of lists due for a merge.
    std::vector<std::deque<std::uint32_t>> waiting_;
    std::vector<std::deque<std::uint32_t>> ready_;
    std::uint64_t waiting_mask_ = 0;
    std::uint64_t ready_mask_ = 0;
    std::uint64_t merge_mask_ = 0;
    std::uint64_t pending_ = 0;
};

/// Largest number of distinct values from [2^k, 2^(k+1)) in any run of 2^k
/// consecutive entries of a strict border array, over all k.
std::size_t window_distinct_check(std::span<const Value> strict);

}  // namespace borders
