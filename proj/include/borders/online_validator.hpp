#pragma once

#include <borders/types.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace borders {

/// Online border array validation with explicit candidate sets.
///
/// Each position p keeps the non-zero values that would be legal for pi[p]
/// given A[1..p-1]. They obey
///
///     cand[p] = {f[p]} u (cand[f[p]] \ {A[f[p]]}),   f[p] = A[p-1] + 1,
///
/// for every p >= 2 whatever A[p] turns out to be. Letters are assigned
/// greedily, which yields a witness over the minimal alphabet.
class OnlineValidator {
public:
    OnlineValidator() = default;

    /// Feeds A[n+1]. Throws PushAfterFailure once a value was rejected.
    Verdict push(Value a);

    std::size_t size() const noexcept { return values_.size(); }
    bool failed() const noexcept { return failed_; }
    std::size_t max_alphabet() const noexcept { return max_alph_; }
    std::span<const Value> values() const noexcept { return values_; }

    /// Letters of a minimal-alphabet word whose border array is the accepted
    /// prefix. Throws StateInvalid after a rejection.
    Word witness() const;

    /// Stored non-zero candidates of 1-based position p, descending.
    std::span<const Value> candidates(std::size_t p) const;

    /// Legal values for the next position, descending; always ends with 0.
    std::vector<Value> next_candidates() const;

    /// Letter a fresh 0 at the next position would receive.
    Symbol fresh_letter_for_next() const;

    /// Primitive-operation count of the most recent push and overall.
    std::uint64_t last_push_ops() const noexcept { return last_ops_; }
    std::uint64_t total_ops() const noexcept { return total_ops_; }
    std::uint64_t max_push_ops() const noexcept { return max_ops_; }

    /// Logical footprint with every stored integer taking `word_bits`.
    std::uint64_t memory_bits(unsigned word_bits = 32) const;

private:
    struct Slice {
        std::size_t begin = 0;
        std::size_t len = 0;
    };

    std::vector<Value> values_;
    std::vector<Symbol> letter_;
    std::vector<std::uint32_t> alph_;
    std::vector<Slice> cand_;
    std::vector<Value> pool_;
    std::size_t max_alph_ = 0;
    bool failed_ = false;
    std::uint64_t last_ops_ = 0;
    std::uint64_t total_ops_ = 0;
    std::uint64_t max_ops_ = 0;
};

}  // namespace borders
