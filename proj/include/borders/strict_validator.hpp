#pragma once

#include <borders/online_validator.hpp>
#include <borders/suffix_index.hpp>
#include <borders/types.hpp>

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace borders {

struct StrictOptions {
    // Recompute every height and value query the slow way and throw
    // std::logic_error on disagreement.
    bool shadow_checks = false;
};

struct StrictStats {
    std::uint64_t total_ops = 0;
    std::uint64_t naive_steps = 0;      // direct symbol comparisons
    std::uint64_t walk_steps = 0;       // suffix tree steps towards the root
    std::uint64_t hop_steps = 0;        // suffix link hops and re-descents
    std::uint64_t height_queries = 0;
    std::uint64_t value_queries = 0;
    std::uint64_t commits = 0;
    std::uint64_t dominance_inserts = 0;
    std::uint64_t dominance_removals = 0;
};

/// Online strict border array validation.
///
/// Keeps the pointwise largest border array A[1..n+1] consistent with the
/// values read so far, as a committed prefix A[1..i-1] plus one slope
/// A[i+k] = A[i] + k. Every push re-establishes, for j in [i..n],
///
///     A'[j] < A[j]   and   A'[j] = A'[A[j]]   (with A'[0] = -1)
///
/// by lowering A[i] through its legal candidates, or commits the slope when
/// some A'[j] meets A[j].
class StrictValidator {
public:
    explicit StrictValidator(StrictOptions options = {});

    Verdict push(Value a_prime);

    std::size_t size() const noexcept { return stream_.size() - 1; }
    bool failed() const noexcept { return failed_; }

    /// Smallest alphabet over words whose strict border array starts with
    /// the values read so far.
    std::size_t alphabet() const;

    /// The maximal consistent border array, length size() + 1. Throws
    /// StateInvalid after a rejection.
    std::vector<Value> recovered_pi() const;

    /// Committed prefix length i - 1 and the current slope start value.
    std::size_t slope_start() const noexcept { return i_; }
    Value slope_base() const noexcept { return base_; }

    const StrictStats& stats() const noexcept { return stats_; }

private:
    Value slope_value(std::size_t j) const { return base_ + static_cast<Value>(j - i_); }
    Value at(std::size_t j) const { return stream_[j]; }
    bool equal_runs(std::size_t a, std::size_t b, std::size_t len);
    std::optional<std::size_t> height_query();
    bool value_query(std::size_t n);
    void commit(std::size_t j, std::size_t n);
    Verdict reject(std::size_t n);

    StrictOptions options_;
    std::vector<Value> stream_{-1};  // stream_[0] is the sentinel A'[0]
    SuffixIndex index_;              // covers A'[1..n-1] during a push
    SuffixIndex::Point locus_;       // A'[i..n-1] during a push
    OnlineValidator committed_;
    std::deque<std::size_t> dominance_;
    std::vector<Value> cands_{0};
    std::size_t cand_idx_ = 0;
    std::size_t i_ = 1;
    Value base_ = 0;
    // Slope start and base when the previous push finished.
    std::size_t prev_i_ = 1;
    Value prev_base_ = 0;
    bool failed_ = false;
    StrictStats stats_;
};

/// Validates g with g(i) = pi'[i-1] + 1. The stream carries g[2], g[3], ...
/// (g[1] is not transmitted); verdict positions use g's indexing.
class GValidator {
public:
    explicit GValidator(StrictOptions options = {}) : inner_(options) {}

    Verdict push(Value g);
    std::size_t size() const noexcept { return inner_.size(); }
    const StrictValidator& inner() const noexcept { return inner_; }

private:
    StrictValidator inner_;
};

}  // namespace borders
