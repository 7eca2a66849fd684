#include <borders/strict_validator.hpp>

#include <algorithm>
#include <stdexcept>

namespace borders {

StrictValidator::StrictValidator(StrictOptions options) : options_(options) {
    locus_ = SuffixIndex::Point{0, 1, 0};
}

Verdict StrictValidator::reject(std::size_t n) {
    failed_ = true;
    return Verdict::reject(n);
}

bool StrictValidator::equal_runs(std::size_t a, std::size_t b, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) {
        ++stats_.naive_steps;
        if (at(a + k) != at(b + k)) return false;
    }
    return true;
}

std::optional<std::size_t> StrictValidator::height_query() {
    ++stats_.height_queries;
    while (!dominance_.empty() && dominance_.front() < i_) {
        dominance_.pop_front();
        ++stats_.dominance_removals;
    }
    std::optional<std::size_t> fast;
    if (!dominance_.empty() && at(dominance_.front()) >= slope_value(dominance_.front())) {
        fast = dominance_.front();
    }
    if (options_.shadow_checks) {
        std::optional<std::size_t> slow;
        for (std::size_t j = i_; j <= size() && !slow; ++j) {
            if (at(j) >= slope_value(j)) slow = j;
        }
        // A reported equality must be the first hit. A strict violation at
        // the head is a genuine rejection even when an earlier, dominated
        // position also meets the slope.
        const bool agree = fast.has_value() == slow.has_value() &&
                           (!fast || at(*fast) > slope_value(*fast) || fast == slow);
        if (!agree) throw std::logic_error("height query disagrees with linear scan");
    }
    return fast;
}

bool StrictValidator::value_query(std::size_t n) {
    ++stats_.value_queries;
    bool answer = true;
    const auto b = static_cast<std::size_t>(base_);
    if (i_ > n) {
        answer = true;
    } else if (i_ == n) {
        ++stats_.naive_steps;
        answer = at(n) == at(b);
    } else {
        // A'[i..n-1] = A'[ref..] held when the previous push finished.
        const Value ref = prev_base_ + static_cast<Value>(i_ - prev_i_);
        if (ref < base_) throw std::logic_error("slope base above its previous value");
        const auto ell = static_cast<std::size_t>(ref - base_);
        if (ell >= n - i_) {
            answer = equal_runs(i_, b, n - i_ + 1);
        } else {
            ++stats_.naive_steps;
            answer = at(n) == at(b + n - i_) && (ell == 0 || (equal_runs(i_, b, ell) &&
                                                              index_.overlap_from(locus_, i_, ell)));
        }
    }
    if (options_.shadow_checks) {
        bool slow = true;
        for (std::size_t j = i_; j <= n && slow; ++j) slow = at(j) == at(b + j - i_);
        if (slow != answer) throw std::logic_error("value query disagrees with direct comparison");
    }
    return answer;
}

void StrictValidator::commit(std::size_t j, std::size_t n) {
    ++stats_.commits;
    for (std::size_t k = i_; k <= j; ++k) {
        if (!committed_.push(slope_value(k)).valid) {
            throw std::logic_error("committed slope rejected as a border array");
        }
    }
    if (j < n) locus_ = index_.hop(locus_, j + 1 - i_);
    i_ = j + 1;
    cands_ = committed_.next_candidates();
    cand_idx_ = 1;  // the slope ended at j, so f[i] itself is excluded
    base_ = cands_[cand_idx_];
}

Verdict StrictValidator::push(Value a_prime) {
    if (failed_) throw BorderError(ErrorCode::PushAfterFailure, "push after rejection");
    const std::size_t n = size() + 1;
    if (a_prime < -1 || a_prime >= static_cast<Value>(n)) return reject(n);
    stream_.push_back(a_prime);

    while (!dominance_.empty()) {
        const std::size_t t = dominance_.back();
        if (a_prime - at(t) <= static_cast<Value>(n - t)) break;
        dominance_.pop_back();
        ++stats_.dominance_removals;
    }
    dominance_.push_back(n);
    ++stats_.dominance_inserts;

    while (true) {
        if (const auto j = height_query()) {
            if (at(*j) > slope_value(*j)) return reject(n);
            if (!equal_runs(i_, static_cast<std::size_t>(base_), *j - i_)) return reject(n);
            commit(*j, n);
            continue;
        }
        if (value_query(n)) break;
        if (base_ == 0) return reject(n);
        base_ = cands_[++cand_idx_];
    }

    index_.append(a_prime);
    locus_ = i_ <= n ? index_.extend(locus_) : SuffixIndex::Point{0, n + 1, 0};
    prev_i_ = i_;
    prev_base_ = base_;
    stats_.walk_steps = index_.walk_steps();
    stats_.hop_steps = index_.hop_steps();
    stats_.total_ops = stats_.height_queries + stats_.value_queries + stats_.naive_steps +
                       stats_.walk_steps + stats_.hop_steps + stats_.dominance_inserts +
                       stats_.dominance_removals + stats_.commits;
    return Verdict::accept(n, alphabet(), 0);
}

std::size_t StrictValidator::alphabet() const {
    std::size_t alph = committed_.max_alphabet();
    if (base_ == 0) alph = std::max<std::size_t>(alph, committed_.fresh_letter_for_next());
    return alph;
}

std::vector<Value> StrictValidator::recovered_pi() const {
    if (failed_) throw BorderError(ErrorCode::StateInvalid, "no border array for a rejected stream");
    const auto fixed = committed_.values();
    std::vector<Value> out(fixed.begin(), fixed.end());
    for (std::size_t j = i_; j <= size() + 1; ++j) out.push_back(slope_value(j));
    return out;
}

Verdict GValidator::push(Value g) {
    auto v = inner_.push(g - 1);
    ++v.position;
    return v;
}

}  // namespace borders
