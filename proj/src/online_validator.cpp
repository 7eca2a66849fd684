#include <borders/online_validator.hpp>

#include <algorithm>
#include <bit>
#include <cassert>

namespace borders {

Verdict OnlineValidator::push(Value a) {
    if (failed_) throw BorderError(ErrorCode::PushAfterFailure, "push after rejection");
    const std::size_t p = values_.size() + 1;
    std::uint64_t ops = 1;

    auto finish = [&](Verdict v) {
        last_ops_ = ops;
        total_ops_ += ops;
        max_ops_ = std::max(max_ops_, ops);
        if (!v.valid) failed_ = true;
        return v;
    };

    if (p == 1) {
        if (a != 0) return finish(Verdict::reject(1));
        values_.push_back(0);
        letter_.push_back(1);
        alph_.push_back(1);
        cand_.push_back({pool_.size(), 0});
        max_alph_ = 1;
        return finish(Verdict::accept(1, 1, 1));
    }

    const Value f = values_.back() + 1;
    if (a < 0 || a > f) return finish(Verdict::reject(p));

    const auto fi = static_cast<std::size_t>(f);
    const Slice inherited = cand_[fi - 1];
    const Value removed = values_[fi - 1];
    const std::size_t begin = pool_.size();
    pool_.push_back(f);
    bool found = (a == f);
    for (std::size_t k = 0; k < inherited.len; ++k) {
        const Value c = pool_[inherited.begin + k];
        ++ops;
        if (c == removed) continue;
        pool_.push_back(c);
        found = found || c == a;
    }
    if (a != 0 && !found) {
        pool_.resize(begin);
        return finish(Verdict::reject(p));
    }
    assert(pool_.size() - begin <= static_cast<std::size_t>(std::bit_width(p)) + 2);

    cand_.push_back({begin, pool_.size() - begin});
    values_.push_back(a);
    Symbol letter;
    std::uint32_t alph;
    if (a == 0) {
        alph = alph_[fi - 1] + 1;
        letter = alph;
        max_alph_ = std::max<std::size_t>(max_alph_, alph);
    } else {
        letter = letter_[static_cast<std::size_t>(a) - 1];
        alph = alph_[fi - 1];
    }
    letter_.push_back(letter);
    alph_.push_back(alph);
    return finish(Verdict::accept(p, max_alph_, letter));
}

Word OnlineValidator::witness() const {
    if (failed_) throw BorderError(ErrorCode::StateInvalid, "no witness for a rejected array");
    return Word(letter_.begin(), letter_.end());
}

std::span<const Value> OnlineValidator::candidates(std::size_t p) const {
    if (p == 0 || p > cand_.size()) {
        throw BorderError(ErrorCode::OutOfRange, "candidate position out of range");
    }
    const Slice s = cand_[p - 1];
    return std::span<const Value>(pool_).subspan(s.begin, s.len);
}

std::vector<Value> OnlineValidator::next_candidates() const {
    if (values_.empty()) return {0};
    const Value f = values_.back() + 1;
    const auto fi = static_cast<std::size_t>(f);
    std::vector<Value> out{f};
    const Value removed = values_[fi - 1];
    for (const Value c : candidates(fi)) {
        if (c != removed) out.push_back(c);
    }
    out.push_back(0);
    return out;
}

Symbol OnlineValidator::fresh_letter_for_next() const {
    if (values_.empty()) return 1;
    const auto fi = static_cast<std::size_t>(values_.back() + 1);
    return alph_[fi - 1] + 1;
}

std::uint64_t OnlineValidator::memory_bits(unsigned word_bits) const {
    // A, letter, alph, candidate slice (offset + length) per position, plus
    // the candidate pool.
    return (5ULL * values_.size() + pool_.size()) * word_bits;
}

}  // namespace borders
