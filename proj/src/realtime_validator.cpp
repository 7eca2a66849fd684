#include <borders/realtime_validator.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace borders {
namespace {

std::size_t words_for(std::uint64_t n_max) {
    const double levels = 3.0 * std::log2(static_cast<double>(std::max<std::uint64_t>(n_max, 2))) + 3.0;
    return static_cast<std::size_t>((static_cast<std::uint64_t>(std::ceil(levels)) + 1 + 63) / 64);
}

}  // namespace

RealtimeValidator::RealtimeValidator(RealtimeOptions options)
    : options_(options), words_(words_for(options.n_max)), bcand_(words_, 0) {}

void RealtimeValidator::set_bit(std::size_t p, std::size_t level) {
    bits(p)[level >> 6] |= std::uint64_t{1} << (level & 63);
}

void RealtimeValidator::clear_bit(std::size_t p, std::size_t level) {
    bits(p)[level >> 6] &= ~(std::uint64_t{1} << (level & 63));
}

bool RealtimeValidator::candidate_bit(std::size_t p, std::size_t level) const {
    if (p == 0 || p > values_.size() || level >= bit_width()) {
        throw BorderError(ErrorCode::OutOfRange, "candidate bit out of range");
    }
    return (bits(p)[level >> 6] >> (level & 63)) & 1U;
}

Verdict RealtimeValidator::finish(Verdict v, std::uint64_t ops) {
    last_ops_ = ops;
    ++stats_.pushes;
    stats_.max_ops = std::max(stats_.max_ops, ops);
    ++stats_.histogram[ops];
    stats_.max_la_steps = std::max(stats_.max_la_steps, last_la_);
    stats_.total_la_steps += last_la_;
    if (!v.valid) failed_ = true;
    return v;
}

Verdict RealtimeValidator::push(Value a) {
    if (failed_) throw BorderError(ErrorCode::PushAfterFailure, "push after rejection");
    const std::size_t i = values_.size() + 1;
    if (i > options_.n_max) throw BorderError(ErrorCode::LengthTooLarge, "input exceeds n_max");
    std::uint64_t ops = 1;
    last_la_ = 0;

    if (i == 1) {
        if (a != 0) return finish(Verdict::reject(1), ops);
        la_.add_leaf(0);
        values_.push_back(0);
        d_.push_back(1);
        dp_.push_back(1);
        fp_.push_back(0);
        letter_.push_back(1);
        alph_.push_back(1);
        bcand_.resize(2 * words_, 0);
        max_alph_ = max_dp_ = 1;
        return finish(Verdict::accept(1, 1, 1), ops);
    }

    const Value prev = values_.back();
    const Value f = prev + 1;
    if (a < 0 || a > f) return finish(Verdict::reject(i), ops);
    const auto fi = static_cast<std::size_t>(f);

    // pi'[i-1] is settled now that A[i] is known.
    strict_.push_back(a == f ? strict_[static_cast<std::size_t>(prev)] : prev);
    fp_.push_back(strict_[i - 1] + 1);
    la_.add_leaf(fi);
    d_.push_back(d_[fi] + 1);
    dp_.push_back(a == f ? dp_[fi] : dp_[fi] + 1);
    ops += 4;
    if (dp_[i] >= bit_width()) {
        throw BorderError(ErrorCode::CapacityViolation, "strict depth exceeds candidate bit width");
    }

    // Bcand[i] = (Bcand[f] minus the level of A[f]) plus the level of f.
    bcand_.resize((i + 1) * words_);
    std::copy_n(bits(fi), words_, bits(i));
    ops += words_;
    if (values_[fi - 1] != 0) clear_bit(i, dp_[static_cast<std::size_t>(values_[fi - 1])]);
    set_bit(i, dp_[fi]);
    ops += 2;

    values_.push_back(a);
    if (a != 0 && a != f) {
        const auto ai = static_cast<std::size_t>(a);
        ++ops;
        if (d_[ai] >= d_[i]) return finish(Verdict::reject(i), ops);
        const std::size_t j = la_.query(i, d_[i] - d_[ai] - 1);
        last_la_ = la_.last_steps();
        if (options_.check_level_ancestor && j != la_.naive_query(i, d_[i] - d_[ai] - 1)) {
            throw std::logic_error("level ancestor index disagrees with parent walk");
        }
        ops += 3;
        if (la_.parent(j) != ai || dp_[j] == dp_[ai]) return finish(Verdict::reject(i), ops);
        if (!candidate_bit(i, dp_[ai])) return finish(Verdict::reject(i), ops);
    }

    // Accepted: the prefix is a border array, so the structural bounds apply.
    const double bound = 3.0 * std::log2(static_cast<double>(i)) + 3.0;
    if (static_cast<double>(dp_[i]) > bound) throw std::logic_error("strict depth bound violated");
    const auto a1 = static_cast<std::size_t>(fp_[i]);
    if (a1 != 0) {
        const auto a2 = static_cast<std::size_t>(fp_[a1]);
        if (a2 != 0 && fp_[a2] != 0 && !(2 * static_cast<std::size_t>(fp_[a2]) < a1)) {
            throw std::logic_error("halving bound violated");
        }
    }
    max_dp_ = std::max<std::size_t>(max_dp_, dp_[i]);
    ops += 2;

    if (a == 0) {
        alph_.push_back(alph_[fi] + 1);
        letter_.push_back(alph_[i]);
        max_alph_ = std::max<std::size_t>(max_alph_, alph_[i]);
    } else {
        letter_.push_back(letter_[static_cast<std::size_t>(a)]);
        alph_.push_back(alph_[fi]);
    }
    ops += 2;
    return finish(Verdict::accept(i, max_alph_, letter_[i]), ops);
}

Word RealtimeValidator::witness() const {
    if (failed_) throw BorderError(ErrorCode::StateInvalid, "no witness for a rejected array");
    return Word(letter_.begin() + 1, letter_.end());
}

}  // namespace borders
