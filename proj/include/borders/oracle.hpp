#pragma once

// Exhaustive ground truth over canonical (restricted-growth) words.
//
// Every word is equivalent under symbol renaming to exactly one canonical
// word, and all failure functions are invariant under renaming, so the
// canonical enumeration covers every word exactly once.

#include <borders/border_core.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace borders::oracle {

inline constexpr std::size_t kMaxPiLength = 14;
inline constexpr std::size_t kMaxPiPrimePrefix = 12;

using ArraySet = std::set<std::vector<Value>>;

/// Calls `visit` for every canonical word of length `n` using at most
/// `max_alpha` distinct symbols, in lexicographic order.
class CanonicalEnumeration {
public:
    CanonicalEnumeration(std::size_t length, std::size_t max_alpha)
        : length_(length), max_alpha_(max_alpha) {}

    void for_each(const std::function<void(const Word&)>& visit) const;
    std::uint64_t count() const;

private:
    std::size_t length_;
    std::size_t max_alpha_;
};

/// {pi_w : w canonical of length n}. Throws LengthTooLarge for n > 14.
ArraySet enumerate_valid_pi(std::size_t n);

/// Same enumeration, keeping the smallest alphabet that realizes each array.
std::map<std::vector<Value>, std::size_t> min_alphabet_table(std::size_t n);

/// Minimal number of distinct symbols over words with pi_w = a, or nullopt
/// when no word exists. Searches canonical words, abandoning a branch as soon
/// as its prefix disagrees with `a`.
std::optional<std::size_t> min_alphabet_bruteforce(std::span<const Value> a);

/// {pi'_w[1..k] : w canonical of length k+1}. Throws LengthTooLarge for k > 12.
ArraySet enumerate_pi_prime_prefix_witnesses(std::size_t k);

struct PrefixWitnesses {
    std::vector<Value> max_pi;  // pointwise max of pi_w[1..k+1] over witnesses
    std::size_t min_alphabet = 0;
    std::uint64_t count = 0;
};

/// Per pi' prefix of length k: pointwise-max pi and smallest witness alphabet.
std::map<std::vector<Value>, PrefixWitnesses> pi_prime_prefix_table(std::size_t k);

}  // namespace borders::oracle
