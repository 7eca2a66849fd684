#pragma once

// Failure functions of Morris-Pratt (border array, pi) and Knuth-Morris-Pratt
// (strict border array, pi'), computed from words and converted into each
// other without looking at the word.
//
// Storage is 0-based: values()[k] holds the entry for 1-based position k+1.

#include <borders/types.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace borders {

/// Returns the 1-based position of the first violation of
/// A[1]=0, 0 <= A[i] < i, A[i+1] <= A[i]+1, or 0 if none.
std::size_t first_shape_violation(std::span<const Value> values);

class BorderArray {
public:
    BorderArray() = default;

    /// Throws BorderError(InvalidBorderArray) when the local invariants fail.
    explicit BorderArray(std::vector<Value> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    Value operator[](std::size_t k) const { return values_[k]; }
    std::span<const Value> values() const noexcept { return values_; }

    friend bool operator==(const BorderArray&, const BorderArray&) = default;

private:
    std::vector<Value> values_;
};

class StrictBorderArray {
public:
    StrictBorderArray() = default;

    /// Checks only -1 <= A'[i] < i; whether a word exists is a separate question.
    explicit StrictBorderArray(std::vector<Value> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    Value operator[](std::size_t k) const { return values_[k]; }
    std::span<const Value> values() const noexcept { return values_; }

    friend bool operator==(const StrictBorderArray&, const StrictBorderArray&) = default;

private:
    std::vector<Value> values_;
};

BorderArray compute_pi(const Word& w);

/// Definitional oracle: tries every border length directly. Cubic.
BorderArray naive_pi(const Word& w);

StrictBorderArray pi_to_pi_prime(const BorderArray& pi);

/// Right-to-left inverse of pi_to_pi_prime. Performs no validation.
BorderArray pi_prime_to_pi(const StrictBorderArray& pp);

StrictBorderArray naive_pi_prime(const Word& w);

/// f'[i] = pi'[i-1] + 1 for i >= 2, with 0 meaning "no father" (index 0 and
/// position 1 are 0 too). Result is indexed by 1-based position.
std::vector<Value> strict_fathers(const StrictBorderArray& pp);

/// Depth of every position in the strict failure forest (roots have depth 1),
/// indexed by 1-based position; entry 0 is unused.
std::vector<std::size_t> strict_depths(const StrictBorderArray& pp);

/// Number of positions i whose third strict ancestor exists and is not below
/// half of the first one, i.e. violations of f'(f'(f'(i))) < f'(i) / 2.
std::size_t halving_violations(const StrictBorderArray& pp);

/// Number of distinct symbols in the word.
std::size_t alphabet_size(const Word& w);

/// True when symbols first appear in the order 1, 2, 3, ...
bool is_canonical(const Word& w);

/// Renames symbols into first-occurrence order.
Word canonicalize(const Word& w);

// Text codec: 'a' -> 1, 'b' -> 2, ... ; '0'..'9' and other printable ASCII
// characters keep distinct symbols above the letters.
Word encode_text(std::string_view text);
std::string decode_text(const Word& w);

}  // namespace borders
