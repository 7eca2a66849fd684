#pragma once

#include <borders/types.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace borders::gen {

enum class Family { Unary, Fibonacci, ThueMorse, RandomWord, RandomValidPi, LowerBoundPair };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

Word fibonacci_word(std::size_t n);
Word thue_morse_word(std::size_t n);
Word random_word(std::size_t n, std::size_t sigma, std::uint64_t seed);

/// Valid border array built by drawing every value from the live candidate
/// set. With probability `unary_bias` the largest candidate is taken,
/// otherwise the draw is uniform.
std::vector<Value> random_valid_pi(std::size_t n, std::uint64_t seed, double unary_bias = 0.0);

/// Border array of the family member of length n. Word families go through
/// compute_pi. LowerBoundPair is not a single array and throws Usage.
std::vector<Value> family_pi(Family family, std::size_t n, std::uint64_t seed);

/// Copies `values` and replaces one entry after the first by another value
/// allowed by the local shape rules. Used to produce mostly invalid inputs.
std::vector<Value> mutate(std::vector<Value> values, std::uint64_t seed);

/// Two arrays of length n sharing everything after a prefix of length n/2,
/// exactly one of them valid.
struct LowerBoundPair {
    std::vector<Value> first;
    std::vector<Value> second;
    std::size_t valid_index = 0;  // 0 or 1
    std::size_t split = 0;        // 1-based position where the prefixes differ
};

LowerBoundPair lowerbound_pair(std::size_t n, std::uint64_t seed);

}  // namespace borders::gen
