#include "test_support.hpp"

#include <borders/generators.hpp>
#include <borders/online_validator.hpp>
#include <borders/succinct_validator.hpp>

#include <doctest.h>

using namespace borders;
using namespace borders::testing;

namespace {
const std::vector<Value> kSamplePi{0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0};

SuccinctOptions mode(bool lazy, std::uint64_t n_max = std::uint64_t{1} << 32) {
    SuccinctOptions o;
    o.lazy_copy = lazy;
    o.n_max = n_max;
    return o;
}

void same_verdicts(const std::vector<Value>& a, bool lazy) {
    OnlineValidator basic;
    SuccinctValidator sv(mode(lazy));
    for (const Value x : a) {
        const auto vb = basic.push(x);
        const auto vs = sv.push(x);
        REQUIRE(vb.valid == vs.valid);
        REQUIRE(vb.position == vs.position);
        if (!vb.valid) return;
        REQUIRE(vb.letter == vs.letter);
        REQUIRE(vb.alphabet == vs.alphabet);
    }
    REQUIRE_NOTHROW(sv.finish());
}
}  // namespace

TEST_CASE("small arrays") {
    for (const bool lazy : {false, true}) {
        SuccinctValidator sv(mode(lazy));
        CHECK(run_all(sv, kSamplePi) == 0);
        CHECK(sv.max_alphabet() == 3);
        CHECK(pi_of(sv.witness()) == kSamplePi);

        SuccinctValidator bad(mode(lazy));
        CHECK(run_all(bad, {0, 1, 1}) == 3);
        CHECK_THROWS_AS(bad.push(0), BorderError);
        CHECK_THROWS_AS(bad.witness(), BorderError);

        SuccinctValidator first(mode(lazy));
        CHECK(run_all(first, {1}) == 1);
    }
}

TEST_CASE("exhaustive agreement with the candidate-set validator") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for_each_shaped(n, [](const std::vector<Value>& a) {
            same_verdicts(a, false);
            same_verdicts(a, true);
        });
    }
}

TEST_CASE("structured and random inputs agree, lazy copies meet deadlines") {
    using gen::Family;
    for (const Family fam : {Family::Unary, Family::Fibonacci, Family::ThueMorse, Family::RandomWord,
                             Family::RandomValidPi}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto a = gen::family_pi(fam, 20000, seed);
            same_verdicts(a, false);
            same_verdicts(a, true);
            same_verdicts(gen::mutate(a, seed), true);
        }
    }
}

TEST_CASE("lazy mode keeps unfinished chains short") {
    SuccinctValidator sv(mode(true));
    const auto a = gen::family_pi(gen::Family::Fibonacci, 100000, 1);
    CHECK(run_all(sv, a) == 0);
    CHECK_NOTHROW(sv.finish());
    CHECK(sv.stats().max_chase <= 16);
    CHECK(sv.stats().max_group_fill <= SuccinctValidator::kGroupCapacity);
    CHECK(sv.stats().jobs_done > 0);
}

TEST_CASE("distinct strict values per window stay small") {
    using gen::Family;
    for (const Family fam : {Family::Unary, Family::Fibonacci, Family::ThueMorse, Family::RandomValidPi}) {
        const auto a = gen::family_pi(fam, 1 << 14, 7);
        const auto pp = pi_to_pi_prime(BorderArray(a));
        CHECK(window_distinct_check(pp.values()) <= SuccinctValidator::kGroupCapacity);
    }
    const std::vector<Value> tiny{-1, 0, 1, -1};
    CHECK(window_distinct_check(tiny) == 1);
    const std::vector<Value> none{-1, 0, 0, -1};
    CHECK(window_distinct_check(none) == 0);
}

TEST_CASE("length bound is enforced") {
    SuccinctValidator sv(mode(false, 3));
    CHECK(run_all(sv, {0, 1, 2}) == 0);
    CHECK_THROWS_AS(sv.push(3), BorderError);
}

TEST_CASE("logical memory is a fraction of the candidate-set layout") {
    const std::size_t n = 1 << 16;
    for (const auto fam : {gen::Family::Fibonacci, gen::Family::RandomValidPi, gen::Family::Unary}) {
        const auto a = gen::family_pi(fam, n, 5);
        OnlineValidator basic;
        SuccinctValidator sv(mode(false, n));
        run_all(basic, a);
        run_all(sv, a);
        const auto mem = sv.memory();
        MESSAGE(gen::family_name(fam) << ": succinct " << mem.logical_bits << " bits, basic "
                                      << basic.memory_bits(32) << " bits");
        CHECK(mem.logical_bits * 4 <= basic.memory_bits(32));
        CHECK(mem.logical_bits == mem.record_bits + mem.block_bits + mem.group_bits + mem.scheduler_bits);
    }
}
