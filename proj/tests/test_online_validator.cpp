#include <borders/border_core.hpp>
#include <borders/online_validator.hpp>
#include <borders/oracle.hpp>

#include <doctest.h>

#include <functional>

using namespace borders;

namespace {
const std::vector<Value> kSamplePi{0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0};

std::vector<Value> pi_of(const Word& w) {
    const auto pi = compute_pi(w);
    return {pi.values().begin(), pi.values().end()};
}

// Returns 0 when everything is accepted, else the rejected position.
std::size_t run(OnlineValidator& v, const std::vector<Value>& a) {
    for (const Value x : a) {
        const auto verdict = v.push(x);
        if (!verdict.valid) return verdict.position;
    }
    return 0;
}

void shaped_arrays(std::size_t n, std::vector<Value>& cur,
                   const std::function<void(const std::vector<Value>&)>& f) {
    if (cur.size() == n) {
        f(cur);
        return;
    }
    const Value top = cur.empty() ? 0 : cur.back() + 1;
    for (Value a = 0; a <= top; ++a) {
        cur.push_back(a);
        shaped_arrays(n, cur, f);
        cur.pop_back();
    }
}
}  // namespace

TEST_CASE("first value") {
    OnlineValidator v;
    CHECK(v.size() == 0);
    const auto ok = v.push(0);
    CHECK(ok.valid);
    CHECK(ok.letter == 1);
    OnlineValidator w;
    const auto bad = w.push(1);
    CHECK_FALSE(bad.valid);
    CHECK(bad.position == 1);
    CHECK_THROWS_AS(w.push(0), BorderError);
    CHECK_THROWS_AS(w.witness(), BorderError);
}

TEST_CASE("reference sequences") {
    OnlineValidator sample;
    CHECK(run(sample, kSamplePi) == 0);
    CHECK(sample.max_alphabet() == 3);
    CHECK(pi_of(sample.witness()) == kSamplePi);
    CHECK(canonicalize(sample.witness()) == encode_text("aabaabaaabaac"));

    OnlineValidator bad;
    CHECK(run(bad, {0, 1, 1}) == 3);

    OnlineValidator zeros;
    CHECK(run(zeros, std::vector<Value>(7, 0)) == 0);
    CHECK(zeros.max_alphabet() == 2);

    OnlineValidator zero3;
    run(zero3, {0, 0, 0});
    CHECK(zero3.witness() == encode_text("abb"));

    OnlineValidator unary;
    run(unary, {0, 1, 2});
    CHECK(unary.witness() == encode_text("aaa"));
}

TEST_CASE("a zero does not wipe the candidates its children inherit") {
    // abaa: position 4 may point back to position 1 through position 2, which
    // itself had pi = 0.
    OnlineValidator v;
    CHECK(run(v, {0, 0, 1, 1}) == 0);
    CHECK(canonicalize(v.witness()) == encode_text("abaa"));
}

TEST_CASE("candidate sets and next candidates") {
    OnlineValidator v;
    run(v, {0, 1});
    // position 3: f = 2, cand[2] = {1} minus A[2] = 1
    CHECK(v.next_candidates() == std::vector<Value>{2, 0});
    run(v, {0});
    CHECK(v.candidates(3).size() == 1);
    CHECK(v.candidates(3)[0] == 2);
    CHECK_THROWS_AS(v.candidates(9), BorderError);
}

TEST_CASE("exactness against the oracle for every shaped array up to length 10") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto valid = oracle::enumerate_valid_pi(n);
        const auto alphabets = oracle::min_alphabet_table(n);
        std::vector<Value> cur;
        shaped_arrays(n, cur, [&](const std::vector<Value>& a) {
            OnlineValidator v;
            const auto rejected = run(v, a);
            REQUIRE((rejected == 0) == (valid.count(a) == 1));
            if (rejected == 0) {
                const auto w = v.witness();
                REQUIRE(pi_of(w) == a);
                REQUIRE(alphabet_size(w) == v.max_alphabet());
                REQUIRE(v.max_alphabet() == alphabets.at(a));
            } else {
                // rejected exactly at the first prefix that is not valid
                const std::vector<Value> ok(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rejected - 1));
                const std::vector<Value> bad(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rejected));
                if (!ok.empty()) REQUIRE(oracle::enumerate_valid_pi(ok.size()).count(ok) == 1);
                REQUIRE(oracle::enumerate_valid_pi(bad.size()).count(bad) == 0);
            }
        });
    }
}
