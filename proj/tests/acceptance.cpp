// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <borders/border_core.hpp>
#include <borders/generators.hpp>
#include <borders/online_validator.hpp>
#include <borders/oracle.hpp>
#include <borders/realtime_validator.hpp>
#include <borders/strict_validator.hpp>
#include <borders/succinct_validator.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace borders;

namespace {

// Regression bounds measured once on the reference families.
constexpr std::uint64_t kRealtimeDelayBound = 17;
constexpr double kSlopeOpsFactor = 1.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

std::vector<Value> to_vec(std::span<const Value> s) { return {s.begin(), s.end()}; }

std::string show(const std::vector<Value>& v) {
    std::string s;
    for (const Value x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

void for_each_shaped(std::size_t n, const std::function<void(const std::vector<Value>&)>& f) {
    std::vector<Value> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == n) return f(cur);
        const Value top = cur.empty() ? 0 : cur.back() + 1;
        for (Value a = 0; a <= top; ++a) {
            cur.push_back(a);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

void oracle_equality(Outcome& o) {
    std::uint64_t words = 0;
    for (std::size_t len = 0; len <= 12; ++len) {
        oracle::CanonicalEnumeration(len, 4).for_each([&](const Word& w) {
            ++words;
            const auto pi = compute_pi(w);
            if (to_vec(pi.values()) != to_vec(naive_pi(w).values())) o.fail("pi of length " + std::to_string(len));
            if (to_vec(pi_to_pi_prime(pi).values()) != to_vec(naive_pi_prime(w).values())) {
                o.fail("pi' of length " + std::to_string(len));
            }
        });
    }
    o.detail << words << " canonical words";
}

void bijection(Outcome& o) {
    oracle::ArraySet arrays;
    for (std::size_t len = 0; len <= 12; ++len) {
        oracle::CanonicalEnumeration(len, 4).for_each([&](const Word& w) { arrays.insert(to_vec(compute_pi(w).values())); });
    }
    for (const auto& a : arrays) {
        const auto back = pi_prime_to_pi(pi_to_pi_prime(BorderArray(a)));
        if (to_vec(back.values()) != a) o.fail(show(a));
    }
    o.detail << arrays.size() << " distinct arrays";
}

void pi_exactness(Outcome& o) {
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    std::vector<oracle::ArraySet> valid{{}};
    for (std::size_t n = 1; n <= 10; ++n) valid.push_back(oracle::enumerate_valid_pi(n));

    for (std::size_t n = 1; n <= 10; ++n) {
        for_each_shaped(n, [&](const std::vector<Value>& a) {
            OnlineValidator basic;
            RealtimeValidator rt;
            SuccinctValidator eager;
            SuccinctOptions lazy_opts;
            lazy_opts.lazy_copy = true;
            SuccinctValidator lazy(lazy_opts);
            std::size_t position = 0;
            for (const Value x : a) {
                const Verdict v[4] = {basic.push(x), rt.push(x), eager.push(x), lazy.push(x)};
                for (const auto& other : v) {
                    if (other.valid != v[0].valid || other.position != v[0].position) {
                        o.fail("engines disagree on " + show(a));
                    }
                }
                if (!v[0].valid) {
                    position = v[0].position;
                    break;
                }
            }
            const bool in_oracle = valid[n].contains(a);
            if (in_oracle != (position == 0)) o.fail("verdict differs from the oracle on " + show(a));
            if (position != 0) {
                ++rejected;
                // The reported position is the shortest prefix outside the oracle.
                const std::vector<Value> prefix(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(position));
                const std::vector<Value> shorter(prefix.begin(), prefix.end() - 1);
                if (valid[position].contains(prefix) || !valid[position - 1].contains(shorter)) {
                    o.fail("wrong first invalid position on " + show(a));
                }
                return;
            }
            ++accepted;
            const auto best = oracle::min_alphabet_bruteforce(a);
            for (const Word& w : {basic.witness(), rt.witness(), eager.witness(), lazy.witness()}) {
                if (to_vec(compute_pi(w).values()) != a) o.fail("witness of " + show(a));
                if (alphabet_size(w) != *best) o.fail("alphabet of " + show(a));
            }
            lazy.finish();
        });
    }
    o.detail << accepted << " accepted, " << rejected << " rejected, 4 engine configurations";
}

void pi_prime_exactness(Outcome& o) {
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    for (std::size_t k = 1; k <= 9; ++k) {
        const auto table = oracle::pi_prime_prefix_table(k);
        std::uint64_t accepted_k = 0;
        std::vector<Value> stream;
        std::function<void()> rec = [&] {
            for (Value a = -1; a <= static_cast<Value>(k) - 1; ++a) {
                stream.push_back(a);
                StrictValidator sv;
                bool ok = true;
                for (const Value x : stream) ok = sv.push(x).valid;
                const bool full = stream.size() == k;
                if (full) {
                    const auto it = table.find(stream);
                    if (ok != (it != table.end())) o.fail("verdict differs from the oracle on " + show(stream));
                    if (ok && it != table.end()) {
                        ++accepted_k;
                        const auto pi = sv.recovered_pi();
                        for (std::size_t j = 0; j < pi.size(); ++j) {
                            if (pi[j] < it->second.max_pi[j]) o.fail("recovered pi not maximal on " + show(stream));
                        }
                        const auto back = pi_to_pi_prime(BorderArray(pi));
                        if (!std::equal(stream.begin(), stream.end(), back.values().begin())) {
                            o.fail("round trip of " + show(stream));
                        }
                    }
                    ok ? ++accepted : ++rejected;
                } else if (ok) {
                    rec();
                } else {
                    ++rejected;
                }
                stream.pop_back();
            }
        };
        rec();
        if (accepted_k != table.size()) o.fail("accepted count at k=" + std::to_string(k));
    }
    o.detail << accepted << " accepted full streams, " << rejected << " rejected streams";
}

std::vector<std::pair<std::string, std::vector<Value>>> large_corpora() {
    return {{"random_valid_pi", gen::family_pi(gen::Family::RandomValidPi, 100000, 1)},
            {"fibonacci", gen::family_pi(gen::Family::Fibonacci, 100000, 1)},
            {"random_word", gen::family_pi(gen::Family::RandomWord, 100000, 1)},
            {"thue_morse", gen::family_pi(gen::Family::ThueMorse, 100000, 1)}};
}

void halving(Outcome& o) {
    std::uint64_t arrays = 0;
    std::uint64_t positions = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& a : oracle::enumerate_valid_pi(n)) {
            ++arrays;
            positions += n;
            if (halving_violations(pi_to_pi_prime(BorderArray(a))) != 0) o.fail(show(a));
        }
    }
    for (const auto& [name, a] : large_corpora()) {
        positions += a.size();
        if (const auto bad = halving_violations(pi_to_pi_prime(BorderArray(a))); bad != 0) {
            o.fail(name + " has " + std::to_string(bad) + " violations");
        }
    }
    o.detail << arrays << " exhaustive arrays and 4 corpora of 1e5, " << positions << " positions";
}

void window(Outcome& o) {
    for (const auto& [name, a] : large_corpora()) {
        if (name == "random_valid_pi") continue;
        const auto pp = pi_to_pi_prime(BorderArray(a));
        const std::size_t worst = window_distinct_check(pp.values());
        o.detail << name << " max " << worst << "; ";
        if (worst > SuccinctValidator::kGroupCapacity) o.fail(name);
    }
}

void constant_delay(Outcome& o) {
    std::uint64_t overall = 0;
    std::uint64_t la = 0;
    for (const auto fam : {gen::Family::Unary, gen::Family::Fibonacci, gen::Family::RandomValidPi}) {
        o.detail << gen::family_name(fam) << ":";
        for (const std::size_t n : {1000, 10000, 100000, 1000000}) {
            RealtimeValidator rt;
            for (const Value x : gen::family_pi(fam, n, 1)) {
                if (!rt.push(x).valid) o.fail("rejected generated input");
            }
            const auto& s = rt.delay_stats();
            o.detail << ' ' << s.max_ops;
            overall = std::max(overall, s.max_ops);
            la = std::max(la, s.max_la_steps);
            if (s.max_ops > kRealtimeDelayBound) o.fail(std::string(gen::family_name(fam)) + " n=" + std::to_string(n));
        }
        o.detail << "; ";
    }
    o.detail << "max " << overall << " <= C=" << kRealtimeDelayBound << ", level-ancestor steps max " << la;
}

double per_n_loglog(std::uint64_t bits, std::size_t n) {
    return static_cast<double>(bits) / (static_cast<double>(n) * std::log2(std::log2(static_cast<double>(n))));
}

void memory_scaling(Outcome& o) {
    double ratio[2] = {0, 0};
    int idx = 0;
    for (const std::size_t n : {100000, 1000000}) {
        const auto a = gen::family_pi(gen::Family::RandomValidPi, n, 1);
        OnlineValidator basic;
        SuccinctOptions eager_opts;
        eager_opts.n_max = n;
        SuccinctValidator eager(eager_opts);
        SuccinctOptions lazy_opts = eager_opts;
        lazy_opts.lazy_copy = true;
        SuccinctValidator lazy(lazy_opts);
        for (const Value x : a) {
            basic.push(x);
            eager.push(x);
            lazy.push(x);
        }
        lazy.finish();
        const std::uint64_t bits = eager.memory_bits();
        ratio[idx++] = per_n_loglog(bits, n);
        o.detail << "n=" << n << " succinct " << bits << " bits (" << per_n_loglog(bits, n)
                 << " per n log log n), basic " << basic.memory_bits(32) << "; ";
        if (bits * 4 > basic.memory_bits(32)) o.fail("succinct above a quarter of basic at n=" + std::to_string(n));
        if (lazy.memory().logical_bits < bits) o.fail("lazy accounting");
    }
    const double spread = std::abs(ratio[0] - ratio[1]) / std::min(ratio[0], ratio[1]);
    o.detail << "spread " << spread * 100 << "%";
    if (spread >= 0.25) o.fail("ratio spread");
}

void slope_time(Outcome& o) {
    double worst = 0;
    for (const std::size_t n : {10000, 100000}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto pp = pi_to_pi_prime(BorderArray(gen::family_pi(gen::Family::RandomValidPi, n, seed)));
            StrictValidator sv;
            for (const Value x : pp.values()) {
                if (!sv.push(x).valid) o.fail("rejected generated stream");
            }
            const auto& s = sv.stats();
            const double ratio = static_cast<double>(s.total_ops) / (static_cast<double>(n) * std::log2(static_cast<double>(n)));
            worst = std::max(worst, ratio);
            if (ratio > kSlopeOpsFactor) o.fail("ops at n=" + std::to_string(n));
            if (s.dominance_inserts + s.dominance_removals > 2 * n) o.fail("dominance list at n=" + std::to_string(n));
        }
    }
    o.detail << "max total_ops/(n log2 n) " << worst << " <= c=" << kSlopeOpsFactor << ", dominance updates <= 2n";
}

void lower_bound(Outcome& o) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const std::size_t n = 8 + (seed * 37) % 193;
        const auto pair = gen::lowerbound_pair(n, seed);
        const std::vector<Value>* members[2] = {&pair.first, &pair.second};
        for (std::size_t m = 0; m < 2; ++m) {
            const bool expect = m == pair.valid_index;
            OnlineValidator basic;
            RealtimeValidator rt;
            SuccinctValidator sv;
            bool ok[3] = {true, true, true};
            for (const Value x : *members[m]) {
                if (ok[0]) ok[0] = basic.push(x).valid;
                if (ok[1]) ok[1] = rt.push(x).valid;
                if (ok[2]) ok[2] = sv.push(x).valid;
            }
            for (const bool b : ok) {
                if (b != expect) o.fail("seed " + std::to_string(seed));
            }
        }
    }
    o.detail << "100 pairs, n in [8, 200]";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria{
        {"oracle equality", oracle_equality},
        {"pi/pi' bijection", bijection},
        {"pi validator exactness", pi_exactness},
        {"pi' validator exactness", pi_prime_exactness},
        {"halving lemma", halving},
        {"window lemma", window},
        {"realtime constant delay", constant_delay},
        {"succinct memory scaling", memory_scaling},
        {"slope engine time bound", slope_time},
        {"lower-bound pairs", lower_bound},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first
                  << "): " << o.detail.str() << " [" << secs << " s]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
