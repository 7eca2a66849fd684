#include <borders/border_core.hpp>
#include <borders/generators.hpp>
#include <borders/online_validator.hpp>

#include <algorithm>
#include <bit>
#include <random>

namespace borders::gen {
namespace {

// Modulo reduction keeps streams identical across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool accepted(const std::vector<Value>& a) {
    OnlineValidator v;
    for (const Value x : a) {
        if (!v.push(x).valid) return false;
    }
    return true;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
    if (name == "unary") return Family::Unary;
    if (name == "fibonacci") return Family::Fibonacci;
    if (name == "thue_morse") return Family::ThueMorse;
    if (name == "random_word") return Family::RandomWord;
    if (name == "random_valid_pi") return Family::RandomValidPi;
    if (name == "lowerbound_pair") return Family::LowerBoundPair;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Unary: return "unary";
        case Family::Fibonacci: return "fibonacci";
        case Family::ThueMorse: return "thue_morse";
        case Family::RandomWord: return "random_word";
        case Family::RandomValidPi: return "random_valid_pi";
        case Family::LowerBoundPair: return "lowerbound_pair";
    }
    return "?";
}

Word fibonacci_word(std::size_t n) {
    // a -> ab, b -> a
    Word w{1};
    while (w.size() < n) {
        Word next;
        next.reserve(w.size() * 2);
        for (const Symbol s : w) {
            next.push_back(1);
            if (s == 1) next.push_back(2);
        }
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

Word thue_morse_word(std::size_t n) {
    Word w(n);
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = static_cast<Symbol>(std::popcount(static_cast<std::uint64_t>(k)) % 2 + 1);
    }
    return w;
}

Word random_word(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    if (sigma == 0) throw BorderError(ErrorCode::Usage, "alphabet size must be positive");
    std::mt19937_64 rng(seed);
    Word w(n);
    for (auto& s : w) s = static_cast<Symbol>(draw(rng, sigma) + 1);
    return w;
}

std::vector<Value> random_valid_pi(std::size_t n, std::uint64_t seed, double unary_bias) {
    std::mt19937_64 rng(seed);
    OnlineValidator v;
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto cand = v.next_candidates();
        const Value pick = unit(rng) < unary_bias ? cand.front() : cand[draw(rng, cand.size())];
        v.push(pick);
        out.push_back(pick);
    }
    return out;
}

std::vector<Value> family_pi(Family family, std::size_t n, std::uint64_t seed) {
    auto pi_of = [](const Word& w) {
        const auto pi = compute_pi(w);
        return std::vector<Value>(pi.values().begin(), pi.values().end());
    };
    switch (family) {
        case Family::Unary: return pi_of(Word(n, 1));
        case Family::Fibonacci: return pi_of(fibonacci_word(n));
        case Family::ThueMorse: return pi_of(thue_morse_word(n));
        case Family::RandomWord: return pi_of(random_word(n, 2, seed));
        case Family::RandomValidPi: return random_valid_pi(n, seed);
        case Family::LowerBoundPair: break;
    }
    throw BorderError(ErrorCode::Usage, "lowerbound_pair yields two arrays");
}

std::vector<Value> mutate(std::vector<Value> values, std::uint64_t seed) {
    if (values.size() < 2) return values;
    std::mt19937_64 rng(seed);
    const std::size_t k = 1 + draw(rng, values.size() - 1);
    const Value top = values[k - 1] + 1;
    Value next = static_cast<Value>(draw(rng, static_cast<std::size_t>(top)));
    if (next >= values[k]) ++next;  // differs from the current value
    values[k] = next;
    // Keep the tail shaped so that only the mutation itself can be at fault.
    for (std::size_t j = k + 1; j < values.size(); ++j) {
        values[j] = std::min(values[j], values[j - 1] + 1);
    }
    return values;
}

LowerBoundPair lowerbound_pair(std::size_t n, std::uint64_t seed) {
    if (n < 8) throw BorderError(ErrorCode::Usage, "lowerbound_pair needs n >= 8");
    const std::size_t h = n / 2;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto p1 = random_valid_pi(h, rng(), 0.5);
        auto p2 = random_valid_pi(h, rng(), 0.5);
        std::size_t i = 0;  // 1-based first difference
        for (std::size_t k = 0; k < h; ++k) {
            if (p1[k] != p2[k]) {
                i = k + 1;
                break;
            }
        }
        if (i == 0 || i > h - 2) continue;
        if (p1[i - 1] > p2[i - 1]) std::swap(p1, p2);
        const Value hook = p2[i - 1] + 1;
        auto extend = [&](std::vector<Value> a) {
            for (std::size_t v = 0; v <= i; ++v) a.push_back(static_cast<Value>(v));
            a.push_back(hook);
            a.resize(n, 0);
            return a;
        };
        LowerBoundPair pair{extend(p1), extend(p2), 0, i};
        const bool ok1 = accepted(pair.first);
        const bool ok2 = accepted(pair.second);
        if (ok1 == ok2) continue;
        pair.valid_index = ok1 ? 0 : 1;
        return pair;
    }
    throw BorderError(ErrorCode::StateInvalid, "could not build a lower bound pair");
}

}  // namespace borders::gen
