#include <borders/oracle.hpp>

#include <algorithm>
#include <array>
#include <unordered_map>

namespace borders::oracle {
namespace {

constexpr std::size_t kMaxDepth = 16;

// Depth-first walk over canonical words carrying the border array along.
// `leaf` receives (word, pi, length, distinct symbols); `keep` may cut a
// branch after pi[depth-1] has been computed.
struct Walker {
    std::size_t length;
    std::size_t max_alpha;
    std::array<Symbol, kMaxDepth> w{};
    std::array<Value, kMaxDepth> pi{};

    template <class Keep, class Leaf>
    void run(std::size_t depth, Symbol max_sym, Keep&& keep, Leaf&& leaf) {
        if (depth == length) {
            leaf(w, pi, max_sym);
            return;
        }
        const Symbol top = static_cast<Symbol>(std::min<std::size_t>(max_sym + 1, max_alpha));
        for (Symbol s = 1; s <= top; ++s) {
            w[depth] = s;
            if (depth == 0) {
                pi[0] = 0;
            } else {
                auto k = static_cast<std::size_t>(pi[depth - 1]);
                while (k > 0 && w[k] != s) k = static_cast<std::size_t>(pi[k - 1]);
                if (w[k] == s) ++k;
                pi[depth] = static_cast<Value>(k);
            }
            if (!keep(depth)) continue;
            run(depth + 1, std::max(max_sym, s), keep, leaf);
        }
    }
};

// 4 bits per entry; callers bound lengths so entries stay below 16.
std::uint64_t pack(const Value* v, std::size_t n, Value offset) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < n; ++k) {
        key |= static_cast<std::uint64_t>(v[k] + offset) << (4 * k);
    }
    return key;
}

std::vector<Value> unpack(std::uint64_t key, std::size_t n, Value offset) {
    std::vector<Value> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = static_cast<Value>((key >> (4 * k)) & 0xF) - offset;
    }
    return out;
}

std::unordered_map<std::uint64_t, std::size_t> pi_alphabets(std::size_t n) {
    if (n > kMaxPiLength) {
        throw BorderError(ErrorCode::LengthTooLarge,
                          "exhaustive enumeration is capped at length " +
                              std::to_string(kMaxPiLength));
    }
    std::unordered_map<std::uint64_t, std::size_t> table;
    if (n == 0) {
        table.emplace(0, 0);
        return table;
    }
    Walker walker{n, n};
    walker.run(
        0, 0, [](std::size_t) { return true; },
        [&](const auto&, const auto& pi, Symbol max_sym) {
            const auto key = pack(pi.data(), n, 0);
            auto [it, fresh] = table.try_emplace(key, max_sym);
            if (!fresh) it->second = std::min<std::size_t>(it->second, max_sym);
        });
    return table;
}

}  // namespace

void CanonicalEnumeration::for_each(const std::function<void(const Word&)>& visit) const {
    if (length_ > kMaxDepth) {
        throw BorderError(ErrorCode::LengthTooLarge, "canonical enumeration capped at 16");
    }
    if (length_ == 0) {
        visit(Word{});
        return;
    }
    Walker walker{length_, max_alpha_};
    Word word(length_);
    walker.run(
        0, 0, [](std::size_t) { return true; },
        [&](const auto& w, const auto&, Symbol) {
            std::copy_n(w.begin(), length_, word.begin());
            visit(word);
        });
}

std::uint64_t CanonicalEnumeration::count() const {
    // Restricted-growth strings: dp over (position, distinct symbols so far).
    std::vector<std::uint64_t> ways(max_alpha_ + 2, 0);
    if (length_ == 0) return 1;
    if (max_alpha_ == 0) return 0;
    ways[1] = 1;
    for (std::size_t pos = 1; pos < length_; ++pos) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (std::size_t k = 1; k <= max_alpha_; ++k) {
            next[k] += ways[k] * k;
            if (k + 1 <= max_alpha_) next[k + 1] += ways[k];
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto v : ways) total += v;
    return total;
}

ArraySet enumerate_valid_pi(std::size_t n) {
    ArraySet out;
    for (const auto& [key, alpha] : pi_alphabets(n)) out.insert(unpack(key, n, 0));
    return out;
}

std::map<std::vector<Value>, std::size_t> min_alphabet_table(std::size_t n) {
    std::map<std::vector<Value>, std::size_t> out;
    for (const auto& [key, alpha] : pi_alphabets(n)) out.emplace(unpack(key, n, 0), alpha);
    return out;
}

std::optional<std::size_t> min_alphabet_bruteforce(std::span<const Value> a) {
    const std::size_t n = a.size();
    if (n > kMaxPiLength) {
        throw BorderError(ErrorCode::LengthTooLarge, "brute force alphabet search capped at 14");
    }
    if (n == 0) return 0;
    std::optional<std::size_t> best;
    Walker walker{n, n};
    walker.run(
        0, 0, [&](std::size_t depth) { return walker.pi[depth] == a[depth]; },
        [&](const auto&, const auto&, Symbol max_sym) {
            if (!best || max_sym < *best) best = max_sym;
        });
    return best;
}

ArraySet enumerate_pi_prime_prefix_witnesses(std::size_t k) {
    ArraySet out;
    for (auto& [prefix, info] : pi_prime_prefix_table(k)) out.insert(prefix);
    return out;
}

std::map<std::vector<Value>, PrefixWitnesses> pi_prime_prefix_table(std::size_t k) {
    if (k > kMaxPiPrimePrefix) {
        throw BorderError(ErrorCode::LengthTooLarge,
                          "pi' witness enumeration is capped at prefix length " +
                              std::to_string(kMaxPiPrimePrefix));
    }
    std::unordered_map<std::uint64_t, PrefixWitnesses> table;
    const std::size_t len = k + 1;
    Walker walker{len, len};
    std::array<Value, kMaxDepth> pp{};
    walker.run(
        0, 0, [](std::size_t) { return true; },
        [&](const auto&, const auto& pi, Symbol max_sym) {
            // pi'[i] for i = 1..k from pi[1..k+1], sentinel pi'[0] = -1.
            for (std::size_t i = 1; i <= k; ++i) {
                const Value cur = pi[i - 1];
                if (pi[i] == cur + 1) {
                    pp[i - 1] = cur == 0 ? -1 : pp[static_cast<std::size_t>(cur) - 1];
                } else {
                    pp[i - 1] = cur;
                }
            }
            const auto key = pack(pp.data(), k, 1);
            auto [it, fresh] = table.try_emplace(key);
            auto& info = it->second;
            if (fresh) {
                info.max_pi.assign(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(len));
                info.min_alphabet = max_sym;
            } else {
                for (std::size_t i = 0; i < len; ++i) info.max_pi[i] = std::max(info.max_pi[i], pi[i]);
                info.min_alphabet = std::min<std::size_t>(info.min_alphabet, max_sym);
            }
            ++info.count;
        });
    std::map<std::vector<Value>, PrefixWitnesses> out;
    for (auto& [key, info] : table) out.emplace(unpack(key, k, 1), std::move(info));
    return out;
}

}  // namespace borders::oracle
