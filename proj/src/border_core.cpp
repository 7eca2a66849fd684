#include <borders/border_core.hpp>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace borders {

std::size_t first_shape_violation(std::span<const Value> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        const Value a = values[k];
        const Value pos = static_cast<Value>(k + 1);
        if (a < 0 || a >= pos) return k + 1;
        if (k > 0 && a > values[k - 1] + 1) return k + 1;
    }
    return 0;
}

BorderArray::BorderArray(std::vector<Value> values) : values_(std::move(values)) {
    if (const auto bad = first_shape_violation(values_); bad != 0) {
        throw BorderError(ErrorCode::InvalidBorderArray,
                          "not a border array shape at position " + std::to_string(bad));
    }
}

StrictBorderArray::StrictBorderArray(std::vector<Value> values) : values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] < -1 || values_[k] >= static_cast<Value>(k + 1)) {
            throw BorderError(ErrorCode::InvalidBorderArray,
                              "strict border value out of range at position " +
                                  std::to_string(k + 1));
        }
    }
}

BorderArray compute_pi(const Word& w) {
    const std::size_t n = w.size();
    std::vector<Value> pi(n, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && w[k] != w[i]) k = static_cast<std::size_t>(pi[k - 1]);
        if (w[k] == w[i]) ++k;
        pi[i] = static_cast<Value>(k);
    }
    return BorderArray(std::move(pi));
}

BorderArray naive_pi(const Word& w) {
    const std::size_t n = w.size();
    std::vector<Value> pi(n, 0);
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t b = len - 1; b > 0; --b) {
            if (std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(b),
                           w.begin() + static_cast<std::ptrdiff_t>(len - b))) {
                pi[len - 1] = static_cast<Value>(b);
                break;
            }
        }
    }
    return BorderArray(std::move(pi));
}

StrictBorderArray pi_to_pi_prime(const BorderArray& pi) {
    const std::size_t n = pi.size();
    if (n == 0) return {};
    // pp[0] is the sentinel; pp[i] for 1-based i.
    std::vector<Value> pp(n + 1, 0);
    pp[0] = -1;
    for (std::size_t i = 1; i < n; ++i) {
        const Value cur = pi[i - 1];
        if (pi[i] == cur + 1) {
            pp[i] = pp[static_cast<std::size_t>(cur)];
        } else {
            pp[i] = cur;
        }
    }
    pp[n] = pi[n - 1];
    return StrictBorderArray(std::vector<Value>(pp.begin() + 1, pp.end()));
}

BorderArray pi_prime_to_pi(const StrictBorderArray& pp) {
    const std::size_t n = pp.size();
    std::vector<Value> pi(n, 0);
    if (n == 0) return {};
    pi[n - 1] = pp[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        pi[k] = std::max(pp[k], pi[k + 1] - 1);
    }
    return BorderArray(std::move(pi));
}

StrictBorderArray naive_pi_prime(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return {};
    std::vector<Value> pp(n, -1);
    for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t b = len; b-- > 0;) {
            const bool border = std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(b),
                                           w.begin() + static_cast<std::ptrdiff_t>(len - b));
            if (border && w[b] != w[len]) {
                pp[len - 1] = static_cast<Value>(b);
                break;
            }
        }
    }
    pp[n - 1] = naive_pi(w)[n - 1];
    return StrictBorderArray(std::move(pp));
}

std::vector<Value> strict_fathers(const StrictBorderArray& pp) {
    std::vector<Value> fp(pp.size() + 1, 0);
    for (std::size_t i = 2; i <= pp.size(); ++i) fp[i] = pp[i - 2] + 1;
    return fp;
}

std::vector<std::size_t> strict_depths(const StrictBorderArray& pp) {
    const auto fp = strict_fathers(pp);
    std::vector<std::size_t> depth(fp.size(), 0);
    for (std::size_t i = 1; i < fp.size(); ++i) {
        depth[i] = fp[i] == 0 ? 1 : depth[static_cast<std::size_t>(fp[i])] + 1;
    }
    return depth;
}

std::size_t halving_violations(const StrictBorderArray& pp) {
    const auto fp = strict_fathers(pp);
    std::size_t bad = 0;
    for (std::size_t i = 1; i < fp.size(); ++i) {
        const Value a1 = fp[i];
        if (a1 == 0) continue;
        const Value a2 = fp[static_cast<std::size_t>(a1)];
        if (a2 == 0) continue;
        const Value a3 = fp[static_cast<std::size_t>(a2)];
        if (a3 == 0) continue;
        if (!(2 * a3 < a1)) ++bad;
    }
    return bad;
}

std::size_t alphabet_size(const Word& w) {
    return std::unordered_set<Symbol>(w.begin(), w.end()).size();
}

bool is_canonical(const Word& w) {
    Symbol next = 1;
    for (const Symbol s : w) {
        if (s > next || s == 0) return false;
        if (s == next) ++next;
    }
    return true;
}

Word canonicalize(const Word& w) {
    std::unordered_map<Symbol, Symbol> rename;
    Word out;
    out.reserve(w.size());
    for (const Symbol s : w) {
        auto [it, fresh] = rename.try_emplace(s, static_cast<Symbol>(rename.size() + 1));
        out.push_back(it->second);
    }
    return out;
}

Word encode_text(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (const char c : text) {
        if (c >= 'a' && c <= 'z') {
            w.push_back(static_cast<Symbol>(c - 'a' + 1));
        } else if (c >= 'A' && c <= 'Z') {
            w.push_back(static_cast<Symbol>(c - 'A' + 27));
        } else if (c >= '0' && c <= '9') {
            w.push_back(static_cast<Symbol>(c - '0' + 53));
        } else {
            throw BorderError(ErrorCode::Parse,
                              std::string("unsupported character '") + c + "' in word");
        }
    }
    return w;
}

std::string decode_text(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (const Symbol s : w) {
        if (s >= 1 && s <= 26) {
            out.push_back(static_cast<char>('a' + s - 1));
        } else if (s >= 27 && s <= 52) {
            out.push_back(static_cast<char>('A' + s - 27));
        } else if (s >= 53 && s <= 62) {
            out.push_back(static_cast<char>('0' + s - 53));
        } else {
            throw BorderError(ErrorCode::OutOfRange,
                              "symbol " + std::to_string(s) + " has no text form");
        }
    }
    return out;
}

}  // namespace borders
