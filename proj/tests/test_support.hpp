#pragma once

#include <borders/border_core.hpp>

#include <functional>
#include <vector>

namespace borders::testing {

inline std::vector<Value> pi_of(const Word& w) {
    const auto pi = compute_pi(w);
    return {pi.values().begin(), pi.values().end()};
}

// Every array of length n with A[1]=0 and 0 <= A[i] <= A[i-1]+1.
inline void for_each_shaped(std::size_t n, const std::function<void(const std::vector<Value>&)>& f) {
    std::vector<Value> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == n) {
            f(cur);
            return;
        }
        const Value top = cur.empty() ? 0 : cur.back() + 1;
        for (Value a = 0; a <= top; ++a) {
            cur.push_back(a);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

// Pushes until the first rejection. Returns 0 when all values were accepted,
// else the rejected 1-based position.
template <class Validator>
std::size_t run_all(Validator& v, const std::vector<Value>& a) {
    for (const Value x : a) {
        const auto verdict = v.push(x);
        if (!verdict.valid) return verdict.position;
    }
    return 0;
}

}  // namespace borders::testing
