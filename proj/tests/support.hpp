#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "frselect/core.hpp"

namespace testing {

using frselect::Index;

/// Element that counts its own three-way comparisons. The library counts
/// through its hook; the block verifiers use < and ==, which are not counted
/// here, so the two tallies must agree exactly.
struct Counted {
    int value = 0;
    static inline std::uint64_t spaceship_calls = 0;

    friend std::strong_ordering operator<=>(const Counted& a, const Counted& b) {
        ++spaceship_calls;
        return a.value <=> b.value;
    }
    friend bool operator==(const Counted& a, const Counted& b) { return a.value == b.value; }
    friend bool operator<(const Counted& a, const Counted& b) { return a.value < b.value; }
    friend bool operator>(const Counted& a, const Counted& b) { return a.value > b.value; }
    friend bool operator<=(const Counted& a, const Counted& b) { return a.value <= b.value; }
    friend bool operator>=(const Counted& a, const Counted& b) { return a.value >= b.value; }
};

inline std::vector<Counted> counted(const std::vector<int>& v) {
    std::vector<Counted> out;
    for (int e : v) out.push_back(Counted{e});
    return out;
}

/// Calls f on every array of length len over {1, ..., alphabet}.
inline void for_each_array(int len, int alphabet, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> x(static_cast<std::size_t>(len), 1);
    for (;;) {
        f(x);
        int pos = 0;
        while (pos < len && x[static_cast<std::size_t>(pos)] == alphabet) x[static_cast<std::size_t>(pos++)] = 1;
        if (pos == len) return;
        ++x[static_cast<std::size_t>(pos)];
    }
}

/// k-th smallest (1-based) by sorting a copy.
template <class T>
T kth_smallest(std::vector<T> x, Index k) {
    std::sort(x.begin(), x.end());
    return x[static_cast<std::size_t>(k - 1)];
}

template <class T>
bool same_multiset(std::vector<T> a, std::vector<T> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

/// Strict selection post-state with the equal range [k_minus, k_plus].
template <class T>
bool strict_selected(const std::vector<T>& x, Index k, frselect::SelectionResult res) {
    const auto n = static_cast<Index>(x.size());
    if (!(1 <= res.k_minus && res.k_minus <= k && k <= res.k_plus && res.k_plus <= n)) return false;
    const T& v = x[static_cast<std::size_t>(k - 1)];
    for (Index i = 1; i <= n; ++i) {
        const T& e = x[static_cast<std::size_t>(i - 1)];
        if (i < res.k_minus && !(e < v)) return false;
        if (i >= res.k_minus && i <= res.k_plus && !(e == v)) return false;
        if (i > res.k_plus && !(v < e)) return false;
    }
    return true;
}

/// x[i] <= x[k] left of k and x[k] <= x[i] right of k.
template <class T>
bool weakly_selected(const std::vector<T>& x, Index k) {
    const T& v = x[static_cast<std::size_t>(k - 1)];
    for (Index i = 1; i <= static_cast<Index>(x.size()); ++i) {
        const T& e = x[static_cast<std::size_t>(i - 1)];
        if (i < k && v < e) return false;
        if (i > k && e < v) return false;
    }
    return true;
}

}  // namespace testing
