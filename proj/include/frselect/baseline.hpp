#pragma once

// riselect: quickselect with a median-of-3 pivot, randomized only when the
// segment stops shrinking fast enough.

#include <stdexcept>

#include "frselect/core.hpp"
#include "frselect/partition.hpp"
#include "frselect/random.hpp"

namespace frselect {

struct RiConfig {
    /// A partition that leaves more than shrink_factor of the segment
    /// triggers randomization of the next pivot candidates.
    double shrink_factor = 15.0 / 16.0;

    void validate() const {
        if (!(shrink_factor > 0 && shrink_factor < 1))
            throw std::invalid_argument("shrink_factor must lie in (0, 1)");
    }
};

namespace detail {

template <class T>
void order_pair(Workspace<T>& x, Index i, Index j, RunCounters& c) {
    if (compare(x[j], x[i], c) < 0) x.swap(i, j);
}

}  // namespace detail

/// Afterwards x[i] <= x[k] for l <= i < k and x[k] <= x[i] for k < i <= r.
template <class T>
void riselect(Workspace<T> x, Index l, Index r, Index k, const RiConfig& cfg, RunCounters& counters,
              Rng& rng) {
    if (!(1 <= l && l <= k && k <= r && r <= x.size())) throw std::out_of_range("invalid selection rank");
    cfg.validate();
    bool randomize = false;
    while (r > l) {
        const Index m = r - l + 1;
        if (m <= 3) {
            const Index mid = l + 1;
            detail::order_pair(x, l, r, counters);
            if (m == 3) {
                detail::order_pair(x, l, mid, counters);
                detail::order_pair(x, mid, r, counters);
            }
            return;
        }
        const Index mid = l + (r - l) / 2;
        if (randomize) {
            for (Index pos : {l, mid, r})
                x.swap(pos, l + static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(r - l))));
            ++counters.randomizations;
            randomize = false;
        }
        // Sort x[l], x[mid], x[r]; the outer two then bound the scan.
        detail::order_pair(x, l, mid, counters);
        if (compare(x[r], x[mid], counters) < 0) {
            x.swap(mid, r);
            detail::order_pair(x, l, mid, counters);
        }
        const T v = x[mid];
        x.swap(l, mid);
        const auto [i, j] = detail::binary_scan(x, l, r, v, counters);
        x.swap(l, j);
        ++counters.select_partitions;
        counters.partition_size_sum += static_cast<std::uint64_t>(m);
        const Index a = j;
        const Index d = i - 1;
        if (k < a) r = a - 1;
        else if (k > d) l = d + 1;
        else return;
        if (static_cast<double>(r - l + 1) > cfg.shrink_factor * static_cast<double>(m)) randomize = true;
    }
}

template <class T>
void riselect(std::span<T> data, Index k, const RiConfig& cfg = {}, std::uint64_t seed = 0,
              RunCounters* counters = nullptr) {
    RunCounters local;
    Rng rng(seed);
    riselect(Workspace<T>(data), 1, static_cast<Index>(data.size()), k, cfg, counters ? *counters : local, rng);
}

}  // namespace frselect
