#pragma once

// Sampling selection drivers.
//
// select() permutes x[l:r] so that x[k] holds the k-th smallest element of the
// segment and returns the equal range [k_minus, k_plus]:
//   x[i] <  x[k] for l <= i < k_minus,
//   x[i] == x[k] for k_minus <= i <= k_plus,
//   x[i] >  x[k] for k_plus < i <= r.
//
// pmselect() only guarantees x[i] <= x[k] left of k and x[k] <= x[i] right
// of k, using the cheaper weak partitions.
//
// Each stage draws a random sample into the front of the segment, selects two
// pivots u <= v from it recursively, partitions the rest around them and keeps
// the block that holds rank k. Segments of at most n_cut elements go to the
// small-select loop.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "frselect/core.hpp"
#include "frselect/partition.hpp"
#include "frselect/random.hpp"
#include "frselect/sampling.hpp"

namespace frselect {

struct SelectConfig {
    SampleStrategy strategy{};
    /// Use one pivot when the sample rank clamps at an end of the sample.
    bool single_pivot_reset = true;
};

/// Optional diagnostics of a select/pmselect call.
struct SelectTrace {
    Index max_stages = 0;      // most sampling stages taken by one driver loop
    Index max_depth = 0;       // deepest nesting of sample recursions
    Index fallbacks = 0;       // pmselect iteration-cap fallbacks
};

/// What one sampling stage did, for the shrinkage experiments.
struct StageReport {
    Index s = 0;
    double g = 0;
    PartitionBounds bounds{};
    bool single_pivot = false;
    std::uint64_t partition_comparisons = 0;  // Step-4 comparisons only
    Index new_l = 0;
    Index new_r = 0;
    Index n_hat() const { return new_r >= new_l ? new_r - new_l + 1 : 0; }
};

namespace detail {

inline Index floor_mid(Index l, Index r) { return (l + r) / 2; }

// Shrinks [l, r] to the block holding k; a, b, c, d as in PartitionBounds.
inline void narrow(Index k, const PartitionBounds& pb, Index& l, Index& r) {
    if (pb.a <= k) l = pb.b;
    if (pb.c < k) l = pb.d + 1;
    if (k <= pb.d) r = pb.c;
    if (k < pb.b) r = pb.a - 1;
}

inline Index iteration_cap(Index n) {
    Index bits = 0;
    while ((Index{1} << bits) < n) ++bits;
    return 4 * std::max<Index>(bits, 1);
}

template <class T>
class Selector {
public:
    Selector(Workspace<T>& x, const SelectConfig& cfg, RunCounters& counters, Rng& rng,
             SelectTrace* trace)
        : x_(x), cfg_(cfg), c_(counters), rng_(rng), trace_(trace) {}

    SelectionResult select(Index l, Index r, Index k) {
        DepthGuard guard(*this);
        Index stages = 0;
        for (;;) {
            if (l >= r) return finish(l, r, k);
            if (r - l + 1 <= cfg_.strategy.n_cut) return sselect(l, r, k);
            stage(l, r, k, nullptr);
            note_stages(++stages);
        }
    }

    SelectionResult sselect(Index l, Index r, Index k) {
        ++c_.sselect_calls;
        while (l < r) {
            const T v = x_[k];
            const PartitionBounds pb = ternary_A(x_, l, r, k, c_);
            ++c_.sselect_partitions;
            c_.partition_size_sum += static_cast<std::uint64_t>(r - l + 1);
            verify_strict(l, r, pb, v, v);
            narrow(k, pb, l, r);
        }
        return finish(l, r, k);
    }

    // One sampling stage of select() on x[l:r]; updates l and r.
    void stage(Index& l, Index& r, Index k, StageReport* report) {
        const Index m = r - l + 1;
        const SampleSize sg = sample_and_gap(m, cfg_.strategy);
        const Index s = sg.s;
        c_.sample_size_sum += static_cast<std::uint64_t>(s);
        place_sample(x_, l, r, s, rng_);
        const Index r_s = l + s - 1;
        const PivotRanks pr = pivot_ranks(k, l, r, s, sg.g, cfg_.single_pivot_reset);

        const SelectionResult ru = select(l, r_s, pr.k_u);
        Index ku_minus = ru.k_minus, ku_plus = ru.k_plus;
        Index kv_minus, kv_plus;
        const T u = x_[pr.k_u];
        const bool single = ku_plus >= pr.k_v;
        if (single) {
            kv_plus = ku_plus;
            Index split = pr.k_v;
            bool full_fallback = false;
            // The ternary scans need an element <= v left of the unexamined
            // block. Without a `< u` sample element, keep the left `= u`
            // block nonempty, or failing that use the `> v` sample elements
            // on the right.
            if (split == ku_minus && ku_minus == l) {
                if (kv_plus > ku_minus) split = ku_minus + 1;
                else if (kv_plus < r_s) split = kv_plus + 1;
                else full_fallback = true;
            }
            ku_plus = split - 1;
            kv_minus = split;
            const std::uint64_t before = c_.comparisons;
            PartitionBounds pb;
            if (full_fallback) {
                pb = ternary_A(x_, l, r, pr.k_u, c_);
            } else {
                const QuintaryState st =
                    prepare_quintary(x_, l, r, r_s, ku_minus, ku_plus, kv_minus, kv_plus);
                pb = ternary_from_state(x_, st, u, c_);
            }
            finish_stage(l, r, k, pb, u, u, before, s, sg.g, true, report);
            return;
        }
        const SelectionResult rv = select(ku_plus + 1, r_s, pr.k_v);
        kv_minus = rv.k_minus;
        kv_plus = rv.k_plus;
        const T v = x_[pr.k_v];
        const std::uint64_t before = c_.comparisons;
        const QuintaryState st = prepare_quintary(x_, l, r, r_s, ku_minus, ku_plus, kv_minus, kv_plus);
        const PartitionBounds pb =
            k < floor_mid(l, r) ? quintary_B(x_, st, u, v, c_) : quintary_C(x_, st, u, v, c_);
        finish_stage(l, r, k, pb, u, v, before, s, sg.g, false, report);
    }

    void pmselect(Index l, Index r, Index k) {
        DepthGuard guard(*this);
        Index stages = 0;
        const Index cap = iteration_cap(r - l + 1);
        for (;;) {
            if (l >= r) return;
            if (r - l + 1 <= cfg_.strategy.n_cut) return pmsselect(l, r, k);
            if (stages == cap) {
                if (trace_) ++trace_->fallbacks;
                return pmsselect(l, r, k);
            }
            pm_stage(l, r, k);
            note_stages(++stages);
        }
    }

    void pmsselect(Index l, Index r, Index k) {
        ++c_.sselect_calls;
        while (l < r) {
            const PartitionBounds pb = binary_E(x_, l, r, k, c_);
            ++c_.sselect_partitions;
            c_.partition_size_sum += static_cast<std::uint64_t>(r - l + 1);
            verify_weak(l, r, pb, x_[pb.a], x_[pb.a]);
            narrow(k, pb, l, r);
        }
    }

    void pm_stage(Index& l, Index& r, Index k) {
        const Index m = r - l + 1;
        const SampleSize sg = sample_and_gap(m, cfg_.strategy);
        const Index s = sg.s;
        c_.sample_size_sum += static_cast<std::uint64_t>(s);
        place_sample(x_, l, r, s, rng_);
        const Index r_s = l + s - 1;
        const PivotRanks pr = pivot_ranks(k, l, r, s, sg.g, cfg_.single_pivot_reset);

        pmselect(l, r_s, pr.k_u);
        const T u = x_[pr.k_u];
        bool equal = true;
        if (pr.k_u < pr.k_v) {
            pmselect(pr.k_u + 1, r_s, pr.k_v);
            equal = compare(u, x_[pr.k_v], c_) == 0;
        }
        const T v = x_[pr.k_v];
        const Index l_bar = pr.k_u;
        const Index p = pr.k_v;
        const Index r_bar = r - r_s + p;
        vector_swap(x_, p + 1, r_s, r);

        const std::uint64_t before = c_.comparisons;
        PartitionBounds pb;
        if (equal) {
            if (l_bar == p && l_bar == l) {
                // Nothing <= v below the pivot: keep it at x[l] as the left
                // sentinel; the sample's `>= v` tail is the right one.
                if (r_bar < r) pb = pm_binary_pivot_left(x_, l, r_bar + 1, v, c_);
                else pb = binary_E(x_, l, r, l, c_);
            } else {
                x_.swap(p, r_bar);
                pb = pm_ternary_E(x_, l_bar, p, r_bar, v, c_);
            }
        } else {
            x_.swap(p, r_bar);
            pb = k < floor_mid(l, r) ? pm_quintary_F(x_, l_bar, p, r_bar, u, v, c_)
                                     : pm_quintary_G(x_, l_bar, p, r_bar, u, v, c_);
        }
        ++c_.select_partitions;
        c_.partition_size_sum += static_cast<std::uint64_t>(m - s);
        verify_weak(l, r, pb, u, v);
        (void)before;
        narrow(k, pb, l, r);
    }

private:
    struct DepthGuard {
        explicit DepthGuard(Selector& s) : self(s) {
            ++self.depth_;
            if (self.trace_ && self.depth_ > self.trace_->max_depth) self.trace_->max_depth = self.depth_;
        }
        ~DepthGuard() { --self.depth_; }
        Selector& self;
    };

    static SelectionResult finish(Index l, Index r, Index k) {
        if (l == r) return {k, k};
        return {r + 1, l - 1};
    }

    void note_stages(Index stages) {
        if (trace_ && stages > trace_->max_stages) trace_->max_stages = stages;
    }

    void finish_stage(Index& l, Index& r, Index k, const PartitionBounds& pb, const T& u, const T& v,
                      std::uint64_t before, Index s, double g, bool single, StageReport* report) {
        const Index m = r - l + 1;
        ++c_.select_partitions;
        c_.partition_size_sum += static_cast<std::uint64_t>(m - s);
        verify_strict(l, r, pb, u, v);
        const std::uint64_t step4 = c_.comparisons - before;
        narrow(k, pb, l, r);
        if (report) {
            report->s = s;
            report->g = g;
            report->bounds = pb;
            report->single_pivot = single;
            report->partition_comparisons = step4;
            report->new_l = l;
            report->new_r = r;
        }
    }

    void verify_strict([[maybe_unused]] Index l, [[maybe_unused]] Index r,
                       [[maybe_unused]] const PartitionBounds& pb, [[maybe_unused]] const T& u,
                       [[maybe_unused]] const T& v) const {
        if constexpr (kVerifyPartitions) {
            if (!check_strict_blocks(x_, l, r, pb, u, v))
                throw std::logic_error("strict partition postcondition violated");
        }
    }

    void verify_weak([[maybe_unused]] Index l, [[maybe_unused]] Index r,
                     [[maybe_unused]] const PartitionBounds& pb, [[maybe_unused]] const T& u,
                     [[maybe_unused]] const T& v) const {
        if constexpr (kVerifyPartitions) {
            if (!check_weak_blocks(x_, l, r, pb, u, v))
                throw std::logic_error("weak partition postcondition violated");
        }
    }

    Workspace<T>& x_;
    const SelectConfig& cfg_;
    RunCounters& c_;
    Rng& rng_;
    SelectTrace* trace_;
    Index depth_ = 0;
};

inline void check_ranks(Index n, Index l, Index r, Index k) {
    if (!(1 <= l && l <= k && k <= r && r <= n)) throw std::out_of_range("invalid selection rank");
}

}  // namespace detail

template <class T>
SelectionResult select(Workspace<T> x, Index l, Index r, Index k, const SelectConfig& cfg,
                       RunCounters& counters, Rng& rng, SelectTrace* trace = nullptr) {
    detail::check_ranks(x.size(), l, r, k);
    cfg.strategy.validate();
    detail::Selector<T> sel(x, cfg, counters, rng, trace);
    return sel.select(l, r, k);
}

/// Small-select loop: ternary partitions around x[k] until rank k is isolated.
template <class T>
SelectionResult sselect(Workspace<T> x, Index l, Index r, Index k, RunCounters& counters) {
    detail::check_ranks(x.size(), l, r, k);
    const SelectConfig cfg{};
    Rng rng;
    detail::Selector<T> sel(x, cfg, counters, rng, nullptr);
    return sel.sselect(l, r, k);
}

template <class T>
void pmselect(Workspace<T> x, Index l, Index r, Index k, const SelectConfig& cfg,
              RunCounters& counters, Rng& rng, SelectTrace* trace = nullptr) {
    detail::check_ranks(x.size(), l, r, k);
    cfg.strategy.validate();
    detail::Selector<T> sel(x, cfg, counters, rng, trace);
    sel.pmselect(l, r, k);
}

/// Small-select loop of pmselect, built on scheme E.
template <class T>
void pmsselect(Workspace<T> x, Index l, Index r, Index k, RunCounters& counters) {
    detail::check_ranks(x.size(), l, r, k);
    const SelectConfig cfg{};
    Rng rng;
    detail::Selector<T> sel(x, cfg, counters, rng, nullptr);
    sel.pmsselect(l, r, k);
}

/// Runs a single sampling stage of select() on x[l:r] (sample selection,
/// pivot recursion and one partition, no further narrowing).
template <class T>
StageReport select_stage(Workspace<T> x, Index l, Index r, Index k, const SelectConfig& cfg,
                         RunCounters& counters, Rng& rng) {
    detail::check_ranks(x.size(), l, r, k);
    cfg.strategy.validate();
    if (r - l + 1 < 3) throw std::invalid_argument("select_stage needs at least 3 elements");
    detail::Selector<T> sel(x, cfg, counters, rng, nullptr);
    StageReport report;
    sel.stage(l, r, k, &report);
    return report;
}

/// Convenience entry point: whole-array select of rank k (1-based).
template <class T>
SelectionResult select(std::span<T> data, Index k, const SelectConfig& cfg = {},
                       std::uint64_t seed = 0, RunCounters* counters = nullptr) {
    RunCounters local;
    Rng rng(seed);
    return select(Workspace<T>(data), 1, static_cast<Index>(data.size()), k, cfg,
                  counters ? *counters : local, rng);
}

template <class T>
void pmselect(std::span<T> data, Index k, const SelectConfig& cfg = {}, std::uint64_t seed = 0,
              RunCounters* counters = nullptr) {
    RunCounters local;
    Rng rng(seed);
    pmselect(Workspace<T>(data), 1, static_cast<Index>(data.size()), k, cfg,
             counters ? *counters : local, rng);
}

}  // namespace frselect
