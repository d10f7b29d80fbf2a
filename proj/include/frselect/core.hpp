#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <utility>

// Debug builds check partition postconditions and scan cursors; release
// builds compile the checks out.
#ifndef FRSELECT_VERIFY
#ifdef NDEBUG
#define FRSELECT_VERIFY 0
#else
#define FRSELECT_VERIFY 1
#endif
#endif

#if FRSELECT_VERIFY
#define FRSELECT_ASSERT(cond) \
    ((cond) ? static_cast<void>(0) : ::frselect::detail::assert_fail(#cond, __FILE__, __LINE__))
#else
#define FRSELECT_ASSERT(cond) ((void)0)
#endif

namespace frselect {

namespace detail {
[[noreturn]] inline void assert_fail(const char* cond, const char* file, int line) {
    std::fprintf(stderr, "%s:%d: check failed: %s\n", file, line, cond);
    std::abort();
}
}  // namespace detail

/// Array positions are 1-based throughout the public interface.
using Index = std::ptrdiff_t;

inline constexpr bool kVerifyPartitions = FRSELECT_VERIFY != 0;

/// Instrumentation accumulated over one or more algorithm runs.
struct RunCounters {
    std::uint64_t comparisons = 0;         // element-vs-element only
    std::uint64_t partition_size_sum = 0;  // L: sum of partitioned segment sizes
    std::uint64_t select_partitions = 0;   // P
    std::uint64_t sselect_calls = 0;       // N
    std::uint64_t sselect_partitions = 0;
    std::uint64_t sample_size_sum = 0;
    std::uint64_t randomizations = 0;      // riselect only

    RunCounters& operator+=(const RunCounters& o) {
        comparisons += o.comparisons;
        partition_size_sum += o.partition_size_sum;
        select_partitions += o.select_partitions;
        sselect_calls += o.sselect_calls;
        sselect_partitions += o.sselect_partitions;
        sample_size_sum += o.sample_size_sum;
        randomizations += o.randomizations;
        return *this;
    }

    friend bool operator==(const RunCounters&, const RunCounters&) = default;
};

inline RunCounters counters_merge(RunCounters a, const RunCounters& b) {
    a += b;
    return a;
}

/// Equal range [k_minus, k_plus] of the selected element.
struct SelectionResult {
    Index k_minus = 0;
    Index k_plus = 0;
    friend bool operator==(const SelectionResult&, const SelectionResult&) = default;
};

/// Block boundaries of a partition:
///   [l, a) < u,  [a, b) = u,  [b, c] between,  (c, d] = v,  (d, r] > v.
/// Ternary results use b = d + 1 and c = a - 1.
struct PartitionBounds {
    Index a = 0;
    Index b = 0;
    Index c = 0;
    Index d = 0;
    friend bool operator==(const PartitionBounds&, const PartitionBounds&) = default;
};

/// 1-based mutable view over the element array.
template <class T>
class Workspace {
public:
    Workspace() = default;
    explicit Workspace(std::span<T> data) : data_(data) {}

    T& operator[](Index i) {
        FRSELECT_ASSERT(i >= 1 && i <= size());
        return data_[static_cast<std::size_t>(i - 1)];
    }
    const T& operator[](Index i) const {
        FRSELECT_ASSERT(i >= 1 && i <= size());
        return data_[static_cast<std::size_t>(i - 1)];
    }

    void swap(Index i, Index j) {
        using std::swap;
        swap((*this)[i], (*this)[j]);
    }

    Index size() const { return static_cast<Index>(data_.size()); }
    std::span<T> span() const { return data_; }

private:
    std::span<T> data_;
};

template <class T>
Workspace(std::span<T>) -> Workspace<T>;

/// The single instrumentation hook: every element comparison made by the
/// algorithms goes through here and is counted once.
template <class T>
inline auto compare(const T& a, const T& b, RunCounters& counters) {
    ++counters.comparisons;
    return a <=> b;
}

/// Counters scaled the way the result tables report them.
struct NormalizedCounts {
    double comparisons_per_n = 0;
    double partition_size_per_n = 0;
    double gamma = 0;                 // (C - 1.5 n) / f(n)
    double sample_percent_of_n = 0;
    double partitions_per_ln_n = 0;   // P / ln n
    double sselect_calls_per_ln_n = 0;
};

/// Throws std::invalid_argument for n == 0 or f_n <= 0. For n == 1 the
/// ln n scaled columns are NaN.
NormalizedCounts normalize(const RunCounters& counters, std::uint64_t n, double f_n);

}  // namespace frselect
