#pragma once

// Experiment runner and Monte Carlo checks of the sampling bounds.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "frselect/baseline.hpp"
#include "frselect/core.hpp"
#include "frselect/generators.hpp"
#include "frselect/random.hpp"
#include "frselect/sampling.hpp"
#include "frselect/select.hpp"

namespace frselect {

enum class Algorithm { Select, PmSelect, RiSelect };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

enum class KRule { LowerMedian, UpperMedian, Explicit };

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Select;
    InputKind input = InputKind::Random;
    std::vector<std::int64_t> sizes{50'000, 100'000, 500'000, 1'000'000};
    int runs_per_size = 20;
    KRule k_rule = KRule::LowerMedian;
    std::int64_t explicit_k = 0;
    SampleStrategy strategy{};
    bool single_pivot_reset = true;
    RiConfig ri{};
    std::uint64_t base_seed = 1;
    /// Run (size, run) pairs on OpenMP threads; results do not depend on it.
    bool parallel = true;

    void validate() const;
};

/// Target rank for size n under the config's rule (1-based).
std::int64_t target_rank(const ExperimentConfig& cfg, std::int64_t n);

struct RunRecord {
    std::int64_t n = 0;
    int run = 0;
    std::uint64_t seed = 0;
    std::int64_t k = 0;
    RunCounters counters{};
    double seconds = 0;
    bool ok = true;  // post-state and order statistic verified
};

struct ReportRow {
    Algorithm algorithm{};
    InputKind input{};
    std::int64_t n = 0;
    int runs = 0;
    std::int64_t k = 0;
    double time_avg = 0, time_max = 0, time_min = 0;
    double c_avg_n = 0, c_max_n = 0, c_min_n = 0;
    double gamma_avg = 0;
    double l_avg_n = 0;
    double c_over_l = 0;
    double p_avg_ln_n = 0;
    double n_avg_ln_n = 0;
    double p_sselect_avg = 0;  // sSelect partitions per sSelect call
    double s_avg_pct = 0;
    double n_rnd_avg = 0;
    int violations = 0;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;
    std::vector<RunRecord> runs;  // ordered by (size index, run index)
    int violations() const;
};

/// Runs one instance: generates the input, runs the algorithm on doubles and
/// checks the result against an nth_element oracle.
RunRecord run_single(const ExperimentConfig& cfg, std::int64_t n, int run);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Header of the CSV written by write_csv (timing columns excluded).
extern const char* const kCsvHeader;

/// One "aggregate" line per row, then "run" lines if per_run is set. Timing
/// columns are appended only when timing is set, so that untimed reports are
/// byte-identical across invocations with the same seed.
void write_csv(std::ostream& out, const ExperimentReport& report, const ExperimentConfig& cfg,
               bool per_run, bool timing);

// Monte Carlo checks ---------------------------------------------------------

/// An urn of n balls, r of them red; s are drawn without replacement.
struct BoundCheckSpec {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    double g = 0;
    std::int64_t trials = 0;

    double red_fraction() const { return static_cast<double>(r) / static_cast<double>(n); }
    /// exp(-2 g^2 / s), the bound on P[red draws >= ps + g].
    double tail_bound() const;
    void validate() const;
};

/// Random urn with 200 <= n <= 10000, 0 <= r <= n, 20 <= s <= n/2, and g
/// chosen so that tail_bound() is log-uniform in [min_bound, max_bound].
BoundCheckSpec random_tail_spec(Rng& rng, std::int64_t trials, double min_bound = 1e-3,
                                double max_bound = 1e-1);

struct RankWindow {
    std::int64_t k_left = 0;
    std::int64_t k_right = 0;
};

/// max(ceil(k - 2gn/s), 1) and min(ceil(k + 2gn/s), n).
RankWindow bounding_ranks(std::int64_t n, std::int64_t k, std::int64_t s, double g);

struct TailEstimate {
    std::int64_t trials = 0;
    std::int64_t hits = 0;
    double probability = 0;
    double std_error = 0;  // binomial standard error of the estimate
};

/// Estimates P[red draws >= ps + g]. Trial t uses Rng(rng.next(), t), drawn
/// once up front, so the estimate does not depend on the thread count.
TailEstimate hypergeometric_tail_mc(const BoundCheckSpec& spec, Rng& rng, bool parallel = true);

struct ShrinkageEstimate {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t s = 0;
    double g = 0;
    std::int64_t trials = 0;
    std::int64_t bad_shrink = 0;  // stages leaving n_hat >= 4gn/s
    std::int64_t over_cost = 0;   // stages whose partition cost exceeds c_bar
    double shrink_threshold = 0;  // 4gn/s
    double cost_threshold = 0;    // c_bar = n + min(k, n-k) - s + 2gn/s
    double mean_n_hat = 0;
    double mean_cost = 0;

    double shrink_frequency() const;
    double cost_frequency() const;
};

/// Runs `trials` single select stages on copies of one random permutation of
/// 1..n, each with its own sample stream.
ShrinkageEstimate shrinkage_mc(std::int64_t n, std::int64_t k, const SampleStrategy& strategy,
                               std::int64_t trials, Rng& rng, bool parallel = true);

}  // namespace frselect
