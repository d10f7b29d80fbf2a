#include "frselect/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frselect {

namespace {

constexpr std::pair<Algorithm, std::string_view> kAlgorithms[] = {
    {Algorithm::Select, "select"}, {Algorithm::PmSelect, "pmselect"}, {Algorithm::RiSelect, "riselect"}};

bool strictly_verified(std::span<const double> x, std::int64_t k, SelectionResult res) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (!(1 <= res.k_minus && res.k_minus <= k && k <= res.k_plus && res.k_plus <= n)) return false;
    const double v = x[static_cast<std::size_t>(k - 1)];
    for (std::int64_t i = 1; i <= n; ++i) {
        const double xi = x[static_cast<std::size_t>(i - 1)];
        const bool ok = i < res.k_minus ? xi < v : (i <= res.k_plus ? xi == v : v < xi);
        if (!ok) return false;
    }
    return true;
}

bool weakly_verified(std::span<const double> x, std::int64_t k) {
    const double v = x[static_cast<std::size_t>(k - 1)];
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(x.size()); ++i) {
        const double xi = x[static_cast<std::size_t>(i - 1)];
        if (i < k && v < xi) return false;
        if (i > k && xi < v) return false;
    }
    return true;
}

// Runs body(t) for t in [0, count), on OpenMP threads when parallel is set.
// The first exception thrown by any iteration is rethrown.
template <class Body>
void for_each_index(std::int64_t count, bool parallel, Body body) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            body(t);
        } catch (...) {
#pragma omp critical(frselect_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

double safe_div(double a, double b) {
    return b == 0 ? std::numeric_limits<double>::quiet_NaN() : a / b;
}

ReportRow aggregate(const ExperimentConfig& cfg, std::int64_t n, std::span<const RunRecord> runs) {
    ReportRow row;
    row.algorithm = cfg.algorithm;
    row.input = cfg.input;
    row.n = n;
    row.runs = static_cast<int>(runs.size());
    row.k = runs.front().k;
    const double nd = static_cast<double>(n);
    RunCounters total;
    row.time_max = row.c_max_n = -std::numeric_limits<double>::infinity();
    row.time_min = row.c_min_n = std::numeric_limits<double>::infinity();
    for (const RunRecord& r : runs) {
        total += r.counters;
        const double c = static_cast<double>(r.counters.comparisons) / nd;
        row.c_max_n = std::max(row.c_max_n, c);
        row.c_min_n = std::min(row.c_min_n, c);
        row.time_avg += r.seconds;
        row.time_max = std::max(row.time_max, r.seconds);
        row.time_min = std::min(row.time_min, r.seconds);
        if (!r.ok) ++row.violations;
    }
    const double runs_d = static_cast<double>(runs.size());
    row.time_avg /= runs_d;
    const double c_avg = static_cast<double>(total.comparisons) / runs_d;
    const double l_avg = static_cast<double>(total.partition_size_sum) / runs_d;
    row.c_avg_n = c_avg / nd;
    row.l_avg_n = l_avg / nd;
    row.c_over_l = safe_div(c_avg, l_avg);
    const double ln = std::log(nd);
    if (n >= 2) {
        row.gamma_avg = (c_avg - 1.5 * nd) / size_function(nd, cfg.strategy);
        row.p_avg_ln_n = static_cast<double>(total.select_partitions) / runs_d / ln;
        row.n_avg_ln_n = static_cast<double>(total.sselect_calls) / runs_d / ln;
    } else {
        row.gamma_avg = row.p_avg_ln_n = row.n_avg_ln_n = std::numeric_limits<double>::quiet_NaN();
    }
    row.p_sselect_avg =
        safe_div(static_cast<double>(total.sselect_partitions), static_cast<double>(total.sselect_calls));
    row.s_avg_pct = 100.0 * static_cast<double>(total.sample_size_sum) / runs_d / nd;
    row.n_rnd_avg = static_cast<double>(total.randomizations) / runs_d;
    return row;
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string_view to_string(Algorithm a) {
    for (const auto& [k, name] : kAlgorithms)
        if (k == a) return name;
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (const auto& [k, n] : kAlgorithms)
        if (n == name) return k;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

void ExperimentConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("no input sizes given");
    if (runs_per_size < 1) throw std::invalid_argument("runs per size must be at least 1");
    for (std::int64_t n : sizes) {
        frselect::validate(InputSpec{input, n, 0});
        const std::int64_t k = target_rank(*this, n);
        if (k < 1 || k > n) throw std::invalid_argument("target rank outside 1..n");
    }
    strategy.validate();
    ri.validate();
}

std::int64_t target_rank(const ExperimentConfig& cfg, std::int64_t n) {
    switch (cfg.k_rule) {
        case KRule::LowerMedian: return (n + 1) / 2;
        case KRule::UpperMedian: return std::min(n, (n + 1) / 2 + 1);
        case KRule::Explicit: return cfg.explicit_k;
    }
    return (n + 1) / 2;
}

int ExperimentReport::violations() const {
    int total = 0;
    for (const ReportRow& r : rows) total += r.violations;
    return total;
}

RunRecord run_single(const ExperimentConfig& cfg, std::int64_t n, int run) {
    RunRecord rec;
    rec.n = n;
    rec.run = run;
    rec.seed = cfg.base_seed + static_cast<std::uint64_t>(run);
    rec.k = target_rank(cfg, n);
    const std::vector<std::int64_t> ints = generate(InputSpec{cfg.input, n, rec.seed});
    std::vector<double> x(ints.begin(), ints.end());
    std::vector<double> oracle = x;
    std::nth_element(oracle.begin(), oracle.begin() + (rec.k - 1), oracle.end());
    const double expected = oracle[static_cast<std::size_t>(rec.k - 1)];

    // Input generation and the algorithm draw from separate streams.
    Rng rng(rec.seed, 1);
    Workspace<double> ws{std::span<double>(x)};
    const auto start = std::chrono::steady_clock::now();
    SelectionResult res{};
    switch (cfg.algorithm) {
        case Algorithm::Select: {
            const SelectConfig sc{cfg.strategy, cfg.single_pivot_reset};
            res = select(ws, 1, n, rec.k, sc, rec.counters, rng);
            break;
        }
        case Algorithm::PmSelect: {
            const SelectConfig sc{cfg.strategy, cfg.single_pivot_reset};
            pmselect(ws, 1, n, rec.k, sc, rec.counters, rng);
            break;
        }
        case Algorithm::RiSelect:
            riselect(ws, 1, n, rec.k, cfg.ri, rec.counters, rng);
            break;
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.ok = x[static_cast<std::size_t>(rec.k - 1)] == expected &&
             (cfg.algorithm == Algorithm::Select ? strictly_verified(x, rec.k, res)
                                                 : weakly_verified(x, rec.k));
    return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto runs = static_cast<std::int64_t>(cfg.runs_per_size);
    const auto total = static_cast<std::int64_t>(cfg.sizes.size()) * runs;
    ExperimentReport report;
    report.runs.resize(static_cast<std::size_t>(total));
    for_each_index(total, cfg.parallel, [&](std::int64_t t) {
        const std::int64_t n = cfg.sizes[static_cast<std::size_t>(t / runs)];
        report.runs[static_cast<std::size_t>(t)] = run_single(cfg, n, static_cast<int>(t % runs));
    });
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
        const std::span<const RunRecord> slice(report.runs.data() + i * static_cast<std::size_t>(runs),
                                               static_cast<std::size_t>(runs));
        report.rows.push_back(aggregate(cfg, cfg.sizes[i], slice));
    }
    return report;
}

const char* const kCsvHeader =
    "row,algorithm,input,scheme,n,k,runs,run,seed,c_avg_n,c_max_n,c_min_n,gamma_avg,l_avg_n,c_over_l,"
    "p_avg_ln_n,n_avg_ln_n,p_sselect_avg,s_avg_pct,n_rnd_avg,violations";

void write_csv(std::ostream& out, const ExperimentReport& report, const ExperimentConfig& cfg,
               bool per_run, bool timing) {
    out << kCsvHeader;
    if (timing) out << ",t_avg,t_max,t_min";
    out << '\n';
    const std::string scheme(cfg.algorithm == Algorithm::RiSelect ? std::string_view("-")
                                                                  : to_string(cfg.strategy.variant));
    for (const ReportRow& r : report.rows) {
        out << "aggregate," << to_string(r.algorithm) << ',' << to_string(r.input) << ',' << scheme << ','
            << r.n << ',' << r.k << ',' << r.runs << ",," << cfg.base_seed << ',' << fmt(r.c_avg_n) << ','
            << fmt(r.c_max_n) << ',' << fmt(r.c_min_n) << ',' << fmt(r.gamma_avg) << ',' << fmt(r.l_avg_n)
            << ',' << fmt(r.c_over_l) << ',' << fmt(r.p_avg_ln_n) << ',' << fmt(r.n_avg_ln_n) << ','
            << fmt(r.p_sselect_avg) << ',' << fmt(r.s_avg_pct) << ',' << fmt(r.n_rnd_avg) << ','
            << r.violations;
        if (timing) out << ',' << fmt(r.time_avg) << ',' << fmt(r.time_max) << ',' << fmt(r.time_min);
        out << '\n';
    }
    if (!per_run) return;
    for (const RunRecord& rec : report.runs) {
        ExperimentConfig one = cfg;
        const ReportRow r = aggregate(one, rec.n, std::span<const RunRecord>(&rec, 1));
        out << "run," << to_string(cfg.algorithm) << ',' << to_string(cfg.input) << ',' << scheme << ','
            << rec.n << ',' << rec.k << ",1," << rec.run << ',' << rec.seed << ',' << fmt(r.c_avg_n) << ','
            << fmt(r.c_max_n) << ',' << fmt(r.c_min_n) << ',' << fmt(r.gamma_avg) << ',' << fmt(r.l_avg_n)
            << ',' << fmt(r.c_over_l) << ',' << fmt(r.p_avg_ln_n) << ',' << fmt(r.n_avg_ln_n) << ','
            << fmt(r.p_sselect_avg) << ',' << fmt(r.s_avg_pct) << ',' << fmt(r.n_rnd_avg) << ','
            << (rec.ok ? 0 : 1);
        if (timing) out << ',' << fmt(rec.seconds) << ',' << fmt(rec.seconds) << ',' << fmt(rec.seconds);
        out << '\n';
    }
}

// Monte Carlo ----------------------------------------------------------------

double BoundCheckSpec::tail_bound() const {
    return std::exp(-2.0 * g * g / static_cast<double>(s));
}

void BoundCheckSpec::validate() const {
    if (n < 1 || r < 0 || r > n || s < 1 || s > n || !(g >= 0) || trials < 0)
        throw std::invalid_argument("invalid bound check spec");
}

BoundCheckSpec random_tail_spec(Rng& rng, std::int64_t trials, double min_bound, double max_bound) {
    if (!(0 < min_bound && min_bound <= max_bound && max_bound < 1))
        throw std::invalid_argument("bound range must lie in (0, 1)");
    BoundCheckSpec spec;
    spec.n = 200 + static_cast<std::int64_t>(rng.uniform_inclusive(9800));
    spec.r = static_cast<std::int64_t>(rng.uniform_inclusive(static_cast<std::uint64_t>(spec.n)));
    spec.s = 20 + static_cast<std::int64_t>(rng.uniform_inclusive(static_cast<std::uint64_t>(spec.n / 2 - 20)));
    const double log_bound =
        std::log(min_bound) + rng.uniform01() * (std::log(max_bound) - std::log(min_bound));
    spec.g = std::sqrt(-log_bound * static_cast<double>(spec.s) / 2.0);
    spec.trials = trials;
    return spec;
}

RankWindow bounding_ranks(std::int64_t n, std::int64_t k, std::int64_t s, double g) {
    const double spread = 2.0 * g * static_cast<double>(n) / static_cast<double>(s);
    const double kd = static_cast<double>(k);
    return {std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(kd - spread)), 1),
            std::min<std::int64_t>(static_cast<std::int64_t>(std::ceil(kd + spread)), n)};
}

TailEstimate hypergeometric_tail_mc(const BoundCheckSpec& spec, Rng& rng, bool parallel) {
    spec.validate();
    TailEstimate est;
    est.trials = spec.trials;
    if (spec.trials == 0) return est;
    const std::uint64_t base = rng.next();
    // r' >= r s / n + g  <=>  n r' >= r s + g n, kept in long double.
    const long double rhs = static_cast<long double>(spec.r) * spec.s + static_cast<long double>(spec.g) * spec.n;
    std::vector<unsigned char> hit(static_cast<std::size_t>(spec.trials));
    for_each_index(spec.trials, parallel, [&](std::int64_t t) {
        Rng local(base, static_cast<std::uint64_t>(t));
        std::int64_t red_left = spec.r, total_left = spec.n, red_drawn = 0;
        for (std::int64_t d = 0; d < spec.s; ++d) {
            const bool red = static_cast<std::int64_t>(local.uniform_inclusive(static_cast<std::uint64_t>(total_left - 1))) <
                             red_left;
            if (red) {
                ++red_drawn;
                --red_left;
            }
            --total_left;
        }
        hit[static_cast<std::size_t>(t)] = static_cast<long double>(red_drawn) * spec.n >= rhs;
    });
    for (unsigned char h : hit) est.hits += h;
    est.probability = static_cast<double>(est.hits) / static_cast<double>(est.trials);
    est.std_error = std::sqrt(est.probability * (1 - est.probability) / static_cast<double>(est.trials));
    return est;
}

double ShrinkageEstimate::shrink_frequency() const {
    return trials ? static_cast<double>(bad_shrink) / static_cast<double>(trials) : 0.0;
}

double ShrinkageEstimate::cost_frequency() const {
    return trials ? static_cast<double>(over_cost) / static_cast<double>(trials) : 0.0;
}

ShrinkageEstimate shrinkage_mc(std::int64_t n, std::int64_t k, const SampleStrategy& strategy,
                               std::int64_t trials, Rng& rng, bool parallel) {
    strategy.validate();
    if (n < 3 || k < 1 || k > n || trials < 0) throw std::invalid_argument("invalid shrinkage experiment");
    const SampleSize sg = sample_and_gap(n, strategy);
    ShrinkageEstimate est;
    est.n = n;
    est.k = k;
    est.s = sg.s;
    est.g = sg.g;
    est.trials = trials;
    const double nd = static_cast<double>(n);
    const double spread = 2.0 * sg.g * nd / static_cast<double>(sg.s);
    est.shrink_threshold = 2.0 * spread;
    est.cost_threshold = nd + static_cast<double>(std::min(k, n - k)) - static_cast<double>(sg.s) + spread;
    if (trials == 0) return est;

    const std::uint64_t base = rng.next();
    const std::vector<std::int64_t> ints = generate(InputSpec{InputKind::Random, n, base});
    const std::vector<double> input(ints.begin(), ints.end());
    // The sample recursion may use sselect, so n_cut stays as configured.
    const SelectConfig cfg{strategy, true};
    std::vector<StageReport> reports(static_cast<std::size_t>(trials));
    for_each_index(trials, parallel, [&](std::int64_t t) {
        std::vector<double> x = input;
        RunCounters counters;
        Rng local(base, static_cast<std::uint64_t>(t) + 1);
        reports[static_cast<std::size_t>(t)] =
            select_stage(Workspace<double>{std::span<double>(x)}, 1, n, k, cfg, counters, local);
    });
    double sum_hat = 0, sum_cost = 0;
    for (const StageReport& r : reports) {
        const auto n_hat = static_cast<double>(r.n_hat());
        const auto cost = static_cast<double>(r.partition_comparisons);
        if (n_hat >= est.shrink_threshold) ++est.bad_shrink;
        if (cost > est.cost_threshold) ++est.over_cost;
        sum_hat += n_hat;
        sum_cost += cost;
    }
    est.mean_n_hat = sum_hat / static_cast<double>(trials);
    est.mean_cost = sum_cost / static_cast<double>(trials);
    return est;
}

}  // namespace frselect
