// frselect: benchmark runner and bound checks.
//
//   frselect bench --algo select --input random --n 50000,100000 --runs 20 --csv out.csv
//   frselect verify-bounds --mode tail --configs 20 --trials 10000

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frselect/harness.hpp"

using namespace frselect;

namespace {

SampleVariant parse_variant(const std::string& name) {
    for (SampleVariant v : {SampleVariant::FloydRivest, SampleVariant::Mehlhorn, SampleVariant::Generalized,
                            SampleVariant::Flr75a, SampleVariant::Reischuk, SampleVariant::ReischukSplit})
        if (to_string(v) == name) return v;
    throw CLI::ValidationError("--scheme", "unknown scheme " + name);
}

void apply_k_rule(ExperimentConfig& cfg, const std::string& rule) {
    if (rule == "median") {
        cfg.k_rule = KRule::LowerMedian;
    } else if (rule == "upper") {
        cfg.k_rule = KRule::UpperMedian;
    } else {
        cfg.k_rule = KRule::Explicit;
        try {
            std::size_t used = 0;
            cfg.explicit_k = std::stoll(rule, &used);
            if (used != rule.size()) throw std::invalid_argument(rule);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--k", "expected median, upper or an integer");
        }
    }
}

void print_rows(const ExperimentReport& report) {
    std::printf("%-9s %-9s %10s %7s %7s %7s %7s %6s %6s %6s %6s %6s %6s\n", "algo", "input", "n", "C/n",
                "max", "min", "gamma", "L/n", "P/ln", "N/ln", "p", "s%", "N_rnd");
    for (const ReportRow& r : report.rows)
        std::printf("%-9s %-9s %10lld %7.3f %7.3f %7.3f %7.2f %6.2f %6.2f %6.2f %6.2f %6.2f %6.2f\n",
                    std::string(to_string(r.algorithm)).c_str(), std::string(to_string(r.input)).c_str(),
                    static_cast<long long>(r.n), r.c_avg_n, r.c_max_n, r.c_min_n, r.gamma_avg, r.l_avg_n,
                    r.p_avg_ln_n, r.n_avg_ln_n, r.p_sselect_avg, r.s_avg_pct, r.n_rnd_avg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampling-based selection: benchmarks and bound checks"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string algo = "select", input = "random", k_rule = "median", scheme = "fr", csv_path;
    bool per_run = false, timing = false, serial = false, quiet = false;
    int threads = 0;
    auto* bench = app.add_subcommand("bench", "Run an experiment and report comparison counts");
    bench->add_option("--algo", algo, "select, pmselect or riselect")
        ->check(CLI::IsMember({"select", "pmselect", "riselect"}));
    bench->add_option("--input", input, "Input sequence")
        ->check(CLI::IsMember({"random", "onezero", "sorted", "rotated", "organpipe", "m3killer", "twofaced"}));
    bench->add_option("--n", cfg.sizes, "Input sizes, comma separated")->delimiter(',');
    bench->add_option("--runs", cfg.runs_per_size, "Runs per size")->check(CLI::PositiveNumber);
    bench->add_option("--k", k_rule, "median (lower), upper, or an explicit rank");
    bench->add_option("--scheme", scheme, "fr, mehlhorn, gen, flr75a, reischuk or reischuk-split");
    bench->add_option("--alpha", cfg.strategy.alpha);
    bench->add_option("--beta", cfg.strategy.beta);
    bench->add_option("--theta", cfg.strategy.theta, "mehlhorn only");
    bench->add_option("--eps-l", cfg.strategy.eps_l, "gen only");
    bench->add_option("--eps", cfg.strategy.eps, "reischuk only");
    bench->add_option("--eps-s", cfg.strategy.eps_s, "reischuk variants");
    bench->add_option("--eps-g", cfg.strategy.eps_g, "reischuk-split only");
    bench->add_option("--ncut", cfg.strategy.n_cut, "sSelect cut-off");
    bench->add_flag("--no-reset", "Keep two pivots when a sample rank clamps")
        ->each([&](const std::string&) { cfg.single_pivot_reset = false; });
    bench->add_option("--shrink", cfg.ri.shrink_factor, "riselect randomization threshold");
    bench->add_option("--seed", cfg.base_seed, "Base seed; run i uses seed + i");
    bench->add_option("--csv", csv_path, "Write the CSV report here ('-' for stdout)");
    bench->add_flag("--per-run", per_run, "Add one CSV row per run");
    bench->add_flag("--timing", timing, "Add wall-clock columns to the CSV");
    bench->add_flag("--serial", serial, "Do not use OpenMP threads");
    bench->add_option("--threads", threads, "OpenMP thread count (0 = default)");
    bench->add_flag("--quiet", quiet, "No table on stdout");

    std::string mode = "tail";
    std::int64_t trials = 0, configs = 20, n_mc = 100'000;
    std::uint64_t mc_seed = 1;
    double beta_mc = 0.25;
    auto* verify = app.add_subcommand("verify-bounds", "Monte Carlo checks of the sampling tail bounds");
    verify->add_option("--mode", mode, "tail or shrink")->check(CLI::IsMember({"tail", "shrink"}));
    verify->add_option("--trials", trials, "Trials per configuration (default 10000 tail, 1000 shrink)");
    verify->add_option("--configs", configs, "Random (n, r, s, g) configurations for --mode tail");
    verify->add_option("--n", n_mc, "Input size for --mode shrink");
    verify->add_option("--beta", beta_mc, "Gap parameter for --mode shrink");
    verify->add_option("--seed", mc_seed);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*bench) {
            cfg.algorithm = parse_algorithm(algo);
            cfg.input = parse_input_kind(input);
            cfg.strategy.variant = parse_variant(scheme);
            cfg.parallel = !serial;
            apply_k_rule(cfg, k_rule);
            const ExperimentReport report = run_experiment(cfg);
            if (!quiet && csv_path != "-") print_rows(report);
            if (csv_path == "-") {
                write_csv(std::cout, report, cfg, per_run, timing);
            } else if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open " + csv_path);
                write_csv(out, report, cfg, per_run, timing);
            }
            if (report.violations() > 0) {
                std::cerr << "error: " << report.violations() << " run(s) violated the selection contract\n";
                return 2;
            }
            return 0;
        }

        Rng rng(mc_seed);
        int failures = 0;
        if (mode == "tail") {
            if (trials == 0) trials = 10'000;
            std::printf("%8s %8s %6s %8s %10s %10s %10s %s\n", "n", "r", "s", "g", "bound", "estimate", "stderr",
                        "ok");
            for (std::int64_t c = 0; c < configs; ++c) {
                const BoundCheckSpec spec = random_tail_spec(rng, trials);
                const TailEstimate est = hypergeometric_tail_mc(spec, rng);
                const bool ok = est.probability <= spec.tail_bound() + 3 * est.std_error;
                failures += !ok;
                std::printf("%8lld %8lld %6lld %8.3f %10.3g %10.3g %10.3g %s\n", static_cast<long long>(spec.n),
                            static_cast<long long>(spec.r), static_cast<long long>(spec.s), spec.g,
                            spec.tail_bound(), est.probability, est.std_error, ok ? "yes" : "NO");
            }
        } else {
            if (trials == 0) trials = 1'000;
            SampleStrategy st;
            st.beta = beta_mc;
            st.validate();
            const double design = std::pow(static_cast<double>(n_mc), -2.0 * beta_mc);
            const auto sigma = [&](double p) { return std::sqrt(p * (1 - p) / static_cast<double>(trials)); };
            std::printf("%10s %6s %8s %10s %10s %10s %10s %s\n", "k", "s", "g", "P[shrink]", "limit", "P[cost]",
                        "limit", "ok");
            for (std::int64_t k : {std::int64_t{1}, n_mc / 4, (n_mc + 1) / 2, n_mc}) {
                const ShrinkageEstimate est = shrinkage_mc(n_mc, k, st, trials, rng);
                const double shrink_limit = std::min(1.0, 4 * design) + 3 * sigma(std::min(1.0, 4 * design));
                const double cost_limit = design + 3 * sigma(design);
                const bool ok = est.shrink_frequency() <= shrink_limit && est.cost_frequency() <= cost_limit;
                failures += !ok;
                std::printf("%10lld %6lld %8.2f %10.4f %10.4f %10.4f %10.4f %s\n", static_cast<long long>(k),
                            static_cast<long long>(est.s), est.g, est.shrink_frequency(), shrink_limit,
                            est.cost_frequency(), cost_limit, ok ? "yes" : "NO");
            }
        }
        return failures == 0 ? 0 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
