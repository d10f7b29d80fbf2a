#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "frselect/generators.hpp"
#include "frselect/select.hpp"
#include "support.hpp"

using namespace frselect;
using testing::Counted;

namespace {

SelectConfig tiny_cutoff(Index n_cut) {
    SelectConfig cfg;
    cfg.strategy.n_cut = n_cut;
    return cfg;
}

template <class T>
Workspace<T> view(std::vector<T>& v) {
    return Workspace<T>{std::span<T>(v)};
}

std::vector<int> random_values(Rng& rng, int n, int alphabet) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int& e : x) e = static_cast<int>(rng.uniform_inclusive(static_cast<std::uint64_t>(alphabet - 1))) + 1;
    return x;
}

}  // namespace

TEST_CASE("select examples") {
    std::vector<int> p{4, 2, 5, 1, 3};
    SelectionResult res = select(std::span<int>(p), 3);
    CHECK(p[2] == 3);
    CHECK(res == SelectionResult{3, 3});

    std::vector<int> d{2, 1, 2, 3, 1, 2};
    res = select(std::span<int>(d), 4);
    CHECK(d[3] == 2);
    CHECK(res == SelectionResult{3, 5});
    CHECK(testing::strict_selected(d, 4, res));

    std::vector<int> one{7};
    RunCounters c;
    res = sselect(view(one), 1, 1, 1, c);
    CHECK(res == SelectionResult{1, 1});
    CHECK(c.comparisons == 0);
}

TEST_CASE("select, sselect and pmselect exhaustive over {1,2,3}, lengths up to 8") {
    for (int len = 1; len <= 8; ++len)
        testing::for_each_array(len, 3, [&](const std::vector<int>& input) {
            for (Index k = 1; k <= len; ++k) {
                const int expected = testing::kth_smallest(input, k);
                for (Index n_cut : {Index{1}, Index{2}, Index{600}}) {
                    std::vector<int> x = input;
                    RunCounters c;
                    Rng rng(static_cast<std::uint64_t>(k * 31 + len));
                    const SelectionResult res = select(view(x), 1, len, k, tiny_cutoff(n_cut), c, rng);
                    REQUIRE(x[static_cast<std::size_t>(k - 1)] == expected);
                    REQUIRE(testing::strict_selected(x, k, res));
                    REQUIRE(testing::same_multiset(x, input));

                    std::vector<int> y = input;
                    pmselect(view(y), 1, len, k, tiny_cutoff(n_cut), c, rng);
                    REQUIRE(y[static_cast<std::size_t>(k - 1)] == expected);
                    REQUIRE(testing::weakly_selected(y, k));
                    REQUIRE(testing::same_multiset(y, input));
                }
                std::vector<int> z = input;
                RunCounters c;
                const SelectionResult res = sselect(view(z), 1, len, k, c);
                REQUIRE(testing::strict_selected(z, k, res));
                std::vector<int> w = input;
                pmsselect(view(w), 1, len, k, c);
                REQUIRE(testing::weakly_selected(w, k));
            }
        });
}

TEST_CASE("select on subsegments leaves the rest alone") {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        const int n = 10 + static_cast<int>(rng.uniform_inclusive(200));
        std::vector<int> x = random_values(rng, n, 6);
        const Index l = 1 + static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(n / 3)));
        const Index r = n - static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(n / 3)));
        const Index k = l + static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(r - l)));
        const std::vector<int> before = x;
        RunCounters c;
        const SelectionResult res = select(view(x), l, r, k, tiny_cutoff(4), c, rng);
        CHECK(std::equal(x.begin(), x.begin() + (l - 1), before.begin()));
        CHECK(std::equal(x.begin() + r, x.end(), before.begin() + r));
        const std::vector<int> seg(x.begin() + (l - 1), x.begin() + r);
        const SelectionResult local{res.k_minus - l + 1, res.k_plus - l + 1};
        CHECK(testing::strict_selected(seg, k - l + 1, local));
    }
}

TEST_CASE("randomized oracle with duplicates and small cut-offs") {
    Rng rng(21);
    for (int t = 0; t < 400; ++t) {
        const int n = 1 + static_cast<int>(rng.uniform_inclusive(3000));
        const int alphabet = 1 + static_cast<int>(rng.uniform_inclusive(t % 2 ? 5 : 100000));
        const std::vector<int> input = random_values(rng, n, alphabet);
        const Index k = 1 + static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(n - 1)));
        const Index n_cut = 1 + static_cast<Index>(rng.uniform_inclusive(40));
        const int expected = testing::kth_smallest(input, k);
        std::vector<int> x = input, y = input;
        RunCounters c;
        const SelectionResult res = select(view(x), 1, n, k, tiny_cutoff(n_cut), c, rng);
        REQUIRE(x[static_cast<std::size_t>(k - 1)] == expected);
        REQUIRE(testing::strict_selected(x, k, res));
        pmselect(view(y), 1, n, k, tiny_cutoff(n_cut), c, rng);
        REQUIRE(y[static_cast<std::size_t>(k - 1)] == expected);
        REQUIRE(testing::weakly_selected(y, k));
        REQUIRE(testing::same_multiset(y, input));
    }
}

TEST_CASE("pmselect examples") {
    std::vector<int> d{2, 1, 2, 1, 2};
    pmselect(std::span<int>(d), 3);
    CHECK(d[2] == 2);
    CHECK(testing::weakly_selected(d, 3));

    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const auto p = generate(InputSpec{InputKind::Random, 5000, static_cast<std::uint64_t>(t)});
        const Index k = 1 + static_cast<Index>(rng.uniform_inclusive(4999));
        std::vector<std::int64_t> x = p;
        pmselect(std::span<std::int64_t>(x), k, {}, static_cast<std::uint64_t>(t));
        CHECK(x[static_cast<std::size_t>(k - 1)] == k);
    }
}

TEST_CASE("comparison counter equals counted three-way comparisons") {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const int n = 100 + static_cast<int>(rng.uniform_inclusive(5000));
        auto values = random_values(rng, n, t % 3 ? n : 3);
        const Index k = 1 + static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(n - 1)));
        for (int algo = 0; algo < 3; ++algo) {
            auto x = testing::counted(values);
            RunCounters c;
            Rng local(static_cast<std::uint64_t>(t));
            Counted::spaceship_calls = 0;
            if (algo == 0) select(view(x), 1, n, k, tiny_cutoff(50), c, local);
            else if (algo == 1) pmselect(view(x), 1, n, k, tiny_cutoff(50), c, local);
            else sselect(view(x), 1, n, k, c);
            CHECK(c.comparisons == Counted::spaceship_calls);
        }
    }
}

TEST_CASE("determinism under a fixed seed") {
    const auto input = generate(InputSpec{InputKind::Random, 200'000, 5});
    for (int algo = 0; algo < 2; ++algo) {
        std::vector<std::int64_t> a = input, b = input;
        RunCounters ca, cb;
        Rng ra(77), rb(77);
        if (algo == 0) {
            select(view(a), 1, 200'000, 100'000, SelectConfig{}, ca, ra);
            select(view(b), 1, 200'000, 100'000, SelectConfig{}, cb, rb);
        } else {
            pmselect(view(a), 1, 200'000, 100'000, SelectConfig{}, ca, ra);
            pmselect(view(b), 1, 200'000, 100'000, SelectConfig{}, cb, rb);
        }
        CHECK(ca == cb);
        CHECK(a == b);
    }
}

TEST_CASE("loop and recursion depth stay small") {
    for (InputKind kind : {InputKind::Random, InputKind::OneZero, InputKind::Sorted, InputKind::TwoFaced}) {
        auto x = generate(InputSpec{kind, 1'000'000, 3});
        RunCounters c;
        Rng rng(3);
        SelectTrace trace;
        select(view(x), 1, 1'000'000, 500'000, SelectConfig{}, c, rng, &trace);
        CHECK(trace.max_stages <= 8);
        CHECK(trace.max_depth <= 8);
        auto y = generate(InputSpec{kind, 1'000'000, 3});
        SelectTrace pm_trace;
        pmselect(view(y), 1, 1'000'000, 500'000, SelectConfig{}, c, rng, &pm_trace);
        CHECK(pm_trace.max_stages <= 8);
        CHECK(pm_trace.fallbacks == 0);
    }
}

TEST_CASE("counters on a random input") {
    auto x = generate(InputSpec{InputKind::Random, 100'000, 1});
    RunCounters c;
    Rng rng(1);
    select(view(x), 1, 100'000, 50'000, SelectConfig{}, c, rng);
    CHECK(c.select_partitions >= 1);
    CHECK(c.sselect_calls >= 1);
    CHECK(c.sselect_partitions >= c.sselect_calls);
    CHECK(c.sample_size_sum >= static_cast<std::uint64_t>(sample_and_gap(100'000, SampleStrategy{}).s));
    CHECK(c.partition_size_sum >= 100'000 - c.sample_size_sum);
    CHECK(c.randomizations == 0);
}

TEST_CASE("sselect cost on length 600") {
    Rng rng(600);
    double total = 0;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        auto x = generate(InputSpec{InputKind::Random, 600, rng.next()});
        RunCounters c;
        sselect(view(x), 1, 600, 300, c);
        total += static_cast<double>(c.comparisons);
        CHECK(c.sselect_calls == 1);
    }
    CHECK(total / trials < 3.5 * 600);
}

TEST_CASE("select_stage reports one stage") {
    auto x = generate(InputSpec{InputKind::Random, 50'000, 2});
    RunCounters c;
    Rng rng(2);
    const StageReport rep = select_stage(view(x), 1, 50'000, 25'000, SelectConfig{}, c, rng);
    CHECK(rep.s == sample_and_gap(50'000, SampleStrategy{}).s);
    CHECK(c.select_partitions >= 1);
    CHECK(rep.new_l <= 25'000);
    CHECK(rep.new_r >= 25'000);
    CHECK(rep.n_hat() < 50'000 / 4);
    CHECK(rep.partition_comparisons >= static_cast<std::uint64_t>(50'000 - rep.s));
    // Every element outside [new_l, new_r] is already on the correct side.
    const auto v = std::vector<std::int64_t>(x.begin() + (rep.new_l - 1), x.begin() + rep.new_r);
    for (Index i = 1; i < rep.new_l; ++i) CHECK(x[static_cast<std::size_t>(i - 1)] <= 25'000);
    for (Index i = rep.new_r + 1; i <= 50'000; ++i) CHECK(x[static_cast<std::size_t>(i - 1)] >= 25'000);
    CHECK(std::find(v.begin(), v.end(), 25'000) != v.end());
}

TEST_CASE("invalid ranks are rejected") {
    std::vector<int> x{1, 2, 3};
    RunCounters c;
    Rng rng;
    CHECK_THROWS_AS(select(view(x), 1, 3, 4, SelectConfig{}, c, rng), std::out_of_range);
    CHECK_THROWS_AS(select(view(x), 2, 3, 1, SelectConfig{}, c, rng), std::out_of_range);
    CHECK_THROWS_AS(pmselect(view(x), 0, 3, 1, SelectConfig{}, c, rng), std::out_of_range);
}

TEST_CASE("reset flag off still selects correctly") {
    Rng rng(12);
    SelectConfig cfg = tiny_cutoff(20);
    cfg.single_pivot_reset = false;
    for (int t = 0; t < 200; ++t) {
        const int n = 50 + static_cast<int>(rng.uniform_inclusive(2000));
        const auto input = random_values(rng, n, 1 + t % 50);
        for (Index k : {Index{1}, Index{n}, Index{(n + 1) / 2}}) {
            std::vector<int> x = input;
            RunCounters c;
            const SelectionResult res = select(view(x), 1, n, k, cfg, c, rng);
            REQUIRE(testing::strict_selected(x, k, res));
        }
    }
}
