#include <doctest.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frselect/generators.hpp"

using namespace frselect;

namespace {

using Seq = std::vector<std::int64_t>;

Seq iota_seq(std::int64_t n) {
    Seq s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), std::int64_t{1});
    return s;
}

bool is_permutation_of_1_to_n(Seq s) {
    std::sort(s.begin(), s.end());
    return s == iota_seq(static_cast<std::int64_t>(s.size()));
}

Seq read_golden(const std::string& name) {
    std::ifstream in(std::string(FRSELECT_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    Seq out;
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

TEST_CASE("deterministic kinds") {
    CHECK(generate({InputKind::Sorted, 5, 0}) == Seq{1, 2, 3, 4, 5});
    CHECK(generate({InputKind::Rotated, 5, 0}) == Seq{2, 3, 4, 5, 1});
    CHECK(generate({InputKind::OrganPipe, 6, 0}) == Seq{1, 2, 3, 3, 2, 1});
    CHECK(generate({InputKind::M3Killer, 8, 0}) == Seq{1, 5, 3, 2, 4, 6, 7, 8});
    CHECK(generate({InputKind::Sorted, 7, 1}) == generate({InputKind::Sorted, 7, 2}));
    CHECK(generate({InputKind::M3Killer, 64, 1}) == generate({InputKind::M3Killer, 64, 99}));
}

TEST_CASE("m3killer golden files") {
    for (std::int64_t n : {8, 16, 32}) {
        const Seq golden = read_golden("m3killer_" + std::to_string(n) + ".txt");
        CHECK(generate({InputKind::M3Killer, n, 0}) == golden);
    }
}

TEST_CASE("m3killer structure") {
    for (std::int64_t n = 4; n <= 400; n += 4) {
        const Seq s = generate({InputKind::M3Killer, n, 0});
        CHECK(is_permutation_of_1_to_n(s));
        CHECK(s[static_cast<std::size_t>(n / 2 - 1)] == 2);
    }
}

TEST_CASE("random and onezero") {
    const Seq r = generate({InputKind::Random, 1000, 7});
    CHECK(is_permutation_of_1_to_n(r));
    CHECK(r == generate({InputKind::Random, 1000, 7}));
    CHECK(r != generate({InputKind::Random, 1000, 8}));

    const Seq oz = generate({InputKind::OneZero, 5, 3});
    CHECK(std::count(oz.begin(), oz.end(), 1) == 3);
    CHECK(std::count(oz.begin(), oz.end(), 0) == 2);

    // Position-wise mean over many seeds is close to (n+1)/2.
    const int n = 20, seeds = 4000;
    std::vector<double> mean(n, 0.0);
    for (int s = 0; s < seeds; ++s) {
        const Seq x = generate({InputKind::Random, n, static_cast<std::uint64_t>(s)});
        for (int i = 0; i < n; ++i) mean[static_cast<std::size_t>(i)] += static_cast<double>(x[static_cast<std::size_t>(i)]) / seeds;
    }
    // sd of one position is about 5.77, so the mean's sd is about 0.09.
    for (double m : mean) CHECK(std::abs(m - 10.5) < 0.5);
}

TEST_CASE("twofaced keeps m3killer outside its windows") {
    for (std::int64_t n : {64, 100, 1024, 4000}) {
        const Seq base = generate({InputKind::M3Killer, n, 0});
        const Seq tf = generate({InputKind::TwoFaced, n, 12});
        CHECK(is_permutation_of_1_to_n(tf));
        const std::int64_t lg = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
        const auto in_window = [&](std::int64_t i) {
            return (i >= 4 * lg && i <= n / 2 - 1) || (i >= n / 2 + 4 * lg - 1 && i <= n - 2);
        };
        bool moved = false;
        for (std::int64_t i = 1; i <= n; ++i) {
            const auto idx = static_cast<std::size_t>(i - 1);
            if (!in_window(i)) CHECK(tf[idx] == base[idx]);
            moved |= tf[idx] != base[idx];
        }
        CHECK(moved);
    }
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(generate({InputKind::Sorted, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({InputKind::OrganPipe, 7, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({InputKind::M3Killer, 10, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({InputKind::TwoFaced, 6, 0}), std::invalid_argument);
}

TEST_CASE("kind names") {
    for (auto kind : {InputKind::Random, InputKind::OneZero, InputKind::Sorted, InputKind::Rotated,
                      InputKind::OrganPipe, InputKind::M3Killer, InputKind::TwoFaced})
        CHECK(parse_input_kind(to_string(kind)) == kind);
    CHECK(to_string(InputKind::OneZero) == "onezero");
    CHECK_THROWS_AS(parse_input_kind("Random"), std::invalid_argument);
}
