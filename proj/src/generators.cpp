#include "frselect/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "frselect/random.hpp"

namespace frselect {

namespace {

constexpr std::pair<InputKind, std::string_view> kNames[] = {
    {InputKind::Random, "random"},       {InputKind::OneZero, "onezero"},
    {InputKind::Sorted, "sorted"},       {InputKind::Rotated, "rotated"},
    {InputKind::OrganPipe, "organpipe"}, {InputKind::M3Killer, "m3killer"},
    {InputKind::TwoFaced, "twofaced"},
};

// Fisher-Yates on out[lo..hi], 1-based inclusive; empty if lo > hi.
void shuffle_window(std::vector<std::int64_t>& out, std::int64_t lo, std::int64_t hi, Rng& rng) {
    for (std::int64_t i = lo; i < hi; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.uniform_inclusive(static_cast<std::uint64_t>(hi - i)));
        std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(j - 1)]);
    }
}

std::vector<std::int64_t> m3killer(std::int64_t n) {
    const std::int64_t k = n / 2;
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        std::int64_t value;
        if (i < k) value = (i % 2 == 1) ? i : k + i - 1;
        else if (i == k) value = 2;
        else if (i <= 2 * k - 2) value = 2 * (i - k + 1);
        else value = i;
        out[static_cast<std::size_t>(i - 1)] = value;
    }
    return out;
}

}  // namespace

std::string_view to_string(InputKind kind) {
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

InputKind parse_input_kind(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown input kind: " + std::string(name));
}

void validate(const InputSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("input size must be positive");
    if (spec.kind == InputKind::OrganPipe && spec.n % 2 != 0)
        throw std::invalid_argument("organpipe needs even n");
    if ((spec.kind == InputKind::M3Killer || spec.kind == InputKind::TwoFaced) && spec.n % 4 != 0)
        throw std::invalid_argument(std::string(to_string(spec.kind)) + " needs n divisible by 4");
}

std::vector<std::int64_t> generate(const InputSpec& spec) {
    validate(spec);
    const std::int64_t n = spec.n;
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    Rng rng(spec.seed);
    switch (spec.kind) {
        case InputKind::Random:
            std::iota(out.begin(), out.end(), std::int64_t{1});
            shuffle_window(out, 1, n, rng);
            break;
        case InputKind::OneZero:
            // ceil(n/2) ones, floor(n/2) zeroes
            std::fill(out.begin(), out.begin() + (n + 1) / 2, 1);
            std::fill(out.begin() + (n + 1) / 2, out.end(), 0);
            shuffle_window(out, 1, n, rng);
            break;
        case InputKind::Sorted:
            std::iota(out.begin(), out.end(), std::int64_t{1});
            break;
        case InputKind::Rotated:
            std::iota(out.begin(), out.end(), std::int64_t{2});
            out.back() = 1;
            break;
        case InputKind::OrganPipe:
            for (std::int64_t i = 1; i <= n / 2; ++i) {
                out[static_cast<std::size_t>(i - 1)] = i;
                out[static_cast<std::size_t>(n - i)] = i;
            }
            break;
        case InputKind::M3Killer:
            out = m3killer(n);
            break;
        case InputKind::TwoFaced: {
            out = m3killer(n);
            const std::int64_t lg = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
            shuffle_window(out, 4 * lg, n / 2 - 1, rng);
            shuffle_window(out, n / 2 + 4 * lg - 1, n - 2, rng);
            break;
        }
    }
    return out;
}

}  // namespace frselect
