#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace frselect {

enum class InputKind { Random, OneZero, Sorted, Rotated, OrganPipe, M3Killer, TwoFaced };

struct InputSpec {
    InputKind kind = InputKind::Random;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
};

std::string_view to_string(InputKind kind);

/// Lowercase names: random, onezero, sorted, rotated, organpipe, m3killer,
/// twofaced. Throws std::invalid_argument for anything else.
InputKind parse_input_kind(std::string_view name);

/// Throws std::invalid_argument if n < 1, if organpipe gets odd n, or if
/// m3killer/twofaced get n not divisible by 4.
void validate(const InputSpec& spec);

/// The sequence for spec. random, onezero and twofaced draw from
/// Rng(spec.seed); the other kinds ignore the seed.
std::vector<std::int64_t> generate(const InputSpec& spec);

}  // namespace frselect
