#pragma once

#include <cstdint>
#include <string_view>

#include "frselect/core.hpp"
#include "frselect/random.hpp"

namespace frselect {

enum class SampleVariant {
    FloydRivest,    // s = ceil(alpha f(n)), g = sqrt(beta s ln n)
    Mehlhorn,       // g = sqrt(beta s ln(theta s))
    Generalized,    // f(n) = n^{2/3} ln^{eps_l/3} n, g = sqrt(beta s ln^{eps_l} n)
    Flr75a,         // s = ceil(alpha n^{2/3}), g = sqrt(beta s ln n)
    Reischuk,       // s = ceil(alpha n^{eps_s}), g = sqrt(beta s n^eps)
    ReischukSplit,  // s = ceil(alpha n^{eps_s}), g = sqrt(beta) n^{eps_g}
};

std::string_view to_string(SampleVariant v);

/// Sample size and gap rule. Defaults are the classic (0.5, 0.25, 600).
struct SampleStrategy {
    SampleVariant variant = SampleVariant::FloydRivest;
    double alpha = 0.5;
    double beta = 0.25;
    double theta = 1.0;
    double eps_l = 1.0;
    double eps = 0.25;
    double eps_s = 0.75;
    double eps_g = 0.5;
    Index n_cut = 600;

    /// Throws std::invalid_argument when a parameter constraint fails.
    void validate() const;
};

struct SampleSize {
    Index s = 0;
    double g = 0;
};

/// n^{2/3} ln^{1/3} n. Throws std::invalid_argument for n < 2.
double f_fr(double n);

/// The variant's f(n), used for the gamma column. n >= 2.
double size_function(double n, const SampleStrategy& strategy);

/// s = min(ceil(alpha * size_term(n)), n - 1) and the variant's gap g.
SampleSize sample_and_gap(Index n, const SampleStrategy& strategy);

struct PivotRanks {
    Index k_u = 0;
    Index k_v = 0;
};

/// Sample ranks of the two pivots for target k in x[l:r], with the sample in
/// x[l:l+s-1]. With single_pivot_reset, a clamp at the low end sets
/// k_u := k_v and a clamp at the high end sets k_v := k_u (not both).
PivotRanks pivot_ranks(Index k, Index l, Index r, Index s, double g, bool single_pivot_reset);

/// Moves a uniform random s-subset of x[l:r] into x[l:l+s-1] by exchanging
/// x[i] with x[i + rand(r - i)] for i = l, ..., l + s - 1.
template <class T>
void place_sample(Workspace<T>& x, Index l, Index r, Index s, Rng& rng) {
    FRSELECT_ASSERT(s >= 1 && s <= r - l + 1);
    const Index r_s = l + s - 1;
    for (Index i = l; i <= r_s; ++i) {
        const auto offset = static_cast<Index>(rng.uniform_inclusive(static_cast<std::uint64_t>(r - i)));
        x.swap(i, i + offset);
    }
}

}  // namespace frselect
