#include "frselect/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace frselect {

std::string_view to_string(SampleVariant v) {
    switch (v) {
        case SampleVariant::FloydRivest: return "fr";
        case SampleVariant::Mehlhorn: return "mehlhorn";
        case SampleVariant::Generalized: return "gen";
        case SampleVariant::Flr75a: return "flr75a";
        case SampleVariant::Reischuk: return "reischuk";
        case SampleVariant::ReischukSplit: return "reischuk-split";
    }
    return "?";
}

namespace {

double reischuk_eta(const SampleStrategy& st) {
    if (st.variant == SampleVariant::ReischukSplit)
        return std::max(1.0 + st.eps_g - st.eps_s, st.eps_s);
    return std::max(1.0 + (st.eps - st.eps_s) / 2.0, st.eps_s);
}

// Ceiling that treats values within a few ulps of an integer as that integer,
// so that e.g. 1e6^(2/3) gives 10000 rather than 10001.
double guarded_ceil(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x)))
        return nearest;
    return std::ceil(x);
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid sample strategy: ") + what);
}

}  // namespace

void SampleStrategy::validate() const {
    require(alpha > 0, "alpha must be positive");
    require(beta > 0, "beta must be positive");
    require(n_cut >= 1, "n_cut must be at least 1");
    switch (variant) {
        case SampleVariant::Mehlhorn:
            require(theta > 0, "theta must be positive");
            break;
        case SampleVariant::Generalized:
            require(eps_l >= 1, "eps_l must be at least 1");
            break;
        case SampleVariant::Reischuk:
            require(eps > 0 && eps < eps_s && eps_s < 1, "need 0 < eps < eps_s < 1");
            require(reischuk_eta(*this) < 1, "eta must be below 1");
            break;
        case SampleVariant::ReischukSplit:
            require(eps_s > 0 && eps_s < 1 && eps_g > 0 && eps_g < 1, "eps_s, eps_g must lie in (0,1)");
            require(2 * eps_g - eps_s > 0, "need 2 eps_g - eps_s > 0");
            require(reischuk_eta(*this) < 1, "eta must be below 1");
            break;
        default:
            break;
    }
}

double f_fr(double n) {
    if (!(n >= 2)) throw std::invalid_argument("f(n) needs n >= 2");
    return std::pow(n, 2.0 / 3.0) * std::cbrt(std::log(n));
}

double size_function(double n, const SampleStrategy& st) {
    if (!(n >= 2)) throw std::invalid_argument("f(n) needs n >= 2");
    const double ln = std::log(n);
    switch (st.variant) {
        case SampleVariant::FloydRivest:
        case SampleVariant::Mehlhorn:
            return f_fr(n);
        case SampleVariant::Generalized:
            return std::pow(n, 2.0 / 3.0) * std::pow(ln, st.eps_l / 3.0);
        case SampleVariant::Flr75a:
            return std::pow(n, 2.0 / 3.0) * std::sqrt(ln);
        case SampleVariant::Reischuk:
        case SampleVariant::ReischukSplit:
            return std::pow(n, reischuk_eta(st));
    }
    return f_fr(n);
}

SampleSize sample_and_gap(Index n, const SampleStrategy& st) {
    if (n < 2) throw std::invalid_argument("sample_and_gap needs n >= 2");
    const double nd = static_cast<double>(n);
    const double ln = std::log(nd);
    double size_term = 0;
    switch (st.variant) {
        case SampleVariant::FloydRivest:
        case SampleVariant::Mehlhorn:
            size_term = f_fr(nd);
            break;
        case SampleVariant::Generalized:
            size_term = size_function(nd, st);
            break;
        case SampleVariant::Flr75a:
            size_term = std::pow(nd, 2.0 / 3.0);
            break;
        case SampleVariant::Reischuk:
        case SampleVariant::ReischukSplit:
            size_term = std::pow(nd, st.eps_s);
            break;
    }
    SampleSize out;
    const double want = guarded_ceil(st.alpha * size_term);
    out.s = want >= static_cast<double>(n - 1) ? n - 1 : std::max<Index>(1, static_cast<Index>(want));
    const double s = static_cast<double>(out.s);
    switch (st.variant) {
        case SampleVariant::FloydRivest:
        case SampleVariant::Flr75a:
            out.g = std::sqrt(st.beta * s * ln);
            break;
        case SampleVariant::Mehlhorn:
            // ln(theta s) is clamped at 1 so the gap stays positive for tiny samples.
            out.g = std::sqrt(st.beta * s * std::max(std::log(st.theta * s), 1.0));
            break;
        case SampleVariant::Generalized:
            out.g = std::sqrt(st.beta * s * std::pow(ln, st.eps_l));
            break;
        case SampleVariant::Reischuk:
            out.g = std::sqrt(st.beta * s * std::pow(nd, st.eps));
            break;
        case SampleVariant::ReischukSplit:
            out.g = std::sqrt(st.beta) * std::pow(nd, st.eps_g);
            break;
    }
    return out;
}

PivotRanks pivot_ranks(Index k, Index l, Index r, Index s, double g, bool single_pivot_reset) {
    const Index i = k - l + 1;
    const Index m = r - l + 1;
    const Index r_s = l + s - 1;
    // l - 1 + i s / m = whole + frac with the integer part exact.
    const Index whole = l - 1 + (i * s) / m;
    const long double frac = static_cast<long double>((i * s) % m) / static_cast<long double>(m);
    const long double gap = g;
    const Index raw_u = whole + static_cast<Index>(std::ceil(frac - gap));
    const Index raw_v = whole + static_cast<Index>(std::ceil(frac + gap));
    const bool low = raw_u < l;
    const bool high = raw_v > r_s;
    PivotRanks out{std::max(raw_u, l), std::min(raw_v, r_s)};
    if (single_pivot_reset) {
        if (low && !high) out.k_u = out.k_v;
        else if (high && !low) out.k_v = out.k_u;
    }
    return out;
}

}  // namespace frselect
