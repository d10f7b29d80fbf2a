#include "frselect/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace frselect {

NormalizedCounts normalize(const RunCounters& counters, std::uint64_t n, double f_n) {
    if (n == 0) throw std::invalid_argument("normalize needs n >= 1");
    if (!(f_n > 0)) throw std::invalid_argument("normalize needs f_n > 0");
    const double nd = static_cast<double>(n);
    const double c = static_cast<double>(counters.comparisons);
    NormalizedCounts out;
    out.comparisons_per_n = c / nd;
    out.partition_size_per_n = static_cast<double>(counters.partition_size_sum) / nd;
    out.gamma = (c - 1.5 * nd) / f_n;
    out.sample_percent_of_n = 100.0 * static_cast<double>(counters.sample_size_sum) / nd;
    const double ln = std::log(nd);
    if (n == 1) {
        out.partitions_per_ln_n = std::numeric_limits<double>::quiet_NaN();
        out.sselect_calls_per_ln_n = std::numeric_limits<double>::quiet_NaN();
    } else {
        out.partitions_per_ln_n = static_cast<double>(counters.select_partitions) / ln;
        out.sselect_calls_per_ln_n = static_cast<double>(counters.sselect_calls) / ln;
    }
    return out;
}

}  // namespace frselect
