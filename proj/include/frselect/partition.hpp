#pragma once

// In-place partition schemes for the selection drivers.
//
// Strict schemes (A, B, C, D) produce the arrangement
//
//     [l, a) < u   [a, b) = u   [b, c] in (u, v)   (c, d] = v   (d, r] > v
//
// and the ternary scheme A reports b = d + 1, c = a - 1. The poor man's
// schemes (E, F, G) produce the same layout with weak inequalities, and the
// pivot blocks [a, b) and (c, d] hold exactly one pivot copy each.
//
// Every element comparison goes through frselect::compare() and is counted.
// Index comparisons are free.

#include <algorithm>

#include "frselect/core.hpp"

namespace frselect {

/// Cursor state of the five/six part arrangement used by schemes A-D.
///
/// After prepare_quintary():
///   [l_bar, p_bar) = u, [p_bar, p) in (u, v), [p, q] unexamined,
///   (q, r_bar] = v, with i = p - 1 and j = q + 1.
struct QuintaryState {
    Index l_bar = 0;
    Index p_bar = 0;
    Index p = 0;
    Index q = 0;
    Index q_bar = 0;
    Index r_bar = 0;
    Index i = 0;
    Index j = 0;
};

/// Exchanges x[a:b] with x[b+1:c]: the first d = min(b+1-a, c-b) elements of
/// x[a:c] trade places with its last d, as x[a+t] <-> x[c-d+1+t]. No-op when
/// d <= 0.
template <class T>
void vector_swap(Workspace<T>& x, Index a, Index b, Index c) {
    const Index d = std::min(b + 1 - a, c - b);
    if (d <= 0) return;
    FRSELECT_ASSERT(a >= 1 && c <= x.size());
    for (Index t = 0; t < d; ++t) x.swap(a + t, c - d + 1 + t);
}

namespace detail {

// Steps A2-A5 on arrangement
//   [l_bar, p) = v, [p, i] < v, (i, j) unexamined, [j, q] > v, (q, r_bar] = v
// with some x <= v at or below i and some x >= v at or above j.
template <class T>
PartitionBounds ternary_scan(Workspace<T>& x, Index l_bar, Index p, Index i, Index j, Index q,
                             Index r_bar, const T& v, RunCounters& counters) {
    // Scan-overrun guards: the sentinels must stop both cursors inside x.
    [[maybe_unused]] const Index lo = 1;
    [[maybe_unused]] const Index hi = x.size();
    for (;;) {
        auto oi = compare(x[++i], v, counters);
        while (oi < 0) {
            FRSELECT_ASSERT(i < hi);
            oi = compare(x[++i], v, counters);
        }
        auto oj = compare(x[--j], v, counters);
        while (oj > 0) {
            FRSELECT_ASSERT(j > lo);
            oj = compare(x[--j], v, counters);
        }
        if (i < j) {
            x.swap(i, j);
            if (oj == 0) x.swap(i, p++);
            if (oi == 0) x.swap(j, q--);
            continue;
        }
        if (i == j) {
            ++i;
            --j;
        }
        break;
    }
    vector_swap(x, l_bar, p - 1, j);
    vector_swap(x, i, q, r_bar);
    const Index a = l_bar + j - p + 1;
    const Index d = r_bar - q + i - 1;
    return {a, d + 1, a - 1, d};
}

// Steps E2-E4 with sentinels x <= v at or below i and x >= v at or above j.
// Returns the crossed cursors.
template <class T>
std::pair<Index, Index> binary_scan(Workspace<T>& x, Index i, Index j, const T& v,
                                    RunCounters& counters) {
    [[maybe_unused]] const Index lo = i;
    [[maybe_unused]] const Index hi = j;
    for (;;) {
        do {
            ++i;
            FRSELECT_ASSERT(i <= hi);
        } while (compare(x[i], v, counters) < 0);
        do {
            --j;
            FRSELECT_ASSERT(j >= lo);
        } while (compare(x[j], v, counters) > 0);
        if (i < j) {
            x.swap(i, j);
            continue;
        }
        if (i == j) {
            ++i;
            --j;
        }
        return {i, j};
    }
}

}  // namespace detail

/// Scheme A: ternary partition of x[l:r] around v := x[k].
template <class T>
PartitionBounds ternary_A(Workspace<T>& x, Index l, Index r, Index k, RunCounters& counters) {
    FRSELECT_ASSERT(l <= k && k <= r);
    if (l == r) return {l, l + 1, l - 1, l};
    const T v = x[k];
    x.swap(l, k);
    Index l_bar = l;
    Index r_bar = r;
    const auto o = compare(v, x[r], counters);
    if (o < 0) {
        r_bar = r - 1;
    } else if (o > 0) {
        x.swap(l, r);
        l_bar = l + 1;
    }
    // x[l] <= v <= x[r] from here on; the scans need no bounds tests.
    return detail::ternary_scan(x, l_bar, l + 1, l, r, r - 1, r_bar, v, counters);
}

/// Scheme A without its initialization, run on the arrangement left by
/// prepare_quintary() when u == v. Both equal blocks must be nonempty, or the
/// neighbouring sample blocks must supply the scan sentinels.
template <class T>
PartitionBounds ternary_from_state(Workspace<T>& x, const QuintaryState& st, const T& v,
                                   RunCounters& counters) {
    return detail::ternary_scan(x, st.l_bar, st.p_bar, st.p_bar - 1, st.q + 1, st.q, st.r_bar, v,
                                counters);
}

/// Moves the sample's `= v` and `> v` blocks past the unexamined elements.
///
/// Input: [l, ku_minus) < u, [ku_minus, ku_plus] = u, (ku_plus, kv_minus)
/// between, [kv_minus, kv_plus] = v, (kv_plus, r_s] > v, (r_s, r] unexamined.
/// Output: the QuintaryState arrangement with unexamined elements in
/// [kv_minus, q_bar].
template <class T>
QuintaryState prepare_quintary(Workspace<T>& x, [[maybe_unused]] Index l, Index r, Index r_s, Index ku_minus,
                               Index ku_plus, Index kv_minus, Index kv_plus) {
    FRSELECT_ASSERT(l <= ku_minus && kv_plus <= r_s && r_s <= r);
    QuintaryState st;
    st.l_bar = ku_minus;
    st.p_bar = ku_plus + 1;
    st.r_bar = r - r_s + kv_plus;
    st.q_bar = st.r_bar - kv_plus + kv_minus - 1;
    vector_swap(x, kv_plus + 1, r_s, r);
    vector_swap(x, kv_minus, kv_plus, st.r_bar);
    st.p = kv_minus;
    st.q = st.q_bar;
    st.i = st.p - 1;
    st.j = st.q + 1;
    return st;
}

/// Scheme B (u < v): each element is compared to v first, then to u only if
/// it is below v.
template <class T>
PartitionBounds quintary_B(Workspace<T>& x, const QuintaryState& st, const T& u, const T& v,
                           RunCounters& counters) {
    const Index l_bar = st.l_bar;
    const Index r_bar = st.r_bar;
    Index p_bar = st.p_bar, p = st.p, q = st.q, i = st.i, j = st.j;
    for (;;) {
        auto oiv = compare(x[++i], v, counters);
        while (oiv < 0) {
            const auto oiu = compare(x[i], u, counters);
            if (oiu >= 0) {
                x.swap(i, p);
                if (oiu == 0) x.swap(p, p_bar++);
                ++p;
            }
            oiv = compare(x[++i], v, counters);
        }
        for (;;) {
            const auto ojv = compare(x[--j], v, counters);
            if (ojv < 0) break;
            if (ojv == 0) x.swap(j, q--);
        }
        if (i >= j) break;
        x.swap(i, j);
        const auto ou = compare(x[i], u, counters);
        if (ou >= 0) {
            x.swap(i, p);
            if (ou == 0) x.swap(p, p_bar++);
            ++p;
        }
        if (oiv == 0) x.swap(j, q--);
    }
    const Index a = l_bar + j - p + 1;
    const Index b = p_bar - p + i;
    const Index c = j;
    const Index d = r_bar - q + i - 1;
    vector_swap(x, p_bar, p - 1, j);
    vector_swap(x, l_bar, p_bar - 1, b - 1);
    vector_swap(x, i, q, r_bar);
    return {a, b, c, d};
}

/// Scheme C (u < v): mirror of B, comparing to u first.
template <class T>
PartitionBounds quintary_C(Workspace<T>& x, const QuintaryState& st, const T& u, const T& v,
                           RunCounters& counters) {
    const Index l_bar = st.l_bar;
    const Index r_bar = st.r_bar;
    Index q_bar = st.q_bar;
    // Move the sample's between block next to the `= v` block.
    Index p = st.p_bar;
    Index q = st.q_bar - st.p + st.p_bar;
    Index i = p - 1, j = q + 1;
    vector_swap(x, st.p_bar, st.p - 1, st.q_bar);
    for (;;) {
        for (;;) {
            const auto oiu = compare(x[++i], u, counters);
            if (oiu > 0) break;
            if (oiu == 0) x.swap(i, p++);
        }
        auto oju = compare(x[--j], u, counters);
        while (oju > 0) {
            const auto ojv = compare(x[j], v, counters);
            if (ojv <= 0) {
                x.swap(j, q);
                if (ojv == 0) x.swap(q, q_bar--);
                --q;
            }
            oju = compare(x[--j], u, counters);
        }
        if (i >= j) break;
        x.swap(i, j);
        if (oju == 0) x.swap(i, p++);
        const auto ov = compare(x[j], v, counters);
        if (ov <= 0) {
            x.swap(j, q);
            if (ov == 0) x.swap(q, q_bar--);
            --q;
        }
    }
    const Index a = l_bar + j - p + 1;
    const Index b = i;
    const Index c = q_bar - q + j;
    const Index d = r_bar - q + i - 1;
    vector_swap(x, i, q, q_bar);
    vector_swap(x, c + 1, q_bar, r_bar);
    vector_swap(x, l_bar, p - 1, j);
    return {a, b, c, d};
}

/// Scheme D (u < v): same result as B, with bounds-checked scans instead of
/// the two sentinel comparisons. Kept for cross-checking B.
template <class T>
PartitionBounds quintary_D(Workspace<T>& x, const QuintaryState& st, const T& u, const T& v,
                           RunCounters& counters) {
    const Index l_bar = st.l_bar;
    const Index r_bar = st.r_bar;
    Index p_bar = st.p_bar, p = st.p, q = st.q, i = st.p, j = st.q;
    for (;;) {
        using Ordering = decltype(u <=> v);
        Ordering oiv = Ordering::equivalent;
        while (i <= j) {
            oiv = compare(x[i], v, counters);
            if (oiv >= 0) break;
            const auto ou = compare(x[i], u, counters);
            if (ou >= 0) {
                x.swap(i, p);
                if (ou == 0) x.swap(p, p_bar++);
                ++p;
            }
            ++i;
        }
        while (i <= j) {
            const auto ojv = compare(x[j], v, counters);
            if (ojv < 0) break;
            if (ojv == 0) x.swap(j, q--);
            --j;
        }
        if (i >= j) break;
        x.swap(i, j);
        const auto ou = compare(x[i], u, counters);
        if (ou >= 0) {
            x.swap(i, p);
            if (ou == 0) x.swap(p, p_bar++);
            ++p;
        }
        if (oiv == 0) x.swap(j, q--);
        ++i;
        --j;
    }
    const Index a = l_bar + j - p + 1;
    const Index b = p_bar - p + i;
    const Index c = j;
    const Index d = r_bar - q + i - 1;
    vector_swap(x, p_bar, p - 1, j);
    vector_swap(x, l_bar, p_bar - 1, b - 1);
    vector_swap(x, i, q, r_bar);
    return {a, b, c, d};
}

/// Scheme E: binary partition of x[l:r] around v := x[k] with weak blocks
/// [l, a) <= v, [a, d] = v, (d, r] >= v; usually a == d.
template <class T>
PartitionBounds binary_E(Workspace<T>& x, Index l, Index r, Index k, RunCounters& counters) {
    FRSELECT_ASSERT(l <= k && k <= r);
    if (l == r) return {l, l + 1, l - 1, l};
    const T v = x[k];
    x.swap(l, k);
    Index pivot = l;
    if (compare(v, x[r], counters) > 0) {
        x.swap(l, r);
        pivot = r;
    }
    const auto [i, j] = detail::binary_scan(x, l, r, v, counters);
    if (pivot != r) {
        x.swap(pivot, j);
        return {j, i, j - 1, i - 1};
    }
    x.swap(i, pivot);
    return {j + 1, i + 1, j, i};
}

/// Scheme E on the poor man's arrangement when u == v:
///   [l_bar, p) = v, [p, r_bar) unexamined, x[r_bar] = v,
/// with some x <= v below p. Cleanup as in scheme A.
template <class T>
PartitionBounds pm_ternary_E(Workspace<T>& x, Index l_bar, Index p, Index r_bar, const T& v,
                             RunCounters& counters) {
    const auto [i, j] = detail::binary_scan(x, p - 1, r_bar, v, counters);
    const Index a = l_bar + j - p + 1;
    const Index d = i;
    vector_swap(x, l_bar, p - 1, j);
    x.swap(d, r_bar);
    return {a, d + 1, a - 1, d};
}

/// Scheme E on x[l:r] whose pivot v already sits at x[l], with the unexamined
/// elements in (l, j) and x >= v somewhere at or above j.
template <class T>
PartitionBounds pm_binary_pivot_left(Workspace<T>& x, Index l, Index j, const T& v,
                                     RunCounters& counters) {
    const auto [ci, cj] = detail::binary_scan(x, l, j, v, counters);
    x.swap(l, cj);
    return {cj, ci, cj - 1, ci - 1};
}

/// Scheme F (u < v, k in the lower half). Arrangement on entry:
///   x[l_bar] = u, (l_bar, p) in [u, v], [p, r_bar) unexamined, x[r_bar] = v.
template <class T>
PartitionBounds pm_quintary_F(Workspace<T>& x, Index l_bar, Index p, Index r_bar, const T& u,
                              const T& v, RunCounters& counters) {
    Index i = p - 1, j = r_bar;
    for (;;) {
        for (;;) {
            if (compare(x[++i], v, counters) >= 0) break;
            if (compare(x[i], u, counters) <= 0) continue;
            x.swap(i, p++);
        }
        while (compare(x[--j], v, counters) >= 0) {
        }
        if (i >= j) break;
        x.swap(i, j);
        if (compare(x[i], u, counters) > 0) x.swap(i, p++);
    }
    const Index a = l_bar + i - p;
    const Index d = j + 1;
    vector_swap(x, l_bar + 1, p - 1, j);
    x.swap(l_bar, a);
    x.swap(d, r_bar);
    return {a, a + 1, j, d};
}

/// Scheme G (u < v, k in the upper half), on the same entry arrangement as F.
template <class T>
PartitionBounds pm_quintary_G(Workspace<T>& x, Index l_bar, Index p, Index r_bar, const T& u,
                              const T& v, RunCounters& counters) {
    Index q = r_bar - p + l_bar;
    Index i = l_bar, j = q + 1;
    vector_swap(x, l_bar + 1, p - 1, r_bar - 1);
    for (;;) {
        while (compare(x[++i], u, counters) <= 0) {
        }
        for (;;) {
            if (compare(x[--j], u, counters) <= 0) break;
            if (compare(x[j], v, counters) >= 0) continue;
            x.swap(j, q--);
        }
        if (i >= j) break;
        x.swap(i, j);
        if (compare(x[j], v, counters) < 0) x.swap(j, q--);
    }
    const Index a = j;
    const Index d = r_bar - q + j;
    x.swap(l_bar, a);
    vector_swap(x, i, q, r_bar - 1);
    x.swap(d, r_bar);
    return {a, a + 1, d - 1, d};
}

// One-pass verifiers. They use operator< and operator== so they never touch
// the instrumented comparison path.

/// Strict quintary (or ternary-encoded) block predicates on x[l:r].
template <class T>
bool check_strict_blocks(const Workspace<T>& x, Index l, Index r, const PartitionBounds& pb,
                         const T& u, const T& v) {
    if (pb.a < l || pb.d > r) return false;
    const bool ternary = pb.b == pb.d + 1 && pb.c == pb.a - 1;
    for (Index m = l; m <= r; ++m) {
        const T& e = x[m];
        bool ok;
        if (ternary) {
            if (m < pb.a) ok = e < v;
            else if (m <= pb.d) ok = e == v;
            else ok = v < e;
        } else {
            if (m < pb.a) ok = e < u;
            else if (m < pb.b) ok = e == u;
            else if (m <= pb.c) ok = u < e && e < v;
            else if (m <= pb.d) ok = e == v;
            else ok = v < e;
        }
        if (!ok) return false;
    }
    return true;
}

/// Weak block predicates of the poor man's schemes on x[l:r].
template <class T>
bool check_weak_blocks(const Workspace<T>& x, Index l, Index r, const PartitionBounds& pb,
                       const T& u, const T& v) {
    if (pb.a < l || pb.d > r) return false;
    const bool ternary = pb.b == pb.d + 1 && pb.c == pb.a - 1;
    for (Index m = l; m <= r; ++m) {
        const T& e = x[m];
        bool ok;
        if (ternary) {
            if (m < pb.a) ok = !(v < e);
            else if (m <= pb.d) ok = e == v;
            else ok = !(e < v);
        } else {
            if (m < pb.a) ok = !(u < e);
            else if (m < pb.b) ok = e == u;
            else if (m <= pb.c) ok = !(e < u) && !(v < e);
            else if (m <= pb.d) ok = e == v;
            else ok = !(e < v);
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace frselect
