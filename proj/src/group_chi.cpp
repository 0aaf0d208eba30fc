#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "morava/group.hpp"

namespace morava::grp {

namespace {

// An orbit of the simultaneous conjugation action is counted once, at its
// lexicographically smallest tuple. A tuple is counted iff no conjugation
// moves it strictly lower.
bool tuple_is_orbit_min(const Group& g, const std::uint32_t* tup, unsigned s) {
    const std::uint32_t n = g.order();
    for (std::uint32_t t = 1; t < n; ++t) {
        int cmp = 0;
        for (unsigned a = 0; a < s; ++a) {
            std::uint32_t c = g.conjugate(tup[a], t);
            if (c != tup[a]) {
                cmp = c < tup[a] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) return false;
    }
    return true;
}

bool tuple_commutes(const Group& g, const std::uint32_t* tup, unsigned s) {
    for (unsigned a = 0; a < s; ++a)
        for (unsigned b = a + 1; b < s; ++b)
            if (g.mul(tup[a], tup[b]) != g.mul(tup[b], tup[a])) return false;
    return true;
}

// Reference kernel: plain scan of the full tuple space.
std::uint64_t chi_naive_serial(const Group& g, unsigned s) {
    const std::uint32_t n = g.order();
    std::uint64_t total = 1;
    for (unsigned a = 0; a < s; ++a) total *= n;

    std::uint64_t count = 0;
    std::uint32_t tup[8] = {};
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        std::uint64_t rest = flat;
        for (unsigned a = 0; a < s; ++a) {
            tup[a] = static_cast<std::uint32_t>(rest % n);
            rest /= n;
        }
        if (tuple_commutes(g, tup, s) && tuple_is_orbit_min(g, tup, s)) ++count;
    }
    return count;
}

// OpenMP kernel: same scan, partitioned over the leading tuple slot.
std::uint64_t chi_naive_parallel(const Group& g, unsigned s) {
    const std::uint32_t n = g.order();
    std::uint64_t inner = 1;
    for (unsigned a = 1; a < s; ++a) inner *= n;

    std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
#endif
    for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
        std::uint32_t tup[8] = {};
        tup[0] = static_cast<std::uint32_t>(first);
        for (std::uint64_t flat = 0; flat < inner; ++flat) {
            std::uint64_t rest = flat;
            for (unsigned a = 1; a < s; ++a) {
                tup[a] = static_cast<std::uint32_t>(rest % n);
                rest /= n;
            }
            if (tuple_commutes(g, tup, s) && tuple_is_orbit_min(g, tup, s)) ++count;
        }
    }
    return count;
}

std::uint64_t ipow_saturating(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
        if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
            return std::numeric_limits<std::uint64_t>::max();
        r *= b;
    }
    return r;
}

// chi_s(G) = sum over conjugacy class representatives r of
// chi_{s-1}(C_G(r)); abelian groups short-circuit to |A|^s.
std::uint64_t chi_chained(const GroupPtr& g, unsigned s) {
    if (s == 0) return 1;
    if (g->is_abelian()) return ipow_saturating(g->order(), s);
    if (s == 1) return conjugacy_classes(*g).size();
    std::uint64_t total = 0;
    for (const auto& cls : conjugacy_classes(*g)) {
        Subgroup cent = centralizer(g, cls.front());
        total += chi_chained(subgroup_as_group(cent), s - 1);
    }
    return total;
}

GroupPtr shallow_copy(const Group& g) {
    // the chained strategy needs shared ownership; rebuild from the table
    std::vector<std::uint16_t> table(std::size_t(g.order()) * g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y)
            table[std::size_t(x) * g.order() + y] = static_cast<std::uint16_t>(g.mul(x, y));
    return Group::from_table(std::move(table), g.order(), {}, {});
}

} // namespace

std::uint64_t commuting_tuple_class_count(const Group& g, unsigned s, ChiOptions opts) {
    if (s == 0 || s > 6) throw InputError("tuple length s must be between 1 and 6");

    const std::uint32_t n = g.order();
    std::uint64_t tuples = 1;
    bool over_budget = false;
    for (unsigned a = 0; a < s; ++a) {
        if (tuples > opts.budget / n) {
            over_budget = true;
            break;
        }
        tuples *= n;
    }
    if (over_budget || tuples > opts.budget) {
        if (opts.strategy == ChiStrategy::naive_serial ||
            opts.strategy == ChiStrategy::naive_parallel)
            throw BudgetExceeded("tuple enumeration over budget", ipow_saturating(n, s));
        // fall through to the chained strategy
        if (s > 3 && std::uint64_t(n) * n > opts.budget)
            throw BudgetExceeded("tuple enumeration over budget", ipow_saturating(n, s));
        return chi_chained(shallow_copy(g), s);
    }

    switch (opts.strategy) {
        case ChiStrategy::naive_serial: return chi_naive_serial(g, s);
        case ChiStrategy::chained: return chi_chained(shallow_copy(g), s);
        case ChiStrategy::naive_parallel:
        case ChiStrategy::automatic: return chi_naive_parallel(g, s);
    }
    throw Error("unreachable");
}

} // namespace morava::grp
