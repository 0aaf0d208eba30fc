#include "morava/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morava::fp {

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& reducers,
                     std::uint64_t* step_counter, std::uint64_t max_steps) {
    const RingPtr& ring = f.ring();
    std::uint64_t local_steps = 0;
    std::uint64_t& steps = step_counter ? *step_counter : local_steps;

    std::vector<Term> remainder;
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term lt = h.leading_term();
        const Polynomial* divisor = nullptr;
        for (const Polynomial& g : reducers) {
            if (!g.is_zero() && divides(g.leading_monomial(), lt.mon)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(lt);
            // drop the leading term and keep reducing the tail
            std::vector<Term> tail(h.terms().begin() + 1, h.terms().end());
            h = Polynomial::from_sorted_terms(ring, std::move(tail));
            continue;
        }
        if (++steps > max_steps)
            throw BudgetExceeded("reduction step budget exceeded", steps);
        const Term& glt = divisor->leading_term();
        Term q{mono_div(lt.mon, glt.mon), ring->mul(lt.coef, ring->inv(glt.coef))};
        h = h - divisor->times_term(q);
    }
    return Polynomial::from_sorted_terms(ring, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    std::uint64_t steps = 0;
    return reduce_by(f, gb.gens, &steps,
                     std::numeric_limits<std::uint64_t>::max());
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const RingPtr& ring = f.ring();
    const Term& ltf = f.leading_term();
    const Term& ltg = g.leading_term();
    Monomial lcm = mono_lcm(ltf.mon, ltg.mon);
    Term uf{mono_div(lcm, ltf.mon), ring->inv(ltf.coef)};
    Term ug{mono_div(lcm, ltg.mon), ring->inv(ltg.coef)};
    return f.times_term(uf) - g.times_term(ug);
}

struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint64_t idx; // creation sequence, the deterministic tie-breaker
};

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, BuchbergerLimits limits) {
    RingPtr ring;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) { ring = g.ring(); break; }
    if (!ring) {
        if (gens.empty()) throw InputError("buchberger: empty generator list");
        return GroebnerBasis{gens.front().ring(), {}};
    }

    std::vector<Polynomial> basis; // monic
    std::vector<Pair> pairs;
    std::uint64_t next_pair_idx = 0;
    std::uint64_t steps = 0;

    auto product_coprime = [](const Monomial& a, const Monomial& b) {
        for (std::uint16_t k = 0; k < a.n; ++k)
            if (a.e[k] != 0 && b.e[k] != 0) return false;
        return true;
    };

    // Gebauer-Moller update of the pair set on arrival of basis element t
    auto update_pairs = [&](std::uint32_t t) {
        const Monomial& lmt = basis[t].leading_monomial();
        // B criterion: discard old (i,j) whose lcm is a proper multiple of lmt
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (Pair& p : pairs) {
            bool drop = divides(lmt, p.lcm) &&
                        !(mono_lcm(basis[p.i].leading_monomial(), lmt) == p.lcm) &&
                        !(mono_lcm(basis[p.j].leading_monomial(), lmt) == p.lcm);
            if (!drop) kept.push_back(std::move(p));
        }
        pairs = std::move(kept);

        std::vector<Pair> fresh;
        for (std::uint32_t i = 0; i < t; ++i) {
            if (basis[i].is_zero()) continue;
            fresh.push_back({i, t, mono_lcm(basis[i].leading_monomial(), lmt), 0});
        }
        // M criterion: drop (i,t) when another new lcm strictly divides it
        std::vector<bool> dead(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || dead[a] || dead[b]) continue;
                if (divides(fresh[b].lcm, fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
                    dead[a] = true;
            }
        // F criterion: keep one pair per surviving lcm value
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (!dead[b] && fresh[b].lcm == fresh[a].lcm) dead[b] = true;
        }
        // P criterion: coprime leading terms reduce to zero
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (dead[a]) continue;
            if (product_coprime(basis[fresh[a].i].leading_monomial(), lmt)) dead[a] = true;
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (dead[a]) continue;
            fresh[a].idx = next_pair_idx++;
            pairs.push_back(std::move(fresh[a]));
        }
    };

    auto add_element = [&](Polynomial f) {
        f = f.monic();
        basis.push_back(std::move(f));
        if (basis.size() > limits.max_basis)
            throw BudgetExceeded("basis size budget exceeded", basis.size());
        update_pairs(static_cast<std::uint32_t>(basis.size() - 1));
    };

    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        Polynomial r = reduce_by(g, basis, &steps, limits.max_reduction_steps);
        if (!r.is_zero()) add_element(std::move(r));
    }

    std::uint64_t processed = 0;
    while (!pairs.empty()) {
        if (++processed % 4096 == 0)
            log_debug("buchberger: " + std::to_string(processed) + " pairs, basis " +
                      std::to_string(basis.size()));
        // ascending lcm exponent sum, ties by pair index
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.lcm.total < b.lcm.total ||
                (a.lcm.total == b.lcm.total && a.idx < b.idx))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        Polynomial s = s_polynomial(basis[p.i], basis[p.j]);
        Polynomial r = reduce_by(s, basis, &steps, limits.max_reduction_steps);
        if (!r.is_zero()) add_element(std::move(r));
    }

    // minimalize: drop generators whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (divides(mj, mi) && (!(mi == mj) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce tails
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(
            reduce_by(minimal[i], others, &steps, limits.max_reduction_steps).monic());
    }

    // deterministic presentation: sort by leading monomial, descending
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), ring->order()) > 0;
    });
    return GroebnerBasis{ring, std::move(reduced)};
}

namespace {

struct Staircase {
    std::vector<Monomial> lms;        // leading monomials inside the box
    std::vector<std::uint32_t> bound; // per-variable pure-power exponent
    std::uint64_t box = 1;
};

// nullopt when the quotient is infinite
std::optional<Staircase> staircase_of(const GroebnerBasis& gb) {
    const std::size_t nv = gb.ring->nvars();
    Staircase st;
    for (const Polynomial& g : gb.gens) {
        if (g.is_zero()) continue;
        if (g.leading_monomial().is_one()) { // unit ideal
            st.bound.assign(nv, 0);
            st.box = 0;
            return st;
        }
    }
    st.bound.assign(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        std::uint32_t best = 0;
        for (const Polynomial& g : gb.gens) {
            const Monomial& m = g.leading_monomial();
            if (m.e[v] == 0 || m.e[v] != m.total) continue; // not a pure power of v
            if (best == 0 || m.e[v] < best) best = m.e[v];
        }
        if (best == 0) return std::nullopt;
        st.bound[v] = best;
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (st.box > (std::uint64_t(1) << 33) / std::max<std::uint32_t>(st.bound[v], 1))
            throw SizeLimit("standard-monomial box too large to enumerate");
        st.box *= st.bound[v];
    }
    // only leading monomials that meet the box can exclude anything
    for (const Polynomial& g : gb.gens) {
        const Monomial& m = g.leading_monomial();
        bool relevant = true;
        for (std::size_t v = 0; v < nv; ++v)
            if (m.e[v] >= st.bound[v]) { relevant = false; break; }
        if (relevant) st.lms.push_back(m);
    }
    return st;
}

inline bool excluded(const Staircase& st, const std::uint16_t* expo, std::size_t nv) {
    for (const Monomial& m : st.lms) {
        bool div = true;
        for (std::size_t v = 0; v < nv; ++v)
            if (m.e[v] > expo[v]) { div = false; break; }
        if (div) return true;
    }
    return false;
}

} // namespace

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb, Kernel kernel) {
    const std::size_t nv = gb.ring->nvars();
    auto st = staircase_of(gb);
    if (!st) return std::nullopt;
    if (st->box == 0) return 0;

    std::uint64_t count = 0;
    if (kernel == Kernel::parallel) {
        const std::int64_t box = static_cast<std::int64_t>(st->box);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
        for (std::int64_t flat = 0; flat < box; ++flat) {
            std::uint16_t expo[PolyRing::max_vars] = {};
            std::uint64_t rest = static_cast<std::uint64_t>(flat);
            for (std::size_t v = 0; v < nv; ++v) {
                expo[v] = static_cast<std::uint16_t>(rest % st->bound[v]);
                rest /= st->bound[v];
            }
            if (!excluded(*st, expo, nv)) ++count;
        }
    } else {
        std::uint16_t expo[PolyRing::max_vars] = {};
        for (std::uint64_t flat = 0; flat < st->box; ++flat) {
            if (!excluded(*st, expo, nv)) ++count;
            for (std::size_t v = 0; v < nv; ++v) {
                if (++expo[v] < st->bound[v]) break;
                expo[v] = 0;
            }
        }
    }
    return count;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t cap) {
    auto st = staircase_of(gb);
    if (!st) throw Error("standard monomials of an infinite quotient");
    const std::size_t nv = gb.ring->nvars();
    std::vector<Monomial> out;
    std::uint16_t expo[PolyRing::max_vars] = {};
    for (std::uint64_t flat = 0; flat < st->box; ++flat) {
        if (!excluded(*st, expo, nv)) {
            Monomial m = Monomial::one(nv);
            for (std::size_t v = 0; v < nv; ++v) {
                m.e[v] = expo[v];
                m.total += expo[v];
            }
            out.push_back(m);
            if (out.size() > cap) throw SizeLimit("standard-monomial list over cap");
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (++expo[v] < st->bound[v]) break;
            expo[v] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, gb.ring->order()) < 0;
    });
    return out;
}

Polynomial solve_fixed_point(const Polynomial& equation, std::size_t var,
                             const std::vector<Polynomial>& reducers,
                             unsigned max_iter) {
    for (const Polynomial& r : reducers)
        for (const Term& t : r.terms())
            if (t.mon.e[var] != 0)
                throw InputError("fixed-point reducers must not involve the solved variable");

    const RingPtr& ring = equation.ring();
    auto step = [&](const Polynomial& current) {
        std::map<std::size_t, Polynomial> bind{{var, current}};
        return reduce_by(equation.substitute(bind), reducers);
    };

    Polynomial cur = step(Polynomial::zero(ring));
    for (unsigned k = 0; k < max_iter; ++k) {
        Polynomial next = step(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw NoStabilization("fixed-point iteration did not stabilize after " +
                          std::to_string(max_iter) + " steps");
}

} // namespace morava::fp
