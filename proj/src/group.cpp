#include "morava/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace morava::grp {

std::uint32_t Group::power(std::uint32_t x, std::int64_t e) const {
    if (e < 0) return power(inverse_[x], -e);
    std::uint32_t result = 0, base = x;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::uint32_t Group::element_order(std::uint32_t x) const {
    std::uint32_t e = 1, y = x;
    while (y != 0) {
        y = mul(y, x);
        ++e;
    }
    return e;
}

bool Group::is_abelian() const {
    for (std::uint32_t x = 0; x < order_; ++x)
        for (std::uint32_t y = x + 1; y < order_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

std::uint32_t Group::exponent() const {
    std::uint64_t l = 1;
    for (std::uint32_t x = 0; x < order_; ++x)
        l = std::lcm<std::uint64_t>(l, element_order(x));
    return static_cast<std::uint32_t>(l);
}

const std::vector<std::uint16_t>& Group::element_name(std::uint32_t x) const {
    static const std::vector<std::uint16_t> empty;
    return names_.empty() ? empty : names_[x];
}

std::string Group::element_string(std::uint32_t x) const {
    if (names_.empty()) return "e" + std::to_string(x);
    const auto& e = names_[x];
    std::ostringstream os;
    bool printed = false;
    for (std::size_t i = 0; i < generators_.size() && i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << '*';
        os << generators_[i].first;
        if (e[i] > 1) os << '^' << e[i];
        printed = true;
    }
    return printed ? os.str() : "1";
}

int Group::generator_element(const std::string& name) const {
    for (const auto& [n, idx] : generators_)
        if (n == name) return static_cast<int>(idx);
    return -1;
}

GroupPtr Group::from_table(std::vector<std::uint16_t> table, std::uint32_t order,
                           std::vector<std::vector<std::uint16_t>> names,
                           std::vector<std::pair<std::string, std::uint32_t>> generators) {
    if (order == 0 || table.size() != std::size_t(order) * order)
        throw InconsistentPresentation("malformed Cayley table");

    auto g = std::shared_ptr<Group>(new Group());
    g->order_ = order;
    g->table_ = std::move(table);
    g->names_ = std::move(names);
    g->generators_ = std::move(generators);

    const auto& t = g->table_;
    auto at = [&](std::uint32_t x, std::uint32_t y) { return t[std::size_t(x) * order + y]; };

    for (std::uint32_t x = 0; x < order; ++x)
        if (at(0, x) != x || at(x, 0) != x)
            throw InconsistentPresentation("index 0 is not a two-sided identity");

    g->inverse_.assign(order, 0);
    for (std::uint32_t x = 0; x < order; ++x) {
        bool found = false;
        for (std::uint32_t y = 0; y < order; ++y) {
            if (at(x, y) == 0 && at(y, x) == 0) {
                g->inverse_[x] = static_cast<std::uint16_t>(y);
                found = true;
                break;
            }
        }
        if (!found)
            throw InconsistentPresentation("element " + std::to_string(x) +
                                           " has no two-sided inverse");
    }

    if (order <= 512) {
        for (std::uint32_t x = 0; x < order; ++x)
            for (std::uint32_t y = 0; y < order; ++y)
                for (std::uint32_t z = 0; z < order; ++z)
                    if (at(at(x, y), z) != at(x, at(y, z)))
                        throw InconsistentPresentation("associativity fails");
    } else {
        std::mt19937_64 rng(0x6d6f72617661ull);
        for (std::uint64_t k = 0; k < 1'000'000; ++k) {
            auto x = static_cast<std::uint32_t>(rng() % order);
            auto y = static_cast<std::uint32_t>(rng() % order);
            auto z = static_cast<std::uint32_t>(rng() % order);
            if (at(at(x, y), z) != at(x, at(y, z)))
                throw InconsistentPresentation("associativity fails");
        }
    }
    return g;
}

std::vector<std::vector<std::uint16_t>> conjugacy_classes(const Group& g) {
    const std::uint32_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint16_t>> classes;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<std::uint16_t> cls;
        for (std::uint32_t t = 0; t < n; ++t) {
            std::uint32_t y = g.conjugate(x, t);
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(static_cast<std::uint16_t>(y));
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool Subgroup::contains(std::uint32_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

int Subgroup::position_of(std::uint32_t x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) return -1;
    return static_cast<int>(it - elements.begin());
}

bool Subgroup::is_abelian() const {
    for (std::uint16_t x : elements)
        for (std::uint16_t y : elements)
            if (parent->mul(x, y) != parent->mul(y, x)) return false;
    return true;
}

namespace {

std::vector<std::uint16_t> coset_representatives(const Group& g,
                                                 const std::vector<std::uint16_t>& elements) {
    const std::uint32_t n = g.order();
    std::vector<bool> covered(n, false);
    std::vector<std::uint16_t> reps;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        reps.push_back(static_cast<std::uint16_t>(x));
        for (std::uint16_t h : elements) covered[g.mul(x, h)] = true;
    }
    return reps;
}

Subgroup make_subgroup(GroupPtr parent, std::vector<std::uint16_t> elements) {
    std::sort(elements.begin(), elements.end());
    Subgroup s;
    s.coset_reps = coset_representatives(*parent, elements);
    s.elements = std::move(elements);
    s.parent = std::move(parent);
    return s;
}

} // namespace

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::uint32_t>& elems) {
    const std::uint32_t n = g->order();
    for (std::uint32_t e : elems)
        if (e >= n) throw InputError("element index out of range");

    std::vector<bool> in(n, false);
    std::vector<std::uint16_t> members{0};
    in[0] = true;
    std::vector<std::uint16_t> queue{0};
    for (std::uint32_t e : elems) {
        if (!in[e]) {
            in[e] = true;
            members.push_back(static_cast<std::uint16_t>(e));
            queue.push_back(static_cast<std::uint16_t>(e));
        }
    }
    while (!queue.empty()) {
        std::uint16_t x = queue.back();
        queue.pop_back();
        for (std::uint16_t y : std::vector<std::uint16_t>(members)) {
            for (std::uint32_t z : {g->mul(x, y), g->mul(y, x)}) {
                if (!in[z]) {
                    in[z] = true;
                    members.push_back(static_cast<std::uint16_t>(z));
                    queue.push_back(static_cast<std::uint16_t>(z));
                }
            }
        }
    }
    return make_subgroup(g, std::move(members));
}

Subgroup centralizer(const GroupPtr& g, std::uint32_t x) {
    std::vector<std::uint16_t> members;
    for (std::uint32_t y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x)) members.push_back(static_cast<std::uint16_t>(y));
    return make_subgroup(g, std::move(members));
}

Subgroup center(const GroupPtr& g) {
    std::vector<std::uint16_t> members;
    for (std::uint32_t y = 0; y < g->order(); ++y) {
        bool central = true;
        for (std::uint32_t x = 0; x < g->order() && central; ++x)
            if (g->mul(x, y) != g->mul(y, x)) central = false;
        if (central) members.push_back(static_cast<std::uint16_t>(y));
    }
    return make_subgroup(g, std::move(members));
}

bool is_normal(const Subgroup& sub) {
    for (std::uint32_t t = 0; t < sub.parent->order(); ++t)
        for (std::uint16_t x : sub.elements)
            if (!sub.contains(sub.parent->conjugate(x, t))) return false;
    return true;
}

GroupPtr subgroup_as_group(const Subgroup& sub) {
    const auto& el = sub.elements;
    const auto k = static_cast<std::uint32_t>(el.size());
    std::vector<std::uint16_t> table(std::size_t(k) * k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
            int pos = sub.position_of(sub.parent->mul(el[i], el[j]));
            if (pos < 0) throw InconsistentPresentation("subgroup is not closed");
            table[std::size_t(i) * k + j] = static_cast<std::uint16_t>(pos);
        }
    return Group::from_table(std::move(table), k, {}, {});
}

GroupPtr quotient_group(const Subgroup& sub) {
    if (!is_normal(sub)) throw InvalidAction("quotient by a non-normal subgroup");
    const Group& g = *sub.parent;
    const std::uint32_t n = g.order();

    // coset id per element; coset_reps are minimal and sorted, so the
    // identity coset comes first
    std::vector<std::uint32_t> coset_of(n, 0);
    for (std::uint32_t c = 0; c < sub.coset_reps.size(); ++c)
        for (std::uint16_t h : sub.elements)
            coset_of[g.mul(sub.coset_reps[c], h)] = c;

    const auto k = static_cast<std::uint32_t>(sub.coset_reps.size());
    std::vector<std::uint16_t> table(std::size_t(k) * k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            table[std::size_t(i) * k + j] = static_cast<std::uint16_t>(
                coset_of[g.mul(sub.coset_reps[i], sub.coset_reps[j])]);
    return Group::from_table(std::move(table), k, {}, {});
}

std::vector<std::uint32_t> abelian_type(const Group& g) {
    if (!g.is_abelian()) throw InvalidAction("abelian type of a non-abelian group");
    const std::uint32_t n = g.order();

    std::vector<std::uint32_t> type;
    std::uint32_t rest = n;
    for (std::uint32_t q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        // q is prime here since smaller factors are exhausted
        // count elements killed by successive q-th power maps
        std::vector<std::uint32_t> logs; // log_q #{x : x^{q^k} = 1}
        std::uint64_t qk = 1;
        for (;;) {
            std::uint32_t count = 0;
            for (std::uint32_t x = 0; x < n; ++x)
                if (g.power(x, static_cast<std::int64_t>(qk)) == 0) ++count;
            std::uint32_t lg = 0;
            while ((1 != count) && count % q == 0) {
                count /= q;
                ++lg;
            }
            if (count != 1) throw InconsistentPresentation("q-torsion count not a q-power");
            if (!logs.empty() && lg == logs.back()) break;
            logs.push_back(lg);
            qk *= q;
            if (logs.size() > 32) break;
        }
        // logs[k] = sum_i min(lambda_i, k) over the q-part partition lambda
        std::vector<std::uint32_t> geq; // #parts >= k, k = 1..
        for (std::size_t k = 1; k < logs.size(); ++k) geq.push_back(logs[k] - logs[k - 1]);
        for (std::size_t k = 0; k < geq.size(); ++k) {
            std::uint32_t exactly = geq[k] - (k + 1 < geq.size() ? geq[k + 1] : 0);
            std::uint64_t qpow = 1;
            for (std::size_t j = 0; j <= k; ++j) qpow *= q;
            for (std::uint32_t c = 0; c < exactly; ++c)
                type.push_back(static_cast<std::uint32_t>(qpow));
        }
        while (rest % q == 0) rest /= q;
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

std::uint32_t Character::exponent_at(std::uint32_t parent_element) const {
    int pos = sub.position_of(parent_element);
    if (pos < 0) throw InputError("character evaluated outside its subgroup");
    return exponents[static_cast<std::size_t>(pos)];
}

Character character_from_generators(
    const Subgroup& sub,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& generator_exponents,
    std::uint32_t value_order) {
    if (value_order == 0) throw InputError("character value order must be positive");
    const Group& g = *sub.parent;

    constexpr std::uint32_t undefined = ~0u;
    std::vector<std::uint32_t> expo(sub.elements.size(), undefined);
    expo[0] = 0; // identity element is position 0 (element index 0 is minimal)
    std::vector<std::uint32_t> known{0};

    struct Gen {
        int pos;
        std::uint32_t expo;
    };
    std::vector<Gen> gens;
    for (const auto& [el, e] : generator_exponents) {
        int pos = sub.position_of(el);
        if (pos < 0) throw InputError("character generator outside the subgroup");
        gens.push_back({pos, e % value_order});
    }

    // close under right multiplication by the generators, checking
    // multiplicativity on every edge
    for (std::size_t head = 0; head < known.size(); ++head) {
        std::uint32_t xpos = known[head];
        std::uint32_t x = sub.elements[xpos];
        for (const Gen& gen : gens) {
            std::uint32_t y = g.mul(x, sub.elements[static_cast<std::size_t>(gen.pos)]);
            int ypos = sub.position_of(y);
            if (ypos < 0) throw InconsistentPresentation("subgroup not closed");
            std::uint32_t val = (expo[xpos] + gen.expo) % value_order;
            if (expo[static_cast<std::size_t>(ypos)] == undefined) {
                expo[static_cast<std::size_t>(ypos)] = val;
                known.push_back(static_cast<std::uint32_t>(ypos));
            } else if (expo[static_cast<std::size_t>(ypos)] != val) {
                throw InconsistentPresentation("character values are not multiplicative");
            }
        }
    }
    for (std::uint32_t v : expo)
        if (v == undefined)
            throw InputError("character generators do not generate the subgroup");

    // full multiplicativity check across the subgroup
    for (std::size_t i = 0; i < sub.elements.size(); ++i)
        for (std::size_t j = 0; j < sub.elements.size(); ++j) {
            int k = sub.position_of(g.mul(sub.elements[i], sub.elements[j]));
            if ((expo[i] + expo[j]) % value_order != expo[static_cast<std::size_t>(k)])
                throw InconsistentPresentation("character values are not multiplicative");
        }

    return Character{sub, value_order, std::move(expo)};
}

namespace {

// remainder of the counts polynomial modulo the m-th cyclotomic polynomial;
// m must be 1 or a prime power (the p-group setting guarantees this)
std::vector<std::int64_t> cyclotomic_reduce(std::vector<std::int64_t> c, std::uint32_t m) {
    if (m == 1) return c;
    std::uint32_t q = 0;
    for (std::uint32_t d = 2; d <= m; ++d)
        if (m % d == 0) {
            q = d;
            break;
        }
    std::uint32_t mq = m / q; // q^{k-1}
    {
        std::uint32_t check = mq;
        while (check % q == 0) check /= q;
        if (check != 1) throw InputError("character value order is not a prime power");
    }
    // Phi(x) = sum_{j<q} x^{j*mq}, monic of degree m - mq
    const std::uint32_t deg = m - mq;
    for (std::uint32_t i = m; i-- > deg;) {
        std::int64_t lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (std::uint32_t j = 0; j + 1 < q; ++j) c[i - m + mq * (j + 1)] -= lead;
    }
    c.resize(deg == 0 ? 1 : deg);
    return c;
}

} // namespace

std::vector<std::int64_t> ClassFunction::canonical(std::uint32_t x) const {
    return cyclotomic_reduce(counts[x], value_order);
}

bool ClassFunction::values_equal(std::uint32_t x, std::uint32_t y) const {
    return canonical(x) == canonical(y);
}

std::optional<std::int64_t> ClassFunction::integer_value(std::uint32_t x) const {
    auto c = canonical(x);
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

ClassFunction induce_character(const Character& chi) {
    const Subgroup& sub = chi.sub;
    const Group& g = *sub.parent;
    ClassFunction out;
    out.group = sub.parent;
    out.value_order = chi.value_order;
    out.counts.assign(g.order(), std::vector<std::int64_t>(chi.value_order, 0));
    // induced value at x sums chi(t^{-1} x t) over reps with t^{-1} x t
    // inside the subgroup
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint16_t t : sub.coset_reps) {
            std::uint32_t h = g.conjugate(x, t);
            if (sub.contains(h)) out.counts[x][chi.exponent_at(h)] += 1;
        }
    return out;
}

} // namespace morava::grp
