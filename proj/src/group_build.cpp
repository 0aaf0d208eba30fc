#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "morava/group.hpp"

namespace morava::grp {

namespace {

bool is_prime_power(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        return n == 1;
    }
    return false;
}

// words: name^int joined by '*'; "1" or "" is the identity
std::vector<std::pair<std::string, std::uint32_t>> parse_word(const std::string& text) {
    std::vector<std::pair<std::string, std::uint32_t>> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) return out;
    for (;;) {
        skip_ws();
        if (pos < text.size() && text[pos] == '1') {
            ++pos;
        } else {
            if (pos >= text.size() || !(text[pos] >= 'a' && text[pos] <= 'z'))
                throw InputError("bad word '" + text + "': expected generator name");
            std::size_t start = pos;
            while (pos < text.size() && ((text[pos] >= 'a' && text[pos] <= 'z') ||
                                         (text[pos] >= '0' && text[pos] <= '9')))
                ++pos;
            std::string name = text.substr(start, pos - start);
            std::uint32_t exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw InputError("bad word '" + text + "': expected exponent");
                exp = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    exp = exp * 10 + static_cast<std::uint32_t>(text[pos++] - '0');
            }
            out.emplace_back(std::move(name), exp);
        }
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw InputError("bad word '" + text + "': expected '*'");
        ++pos;
    }
    return out;
}

struct Stage {
    // group on the first m generators; elements are mixed-radix exponent
    // vectors with generator 0 varying fastest
    std::uint32_t size = 1;
    std::vector<std::uint32_t> table; // size x size
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return table[std::size_t(x) * size + y];
    }
};

} // namespace

GroupPtr build_group(const GroupSpec& spec) {
    const std::size_t k = spec.generators.size();
    std::map<std::string, std::size_t> gen_pos;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& g = spec.generators[i];
        if (g.name.empty() || gen_pos.count(g.name))
            throw InputError("generator names must be nonempty and unique");
        if (!is_prime_power(g.order))
            throw InputError("generator order " + std::to_string(g.order) +
                             " is not a prime power");
        gen_pos[g.name] = i;
    }

    std::uint64_t full_order = 1;
    for (const auto& g : spec.generators) {
        full_order *= g.order;
        if (full_order > default_product_cap)
            throw SizeLimit("group order exceeds cap " + std::to_string(default_product_cap));
    }

    // conjugation rule per (acted, actor): image word; power rule per gen
    std::map<std::pair<std::size_t, std::size_t>, std::string> conj;
    for (const auto& r : spec.conjugations) {
        auto acted = gen_pos.find(r.acted);
        auto actor = gen_pos.find(r.actor);
        if (acted == gen_pos.end() || actor == gen_pos.end())
            throw InputError("conjugation rule references undeclared generator");
        if (acted->second >= actor->second)
            throw UnsupportedRule("conjugation must rewrite an earlier generator by a "
                                  "later one: " +
                                  r.acted + " by " + r.actor);
        if (!conj.emplace(std::make_pair(acted->second, actor->second), r.image).second)
            throw InputError("duplicate conjugation rule for " + r.acted + " by " + r.actor);
    }
    std::map<std::size_t, std::string> powers;
    for (const auto& r : spec.powers) {
        auto gen = gen_pos.find(r.gen);
        if (gen == gen_pos.end()) throw InputError("power rule references undeclared generator");
        if (!powers.emplace(gen->second, r.image).second)
            throw InputError("duplicate power rule for " + r.gen);
    }

    // evaluate a word inside stage m (generators 0..m-1 available)
    std::vector<std::uint32_t> radix(k, 1); // element index of generator i
    {
        std::uint32_t acc = 1;
        for (std::size_t i = 0; i < k; ++i) {
            radix[i] = acc;
            acc *= spec.generators[i].order;
        }
    }
    auto word_in_stage = [&](const Stage& st, std::size_t m, const std::string& text,
                             const std::string& what) {
        std::uint32_t x = 0;
        for (const auto& [name, exp] : parse_word(text)) {
            auto it = gen_pos.find(name);
            if (it == gen_pos.end())
                throw InputError(what + ": undeclared generator '" + name + "'");
            if (it->second >= m)
                throw UnsupportedRule(what + ": image not expressible below actor (uses '" +
                                      name + "')");
            std::uint32_t g = radix[it->second];
            for (std::uint32_t e = 0; e < exp; ++e) x = st.mul(x, g);
        }
        return x;
    };

    Stage st;
    st.size = 1;
    st.table = {0};

    for (std::size_t m = 0; m < k; ++m) {
        const std::uint32_t n = spec.generators[m].order;
        const std::uint32_t prev = st.size;

        // sigma = conjugation by the new generator, as a permutation of the
        // previous stage, extended multiplicatively from the declared images
        std::vector<std::uint32_t> gen_image(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto it = conj.find(std::make_pair(i, m));
            gen_image[i] = it == conj.end()
                               ? radix[i]
                               : word_in_stage(st, m, it->second,
                                               "conjugation of " + spec.generators[i].name +
                                                   " by " + spec.generators[m].name);
        }
        std::vector<std::uint32_t> sigma(prev);
        for (std::uint32_t x = 0; x < prev; ++x) {
            std::uint32_t img = 0, rest = x;
            for (std::size_t i = 0; i < m; ++i) {
                std::uint32_t e = rest % spec.generators[i].order;
                rest /= spec.generators[i].order;
                for (std::uint32_t c = 0; c < e; ++c) img = st.mul(img, gen_image[i]);
            }
            sigma[x] = img;
        }
        for (std::uint32_t x = 0; x < prev; ++x)
            for (std::uint32_t y = 0; y < prev; ++y)
                if (sigma[st.mul(x, y)] != st.mul(sigma[x], sigma[y]))
                    throw InconsistentPresentation(
                        "conjugation by " + spec.generators[m].name +
                        " does not extend to an automorphism");
        {
            std::vector<bool> hit(prev, false);
            for (std::uint32_t x = 0; x < prev; ++x) hit[sigma[x]] = true;
            for (std::uint32_t x = 0; x < prev; ++x)
                if (!hit[x])
                    throw InconsistentPresentation("conjugation by " +
                                                   spec.generators[m].name + " is not bijective");
        }

        // power element w with g^n = w (identity when split)
        std::uint32_t w = 0;
        if (auto it = powers.find(m); it != powers.end())
            w = word_in_stage(st, m, it->second, "power rule for " + spec.generators[m].name);

        // sigma^n must equal conjugation by w, and w must be sigma-fixed
        if (sigma[w] != w)
            throw InconsistentPresentation("power-rule image is not fixed by conjugation");
        {
            std::uint32_t winv = 0;
            for (std::uint32_t c = 0; c < prev; ++c)
                if (st.mul(w, c) == 0) {
                    winv = c;
                    break;
                }
            for (std::uint32_t x = 0; x < prev; ++x) {
                std::uint32_t y = x;
                for (std::uint32_t e = 0; e < n; ++e) y = sigma[y];
                if (y != st.mul(st.mul(winv, x), w))
                    throw InconsistentPresentation(
                        "declared order of " + spec.generators[m].name +
                        " is inconsistent with its conjugation action");
            }
        }

        // tau = sigma^{-1}; tau_pow[e] moves the new generator's e-th power
        // left past a previous-stage element
        std::vector<std::uint32_t> tau(prev);
        for (std::uint32_t x = 0; x < prev; ++x) tau[sigma[x]] = x;
        std::vector<std::vector<std::uint32_t>> tau_pow(n, std::vector<std::uint32_t>(prev));
        for (std::uint32_t x = 0; x < prev; ++x) tau_pow[0][x] = x;
        for (std::uint32_t e = 1; e < n; ++e)
            for (std::uint32_t x = 0; x < prev; ++x) tau_pow[e][x] = tau[tau_pow[e - 1][x]];

        Stage next;
        next.size = prev * n;
        next.table.assign(std::size_t(next.size) * next.size, 0);
        for (std::uint32_t e1 = 0; e1 < n; ++e1)
            for (std::uint32_t h1 = 0; h1 < prev; ++h1) {
                const std::uint32_t x = h1 + prev * e1;
                for (std::uint32_t e2 = 0; e2 < n; ++e2)
                    for (std::uint32_t h2 = 0; h2 < prev; ++h2) {
                        const std::uint32_t y = h2 + prev * e2;
                        std::uint32_t h = st.mul(h1, tau_pow[e1][h2]);
                        std::uint32_t e = e1 + e2;
                        if (e >= n) {
                            h = st.mul(h, w);
                            e -= n;
                        }
                        next.table[std::size_t(x) * next.size + y] = h + prev * e;
                    }
            }
        st = std::move(next);
    }

    // element names and generator indices
    const auto order = st.size;
    std::vector<std::vector<std::uint16_t>> names(order);
    for (std::uint32_t x = 0; x < order; ++x) {
        std::vector<std::uint16_t> e(k);
        std::uint32_t rest = x;
        for (std::size_t i = 0; i < k; ++i) {
            e[i] = static_cast<std::uint16_t>(rest % spec.generators[i].order);
            rest /= spec.generators[i].order;
        }
        names[x] = std::move(e);
    }
    std::vector<std::pair<std::string, std::uint32_t>> gens;
    for (std::size_t i = 0; i < k; ++i) gens.emplace_back(spec.generators[i].name, radix[i]);

    std::vector<std::uint16_t> table16(st.table.size());
    for (std::size_t i = 0; i < st.table.size(); ++i)
        table16[i] = static_cast<std::uint16_t>(st.table[i]);
    GroupPtr g = Group::from_table(std::move(table16), order, std::move(names), std::move(gens));

    // re-verify every declared relation in the finished table
    for (const auto& r : spec.conjugations) {
        std::uint32_t acted = static_cast<std::uint32_t>(g->generator_element(r.acted));
        std::uint32_t actor = static_cast<std::uint32_t>(g->generator_element(r.actor));
        std::uint32_t img = 0;
        for (const auto& [name, exp] : parse_word(r.image)) {
            int gi = g->generator_element(name);
            img = g->mul(img, g->power(static_cast<std::uint32_t>(gi), exp));
        }
        if (g->conjugate(acted, actor) != img)
            throw InconsistentPresentation("declared conjugation rule fails in the table");
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t gi = static_cast<std::uint32_t>(g->generator_element(spec.generators[i].name));
        std::uint32_t expected = 0;
        if (auto it = powers.find(i); it != powers.end()) {
            for (const auto& [name, exp] : parse_word(it->second)) {
                int gj = g->generator_element(name);
                expected = g->mul(expected, g->power(static_cast<std::uint32_t>(gj), exp));
            }
        }
        if (g->power(gi, spec.generators[i].order) != expected)
            throw InconsistentPresentation("declared power relation fails in the table");
    }
    return g;
}

bool family_action_valid(unsigned n, const std::array<std::uint32_t, 4>& action) {
    const std::uint32_t m = 1u << n;
    const auto [i, j, kk, l] = action;
    for (std::uint32_t v : action)
        if (v >= m) return false;
    std::uint64_t det = std::uint64_t(i) * l + std::uint64_t(m) * m - std::uint64_t(j) * kk;
    if (det % 2 == 0) return false;
    auto mm = [&](std::uint64_t a) { return static_cast<std::uint32_t>(a % m); };
    return mm(std::uint64_t(i) * i + std::uint64_t(j) * kk) == 1 &&
           mm(std::uint64_t(i) * j + std::uint64_t(j) * l) == 0 &&
           mm(std::uint64_t(kk) * i + std::uint64_t(l) * kk) == 0 &&
           mm(std::uint64_t(kk) * j + std::uint64_t(l) * l) == 1;
}

GroupPtr build_family_group(unsigned n, std::array<std::uint32_t, 4> action) {
    if (n < 1) throw InputError("family parameter n must be at least 1");
    if (n > 6) throw SizeLimit("family parameter n too large");
    const std::uint32_t m = 1u << n;
    const auto [i, j, kk, l] = action;
    for (std::uint32_t v : action)
        if (v >= m) throw InputError("family action entries must be residues mod 2^n");
    if (!family_action_valid(n, action))
        throw InvalidAction("action matrix must be invertible of order dividing 2 mod 2^n");

    auto word = [&](std::uint32_t ea, std::uint32_t eb) {
        return "a^" + std::to_string(ea) + "*b^" + std::to_string(eb);
    };
    GroupSpec spec;
    spec.generators = {{"a", m}, {"b", m}, {"c", 2}};
    spec.conjugations = {{"a", "c", word(i, j)}, {"b", "c", word(kk, l)}};
    return build_group(spec);
}

GroupPtr cyclic_group(std::uint32_t order, const std::string& gen_name) {
    if (order == 0) throw InputError("cyclic order must be positive");
    if (order == 1) return build_group(GroupSpec{});
    GroupSpec spec;
    spec.generators = {{gen_name, order}};
    return build_group(spec);
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2, std::uint32_t max_order) {
    const std::uint64_t order = std::uint64_t(g1->order()) * g2->order();
    if (order > max_order)
        throw SizeLimit("product order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(max_order));
    const auto n1 = g1->order();
    const auto n = static_cast<std::uint32_t>(order);

    std::vector<std::uint16_t> table(std::size_t(n) * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint32_t a = g1->mul(x % n1, y % n1);
            std::uint32_t b = g2->mul(x / n1, y / n1);
            table[std::size_t(x) * n + y] = static_cast<std::uint16_t>(a + n1 * b);
        }

    std::vector<std::vector<std::uint16_t>> names;
    if (g1->has_names() && g2->has_names()) {
        names.resize(n);
        for (std::uint32_t x = 0; x < n; ++x) {
            std::vector<std::uint16_t> e;
            const auto& e1 = g1->element_name(x % n1);
            const auto& e2 = g2->element_name(x / n1);
            e.reserve(e1.size() + e2.size());
            e.insert(e.end(), e1.begin(), e1.end());
            e.insert(e.end(), e2.begin(), e2.end());
            names[x] = std::move(e);
        }
    }

    // generator names from both factors, deduplicated with numeric suffixes
    std::vector<std::pair<std::string, std::uint32_t>> gens;
    std::set<std::string> used;
    auto add_gen = [&](const std::string& name, std::uint32_t idx) {
        std::string candidate = name;
        for (std::uint32_t suffix = 2; used.count(candidate); ++suffix)
            candidate = name + std::to_string(suffix);
        used.insert(candidate);
        gens.emplace_back(candidate, idx);
    };
    for (const auto& [name, idx] : g1->generators()) add_gen(name, idx);
    for (const auto& [name, idx] : g2->generators()) add_gen(name, idx * n1);

    return Group::from_table(std::move(table), n, std::move(names), std::move(gens));
}

} // namespace morava::grp
