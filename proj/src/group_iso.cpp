#include <algorithm>
#include <map>
#include <sstream>

#include "morava/group.hpp"

namespace morava::grp {

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> order_histogram_of(const Group& g) {
    std::map<std::uint32_t, std::uint32_t> hist;
    for (std::uint32_t x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
    return {hist.begin(), hist.end()};
}

Subgroup commutator_subgroup(const GroupPtr& g) {
    std::vector<std::uint32_t> commutators;
    std::vector<bool> seen(g->order(), false);
    for (std::uint32_t x = 0; x < g->order(); ++x)
        for (std::uint32_t y = 0; y < g->order(); ++y) {
            std::uint32_t c = g->mul(g->mul(g->inverse(x), g->inverse(y)), g->mul(x, y));
            if (!seen[c]) {
                seen[c] = true;
                commutators.push_back(c);
            }
        }
    return subgroup_generated(g, commutators);
}

} // namespace

Fingerprint fingerprint(const Group& g) {
    // fingerprint needs shared ownership for the derived quotients
    std::vector<std::uint16_t> table(std::size_t(g.order()) * g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y)
            table[std::size_t(x) * g.order() + y] = static_cast<std::uint16_t>(g.mul(x, y));
    GroupPtr self = Group::from_table(std::move(table), g.order(), {}, {});

    Fingerprint fp;
    fp.order = g.order();
    fp.exponent = g.exponent();

    fp.abelianization = abelian_type(*quotient_group(commutator_subgroup(self)));

    Subgroup z = center(self);
    fp.center_type = abelian_type(*subgroup_as_group(z));

    GroupPtr gz = quotient_group(z);
    fp.central_quotient_abelian = gz->is_abelian();
    if (fp.central_quotient_abelian) {
        fp.central_quotient = abelian_type(*gz);
    } else {
        fp.central_quotient = {gz->order(),
                               static_cast<std::uint32_t>(conjugacy_classes(*gz).size())};
        for (const auto& [o, c] : order_histogram_of(*gz)) {
            fp.central_quotient.push_back(o);
            fp.central_quotient.push_back(c);
        }
    }

    for (const auto& cls : conjugacy_classes(g))
        fp.class_sizes.push_back(static_cast<std::uint32_t>(cls.size()));
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());

    fp.order_histogram = order_histogram_of(g);

    std::vector<bool> sq(g.order(), false);
    std::uint32_t sq_count = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        std::uint32_t y = g.mul(x, x);
        if (!sq[y]) {
            sq[y] = true;
            ++sq_count;
        }
    }
    fp.squaring_image_size = sq_count;
    return fp;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    auto list = [&os](const std::vector<std::uint32_t>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
    };
    os << "order=" << order << " exponent=" << exponent << " ab=";
    list(abelianization);
    os << " center=";
    list(center_type);
    os << " central_quotient" << (central_quotient_abelian ? "=" : "(nonabelian)=");
    list(central_quotient);
    os << " classes=";
    list(class_sizes);
    os << " orders=[";
    for (std::size_t i = 0; i < order_histogram.size(); ++i)
        os << (i ? "," : "") << order_histogram[i].first << ':' << order_histogram[i].second;
    os << "] sq_image=" << squaring_image_size;
    return os.str();
}

std::vector<std::uint32_t> small_generating_set(const Group& g) {
    std::vector<std::uint16_t> table(std::size_t(g.order()) * g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y)
            table[std::size_t(x) * g.order() + y] = static_cast<std::uint16_t>(g.mul(x, y));
    GroupPtr self = Group::from_table(std::move(table), g.order(), {}, {});

    std::vector<std::uint32_t> gens;
    Subgroup closure = subgroup_generated(self, {});
    while (closure.elements.size() < g.order()) {
        // smallest element of maximal order outside the current closure
        std::uint32_t best = 0, best_order = 0;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (closure.contains(x)) continue;
            std::uint32_t o = g.element_order(x);
            if (o > best_order) {
                best = x;
                best_order = o;
            }
        }
        gens.push_back(best);
        closure = subgroup_generated(self, gens);
    }
    return gens;
}

namespace {

struct ElementInvariant {
    std::uint32_t order, class_size, centralizer_size;
    bool operator==(const ElementInvariant&) const = default;
};

std::vector<ElementInvariant> element_invariants(const Group& g) {
    const std::uint32_t n = g.order();
    std::vector<ElementInvariant> inv(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        inv[x].order = g.element_order(x);
        std::uint32_t cent = 0;
        for (std::uint32_t y = 0; y < n; ++y)
            if (g.mul(x, y) == g.mul(y, x)) ++cent;
        inv[x].centralizer_size = cent;
        inv[x].class_size = n / cent;
    }
    return inv;
}

struct MapState {
    std::vector<int> img;            // g1 element -> g2 element or -1
    std::vector<char> used;          // g2 elements already hit
    std::vector<std::uint16_t> known; // defined g1 elements, definition order
};

// extend the partial homomorphism by products; false on any conflict with
// the tables or with injectivity
bool close_map(MapState& st, const Group& g1, const Group& g2, std::size_t from) {
    for (std::size_t qi = from; qi < st.known.size(); ++qi) {
        const std::uint32_t x = st.known[qi];
        for (std::size_t yj = 0; yj < st.known.size(); ++yj) {
            const std::uint32_t y = st.known[yj];
            const std::uint32_t pairs[2][2] = {{x, y}, {y, x}};
            for (const auto& pr : pairs) {
                std::uint32_t z = g1.mul(pr[0], pr[1]);
                std::uint32_t w = g2.mul(static_cast<std::uint32_t>(st.img[pr[0]]),
                                         static_cast<std::uint32_t>(st.img[pr[1]]));
                if (st.img[z] < 0) {
                    if (st.used[w]) return false;
                    st.img[z] = static_cast<int>(w);
                    st.used[w] = 1;
                    st.known.push_back(static_cast<std::uint16_t>(z));
                } else if (st.img[z] != static_cast<int>(w)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool search(const Group& g1, const Group& g2, const std::vector<std::uint32_t>& gens,
            const std::vector<std::vector<std::uint32_t>>& candidates, std::size_t level,
            MapState& st) {
    if (level == gens.size()) return st.known.size() == g1.order();
    const std::uint32_t gen = gens[level];
    if (st.img[gen] >= 0) return search(g1, g2, gens, candidates, level + 1, st);
    for (std::uint32_t cand : candidates[level]) {
        if (st.used[cand]) continue;
        MapState saved = st;
        st.img[gen] = static_cast<int>(cand);
        st.used[cand] = 1;
        st.known.push_back(static_cast<std::uint16_t>(gen));
        if (close_map(st, g1, g2, st.known.size() - 1) &&
            search(g1, g2, gens, candidates, level + 1, st))
            return true;
        st = std::move(saved);
    }
    return false;
}

} // namespace

bool is_isomorphic(const Group& g1, const Group& g2, std::uint32_t max_order) {
    if (g1.order() > max_order || g2.order() > max_order)
        throw SizeLimit("isomorphism test beyond order bound " + std::to_string(max_order));
    if (g1.order() != g2.order()) return false;
    if (g1.order() == 1) return true;
    if (!(fingerprint(g1) == fingerprint(g2))) return false;

    std::vector<std::uint32_t> gens;
    if (!g1.generators().empty()) {
        for (const auto& [name, idx] : g1.generators()) gens.push_back(idx);
    } else {
        gens = small_generating_set(g1);
    }

    auto inv1 = element_invariants(g1);
    auto inv2 = element_invariants(g2);
    std::vector<std::vector<std::uint32_t>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::uint32_t y = 0; y < g2.order(); ++y)
            if (inv2[y] == inv1[gens[i]]) candidates[i].push_back(y);
        if (candidates[i].empty()) return false;
    }

    MapState st;
    st.img.assign(g1.order(), -1);
    st.used.assign(g2.order(), 0);
    st.img[0] = 0;
    st.used[0] = 1;
    st.known = {0};
    return search(g1, g2, gens, candidates, 0, st);
}

} // namespace morava::grp
