#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "morava/jsonio.hpp"
#include "morava/relation.hpp"
#include "morava/verify.hpp"

using namespace morava;
using namespace morava::verify;

namespace {

fp::Polynomial var(const fp::RingPtr& r, const char* name, std::uint32_t exp = 1) {
    return fp::Polynomial::variable(r, static_cast<std::size_t>(r->var_index(name)), exp);
}

} // namespace

TEST_CASE("the built-in presentation data") {
    auto pres = g36_presentation();
    CHECK(pres.p == 2);
    CHECK(pres.relations.size() == 15);
    CHECK(pres.implicit.size() == 2);
    CHECK(pres.extra_relations.size() == 4);
    CHECK(pres.variables.size() == 6);
    for (const auto& text : pres.relations) CHECK_NOTHROW(dsl::RelationTemplate::parse(text));
    // the plain monomial relation instantiates to c*t at any s
    fp::CoefficientSpec spec(2, 2);
    auto r = fp::PolyRing::make(2, {"c", "t"}, {2, 4});
    auto ct = dsl::RelationTemplate::parse("c*t").instantiate(spec, r);
    CHECK(ct == var(r, "c") * var(r, "t"));
}

TEST_CASE("ideal construction at s = 2") {
    auto pres = g36_presentation();
    auto build = build_ideal(pres, 2);

    REQUIRE(build.fixed_points.size() == 2);
    const auto& er = build.elim_ring;
    auto expect_x1 = var(er, "b") + var(er, "v") * var(er, "x2", 2) +
                     var(er, "v") * var(er, "b", 3) * var(er, "c");
    auto expect_y1 = var(er, "c") + var(er, "v") * var(er, "y2", 2) +
                     var(er, "v") * var(er, "a") * var(er, "c", 3);
    CHECK(build.fixed_points[0] == expect_x1);
    CHECK(build.fixed_points[1] == expect_y1);

    for (bool ok : build.fixed_point_residual_zero) CHECK(ok);
    for (bool ok : build.fixed_point_homogeneous) CHECK(ok);
    for (bool ok : build.residual_homogeneous) CHECK(ok);
    for (bool ok : build.relation_homogeneous) CHECK(ok);

    REQUIRE(build.generators.size() == 15);
    // first relation lands as a^4 with v set to 1
    CHECK(build.generators[0] == var(build.main_ring, "a", 4));
}

TEST_CASE("ideal construction at s = 3") {
    auto pres = g36_presentation();
    auto build = build_ideal(pres, 3);
    CHECK(build.generators.size() == 15);
    for (bool ok : build.fixed_point_residual_zero) CHECK(ok);
    for (bool ok : build.relation_homogeneous) CHECK(ok);
    CHECK(build.generators[0] == var(build.main_ring, "a", 8));
}

TEST_CASE("ideal output does not depend on reducer order") {
    auto pres = g36_presentation();
    auto base = build_ideal(pres, 2);

    auto permuted = pres;
    std::reverse(permuted.reducer_indices.begin(), permuted.reducer_indices.end());
    auto alt = build_ideal(permuted, 2);

    REQUIRE(base.generators.size() == alt.generators.size());
    for (std::size_t i = 0; i < base.generators.size(); ++i)
        CHECK(base.generators[i] == alt.generators[i]);
    CHECK(base.fixed_points[0] == alt.fixed_points[0]);
    CHECK(base.fixed_points[1] == alt.fixed_points[1]);
}

TEST_CASE("rank verification at s = 2") {
    auto pres = g36_presentation();
    auto rep = verify_rank(pres, 2);

    CHECK(rep.all_homogeneous);
    CHECK(rep.quotient_finite);
    CHECK(rep.quotient_dimension == 184);
    CHECK(rep.chi == 184);
    CHECK(rep.match);
    CHECK(rep.all_extra_in_ideal);
    CHECK(rep.verified());
    CHECK(rep.groebner_basis_size == 70);
    CHECK(rep.standard_monomials.empty());
    REQUIRE(rep.fixed_points.size() == 2);
    CHECK(rep.fixed_points[0].first == "x1");
}

TEST_CASE("dimension is invariant under the monomial order") {
    auto pres = g36_presentation();
    VerifyOptions lex;
    lex.order = fp::MonomialOrder::lex;
    auto rep = verify_rank(pres, 2, lex);
    CHECK(rep.quotient_finite);
    CHECK(rep.quotient_dimension == 184);
    CHECK(rep.match);
}

TEST_CASE("negative control: a deleted relation surfaces as infinite") {
    // drop the built generator v^2*x2^(2^s)+c^2+b*c (v=1); x2 then acquires
    // no pure-power leading term from the rest
    auto pres = g36_presentation();
    auto build = build_ideal(pres, 2);
    auto gens = build.generators;
    gens.erase(gens.begin() + 13);
    auto gb = fp::buchberger(gens);
    CHECK(!fp::quotient_dimension(gb).has_value());
}

TEST_CASE("an infinite quotient is reported verbatim as a mismatch") {
    nlohmann::json j;
    j["name"] = "missing-relation";
    j["p"] = 2;
    j["variables"] = {{{"name", "u"}, {"degree", 2}}, {{"name", "w"}, {"degree", 2}}};
    j["relations"] = {"u^(2^s)"};
    nlohmann::json gens = nlohmann::json::array();
    gens.push_back({{"name", "a"}, {"order", 2}});
    gens.push_back({{"name", "b"}, {"order", 2}});
    j["group"] = {{"type", "polycyclic"}, {"generators", gens}};
    auto rep = verify_rank(io::presentation_from_json(j), 2);
    CHECK(!rep.quotient_finite);
    CHECK(rep.chi == 16);
    CHECK(!rep.match);
    CHECK(!rep.verified());
    CHECK(rep.standard_monomials.empty());
}

TEST_CASE("extra relations reduce to zero") {
    auto pres = g36_presentation();
    auto results = verify_extra_relations(pres, 2);
    REQUIRE(results.size() == 4);
    for (bool ok : results) CHECK(ok);

    SUBCASE("a bare variable is not a member") {
        auto probe = pres;
        probe.extra_relations = {"a"};
        auto res = verify_extra_relations(probe, 2);
        REQUIRE(res.size() == 1);
        CHECK(!res[0]);
    }
}

TEST_CASE("abelian example presentations from JSON") {
    // K[u,w]/(u^{2^{ns}}, w^{2^{ns}}) against C_{2^n} x C_{2^n}
    auto make = [](unsigned n) {
        nlohmann::json j;
        j["name"] = "abelian";
        j["p"] = 2;
        j["variables"] = {{{"name", "u"}, {"degree", 2}}, {{"name", "w"}, {"degree", 2}}};
        std::string e = "2^(" + std::to_string(n) + "*s)";
        j["relations"] = {"u^(" + e + ")", "w^(" + e + ")"};
        nlohmann::json gens = nlohmann::json::array();
        gens.push_back({{"name", "a"}, {"order", 1u << n}});
        gens.push_back({{"name", "b"}, {"order", 1u << n}});
        j["group"] = {{"type", "polycyclic"}, {"generators", gens}};
        return io::presentation_from_json(j);
    };
    const std::vector<std::tuple<unsigned, unsigned, std::uint64_t>> cases = {
        {1, 2, 16}, {1, 3, 64}, {2, 2, 256}};
    for (auto [n, s, expect] : cases) {
        auto rep = verify_rank(make(n), s);
        CHECK(rep.quotient_finite);
        CHECK(rep.quotient_dimension == expect);
        CHECK(rep.chi == expect);
        CHECK(rep.match);
    }
}

TEST_CASE("abelian ranks for mixed cyclic types") {
    // quotient dimension of (u1^(p^{n1 s}), ..., uk^(p^{nk s})) equals |A|^s
    auto make = [](std::vector<unsigned> ns) {
        nlohmann::json j;
        j["name"] = "abelian-mixed";
        j["p"] = 2;
        nlohmann::json vars = nlohmann::json::array();
        nlohmann::json rels = nlohmann::json::array();
        nlohmann::json gens = nlohmann::json::array();
        for (std::size_t i = 0; i < ns.size(); ++i) {
            std::string name = "u" + std::to_string(i + 1);
            vars.push_back({{"name", name}, {"degree", 2}});
            rels.push_back(name + "^(2^(" + std::to_string(ns[i]) + "*s))");
            gens.push_back({{"name", "g" + std::to_string(i + 1)}, {"order", 1u << ns[i]}});
        }
        j["variables"] = vars;
        j["relations"] = rels;
        j["group"] = {{"type", "polycyclic"}, {"generators", gens}};
        return io::presentation_from_json(j);
    };
    for (unsigned s : {2u, 3u}) {
        // C4 x C2 and C8
        for (auto& ns : std::vector<std::vector<unsigned>>{{2, 1}, {3}}) {
            std::uint64_t order = 1;
            for (unsigned n : ns) order <<= n;
            std::uint64_t expect = 1;
            for (unsigned k = 0; k < s; ++k) expect *= order;
            auto rep = verify_rank(make(ns), s);
            CHECK(rep.quotient_finite);
            CHECK(rep.quotient_dimension == expect);
            CHECK(rep.chi == expect);
            CHECK(rep.match);
        }
    }
}

TEST_CASE("family classification") {
    SUBCASE("n = 1: elementary abelian and dihedral") {
        auto c = classify_family(1);
        CHECK(c.valid_actions == 4);
        CHECK(c.classes.size() == 2);
        CHECK(c.classes[0].representative == std::array<std::uint32_t, 4>{0, 1, 1, 0});
        // identity action comes later lexicographically than the swap
    }
    SUBCASE("n = 2") {
        auto c = classify_family(2);
        CHECK(c.valid_actions == 28);
        CHECK(c.classes.size() == 7);
        std::uint64_t members = 0;
        for (const auto& cls : c.classes) members += cls.members;
        CHECK(members == c.valid_actions);
    }
    SUBCASE("n = 2 representatives are pairwise non-isomorphic") {
        auto c = classify_family(2);
        std::vector<grp::GroupPtr> reps;
        for (const auto& cls : c.classes)
            reps.push_back(grp::build_family_group(2, cls.representative));
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK(!grp::is_isomorphic(*reps[i], *reps[j]));
    }
    SUBCASE("error cases") {
        CHECK_THROWS_AS(classify_family(0), InputError);
        CHECK_THROWS_AS(classify_family(4), SizeLimit);
    }
}

TEST_CASE("the built-in presentation survives the JSON round trip") {
    auto pres = g36_presentation();
    nlohmann::json j;
    j["name"] = pres.name;
    j["p"] = pres.p;
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [name, degree] : pres.variables)
        vars.push_back({{"name", name}, {"degree", degree}});
    j["variables"] = vars;
    j["relations"] = pres.relations;
    nlohmann::json implicit = nlohmann::json::array();
    for (const auto& imp : pres.implicit)
        implicit.push_back(
            {{"var", imp.var}, {"degree", imp.degree}, {"equation", imp.equation}});
    j["implicit"] = implicit;
    j["reducers"] = pres.reducer_indices;
    j["extra_relations"] = pres.extra_relations;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : pres.group.generators)
        gens.push_back({{"name", g.name}, {"order", g.order}});
    nlohmann::json conj = nlohmann::json::array();
    for (const auto& r : pres.group.conjugations)
        conj.push_back({{"acted", r.acted}, {"actor", r.actor}, {"image", r.image}});
    j["group"] = {{"type", "polycyclic"}, {"generators", gens}, {"conjugations", conj}};

    auto loaded = io::presentation_from_json(j);
    auto rep = verify_rank(loaded, 2);
    CHECK(rep.verified());
    CHECK(rep.quotient_dimension == 184);
    CHECK(rep.groebner_basis_size == 70);
}

TEST_CASE("report serialization is deterministic") {
    auto pres = g36_presentation();
    auto r1 = io::report_json(verify_rank(pres, 2));
    auto r2 = io::report_json(verify_rank(pres, 2));
    r1.erase("timings_ms");
    r2.erase("timings_ms");
    CHECK(r1.dump() == r2.dump());
}
