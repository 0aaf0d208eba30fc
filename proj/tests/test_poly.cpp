#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "morava/poly.hpp"

using namespace morava;
using namespace morava::fp;

namespace {

RingPtr ring_f2() {
    return PolyRing::make(2, {"a", "b", "c", "x1", "x2", "v"}, {2, 2, 2, 2, 4, -6});
}

Polynomial var(const RingPtr& r, const char* name, std::uint32_t exp = 1) {
    int i = r->var_index(name);
    REQUIRE(i >= 0);
    return Polynomial::variable(r, static_cast<std::size_t>(i), exp);
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int max_terms = 5,
                       int max_exp = 3) {
    std::vector<Term> terms;
    int count = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < count; ++t) {
        Monomial m = Monomial::one(r->nvars());
        for (std::size_t v = 0; v < r->nvars(); ++v) {
            m.e[v] = static_cast<std::uint16_t>(rng() % (max_exp + 1));
            m.total += m.e[v];
        }
        terms.push_back({m, static_cast<std::uint32_t>(rng() % r->p())});
    }
    return Polynomial::from_terms(r, std::move(terms));
}

} // namespace

TEST_CASE("coefficient spec carries the periodicity degree") {
    CoefficientSpec s22(2, 2);
    CHECK(s22.v_degree() == -6);
    CHECK(CoefficientSpec(2, 3).v_degree() == -14);
    CHECK(CoefficientSpec(3, 2).v_degree() == -16);
    CHECK_THROWS_AS(CoefficientSpec(4, 2), InputError);
    CHECK_THROWS_AS(CoefficientSpec(2, 1), InputError);
}

TEST_CASE("multiplication basics over F2") {
    auto r = ring_f2();
    auto f = var(r, "c") + var(r, "x1") * var(r, "b");

    CHECK(f * Polynomial::constant(r, 1) == f);
    CHECK((f * Polynomial::zero(r)).is_zero());

    // Frobenius in characteristic 2
    auto cx = var(r, "c") + var(r, "x1");
    CHECK(cx * cx == var(r, "c", 2) + var(r, "x1", 2));

    auto g = var(r, "c", 2) + var(r, "b") * var(r, "c");
    CHECK(g * g == var(r, "c", 4) + var(r, "b", 2) * var(r, "c", 2));
}

TEST_CASE("ring axioms on random polynomials") {
    for (std::uint32_t p : {2u, 3u}) {
        auto r = PolyRing::make(p, {"x", "y", "z"}, {1, 1, 1});
        std::mt19937 rng(42 + p);
        for (int trial = 0; trial < 100; ++trial) {
            auto f = random_poly(r, rng);
            auto g = random_poly(r, rng);
            auto h = random_poly(r, rng);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f + g) - g == f);
            // Frobenius: (f+g)^p = f^p + g^p
            CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
        }
    }
}

TEST_CASE("substitution") {
    auto r = ring_f2();
    auto f = var(r, "x1", 2);
    std::size_t x1 = static_cast<std::size_t>(r->var_index("x1"));

    SUBCASE("identity binding leaves the polynomial alone") {
        std::map<std::size_t, Polynomial> id{{x1, var(r, "x1")}};
        CHECK(f.substitute(id) == f);
    }
    SUBCASE("Frobenius expansion of a binding") {
        // x1 -> b + v*x2^2 gives b^2 + v^2*x2^4
        std::map<std::size_t, Polynomial> bind{{x1, var(r, "b") + var(r, "v") * var(r, "x2", 2)}};
        auto expect = var(r, "b", 2) + var(r, "v", 2) * var(r, "x2", 4);
        CHECK(f.substitute(bind) == expect);
    }
    SUBCASE("degree-mismatched binding emits a warning but returns a result") {
        std::map<std::size_t, Polynomial> bind{{x1, var(r, "x2")}}; // deg 4 into deg 2
        std::vector<std::string> warnings;
        auto out = f.substitute(bind, &warnings);
        CHECK(out == var(r, "x2", 2));
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("x1") != std::string::npos);
    }
    SUBCASE("degree-matched binding is silent") {
        std::map<std::size_t, Polynomial> bind{{x1, var(r, "b") + var(r, "v") * var(r, "x2", 2)}};
        std::vector<std::string> warnings;
        f.substitute(bind, &warnings);
        CHECK(warnings.empty());
    }
}

TEST_CASE("grading includes the negative degree of v") {
    auto r = ring_f2();
    auto f = var(r, "v") * var(r, "x2", 2); // -6 + 8 = 2
    REQUIRE(f.homogeneous_degree().has_value());
    CHECK(*f.homogeneous_degree() == 2);

    auto g = var(r, "b"); // degree 2
    auto sum = f + g;
    CHECK(sum.is_homogeneous());
    CHECK(*sum.homogeneous_degree() == 2);

    auto mixed = f + var(r, "x2");
    CHECK(!mixed.is_homogeneous());
    CHECK(!mixed.homogeneous_degree().has_value());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto h1 = random_poly(r, rng, 3, 2);
        auto h2 = random_poly(r, rng, 3, 2);
        if (!h1.is_homogeneous() || !h2.is_homogeneous()) continue;
        auto prod = h1 * h2;
        if (h1.is_zero() || h2.is_zero()) continue;
        CHECK(prod.is_homogeneous());
        if (!prod.is_zero())
            CHECK(*prod.homogeneous_degree() ==
                  *h1.homogeneous_degree() + *h2.homogeneous_degree());
    }
}

TEST_CASE("specialize and change_ring") {
    auto r = ring_f2();
    auto f = var(r, "v", 2) * var(r, "x2", 4) + var(r, "c", 2);
    auto v1 = f.specialize(static_cast<std::size_t>(r->var_index("v")), 1);
    CHECK(v1 == var(r, "x2", 4) + var(r, "c", 2));

    auto small = PolyRing::make(2, {"c", "x2"}, {2, 4});
    auto moved = v1.change_ring(small);
    CHECK(moved.to_string() == "x2^4 + c^2");

    // a used variable missing from the target is an error
    CHECK_THROWS_AS(f.change_ring(small), UnknownName);
}

TEST_CASE("monomial order comparisons") {
    // grevlex: higher total degree first; ties broken at the last
    // differing variable, smaller exponent winning
    auto gr = PolyRing::make(2, {"x", "y", "z"}, {1, 1, 1}, MonomialOrder::grevlex);
    auto x = Monomial::var(3, 0), y = Monomial::var(3, 1), z = Monomial::var(3, 2);
    CHECK(mono_cmp(mono_mul(x, y), z, MonomialOrder::grevlex) > 0);
    CHECK(mono_cmp(mono_mul(x, z), mono_mul(y, y), MonomialOrder::grevlex) < 0);
    CHECK(mono_cmp(x, y, MonomialOrder::grevlex) > 0);
    CHECK(mono_cmp(x, y, MonomialOrder::lex) > 0);
    CHECK(mono_cmp(mono_mul(x, z), mono_mul(y, y), MonomialOrder::lex) > 0);
    (void)gr;
}

TEST_CASE("to_string uses the relation syntax") {
    auto r = PolyRing::make(3, {"x", "y"}, {1, 1});
    auto f = Polynomial::variable(r, 0, 2) * Polynomial::constant(r, 2) +
             Polynomial::variable(r, 0) * Polynomial::variable(r, 1) +
             Polynomial::constant(r, 1);
    CHECK(f.to_string() == "2*x^2 + x*y + 1");
    CHECK(Polynomial::zero(r).to_string() == "0");
}
