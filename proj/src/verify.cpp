#include "morava/verify.hpp"

#include <chrono>
#include <map>

#include "morava/relation.hpp"

namespace morava::verify {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// S_w(z) abbreviates the v-weighted correction sum attached to the degree-2
// generators; spelled out per relation below
std::string sum_term(const std::string& w, const std::string& z) {
    return "v*sum(i=1..s-1," + w + "^(2^s-2^i)*" + z + "^(2^(i-1)))";
}

} // namespace

grp::GroupSpec g36_group_spec() {
    grp::GroupSpec spec;
    spec.generators = {{"b", 4}, {"a", 4}, {"c", 2}};
    spec.conjugations = {{"b", "a", "b^3"}, {"a", "c", "a^3"}, {"b", "c", "b"}};
    return spec;
}

RingPresentation g36_presentation() {
    RingPresentation pres;
    pres.name = "g36";
    pres.p = 2;
    pres.variables = {{"a", 2}, {"b", 2}, {"c", 2}, {"x2", 4}, {"y2", 4}, {"t", 4}};

    const std::string cx = "c+x1+" + sum_term("c", "x2");
    const std::string cy = "c+y1+" + sum_term("c", "y2");
    const std::string ay = "a+y1+" + sum_term("a", "y2");
    const std::string bx = "b+x1+" + sum_term("b", "x2");

    pres.relations = {
        "a^(2^s)",
        "b^(2^s)",
        "c^(2^s)",
        "c*(" + cx + ")",
        "c*(" + cy + ")",
        "a*(" + ay + ")",
        "b*(" + bx + ")",
        "(" + cy + ")*(" + bx + ")+v*b^(2^s-1)*t",
        "(" + cx + ")*(" + ay + ")+v*a^(2^s-1)*t",
        "t^2+t*x1*y1+x2*y1*(" + cy + ")+x1*y2*(" + cx + ")",
        "t*(" + bx + ")+v*b^(2^s-1)*x2*(c+y1)",
        "t*(" + ay + ")+v*a^(2^s-1)*y2*(c+x1)",
        "c*t",
        "v^2*x2^(2^s)+c^2+b*c",
        "v^2*y2^(2^s)+a^2+a*c",
    };
    pres.reducer_indices = {0, 1, 2, 13, 14};
    pres.implicit = {
        {"x1", 2, "v*(x2+v*x1*x2^(2^(s-1)))^(2^(s-1))+b"},
        {"y1", 2, "v*(y2+v*y1*y2^(2^(s-1)))^(2^(s-1))+c"},
    };
    pres.extra_relations = {
        "a^2*c+a*c^2",
        "b^2*c+b*c^2",
        "x1^(2^s)+b^(2^(s-1))*c^(2^(s-1))",
        "y1^(2^s)+a^(2^(s-1))*c^(2^(s-1))",
    };
    pres.group = g36_group_spec();
    return pres;
}

namespace {

struct Rings {
    fp::RingPtr elim, main;
    std::size_t v_index;
};

Rings make_rings(const RingPresentation& pres, std::uint32_t s, fp::MonomialOrder order) {
    fp::CoefficientSpec spec(pres.p, s);
    std::vector<std::string> elim_vars;
    std::vector<std::int64_t> elim_degs;
    std::vector<std::string> main_vars;
    std::vector<std::int64_t> main_degs;
    for (const auto& [name, deg] : pres.variables) {
        elim_vars.push_back(name);
        elim_degs.push_back(deg);
        main_vars.push_back(name);
        main_degs.push_back(deg);
    }
    for (const auto& imp : pres.implicit) {
        elim_vars.push_back(imp.var);
        elim_degs.push_back(imp.degree);
    }
    elim_vars.push_back("v");
    elim_degs.push_back(spec.v_degree());

    // the elimination always runs under grevlex: the reducer leading terms
    // and the stabilizing iteration are pinned to it; only the basis
    // computation downstream honors the requested order
    Rings r;
    r.elim = fp::PolyRing::make(pres.p, elim_vars, elim_degs, fp::MonomialOrder::grevlex);
    r.main = fp::PolyRing::make(pres.p, main_vars, main_degs, order);
    r.v_index = elim_vars.size() - 1;
    return r;
}

} // namespace

IdealBuild build_ideal(const RingPresentation& pres, std::uint32_t s, fp::MonomialOrder order) {
    fp::CoefficientSpec spec(pres.p, s);
    Rings rings = make_rings(pres, s, order);

    IdealBuild out;
    out.elim_ring = rings.elim;
    out.main_ring = rings.main;

    std::vector<fp::Polynomial> reducers;
    for (std::size_t idx : pres.reducer_indices) {
        auto tmpl = dsl::RelationTemplate::parse(pres.relations.at(idx));
        reducers.push_back(tmpl.instantiate(spec, rings.elim));
    }

    // eliminate the implicitly defined variables
    std::map<std::size_t, fp::Polynomial> bindings;
    for (const auto& imp : pres.implicit) {
        int var = rings.elim->var_index(imp.var);
        if (var < 0) throw InputError("implicit variable " + imp.var + " not in ring");
        auto equation =
            dsl::RelationTemplate::parse(imp.equation).instantiate(spec, rings.elim);
        fp::Polynomial sol = fp::solve_fixed_point(equation, static_cast<std::size_t>(var),
                                                   reducers, 4 * s);

        auto sol_deg = sol.homogeneous_degree();
        out.fixed_point_homogeneous.push_back(sol.is_zero() ||
                                              (sol_deg && *sol_deg == imp.degree));

        std::map<std::size_t, fp::Polynomial> self{{static_cast<std::size_t>(var), sol}};
        fp::Polynomial residual = sol - equation.substitute(self);
        out.residual_homogeneous.push_back(residual.is_homogeneous());
        out.fixed_point_residual_zero.push_back(fp::reduce_by(residual, reducers).is_zero());

        out.fixed_points.push_back(sol);
        bindings.emplace(static_cast<std::size_t>(var), std::move(sol));
    }

    // substitute, check homogeneity with v present, then set v := 1 and
    // project onto the quotient-ring variables
    for (const std::string& text : pres.relations) {
        auto rel = dsl::RelationTemplate::parse(text).instantiate(spec, rings.elim);
        fp::Polynomial sub = rel.substitute(bindings);
        out.relation_homogeneous.push_back(sub.is_homogeneous());
        out.generators.push_back(sub.specialize(rings.v_index, 1).change_ring(rings.main));
    }
    return out;
}

namespace {

fp::BuchbergerLimits resolve_limits(const VerifyOptions& opts, std::uint32_t s) {
    fp::BuchbergerLimits limits = opts.limits;
    if (limits.max_reduction_steps == 0)
        limits.max_reduction_steps =
            s <= 2 ? fp::BuchbergerLimits{}.max_reduction_steps : 200'000'000ull;
    if (limits.max_basis == 0) limits.max_basis = fp::BuchbergerLimits{}.max_basis;
    return limits;
}

std::vector<fp::Polynomial> instantiate_extras(const RingPresentation& pres,
                                               std::uint32_t s, const IdealBuild& build) {
    fp::CoefficientSpec spec(pres.p, s);
    std::map<std::size_t, fp::Polynomial> bindings;
    for (std::size_t i = 0; i < pres.implicit.size(); ++i) {
        int var = build.elim_ring->var_index(pres.implicit[i].var);
        bindings.emplace(static_cast<std::size_t>(var), build.fixed_points[i]);
    }
    std::size_t v_index = build.elim_ring->nvars() - 1;
    std::vector<fp::Polynomial> out;
    for (const std::string& text : pres.extra_relations) {
        auto rel = dsl::RelationTemplate::parse(text).instantiate(spec, build.elim_ring);
        out.push_back(rel.substitute(bindings).specialize(v_index, 1).change_ring(build.main_ring));
    }
    return out;
}

} // namespace

VerificationReport verify_rank(const RingPresentation& pres, std::uint32_t s,
                               const VerifyOptions& opts) {
    VerificationReport rep;
    rep.presentation = pres.name;
    rep.p = pres.p;
    rep.s = s;

    auto t0 = std::chrono::steady_clock::now();
    IdealBuild build = build_ideal(pres, s, opts.order);
    rep.t_build = ms_since(t0);
    log_info("built ideal for " + pres.name + " at s=" + std::to_string(s) + ": " +
             std::to_string(build.generators.size()) + " generators");

    for (std::size_t i = 0; i < pres.implicit.size(); ++i)
        rep.fixed_points.emplace_back(pres.implicit[i].var, build.fixed_points[i].to_string());
    rep.relation_homogeneous = build.relation_homogeneous;
    rep.fixed_point_homogeneous = build.fixed_point_homogeneous;
    rep.residual_homogeneous = build.residual_homogeneous;
    rep.fixed_point_residual_zero = build.fixed_point_residual_zero;
    auto all = [](const std::vector<bool>& v) {
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    rep.all_homogeneous = all(build.relation_homogeneous) &&
                          all(build.fixed_point_homogeneous) && all(build.residual_homogeneous);

    t0 = std::chrono::steady_clock::now();
    fp::GroebnerBasis gb = fp::buchberger(build.generators, resolve_limits(opts, s));
    rep.t_groebner = ms_since(t0);
    rep.groebner_basis_size = gb.gens.size();
    log_info("reduced basis has " + std::to_string(gb.gens.size()) + " elements (" +
             std::to_string(rep.t_groebner) + " ms)");

    t0 = std::chrono::steady_clock::now();
    auto dim = fp::quotient_dimension(gb, opts.kernel);
    rep.t_dimension = ms_since(t0);
    rep.quotient_finite = dim.has_value();
    rep.quotient_dimension = dim.value_or(0);

    t0 = std::chrono::steady_clock::now();
    grp::GroupPtr group = grp::build_group(pres.group);
    rep.chi = grp::commuting_tuple_class_count(*group, s, opts.chi);
    rep.t_chi = ms_since(t0);

    rep.match = rep.quotient_finite && rep.quotient_dimension == rep.chi;
    if (!rep.match && rep.quotient_finite &&
        rep.quotient_dimension <= opts.mismatch_monomial_cap) {
        for (const auto& m : fp::standard_monomials(gb, opts.mismatch_monomial_cap))
            rep.standard_monomials.push_back(
                fp::Polynomial::from_terms(gb.ring, {{m, 1}}).to_string());
    }

    if (opts.check_extra_relations) {
        auto extras = instantiate_extras(pres, s, build);
        for (std::size_t i = 0; i < extras.size(); ++i) {
            bool member = fp::normal_form(extras[i], gb).is_zero();
            rep.extra_relations.emplace_back(pres.extra_relations[i], member);
            rep.all_extra_in_ideal = rep.all_extra_in_ideal && member;
        }
    }
    return rep;
}

std::vector<bool> verify_extra_relations(const RingPresentation& pres, std::uint32_t s,
                                         const VerifyOptions& opts) {
    IdealBuild build = build_ideal(pres, s, opts.order);
    fp::GroebnerBasis gb = fp::buchberger(build.generators, resolve_limits(opts, s));
    std::vector<bool> out;
    for (const auto& extra : instantiate_extras(pres, s, build))
        out.push_back(fp::normal_form(extra, gb).is_zero());
    return out;
}

} // namespace morava::verify
