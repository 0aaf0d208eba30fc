#include "morava/jsonio.hpp"

#include <fstream>

#include "morava/relation.hpp"

namespace morava::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

grp::GroupSpec group_spec_from_json(const json& j) {
    const std::string type = field(j, "type").get<std::string>();
    grp::GroupSpec spec;
    if (type == "polycyclic") {
        for (const auto& g : field(j, "generators"))
            spec.generators.push_back(
                {field(g, "name").get<std::string>(), field(g, "order").get<std::uint32_t>()});
        if (j.contains("conjugations"))
            for (const auto& r : j.at("conjugations"))
                spec.conjugations.push_back({field(r, "acted").get<std::string>(),
                                             field(r, "actor").get<std::string>(),
                                             field(r, "image").get<std::string>()});
        if (j.contains("powers"))
            for (const auto& r : j.at("powers"))
                spec.powers.push_back({field(r, "generator").get<std::string>(),
                                       field(r, "image").get<std::string>()});
        return spec;
    }
    if (type == "cyclic") {
        auto order = field(j, "order").get<std::uint32_t>();
        if (order == 0) throw InputError("cyclic order must be positive");
        if (order > 1) spec.generators.push_back({"g", order});
        return spec;
    }
    if (type == "family") {
        auto n = field(j, "n").get<unsigned>();
        auto mat = field(j, "matrix").get<std::vector<std::uint32_t>>();
        if (n < 1 || n > 16) throw InputError("family n out of range");
        if (mat.size() != 4) throw InputError("family matrix needs 4 entries [i,j,k,l]");
        const std::uint32_t m = 1u << n;
        spec.generators = {{"a", m}, {"b", m}, {"c", 2}};
        auto word = [](std::uint32_t ea, std::uint32_t eb) {
            return "a^" + std::to_string(ea) + "*b^" + std::to_string(eb);
        };
        spec.conjugations = {{"a", "c", word(mat[0], mat[1])},
                             {"b", "c", word(mat[2], mat[3])}};
        return spec;
    }
    throw InputError("group type '" + type + "' has no presentation form");
}

grp::GroupPtr group_from_json(const json& j) {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "product") {
        const auto& factors = field(j, "factors");
        if (factors.empty()) throw InputError("product needs at least one factor");
        grp::GroupPtr acc = group_from_json(factors.at(0));
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = grp::direct_product(acc, group_from_json(factors.at(i)));
        return acc;
    }
    if (type == "family") {
        auto n = field(j, "n").get<unsigned>();
        auto mat = field(j, "matrix").get<std::vector<std::uint32_t>>();
        if (mat.size() != 4) throw InputError("family matrix needs 4 entries [i,j,k,l]");
        return grp::build_family_group(n, {mat[0], mat[1], mat[2], mat[3]});
    }
    return grp::build_group(group_spec_from_json(j));
}

cpmod::CpModule module_from_json(const json& j) {
    cpmod::CpModule m;
    m.p = field(j, "p").get<std::uint32_t>();
    if (!fp::is_prime(m.p)) throw InputError("module prime must be prime");
    const auto& rows = field(j, "matrix");
    m.dim = static_cast<std::uint32_t>(rows.size());
    m.action.reserve(std::size_t(m.dim) * m.dim);
    for (const auto& row : rows) {
        if (row.size() != m.dim) throw InputError("module matrix must be square");
        for (const auto& cell : row) {
            auto v = cell.get<std::int64_t>();
            v %= m.p;
            if (v < 0) v += m.p;
            m.action.push_back(static_cast<std::uint32_t>(v));
        }
    }
    return m;
}

verify::RingPresentation presentation_from_json(const json& j) {
    verify::RingPresentation pres;
    pres.name = j.value("name", std::string("presentation"));
    pres.p = field(j, "p").get<std::uint32_t>();
    for (const auto& v : field(j, "variables"))
        pres.variables.emplace_back(field(v, "name").get<std::string>(),
                                    field(v, "degree").get<std::int64_t>());
    for (const auto& r : field(j, "relations")) pres.relations.push_back(r.get<std::string>());
    if (j.contains("implicit"))
        for (const auto& imp : j.at("implicit"))
            pres.implicit.push_back({field(imp, "var").get<std::string>(),
                                     imp.value("degree", std::int64_t{2}),
                                     field(imp, "equation").get<std::string>()});
    if (j.contains("reducers"))
        for (const auto& r : j.at("reducers")) {
            auto idx = r.get<std::size_t>();
            if (idx >= pres.relations.size()) throw InputError("reducer index out of range");
            pres.reducer_indices.push_back(idx);
        }
    if (j.contains("extra_relations"))
        for (const auto& r : j.at("extra_relations"))
            pres.extra_relations.push_back(r.get<std::string>());
    pres.group = group_spec_from_json(field(j, "group"));
    return pres;
}

IdealFile ideal_from_json(const json& j, fp::MonomialOrder order) {
    IdealFile out;
    out.p = field(j, "p").get<std::uint32_t>();
    out.s = j.value("s", 2u);
    std::vector<std::string> names;
    std::vector<std::int64_t> degrees;
    for (const auto& v : field(j, "variables")) {
        if (v.is_string()) {
            names.push_back(v.get<std::string>());
            degrees.push_back(1);
        } else {
            names.push_back(field(v, "name").get<std::string>());
            degrees.push_back(field(v, "degree").get<std::int64_t>());
        }
    }
    out.ring = fp::PolyRing::make(out.p, std::move(names), std::move(degrees), order);
    fp::CoefficientSpec spec(out.p, out.s);
    for (const auto& g : field(j, "generators"))
        out.generators.push_back(
            dsl::RelationTemplate::parse(g.get<std::string>()).instantiate(spec, out.ring));
    return out;
}

ordered_json report_json(const verify::VerificationReport& rep) {
    ordered_json j;
    j["presentation"] = rep.presentation;
    j["parameters"] = {{"p", rep.p}, {"s", rep.s}};
    ordered_json fixed = ordered_json::object();
    for (const auto& [var, sol] : rep.fixed_points) fixed[var] = sol;
    j["fixed_points"] = fixed;
    j["homogeneous"] = {{"relations", rep.relation_homogeneous},
                        {"fixed_points", rep.fixed_point_homogeneous},
                        {"residuals", rep.residual_homogeneous},
                        {"all", rep.all_homogeneous}};
    j["fixed_point_residual_zero"] = rep.fixed_point_residual_zero;
    j["groebner_basis_size"] = rep.groebner_basis_size;
    if (rep.quotient_finite)
        j["quotient_dimension"] = rep.quotient_dimension;
    else
        j["quotient_dimension"] = "infinite";
    j["chi"] = rep.chi;
    j["match"] = rep.match;
    ordered_json extras = ordered_json::array();
    for (const auto& [relation, member] : rep.extra_relations)
        extras.push_back({{"relation", relation}, {"in_ideal", member}});
    j["extra_relations"] = std::move(extras);
    j["all_extra_in_ideal"] = rep.all_extra_in_ideal;
    j["verified"] = rep.verified();
    if (!rep.standard_monomials.empty()) j["standard_monomials"] = rep.standard_monomials;
    j["timings_ms"] = {{"build", rep.t_build},
                       {"groebner", rep.t_groebner},
                       {"dimension", rep.t_dimension},
                       {"chi", rep.t_chi}};
    return j;
}

ordered_json classification_json(const verify::FamilyClassification& c) {
    ordered_json j;
    j["n"] = c.n;
    j["group_order"] = (1ull << (2 * c.n + 1));
    j["valid_actions"] = c.valid_actions;
    j["class_count"] = c.classes.size();
    ordered_json classes = ordered_json::array();
    for (const auto& cls : c.classes)
        classes.push_back({{"matrix", cls.representative}, {"members", cls.members}});
    j["classes"] = std::move(classes);
    return j;
}

ordered_json fingerprint_json(const grp::Fingerprint& fp) {
    ordered_json j;
    j["order"] = fp.order;
    j["exponent"] = fp.exponent;
    j["abelianization"] = fp.abelianization;
    j["center"] = fp.center_type;
    j["central_quotient_abelian"] = fp.central_quotient_abelian;
    j["central_quotient"] = fp.central_quotient;
    j["class_sizes"] = fp.class_sizes;
    ordered_json hist = ordered_json::array();
    for (const auto& [order, count] : fp.order_histogram)
        hist.push_back({{"element_order", order}, {"count", count}});
    j["order_histogram"] = std::move(hist);
    j["squaring_image_size"] = fp.squaring_image_size;
    return j;
}

} // namespace morava::io
