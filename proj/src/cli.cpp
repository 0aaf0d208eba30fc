#include "morava/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "morava/cpmod.hpp"
#include "morava/groebner.hpp"
#include "morava/group.hpp"
#include "morava/jsonio.hpp"
#include "morava/verify.hpp"

namespace morava::cli {

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

ordered_json tool_header() {
    return {{"name", tool_name}, {"version", tool_version}};
}

void emit(const ordered_json& report, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << report.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write report to " + path);
    f << report.dump(2) << '\n';
}

struct GroupStats {
    ordered_json describe(const grp::Group& g) const {
        ordered_json j;
        j["order"] = g.order();
        j["abelian"] = g.is_abelian();
        j["exponent"] = g.exponent();
        auto classes = grp::conjugacy_classes(g);
        j["conjugacy_classes"] = classes.size();
        std::vector<std::uint32_t> sizes;
        for (const auto& c : classes) sizes.push_back(static_cast<std::uint32_t>(c.size()));
        std::sort(sizes.begin(), sizes.end());
        j["class_sizes"] = sizes;
        j["fingerprint"] = io::fingerprint_json(grp::fingerprint(g));
        ordered_json gens = ordered_json::array();
        for (const auto& [name, idx] : g.generators())
            gens.push_back({{"name", name}, {"order", g.element_order(idx)}});
        j["generators"] = std::move(gens);
        return j;
    }
};

fp::MonomialOrder parse_order(const std::string& name) {
    if (name == "grevlex") return fp::MonomialOrder::grevlex;
    if (name == "lex") return fp::MonomialOrder::lex;
    throw InputError("unknown monomial order '" + name + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"computational verification of Morava K-theory ring presentations"};
    app.name(tool_name);
    app.require_subcommand(1);

    std::string report_path;
    app.add_option("--report", report_path, "write the JSON report to this path")
        ->capture_default_str();

    // group info | chi | iso
    auto* group_cmd = app.add_subcommand("group", "finite p-group analysis");
    group_cmd->fallthrough();
    group_cmd->require_subcommand(1);

    std::string info_spec;
    auto* info_cmd = group_cmd->add_subcommand("info", "structure report for a group spec");
    info_cmd->fallthrough();
    info_cmd->add_option("--spec", info_spec, "group spec JSON file")->required();

    std::string chi_spec;
    unsigned chi_s = 2;
    std::uint64_t chi_budget = grp::default_chi_budget;
    std::string chi_strategy = "auto";
    auto* chi_cmd =
        group_cmd->add_subcommand("chi", "commuting-tuple conjugation-orbit count");
    chi_cmd->fallthrough();
    chi_cmd->add_option("--spec", chi_spec, "group spec JSON file")->required();
    chi_cmd->add_option("--s", chi_s, "tuple length")->capture_default_str();
    chi_cmd->add_option("--budget", chi_budget, "tuple enumeration budget")
        ->capture_default_str();
    chi_cmd->add_option("--strategy", chi_strategy, "auto|serial|parallel|chained")
        ->capture_default_str();

    std::string iso_spec1, iso_spec2;
    std::uint32_t iso_cap = grp::default_iso_cap;
    auto* iso_cmd = group_cmd->add_subcommand("iso", "exact isomorphism test");
    iso_cmd->fallthrough();
    iso_cmd->add_option("--spec1", iso_spec1, "first group spec JSON file")->required();
    iso_cmd->add_option("--spec2", iso_spec2, "second group spec JSON file")->required();
    iso_cmd->add_option("--max-order", iso_cap, "order bound")->capture_default_str();

    // family classify
    auto* family_cmd = app.add_subcommand("family", "semidirect-product family tools");
    family_cmd->fallthrough();
    family_cmd->require_subcommand(1);
    unsigned family_n = 1;
    unsigned family_max_n = 3;
    auto* classify_cmd =
        family_cmd->add_subcommand("classify", "isomorphism classes of the order-2^(2n+1) family");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--n", family_n, "exponent parameter")->required();
    classify_cmd->add_option("--max-n", family_max_n, "classification budget cap")
        ->capture_default_str();

    // gb
    std::string gb_ideal, gb_order = "grevlex";
    std::uint64_t gb_steps = fp::BuchbergerLimits{}.max_reduction_steps;
    std::size_t gb_basis = fp::BuchbergerLimits{}.max_basis;
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    gb_cmd->fallthrough();
    gb_cmd->add_option("--ideal", gb_ideal, "ideal JSON file")->required();
    gb_cmd->add_option("--order", gb_order, "grevlex|lex")->capture_default_str();
    gb_cmd->add_option("--max-steps", gb_steps, "reduction step budget")->capture_default_str();
    gb_cmd->add_option("--max-basis", gb_basis, "basis size budget")->capture_default_str();

    // verify g36 | file
    auto* verify_cmd = app.add_subcommand("verify", "presentation rank verification");
    verify_cmd->fallthrough();
    verify_cmd->require_subcommand(1);
    unsigned verify_s = 2;
    std::string verify_order = "grevlex";
    std::uint64_t verify_steps = 0; // 0 = scaled default
    auto* g36_cmd = verify_cmd->add_subcommand("g36", "built-in order-32 presentation");
    g36_cmd->fallthrough();
    g36_cmd->add_option("--s", verify_s, "height parameter (>= 2)")->capture_default_str();
    g36_cmd->add_option("--order", verify_order, "grevlex|lex")->capture_default_str();
    g36_cmd->add_option("--max-steps", verify_steps, "reduction step budget (0 = auto)")
        ->capture_default_str();

    std::string verify_file;
    auto* vfile_cmd = verify_cmd->add_subcommand("file", "presentation from a JSON file");
    vfile_cmd->fallthrough();
    vfile_cmd->add_option("--pres", verify_file, "presentation JSON file")->required();
    vfile_cmd->add_option("--s", verify_s, "height parameter (>= 2)")->capture_default_str();
    vfile_cmd->add_option("--order", verify_order, "grevlex|lex")->capture_default_str();
    vfile_cmd->add_option("--max-steps", verify_steps, "reduction step budget (0 = auto)")
        ->capture_default_str();

    // module decompose
    auto* module_cmd = app.add_subcommand("module", "F_p[C_p]-module analysis");
    module_cmd->fallthrough();
    module_cmd->require_subcommand(1);
    std::string module_matrix;
    std::uint32_t module_degrees = 6;
    auto* decomp_cmd = module_cmd->add_subcommand("decompose", "Jordan block decomposition");
    decomp_cmd->fallthrough();
    decomp_cmd->add_option("--matrix", module_matrix, "module JSON file")->required();
    decomp_cmd->add_option("--degrees", module_degrees, "cohomology degrees to report")
        ->capture_default_str();

    try {
        std::vector<const char*> argv;
        argv.push_back(tool_name);
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_input;
    }

    try {
        ordered_json report;
        report["tool"] = tool_header();
        int code = exit_ok;

        if (info_cmd->parsed()) {
            report["config"] = {{"command", "group info"}, {"spec", info_spec}};
            grp::GroupPtr g = io::group_from_json(io::load_json_file(info_spec));
            report["group"] = GroupStats{}.describe(*g);
        } else if (chi_cmd->parsed()) {
            report["config"] = {{"command", "group chi"},
                                {"spec", chi_spec},
                                {"s", chi_s},
                                {"budget", chi_budget},
                                {"strategy", chi_strategy}};
            grp::ChiOptions opts;
            opts.budget = chi_budget;
            if (chi_strategy == "auto")
                opts.strategy = grp::ChiStrategy::automatic;
            else if (chi_strategy == "serial")
                opts.strategy = grp::ChiStrategy::naive_serial;
            else if (chi_strategy == "parallel")
                opts.strategy = grp::ChiStrategy::naive_parallel;
            else if (chi_strategy == "chained")
                opts.strategy = grp::ChiStrategy::chained;
            else
                throw InputError("unknown chi strategy '" + chi_strategy + "'");
            grp::GroupPtr g = io::group_from_json(io::load_json_file(chi_spec));
            report["chi"] = grp::commuting_tuple_class_count(*g, chi_s, opts);
            report["order"] = g->order();
            report["s"] = chi_s;
        } else if (iso_cmd->parsed()) {
            report["config"] = {{"command", "group iso"},
                                {"spec1", iso_spec1},
                                {"spec2", iso_spec2},
                                {"max_order", iso_cap}};
            grp::GroupPtr g1 = io::group_from_json(io::load_json_file(iso_spec1));
            grp::GroupPtr g2 = io::group_from_json(io::load_json_file(iso_spec2));
            report["isomorphic"] = grp::is_isomorphic(*g1, *g2, iso_cap);
        } else if (classify_cmd->parsed()) {
            report["config"] = {{"command", "family classify"},
                                {"n", family_n},
                                {"max_n", family_max_n}};
            auto c = verify::classify_family(family_n, family_max_n);
            report["classification"] = io::classification_json(c);
        } else if (gb_cmd->parsed()) {
            report["config"] = {{"command", "gb"},
                                {"ideal", gb_ideal},
                                {"order", gb_order},
                                {"max_steps", gb_steps},
                                {"max_basis", gb_basis}};
            auto ideal = io::ideal_from_json(io::load_json_file(gb_ideal), parse_order(gb_order));
            fp::GroebnerBasis basis =
                fp::buchberger(ideal.generators, fp::BuchbergerLimits{gb_steps, gb_basis});
            ordered_json gens = ordered_json::array();
            for (const auto& g : basis.gens) gens.push_back(g.to_string());
            report["groebner_basis"] = std::move(gens);
            report["basis_size"] = basis.gens.size();
            auto dim = fp::quotient_dimension(basis);
            if (dim)
                report["quotient_dimension"] = *dim;
            else
                report["quotient_dimension"] = "infinite";
        } else if (g36_cmd->parsed() || vfile_cmd->parsed()) {
            verify::RingPresentation pres =
                g36_cmd->parsed()
                    ? verify::g36_presentation()
                    : io::presentation_from_json(io::load_json_file(verify_file));
            if (verify_s < 2) throw InputError("height parameter s must be >= 2");
            verify::VerifyOptions opts;
            opts.order = parse_order(verify_order);
            opts.limits.max_reduction_steps = verify_steps; // 0 = auto-scaled by s
            report["config"] = {{"command", g36_cmd->parsed() ? "verify g36" : "verify file"},
                                {"s", verify_s},
                                {"order", verify_order},
                                {"max_steps", verify_steps == 0 ? "auto"
                                                                : std::to_string(verify_steps)}};
            auto rep = verify::verify_rank(pres, verify_s, opts);
            report.update(io::report_json(rep));
            code = rep.verified() ? exit_ok : exit_mismatch;
        } else if (decomp_cmd->parsed()) {
            report["config"] = {{"command", "module decompose"},
                                {"matrix", module_matrix},
                                {"degrees", module_degrees}};
            auto m = io::module_from_json(io::load_json_file(module_matrix));
            auto d = cpmod::decompose(m);
            report["p"] = m.p;
            report["dim"] = m.dim;
            report["blocks"] = d.blocks();
            report["trivial_rank"] = d.trivial_rank();
            report["free_rank"] = d.free_rank();
            report["permutation_module"] = cpmod::is_permutation_module(m);
            report["cohomology_dims"] = cpmod::cohomology_dims(m, module_degrees);
        }

        emit(report, report_path, out);
        return code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << " (attempted " << e.attempted << ")\n";
        return exit_budget;
    } catch (const SizeLimit& e) {
        err << "size limit: " << e.what() << '\n';
        return exit_budget;
    } catch (const NoStabilization& e) {
        err << "no stabilization: " << e.what() << '\n';
        return exit_budget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

} // namespace morava::cli
