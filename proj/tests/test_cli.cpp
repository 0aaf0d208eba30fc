#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "morava/cli.hpp"

using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("moravak_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const json& content) const {
        auto p = path / name;
        std::ofstream(p) << content.dump(2);
        return p.string();
    }
};

struct RunResult {
    int code;
    json report;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = morava::cli::run(args, out, err);
    RunResult r{code, json(), out.str(), err.str()};
    if (!r.out.empty()) {
        try {
            r.report = json::parse(r.out);
        } catch (...) {
        }
    }
    return r;
}

json c2c2_spec() {
    json gens = json::array();
    gens.push_back({{"name", "a"}, {"order", 2}});
    gens.push_back({{"name", "b"}, {"order", 2}});
    return {{"type", "polycyclic"}, {"generators", gens}};
}

} // namespace

TEST_CASE("verify g36 exits zero with a matching report") {
    auto r = run({"verify", "g36", "--s", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("match").get<bool>());
    CHECK(r.report.at("verified").get<bool>());
    CHECK(r.report.at("quotient_dimension").get<std::uint64_t>() == 184);
    CHECK(r.report.at("chi").get<std::uint64_t>() == 184);
    CHECK(r.report.at("tool").at("version").is_string());
    CHECK(r.report.at("config").at("s").get<unsigned>() == 2);
}

TEST_CASE("chi of the Klein four group") {
    TempDir tmp;
    auto spec = tmp.file("c2c2.json", c2c2_spec());
    auto r = run({"group", "chi", "--spec", spec, "--s", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("chi").get<std::uint64_t>() == 16);
}

TEST_CASE("missing input file is an input error") {
    auto r = run({"gb", "--ideal", "/nonexistent/missing.json"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("groebner basis of an ideal file") {
    TempDir tmp;
    json ideal = {{"p", 2},
                  {"variables", {"x", "y"}},
                  {"generators", {"x^2+y", "y^2"}}};
    auto path = tmp.file("ideal.json", ideal);
    auto r = run({"gb", "--ideal", path, "--order", "grevlex"});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("basis_size").get<std::size_t>() == 2);
    CHECK(r.report.at("quotient_dimension").get<std::uint64_t>() == 4);

    auto lex = run({"gb", "--ideal", path, "--order", "lex"});
    REQUIRE(lex.code == 0);
    CHECK(lex.report.at("quotient_dimension").get<std::uint64_t>() == 4);
}

TEST_CASE("module decomposition") {
    TempDir tmp;
    json mod = {{"p", 2}, {"matrix", {{0, 1}, {1, 0}}}};
    auto path = tmp.file("swap.json", mod);
    auto r = run({"module", "decompose", "--matrix", path});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("blocks") == json::array({2}));
    CHECK(r.report.at("free_rank").get<unsigned>() == 1);
    CHECK(r.report.at("trivial_rank").get<unsigned>() == 0);
    CHECK(r.report.at("permutation_module").get<bool>());
    auto dims = r.report.at("cohomology_dims").get<std::vector<unsigned>>();
    CHECK(dims.at(0) == 1);
    CHECK(dims.at(1) == 0);
}

TEST_CASE("isomorphism across presentations") {
    TempDir tmp;
    json d8_pc = {{"type", "polycyclic"},
                  {"generators", json::array({{{"name", "r"}, {"order", 4}},
                                              {{"name", "f"}, {"order", 2}}})},
                  {"conjugations",
                   json::array({{{"acted", "r"}, {"actor", "f"}, {"image", "r^3"}}})}};
    json d8_family = {{"type", "family"}, {"n", 1}, {"matrix", {0, 1, 1, 0}}};
    auto p1 = tmp.file("d8a.json", d8_pc);
    auto p2 = tmp.file("d8b.json", d8_family);
    auto r = run({"group", "iso", "--spec1", p1, "--spec2", p2});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("isomorphic").get<bool>());

    json c4 = {{"type", "cyclic"}, {"order", 4}};
    auto p3 = tmp.file("c4.json", c4);
    auto r2 = run({"group", "iso", "--spec1", p1, "--spec2", p3});
    REQUIRE(r2.code == 0);
    CHECK(!r2.report.at("isomorphic").get<bool>());
}

TEST_CASE("group info on a product spec") {
    TempDir tmp;
    json prod = {{"type", "product"},
                 {"factors", json::array({json{{"type", "cyclic"}, {"order", 4}},
                                          c2c2_spec()})}};
    auto path = tmp.file("h.json", prod);
    auto r = run({"group", "info", "--spec", path});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("group").at("order").get<unsigned>() == 16);
    CHECK(r.report.at("group").at("abelian").get<bool>());
    CHECK(r.report.at("group").at("fingerprint").at("abelianization") ==
          json::array({4, 2, 2}));
}

TEST_CASE("family classification via the CLI") {
    auto r = run({"family", "classify", "--n", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("classification").at("class_count").get<unsigned>() == 2);
    CHECK(r.report.at("classification").at("valid_actions").get<unsigned>() == 4);
}

TEST_CASE("budget errors exit with code 3") {
    TempDir tmp;
    json g36 = {{"type", "polycyclic"},
                {"generators", json::array({{{"name", "b"}, {"order", 4}},
                                            {{"name", "a"}, {"order", 4}},
                                            {{"name", "c"}, {"order", 2}}})},
                {"conjugations",
                 json::array({{{"acted", "b"}, {"actor", "a"}, {"image", "b^3"}},
                              {{"acted", "a"}, {"actor", "c"}, {"image", "a^3"}},
                              {{"acted", "b"}, {"actor", "c"}, {"image", "b"}}})}};
    auto path = tmp.file("g36.json", g36);
    auto r = run({"group", "chi", "--spec", path, "--s", "2", "--budget", "10",
                  "--strategy", "serial"});
    CHECK(r.code == 3);
}

TEST_CASE("verification mismatch exits with code 1 and still reports") {
    TempDir tmp;
    json pres;
    pres["name"] = "broken";
    pres["p"] = 2;
    pres["variables"] = {{{"name", "u"}, {"degree", 2}}, {{"name", "w"}, {"degree", 2}}};
    pres["relations"] = {"u^(2^s)"};
    pres["group"] = c2c2_spec();
    auto path = tmp.file("broken.json", pres);
    auto r = run({"verify", "file", "--pres", path, "--s", "2"});
    CHECK(r.code == 1);
    CHECK(r.report.at("match").get<bool>() == false);
    CHECK(r.report.at("quotient_dimension") == "infinite");
}

TEST_CASE("verify honors the lex order flag") {
    auto r = run({"verify", "g36", "--s", "2", "--order", "lex"});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("quotient_dimension").get<std::uint64_t>() == 184);
    CHECK(r.report.at("config").at("order").get<std::string>() == "lex");
}

TEST_CASE("ideal files may use the height parameter") {
    TempDir tmp;
    json ideal = {{"p", 2},
                  {"s", 3},
                  {"variables", {"u", "w"}},
                  {"generators", {"u^(2^s)", "w^(2^s)"}}};
    auto path = tmp.file("param_ideal.json", ideal);
    auto r = run({"gb", "--ideal", path});
    REQUIRE(r.code == 0);
    CHECK(r.report.at("quotient_dimension").get<std::uint64_t>() == 64);
}

TEST_CASE("reports are byte-identical outside the timing field") {
    auto r1 = run({"verify", "g36", "--s", "2"});
    auto r2 = run({"verify", "g36", "--s", "2"});
    auto j1 = r1.report;
    auto j2 = r2.report;
    j1.erase("timings_ms");
    j2.erase("timings_ms");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("report file option") {
    TempDir tmp;
    auto target = (tmp.path / "report.json").string();
    auto r = run({"verify", "g36", "--s", "2", "--report", target});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(target);
    REQUIRE(in.good());
    json loaded;
    in >> loaded;
    CHECK(loaded.at("match").get<bool>());
}

TEST_CASE("bad command lines exit with code 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"group", "chi"}).code == 2); // missing --spec
    CHECK(run({"verify", "g36", "--s", "1"}).code == 2);
}
