#include <doctest.h>

#include "quiverhh/algebra.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/cycles.hpp"
#include "quiverhh/error.hpp"
#include "quiverhh/resolutions.hpp"
#include "quiverhh/report.hpp"
#include "support.hpp"

using namespace quiverhh;

namespace {

Report run_on(const std::string& verb, const std::string& file)
{
    Command c;
    c.verb = verb;
    c.input = bundled(file);
    return run(c);
}

std::vector<std::string> keys(const nlohmann::ordered_json& j)
{
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.push_back(it.key());
    return out;
}

} // namespace

TEST_CASE("report layout")
{
    Command c;
    c.verb = "hh";
    c.input = bundled("dual.quiver");
    c.max_degree = 4;
    auto r = run(c);
    CHECK(r.exit_code == ExitCode::ok);
    CHECK(keys(r.json) ==
          std::vector<std::string>{"version", "input_digest", "algebra", "command", "results", "timing_ms"});
    CHECK(keys(r.json["algebra"]) == std::vector<std::string>{"dim", "nilpotency", "monomial", "vertices", "arrows"});
    CHECK(r.json["results"]["hh_dimensions"] == nlohmann::json::array({2, 1, 1, 1, 1}));
    CHECK(emit_report(r, "json").find("\"hh_dimensions\"") != std::string::npos);
    CHECK(emit_report(r, "text").find("hh_dimensions: [2, 1, 1, 1, 1]") != std::string::npos);
}

TEST_CASE("verbs on the bundled files")
{
    auto cycles = run_on("cycles", "cubic_cycle.quiver");
    CHECK(cycles.json["results"]["witnesses"].empty());
    CHECK(cycles.json["results"]["witnesses"].is_array());

    Command cert;
    cert.verb = "certify";
    cert.input = bundled("dual.quiver");
    cert.m = 3;
    auto cr = run(cert).json["results"];
    CHECK(cr["hh_lower_bound"] == true);
    CHECK(cr["degree"] == 2);
    CHECK(cr.contains("is_cycle"));
    CHECK(cr.contains("boundary_status"));

    auto gl = run_on("gldim", "cubic_cycle.quiver").json["results"];
    CHECK(gl["value"] == "infinite");
    CHECK(gl["witness"] == nlohmann::json::array({"a2*a1"}));

    auto pd = run_on("pd", "linear_ab.quiver").json["results"]["simples"];
    CHECK(pd[0]["monomial"]["value"] == 2);

    auto basis = run_on("basis", "cubic_cycle.quiver").json["results"];
    CHECK(basis["dimension"] == 7);

    auto cmp = run_on("compare", "cycle3.quiver").json["results"]["comparisons"];
    REQUIRE(cmp.size() == 1);
    CHECK(cmp[0]["holds"] == true);

    auto sq = run_on("gldim", "square.quiver").json["results"];
    CHECK(sq["method"] == "cutoff");
    CHECK(sq["value"] == 2);
}

TEST_CASE("errors and exit codes")
{
    auto missing = run_on("validate", "no-such-file.quiver");
    CHECK(missing.exit_code == ExitCode::validation_error);
    CHECK(missing.json["error"]["code"] == "ParseError");

    auto cc = run_on("certify", "cubic_cycle.quiver");
    CHECK(cc.exit_code == ExitCode::validation_error);
    CHECK(cc.json["error"]["code"] == "NotTwoTruncated");

    auto sq = run_on("compare", "square.quiver");
    CHECK(sq.json["error"]["code"] == "NotMonomial");

    Command capped;
    capped.verb = "hh";
    capped.input = bundled("cycle3.quiver");
    capped.max_degree = 8;
    capped.chain_cap = 2;
    auto r = run(capped);
    CHECK(r.exit_code == ExitCode::resource_limit);
    CHECK(r.json["results"]["complete"] == false);
    CHECK(r.json["results"]["error"]["code"] == "ResourceLimit");

    Command bad_field;
    bad_field.verb = "basis";
    bad_field.input = bundled("dual.quiver");
    bad_field.field = "fp:4";
    CHECK(run(bad_field).json["error"]["code"] == "InvalidArgument");

    CHECK(parse_field_flag("q") == Field::rationals());
    CHECK(parse_field_flag("fp:3") == Field::prime(3));
    CHECK_THROWS_AS(parse_field_flag("fp:x"), Error);
}

TEST_CASE("reports are deterministic")
{
    for (const char* verb : {"hh", "cycles", "gldim", "pd", "certify", "compare"}) {
        auto a = run_on(verb, "cycle2.quiver").json;
        auto b = run_on(verb, "cycle2.quiver").json;
        a.erase("timing_ms");
        b.erase("timing_ms");
        CHECK(a.dump() == b.dump());
    }
}

TEST_CASE("random corpus")
{
    CHECK(format_presentation(random_monomial_algebra(42)) == format_presentation(random_monomial_algebra(42)));
    for (auto& p : monomial_corpus(1, 50)) {
        CHECK(p.monomial);
        CHECK(validate_presentation(p).ok);
        Algebra a(p);
        if (minimal_two_truncated(a))
            CHECK(gldim_monomial(a).is_infinite());
    }
    CorpusParams impossible;
    impossible.max_dimension = 0;
    impossible.max_retries = 3;
    CHECK_THROWS_AS(random_monomial_algebra(1, impossible), Error);
}

TEST_CASE("corpus property run")
{
    auto report = check_corpus_properties(1, 50, {"all"});
    CHECK(report.algebras == 50);
    CHECK(report.violations.empty());
    CHECK(report.properties.size() == corpus_property_names().size());
}
