#include "ballq/verifier.hpp"

#include <doctest.h>

#include <json.hpp>

#include <set>

using namespace ballq::verify;

TEST_CASE("full report: every check runs, two are flagged, none mismatch") {
    const auto results = run_report();
    CHECK(results.size() == manifest().size());
    const auto s = summarize(results);
    CHECK(s.mismatched == 0);
    CHECK(s.flagged == 2);
    std::set<std::string> flagged;
    for (const auto& r : results) {
        CAPTURE(r.check_id);
        CAPTURE(r.computed);
        if (r.status == Status::Flagged) flagged.insert(r.check_id);
        CHECK_FALSE(r.paper_anchor.quote.empty());
        CHECK_FALSE(r.paper_anchor.location.empty());
        CHECK_FALSE(r.trace.empty());
        CHECK(r.computed.rfind("error:", 0) != 0);
    }
    CHECK(flagged == std::set<std::string>{"sec5_3.proper_transform", "sec5_5.eq14_integrality"});
    CHECK(exit_status(results, false) == 0);
    CHECK(exit_status(results, true) == 1);
}

TEST_CASE("results are ordered by id and rendering is deterministic") {
    const auto a = run_report();
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].check_id < a[i].check_id);
    CHECK(render_json(a) == render_json(run_report()));
    CHECK(render_text(a) == render_text(run_report()));
    const auto j = nlohmann::json::parse(render_json(a));
    CHECK(j.is_array());
    CHECK(j.size() == a.size());
}

TEST_CASE("axioms cited across the report cover the catalogue") {
    std::set<std::string> used;
    for (const auto& r : run_report())
        for (const auto& a : r.axioms_used) used.insert(a);
    std::set<std::string> all;
    for (const auto& [key, citation] : axiom_catalogue()) all.insert(citation);
    CHECK(used == all);
}

TEST_CASE("scopes filter the report") {
    std::size_t total = 0;
    for (const auto& scope : scopes()) {
        if (scope == "all") continue;
        const auto part = run_report(scope);
        for (const auto& r : part) CHECK(r.scope == scope);
        total += part.size();
    }
    CHECK(total == run_report().size());
    CHECK(summarize(run_report("appendix2")).mismatched == 0);
    CHECK_THROWS_AS(run_report("nowhere"), UnknownScope);
}

TEST_CASE("lookup by id and alias") {
    const auto r = run_check("appII.57");
    CHECK(r.check_id == "sec5_5.budget57");
    CHECK(r.computed == "57");
    CHECK(run_check("lemma2.h0").computed == "3");
    CHECK_THROWS_AS(run_check("no.such.check"), UnknownCheck);
    CHECK(explain("appII.57").find("15 + 21 + 21 = 57") != std::string::npos);
    CHECK_THROWS_AS(explain("nope"), UnknownCheck);
}

TEST_CASE("manifest schema errors") {
    CHECK_THROWS_AS(parse_manifest("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_manifest("{}"), std::invalid_argument);
    const std::string entry =
        R"({"id":"x","scope":"surface","anchor":{"location":"l","quote":"q"},"expected":"1","provenance":"PAPER","axioms":[]})";
    CHECK_NOTHROW(parse_manifest(R"({"axioms":{},"checks":[)" + entry + "]}"));
    CHECK_THROWS_AS(parse_manifest(R"({"axioms":{},"checks":[)" + entry + "," + entry + "]}"), std::invalid_argument);
}
