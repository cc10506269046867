#include "ballq/registry.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace ballq::fpp;

TEST_CASE("embedded registry holds 50 lattices in the expected partition") {
    const auto& r = load_registry();
    CHECK(r.size() == 50);
    CHECK(query_by_case(r, Case::B).size() == 33);
    CHECK(query_by_case(r, Case::C).size() == 12);
    CHECK(query_by_case(r, Case::D).size() == 1);
    const auto min = query_by_case(r, Case::MinType);
    REQUIRE(min.size() == 4);
    CHECK(min[0].raw_name == "(a=7,p=2,{5})");
    CHECK(min[1].raw_name == "(a=7,p=2,{5,7})");
    CHECK(min[2].raw_name == "(a=23,p=2,∅)");
    CHECK(min[3].raw_name == "(a=23,p=2,{23})");
}

TEST_CASE("serialization round trip is lossless") {
    const auto& r = load_registry();
    const auto text = serialize_registry(r);
    CHECK(parse_registry(text) == r);
    CHECK(serialize_registry(parse_registry(text)) == text);

    std::vector<FppRecord> tricky = {{"x,\"y\"\\z", "a=1", "p=5", "{2,3}", "", Case::C}};
    CHECK(parse_registry(serialize_registry(tricky)) == tricky);
}

TEST_CASE("malformed rows name their row") {
    const std::string header = "raw_name,family,prime_or_place,torsion_set,subgroup_tag,case\n";
    try {
        parse_registry(header + "a,b,c,d,e,B\nbad,row\n");
        FAIL("expected a RegistryError");
    } catch (const RegistryError& e) {
        CHECK(e.row() == 2);
    }
    CHECK_THROWS_AS(parse_registry(header + "a,b,c,d,e,Z\n"), RegistryError);
    CHECK_THROWS_AS(parse_registry(header + "a,b,c,d,e,B\na,b,c,d,e,C\n"), RegistryError);
    CHECK_THROWS_AS(parse_registry(header + ",b,c,d,e,B\n"), RegistryError);
    CHECK_THROWS_AS(parse_registry(header + "\"a,b,c,d,e,B\n"), RegistryError);
    CHECK_THROWS_AS(parse_registry("name,case\n"), RegistryError);
    CHECK_THROWS_AS(parse_registry(""), RegistryError);
}

TEST_CASE("covering context by case") {
    const auto& r = load_registry();
    const auto d = covering_context(find_record(r, "(a=7,p=2,∅,7_21)"));
    REQUIRE(d.kind == ContextKind::Known);
    CHECK(d.context->degree == 21);
    CHECK(d.context->quotient == "(a=7,p=2,∅)");
    CHECK(d.context->regular_cover == "(a=7,p=2,∅,D_3,2_3)");
    for (const auto& rec : query_by_case(r, Case::C)) CHECK(covering_context(rec).kind == ContextKind::UnspecifiedInSource);
    for (const auto& rec : query_by_case(r, Case::B)) CHECK(covering_context(rec).kind == ContextKind::None);
    for (const auto& rec : query_by_case(r, Case::MinType)) CHECK(covering_context(rec).kind == ContextKind::None);
    CHECK_THROWS_AS(find_record(r, "nope"), std::out_of_range);
}

TEST_CASE("case tags and JSON export") {
    CHECK(parse_case("min") == Case::MinType);
    CHECK(parse_case("D") == Case::D);
    CHECK_THROWS_AS(parse_case("e"), std::invalid_argument);
    const auto j = nlohmann::json::parse(registry_to_json(load_registry()));
    CHECK(j.size() == 50);
    CHECK(j[0].contains("raw_name"));
}
