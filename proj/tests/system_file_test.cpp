#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iologic/system_file.hpp"

using namespace iologic;

namespace {
const std::string kFixtures = IOLOGIC_FIXTURE_DIR;
}

TEST_CASE("loads a classical system") {
    LoadedSystem sys = load_system_file(kFixtures + "/sec2_simple.json");
    CHECK(sys.is_classical());
    CHECK(sys.norms.size() == 2);
    CHECK(sys.classical->universe().size() == 2);
    CHECK(sys.engine().equiv(sys.element("~(g & t)"), sys.element("~g | ~t")));
}

TEST_CASE("loads the finite presentation") {
    LoadedSystem sys = load_system_file(kFixtures + "/kt.json");
    CHECK_FALSE(sys.is_classical());
    CHECK(sys.norms.size() == 3);
    CHECK(sys.engine().leq(sys.element("boxq"), sys.element("q")));
    CHECK_FALSE(sys.engine().has_meet());
}

TEST_CASE("loads preferences and premises") {
    LoadedSystem sys = load_system_file(kFixtures + "/sec5_pref.json");
    REQUIRE(sys.preference.has_value());
    CHECK(sys.preference->kind == PreferenceModel::Kind::Explicit);
    CHECK(sys.preference->pairs.size() == 11);  // 3 tiers of sizes 1, 2, 1
    CHECK(sys.premises.size() == 2);
}

TEST_CASE("schema violations are reported") {
    CHECK_THROWS_AS(load_system_json(nlohmann::json::array()), SchemaError);
    CHECK_THROWS_AS(load_system_json({{"schema", 2}, {"variables", {"g"}}, {"norms", nlohmann::json::array()}}),
                    SchemaError);
    // missing norms
    CHECK_THROWS_AS(load_system_json({{"schema", 1}, {"variables", {"g"}}}), SchemaError);
    // undeclared variable in a formula
    nlohmann::json bad = {{"schema", 1},
                          {"variables", {"g"}},
                          {"norms", {{{"id", "n1"}, {"body", "zz"}, {"head", "g"}}}}};
    CHECK_THROWS_AS(load_system_json(bad), ParseError);
    // duplicate ids
    nlohmann::json dup = {{"schema", 1},
                          {"variables", {"g", "t"}},
                          {"norms",
                           {{{"id", "n1"}, {"body", "g"}, {"head", "t"}},
                            {{"id", "n1"}, {"body", "t"}, {"head", "g"}}}}};
    CHECK_THROWS_AS(load_system_json(dup), Error);
    // preference formula with two models
    nlohmann::json pref = {{"schema", 1},
                           {"variables", {"g", "t"}},
                           {"norms", nlohmann::json::array()},
                           {"preference",
                            {{"kind", "explicit"}, {"pairs", {{"g", "g & t"}}}}}};
    CHECK_THROWS_AS(load_system_json(pref), SchemaError);
    // deontic extras demand a classical system
    nlohmann::json finite_extra = {
        {"schema", 1},
        {"finite_logic", {{"elements", {"a", "b"}}}},
        {"norms", nlohmann::json::array()},
        {"premises", {"a"}}};
    CHECK_THROWS_AS(load_system_json(finite_extra), SchemaError);
}

TEST_CASE("semantic duplicates warn instead of failing") {
    nlohmann::json doc = {{"schema", 1},
                          {"variables", {"g", "t"}},
                          {"norms",
                           {{{"id", "n1"}, {"body", "g"}, {"head", "t"}},
                            {{"id", "n2"}, {"body", "g | 0"}, {"head", "t & 1"}}}}};
    LoadedSystem sys = load_system_json(doc);
    CHECK(sys.norms.size() == 1);
    CHECK(sys.warnings.size() == 1);
}
