#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "iologic/hol_emitter.hpp"

using namespace iologic;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

TheoryDocument demo_theory() {
    VariableUniverse u({"g", "t"});
    std::vector<std::pair<Term, Term>> norms = {
        {parse_term("1", u), parse_term("g", u)},
        {parse_term("g", u), parse_term("t", u)},
    };
    std::vector<TheoryQuery> queries = {
        {BaseOp::One, parse_term("1", u), parse_term("g", u)},
        {BaseOp::Three, parse_term("~g", u), parse_term("t", u)},
    };
    TheoryOptions options;
    options.name = "Demo";
    return emit_theory(norms, u, queries, options);
}

}  // namespace

TEST_CASE("norm axiom block has one entry per norm") {
    TheoryDocument doc = demo_theory();
    const std::string* norms = doc.section("norms");
    REQUIRE(norms != nullptr);
    CHECK(count_occurrences(*norms, "norm_") == 2);
    CHECK(norms->find("norm_1: \"N \\<^bold>1 g\"") != std::string::npos);
    CHECK(norms->find("norm_2: \"N g t\"") != std::string::npos);
}

TEST_CASE("axiom block is exactly the ten identities") {
    TheoryDocument doc = demo_theory();
    const std::string* axioms = doc.section("axioms");
    REQUIRE(axioms != nullptr);
    const char* names[] = {"COM_or", "COM_and", "ASS_or", "ASS_and", "IDE_or",
                           "IDE_and", "COMP_or", "COMP_and", "DIS_or_and", "DIS_and_or"};
    std::size_t last = 0;
    for (const char* n : names) {
        auto pos = axioms->find(std::string(n) + ":");
        REQUIRE_MESSAGE(pos != std::string::npos, "missing axiom ", n);
        CHECK(pos > last);  // fixed order
        last = pos;
    }
    CHECK(count_occurrences(*axioms, "\\<forall>") == 10);
}

TEST_CASE("operation definitions follow the displays") {
    TheoryDocument doc = demo_theory();
    const std::string* defs = doc.section("definitions");
    REQUIRE(defs != nullptr);
    // out_1: input below a body, head below the query
    CHECK(defs->find("\\<circle>\\<^sub>1 A \\<equiv> \\<lambda>X. \\<exists>U Y Z. A Z "
                     "\\<and> Z \\<preceq> Y \\<and> N Y U \\<and> U \\<preceq> X") !=
          std::string::npos);
    // out_2 carries the saturation guard
    CHECK(defs->find("Saturated V \\<and> (\\<forall>U. A U \\<longrightarrow> V U)") !=
          std::string::npos);
    // out_I rewrites the output side by equality, out_II the input side
    CHECK(defs->find("\\<circle>\\<^sub>I A \\<equiv> \\<lambda>X. \\<exists>U Y Z. A Z "
                     "\\<and> Z \\<preceq> Y \\<and> N Y U \\<and> U = X") != std::string::npos);
    CHECK(defs->find("\\<circle>\\<^sub>I\\<^sub>I A \\<equiv> \\<lambda>X. \\<exists>U Y Z. "
                     "A Z \\<and> Z = Y \\<and> N Y U \\<and> U \\<preceq> X") !=
          std::string::npos);
}

TEST_CASE("emission is deterministic") {
    std::string a = render_theory(demo_theory());
    std::string b = render_theory(demo_theory());
    CHECK(a == b);
    CHECK(a.find("\r") == std::string::npos);  // LF only
}

TEST_CASE("empty query list omits the lemma section") {
    VariableUniverse u({"g"});
    TheoryOptions options;
    TheoryDocument doc = emit_theory({{parse_term("1", u), parse_term("g", u)}}, u, {}, options);
    CHECK(doc.section("queries") == nullptr);
    CHECK(render_theory(doc).find("lemma") == std::string::npos);
}

TEST_CASE("queries pull in their operation definitions") {
    VariableUniverse u({"g"});
    TheoryOptions options;
    options.ops = {BaseOp::One};
    std::vector<TheoryQuery> queries = {{BaseOp::Two, parse_term("g", u), parse_term("g", u)}};
    TheoryDocument doc = emit_theory({}, u, queries, options);
    const std::string* defs = doc.section("definitions");
    REQUIRE(defs != nullptr);
    CHECK(defs->find("definition out2") != std::string::npos);
}

TEST_CASE("undeclared variables are rejected") {
    VariableUniverse u({"g"});
    TheoryOptions options;
    CHECK_THROWS_AS(
        emit_theory({{Term::variable("zz"), parse_term("g", u)}}, u, {}, options), Error);
}

TEST_CASE("golden files reproduce byte-exactly") {
    const std::string dir = IOLOGIC_GOLDEN_DIR;
    {
        TheoryDocument doc = demo_theory();
        CHECK(render_theory(doc) == slurp(dir + "/demo.thy"));
    }
    {
        VariableUniverse u({"a", "b", "x"});
        std::vector<std::pair<Term, Term>> norms = {
            {parse_term("a", u), parse_term("x", u)},
            {parse_term("b", u), parse_term("x", u)},
        };
        std::vector<TheoryQuery> queries = {
            {BaseOp::Two, parse_term("a | b", u), parse_term("x", u)}};
        TheoryOptions options;
        options.name = "Pair";
        options.ops = {BaseOp::One, BaseOp::Two};
        CHECK(render_theory(emit_theory(norms, u, queries, options)) ==
              slurp(dir + "/pair.thy"));
    }
}
