#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iologic/term.hpp"

using namespace iologic;

namespace {

const VariableUniverse kGT({"g", "t"});

SemanticForm form(const std::string& text, const VariableUniverse& u = kGT) {
    return semantic_form(parse_term(text, u), u);
}

Term random_term(std::mt19937_64& rng, const VariableUniverse& u, int depth) {
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 6);
    switch (pick(rng)) {
        case 0:
        case 1: {
            std::uniform_int_distribution<std::size_t> var(0, u.size() - 1);
            return Term::variable(u.name(var(rng)));
        }
        case 2: return Term::top();
        case 3: return Term::bot();
        case 4: return Term::negate(random_term(rng, u, depth - 1));
        case 5:
            return Term::conj(random_term(rng, u, depth - 1), random_term(rng, u, depth - 1));
        default:
            return Term::disj(random_term(rng, u, depth - 1), random_term(rng, u, depth - 1));
    }
}

}  // namespace

TEST_CASE("universe validation") {
    CHECK_THROWS_AS(VariableUniverse({}), Error);
    CHECK_THROWS_AS(VariableUniverse({"a", "a"}), Error);
    CHECK_THROWS_AS(VariableUniverse({"1x"}), Error);
    CHECK_THROWS_AS(VariableUniverse({"TRUE"}), Error);
    std::vector<std::string> many;
    for (int i = 0; i < 17; ++i) many.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(VariableUniverse{many}, Error);
    CHECK_NOTHROW(VariableUniverse(many, 17));
}

TEST_CASE("parse examples") {
    Term t = parse_term("~g & (t | 1)", kGT);
    REQUIRE(t.kind() == Term::Kind::And);
    CHECK(t.child(0).kind() == Term::Kind::Not);
    CHECK(t.child(0).child(0).var_name() == "g");
    CHECK(t.child(1).kind() == Term::Kind::Or);
    CHECK(t.child(1).child(0).var_name() == "t");
    CHECK(t.child(1).child(1).kind() == Term::Kind::Top);

    Term imp = parse_term("g -> t", kGT);
    REQUIRE(imp.kind() == Term::Kind::Or);
    CHECK(imp.child(0).kind() == Term::Kind::Not);
    CHECK(imp.child(0).child(0).var_name() == "g");
    CHECK(imp.child(1).var_name() == "t");
}

TEST_CASE("parse errors carry offsets") {
    try {
        parse_term("g &", kGT);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    try {
        parse_term("g & x", kGT);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);  // undeclared variable starts at offset 4
    }
    CHECK_THROWS_AS(parse_term("", kGT), ParseError);
    CHECK_THROWS_AS(parse_term("(g", kGT), ParseError);
    CHECK_THROWS_AS(parse_term("g | | t", kGT), ParseError);
}

TEST_CASE("render examples") {
    CHECK(render_term(Term::conj(Term::negate(Term::variable("g")), Term::variable("t"))) ==
          "~g & t");
    CHECK(render_term(Term::top()) == "1");
    CHECK(render_term(Term::disj(Term::variable("g"),
                                 Term::conj(Term::variable("t"), Term::variable("s")))) ==
          "g | t & s");
}

TEST_CASE("round trip on random terms") {
    const VariableUniverse u({"g", "t", "s"});
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Term t = random_term(rng, u, 4);
        Term back = parse_term(render_term(t), u);
        CHECK(back.structurally_equal(t));
    }
}

TEST_CASE("semantic forms of constants and variables") {
    const VariableUniverse u1({"g"});
    CHECK(semantic_form(Term::bot(), u1).empty());
    CHECK(semantic_form(Term::top(), u1).full());
    CHECK(form("g").count() == 2);  // over {g,t}
    CHECK(form("g & ~g").empty());
}

TEST_CASE("leq and equiv") {
    CHECK(leq(form("g & t"), form("g")));
    CHECK_FALSE(leq(form("g"), form("t")));
    CHECK(leq(form("0"), form("g & ~g | t")));
    CHECK(equiv(form("~(g & t)"), form("~g | ~t")));
    CHECK(equiv(form("g"), form("g | 0")));
    CHECK_FALSE(equiv(form("g"), form("t")));
    const VariableUniverse u3({"g", "t", "s"});
    CHECK_THROWS_AS((void)leq(form("g"), form("g", u3)), UniverseMismatchError);
}

TEST_CASE("atoms_below") {
    const VariableUniverse u1({"g"});
    CHECK(atoms_below(semantic_form(Term::top(), u1)).size() == 2);
    CHECK(atoms_below(semantic_form(Term::bot(), u1)).empty());
    auto atoms = atoms_below(form("g"));
    REQUIRE(atoms.size() == 2);
    for (const auto& v : atoms) CHECK(v.value(0));  // g is variable 0
}

TEST_CASE("boolean algebra identities on random forms") {
    const VariableUniverse u({"g", "t", "s"});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        SemanticForm x = semantic_form(random_term(rng, u, 3), u);
        SemanticForm y = semantic_form(random_term(rng, u, 3), u);
        SemanticForm z = semantic_form(random_term(rng, u, 3), u);
        SemanticForm one = SemanticForm::all(u.size());
        SemanticForm zero = SemanticForm::none(u.size());
        CHECK(x.unite(y) == y.unite(x));
        CHECK(x.intersect(y) == y.intersect(x));
        CHECK(x.unite(y.unite(z)) == x.unite(y).unite(z));
        CHECK(x.intersect(y.intersect(z)) == x.intersect(y).intersect(z));
        CHECK(x.unite(zero) == x);
        CHECK(x.intersect(one) == x);
        CHECK(x.unite(x.complement()) == one);
        CHECK(x.intersect(x.complement()) == zero);
        CHECK(x.unite(y.intersect(z)) == x.unite(y).intersect(x.unite(z)));
        CHECK(x.intersect(y.unite(z)) == x.intersect(y).unite(x.intersect(z)));
    }
}

TEST_CASE("antisymmetry matches equivalence") {
    const VariableUniverse u({"g", "t"});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        SemanticForm a = semantic_form(random_term(rng, u, 3), u);
        SemanticForm b = semantic_form(random_term(rng, u, 3), u);
        CHECK((leq(a, b) && leq(b, a)) == equiv(a, b));
    }
}

TEST_CASE("semantic_form is a homomorphism") {
    const VariableUniverse u({"g", "t", "s"});
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        Term a = random_term(rng, u, 3);
        Term b = random_term(rng, u, 3);
        CHECK(semantic_form(Term::conj(a, b), u) ==
              semantic_form(a, u).intersect(semantic_form(b, u)));
        CHECK(semantic_form(Term::disj(a, b), u) ==
              semantic_form(a, u).unite(semantic_form(b, u)));
        CHECK(semantic_form(Term::negate(a), u) == semantic_form(a, u).complement());
    }
}

TEST_CASE("evaluate agrees with semantic form") {
    const VariableUniverse u({"g", "t"});
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Term t = random_term(rng, u, 3);
        SemanticForm f = semantic_form(t, u);
        for (std::uint32_t v = 0; v < u.valuation_count(); ++v)
            CHECK(evaluate(t, Valuation{v}, u) == f.test(v));
    }
}
