#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"


#include "iologic/engine.hpp"

using namespace iologic;
using Element = ConsequenceEngine::Element;

namespace {

FinitePresentedLogic kt_spec() {
    FinitePresentedLogic spec;
    spec.elements = {"p", "boxq", "q", "r", "s", "t"};
    spec.declared_leq = {{"boxq", "q"}};
    return spec;
}

}  // namespace

TEST_CASE("classical engine interns canonically") {
    ClassicalEngine e(VariableUniverse({"g", "t"}));
    Element a = e.parse("~(g & t)");
    Element b = e.parse("~g | ~t");
    CHECK(a == b);  // equivalent terms share one element
    CHECK(e.describe(a) == "~(g & t)");  // first rendering wins
    CHECK(e.leq(e.parse("g & t"), e.parse("g")));
    CHECK(e.equiv(e.parse("g"), e.parse("g | 0")));
    CHECK(e.has_join());
    CHECK(e.has_meet());
    CHECK(e.has_atoms());
    CHECK(e.has_constants());
    CHECK(e.atoms_below(e.parse("g")).size() == 2);
    CHECK(e.atoms_below(e.bottom()).empty());
    CHECK(e.equiv(e.join(e.parse("g"), e.parse("~g")), e.top()));
}

TEST_CASE("up membership") {
    ClassicalEngine e(VariableUniverse({"g", "t"}));
    std::vector<Element> gens = {e.parse("g"), e.parse("t"), e.parse("~t")};
    CHECK(up_membership(e, gens, e.parse("t")));
    CHECK(up_membership(e, gens, e.parse("g | t")));
    CHECK_FALSE(up_membership(e, gens, e.parse("g & t")));
    std::vector<Element> empty;
    CHECK_FALSE(up_membership(e, empty, e.parse("t")));

    FiniteLogicEngine kt(kt_spec());
    std::vector<Element> kt_gens = {kt.element("boxq")};
    CHECK(up_membership(kt, kt_gens, kt.element("q")));
    CHECK_FALSE(up_membership(kt, kt_gens, kt.element("r")));
}

TEST_CASE("build_finite_logic") {
    FiniteLogicEngine kt(kt_spec());
    CHECK(kt.leq(kt.element("boxq"), kt.element("q")));
    CHECK_FALSE(kt.leq(kt.element("q"), kt.element("boxq")));
    CHECK(kt.warnings().empty());
    CHECK_FALSE(kt.has_join());
    CHECK_THROWS_AS(kt.join(0, 1), CapabilityError);

    // empty declared order is discrete
    FinitePresentedLogic discrete;
    discrete.elements = {"a", "b"};
    FiniteLogicEngine d(discrete);
    CHECK(d.leq(d.element("a"), d.element("a")));
    CHECK_FALSE(d.leq(d.element("a"), d.element("b")));

    // chains close transitively
    FinitePresentedLogic chain;
    chain.elements = {"a", "b", "c"};
    chain.declared_leq = {{"a", "b"}, {"b", "c"}};
    FiniteLogicEngine ch(chain);
    CHECK(ch.leq(ch.element("a"), ch.element("c")));

    // cycles merge into equivalence classes with a warning
    FinitePresentedLogic cyc;
    cyc.elements = {"a", "b"};
    cyc.declared_leq = {{"a", "b"}, {"b", "a"}};
    FiniteLogicEngine cy(cyc);
    CHECK(cy.equiv(cy.element("a"), cy.element("b")));
    REQUIRE(cy.warnings().size() == 1);
}

TEST_CASE("declared join tables are validated") {
    FinitePresentedLogic good;
    good.elements = {"bot", "a", "b", "top"};
    good.declared_leq = {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}};
    good.join_table = {{"a", "b", "top"}};
    good.meet_table = {{"a", "b", "bot"}};
    FiniteLogicEngine e(good);
    CHECK(e.has_join());
    CHECK(e.join(e.element("a"), e.element("b")) == e.element("top"));
    CHECK(e.join(e.element("b"), e.element("a")) == e.element("top"));
    CHECK(e.meet(e.element("a"), e.element("b")) == e.element("bot"));
    CHECK_THROWS_AS(e.join(e.element("a"), e.element("top")), CapabilityError);

    FinitePresentedLogic bad = good;
    bad.join_table = {{"a", "b", "a"}};  // not an upper bound of b
    CHECK_THROWS_AS(FiniteLogicEngine{bad}, Error);

    // diamond with two incomparable upper bounds: neither is least
    FinitePresentedLogic diamond;
    diamond.elements = {"a", "b", "u1", "u2"};
    diamond.declared_leq = {{"a", "u1"}, {"b", "u1"}, {"a", "u2"}, {"b", "u2"}};
    diamond.join_table = {{"a", "b", "u1"}};
    CHECK_THROWS_AS(FiniteLogicEngine{diamond}, Error);
}

TEST_CASE("order laws hold on engines") {
    FiniteLogicEngine kt(kt_spec());
    auto domain = *kt.enumerate();
    for (Element a : domain) {
        CHECK(kt.leq(a, a));
        for (Element b : domain)
            for (Element c : domain)
                if (kt.leq(a, b) && kt.leq(b, c)) CHECK(kt.leq(a, c));
    }

    ClassicalEngine e(VariableUniverse({"g", "t"}));
    std::vector<Element> pool;
    std::vector<std::string> texts = {"g", "t", "~g", "g & t", "g | t", "0", "1", "g -> t"};
    for (const auto& s : texts) pool.push_back(e.parse(s));
    for (Element a : pool) {
        CHECK(e.leq(a, a));
        for (Element b : pool) {
            CHECK((e.leq(a, b) && e.leq(b, a)) == e.equiv(a, b));
            // join laws
            Element j = e.join(a, b);
            CHECK(e.leq(a, j));
            CHECK(e.leq(b, j));
            for (Element z : pool)
                if (e.leq(a, z) && e.leq(b, z)) CHECK(e.leq(j, z));
            for (Element c : pool)
                if (e.leq(a, b) && e.leq(b, c)) CHECK(e.leq(a, c));
        }
    }
}

TEST_CASE("closure laws checker") {
    ClassicalEngine e(VariableUniverse({"g", "t"}));
    std::vector<Element> pool_elems;
    for (const auto& s : {"g", "t", "~g", "g & t", "g | t", "1"}) pool_elems.push_back(e.parse(s));

    // the pool of sets: every subset of a 4-element slice plus a couple more
    std::vector<ElementSet> pool;
    for (int mask = 0; mask < 16; ++mask) {
        ElementSet s;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) s.insert(pool_elems[i]);
        pool.push_back(s);
    }

    SetFunction up = [&](const ElementSet& s) {
        ElementSet out = s;
        for (Element g : pool_elems)
            for (Element x : s)
                if (e.leq(x, g)) out.insert(g);
        return out;
    };
    CHECK(closure_laws_check(e, up, pool).pass());

    SetFunction identity = [](const ElementSet& s) { return s; };
    CHECK(closure_laws_check(e, identity, pool).pass());

    SetFunction dropper = [](const ElementSet& s) {
        ElementSet out = s;
        if (!out.empty()) out.erase(out.begin());
        return out;
    };
    auto report = closure_laws_check(e, dropper, pool);
    CHECK_FALSE(report.pass());
    bool inclusion_violated = false;
    for (const auto& v : report.violations)
        if (v.law == ClosureViolation::Law::Inclusion) inclusion_violated = true;
    CHECK(inclusion_violated);
}
