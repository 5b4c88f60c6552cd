#include "iologic/engine.hpp"

#include <algorithm>

namespace iologic {

// ---------------------------------------------------------------------------
// ClassicalEngine

ClassicalEngine::ClassicalEngine(VariableUniverse universe) : universe_(std::move(universe)) {}

ClassicalEngine::Element ClassicalEngine::intern_term(const Term& t) {
    return intern_impl(semantic_form(t, universe_), render_term(t));
}

ClassicalEngine::Element ClassicalEngine::intern_form(const SemanticForm& f,
                                                      std::string description) {
    return intern_impl(f, description);
}

ClassicalEngine::Element ClassicalEngine::intern_impl(const SemanticForm& f,
                                                      const std::string& desc) const {
    if (f.var_count() != universe_.size())
        throw UniverseMismatchError("form does not match the engine's universe");
    auto it = index_.find(f);
    if (it != index_.end()) return it->second;
    Element id = static_cast<Element>(entries_.size());
    entries_.push_back({f, desc.empty() ? synthesize_description(f) : desc});
    index_.emplace(f, id);
    return id;
}

std::string ClassicalEngine::synthesize_description(const SemanticForm& f) const {
    if (f.empty()) return "0";
    if (f.full()) return "1";
    std::string out;
    for (const auto& v : f.valuations()) {
        if (!out.empty()) out += " | ";
        out += valuation_literal(v, universe_);
    }
    return f.count() > 1 ? "(" + out + ")" : out;
}

const SemanticForm& ClassicalEngine::form(Element e) const {
    check_element(e);
    return entries_[e].form;
}

bool ClassicalEngine::leq(Element a, Element b) const {
    check_element(a);
    check_element(b);
    return entries_[a].form.subset_of(entries_[b].form);
}

ClassicalEngine::Element ClassicalEngine::join(Element a, Element b) const {
    const std::string d = "(" + describe(a) + " | " + describe(b) + ")";
    return intern_impl(form(a).unite(form(b)), d);
}

ClassicalEngine::Element ClassicalEngine::meet(Element a, Element b) const {
    const std::string d = "(" + describe(a) + " & " + describe(b) + ")";
    return intern_impl(form(a).intersect(form(b)), d);
}

ClassicalEngine::Element ClassicalEngine::top() const {
    return intern_impl(SemanticForm::all(universe_.size()), "1");
}

ClassicalEngine::Element ClassicalEngine::bottom() const {
    return intern_impl(SemanticForm::none(universe_.size()), "0");
}

std::vector<ClassicalEngine::Element> ClassicalEngine::atoms_below(Element e) const {
    std::vector<Element> atoms;
    for (const auto& v : form(e).valuations()) {
        SemanticForm m = SemanticForm::minterm(universe_.size(), v.index);
        atoms.push_back(intern_impl(m, valuation_literal(v, universe_)));
    }
    return atoms;
}

std::string ClassicalEngine::describe(Element e) const {
    check_element(e);
    return entries_[e].description;
}

// ---------------------------------------------------------------------------
// FiniteLogicEngine

FiniteLogicEngine::FiniteLogicEngine(const FinitePresentedLogic& spec) : names_(spec.elements) {
    if (names_.empty()) throw Error("finite logic needs at least one element");
    for (Element i = 0; i < names_.size(); ++i) {
        if (!by_name_.emplace(names_[i], i).second)
            throw Error("duplicate element name: '" + names_[i] + "'");
    }
    std::size_t n = names_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
    for (const auto& [lo, hi] : spec.declared_leq) {
        leq_[element(lo)][element(hi)] = true;
    }
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq_[k][j]) leq_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq_[i][j] && leq_[j][i])
                warnings_.push_back("declared order makes '" + names_[i] + "' and '" + names_[j] +
                                    "' equivalent; treating them as one equivalence class");

    auto load_table = [&](const std::vector<std::array<std::string, 3>>& decls,
                          std::map<std::pair<Element, Element>, Element>& table, bool is_join) {
        for (const auto& [ls, rs, out] : decls) {
            Element l = element(ls), r = element(rs), o = element(out);
            bool lb = is_join ? leq_[l][o] : leq_[o][l];
            bool rb = is_join ? leq_[r][o] : leq_[o][r];
            if (!lb || !rb)
                throw Error(std::string(is_join ? "join" : "meet") + " entry for '" + ls +
                            "', '" + rs + "' is not a bound of both arguments");
            for (Element z = 0; z < n; ++z) {
                bool zb = is_join ? (leq_[l][z] && leq_[r][z]) : (leq_[z][l] && leq_[z][r]);
                bool min = is_join ? leq_[o][z] : leq_[z][o];
                if (zb && !min)
                    throw Error(std::string(is_join ? "join" : "meet") + " entry for '" + ls +
                                "', '" + rs + "' is not the least/greatest bound (see '" +
                                names_[z] + "')");
            }
            table[{l, r}] = o;
            table[{r, l}] = o;
        }
    };
    load_table(spec.join_table, join_, true);
    load_table(spec.meet_table, meet_, false);
}

FiniteLogicEngine::Element FiniteLogicEngine::element(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw Error("unknown element '" + name + "'");
    return it->second;
}

const std::string& FiniteLogicEngine::name(Element e) const {
    check_element(e);
    return names_[e];
}

bool FiniteLogicEngine::leq(Element a, Element b) const {
    check_element(a);
    check_element(b);
    return leq_[a][b];
}

FiniteLogicEngine::Element FiniteLogicEngine::lookup_in(
    const std::map<std::pair<Element, Element>, Element>& table, Element a, Element b,
    const char* what) const {
    check_element(a);
    check_element(b);
    auto it = table.find({a, b});
    if (it == table.end())
        throw CapabilityError(std::string("no declared ") + what + " for '" + names_[a] +
                              "' and '" + names_[b] + "'");
    return it->second;
}

FiniteLogicEngine::Element FiniteLogicEngine::join(Element a, Element b) const {
    if (join_.empty()) throw CapabilityError("engine does not provide joins");
    return lookup_in(join_, a, b, "join");
}

FiniteLogicEngine::Element FiniteLogicEngine::meet(Element a, Element b) const {
    if (meet_.empty()) throw CapabilityError("engine does not provide meets");
    return lookup_in(meet_, a, b, "meet");
}

std::optional<std::vector<FiniteLogicEngine::Element>> FiniteLogicEngine::enumerate() const {
    std::vector<Element> all(names_.size());
    for (Element i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

std::string FiniteLogicEngine::describe(Element e) const { return name(e); }

FiniteLogicEngine build_finite_logic(const FinitePresentedLogic& spec) {
    return FiniteLogicEngine(spec);
}

// ---------------------------------------------------------------------------

bool up_membership(const ConsequenceEngine& engine,
                   std::span<const ConsequenceEngine::Element> generators,
                   ConsequenceEngine::Element x) {
    for (auto g : generators)
        if (engine.leq(g, x)) return true;
    return false;
}

namespace {

std::string describe_set(const ConsequenceEngine& engine, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto e : s) {
        if (!first) out += ", ";
        out += engine.describe(e);
        first = false;
    }
    return out + "}";
}

}  // namespace

ClosureLawsReport closure_laws_check(const ConsequenceEngine& engine, const SetFunction& C,
                                     const std::vector<ElementSet>& pool) {
    ClosureLawsReport report;
    for (const auto& a : pool) {
        ElementSet ca = C(a);
        ++report.checked;
        if (!std::includes(ca.begin(), ca.end(), a.begin(), a.end()))
            report.violations.push_back({ClosureViolation::Law::Inclusion, a, {},
                                         "A not within C(A) for A=" + describe_set(engine, a)});
        ElementSet cca = C(ca);
        if (cca != ca)
            report.violations.push_back({ClosureViolation::Law::Idempotence, a, {},
                                         "C(C(A)) != C(A) for A=" + describe_set(engine, a)});
        for (const auto& b : pool) {
            if (&a == &b || !std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
            ++report.checked;
            ElementSet cb = C(b);
            if (!std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()))
                report.violations.push_back(
                    {ClosureViolation::Law::Monotony, a, b,
                     "C not monotone between A=" + describe_set(engine, a) +
                         " and B=" + describe_set(engine, b)});
        }
    }
    return report;
}

}  // namespace iologic
