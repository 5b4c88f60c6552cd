#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "iologic/term.hpp"

namespace iologic {

class CapabilityError : public Error {
public:
    using Error::Error;
};

/// Pluggable consequence contract: an element domain with the induced order
/// a <= b (b is a consequence of a alone). Capabilities beyond the order are
/// opt-in; operations that need a missing capability throw CapabilityError.
///
/// Engines are immutable once their elements exist and all query methods are
/// const. Interning new elements (classical engine) is not thread-safe;
/// concurrent queries over already-interned elements are.
class ConsequenceEngine {
public:
    using Element = std::uint32_t;

    virtual ~ConsequenceEngine() = default;

    virtual bool leq(Element a, Element b) const = 0;
    bool equiv(Element a, Element b) const { return leq(a, b) && leq(b, a); }

    virtual bool has_join() const { return false; }
    virtual bool has_meet() const { return false; }
    virtual bool has_atoms() const { return false; }
    virtual bool has_constants() const { return false; }

    virtual Element join(Element, Element) const {
        throw CapabilityError("engine does not provide joins");
    }
    virtual Element meet(Element, Element) const {
        throw CapabilityError("engine does not provide meets");
    }
    virtual Element top() const { throw CapabilityError("engine does not provide constants"); }
    virtual Element bottom() const { throw CapabilityError("engine does not provide constants"); }
    virtual std::vector<Element> atoms_below(Element) const {
        throw CapabilityError("engine does not enumerate atoms");
    }

    /// All elements, for engines with a finite materialized domain.
    virtual std::optional<std::vector<Element>> enumerate() const { return std::nullopt; }

    virtual std::string describe(Element) const = 0;
    virtual std::size_t element_count() const = 0;

protected:
    void check_element(Element e) const {
        if (e >= element_count()) throw Error("unknown element id " + std::to_string(e));
    }
};

/// The free Boolean algebra over a declared variable universe. Elements are
/// interned canonical semantic forms, so element equality coincides with
/// logical equivalence and syntactically different but equivalent terms share
/// one id.
class ClassicalEngine final : public ConsequenceEngine {
public:
    explicit ClassicalEngine(VariableUniverse universe);

    const VariableUniverse& universe() const { return universe_; }

    Element intern_term(const Term& t);
    Element intern_form(const SemanticForm& f, std::string description = "");
    Element parse(const std::string& text) { return intern_term(parse_term(text, universe_)); }

    const SemanticForm& form(Element e) const;

    bool leq(Element a, Element b) const override;
    bool has_join() const override { return true; }
    bool has_meet() const override { return true; }
    bool has_atoms() const override { return true; }
    bool has_constants() const override { return true; }
    Element join(Element a, Element b) const override;
    Element meet(Element a, Element b) const override;
    Element top() const override;
    Element bottom() const override;
    std::vector<Element> atoms_below(Element e) const override;

    std::string describe(Element e) const override;
    std::size_t element_count() const override { return entries_.size(); }

private:
    struct Entry {
        SemanticForm form;
        std::string description;
    };
    Element intern_impl(const SemanticForm& f, const std::string& desc) const;
    std::string synthesize_description(const SemanticForm& f) const;

    VariableUniverse universe_;
    // interning is logically const: the algebra always contains every form,
    // entries just materialize them on demand
    mutable std::vector<Entry> entries_;
    mutable std::map<SemanticForm, Element> index_;
};

/// Finite presentation of an abstract logic: named elements, declared order
/// pairs (closed reflexively and transitively), and optional join/meet
/// tables. Declared pairs that force a cycle merge the elements into one
/// equivalence class; this is recorded as a warning, not an error.
struct FinitePresentedLogic {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> declared_leq;
    // each entry: (left, right, result)
    std::vector<std::array<std::string, 3>> join_table;
    std::vector<std::array<std::string, 3>> meet_table;
};

class FiniteLogicEngine final : public ConsequenceEngine {
public:
    explicit FiniteLogicEngine(const FinitePresentedLogic& spec);

    Element element(const std::string& name) const;
    const std::string& name(Element e) const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    bool leq(Element a, Element b) const override;
    bool has_join() const override { return !join_.empty(); }
    bool has_meet() const override { return !meet_.empty(); }
    Element join(Element a, Element b) const override;
    Element meet(Element a, Element b) const override;

    std::optional<std::vector<Element>> enumerate() const override;
    std::string describe(Element e) const override;
    std::size_t element_count() const override { return names_.size(); }

private:
    Element lookup_in(const std::map<std::pair<Element, Element>, Element>& table,
                      Element a, Element b, const char* what) const;

    std::vector<std::string> names_;
    std::map<std::string, Element> by_name_;
    std::vector<std::vector<bool>> leq_;  // reflexive-transitive closure
    std::map<std::pair<Element, Element>, Element> join_;
    std::map<std::pair<Element, Element>, Element> meet_;
    std::vector<std::string> warnings_;
};

FiniteLogicEngine build_finite_logic(const FinitePresentedLogic& spec);

/// x is in the least upward-closed set containing the generators.
bool up_membership(const ConsequenceEngine& engine,
                   std::span<const ConsequenceEngine::Element> generators,
                   ConsequenceEngine::Element x);

using ElementSet = std::set<ConsequenceEngine::Element>;
using SetFunction = std::function<ElementSet(const ElementSet&)>;

struct ClosureViolation {
    enum class Law { Inclusion, Monotony, Idempotence };
    Law law;
    ElementSet witness_a;
    ElementSet witness_b;  // Monotony only: the superset
    std::string detail;
};

struct ClosureLawsReport {
    std::size_t checked = 0;
    std::vector<ClosureViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Checks inclusion, monotony (over subset pairs drawn from the pool) and
/// idempotence of an arbitrary set-to-set function.
ClosureLawsReport closure_laws_check(const ConsequenceEngine& engine, const SetFunction& C,
                                     const std::vector<ElementSet>& pool);

}  // namespace iologic
