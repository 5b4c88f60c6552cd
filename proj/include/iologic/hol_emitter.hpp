#pragma once

#include "iologic/norms.hpp"
#include "iologic/term.hpp"

namespace iologic {

/// One derivability query to emit as a lemma stub: does psi follow from phi
/// under the given operation index?
struct TheoryQuery {
    BaseOp op = BaseOp::One;
    Term antecedent;
    Term consequent;
};

struct TheoryOptions {
    std::string name = "Norms";
    std::vector<BaseOp> ops = {BaseOp::I, BaseOp::II, BaseOp::One, BaseOp::Two, BaseOp::Three};
};

/// A rendered theory, kept as named sections so tests can inspect blocks
/// individually. Rendering is a pure function of the inputs; identical inputs
/// give byte-identical text.
struct TheoryDocument {
    std::string name;
    std::vector<std::pair<std::string, std::string>> sections;  // (label, text)

    const std::string* section(const std::string& label) const;
};

/// Norm bodies/heads are given as terms over the universe. Operation indices
/// follow the semantics: the definition block always carries the ten algebra
/// identities, the requested output operations, and one axiom per norm.
TheoryDocument emit_theory(const std::vector<std::pair<Term, Term>>& norms,
                           const VariableUniverse& universe,
                           const std::vector<TheoryQuery>& queries,
                           const TheoryOptions& options);

std::string render_theory(const TheoryDocument& doc);

}  // namespace iologic
