#pragma once

#include "iologic/out_ops.hpp"

namespace iologic {

/// Contrary-to-duty guard: a finite set of constraint formulas.
struct Constraint {
    std::vector<Term> formulas;
};

/// Preference over valuations, either supplied extensionally (pairs meaning
/// first is at least as good as second; no properties imposed) or induced by
/// a premise set: v is at least as good as w iff every premise true at w is
/// true at v (reflexive and transitive by construction).
struct PreferenceModel {
    enum class Kind { Explicit, Premise };
    Kind kind = Kind::Premise;
    std::vector<std::pair<Valuation, Valuation>> pairs;  // Explicit: (better, worse)
    std::vector<Term> premises;                          // Premise
};

struct ConditionalQuery {
    enum class Modality { Obligation, Permission };
    Term antecedent;
    Modality modality = Modality::Obligation;
    Term consequent;
    OutOp system = OutOp::make_base(BaseOp::One);
};

/// (phi, psi) derivable under op i and Con u {psi} jointly satisfiable. A
/// consequent equivalent to bottom is never jointly satisfiable, even with an
/// empty constraint set.
bool derive_con(const OutOp& i, const NormativeSystem& N, const Constraint& con, const Term& phi,
                const Term& psi, ClassicalEngine& engine);

/// Optimal phi-valuations under an arbitrary betterness relation f:
/// opt_f(phi) = { v |= phi : for all w |= phi, v is f-at-least-as-good as w }.
std::vector<Valuation> optimal_valuations(const std::vector<std::pair<Valuation, Valuation>>& f,
                                          const Term& phi, const VariableUniverse& universe);

/// Optimal phi-valuations under the premise-set preference.
std::vector<Valuation> optimal_valuations_premise(const std::vector<Term>& premises,
                                                  const Term& phi,
                                                  const VariableUniverse& universe);

/// Conditional obligation over an explicit betterness relation: derivable and
/// psi true at every optimal phi-valuation.
bool obligation_oh(const OutOp& i, const NormativeSystem& N,
                   const std::vector<std::pair<Valuation, Valuation>>& f, const Term& phi,
                   const Term& psi, ClassicalEngine& engine);

/// The two routes for premise-set conditional obligation. The direct route
/// quantifies over optimal valuations of the induced preference; the rewrite
/// route uses the consistency split: if phi is consistent with the premises
/// then premises, phi |- psi, otherwise phi |- psi. The routes agree whenever
/// the premises are jointly satisfiable with phi (and always when the premise
/// set has at most one element); with two or more premises that phi cannot
/// jointly satisfy, the optimal set can be empty (incomparable premise
/// traces), the direct route holds vacuously, and the rewrite route can still
/// fail. Callers that need one verdict should say which route they mean.
bool obligation_ok_direct(const OutOp& i, const NormativeSystem& N,
                          const std::vector<Term>& premises, const Term& phi, const Term& psi,
                          ClassicalEngine& engine);
bool obligation_ok_rewrite(const OutOp& i, const NormativeSystem& N,
                           const std::vector<Term>& premises, const Term& phi, const Term& psi,
                           ClassicalEngine& engine);

/// Rewrite-route verdict (the documented characterization).
bool obligation_ok(const OutOp& i, const NormativeSystem& N, const std::vector<Term>& premises,
                   const Term& phi, const Term& psi, ClassicalEngine& engine);

/// Conditional permission: derivable and some optimal phi-valuation satisfies
/// psi.
bool permission_ph(const OutOp& i, const NormativeSystem& N,
                   const std::vector<std::pair<Valuation, Valuation>>& f, const Term& phi,
                   const Term& psi, ClassicalEngine& engine);
bool permission_pk(const OutOp& i, const NormativeSystem& N, const std::vector<Term>& premises,
                   const Term& phi, const Term& psi, ClassicalEngine& engine);

}  // namespace iologic
