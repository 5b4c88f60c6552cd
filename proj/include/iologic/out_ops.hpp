#pragma once

#include <span>

#include "iologic/norms.hpp"

namespace iologic {

/// Finite presentation of an output set: the set equals the closure of these
/// elements, either upward (Up) or under equivalence only, depending on the
/// operation that produced it. Elements are pairwise non-redundant.
struct GeneratorSet {
    enum class Closure { UpSet, EquivClass };
    Closure closure = Closure::UpSet;
    std::vector<Element> elements;  // sorted by id

    bool empty() const { return elements.empty(); }
    bool contains(const ConsequenceEngine& engine, Element x) const;
};

/// x in out_op(N, A) for a base operation. A is a finite input set; the empty
/// set yields an empty output for every operation.
///
/// Ops R/L/0/I/II/1 existentially scan norms per input element. Op 2 uses the
/// single-input criterion x in out_2(N,{a}) iff S = {(b,y) in N : y <= x} is
/// non-empty and a <= join(bodies(S)); for larger inputs it quantifies over
/// choice functions of atoms (needs atom enumeration). Op 3 runs the least
/// fixpoint V = Up(A u T), T growing by heads of triggered norms.
bool out_membership(const OutOp& op, const NormativeSystem& N, std::span<const Element> input,
                    Element x, const ConsequenceEngine& engine);

bool out_membership(BaseOp op, const NormativeSystem& N, std::span<const Element> input,
                    Element x, const ConsequenceEngine& engine);

/// Finite generator presentation of out_op(N, {a}) for op in {I, II, 1, 2, 3}.
GeneratorSet out_generators(BaseOp op, const NormativeSystem& N, Element a,
                            const ConsequenceEngine& engine);

/// x in the AND-iteration closure of out_base(N, {a}), base in {II, 1, 2}.
/// The AND closure of an upward-closed set in a distributive lattice is
/// Up(meet of all generators), so the decision is one meet-fold plus one leq.
bool and_membership(BaseOp base, const NormativeSystem& N, Element a, Element x,
                    const ConsequenceEngine& engine);

/// x in the CT-iteration closure of out_base(N, {a}), base in {I, II, 1}.
GeneratorSet ct_generators(BaseOp base, const NormativeSystem& N, Element a,
                           const ConsequenceEngine& engine);
bool ct_membership(BaseOp base, const NormativeSystem& N, Element a, Element x,
                   const ConsequenceEngine& engine);

/// x in the AND closure of the CT closure of out_1(N, {a}).
bool ct_and_membership(const NormativeSystem& N, Element a, Element x,
                       const ConsequenceEngine& engine);

/// x in the OR-iteration closure of out_base(N, {a}); base I is the only
/// paired base. The closure joins bodies of level-0 members with a common
/// head, so x is a member iff a <= join(bodies of norms with head equiv x).
bool or_membership(BaseOp base, const NormativeSystem& N, Element a, Element x,
                   const ConsequenceEngine& engine);

/// Lifted dispatcher used by the CLI: base ops go through out_membership,
/// iterated ops are lifted existentially over the input set.
bool check_membership(const OutOp& op, const NormativeSystem& N, std::span<const Element> input,
                      Element x, const ConsequenceEngine& engine);

/// Direct set-level evaluation of ops 2 and 3 on the classical engine: op 2
/// intersects Up(N(V)) over every saturated V containing the input set
/// (saturated sets are enumerated through their atom generators), op 3 runs
/// the fixpoint extensionally over all 2^2^n algebra elements. Exists to
/// cross-check the existential lift; desk scale only (universe of at most 4
/// variables).
bool out_set_semantic(BaseOp op, const NormativeSystem& N, std::span<const Element> input,
                      Element x, const ConsequenceEngine& engine);

/// A norm-over-norms system for nested output operations.
struct MetaNorm {
    std::string id;
    Norm body;
    Norm head;
};

/// Consequence engine whose elements are norms over a base engine, ordered by
/// (a,x) <= (b,y) iff (b,y) is in the derive_i closure of N u {(a,x)}. The
/// order matrix is computed eagerly over the supplied norm domain.
class MetaNormEngine final : public ConsequenceEngine {
public:
    MetaNormEngine(const ConsequenceEngine& base, const NormativeSystem& N, BaseOp index,
                   std::vector<Norm> domain);

    Element element_for(const Norm& n) const;

    bool leq(Element a, Element b) const override;
    std::optional<std::vector<Element>> enumerate() const override;
    std::string describe(Element e) const override;
    std::size_t element_count() const override { return domain_.size(); }

private:
    const ConsequenceEngine& base_;
    std::vector<Norm> domain_;
    std::vector<std::vector<bool>> leq_;
};

/// out_j over the meta engine induced by (N, i); i and j in {0, I, II, 1, 3}.
bool nested_out(const OutOp& j, const std::vector<MetaNorm>& M, BaseOp i,
                const NormativeSystem& N, std::span<const Norm> meta_input, const Norm& target,
                const ConsequenceEngine& engine);

}  // namespace iologic
