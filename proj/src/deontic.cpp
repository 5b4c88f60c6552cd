#include "iologic/deontic.hpp"

#include <algorithm>

namespace iologic {

namespace {

bool derivable(const OutOp& i, const NormativeSystem& N, const Term& phi, const Term& psi,
               ClassicalEngine& engine) {
    Element input[1] = {engine.intern_term(phi)};
    return check_membership(i, N, input, engine.intern_term(psi), engine);
}

SemanticForm conjoin_all(const std::vector<Term>& ts, const VariableUniverse& u) {
    SemanticForm f = SemanticForm::all(u.size());
    for (const auto& t : ts) f = f.intersect(semantic_form(t, u));
    return f;
}

}  // namespace

bool derive_con(const OutOp& i, const NormativeSystem& N, const Constraint& con, const Term& phi,
                const Term& psi, ClassicalEngine& engine) {
    if (!derivable(i, N, phi, psi, engine)) return false;
    const auto& u = engine.universe();
    SemanticForm joint = conjoin_all(con.formulas, u).intersect(semantic_form(psi, u));
    return !joint.empty();
}

std::vector<Valuation> optimal_valuations(const std::vector<std::pair<Valuation, Valuation>>& f,
                                          const Term& phi, const VariableUniverse& universe) {
    auto models = semantic_form(phi, universe).valuations();
    std::vector<Valuation> opt;
    for (const auto& v : models) {
        bool dominates_all = std::all_of(models.begin(), models.end(), [&](const Valuation& w) {
            return std::find(f.begin(), f.end(), std::make_pair(v, w)) != f.end();
        });
        if (dominates_all) opt.push_back(v);
    }
    return opt;
}

std::vector<Valuation> optimal_valuations_premise(const std::vector<Term>& premises,
                                                  const Term& phi,
                                                  const VariableUniverse& universe) {
    std::vector<SemanticForm> pf;
    pf.reserve(premises.size());
    for (const auto& p : premises) pf.push_back(semantic_form(p, universe));
    auto at_least_as_good = [&](const Valuation& v, const Valuation& w) {
        for (const auto& f : pf)
            if (f.test(w.index) && !f.test(v.index)) return false;
        return true;
    };
    auto models = semantic_form(phi, universe).valuations();
    std::vector<Valuation> opt;
    for (const auto& v : models) {
        bool dominates_all = std::all_of(models.begin(), models.end(),
                                         [&](const Valuation& w) { return at_least_as_good(v, w); });
        if (dominates_all) opt.push_back(v);
    }
    return opt;
}

bool obligation_oh(const OutOp& i, const NormativeSystem& N,
                   const std::vector<std::pair<Valuation, Valuation>>& f, const Term& phi,
                   const Term& psi, ClassicalEngine& engine) {
    const auto& u = engine.universe();
    for (const auto& [a, b] : f)
        if (a.index >= u.valuation_count() || b.index >= u.valuation_count())
            throw Error("betterness relation references a valuation outside the universe");
    if (!derivable(i, N, phi, psi, engine)) return false;
    SemanticForm psif = semantic_form(psi, u);
    for (const auto& v : optimal_valuations(f, phi, u))
        if (!psif.test(v.index)) return false;
    return true;
}

bool obligation_ok_direct(const OutOp& i, const NormativeSystem& N,
                          const std::vector<Term>& premises, const Term& phi, const Term& psi,
                          ClassicalEngine& engine) {
    if (!derivable(i, N, phi, psi, engine)) return false;
    const auto& u = engine.universe();
    SemanticForm psif = semantic_form(psi, u);
    for (const auto& v : optimal_valuations_premise(premises, phi, u))
        if (!psif.test(v.index)) return false;
    return true;
}

bool obligation_ok_rewrite(const OutOp& i, const NormativeSystem& N,
                           const std::vector<Term>& premises, const Term& phi, const Term& psi,
                           ClassicalEngine& engine) {
    if (!derivable(i, N, phi, psi, engine)) return false;
    const auto& u = engine.universe();
    SemanticForm phif = semantic_form(phi, u);
    SemanticForm psif = semantic_form(psi, u);
    SemanticForm joint = conjoin_all(premises, u).intersect(phif);
    if (!joint.empty()) return joint.subset_of(psif);  // premises, phi |- psi
    return phif.subset_of(psif);                       // phi |- psi
}

bool obligation_ok(const OutOp& i, const NormativeSystem& N, const std::vector<Term>& premises,
                   const Term& phi, const Term& psi, ClassicalEngine& engine) {
    return obligation_ok_rewrite(i, N, premises, phi, psi, engine);
}

bool permission_ph(const OutOp& i, const NormativeSystem& N,
                   const std::vector<std::pair<Valuation, Valuation>>& f, const Term& phi,
                   const Term& psi, ClassicalEngine& engine) {
    if (!derivable(i, N, phi, psi, engine)) return false;
    const auto& u = engine.universe();
    SemanticForm psif = semantic_form(psi, u);
    auto opt = optimal_valuations(f, phi, u);
    return std::any_of(opt.begin(), opt.end(),
                       [&](const Valuation& v) { return psif.test(v.index); });
}

bool permission_pk(const OutOp& i, const NormativeSystem& N, const std::vector<Term>& premises,
                   const Term& phi, const Term& psi, ClassicalEngine& engine) {
    if (!derivable(i, N, phi, psi, engine)) return false;
    const auto& u = engine.universe();
    SemanticForm psif = semantic_form(psi, u);
    auto opt = optimal_valuations_premise(premises, phi, u);
    return std::any_of(opt.begin(), opt.end(),
                       [&](const Valuation& v) { return psif.test(v.index); });
}

}  // namespace iologic
