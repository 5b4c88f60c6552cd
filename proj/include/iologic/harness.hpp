#pragma once

#include "json.hpp"

#include "iologic/derivation.hpp"
#include "iologic/deontic.hpp"

namespace iologic {

/// Deterministic instance pool parameters. The term pool is the first
/// `pool_size` semantically distinct terms over `var_count` variables in
/// canonical generation order (variables, constants, then negations, meets
/// and joins breadth-first); normative systems draw their pairs from
/// pool x pool.
struct PoolConfig {
    std::size_t var_count = 2;
    std::size_t pool_size = 10;
    std::size_t max_norms = 3;
    bool exhaustive = true;
    std::size_t random_instances = 200;  // used when !exhaustive
    std::uint64_t seed = 0;
    int depth = 8;                  // proof-search height bound
    std::size_t spot_check_stride = 20000;  // full tree search every n-th check; 0 = off
};

struct Mismatch {
    std::string instance;
    std::string operation;
    std::string detail;
    bool semantic = false;
    bool syntactic = false;
};

struct EquivalenceReport {
    std::uint64_t checked = 0;
    std::vector<Mismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
    nlohmann::json to_json() const;
    std::string summary(const std::string& title) const;
};

struct SystemPairing {
    OutOp op;
    RuleSystem rules;
};

/// The eight base operations with their characterizing rule sets.
std::vector<SystemPairing> base_pairings();
/// AND(II/1/2), CT(I/II/1) and CT-AND with theirs.
std::vector<SystemPairing> iterated_pairings();

std::vector<Term> build_term_pool(const VariableUniverse& u, std::size_t size);
/// All terms of syntactic depth <= depth, semantically deduplicated.
std::vector<Term> build_depth_pool(const VariableUniverse& u, std::size_t depth);

/// Semantic verdict vs height-bounded derivability for every system drawn
/// from the pool, every single-term input and every query. The syntactic side
/// is the dense saturation (exact height accounting); every
/// `spot_check_stride`-th verdict is additionally re-derived with the tree
/// search and cross-checked.
EquivalenceReport run_equivalence(const PoolConfig& cfg,
                                  const std::vector<SystemPairing>& pairings);

/// Pair-level closure laws (inclusion, monotony, idempotence) for the given
/// operations over the pool.
EquivalenceReport run_closure_laws(const PoolConfig& cfg, const std::vector<OutOp>& ops);

/// Set-level evaluation of ops 2 and 3 against the existential lift, over
/// input sets of size 1 and 2.
EquivalenceReport run_set_level(const PoolConfig& cfg);

struct RuleCheck {
    OutOp op;
    Rule rule;
    bool expected_valid = false;
    bool violation_found = false;
    std::string witness;
    std::uint64_t checked = 0;

    bool ok() const { return expected_valid != violation_found; }
};

struct RuleMatrixReport {
    std::vector<RuleCheck> entries;
    bool pass() const;
    nlohmann::json to_json() const;
};

/// For every operation: closure under its own rules holds everywhere, and
/// for every genuinely refutable omitted rule a counterexample is found.
/// EQI/EQO hold universally under canonical semantics, and T is admissible
/// wherever SI and CT are both present, so those combinations expect no
/// counterexample.
RuleMatrixReport run_rule_matrix(const PoolConfig& cfg, const std::vector<OutOp>& ops);

struct DeonticConfig {
    std::size_t instances = 500;
    std::uint64_t seed = 1;
    bool corrupt_rewrite = false;  // negative control: drop the inconsistent branch
};

/// Premise-set obligation: direct optimal-valuation route vs the
/// consistency-split rewrite, plus the two-valued vs maximal-consistent-set
/// routes for the explicit-relation obligation.
EquivalenceReport run_deontic_checks(const DeonticConfig& cfg);

}  // namespace iologic
