#pragma once

#include <optional>
#include <set>

#include "json.hpp"

#include "iologic/norms.hpp"

namespace iologic {

enum class Rule : std::uint8_t { EQI, EQO, SI, WO, OR, T, AND, CT };

std::string to_string(Rule r);
std::optional<Rule> parse_rule(const std::string& name);

struct RuleSystem {
    std::set<Rule> rules;
    std::string name;

    bool has(Rule r) const { return rules.count(r) != 0; }
    static RuleSystem of(std::initializer_list<Rule> rs, std::string name = "");
};

/// The named systems: each base and iterated operation paired with the rule
/// set that characterizes it.
RuleSystem matching_rules(const OutOp& op);

struct SideCondition {
    enum class Kind { Leq, Equiv };
    Kind kind = Kind::Leq;
    Element lhs = 0;
    Element rhs = 0;
};

/// Proof tree: leaves are norms of N (recorded by id), inner nodes apply one
/// rule to their premises, with the order/equality fact recorded where the
/// rule demands one.
struct DerivationTree {
    Element body = 0;
    Element head = 0;
    std::optional<Rule> rule;  // nullopt: leaf
    std::string norm_id;       // leaf only
    std::optional<SideCondition> side;
    std::vector<DerivationTree> premises;

    std::size_t height() const;
};

struct DeriveResult {
    std::optional<DerivationTree> tree;
    bool depth_limited = false;  // negative answers only: search was cut by the bound
    int max_depth = 0;
};

/// Iterative-deepening backward search for a derivation of the goal pair.
/// Side-condition candidates are drawn from the meet/join closure of the
/// norm bodies, heads and goal components (capped). max_depth < 0 selects
/// the default bound 2*|N| + 4.
DeriveResult derive(const RuleSystem& rules, const NormativeSystem& N,
                    std::pair<Element, Element> goal, int max_depth,
                    const ConsequenceEngine& engine);

/// First input element whose pair has a derivation; the chosen element is the
/// root body of the returned tree.
DeriveResult derive_lifted(const RuleSystem& rules, const NormativeSystem& N,
                           std::span<const Element> input, Element x, int max_depth,
                           const ConsequenceEngine& engine);

/// Independent checker: every node satisfies its rule schema, every side
/// condition holds under the engine, every leaf is a norm of N and every rule
/// used belongs to the system.
bool verify_tree(const DerivationTree& tree, const RuleSystem& rules, const NormativeSystem& N,
                 const ConsequenceEngine& engine);

nlohmann::json tree_to_json(const DerivationTree& tree, const ConsequenceEngine& engine);

// ---------------------------------------------------------------------------
// Dense height-bounded saturation. Used by the equivalence harness, where
// per-query tree search would be too slow: forward-derives every pair over a
// fully enumerated small algebra, tracking exact derivation heights, so
// membership at a given depth bound is one bit lookup. EQI/EQO are identity
// steps on canonical elements and add nothing here.

/// Pair matrix over a dense element universe of `count` elements.
class PairMatrix {
public:
    PairMatrix(std::size_t count);
    bool get(std::size_t body, std::size_t head) const;
    void set(std::size_t body, std::size_t head);
    bool operator==(const PairMatrix&) const = default;
    std::size_t count() const { return count_; }

    std::span<const std::uint64_t> row(std::size_t body) const;
    void or_row(std::size_t body, std::span<const std::uint64_t> bits);

private:
    friend PairMatrix saturate_pairs(const RuleSystem&, const std::vector<std::pair<std::uint16_t, std::uint16_t>>&, const class DenseAlgebra&, int);
    std::size_t count_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Fully enumerated algebra for saturation: the free Boolean algebra over up
/// to 3 variables (element index == valuation bitmask) or any enumerable
/// engine.
class DenseAlgebra {
public:
    static DenseAlgebra classical(std::size_t var_count);  // var_count <= 3
    static DenseAlgebra from_engine(const ConsequenceEngine& engine);

    std::size_t count() const { return count_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_bits(a, b); }
    bool has_meet() const { return has_meet_; }
    bool has_join() const { return has_join_; }
    std::uint16_t meet(std::size_t a, std::size_t b) const { return meet_[a * count_ + b]; }
    std::uint16_t join(std::size_t a, std::size_t b) const { return join_[a * count_ + b]; }

    /// bitset over elements >= e / <= e
    std::span<const std::uint64_t> up_mask(std::size_t e) const;
    std::span<const std::uint64_t> down_mask(std::size_t e) const;

private:
    bool leq_bits(std::size_t a, std::size_t b) const;

    std::size_t count_ = 0;
    std::size_t words_ = 0;
    bool has_meet_ = false, has_join_ = false;
    std::vector<std::uint64_t> up_;    // up_[e]: mask of elements above e
    std::vector<std::uint64_t> down_;  // down_[e]: mask of elements below e
    std::vector<std::uint16_t> meet_, join_;
};

/// All pairs derivable from the given norms within `max_height` rule
/// applications (leaves are height 0). Stops early at the fixpoint.
PairMatrix saturate_pairs(const RuleSystem& rules,
                          const std::vector<std::pair<std::uint16_t, std::uint16_t>>& norms,
                          const DenseAlgebra& algebra, int max_height);

}  // namespace iologic
