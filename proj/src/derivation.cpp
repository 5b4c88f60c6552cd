#include "iologic/derivation.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace iologic {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::EQI: return "EQI";
        case Rule::EQO: return "EQO";
        case Rule::SI: return "SI";
        case Rule::WO: return "WO";
        case Rule::OR: return "OR";
        case Rule::T: return "T";
        case Rule::AND: return "AND";
        case Rule::CT: return "CT";
    }
    return "?";
}

std::optional<Rule> parse_rule(const std::string& name) {
    if (name == "EQI") return Rule::EQI;
    if (name == "EQO") return Rule::EQO;
    if (name == "SI") return Rule::SI;
    if (name == "WO") return Rule::WO;
    if (name == "OR") return Rule::OR;
    if (name == "T") return Rule::T;
    if (name == "AND") return Rule::AND;
    if (name == "CT") return Rule::CT;
    return std::nullopt;
}

RuleSystem RuleSystem::of(std::initializer_list<Rule> rs, std::string name) {
    RuleSystem s;
    s.rules.insert(rs.begin(), rs.end());
    s.name = std::move(name);
    return s;
}

RuleSystem matching_rules(const OutOp& op) {
    switch (op.kind) {
        case OutOp::Kind::Base:
            switch (op.base) {
                case BaseOp::R: return RuleSystem::of({Rule::EQO}, "derive_R");
                case BaseOp::L: return RuleSystem::of({Rule::EQI}, "derive_L");
                case BaseOp::Zero: return RuleSystem::of({Rule::EQI, Rule::EQO}, "derive_0");
                case BaseOp::I: return RuleSystem::of({Rule::SI, Rule::EQO}, "derive_I");
                case BaseOp::II: return RuleSystem::of({Rule::WO, Rule::EQI}, "derive_II");
                case BaseOp::One: return RuleSystem::of({Rule::SI, Rule::WO}, "derive_1");
                case BaseOp::Two:
                    return RuleSystem::of({Rule::SI, Rule::WO, Rule::OR}, "derive_2");
                case BaseOp::Three:
                    return RuleSystem::of({Rule::SI, Rule::WO, Rule::T}, "derive_3");
            }
            break;
        case OutOp::Kind::And:
            switch (op.base) {
                case BaseOp::II:
                    return RuleSystem::of({Rule::WO, Rule::EQI, Rule::AND}, "derive_AND_II");
                case BaseOp::One:
                    return RuleSystem::of({Rule::SI, Rule::WO, Rule::AND}, "derive_AND_1");
                case BaseOp::Two:
                    return RuleSystem::of({Rule::SI, Rule::WO, Rule::OR, Rule::AND},
                                          "derive_AND_2");
                default: break;
            }
            break;
        case OutOp::Kind::Ct:
            switch (op.base) {
                case BaseOp::I:
                    return RuleSystem::of({Rule::SI, Rule::EQO, Rule::CT}, "derive_CT_I");
                case BaseOp::II:
                    return RuleSystem::of({Rule::WO, Rule::EQI, Rule::CT}, "derive_CT_II");
                case BaseOp::One:
                    return RuleSystem::of({Rule::SI, Rule::WO, Rule::CT}, "derive_CT_1");
                default: break;
            }
            break;
        case OutOp::Kind::CtAnd:
            return RuleSystem::of({Rule::SI, Rule::WO, Rule::CT, Rule::AND}, "derive_CT_AND_1");
        case OutOp::Kind::Or:
            return RuleSystem::of({Rule::SI, Rule::EQO, Rule::OR}, "derive_OR_I");
    }
    throw Error("no rule system paired with " + to_string(op));
}

std::size_t DerivationTree::height() const {
    std::size_t h = 0;
    for (const auto& p : premises) h = std::max(h, p.height() + 1);
    return h;
}

// ---------------------------------------------------------------------------
// Backward search

namespace {

std::vector<Element> build_candidate_pool(const NormativeSystem& N,
                                          std::pair<Element, Element> goal,
                                          const ConsequenceEngine& E, std::size_t cap = 1024) {
    std::set<Element> seen;
    std::vector<Element> pool;
    auto add = [&](Element e) {
        if (seen.insert(e).second) pool.push_back(e);
    };
    for (const auto& n : N.norms()) {
        add(n.body);
        add(n.head);
    }
    add(goal.first);
    add(goal.second);
    // close under meets and joins (the sublattice the completeness
    // constructions draw their intermediate terms from); capped
    bool grew = true;
    while (grew && pool.size() < cap) {
        grew = false;
        std::vector<Element> snapshot(pool.begin(), pool.end());
        std::sort(snapshot.begin(), snapshot.end());
        for (std::size_t i = 0; i < snapshot.size() && pool.size() < cap; ++i) {
            for (std::size_t j = i; j < snapshot.size() && pool.size() < cap; ++j) {
                if (E.has_meet()) {
                    std::size_t before = pool.size();
                    add(E.meet(snapshot[i], snapshot[j]));
                    grew |= pool.size() != before;
                }
                if (E.has_join()) {
                    std::size_t before = pool.size();
                    add(E.join(snapshot[i], snapshot[j]));
                    grew |= pool.size() != before;
                }
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

class Searcher {
public:
    Searcher(const RuleSystem& rules, const NormativeSystem& N, const ConsequenceEngine& E,
             std::vector<Element> pool)
        : rules_(rules), N_(N), E_(E), pool_(std::move(pool)) {
        if (auto d = E_.enumerate()) domain_ = *d;
    }

    bool cut = false;

    // The search carries no path state: the verdict at (goal, budget) depends
    // on nothing else, so failures memoize soundly by goal and budget and
    // loops die when the budget runs out.
    std::optional<DerivationTree> prove(Element body, Element head, int budget) {
        const std::uint64_t key = (std::uint64_t{body} << 32) | head;
        if (auto it = success_.find(key);
            it != success_.end() && static_cast<int>(it->second.height()) <= budget)
            return it->second;

        for (const auto& n : N_.norms()) {
            if (E_.equiv(n.body, body) && E_.equiv(n.head, head)) {
                DerivationTree leaf;
                leaf.body = body;
                leaf.head = head;
                leaf.norm_id = n.id;
                success_.emplace(key, leaf);
                return leaf;
            }
        }
        if (budget <= 0) {
            cut = true;
            return std::nullopt;
        }
        if (auto it = failed_.find(key); it != failed_.end() && budget <= it->second)
            return std::nullopt;
        std::optional<DerivationTree> found = expand(body, head, budget);
        if (found) {
            auto [it, inserted] = success_.emplace(key, *found);
            if (!inserted && found->height() < it->second.height()) it->second = *found;
        } else {
            auto [it, inserted] = failed_.emplace(key, budget);
            if (!inserted) it->second = std::max(it->second, budget);
        }
        return found;
    }

private:
    std::optional<DerivationTree> expand(Element body, Element head, int budget) {
        static constexpr Rule kOrder[] = {Rule::SI,  Rule::WO, Rule::T,   Rule::CT,
                                          Rule::OR,  Rule::AND, Rule::EQI, Rule::EQO};
        for (Rule r : kOrder) {
            if (!rules_.has(r)) continue;
            switch (r) {
                case Rule::SI:
                    for (Element t : pool_) {
                        if (!E_.leq(body, t) || E_.equiv(t, body)) continue;
                        if (auto p = prove(t, head, budget - 1))
                            return node(body, head, Rule::SI,
                                        SideCondition{SideCondition::Kind::Leq, body, t}, {*p});
                    }
                    break;
                case Rule::WO:
                    for (Element w : pool_) {
                        if (!E_.leq(w, head) || E_.equiv(w, head)) continue;
                        if (auto p = prove(body, w, budget - 1))
                            return node(body, head, Rule::WO,
                                        SideCondition{SideCondition::Kind::Leq, w, head}, {*p});
                    }
                    break;
                case Rule::T:
                    for (Element m : pool_) {
                        auto p1 = prove(body, m, budget - 1);
                        if (!p1) continue;
                        if (auto p2 = prove(m, head, budget - 1))
                            return node(body, head, Rule::T, std::nullopt, {*p1, *p2});
                    }
                    break;
                case Rule::CT:
                    if (!E_.has_meet()) break;
                    for (Element w : pool_) {
                        auto p1 = prove(body, w, budget - 1);
                        if (!p1) continue;
                        if (auto p2 = prove(E_.meet(body, w), head, budget - 1))
                            return node(body, head, Rule::CT, std::nullopt, {*p1, *p2});
                    }
                    break;
                case Rule::OR:
                    if (!E_.has_join()) break;
                    for (std::size_t i = 0; i < pool_.size(); ++i) {
                        for (std::size_t j = i; j < pool_.size(); ++j) {
                            Element u = pool_[i], v = pool_[j];
                            if (!E_.equiv(E_.join(u, v), body)) continue;
                            if (E_.equiv(u, body) || E_.equiv(v, body)) continue;
                            auto p1 = prove(u, head, budget - 1);
                            if (!p1) continue;
                            if (auto p2 = prove(v, head, budget - 1))
                                return node(body, head, Rule::OR, std::nullopt, {*p1, *p2});
                        }
                    }
                    break;
                case Rule::AND:
                    if (!E_.has_meet()) break;
                    for (std::size_t i = 0; i < pool_.size(); ++i) {
                        for (std::size_t j = i; j < pool_.size(); ++j) {
                            Element u = pool_[i], v = pool_[j];
                            if (!E_.equiv(E_.meet(u, v), head)) continue;
                            if (E_.equiv(u, head) || E_.equiv(v, head)) continue;
                            auto p1 = prove(body, u, budget - 1);
                            if (!p1) continue;
                            if (auto p2 = prove(body, v, budget - 1))
                                return node(body, head, Rule::AND, std::nullopt, {*p1, *p2});
                        }
                    }
                    break;
                case Rule::EQI:
                    for (Element e : domain_) {
                        if (e == body || !E_.equiv(e, body)) continue;
                        if (auto p = prove(e, head, budget - 1))
                            return node(body, head, Rule::EQI,
                                        SideCondition{SideCondition::Kind::Equiv, e, body}, {*p});
                    }
                    break;
                case Rule::EQO:
                    for (Element e : domain_) {
                        if (e == head || !E_.equiv(e, head)) continue;
                        if (auto p = prove(body, e, budget - 1))
                            return node(body, head, Rule::EQO,
                                        SideCondition{SideCondition::Kind::Equiv, e, head}, {*p});
                    }
                    break;
            }
        }
        return std::nullopt;
    }

    static DerivationTree node(Element body, Element head, Rule r,
                               std::optional<SideCondition> side,
                               std::vector<DerivationTree> premises) {
        DerivationTree t;
        t.body = body;
        t.head = head;
        t.rule = r;
        t.side = side;
        t.premises = std::move(premises);
        return t;
    }

    const RuleSystem& rules_;
    const NormativeSystem& N_;
    const ConsequenceEngine& E_;
    std::vector<Element> pool_;
    std::vector<Element> domain_;
    std::unordered_map<std::uint64_t, DerivationTree> success_;
    std::unordered_map<std::uint64_t, int> failed_;
};

}  // namespace

DeriveResult derive(const RuleSystem& rules, const NormativeSystem& N,
                    std::pair<Element, Element> goal, int max_depth,
                    const ConsequenceEngine& engine) {
    if ((rules.has(Rule::OR)) && !engine.has_join())
        throw CapabilityError("OR rule needs joins on this engine");
    if ((rules.has(Rule::AND) || rules.has(Rule::CT)) && !engine.has_meet())
        throw CapabilityError("AND/CT rules need meets on this engine");
    DeriveResult result;
    result.max_depth = max_depth < 0 ? static_cast<int>(2 * N.size() + 4) : max_depth;
    if (result.max_depth < 1) throw Error("max_depth must be at least 1");
    auto pool = build_candidate_pool(N, goal, engine);
    Searcher s(rules, N, engine, std::move(pool));
    bool any_cut = false;
    for (int depth = 1; depth <= result.max_depth; ++depth) {
        s.cut = false;
        if (auto t = s.prove(goal.first, goal.second, depth)) {
            result.tree = std::move(t);
            return result;
        }
        any_cut = s.cut;
        if (!any_cut) break;  // search space exhausted below the bound
    }
    result.depth_limited = any_cut;
    return result;
}

DeriveResult derive_lifted(const RuleSystem& rules, const NormativeSystem& N,
                           std::span<const Element> input, Element x, int max_depth,
                           const ConsequenceEngine& engine) {
    DeriveResult combined;
    combined.max_depth = max_depth < 0 ? static_cast<int>(2 * N.size() + 4) : max_depth;
    for (Element a : input) {
        DeriveResult r = derive(rules, N, {a, x}, max_depth, engine);
        if (r.tree) return r;
        combined.depth_limited |= r.depth_limited;
    }
    return combined;
}

bool verify_tree(const DerivationTree& t, const RuleSystem& rules, const NormativeSystem& N,
                 const ConsequenceEngine& E) {
    if (!t.rule) {
        if (!t.premises.empty() || t.side) return false;
        for (const auto& n : N.norms())
            if (n.id == t.norm_id) return E.equiv(n.body, t.body) && E.equiv(n.head, t.head);
        return false;
    }
    if (!rules.has(*t.rule)) return false;
    auto unary = [&](SideCondition::Kind kind) {
        return t.premises.size() == 1 && t.side && t.side->kind == kind;
    };
    switch (*t.rule) {
        case Rule::EQI: {
            if (!unary(SideCondition::Kind::Equiv)) return false;
            const auto& p = t.premises[0];
            if (!E.equiv(p.head, t.head)) return false;
            if (t.side->lhs != p.body || t.side->rhs != t.body) return false;
            if (!E.equiv(t.side->lhs, t.side->rhs)) return false;
            break;
        }
        case Rule::EQO: {
            if (!unary(SideCondition::Kind::Equiv)) return false;
            const auto& p = t.premises[0];
            if (!E.equiv(p.body, t.body)) return false;
            if (t.side->lhs != p.head || t.side->rhs != t.head) return false;
            if (!E.equiv(t.side->lhs, t.side->rhs)) return false;
            break;
        }
        case Rule::SI: {
            if (!unary(SideCondition::Kind::Leq)) return false;
            const auto& p = t.premises[0];
            if (!E.equiv(p.head, t.head)) return false;
            if (t.side->lhs != t.body || t.side->rhs != p.body) return false;
            if (!E.leq(t.side->lhs, t.side->rhs)) return false;
            break;
        }
        case Rule::WO: {
            if (!unary(SideCondition::Kind::Leq)) return false;
            const auto& p = t.premises[0];
            if (!E.equiv(p.body, t.body)) return false;
            if (t.side->lhs != p.head || t.side->rhs != t.head) return false;
            if (!E.leq(t.side->lhs, t.side->rhs)) return false;
            break;
        }
        case Rule::OR: {
            if (t.premises.size() != 2 || t.side) return false;
            const auto& p1 = t.premises[0];
            const auto& p2 = t.premises[1];
            if (!E.equiv(p1.head, p2.head) || !E.equiv(t.head, p1.head)) return false;
            if (!E.has_join() || !E.equiv(t.body, E.join(p1.body, p2.body))) return false;
            break;
        }
        case Rule::T: {
            if (t.premises.size() != 2 || t.side) return false;
            const auto& p1 = t.premises[0];
            const auto& p2 = t.premises[1];
            if (!E.equiv(p1.head, p2.body)) return false;
            if (!E.equiv(t.body, p1.body) || !E.equiv(t.head, p2.head)) return false;
            break;
        }
        case Rule::AND: {
            if (t.premises.size() != 2 || t.side) return false;
            const auto& p1 = t.premises[0];
            const auto& p2 = t.premises[1];
            if (!E.equiv(p1.body, t.body) || !E.equiv(p2.body, t.body)) return false;
            if (!E.has_meet() || !E.equiv(t.head, E.meet(p1.head, p2.head))) return false;
            break;
        }
        case Rule::CT: {
            if (t.premises.size() != 2 || t.side) return false;
            const auto& p1 = t.premises[0];
            const auto& p2 = t.premises[1];
            if (!E.equiv(p1.body, t.body) || !E.equiv(p2.head, t.head)) return false;
            if (!E.has_meet() || !E.equiv(p2.body, E.meet(p1.body, p1.head))) return false;
            break;
        }
    }
    for (const auto& p : t.premises)
        if (!verify_tree(p, rules, N, E)) return false;
    return true;
}

nlohmann::json tree_to_json(const DerivationTree& t, const ConsequenceEngine& E) {
    nlohmann::json j;
    j["body"] = E.describe(t.body);
    j["head"] = E.describe(t.head);
    if (t.rule) {
        j["rule"] = to_string(*t.rule);
        if (t.side) {
            j["side"] = {{"kind", t.side->kind == SideCondition::Kind::Leq ? "leq" : "equiv"},
                         {"lhs", E.describe(t.side->lhs)},
                         {"rhs", E.describe(t.side->rhs)}};
        }
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& p : t.premises) kids.push_back(tree_to_json(p, E));
        j["premises"] = std::move(kids);
    } else {
        j["rule"] = "leaf";
        j["norm"] = t.norm_id;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Dense saturation

PairMatrix::PairMatrix(std::size_t count)
    : count_(count), words_((count + 63) / 64), bits_(count * words_, 0) {}

bool PairMatrix::get(std::size_t body, std::size_t head) const {
    return (bits_[body * words_ + head / 64] >> (head % 64)) & 1u;
}

void PairMatrix::set(std::size_t body, std::size_t head) {
    bits_[body * words_ + head / 64] |= std::uint64_t{1} << (head % 64);
}

std::span<const std::uint64_t> PairMatrix::row(std::size_t body) const {
    return {bits_.data() + body * words_, words_};
}

void PairMatrix::or_row(std::size_t body, std::span<const std::uint64_t> src) {
    std::uint64_t* dst = bits_.data() + body * words_;
    for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
}

bool DenseAlgebra::leq_bits(std::size_t a, std::size_t b) const {
    return (up_[a * words_ + b / 64] >> (b % 64)) & 1u;
}

std::span<const std::uint64_t> DenseAlgebra::up_mask(std::size_t e) const {
    return {up_.data() + e * words_, words_};
}

std::span<const std::uint64_t> DenseAlgebra::down_mask(std::size_t e) const {
    return {down_.data() + e * words_, words_};
}

DenseAlgebra DenseAlgebra::classical(std::size_t var_count) {
    if (var_count > 3) throw Error("dense classical algebra supports at most 3 variables");
    DenseAlgebra d;
    d.count_ = std::size_t{1} << (std::size_t{1} << var_count);
    d.words_ = (d.count_ + 63) / 64;
    d.has_meet_ = d.has_join_ = true;
    d.up_.assign(d.count_ * d.words_, 0);
    d.down_.assign(d.count_ * d.words_, 0);
    d.meet_.resize(d.count_ * d.count_);
    d.join_.resize(d.count_ * d.count_);
    for (std::size_t a = 0; a < d.count_; ++a) {
        for (std::size_t b = 0; b < d.count_; ++b) {
            d.meet_[a * d.count_ + b] = static_cast<std::uint16_t>(a & b);
            d.join_[a * d.count_ + b] = static_cast<std::uint16_t>(a | b);
            if ((a & ~b) == 0) d.up_[a * d.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
            if ((b & ~a) == 0) d.down_[a * d.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        }
    }
    return d;
}

DenseAlgebra DenseAlgebra::from_engine(const ConsequenceEngine& engine) {
    auto domain = engine.enumerate();
    if (!domain) throw CapabilityError("dense saturation needs an enumerable engine");
    DenseAlgebra d;
    d.count_ = domain->size();
    if (d.count_ > 4096) throw Error("dense saturation domain too large");
    d.words_ = (d.count_ + 63) / 64;
    d.up_.assign(d.count_ * d.words_, 0);
    d.down_.assign(d.count_ * d.words_, 0);
    for (std::size_t a = 0; a < d.count_; ++a)
        for (std::size_t b = 0; b < d.count_; ++b) {
            if (engine.leq((*domain)[a], (*domain)[b]))
                d.up_[a * d.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
            if (engine.leq((*domain)[b], (*domain)[a]))
                d.down_[a * d.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        }
    auto fill = [&](std::vector<std::uint16_t>& table, bool join) {
        table.assign(d.count_ * d.count_, 0);
        for (std::size_t a = 0; a < d.count_; ++a)
            for (std::size_t b = 0; b < d.count_; ++b) {
                ConsequenceEngine::Element r = join ? engine.join((*domain)[a], (*domain)[b])
                                                    : engine.meet((*domain)[a], (*domain)[b]);
                auto it = std::find(domain->begin(), domain->end(), r);
                table[a * d.count_ + b] =
                    static_cast<std::uint16_t>(std::distance(domain->begin(), it));
            }
    };
    try {
        if (engine.has_meet()) {
            fill(d.meet_, false);
            d.has_meet_ = true;
        }
    } catch (const CapabilityError&) {
        d.meet_.clear();
        d.has_meet_ = false;
    }
    try {
        if (engine.has_join()) {
            fill(d.join_, true);
            d.has_join_ = true;
        }
    } catch (const CapabilityError&) {
        d.join_.clear();
        d.has_join_ = false;
    }
    return d;
}

PairMatrix saturate_pairs(const RuleSystem& rules,
                          const std::vector<std::pair<std::uint16_t, std::uint16_t>>& norms,
                          const DenseAlgebra& A, int max_height) {
    const std::size_t E = A.count();
    PairMatrix cur(E);
    for (auto [b, h] : norms) cur.set(b, h);
    if ((rules.has(Rule::OR)) && !A.has_join())
        throw CapabilityError("OR saturation needs joins");
    if ((rules.has(Rule::AND) || rules.has(Rule::CT)) && !A.has_meet())
        throw CapabilityError("AND/CT saturation needs meets");

    std::vector<std::size_t> scratch;
    for (int round = 0; round < max_height; ++round) {
        PairMatrix next = cur;
        auto each_bit = [&](std::span<const std::uint64_t> mask, auto&& fn) {
            for (std::size_t w = 0; w < mask.size(); ++w) {
                std::uint64_t bits = mask[w];
                while (bits) {
                    std::size_t idx = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    fn(idx);
                }
            }
        };
        if (rules.has(Rule::SI) || rules.has(Rule::EQI)) {
            const bool si = rules.has(Rule::SI);
            for (std::size_t b = 0; b < E; ++b) {
                each_bit(A.up_mask(b), [&](std::size_t a) {
                    if (a == b) return;
                    // EQI only moves within the equivalence class (a <= b too)
                    if (!si && !A.leq(a, b)) return;
                    next.or_row(b, cur.row(a));
                });
            }
        }
        if (rules.has(Rule::WO) || rules.has(Rule::EQO)) {
            const bool wo = rules.has(Rule::WO);
            for (std::size_t b = 0; b < E; ++b) {
                each_bit(cur.row(b), [&](std::size_t x) {
                    if (wo)
                        next.or_row(b, A.up_mask(x));
                    else
                        each_bit(A.up_mask(x), [&](std::size_t y) {
                            if (A.leq(y, x)) next.set(b, y);
                        });
                });
            }
        }
        if (rules.has(Rule::T)) {
            for (std::size_t a = 0; a < E; ++a)
                each_bit(cur.row(a), [&](std::size_t m) { next.or_row(a, cur.row(m)); });
        }
        if (rules.has(Rule::CT)) {
            for (std::size_t a = 0; a < E; ++a)
                each_bit(cur.row(a),
                         [&](std::size_t x) { next.or_row(a, cur.row(A.meet(a, x))); });
        }
        if (rules.has(Rule::OR)) {
            std::vector<std::vector<std::uint16_t>> bodies_with_head(E);
            for (std::size_t b = 0; b < E; ++b)
                each_bit(cur.row(b), [&](std::size_t x) {
                    bodies_with_head[x].push_back(static_cast<std::uint16_t>(b));
                });
            for (std::size_t x = 0; x < E; ++x) {
                const auto& bs = bodies_with_head[x];
                for (std::size_t i = 0; i < bs.size(); ++i)
                    for (std::size_t j = i; j < bs.size(); ++j)
                        next.set(A.join(bs[i], bs[j]), x);
            }
        }
        if (rules.has(Rule::AND)) {
            for (std::size_t a = 0; a < E; ++a) {
                scratch.clear();
                each_bit(cur.row(a), [&](std::size_t x) { scratch.push_back(x); });
                for (std::size_t i = 0; i < scratch.size(); ++i)
                    for (std::size_t j = i; j < scratch.size(); ++j)
                        next.set(a, A.meet(scratch[i], scratch[j]));
            }
        }
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace iologic
