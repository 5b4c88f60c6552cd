#include "iologic/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace iologic {

namespace {

VariableUniverse harness_universe(std::size_t var_count) {
    static const std::vector<std::string> kNames = {"p", "q", "r", "s"};
    if (var_count == 0 || var_count > kNames.size())
        throw Error("harness universes have 1 to 4 variables");
    return VariableUniverse(
        std::vector<std::string>(kNames.begin(), kNames.begin() + var_count));
}

/// Shared state for one pool: interned pool elements plus their dense
/// indices (the valuation bitmask of the canonical form).
struct PoolContext {
    VariableUniverse universe;
    std::shared_ptr<ClassicalEngine> engine;
    std::vector<Term> terms;
    std::vector<Element> elems;
    std::vector<std::uint16_t> dense;  // per pool term

    explicit PoolContext(const PoolConfig& cfg)
        : universe(harness_universe(cfg.var_count)),
          engine(std::make_shared<ClassicalEngine>(universe)) {
        terms = build_term_pool(universe, cfg.pool_size);
        for (const auto& t : terms) {
            Element e = engine->intern_term(t);
            elems.push_back(e);
            const SemanticForm& f = engine->form(e);
            std::uint16_t mask = 0;
            for (std::uint32_t v = 0; v < f.width(); ++v)
                if (f.test(v)) mask |= static_cast<std::uint16_t>(1u << v);
            dense.push_back(mask);
        }
    }
};

/// Enumerates normative systems as sorted index tuples into pool x pool.
/// Exhaustive mode yields every subset of size 0..max_norms in lexicographic
/// order; randomized mode yields seeded samples.
class SystemEnumerator {
public:
    SystemEnumerator(const PoolConfig& cfg, std::size_t pair_count)
        : cfg_(cfg), pair_count_(pair_count), rng_(cfg.seed) {}

    std::optional<std::vector<std::size_t>> next() {
        if (cfg_.exhaustive) return next_exhaustive();
        if (produced_ >= cfg_.random_instances) return std::nullopt;
        ++produced_;
        std::uniform_int_distribution<std::size_t> size_dist(1, cfg_.max_norms);
        std::uniform_int_distribution<std::size_t> pair_dist(0, pair_count_ - 1);
        std::set<std::size_t> picked;
        std::size_t want = size_dist(rng_);
        while (picked.size() < want) picked.insert(pair_dist(rng_));
        return std::vector<std::size_t>(picked.begin(), picked.end());
    }

private:
    std::optional<std::vector<std::size_t>> next_exhaustive() {
        if (!started_) {
            started_ = true;
            current_.clear();
            return current_;  // the empty system
        }
        // advance the sorted combination, growing its size when exhausted
        const std::size_t k = current_.size();
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (current_[i] < pair_count_ - (k - i)) {
                ++current_[i];
                for (std::size_t j = i + 1; j < k; ++j) current_[j] = current_[j - 1] + 1;
                return current_;
            }
        }
        if (k >= cfg_.max_norms || k >= pair_count_) return std::nullopt;
        current_.resize(k + 1);
        for (std::size_t j = 0; j <= k; ++j) current_[j] = j;
        return current_;
    }

    const PoolConfig& cfg_;
    std::size_t pair_count_;
    std::mt19937_64 rng_;
    std::size_t produced_ = 0;
    bool started_ = false;
    std::vector<std::size_t> current_;
};

NormativeSystem make_system(const PoolContext& ctx, const std::vector<std::size_t>& pair_idxs,
                            std::size_t pool_size) {
    std::vector<Norm> norms;
    for (std::size_t k = 0; k < pair_idxs.size(); ++k) {
        std::size_t body = pair_idxs[k] / pool_size;
        std::size_t head = pair_idxs[k] % pool_size;
        norms.push_back(Norm{"n" + std::to_string(k + 1), ctx.elems[body], ctx.elems[head]});
    }
    return NormativeSystem::raw(std::move(norms));
}

std::string render_system(const PoolContext& ctx, const NormativeSystem& N) {
    std::string out = "N={";
    for (std::size_t i = 0; i < N.size(); ++i) {
        if (i) out += ", ";
        out += "(" + ctx.engine->describe(N.norms()[i].body) + ", " +
               ctx.engine->describe(N.norms()[i].head) + ")";
    }
    return out + "}";
}

bool iterated_member(const OutOp& op, const NormativeSystem& N, Element a, Element x,
                     const ConsequenceEngine& E) {
    Element input[1] = {a};
    return check_membership(op, N, input, x, E);
}

}  // namespace

nlohmann::json EquivalenceReport::to_json() const {
    nlohmann::json j;
    j["checked"] = checked;
    j["pass"] = pass();
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : mismatches)
        ms.push_back({{"instance", m.instance},
                      {"operation", m.operation},
                      {"detail", m.detail},
                      {"semantic", m.semantic},
                      {"syntactic", m.syntactic}});
    j["mismatches"] = std::move(ms);
    return j;
}

std::string EquivalenceReport::summary(const std::string& title) const {
    std::ostringstream os;
    os << title << ": " << (pass() ? "PASS" : "FAIL") << " (" << checked << " checks, "
       << mismatches.size() << " mismatches)";
    if (!mismatches.empty()) {
        const auto& m = mismatches.front();
        os << "\n  first: " << m.operation << " on " << m.instance << " -- " << m.detail;
    }
    return os.str();
}

std::vector<SystemPairing> base_pairings() {
    std::vector<SystemPairing> out;
    for (BaseOp b : {BaseOp::R, BaseOp::L, BaseOp::Zero, BaseOp::I, BaseOp::II, BaseOp::One,
                     BaseOp::Two, BaseOp::Three}) {
        OutOp op = OutOp::make_base(b);
        out.push_back({op, matching_rules(op)});
    }
    return out;
}

std::vector<SystemPairing> iterated_pairings() {
    std::vector<SystemPairing> out;
    for (BaseOp b : {BaseOp::II, BaseOp::One, BaseOp::Two}) {
        OutOp op = OutOp::make_and(b);
        out.push_back({op, matching_rules(op)});
    }
    for (BaseOp b : {BaseOp::I, BaseOp::II, BaseOp::One}) {
        OutOp op = OutOp::make_ct(b);
        out.push_back({op, matching_rules(op)});
    }
    OutOp ctand = OutOp::make_ct_and();
    out.push_back({ctand, matching_rules(ctand)});
    return out;
}

std::vector<Term> build_term_pool(const VariableUniverse& u, std::size_t size) {
    std::vector<Term> pool;
    std::set<SemanticForm> seen;
    auto add = [&](const Term& t) {
        if (pool.size() >= size) return;
        if (seen.insert(semantic_form(t, u)).second) pool.push_back(t);
    };
    for (const auto& name : u.names()) add(Term::variable(name));
    add(Term::bot());
    add(Term::top());
    while (pool.size() < size) {
        std::size_t before = pool.size();
        std::vector<Term> snapshot = pool;
        for (const auto& t : snapshot) add(Term::negate(t));
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                add(Term::conj(snapshot[i], snapshot[j]));
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                add(Term::disj(snapshot[i], snapshot[j]));
        if (pool.size() == before) break;  // algebra exhausted
    }
    return pool;
}

std::vector<Term> build_depth_pool(const VariableUniverse& u, std::size_t depth) {
    std::vector<Term> pool;
    std::set<SemanticForm> seen;
    auto add = [&](const Term& t) {
        if (seen.insert(semantic_form(t, u)).second) pool.push_back(t);
    };
    for (const auto& name : u.names()) add(Term::variable(name));
    add(Term::bot());
    add(Term::top());
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<Term> snapshot = pool;
        for (const auto& t : snapshot) add(Term::negate(t));
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i; j < snapshot.size(); ++j) {
                add(Term::conj(snapshot[i], snapshot[j]));
                add(Term::disj(snapshot[i], snapshot[j]));
            }
    }
    return pool;
}

EquivalenceReport run_equivalence(const PoolConfig& cfg,
                                  const std::vector<SystemPairing>& pairings) {
    PoolContext ctx(cfg);
    DenseAlgebra dense = DenseAlgebra::classical(cfg.var_count);
    EquivalenceReport report;
    const std::size_t n_terms = ctx.terms.size();
    SystemEnumerator systems(cfg, n_terms * n_terms);
    std::uint64_t spot_counter = 0;

    while (auto idxs = systems.next()) {
        NormativeSystem N = make_system(ctx, *idxs, n_terms);
        std::vector<std::pair<std::uint16_t, std::uint16_t>> dense_norms;
        for (std::size_t p : *idxs)
            dense_norms.push_back({ctx.dense[p / n_terms], ctx.dense[p % n_terms]});

        for (const auto& pairing : pairings) {
            PairMatrix mat = saturate_pairs(pairing.rules, dense_norms, dense, cfg.depth);
            for (std::size_t ai = 0; ai < n_terms; ++ai) {
                Element a = ctx.elems[ai];
                // hoist the per-input work; queries then cost a few leq calls
                std::function<bool(Element)> semantic;
                const OutOp& op = pairing.op;
                if (op.kind == OutOp::Kind::Base && op.base == BaseOp::Three) {
                    auto gens = out_generators(BaseOp::Three, N, a, *ctx.engine);
                    semantic = [gens, &ctx](Element x) { return gens.contains(*ctx.engine, x); };
                } else if (op.kind == OutOp::Kind::And || op.kind == OutOp::Kind::CtAnd) {
                    BaseOp base = op.kind == OutOp::Kind::CtAnd ? BaseOp::One : op.base;
                    GeneratorSet gens = op.kind == OutOp::Kind::CtAnd
                                            ? ct_generators(base, N, a, *ctx.engine)
                                            : out_generators(base, N, a, *ctx.engine);
                    if (gens.empty()) {
                        semantic = [](Element) { return false; };
                    } else {
                        Element m = gens.elements.front();
                        for (std::size_t gi = 1; gi < gens.elements.size(); ++gi)
                            m = ctx.engine->meet(m, gens.elements[gi]);
                        semantic = [m, &ctx](Element x) { return ctx.engine->leq(m, x); };
                    }
                } else if (op.kind == OutOp::Kind::Ct) {
                    auto gens = ct_generators(op.base, N, a, *ctx.engine);
                    semantic = [gens, &ctx](Element x) { return gens.contains(*ctx.engine, x); };
                } else if (op.kind == OutOp::Kind::Base) {
                    BaseOp base = op.base;
                    semantic = [base, &N, a, &ctx](Element x) {
                        Element input[1] = {a};
                        return out_membership(base, N, input, x, *ctx.engine);
                    };
                } else {
                    semantic = [&op, &N, a, &ctx](Element x) {
                        return iterated_member(op, N, a, x, *ctx.engine);
                    };
                }
                for (std::size_t xi = 0; xi < n_terms; ++xi) {
                    Element x = ctx.elems[xi];
                    bool sem = semantic(x);
                    bool syn = mat.get(ctx.dense[ai], ctx.dense[xi]);
                    ++report.checked;
                    ++spot_counter;
                    bool spot = cfg.spot_check_stride &&
                                (spot_counter % cfg.spot_check_stride) == 0;
                    if (sem != syn || spot) {
                        DeriveResult dr =
                            derive(pairing.rules, N, {a, x}, cfg.depth, *ctx.engine);
                        bool tree_found = dr.tree.has_value();
                        if (sem != syn || tree_found != syn) {
                            Mismatch m;
                            m.instance = render_system(ctx, N) +
                                         ", a=" + ctx.engine->describe(a) +
                                         ", x=" + ctx.engine->describe(x);
                            m.operation = to_string(pairing.op) + " vs " + pairing.rules.name;
                            m.semantic = sem;
                            m.syntactic = syn;
                            m.detail = sem != syn
                                           ? (tree_found ? "tree search agrees with syntactic"
                                                         : "tree search found no derivation")
                                           : "spot check: tree search disagrees with saturation";
                            report.mismatches.push_back(std::move(m));
                        }
                    }
                }
            }
        }
    }
    return report;
}

EquivalenceReport run_closure_laws(const PoolConfig& cfg, const std::vector<OutOp>& ops) {
    PoolContext ctx(cfg);
    EquivalenceReport report;
    const std::size_t n_terms = ctx.terms.size();
    SystemEnumerator systems(cfg, n_terms * n_terms);

    auto member = [&](const OutOp& op, const NormativeSystem& N, Element a, Element x) {
        return iterated_member(op, N, a, x, *ctx.engine);
    };

    while (auto idxs = systems.next()) {
        NormativeSystem N = make_system(ctx, *idxs, n_terms);
        std::set<std::size_t> used(idxs->begin(), idxs->end());
        for (const auto& op : ops) {
            // inclusion: the system's own pairs are in the closure
            for (const auto& n : N.norms()) {
                ++report.checked;
                if (!member(op, N, n.body, n.head))
                    report.mismatches.push_back({render_system(ctx, N), to_string(op),
                                                 "inclusion fails for (" +
                                                     ctx.engine->describe(n.body) + ", " +
                                                     ctx.engine->describe(n.head) + ")",
                                                 false, true});
            }
            // pair-level verdicts over the pool, reused below
            std::vector<bool> verdict(n_terms * n_terms);
            for (std::size_t ai = 0; ai < n_terms; ++ai)
                for (std::size_t xi = 0; xi < n_terms; ++xi)
                    verdict[ai * n_terms + xi] =
                        member(op, N, ctx.elems[ai], ctx.elems[xi]);
            // monotony: extend by up to three fresh pairs
            std::size_t extras_tested = 0;
            for (std::size_t pair = 0; pair < n_terms * n_terms && extras_tested < 3; ++pair) {
                if (used.count(pair)) continue;
                ++extras_tested;
                NormativeSystem bigger = N.with_extra(
                    Norm{"x" + std::to_string(pair), ctx.elems[pair / n_terms],
                         ctx.elems[pair % n_terms]});
                for (std::size_t ai = 0; ai < n_terms; ++ai)
                    for (std::size_t xi = 0; xi < n_terms; ++xi) {
                        if (!verdict[ai * n_terms + xi]) continue;
                        ++report.checked;
                        if (!member(op, bigger, ctx.elems[ai], ctx.elems[xi]))
                            report.mismatches.push_back(
                                {render_system(ctx, N), to_string(op),
                                 "monotony fails after adding (" +
                                     ctx.engine->describe(ctx.elems[pair / n_terms]) + ", " +
                                     ctx.engine->describe(ctx.elems[pair % n_terms]) + ")",
                                 true, false});
                    }
            }
            // idempotence: the pool-restricted pair closure derives nothing new
            std::vector<Norm> closure_norms;
            for (std::size_t ai = 0; ai < n_terms; ++ai)
                for (std::size_t xi = 0; xi < n_terms; ++xi)
                    if (verdict[ai * n_terms + xi])
                        closure_norms.push_back(Norm{"c" + std::to_string(ai * n_terms + xi),
                                                     ctx.elems[ai], ctx.elems[xi]});
            NormativeSystem closure = NormativeSystem::raw(std::move(closure_norms));
            for (std::size_t ai = 0; ai < n_terms; ++ai)
                for (std::size_t xi = 0; xi < n_terms; ++xi) {
                    ++report.checked;
                    if (member(op, closure, ctx.elems[ai], ctx.elems[xi]) !=
                        verdict[ai * n_terms + xi])
                        report.mismatches.push_back(
                            {render_system(ctx, N), to_string(op),
                             "idempotence fails at (" + ctx.engine->describe(ctx.elems[ai]) +
                                 ", " + ctx.engine->describe(ctx.elems[xi]) + ")",
                             verdict[ai * n_terms + xi], false});
                }
        }
    }
    return report;
}

EquivalenceReport run_set_level(const PoolConfig& cfg) {
    PoolContext ctx(cfg);
    EquivalenceReport report;
    const std::size_t n_terms = ctx.terms.size();
    SystemEnumerator systems(cfg, n_terms * n_terms);

    while (auto idxs = systems.next()) {
        NormativeSystem N = make_system(ctx, *idxs, n_terms);
        auto check_inputs = [&](const std::vector<Element>& input) {
            for (BaseOp op : {BaseOp::Two, BaseOp::Three}) {
                for (std::size_t xi = 0; xi < n_terms; ++xi) {
                    Element x = ctx.elems[xi];
                    bool set_level = out_set_semantic(op, N, input, x, *ctx.engine);
                    bool lift = false;
                    for (Element a : input) {
                        Element single[1] = {a};
                        if (out_membership(op, N, single, x, *ctx.engine)) {
                            lift = true;
                            break;
                        }
                    }
                    ++report.checked;
                    if (set_level != lift) {
                        std::string in = "A={";
                        for (std::size_t i = 0; i < input.size(); ++i)
                            in += (i ? ";" : "") + ctx.engine->describe(input[i]);
                        report.mismatches.push_back(
                            {render_system(ctx, N) + ", " + in + "}",
                             "out" + to_string(op) + " set-level",
                             "x=" + ctx.engine->describe(x), lift, set_level});
                    }
                }
            }
        };
        for (std::size_t ai = 0; ai < n_terms; ++ai) {
            check_inputs({ctx.elems[ai]});
            for (std::size_t bi = ai + 1; bi < n_terms; ++bi)
                check_inputs({ctx.elems[ai], ctx.elems[bi]});
        }
    }
    return report;
}

bool RuleMatrixReport::pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const RuleCheck& c) { return c.ok(); });
}

nlohmann::json RuleMatrixReport::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries)
        out.push_back({{"op", to_string(e.op)},
                       {"rule", to_string(e.rule)},
                       {"expected_valid", e.expected_valid},
                       {"violation_found", e.violation_found},
                       {"witness", e.witness},
                       {"checked", e.checked}});
    return out;
}

RuleMatrixReport run_rule_matrix(const PoolConfig& cfg, const std::vector<OutOp>& ops) {
    PoolContext ctx(cfg);
    RuleMatrixReport report;
    const std::size_t n_terms = ctx.terms.size();

    auto member = [&](const OutOp& op, const NormativeSystem& N, Element a, Element x) {
        return iterated_member(op, N, a, x, *ctx.engine);
    };

    for (const auto& op : ops) {
        RuleSystem rules = matching_rules(op);
        for (Rule rule : {Rule::SI, Rule::WO, Rule::OR, Rule::T, Rule::AND, Rule::CT}) {
            RuleCheck check;
            check.op = op;
            check.rule = rule;
            // T is admissible wherever SI and CT are available: SI turns the
            // second premise (x,y) into (a&x,y) and CT closes the step.
            check.expected_valid = rules.has(rule) ||
                                   (rule == Rule::T && rules.has(Rule::SI) && rules.has(Rule::CT));
            SystemEnumerator systems(cfg, n_terms * n_terms);
            bool done = false;
            while (!done) {
                auto idxs = systems.next();
                if (!idxs) break;
                NormativeSystem N = make_system(ctx, *idxs, n_terms);
                for (std::size_t ui = 0; ui < n_terms && !done; ++ui) {
                    for (std::size_t vi = 0; vi < n_terms && !done; ++vi) {
                        Element u = ctx.elems[ui], v = ctx.elems[vi];
                        for (std::size_t xi = 0; xi < n_terms && !done; ++xi) {
                            Element x = ctx.elems[xi];
                            bool violated = false;
                            std::string witness;
                            ++check.checked;
                            switch (rule) {
                                case Rule::SI:
                                    // member at u and v <= u but not at v
                                    violated = ctx.engine->leq(v, u) && member(op, N, u, x) &&
                                               !member(op, N, v, x);
                                    break;
                                case Rule::WO:
                                    violated = ctx.engine->leq(v, x) && member(op, N, u, v) &&
                                               !member(op, N, u, x);
                                    break;
                                case Rule::OR:
                                    violated = member(op, N, u, x) && member(op, N, v, x) &&
                                               !member(op, N, ctx.engine->join(u, v), x);
                                    break;
                                case Rule::T:
                                    violated = member(op, N, u, v) && member(op, N, v, x) &&
                                               !member(op, N, u, x);
                                    break;
                                case Rule::AND:
                                    violated = member(op, N, u, v) && member(op, N, u, x) &&
                                               !member(op, N, u, ctx.engine->meet(v, x));
                                    break;
                                case Rule::CT:
                                    violated = member(op, N, u, v) &&
                                               member(op, N, ctx.engine->meet(u, v), x) &&
                                               !member(op, N, u, x);
                                    break;
                                default: break;
                            }
                            if (violated) {
                                witness = render_system(ctx, N) + ", u=" +
                                          ctx.engine->describe(u) + ", v=" +
                                          ctx.engine->describe(v) + ", x=" +
                                          ctx.engine->describe(x);
                                check.violation_found = true;
                                check.witness = witness;
                                if (!check.expected_valid) done = true;  // counterexample recorded
                            }
                        }
                    }
                }
                if (check.expected_valid && check.violation_found) break;
            }
            report.entries.push_back(std::move(check));
        }
    }
    return report;
}

EquivalenceReport run_deontic_checks(const DeonticConfig& cfg) {
    EquivalenceReport report;
    const OutOp op = OutOp::make_base(BaseOp::One);

    for (std::size_t k = 0; k < cfg.instances; ++k) {
        const std::size_t var_count = 2 + (k % 3);
        VariableUniverse u = harness_universe(var_count);
        ClassicalEngine engine(u);
        std::mt19937_64 rng(cfg.seed * 1000003 + k);

        std::function<Term(std::size_t)> random_term = [&](std::size_t depth) -> Term {
            std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 6);
            switch (pick(rng)) {
                case 0:
                case 1: {
                    std::uniform_int_distribution<std::size_t> var(0, u.size() - 1);
                    return Term::variable(u.name(var(rng)));
                }
                case 2: return Term::top();
                case 3: return Term::bot();
                case 4: return Term::negate(random_term(depth - 1));
                case 5: return Term::conj(random_term(depth - 1), random_term(depth - 1));
                default: return Term::disj(random_term(depth - 1), random_term(depth - 1));
            }
        };

        Term phi = random_term(2);
        Term psi = random_term(2);
        std::uniform_int_distribution<int> count(0, 3);
        std::vector<Norm> norms;
        std::uniform_int_distribution<int> coin(0, 1);
        if (coin(rng)) norms.push_back(Norm{"n0", engine.intern_term(phi), engine.intern_term(psi)});
        int extra_norms = 1 + count(rng) % 3;
        for (int i = 0; i < extra_norms; ++i)
            norms.push_back(Norm{"n" + std::to_string(i + 1), engine.intern_term(random_term(2)),
                                 engine.intern_term(random_term(2))});
        NormativeSystem N = NormativeSystem::raw(std::move(norms));
        std::vector<Term> premises;
        int premise_count = count(rng);
        for (int i = 0; i < premise_count; ++i) premises.push_back(random_term(2));

        bool direct = obligation_ok_direct(op, N, premises, phi, psi, engine);
        bool rewrite;
        if (cfg.corrupt_rewrite) {
            // negative control: always use the consistent branch
            Element input[1] = {engine.intern_term(phi)};
            bool derivable = check_membership(op, N, input, engine.intern_term(psi), engine);
            SemanticForm joint = semantic_form(phi, u);
            for (const auto& p : premises) joint = joint.intersect(semantic_form(p, u));
            rewrite = derivable && joint.subset_of(semantic_form(psi, u));
        } else {
            rewrite = obligation_ok_rewrite(op, N, premises, phi, psi, engine);
        }
        ++report.checked;
        if (direct != rewrite) {
            std::string prem = "A={";
            for (std::size_t i = 0; i < premises.size(); ++i)
                prem += (i ? "; " : "") + render_term(premises[i]);
            report.mismatches.push_back(
                {"instance " + std::to_string(k) + ": " + prem + "}, phi=" + render_term(phi) +
                     ", psi=" + render_term(psi),
                 "obligation O^K", "direct vs rewrite", direct, rewrite});
        }

        // explicit-relation obligation: two-valued route vs the
        // maximal-consistent-set reading (sets of algebra elements)
        if (var_count <= 3) {
            std::vector<std::pair<Valuation, Valuation>> f;
            std::uniform_int_distribution<int> rel(0, 3);
            for (std::uint32_t a = 0; a < u.valuation_count(); ++a)
                for (std::uint32_t b = 0; b < u.valuation_count(); ++b)
                    if (rel(rng) == 0) f.emplace_back(Valuation{a}, Valuation{b});
            bool two_valued = obligation_oh(op, N, f, phi, psi, engine);

            // maximal consistent sets as explicit sets of algebra elements
            const std::size_t algebra = std::size_t{1} << u.valuation_count();
            std::vector<std::set<std::size_t>> maxc(u.valuation_count());
            for (std::uint32_t v = 0; v < u.valuation_count(); ++v)
                for (std::size_t mask = 0; mask < algebra; ++mask)
                    if ((mask >> v) & 1) maxc[v].insert(mask);
            auto mask_of = [&](const Term& t) {
                SemanticForm form = semantic_form(t, u);
                std::size_t mask = 0;
                for (std::uint32_t v = 0; v < form.width(); ++v)
                    if (form.test(v)) mask |= std::size_t{1} << v;
                return mask;
            };
            Element input[1] = {engine.intern_term(phi)};
            bool derivable = check_membership(op, N, input, engine.intern_term(psi), engine);
            std::size_t phim = mask_of(phi), psim = mask_of(psi);
            bool all_opt_have_psi = true;
            for (std::uint32_t v = 0; v < u.valuation_count(); ++v) {
                if (!maxc[v].count(phim)) continue;
                bool optimal = true;
                for (std::uint32_t w = 0; w < u.valuation_count() && optimal; ++w) {
                    if (!maxc[w].count(phim)) continue;
                    if (std::find(f.begin(), f.end(),
                                  std::make_pair(Valuation{v}, Valuation{w})) == f.end())
                        optimal = false;
                }
                if (optimal && !maxc[v].count(psim)) all_opt_have_psi = false;
            }
            bool maxc_route = derivable && all_opt_have_psi;
            ++report.checked;
            if (two_valued != maxc_route)
                report.mismatches.push_back({"instance " + std::to_string(k),
                                             "obligation O^H",
                                             "two-valued vs maximal-consistent-set route",
                                             two_valued, maxc_route});
        }
    }
    return report;
}

}  // namespace iologic
