#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "iologic/derivation.hpp"
#include "iologic/harness.hpp"
#include "iologic/hol_emitter.hpp"
#include "iologic/system_file.hpp"

namespace {

using namespace iologic;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<Element> parse_input_set(const LoadedSystem& sys, const std::string& text) {
    std::vector<Element> input;
    for (const auto& part : split(text, ';'))
        if (!part.empty()) input.push_back(sys.element(part));
    return input;
}

/// "PHI => PSI" -> (PHI, PSI)
std::pair<std::string, std::string> split_goal(const std::string& goal) {
    auto pos = goal.find("=>");
    if (pos == std::string::npos) throw Error("goal must have the form \"PHI => PSI\"");
    return {trim(goal.substr(0, pos)), trim(goal.substr(pos + 2))};
}

/// "PHI > O PSI" / "PHI > P PSI", skipping '->' arrows inside PHI.
std::tuple<std::string, char, std::string> split_conditional(const std::string& cond) {
    std::size_t pos = std::string::npos;
    for (std::size_t i = 0; i < cond.size(); ++i) {
        if (cond[i] != '>') continue;
        std::size_t back = i;
        while (back > 0 && cond[back - 1] == ' ') --back;
        if (back > 0 && cond[back - 1] == '-') continue;  // part of '->'
        pos = i;
        break;
    }
    if (pos == std::string::npos)
        throw Error("conditional must have the form \"PHI > O PSI\" or \"PHI > P PSI\"");
    std::string rest = trim(cond.substr(pos + 1));
    if (rest.empty() || (rest[0] != 'O' && rest[0] != 'P'))
        throw Error("conditional modality must be O or P");
    char modality = rest[0];
    return {trim(cond.substr(0, pos)), modality, trim(rest.substr(1))};
}

int run_check(const std::string& system_path, const std::string& op_name,
              const std::string& input_text, const std::string& query, bool as_json) {
    auto op = parse_out_op(op_name);
    if (!op) throw Error("unknown operation '" + op_name + "'");
    LoadedSystem sys = load_system_file(system_path);
    for (const auto& w : sys.warnings) std::cerr << "warning: " << w << "\n";
    auto input = parse_input_set(sys, input_text);
    bool verdict = check_membership(*op, sys.norms, input, sys.element(query), sys.engine());
    if (as_json) {
        nlohmann::json j{{"schema", 1},
                         {"op", op_name},
                         {"input", input_text},
                         {"query", query},
                         {"verdict", verdict}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (verdict ? "true" : "false") << "\n";
    }
    return verdict ? kExitTrue : kExitFalse;
}

int run_outset(const std::string& system_path, const std::string& op_name,
               const std::string& input_text, bool as_json) {
    auto op = parse_out_op(op_name);
    if (!op || op->kind != OutOp::Kind::Base) throw Error("outset expects a base operation");
    LoadedSystem sys = load_system_file(system_path);
    auto input = parse_input_set(sys, input_text);
    if (input.size() != 1) throw Error("outset expects a single input element");
    GeneratorSet gens = out_generators(op->base, sys.norms, input[0], sys.engine());
    std::vector<std::string> described;
    for (Element e : gens.elements) described.push_back(sys.engine().describe(e));
    std::sort(described.begin(), described.end());
    if (as_json) {
        nlohmann::json j{{"schema", 1},
                         {"op", op_name},
                         {"closure",
                          gens.closure == GeneratorSet::Closure::UpSet ? "up" : "equiv"},
                         {"generators", described}};
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& d : described) std::cout << d << "\n";
    }
    return kExitTrue;
}

int run_derive(const std::string& system_path, const std::string& rules_text,
               const std::string& goal, int max_depth, bool show_tree, bool as_json) {
    RuleSystem rules;
    for (const auto& part : split(rules_text, ',')) {
        auto r = parse_rule(part);
        if (!r) throw Error("unknown rule '" + part + "'");
        rules.rules.insert(*r);
    }
    LoadedSystem sys = load_system_file(system_path);
    auto [body_text, head_text] = split_goal(goal);
    std::pair<Element, Element> g{sys.element(body_text), sys.element(head_text)};
    DeriveResult result = derive(rules, sys.norms, g, max_depth, sys.engine());

    // when the rule set is one of the characterized systems, a negative
    // search answer can be sharpened by the semantic operation
    std::optional<bool> semantic;
    if (!result.tree) {
        for (const auto& pairing : base_pairings()) {
            if (pairing.rules.rules == rules.rules) {
                Element input[1] = {g.first};
                try {
                    semantic =
                        out_membership(pairing.op.base, sys.norms, input, g.second, sys.engine());
                } catch (const CapabilityError&) {
                }
                break;
            }
        }
    }

    if (as_json) {
        nlohmann::json j{{"schema", 1}, {"found", result.tree.has_value()}};
        if (result.tree) j["tree"] = tree_to_json(*result.tree, sys.engine());
        else {
            j["depth_limited"] = result.depth_limited;
            j["max_depth"] = result.max_depth;
            if (semantic) j["semantic_verdict"] = *semantic;
        }
        std::cout << j.dump(2) << "\n";
    } else if (result.tree) {
        std::cout << "derivable (height " << result.tree->height() << ")\n";
        if (show_tree) std::cout << tree_to_json(*result.tree, sys.engine()).dump(2) << "\n";
    } else if (semantic && !*semantic) {
        std::cout << "not derivable (refuted by the semantic operation)\n";
    } else if (result.depth_limited) {
        std::cout << "not found <= depth " << result.max_depth << "\n";
    } else {
        std::cout << "not derivable (search space exhausted)\n";
    }
    return result.tree ? kExitTrue : kExitFalse;
}

int run_deontic(const std::string& system_path, const std::string& mode,
                const std::string& cond, const std::string& op_name, bool as_json) {
    auto op = parse_out_op(op_name);
    if (!op) throw Error("unknown operation '" + op_name + "'");
    LoadedSystem sys = load_system_file(system_path);
    if (!sys.is_classical()) throw Error("deontic queries need a classical system");
    auto& engine = *sys.classical;
    const auto& u = engine.universe();
    auto [phi_text, modality, psi_text] = split_conditional(cond);
    ConditionalQuery query;
    query.antecedent = parse_term(phi_text, u);
    query.modality = modality == 'O' ? ConditionalQuery::Modality::Obligation
                                     : ConditionalQuery::Modality::Permission;
    query.consequent = parse_term(psi_text, u);
    query.system = *op;
    const Term& phi = query.antecedent;
    const Term& psi = query.consequent;
    const bool wants_obligation = query.modality == ConditionalQuery::Modality::Obligation;

    bool verdict = false;
    if (mode == "CON") {
        verdict = derive_con(query.system, sys.norms, Constraint{sys.constraints}, phi, psi,
                             engine);
    } else if (mode == "OH" || mode == "PH") {
        if (!sys.preference || sys.preference->kind != PreferenceModel::Kind::Explicit)
            throw Error("mode " + mode + " needs an explicit preference in the system file");
        if (mode == "OH") {
            if (!wants_obligation) throw Error("mode OH expects an O conditional");
            verdict = obligation_oh(query.system, sys.norms, sys.preference->pairs, phi, psi,
                                    engine);
        } else {
            if (wants_obligation) throw Error("mode PH expects a P conditional");
            verdict = permission_ph(query.system, sys.norms, sys.preference->pairs, phi, psi,
                                    engine);
        }
    } else if (mode == "OK" || mode == "PK") {
        std::vector<Term> premises = sys.premises;
        if (sys.preference && sys.preference->kind == PreferenceModel::Kind::Premise &&
            premises.empty())
            premises = sys.preference->premises;
        if (mode == "OK") {
            if (!wants_obligation) throw Error("mode OK expects an O conditional");
            verdict = obligation_ok(query.system, sys.norms, premises, phi, psi, engine);
        } else {
            if (wants_obligation) throw Error("mode PK expects a P conditional");
            verdict = permission_pk(query.system, sys.norms, premises, phi, psi, engine);
        }
    } else {
        throw Error("unknown deontic mode '" + mode + "'");
    }
    if (as_json) {
        nlohmann::json j{{"schema", 1}, {"mode", mode}, {"cond", cond}, {"verdict", verdict}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (verdict ? "true" : "false") << "\n";
    }
    return verdict ? kExitTrue : kExitFalse;
}

int run_emit_hol(const std::string& system_path, const std::string& ops_text,
                 const std::vector<std::string>& lemmas, const std::string& out_path,
                 const std::string& theory_name) {
    LoadedSystem sys = load_system_file(system_path);
    if (!sys.is_classical()) throw Error("emit-hol needs a classical system");
    const auto& u = sys.classical->universe();

    TheoryOptions options;
    if (!theory_name.empty()) options.name = theory_name;
    options.ops.clear();
    for (const auto& part : split(ops_text, ',')) {
        if (part == "I") options.ops.push_back(BaseOp::I);
        else if (part == "II") options.ops.push_back(BaseOp::II);
        else if (part == "1") options.ops.push_back(BaseOp::One);
        else if (part == "2") options.ops.push_back(BaseOp::Two);
        else if (part == "3") options.ops.push_back(BaseOp::Three);
        else throw Error("emit-hol supports ops I, II, 1, 2, 3");
    }

    std::vector<TheoryQuery> queries;
    for (const auto& lemma : lemmas) {
        // "<op>: PHI => PSI"
        auto colon = lemma.find(':');
        if (colon == std::string::npos) throw Error("lemma must have the form \"op: PHI => PSI\"");
        std::string op_text = trim(lemma.substr(0, colon));
        TheoryQuery q;
        if (op_text == "I") q.op = BaseOp::I;
        else if (op_text == "II") q.op = BaseOp::II;
        else if (op_text == "1") q.op = BaseOp::One;
        else if (op_text == "2") q.op = BaseOp::Two;
        else if (op_text == "3") q.op = BaseOp::Three;
        else throw Error("lemma op must be one of I, II, 1, 2, 3");
        auto [phi_text, psi_text] = split_goal(lemma.substr(colon + 1));
        q.antecedent = parse_term(phi_text, u);
        q.consequent = parse_term(psi_text, u);
        queries.push_back(std::move(q));
    }

    std::vector<std::pair<Term, Term>> norm_terms;
    for (const auto& n : sys.norms.norms())
        norm_terms.emplace_back(parse_term(sys.classical->describe(n.body), u),
                                parse_term(sys.classical->describe(n.head), u));

    TheoryDocument doc = emit_theory(norm_terms, u, queries, options);
    std::string text = render_theory(doc);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write " + out_path);
        out << text;
    }
    return kExitTrue;
}

int run_fuzz(std::size_t vars, std::size_t norm_bound, std::uint64_t seed, bool exhaustive,
             std::size_t count, bool as_json) {
    PoolConfig cfg;
    cfg.var_count = vars;
    cfg.max_norms = norm_bound;
    cfg.seed = seed;
    cfg.exhaustive = exhaustive;
    cfg.random_instances = count;
    if (exhaustive && vars > 2)
        throw Error("exhaustive fuzzing is limited to 2 variables; use randomized mode");
    if (vars > 3) throw Error("equivalence fuzzing supports up to 3 variables");
    cfg.pool_size = exhaustive ? 10 : 8;
    if (exhaustive) cfg.max_norms = std::min<std::size_t>(cfg.max_norms, 3);

    auto pairings = base_pairings();
    auto iterated = iterated_pairings();
    pairings.insert(pairings.end(), iterated.begin(), iterated.end());
    EquivalenceReport equivalence = run_equivalence(cfg, pairings);

    PoolConfig closure_cfg = cfg;
    closure_cfg.pool_size = std::min<std::size_t>(cfg.pool_size, 8);
    closure_cfg.max_norms = std::min<std::size_t>(cfg.max_norms, 2);
    std::vector<OutOp> ops;
    for (const auto& p : pairings) ops.push_back(p.op);
    EquivalenceReport closure = run_closure_laws(closure_cfg, ops);

    DeonticConfig dcfg;
    dcfg.seed = seed;
    dcfg.instances = exhaustive ? 200 : count;
    EquivalenceReport deontic = run_deontic_checks(dcfg);

    bool pass = equivalence.pass() && closure.pass() && deontic.pass();
    if (as_json) {
        nlohmann::json j{{"schema", 1},
                         {"equivalence", equivalence.to_json()},
                         {"closure_laws", closure.to_json()},
                         {"deontic", deontic.to_json()},
                         {"pass", pass}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << equivalence.summary("equivalence") << "\n";
        std::cout << closure.summary("closure laws") << "\n";
        std::cout << deontic.summary("deontic routes") << "\n";
    }
    return pass ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algebraic input/output reasoning over conditional norms"};
    app.require_subcommand(1);

    std::string system_path, op_name = "out1", input_text, query, rules_text, goal, mode, cond;
    std::string ops_text = "I,II,1,2,3", out_path, theory_name;
    std::vector<std::string> lemmas;
    int max_depth = -1;
    bool as_json = false, show_tree = false, exhaustive = false;
    std::size_t vars = 2, norm_bound = 3, count = 200;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "Decide x in out_op(N, A)");
    check->add_option("--system", system_path, "system file (JSON)")->required();
    check->add_option("--op", op_name, "operation, e.g. out3 or and1")->required();
    check->add_option("--input", input_text, "semicolon-separated input set; empty for {}");
    check->add_option("--query", query, "query element")->required();
    check->add_flag("--json", as_json, "machine-readable output");

    auto* outset = app.add_subcommand("outset", "Print minimal generators of out_op(N, {a})");
    outset->add_option("--system", system_path)->required();
    outset->add_option("--op", op_name)->required();
    outset->add_option("--input", input_text)->required();
    outset->add_flag("--json", as_json);

    auto* derive_cmd = app.add_subcommand("derive", "Search for a derivation of a pair");
    derive_cmd->add_option("--system", system_path)->required();
    derive_cmd->add_option("--rules", rules_text, "comma-separated, e.g. SI,WO,CT")->required();
    derive_cmd->add_option("--goal", goal, "\"PHI => PSI\"")->required();
    derive_cmd->add_option("--max-depth", max_depth, "height bound (default 2|N|+4)");
    derive_cmd->add_flag("--tree", show_tree, "print the derivation tree");
    derive_cmd->add_flag("--json", as_json);

    auto* deontic_cmd = app.add_subcommand("deontic", "Conditional obligation / permission");
    deontic_cmd->add_option("--system", system_path)->required();
    deontic_cmd->add_option("--mode", mode, "OH | OK | PH | PK | CON")->required();
    deontic_cmd->add_option("--cond", cond, "\"PHI > O PSI\" or \"PHI > P PSI\"")->required();
    deontic_cmd->add_option("--op", op_name, "derivability operation (default out1)");
    deontic_cmd->add_flag("--json", as_json);

    auto* emit = app.add_subcommand("emit-hol", "Emit an Isabelle/HOL theory file");
    emit->add_option("--system", system_path)->required();
    emit->add_option("--ops", ops_text, "operation indices, e.g. 1,2,3");
    emit->add_option("-o,--output", out_path, "output path (default stdout)");
    emit->add_option("--name", theory_name, "theory name (default Norms)");
    emit->add_option("--lemma", lemmas, "query stub, \"op: PHI => PSI\" (repeatable)");

    auto* fuzz = app.add_subcommand("fuzz", "Cross-check semantics against proof search");
    fuzz->add_option("--vars", vars, "universe size (2 or 3)");
    fuzz->add_option("--norms", norm_bound, "max norms per system");
    fuzz->add_option("--seed", seed, "random seed");
    fuzz->add_option("--count", count, "random instances (non-exhaustive)");
    fuzz->add_flag("--exhaustive", exhaustive, "enumerate all systems (2 vars)");
    fuzz->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        if (check->parsed())
            return run_check(system_path, op_name, input_text, query, as_json);
        if (outset->parsed()) return run_outset(system_path, op_name, input_text, as_json);
        if (derive_cmd->parsed())
            return run_derive(system_path, rules_text, goal, max_depth, show_tree, as_json);
        if (deontic_cmd->parsed())
            return run_deontic(system_path, mode, cond, op_name, as_json);
        if (emit->parsed())
            return run_emit_hol(system_path, ops_text, lemmas, out_path, theory_name);
        if (fuzz->parsed())
            return run_fuzz(vars, norm_bound, seed, exhaustive, count, as_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
