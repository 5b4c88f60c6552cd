#include "iologic/out_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iologic {

namespace {

/// Keeps the minimal elements, dropping anything above (or equivalent to) a
/// kept element. Deterministic: smaller id wins inside one equivalence class.
std::vector<Element> reduce_up(std::vector<Element> elems, const ConsequenceEngine& E) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Element> kept;
    for (Element e : elems) {
        bool redundant = false;
        for (Element k : kept)
            if (E.leq(k, e)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        std::erase_if(kept, [&](Element k) { return E.leq(e, k); });
        kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Element> reduce_equiv(std::vector<Element> elems, const ConsequenceEngine& E) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Element> kept;
    for (Element e : elems) {
        bool dup = std::any_of(kept.begin(), kept.end(),
                               [&](Element k) { return E.equiv(k, e); });
        if (!dup) kept.push_back(e);
    }
    return kept;
}

Element meet_fold(const std::vector<Element>& elems, const ConsequenceEngine& E) {
    Element acc = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) acc = E.meet(acc, elems[i]);
    return acc;
}

Element join_fold(const std::vector<Element>& elems, const ConsequenceEngine& E) {
    Element acc = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) acc = E.join(acc, elems[i]);
    return acc;
}

bool base_member_single(BaseOp op, const NormativeSystem& N, Element a, Element x,
                        const ConsequenceEngine& E);

/// x in out_2(N, {a}): S = {(b,y) : y <= x} non-empty and a <= join(bodies(S)).
bool out2_single(const NormativeSystem& N, Element a, Element x, const ConsequenceEngine& E) {
    if (!E.has_join()) throw CapabilityError("out_2 needs joins on this engine");
    std::vector<Element> bodies;
    for (const auto& n : N.norms())
        if (E.leq(n.head, x)) bodies.push_back(n.body);
    if (bodies.empty()) return false;
    return E.leq(a, join_fold(bodies, E));
}

/// Set-level out_2 via choice functions over atoms. An input element
/// equivalent to bottom forces the only saturated superset to be the whole
/// algebra, where the output is Up(heads of N).
bool out2_choice(const NormativeSystem& N, std::span<const Element> input, Element x,
                 const ConsequenceEngine& E) {
    std::vector<std::vector<Element>> alternatives;  // per input element: usable atoms
    std::size_t combos = 1;
    for (Element a : input) {
        auto atoms = E.atoms_below(a);
        if (atoms.empty()) {
            for (const auto& n : N.norms())
                if (E.leq(n.head, x)) return true;
            return false;
        }
        combos *= atoms.size();
        if (combos > 2000000) throw Error("out_2 choice-function enumeration too large");
        alternatives.push_back(std::move(atoms));
    }
    // every choice of one atom per input element must hit a triggering body
    std::vector<std::size_t> pick(alternatives.size(), 0);
    while (true) {
        bool hit = false;
        for (std::size_t i = 0; i < pick.size() && !hit; ++i) {
            Element atom = alternatives[i][pick[i]];
            for (const auto& n : N.norms())
                if (E.leq(n.head, x) && E.leq(atom, n.body)) {
                    hit = true;
                    break;
                }
        }
        if (!hit) return false;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < alternatives[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) return true;
    }
}

struct Out3Fixpoint {
    std::vector<Element> generators;   // input elements plus triggered heads
    std::vector<bool> triggered;       // per norm index
};

Out3Fixpoint out3_fixpoint(const NormativeSystem& N, std::span<const Element> input,
                           const ConsequenceEngine& E) {
    Out3Fixpoint fp;
    fp.generators.assign(input.begin(), input.end());
    fp.triggered.assign(N.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < N.size(); ++i) {
            if (fp.triggered[i]) continue;
            if (up_membership(E, fp.generators, N.norms()[i].body)) {
                fp.triggered[i] = true;
                fp.generators.push_back(N.norms()[i].head);
                changed = true;
            }
        }
    }
    return fp;
}

bool out3_member(const NormativeSystem& N, std::span<const Element> input, Element x,
                 const ConsequenceEngine& E) {
    auto fp = out3_fixpoint(N, input, E);
    for (std::size_t i = 0; i < N.size(); ++i)
        if (fp.triggered[i] && E.leq(N.norms()[i].head, x)) return true;
    return false;
}

bool base_member_single(BaseOp op, const NormativeSystem& N, Element a, Element x,
                        const ConsequenceEngine& E) {
    switch (op) {
        case BaseOp::R:
        case BaseOp::L:
        case BaseOp::Zero:
            // Eq collapses to element equality in the quotient the engine
            // presents, so all three coincide here.
            for (const auto& n : N.norms())
                if (E.equiv(a, n.body) && E.equiv(n.head, x)) return true;
            return false;
        case BaseOp::I:
            for (const auto& n : N.norms())
                if (E.leq(a, n.body) && E.equiv(n.head, x)) return true;
            return false;
        case BaseOp::II:
            for (const auto& n : N.norms())
                if (E.equiv(a, n.body) && E.leq(n.head, x)) return true;
            return false;
        case BaseOp::One:
            for (const auto& n : N.norms())
                if (E.leq(a, n.body) && E.leq(n.head, x)) return true;
            return false;
        case BaseOp::Two: {
            Element input[1] = {a};
            return out_membership(BaseOp::Two, N, input, x, E);
        }
        case BaseOp::Three: {
            Element input[1] = {a};
            return out3_member(N, input, x, E);
        }
    }
    return false;
}

constexpr std::size_t kChoiceEnumerationCap = 200000;

}  // namespace

bool GeneratorSet::contains(const ConsequenceEngine& engine, Element x) const {
    if (closure == Closure::UpSet)
        return std::any_of(elements.begin(), elements.end(),
                           [&](Element g) { return engine.leq(g, x); });
    return std::any_of(elements.begin(), elements.end(),
                       [&](Element g) { return engine.equiv(g, x); });
}

bool out_membership(BaseOp op, const NormativeSystem& N, std::span<const Element> input,
                    Element x, const ConsequenceEngine& engine) {
    if (input.empty()) return false;
    switch (op) {
        case BaseOp::Two:
            if (input.size() == 1 && engine.has_join())
                return out2_single(N, input[0], x, engine);
            if (!engine.has_atoms())
                throw CapabilityError(
                    "out_2 over input sets needs atom enumeration on this engine");
            return out2_choice(N, input, x, engine);
        case BaseOp::Three:
            return out3_member(N, input, x, engine);
        default:
            return std::any_of(input.begin(), input.end(), [&](Element a) {
                return base_member_single(op, N, a, x, engine);
            });
    }
}

bool out_membership(const OutOp& op, const NormativeSystem& N, std::span<const Element> input,
                    Element x, const ConsequenceEngine& engine) {
    if (op.kind != OutOp::Kind::Base)
        throw Error("out_membership expects a base operation; use check_membership");
    return out_membership(op.base, N, input, x, engine);
}

GeneratorSet out_generators(BaseOp op, const NormativeSystem& N, Element a,
                            const ConsequenceEngine& engine) {
    GeneratorSet out;
    std::vector<Element> raw;
    switch (op) {
        case BaseOp::I:
            out.closure = GeneratorSet::Closure::EquivClass;
            for (const auto& n : N.norms())
                if (engine.leq(a, n.body)) raw.push_back(n.head);
            out.elements = reduce_equiv(std::move(raw), engine);
            return out;
        case BaseOp::II:
            for (const auto& n : N.norms())
                if (engine.equiv(a, n.body)) raw.push_back(n.head);
            break;
        case BaseOp::One:
            for (const auto& n : N.norms())
                if (engine.leq(a, n.body)) raw.push_back(n.head);
            break;
        case BaseOp::Three: {
            Element input[1] = {a};
            auto fp = out3_fixpoint(N, input, engine);
            for (std::size_t i = 0; i < N.size(); ++i)
                if (fp.triggered[i]) raw.push_back(N.norms()[i].head);
            break;
        }
        case BaseOp::Two: {
            if (!engine.has_atoms() || !engine.has_join())
                throw CapabilityError("out_2 generators need atoms and joins");
            auto atoms = engine.atoms_below(a);
            if (atoms.empty()) {
                // the whole algebra is the only saturated superset
                for (const auto& n : N.norms()) raw.push_back(n.head);
                break;
            }
            std::vector<std::vector<Element>> alts;
            std::size_t combos = 1;
            for (Element m : atoms) {
                std::vector<Element> heads;
                for (const auto& n : N.norms())
                    if (engine.leq(m, n.body)) heads.push_back(n.head);
                if (heads.empty()) {  // this atom triggers nothing: empty output
                    out.elements.clear();
                    return out;
                }
                heads = reduce_equiv(std::move(heads), engine);
                combos *= heads.size();
                if (combos > kChoiceEnumerationCap)
                    throw Error("out_2 generator enumeration too large for this input");
                alts.push_back(std::move(heads));
            }
            std::set<Element> joins;
            std::vector<std::size_t> pick(alts.size(), 0);
            while (true) {
                Element j = alts[0][pick[0]];
                for (std::size_t i = 1; i < alts.size(); ++i)
                    j = engine.join(j, alts[i][pick[i]]);
                joins.insert(j);
                std::size_t i = 0;
                for (; i < alts.size(); ++i) {
                    if (++pick[i] < alts[i].size()) break;
                    pick[i] = 0;
                }
                if (i == alts.size()) break;
            }
            raw.assign(joins.begin(), joins.end());
            break;
        }
        default:
            throw Error("out_generators supports ops I, II, 1, 2, 3");
    }
    out.elements = reduce_up(std::move(raw), engine);
    return out;
}

bool and_membership(BaseOp base, const NormativeSystem& N, Element a, Element x,
                    const ConsequenceEngine& engine) {
    if (base != BaseOp::II && base != BaseOp::One && base != BaseOp::Two)
        throw Error("AND iteration is only defined over bases II, 1, 2");
    if (!engine.has_meet()) throw CapabilityError("AND iteration needs meets on this engine");
    if (base == BaseOp::Two) {
        // The meet of the choice-function joins folds out by complete
        // distributivity: join over atoms of (meet of the heads triggered at
        // that atom). Avoids enumerating the choice functions.
        if (!engine.has_atoms() || !engine.has_join())
            throw CapabilityError("AND over out_2 needs atoms and joins");
        if (N.empty()) return false;
        auto atoms = engine.atoms_below(a);
        if (atoms.empty()) {  // the whole algebra is the only saturated superset
            std::vector<Element> heads;
            for (const auto& n : N.norms()) heads.push_back(n.head);
            return engine.leq(meet_fold(heads, engine), x);
        }
        std::optional<Element> least;
        for (Element m : atoms) {
            std::vector<Element> alts;
            for (const auto& n : N.norms())
                if (engine.leq(m, n.body)) alts.push_back(n.head);
            if (alts.empty()) return false;  // nothing triggers at this atom
            Element part = meet_fold(alts, engine);
            least = least ? engine.join(*least, part) : part;
        }
        return engine.leq(*least, x);
    }
    GeneratorSet g = out_generators(base, N, a, engine);
    if (g.empty()) return false;
    return engine.leq(meet_fold(g.elements, engine), x);
}

GeneratorSet ct_generators(BaseOp base, const NormativeSystem& N, Element a,
                           const ConsequenceEngine& engine) {
    if (base != BaseOp::I && base != BaseOp::II && base != BaseOp::One)
        throw Error("CT iteration is only defined over bases I, II, 1");
    if (!engine.has_meet()) throw CapabilityError("CT iteration needs meets on this engine");

    const bool eq_closure = (base == BaseOp::I);

    // Canonical representative per equivalence class, so contexts built by
    // meets compare by id.
    std::map<Element, Element> canon_memo;
    auto canon = [&](Element e) -> Element {
        auto it = canon_memo.find(e);
        if (it != canon_memo.end()) return it->second;
        Element rep = e;
        if (auto domain = engine.enumerate()) {
            for (Element d : *domain)
                if (d < rep && engine.equiv(d, e)) {
                    rep = d;
                    break;
                }
        }
        canon_memo.emplace(e, rep);
        return rep;
    };

    auto level0 = [&](Element ctx) {
        std::vector<Element> heads;
        for (const auto& n : N.norms()) {
            bool fires = (base == BaseOp::II) ? engine.equiv(ctx, n.body)
                                              : engine.leq(ctx, n.body);
            if (fires) heads.push_back(n.head);
        }
        return eq_closure ? reduce_equiv(std::move(heads), engine)
                          : reduce_up(std::move(heads), engine);
    };

    std::map<Element, std::vector<Element>> gens;  // context -> generators
    const Element root = canon(a);
    gens[root] = level0(root);

    auto merge_into = [&](Element ctx, const std::vector<Element>& extra) {
        auto& cur = gens[ctx];
        std::vector<Element> merged = cur;
        merged.insert(merged.end(), extra.begin(), extra.end());
        merged = eq_closure ? reduce_equiv(std::move(merged), engine)
                            : reduce_up(std::move(merged), engine);
        if (merged != cur) {
            cur = std::move(merged);
            return true;
        }
        return false;
    };

    std::vector<Element> bodies;  // canonical norm bodies, base II contexts
    if (base == BaseOp::II) {
        for (const auto& n : N.norms()) bodies.push_back(canon(n.body));
        std::sort(bodies.begin(), bodies.end());
        bodies.erase(std::unique(bodies.begin(), bodies.end()), bodies.end());
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Element> contexts;
        for (const auto& [ctx, _] : gens) contexts.push_back(ctx);
        for (Element ctx : contexts) {
            if (base != BaseOp::II) {
                // With SI in the base, recursing on generator contexts is
                // exact: any member y lies above a generator g and the output
                // at ctx & y is contained in the output at ctx & g.
                std::vector<Element> snapshot = gens[ctx];
                for (Element g : snapshot) {
                    Element sub = canon(engine.meet(ctx, g));
                    if (sub == ctx) continue;
                    if (!gens.count(sub)) {
                        gens[sub] = level0(sub);
                        changed = true;
                    }
                    if (merge_into(ctx, gens[sub])) changed = true;
                }
            } else {
                // Without SI only contexts equivalent to norm bodies produce
                // anything. A body b is reachable as ctx & y for some member
                // y iff b <= ctx and ctx & g <= b for some generator g
                // (witness y = b | g in a distributive lattice).
                for (Element b : bodies) {
                    if (!engine.leq(b, ctx) || b == ctx) continue;
                    bool reachable = false;
                    for (Element g : gens[ctx]) {
                        bool ok = engine.has_join()
                                      ? engine.leq(engine.meet(ctx, g), b)
                                      : (engine.leq(g, b) ||
                                         engine.equiv(engine.meet(ctx, g), b));
                        if (ok) {
                            reachable = true;
                            break;
                        }
                    }
                    if (!reachable) continue;
                    if (!gens.count(b)) {
                        gens[b] = level0(b);
                        changed = true;
                    }
                    if (merge_into(ctx, gens[b])) changed = true;
                }
            }
        }
    }

    GeneratorSet out;
    out.closure = eq_closure ? GeneratorSet::Closure::EquivClass : GeneratorSet::Closure::UpSet;
    out.elements = gens[root];
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

bool ct_membership(BaseOp base, const NormativeSystem& N, Element a, Element x,
                   const ConsequenceEngine& engine) {
    return ct_generators(base, N, a, engine).contains(engine, x);
}

bool ct_and_membership(const NormativeSystem& N, Element a, Element x,
                       const ConsequenceEngine& engine) {
    if (!engine.has_meet()) throw CapabilityError("CT-AND needs meets on this engine");
    GeneratorSet g = ct_generators(BaseOp::One, N, a, engine);
    if (g.empty()) return false;
    return engine.leq(meet_fold(g.elements, engine), x);
}

bool or_membership(BaseOp base, const NormativeSystem& N, Element a, Element x,
                   const ConsequenceEngine& engine) {
    if (base != BaseOp::I) throw Error("OR iteration is only defined over base I");
    if (!engine.has_join()) throw CapabilityError("OR iteration needs joins on this engine");
    std::vector<Element> bodies;
    for (const auto& n : N.norms())
        if (engine.equiv(n.head, x)) bodies.push_back(n.body);
    if (bodies.empty()) return false;
    return engine.leq(a, join_fold(bodies, engine));
}

bool check_membership(const OutOp& op, const NormativeSystem& N, std::span<const Element> input,
                      Element x, const ConsequenceEngine& engine) {
    if (op.kind == OutOp::Kind::Base) return out_membership(op.base, N, input, x, engine);
    return std::any_of(input.begin(), input.end(), [&](Element a) {
        switch (op.kind) {
            case OutOp::Kind::And: return and_membership(op.base, N, a, x, engine);
            case OutOp::Kind::Ct: return ct_membership(op.base, N, a, x, engine);
            case OutOp::Kind::CtAnd: return ct_and_membership(N, a, x, engine);
            case OutOp::Kind::Or: return or_membership(op.base, N, a, x, engine);
            default: return false;
        }
    });
}

bool out_set_semantic(BaseOp op, const NormativeSystem& N, std::span<const Element> input,
                      Element x, const ConsequenceEngine& engine) {
    const auto* classical = dynamic_cast<const ClassicalEngine*>(&engine);
    if (!classical)
        throw CapabilityError("out_set_semantic needs the classical engine");
    const std::size_t n = classical->universe().size();
    if (n > 4) throw Error("out_set_semantic enumerates the full algebra; universe too large");
    if (input.empty()) return false;

    const SemanticForm& xf = classical->form(x);

    if (op == BaseOp::Two) {
        // every saturated superset of the input is Up(S) for S a set of atoms
        // possibly extended with bottom (bottom makes it the whole algebra)
        const std::size_t atom_count = std::size_t{1} << n;
        std::vector<SemanticForm> atom_forms;
        for (std::uint32_t v = 0; v < atom_count; ++v)
            atom_forms.push_back(SemanticForm::minterm(n, v));
        const std::size_t subsets = std::size_t{1} << (atom_count + 1);  // +1: bottom flag
        for (std::size_t s = 0; s < subsets; ++s) {
            const bool with_bottom = s & 1;
            auto in_v = [&](const SemanticForm& f) {
                if (with_bottom) return true;
                for (std::size_t i = 0; i < atom_count; ++i)
                    if ((s >> (i + 1)) & 1 && atom_forms[i].subset_of(f)) return true;
                return false;
            };
            bool covers_input = std::all_of(input.begin(), input.end(), [&](Element a) {
                return in_v(classical->form(a));
            });
            if (!covers_input) continue;
            bool x_in_up_nv = false;
            for (const auto& norm : N.norms())
                if (in_v(classical->form(norm.body)) &&
                    classical->form(norm.head).subset_of(xf)) {
                    x_in_up_nv = true;
                    break;
                }
            if (!x_in_up_nv) return false;
        }
        return true;
    }

    if (op == BaseOp::Three) {
        // extensional fixpoint V = Up(input u N(V)) over all 2^2^n elements
        const std::size_t algebra = std::size_t{1} << (std::size_t{1} << n);
        std::vector<SemanticForm> elems;
        elems.reserve(algebra);
        for (std::size_t mask = 0; mask < algebra; ++mask) {
            SemanticForm f = SemanticForm::none(n);
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
                if ((mask >> v) & 1) f.set(v);
            elems.push_back(std::move(f));
        }
        std::vector<SemanticForm> gens;
        for (Element a : input) gens.push_back(classical->form(a));
        std::vector<bool> in_v(algebra, false);
        std::vector<bool> norm_used(N.size(), false);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t m = 0; m < algebra; ++m) {
                if (in_v[m]) continue;
                for (const auto& g : gens)
                    if (g.subset_of(elems[m])) {
                        in_v[m] = true;
                        changed = true;
                        break;
                    }
            }
            for (std::size_t i = 0; i < N.size(); ++i) {
                if (norm_used[i]) continue;
                SemanticForm bf = classical->form(N.norms()[i].body);
                bool body_in = false;
                for (std::size_t m = 0; m < algebra && !body_in; ++m)
                    if (in_v[m] && elems[m] == bf) body_in = true;
                if (body_in) {
                    norm_used[i] = true;
                    gens.push_back(classical->form(N.norms()[i].head));
                    changed = true;
                }
            }
        }
        for (std::size_t i = 0; i < N.size(); ++i)
            if (norm_used[i] && classical->form(N.norms()[i].head).subset_of(xf)) return true;
        return false;
    }

    throw Error("out_set_semantic supports ops 2 and 3");
}

// ---------------------------------------------------------------------------
// Nested operations

MetaNormEngine::MetaNormEngine(const ConsequenceEngine& base, const NormativeSystem& N,
                               BaseOp index, std::vector<Norm> domain)
    : base_(base), domain_(std::move(domain)) {
    if (index == BaseOp::Two)
        throw CapabilityError("nested operations do not support base index 2");
    const std::size_t n = domain_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        NormativeSystem augmented = N.with_extra(domain_[i]);
        for (std::size_t j = 0; j < n; ++j) {
            Element input[1] = {domain_[j].body};
            leq_[i][j] = out_membership(index, augmented, input, domain_[j].head, base_);
        }
    }
}

MetaNormEngine::Element MetaNormEngine::element_for(const Norm& n) const {
    for (Element i = 0; i < domain_.size(); ++i)
        if (base_.equiv(domain_[i].body, n.body) && base_.equiv(domain_[i].head, n.head))
            return i;
    throw Error("norm not in the meta engine's domain");
}

bool MetaNormEngine::leq(Element a, Element b) const {
    check_element(a);
    check_element(b);
    return leq_[a][b];
}

std::optional<std::vector<MetaNormEngine::Element>> MetaNormEngine::enumerate() const {
    std::vector<Element> all(domain_.size());
    for (Element i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

std::string MetaNormEngine::describe(Element e) const {
    check_element(e);
    return "(" + base_.describe(domain_[e].body) + " => " + base_.describe(domain_[e].head) + ")";
}

bool nested_out(const OutOp& j, const std::vector<MetaNorm>& M, BaseOp i,
                const NormativeSystem& N, std::span<const Norm> meta_input, const Norm& target,
                const ConsequenceEngine& engine) {
    auto base_ok = [](BaseOp b) {
        return b == BaseOp::Zero || b == BaseOp::I || b == BaseOp::II || b == BaseOp::One ||
               b == BaseOp::Three;
    };
    if (!base_ok(i) || j.kind != OutOp::Kind::Base || !base_ok(j.base))
        throw Error("nested operations support indices 0, I, II, 1, 3");

    std::vector<Norm> domain;
    auto add = [&](const Norm& n) {
        for (const auto& d : domain)
            if (engine.equiv(d.body, n.body) && engine.equiv(d.head, n.head)) return;
        domain.push_back(n);
    };
    for (const auto& m : M) {
        add(m.body);
        add(m.head);
    }
    for (const auto& n : meta_input) add(n);
    add(target);

    MetaNormEngine meta(engine, N, i, domain);
    std::vector<Norm> meta_norms;
    for (const auto& m : M)
        meta_norms.push_back(
            Norm{m.id, meta.element_for(m.body), meta.element_for(m.head)});
    NormativeSystem meta_system = NormativeSystem::raw(std::move(meta_norms));
    std::vector<Element> input;
    for (const auto& n : meta_input) input.push_back(meta.element_for(n));
    return out_membership(j.base, meta_system, input, meta.element_for(target), meta);
}

}  // namespace iologic
