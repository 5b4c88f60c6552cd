#include "iologic/hol_emitter.hpp"

#include <algorithm>
#include <set>

namespace iologic {

namespace {

void collect_vars(const Term& t, const VariableUniverse& u) {
    switch (t.kind()) {
        case Term::Kind::Variable:
            if (!u.index_of(t.var_name()))
                throw Error("theory query references undeclared variable '" + t.var_name() +
                            "'");
            return;
        case Term::Kind::Not: collect_vars(t.child(0), u); return;
        case Term::Kind::And:
        case Term::Kind::Or:
            collect_vars(t.child(0), u);
            collect_vars(t.child(1), u);
            return;
        default: return;
    }
}

/// Embedding of a term: variables map to their HOL constants, connectives to
/// the bold algebra operators. Composite arguments are parenthesized.
std::string embed(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Variable: return t.var_name();
        case Term::Kind::Top: return "\\<^bold>1";
        case Term::Kind::Bot: return "\\<^bold>0";
        case Term::Kind::Not: {
            const Term& c = t.child(0);
            bool atom = c.kind() == Term::Kind::Variable || c.kind() == Term::Kind::Top ||
                        c.kind() == Term::Kind::Bot;
            return atom ? "\\<^bold>\\<not>" + embed(c) : "\\<^bold>\\<not>(" + embed(c) + ")";
        }
        case Term::Kind::And:
            return "(" + embed(t.child(0)) + " \\<^bold>\\<and> " + embed(t.child(1)) + ")";
        case Term::Kind::Or:
            return "(" + embed(t.child(0)) + " \\<^bold>\\<or> " + embed(t.child(1)) + ")";
    }
    throw Error("unreachable term kind");
}

std::string op_symbol(BaseOp op) {
    switch (op) {
        case BaseOp::I: return "\\<circle>\\<^sub>I";
        case BaseOp::II: return "\\<circle>\\<^sub>I\\<^sub>I";
        case BaseOp::One: return "\\<circle>\\<^sub>1";
        case BaseOp::Two: return "\\<circle>\\<^sub>2";
        case BaseOp::Three: return "\\<circle>\\<^sub>3";
        default: throw Error("the embedding covers operations I, II, 1, 2, 3 only");
    }
}

std::string op_const(BaseOp op) {
    switch (op) {
        case BaseOp::I: return "outI";
        case BaseOp::II: return "outII";
        case BaseOp::One: return "out1";
        case BaseOp::Two: return "out2";
        case BaseOp::Three: return "out3";
        default: throw Error("the embedding covers operations I, II, 1, 2, 3 only");
    }
}

std::string op_definition(BaseOp op) {
    const std::string sym = op_symbol(op);
    const std::string head = "definition " + op_const(op) +
                             " :: \"\\<tau> \\<Rightarrow> \\<tau>\"  (\"" + sym + "\")\n";
    switch (op) {
        case BaseOp::I:
            return head + "  where \"" + sym +
                   " A \\<equiv> \\<lambda>X. \\<exists>U Y Z. A Z \\<and> Z \\<preceq> Y "
                   "\\<and> N Y U \\<and> U = X\"\n";
        case BaseOp::II:
            return head + "  where \"" + sym +
                   " A \\<equiv> \\<lambda>X. \\<exists>U Y Z. A Z \\<and> Z = Y "
                   "\\<and> N Y U \\<and> U \\<preceq> X\"\n";
        case BaseOp::One:
            return head + "  where \"" + sym +
                   " A \\<equiv> \\<lambda>X. \\<exists>U Y Z. A Z \\<and> Z \\<preceq> Y "
                   "\\<and> N Y U \\<and> U \\<preceq> X\"\n";
        case BaseOp::Two:
            return head + "  where \"" + sym +
                   " A \\<equiv> \\<lambda>X. \\<forall>V. Saturated V \\<and> "
                   "(\\<forall>U. A U \\<longrightarrow> V U)\n"
                   "    \\<longrightarrow> (\\<exists>Y Z. Z \\<preceq> X \\<and> N Y Z "
                   "\\<and> V Y)\"\n";
        case BaseOp::Three:
            return head + "  where \"" + sym +
                   " A \\<equiv> \\<lambda>X. \\<forall>V. (\\<forall>U. A U "
                   "\\<longrightarrow> V U) \\<and> V = Up V \\<and>\n"
                   "    (\\<forall>W. (\\<exists>Y. V Y \\<and> N Y W) \\<longrightarrow> V W)\n"
                   "    \\<longrightarrow> (\\<exists>Y Z. Z \\<preceq> X \\<and> N Y Z "
                   "\\<and> V Y)\"\n";
        default: throw Error("unreachable");
    }
}

// Kept in this exact order; the block always contains these ten identities.
constexpr const char* kAxiomBlock =
    "axiomatization where\n"
    "  COM_or:   \"\\<forall>X Y. X \\<^bold>\\<or> Y = Y \\<^bold>\\<or> X\" and\n"
    "  COM_and:  \"\\<forall>X Y. X \\<^bold>\\<and> Y = Y \\<^bold>\\<and> X\" and\n"
    "  ASS_or:   \"\\<forall>X Y Z. X \\<^bold>\\<or> (Y \\<^bold>\\<or> Z) = "
    "(X \\<^bold>\\<or> Y) \\<^bold>\\<or> Z\" and\n"
    "  ASS_and:  \"\\<forall>X Y Z. X \\<^bold>\\<and> (Y \\<^bold>\\<and> Z) = "
    "(X \\<^bold>\\<and> Y) \\<^bold>\\<and> Z\" and\n"
    "  IDE_or:   \"\\<forall>X. X \\<^bold>\\<or> \\<^bold>0 = X\" and\n"
    "  IDE_and:  \"\\<forall>X. X \\<^bold>\\<and> \\<^bold>1 = X\" and\n"
    "  COMP_or:  \"\\<forall>X. X \\<^bold>\\<or> \\<^bold>\\<not>X = \\<^bold>1\" and\n"
    "  COMP_and: \"\\<forall>X. X \\<^bold>\\<and> \\<^bold>\\<not>X = \\<^bold>0\" and\n"
    "  DIS_or_and: \"\\<forall>X Y Z. X \\<^bold>\\<or> (Y \\<^bold>\\<and> Z) = "
    "(X \\<^bold>\\<or> Y) \\<^bold>\\<and> (X \\<^bold>\\<or> Z)\" and\n"
    "  DIS_and_or: \"\\<forall>X Y Z. X \\<^bold>\\<and> (Y \\<^bold>\\<or> Z) = "
    "(X \\<^bold>\\<and> Y) \\<^bold>\\<or> (X \\<^bold>\\<and> Z)\"\n";

}  // namespace

const std::string* TheoryDocument::section(const std::string& label) const {
    for (const auto& [l, text] : sections)
        if (l == label) return &text;
    return nullptr;
}

TheoryDocument emit_theory(const std::vector<std::pair<Term, Term>>& norms,
                           const VariableUniverse& universe,
                           const std::vector<TheoryQuery>& queries,
                           const TheoryOptions& options) {
    for (const auto& [b, h] : norms) {
        collect_vars(b, universe);
        collect_vars(h, universe);
    }
    for (const auto& q : queries) {
        collect_vars(q.antecedent, universe);
        collect_vars(q.consequent, universe);
    }

    // requested ops, plus whatever the queries need, in canonical order
    std::set<BaseOp> wanted(options.ops.begin(), options.ops.end());
    for (const auto& q : queries) wanted.insert(q.op);
    static constexpr BaseOp kOpOrder[] = {BaseOp::I, BaseOp::II, BaseOp::One, BaseOp::Two,
                                          BaseOp::Three};
    std::vector<BaseOp> ops;
    for (BaseOp op : kOpOrder)
        if (wanted.count(op)) ops.push_back(op);
    if (ops.size() != wanted.size())
        throw Error("the embedding covers operations I, II, 1, 2, 3 only");

    TheoryDocument doc;
    doc.name = options.name;

    doc.sections.emplace_back("header", "theory " + options.name + "\n  imports Main\nbegin\n");

    std::string sig =
        "(* Carrier of the algebra of propositions. *)\n"
        "typedecl i\n"
        "\n"
        "type_synonym \\<tau> = \"i \\<Rightarrow> bool\"\n"
        "\n"
        "consts\n"
        "  bzero :: i  (\"\\<^bold>0\")\n"
        "  bone  :: i  (\"\\<^bold>1\")\n"
        "  bneg  :: \"i \\<Rightarrow> i\"  (\"\\<^bold>\\<not>_\" [52] 53)\n"
        "  bor   :: \"i \\<Rightarrow> i \\<Rightarrow> i\"  (infixl \"\\<^bold>\\<or>\" 50)\n"
        "  band  :: \"i \\<Rightarrow> i \\<Rightarrow> i\"  (infixl \"\\<^bold>\\<and>\" 51)\n"
        "  N     :: \"i \\<Rightarrow> \\<tau>\"\n"
        "\n"
        "consts\n";
    for (const auto& v : universe.names()) sig += "  " + v + " :: i\n";
    doc.sections.emplace_back("signature", std::move(sig));

    doc.sections.emplace_back("axioms",
                              std::string("(* Boolean algebra identities. *)\n") + kAxiomBlock);

    std::string defs =
        "definition lleq :: \"i \\<Rightarrow> i \\<Rightarrow> bool\"  (infix \"\\<preceq>\" "
        "45)\n"
        "  where \"X \\<preceq> Y \\<equiv> X \\<^bold>\\<and> Y = X\"\n"
        "\n"
        "definition Up :: \"\\<tau> \\<Rightarrow> \\<tau>\"\n"
        "  where \"Up A \\<equiv> \\<lambda>X. \\<exists>Z. A Z \\<and> Z \\<preceq> X\"\n"
        "\n"
        "definition Saturated :: \"\\<tau> \\<Rightarrow> bool\"\n"
        "  where \"Saturated V \\<equiv> \\<forall>X Y. (V (X \\<^bold>\\<or> Y) "
        "\\<longrightarrow> V X \\<or> V Y) \\<and> (V X \\<and> X \\<preceq> Y "
        "\\<longrightarrow> V Y)\"\n";
    for (BaseOp op : ops) defs += "\n" + op_definition(op);
    doc.sections.emplace_back("definitions", std::move(defs));

    std::string norm_axioms = "(* Norms of the system. *)\n";
    if (norms.empty()) {
        norm_axioms += "(* none *)\n";
    } else {
        norm_axioms += "axiomatization where\n";
        for (std::size_t k = 0; k < norms.size(); ++k) {
            norm_axioms += "  norm_" + std::to_string(k + 1) + ": \"N " +
                           embed(norms[k].first) + " " + embed(norms[k].second) + "\"";
            norm_axioms += (k + 1 < norms.size()) ? " and\n" : "\n";
        }
    }
    doc.sections.emplace_back("norms", std::move(norm_axioms));

    if (!queries.empty()) {
        std::string lemmas = "(* Queries, ready for nitpick / sledgehammer. *)\n";
        for (std::size_t k = 0; k < queries.size(); ++k) {
            const auto& q = queries[k];
            lemmas += "lemma query_" + std::to_string(k + 1) + ": \"" + op_symbol(q.op) +
                      " (\\<lambda>Z. Z = " + embed(q.antecedent) + ") " + embed(q.consequent) +
                      "\"\n  nitpick[user_axioms = true, expect = none]\n  oops\n";
            if (k + 1 < queries.size()) lemmas += "\n";
        }
        doc.sections.emplace_back("queries", std::move(lemmas));
    }

    doc.sections.emplace_back("footer", "end\n");
    return doc;
}

std::string render_theory(const TheoryDocument& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.sections.size(); ++i) {
        if (i) out += "\n";
        out += doc.sections[i].second;
    }
    return out;
}

}  // namespace iologic
