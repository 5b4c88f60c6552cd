#include "iologic/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace iologic {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_reserved_word(const std::string& s) {
    return s == "TRUE" || s == "FALSE";
}

}  // namespace

VariableUniverse::VariableUniverse(std::vector<std::string> names, std::size_t cap)
    : names_(std::move(names)) {
    if (names_.empty()) throw Error("variable universe must not be empty");
    if (names_.size() > cap)
        throw Error("variable universe exceeds cap of " + std::to_string(cap) + " variables");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !is_ident_start(n[0]) ||
            !std::all_of(n.begin(), n.end(), is_ident_char) || is_reserved_word(n))
            throw Error("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second) throw Error("duplicate variable name: '" + n + "'");
    }
}

std::optional<std::size_t> VariableUniverse::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::string valuation_literal(const Valuation& v, const VariableUniverse& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!out.empty()) out += " & ";
        if (!v.value(i)) out += "~";
        out += u.name(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SemanticForm

SemanticForm SemanticForm::none(std::size_t var_count) {
    SemanticForm f;
    f.var_count_ = static_cast<std::uint32_t>(var_count);
    f.bits_.assign((f.width() + 63) / 64, 0);
    return f;
}

SemanticForm SemanticForm::all(std::size_t var_count) {
    SemanticForm f = none(var_count);
    for (auto& w : f.bits_) w = ~std::uint64_t{0};
    std::size_t tail = f.width() % 64;
    if (tail) f.bits_.back() = (std::uint64_t{1} << tail) - 1;
    return f;
}

SemanticForm SemanticForm::minterm(std::size_t var_count, std::uint32_t valuation_index) {
    SemanticForm f = none(var_count);
    f.set(valuation_index);
    return f;
}

SemanticForm SemanticForm::variable(std::size_t var_count, std::size_t var_index) {
    SemanticForm f = none(var_count);
    for (std::uint32_t v = 0; v < f.width(); ++v)
        if ((v >> var_index) & 1u) f.set(v);
    return f;
}

bool SemanticForm::test(std::uint32_t v) const {
    return (bits_[v / 64] >> (v % 64)) & 1u;
}

void SemanticForm::set(std::uint32_t v) {
    if (v >= width()) throw Error("valuation index out of range");
    bits_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void SemanticForm::check_same(const SemanticForm& o) const {
    if (var_count_ != o.var_count_)
        throw UniverseMismatchError("semantic forms belong to different universes");
}

SemanticForm SemanticForm::intersect(const SemanticForm& o) const {
    check_same(o);
    SemanticForm r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
    return r;
}

SemanticForm SemanticForm::unite(const SemanticForm& o) const {
    check_same(o);
    SemanticForm r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    return r;
}

SemanticForm SemanticForm::complement() const {
    SemanticForm r = all(var_count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~bits_[i];
    return r;
}

bool SemanticForm::subset_of(const SemanticForm& o) const {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

bool SemanticForm::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

bool SemanticForm::full() const { return *this == all(var_count_); }

std::size_t SemanticForm::count() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

std::vector<Valuation> SemanticForm::valuations() const {
    std::vector<Valuation> vs;
    for (std::uint32_t v = 0; v < width(); ++v)
        if (test(v)) vs.push_back(Valuation{v});
    return vs;
}

bool SemanticForm::operator==(const SemanticForm& o) const {
    return var_count_ == o.var_count_ && bits_ == o.bits_;
}

bool SemanticForm::operator<(const SemanticForm& o) const {
    if (var_count_ != o.var_count_) return var_count_ < o.var_count_;
    return bits_ < o.bits_;
}

std::size_t SemanticForm::hash() const {
    std::size_t h = var_count_;
    for (auto w : bits_) h = h * 1099511628211ull + static_cast<std::size_t>(w);
    return h;
}

// ---------------------------------------------------------------------------
// Term

Term::Term() : node_(std::make_shared<Node>(Node{Kind::Top, {}, {}})) {}

Term Term::variable(std::string name) {
    return Term(std::make_shared<Node>(Node{Kind::Variable, std::move(name), {}}));
}
Term Term::top() { return Term(std::make_shared<Node>(Node{Kind::Top, {}, {}})); }
Term Term::bot() { return Term(std::make_shared<Node>(Node{Kind::Bot, {}, {}})); }
Term Term::negate(Term t) {
    return Term(std::make_shared<Node>(Node{Kind::Not, {}, {std::move(t)}}));
}
Term Term::conj(Term a, Term b) {
    return Term(std::make_shared<Node>(Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}
Term Term::disj(Term a, Term b) {
    return Term(std::make_shared<Node>(Node{Kind::Or, {}, {std::move(a), std::move(b)}}));
}

const std::string& Term::var_name() const {
    if (node_->kind != Kind::Variable) throw Error("var_name on non-variable term");
    return node_->name;
}

const Term& Term::child(std::size_t i) const { return node_->kids.at(i); }

bool Term::structurally_equal(const Term& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case Kind::Variable: return node_->name == o.node_->name;
        case Kind::Top:
        case Kind::Bot: return true;
        case Kind::Not: return child(0).structurally_equal(o.child(0));
        case Kind::And:
        case Kind::Or:
            return child(0).structurally_equal(o.child(0)) &&
                   child(1).structurally_equal(o.child(1));
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser: or-level is lowest after '->', which desugars on the fly.
//   impl := or ('->' or)*          (left-assoc, a->b == ~a|b)
//   or   := and ('|' and)*
//   and  := unary ('&' unary)*
//   unary:= '~' unary | '(' impl ')' | ident | 1 | 0 | TRUE | FALSE

namespace {

class Parser {
public:
    Parser(const std::string& text, const VariableUniverse& u) : text_(text), universe_(u) {}

    Term parse() {
        if (text_.find_first_not_of(" \t\r\n") == std::string::npos)
            throw ParseError("empty formula", 0);
        Term t = parse_impl();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    Term parse_impl() {
        Term lhs = parse_or();
        while (true) {
            skip_ws();
            if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
                pos_ += 2;
                Term rhs = parse_or();
                lhs = Term::disj(Term::negate(std::move(lhs)), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    Term parse_or() {
        Term lhs = parse_and();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                lhs = Term::disj(std::move(lhs), parse_and());
            } else {
                return lhs;
            }
        }
    }

    Term parse_and() {
        Term lhs = parse_unary();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                lhs = Term::conj(std::move(lhs), parse_unary());
            } else {
                return lhs;
            }
        }
    }

    Term parse_unary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
        char c = text_[pos_];
        if (c == '~') {
            ++pos_;
            return Term::negate(parse_unary());
        }
        if (c == '(') {
            ++pos_;
            Term t = parse_impl();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return t;
        }
        if (c == '1') {
            ++pos_;
            return Term::top();
        }
        if (c == '0') {
            ++pos_;
            return Term::bot();
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "TRUE") return Term::top();
            if (name == "FALSE") return Term::bot();
            if (!universe_.index_of(name))
                throw ParseError("undeclared variable '" + name + "'", start);
            return Term::variable(std::move(name));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                text_[pos_] == '\n'))
            ++pos_;
    }

    const std::string& text_;
    const VariableUniverse& universe_;
    std::size_t pos_ = 0;
};

int precedence(Term::Kind k) {
    switch (k) {
        case Term::Kind::Or: return 1;
        case Term::Kind::And: return 2;
        case Term::Kind::Not: return 3;
        default: return 4;
    }
}

void render(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Variable: out += t.var_name(); return;
        case Term::Kind::Top: out += "1"; return;
        case Term::Kind::Bot: out += "0"; return;
        case Term::Kind::Not: {
            out += "~";
            bool parens = precedence(t.child(0).kind()) < precedence(Term::Kind::Not);
            if (parens) out += "(";
            render(t.child(0), out);
            if (parens) out += ")";
            return;
        }
        case Term::Kind::And:
        case Term::Kind::Or: {
            int prec = precedence(t.kind());
            const char* op = t.kind() == Term::Kind::And ? " & " : " | ";
            bool lp = precedence(t.child(0).kind()) < prec;
            // left-associative grammar: an equal-precedence right child re-parses
            // differently, so it keeps its parentheses
            bool rp = precedence(t.child(1).kind()) <= prec;
            if (lp) out += "(";
            render(t.child(0), out);
            if (lp) out += ")";
            out += op;
            if (rp) out += "(";
            render(t.child(1), out);
            if (rp) out += ")";
            return;
        }
    }
}

}  // namespace

Term parse_term(const std::string& text, const VariableUniverse& universe) {
    return Parser(text, universe).parse();
}

std::string render_term(const Term& t) {
    std::string out;
    render(t, out);
    return out;
}

bool evaluate(const Term& t, const Valuation& v, const VariableUniverse& universe) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto idx = universe.index_of(t.var_name());
            if (!idx) throw Error("undeclared variable '" + t.var_name() + "'");
            return v.value(*idx);
        }
        case Term::Kind::Top: return true;
        case Term::Kind::Bot: return false;
        case Term::Kind::Not: return !evaluate(t.child(0), v, universe);
        case Term::Kind::And:
            return evaluate(t.child(0), v, universe) && evaluate(t.child(1), v, universe);
        case Term::Kind::Or:
            return evaluate(t.child(0), v, universe) || evaluate(t.child(1), v, universe);
    }
    return false;
}

SemanticForm semantic_form(const Term& t, const VariableUniverse& universe) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto idx = universe.index_of(t.var_name());
            if (!idx) throw Error("undeclared variable '" + t.var_name() + "'");
            return SemanticForm::variable(universe.size(), *idx);
        }
        case Term::Kind::Top: return SemanticForm::all(universe.size());
        case Term::Kind::Bot: return SemanticForm::none(universe.size());
        case Term::Kind::Not: return semantic_form(t.child(0), universe).complement();
        case Term::Kind::And:
            return semantic_form(t.child(0), universe)
                .intersect(semantic_form(t.child(1), universe));
        case Term::Kind::Or:
            return semantic_form(t.child(0), universe)
                .unite(semantic_form(t.child(1), universe));
    }
    throw Error("unreachable term kind");
}

bool leq(const SemanticForm& a, const SemanticForm& b) { return a.subset_of(b); }
bool equiv(const SemanticForm& a, const SemanticForm& b) { return a == b; }

std::vector<Valuation> atoms_below(const SemanticForm& a) { return a.valuations(); }

}  // namespace iologic
