#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iologic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error with a byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UniverseMismatchError : public Error {
public:
    using Error::Error;
};

/// Ordered set of declared variable names. All terms and semantic forms in a
/// session are relative to one universe; the width of every semantic form is
/// 2^size(). Undeclared names are errors, never auto-added.
class VariableUniverse {
public:
    explicit VariableUniverse(std::vector<std::string> names, std::size_t cap = 16);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t valuation_count() const { return std::size_t{1} << names_.size(); }

private:
    std::vector<std::string> names_;
};

/// One total assignment of the universe variables, identified by its index in
/// 0..2^n-1. Bit i of the index is the value of variable i.
struct Valuation {
    std::uint32_t index = 0;

    bool value(std::size_t var_index) const { return (index >> var_index) & 1u; }
    bool operator==(const Valuation&) const = default;
    bool operator<(const Valuation& o) const { return index < o.index; }
};

/// Renders a valuation as the conjunction of literals that pins it down,
/// e.g. "g & ~t".
std::string valuation_literal(const Valuation& v, const VariableUniverse& u);

/// Characteristic set of satisfying valuations, as a 2^n-wide bit mask.
class SemanticForm {
public:
    SemanticForm() = default;

    static SemanticForm none(std::size_t var_count);
    static SemanticForm all(std::size_t var_count);
    static SemanticForm minterm(std::size_t var_count, std::uint32_t valuation_index);
    /// Form of a bare variable: all valuations where it is true.
    static SemanticForm variable(std::size_t var_count, std::size_t var_index);

    std::size_t var_count() const { return var_count_; }
    std::size_t width() const { return std::size_t{1} << var_count_; }

    bool test(std::uint32_t valuation_index) const;
    void set(std::uint32_t valuation_index);

    SemanticForm intersect(const SemanticForm& o) const;
    SemanticForm unite(const SemanticForm& o) const;
    SemanticForm complement() const;

    bool subset_of(const SemanticForm& o) const;
    bool empty() const;
    bool full() const;
    std::size_t count() const;
    std::vector<Valuation> valuations() const;

    bool operator==(const SemanticForm& o) const;
    bool operator<(const SemanticForm& o) const;  // lexicographic; for ordered containers

    std::size_t hash() const;

private:
    void check_same(const SemanticForm& o) const;

    std::uint32_t var_count_ = 0;
    std::vector<std::uint64_t> bits_;  // ceil(2^n / 64) words, unused high bits zero
};

/// Immutable Boolean term over a variable universe. Nodes are shared; copying
/// a Term is cheap. The signature is exactly variables, 0, 1, ~, &, | --
/// implication exists only as parser sugar.
class Term {
public:
    enum class Kind { Variable, Top, Bot, Not, And, Or };

    Term();  // the constant 1

    static Term variable(std::string name);
    static Term top();
    static Term bot();
    static Term negate(Term t);
    static Term conj(Term a, Term b);
    static Term disj(Term a, Term b);

    Kind kind() const { return node_->kind; }
    const std::string& var_name() const;
    const Term& child(std::size_t i) const;

    bool structurally_equal(const Term& o) const;

private:
    struct Node {
        Kind kind;
        std::string name;      // Variable only
        std::vector<Term> kids;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax. Precedence ~ > & > | > ->, binaries are
/// left-associative, "a -> b" desugars to "~a | b". TRUE/1 and FALSE/0 are
/// the constants. Undeclared variables and malformed input throw ParseError
/// with the offending offset.
Term parse_term(const std::string& text, const VariableUniverse& universe);

/// Minimal-parenthesization rendering; parse_term(render_term(t)) is
/// structurally equal to t.
std::string render_term(const Term& t);

bool evaluate(const Term& t, const Valuation& v, const VariableUniverse& universe);

/// Canonical denotation in the free Boolean algebra over the universe.
SemanticForm semantic_form(const Term& t, const VariableUniverse& universe);

/// a <= b in the free algebra (a & b = a), i.e. sat(a) is a subset of sat(b).
bool leq(const SemanticForm& a, const SemanticForm& b);
bool equiv(const SemanticForm& a, const SemanticForm& b);

/// Atoms of the free algebra below a, i.e. the satisfying valuations.
std::vector<Valuation> atoms_below(const SemanticForm& a);

}  // namespace iologic
