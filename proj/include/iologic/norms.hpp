#pragma once

#include <string>
#include <vector>

#include "iologic/engine.hpp"

namespace iologic {

using Element = ConsequenceEngine::Element;

/// A conditional norm (body, head) over some engine's element domain.
struct Norm {
    std::string id;
    ConsequenceEngine::Element body = 0;
    ConsequenceEngine::Element head = 0;
};

/// Finite set of norms. Ids must be unique; norms whose (body, head) pair is
/// equivalent to an earlier one are dropped with a warning.
class NormativeSystem {
public:
    NormativeSystem() = default;
    NormativeSystem(std::vector<Norm> norms, const ConsequenceEngine& engine);

    /// No dedup, no warnings; for internal construction where pairs are known
    /// distinct (or duplicates are harmless).
    static NormativeSystem raw(std::vector<Norm> norms);

    const std::vector<Norm>& norms() const { return norms_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    std::size_t size() const { return norms_.size(); }
    bool empty() const { return norms_.empty(); }

    NormativeSystem with_extra(const Norm& n) const;

private:
    std::vector<Norm> norms_;
    std::vector<std::string> warnings_;
};

enum class BaseOp { R, L, Zero, I, II, One, Two, Three };

/// An output operation: one of the eight base operations or an iterated
/// AND/CT/CT-AND/OR operation over a permitted base.
struct OutOp {
    enum class Kind { Base, And, Ct, CtAnd, Or };
    Kind kind = Kind::Base;
    BaseOp base = BaseOp::One;

    static OutOp make_base(BaseOp b) { return {Kind::Base, b}; }
    static OutOp make_and(BaseOp b);   // base in {II, 1, 2}
    static OutOp make_ct(BaseOp b);    // base in {I, II, 1}
    static OutOp make_ct_and();        // base 1
    static OutOp make_or(BaseOp b);    // base in {I}

    bool operator==(const OutOp&) const = default;
};

std::string to_string(BaseOp op);
std::string to_string(const OutOp& op);
/// Parses the CLI spelling: outR outL out0 outI outII out1 out2 out3,
/// andII and1 and2, ctI ctII ct1, ctand1, orI.
std::optional<OutOp> parse_out_op(const std::string& name);

}  // namespace iologic
