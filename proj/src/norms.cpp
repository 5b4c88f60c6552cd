#include "iologic/norms.hpp"

#include <set>

namespace iologic {

NormativeSystem::NormativeSystem(std::vector<Norm> norms, const ConsequenceEngine& engine) {
    std::set<std::string> ids;
    for (auto& n : norms) {
        if (!ids.insert(n.id).second) throw Error("duplicate norm id: '" + n.id + "'");
        bool duplicate = false;
        for (const auto& kept : norms_) {
            if (engine.equiv(kept.body, n.body) && engine.equiv(kept.head, n.head)) {
                warnings_.push_back("norm '" + n.id + "' duplicates '" + kept.id +
                                    "' up to equivalence; dropped");
                duplicate = true;
                break;
            }
        }
        if (!duplicate) norms_.push_back(std::move(n));
    }
}

NormativeSystem NormativeSystem::raw(std::vector<Norm> norms) {
    NormativeSystem s;
    s.norms_ = std::move(norms);
    return s;
}

NormativeSystem NormativeSystem::with_extra(const Norm& n) const {
    NormativeSystem s;
    s.norms_ = norms_;
    s.norms_.push_back(n);
    return s;
}

OutOp OutOp::make_and(BaseOp b) {
    if (b != BaseOp::II && b != BaseOp::One && b != BaseOp::Two)
        throw Error("AND iteration is only defined over bases II, 1, 2");
    return {Kind::And, b};
}

OutOp OutOp::make_ct(BaseOp b) {
    if (b != BaseOp::I && b != BaseOp::II && b != BaseOp::One)
        throw Error("CT iteration is only defined over bases I, II, 1");
    return {Kind::Ct, b};
}

OutOp OutOp::make_ct_and() { return {Kind::CtAnd, BaseOp::One}; }

OutOp OutOp::make_or(BaseOp b) {
    if (b != BaseOp::I) throw Error("OR iteration is only defined over base I");
    return {Kind::Or, b};
}

std::string to_string(BaseOp op) {
    switch (op) {
        case BaseOp::R: return "R";
        case BaseOp::L: return "L";
        case BaseOp::Zero: return "0";
        case BaseOp::I: return "I";
        case BaseOp::II: return "II";
        case BaseOp::One: return "1";
        case BaseOp::Two: return "2";
        case BaseOp::Three: return "3";
    }
    return "?";
}

std::string to_string(const OutOp& op) {
    switch (op.kind) {
        case OutOp::Kind::Base: return "out" + to_string(op.base);
        case OutOp::Kind::And: return "and" + to_string(op.base);
        case OutOp::Kind::Ct: return "ct" + to_string(op.base);
        case OutOp::Kind::CtAnd: return "ctand1";
        case OutOp::Kind::Or: return "or" + to_string(op.base);
    }
    return "?";
}

std::optional<OutOp> parse_out_op(const std::string& name) {
    auto base = [](const std::string& s) -> std::optional<BaseOp> {
        if (s == "R") return BaseOp::R;
        if (s == "L") return BaseOp::L;
        if (s == "0") return BaseOp::Zero;
        if (s == "I") return BaseOp::I;
        if (s == "II") return BaseOp::II;
        if (s == "1") return BaseOp::One;
        if (s == "2") return BaseOp::Two;
        if (s == "3") return BaseOp::Three;
        return std::nullopt;
    };
    try {
        if (name.rfind("out", 0) == 0) {
            if (auto b = base(name.substr(3))) return OutOp::make_base(*b);
        } else if (name == "ctand1") {
            return OutOp::make_ct_and();
        } else if (name.rfind("and", 0) == 0) {
            if (auto b = base(name.substr(3))) return OutOp::make_and(*b);
        } else if (name.rfind("ct", 0) == 0) {
            if (auto b = base(name.substr(2))) return OutOp::make_ct(*b);
        } else if (name.rfind("or", 0) == 0) {
            if (auto b = base(name.substr(2))) return OutOp::make_or(*b);
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace iologic
