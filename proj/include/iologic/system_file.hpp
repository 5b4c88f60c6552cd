#pragma once

#include <memory>

#include "json.hpp"

#include "iologic/deontic.hpp"
#include "iologic/norms.hpp"

namespace iologic {

class SchemaError : public Error {
public:
    using Error::Error;
};

/// A loaded system file: either a classical system (variables + formula
/// norms, optionally constraints / premises / a preference model) or a
/// finitely presented logic (named elements + declared order).
struct LoadedSystem {
    std::shared_ptr<ClassicalEngine> classical;
    std::shared_ptr<FiniteLogicEngine> finite;
    NormativeSystem norms;
    std::vector<Term> constraints;
    std::vector<Term> premises;
    std::optional<PreferenceModel> preference;
    std::vector<std::string> warnings;

    bool is_classical() const { return classical != nullptr; }
    const ConsequenceEngine& engine() const;
    /// Parses a formula (classical) or resolves an element name (finite).
    ConsequenceEngine::Element element(const std::string& text) const;
};

LoadedSystem load_system_json(const nlohmann::json& doc);
LoadedSystem load_system_file(const std::string& path);

}  // namespace iologic
