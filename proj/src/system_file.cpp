#include "iologic/system_file.hpp"

#include <fstream>

namespace iologic {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw SchemaError(std::string(what) + " must contain only strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

Valuation single_valuation(const Term& t, const VariableUniverse& u, const std::string& text) {
    SemanticForm f = semantic_form(t, u);
    if (f.count() != 1)
        throw SchemaError("preference formula \"" + text +
                          "\" must denote exactly one valuation");
    return f.valuations().front();
}

PreferenceModel load_preference(const json& j, const VariableUniverse& u) {
    PreferenceModel model;
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "premise") {
        model.kind = PreferenceModel::Kind::Premise;
        for (const auto& s : string_list(require(j, "premises"), "preference premises"))
            model.premises.push_back(parse_term(s, u));
        return model;
    }
    if (kind != "explicit") throw SchemaError("preference kind must be \"explicit\" or \"premise\"");
    model.kind = PreferenceModel::Kind::Explicit;
    if (j.contains("tiers")) {
        // tiers[0] is best; v >= w iff tier(v) <= tier(w)
        std::vector<std::vector<Valuation>> tiers;
        for (const auto& tier : require(j, "tiers")) {
            std::vector<Valuation> vs;
            for (const auto& s : string_list(tier, "tier"))
                vs.push_back(single_valuation(parse_term(s, u), u, s));
            tiers.push_back(std::move(vs));
        }
        for (std::size_t i = 0; i < tiers.size(); ++i)
            for (std::size_t k = i; k < tiers.size(); ++k)
                for (const auto& better : tiers[i])
                    for (const auto& worse : tiers[k]) model.pairs.emplace_back(better, worse);
        return model;
    }
    for (const auto& pair : require(j, "pairs")) {
        if (!pair.is_array() || pair.size() != 2)
            throw SchemaError("preference pairs must be two-element arrays");
        std::string a = pair[0].get<std::string>(), b = pair[1].get<std::string>();
        model.pairs.emplace_back(single_valuation(parse_term(a, u), u, a),
                                 single_valuation(parse_term(b, u), u, b));
    }
    return model;
}

}  // namespace

const ConsequenceEngine& LoadedSystem::engine() const {
    if (classical) return *classical;
    if (finite) return *finite;
    throw Error("system has no engine");
}

ConsequenceEngine::Element LoadedSystem::element(const std::string& text) const {
    if (classical) return classical->parse(text);
    return finite->element(text);
}

LoadedSystem load_system_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("system file must be a JSON object");
    LoadedSystem sys;
    if (doc.contains("schema")) {
        if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1)
            throw SchemaError("unsupported schema version");
    } else {
        sys.warnings.push_back("no \"schema\" field; assuming version 1");
    }

    if (doc.contains("finite_logic")) {
        const json& fl = doc["finite_logic"];
        FinitePresentedLogic spec;
        spec.elements = string_list(require(fl, "elements"), "elements");
        if (fl.contains("leq"))
            for (const auto& pair : fl["leq"]) {
                if (!pair.is_array() || pair.size() != 2)
                    throw SchemaError("leq entries must be two-element arrays");
                spec.declared_leq.emplace_back(pair[0].get<std::string>(),
                                               pair[1].get<std::string>());
            }
        auto table = [&](const char* key) {
            std::vector<std::array<std::string, 3>> out;
            if (!fl.contains(key)) return out;
            for (const auto& row : fl[key]) {
                if (!row.is_array() || row.size() != 3)
                    throw SchemaError(std::string(key) + " entries must be three-element arrays");
                out.push_back({row[0].get<std::string>(), row[1].get<std::string>(),
                               row[2].get<std::string>()});
            }
            return out;
        };
        spec.join_table = table("join");
        spec.meet_table = table("meet");
        sys.finite = std::make_shared<FiniteLogicEngine>(spec);
        for (const auto& w : sys.finite->warnings()) sys.warnings.push_back(w);
    } else {
        auto vars = string_list(require(doc, "variables"), "variables");
        sys.classical = std::make_shared<ClassicalEngine>(VariableUniverse(std::move(vars)));
    }

    std::vector<Norm> norms;
    for (const auto& n : require(doc, "norms")) {
        Norm norm;
        norm.id = require(n, "id").get<std::string>();
        norm.body = sys.element(require(n, "body").get<std::string>());
        norm.head = sys.element(require(n, "head").get<std::string>());
        norms.push_back(std::move(norm));
    }
    sys.norms = NormativeSystem(std::move(norms), sys.engine());
    for (const auto& w : sys.norms.warnings()) sys.warnings.push_back(w);

    if (doc.contains("constraints") || doc.contains("premises") || doc.contains("preference")) {
        if (!sys.classical)
            throw SchemaError("constraints, premises and preferences need a classical system");
        const auto& u = sys.classical->universe();
        if (doc.contains("constraints"))
            for (const auto& s : string_list(doc["constraints"], "constraints"))
                sys.constraints.push_back(parse_term(s, u));
        if (doc.contains("premises"))
            for (const auto& s : string_list(doc["premises"], "premises"))
                sys.premises.push_back(parse_term(s, u));
        if (doc.contains("preference"))
            sys.preference = load_preference(doc["preference"], u);
    }
    return sys;
}

LoadedSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open system file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return load_system_json(doc);
}

}  // namespace iologic
