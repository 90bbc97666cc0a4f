#include "lkq/calculus.hpp"

#include <json.hpp>

namespace lkq {

using nlohmann::ordered_json;

static ordered_json encode(const Derivation& d)
{
    ordered_json j;
    j["rule"] = std::string(rule_name(d.rule));
    j["conclusion"] = d.conclusion.text();
    ordered_json a = ordered_json::object();
    const Annotation& an = d.annotation;
    if (an.formula) a["formula"] = an.formula->text();
    if (!an.answers.empty()) {
        a["answers"] = ordered_json::array();
        for (const auto& x : an.answers) a["answers"].push_back(x.text());
    }
    if (an.implying) a["implying"] = an.implying->text();
    if (!an.targets.empty()) a["targets"] = an.targets;
    if (!an.added.empty()) a["added"] = an.added.text();
    j["annotation"] = std::move(a);
    j["premises"] = ordered_json::array();
    for (const auto& p : d.premises) j["premises"].push_back(encode(p));
    return j;
}

std::string to_json(const Derivation& d) { return encode(d).dump(2); }

static Derivation decode(const ordered_json& j)
{
    if (!j.is_object()) throw std::invalid_argument("derivation node must be a JSON object");
    Derivation d;
    auto rule = rule_from_name(j.at("rule").get<std::string>());
    if (!rule) throw std::invalid_argument("unknown rule " + j.at("rule").dump());
    d.rule = *rule;
    d.conclusion = parse_sequent(j.at("conclusion").get<std::string>());
    if (j.contains("annotation")) {
        const auto& a = j.at("annotation");
        Annotation& an = d.annotation;
        if (a.contains("formula")) an.formula = parse_formula(a.at("formula").get<std::string>());
        if (a.contains("answers"))
            for (const auto& x : a.at("answers")) an.answers.push_back(parse_dwff(x.get<std::string>()));
        if (a.contains("implying")) an.implying = parse_question(a.at("implying").get<std::string>());
        if (a.contains("targets")) an.targets = a.at("targets").get<std::vector<std::size_t>>();
        if (a.contains("added")) an.added = parse_defeaters(a.at("added").get<std::string>());
    }
    if (j.contains("premises"))
        for (const auto& p : j.at("premises")) d.premises.push_back(decode(p));
    return d;
}

Derivation from_json(std::string_view text)
{
    try {
        return decode(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed derivation JSON: ") + e.what());
    }
}

}  // namespace lkq
