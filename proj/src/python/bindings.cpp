#include "lkq/cutelim.hpp"
#include "lkq/pmce.hpp"
#include "lkq/prover.hpp"
#include "lkq/semantics.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lkq;

namespace {

std::vector<Dwff> dwffs(const std::vector<std::string>& xs)
{
    std::vector<Dwff> out;
    for (const auto& x : xs) out.push_back(parse_dwff(x));
    return out;
}

ProverOptions options(std::optional<std::size_t> bound, bool use_qr2, bool use_ql2, const std::string& policy)
{
    ProverOptions o;
    o.bound = bound;
    o.use_qr2 = use_qr2;
    o.use_ql2 = use_ql2;
    if (policy == "optional")
        o.policy = BackgroundPolicy::Optional;
    else if (policy != "recorded")
        throw std::invalid_argument("policy must be 'recorded' or 'optional'");
    return o;
}

py::dict verdict(const Verdict& v)
{
    py::dict d;
    d["verdict"] = std::string(verdict_name(v.kind));
    d["goal"] = v.goal.text();
    d["derivation"] = v.derivation ? py::object(py::str(to_json(*v.derivation))) : py::object(py::none());
    d["bound"] = v.bound;
    d["exhaustive"] = v.exhaustive;
    return d;
}

BackgroundPolicy policy_of(const std::string& p)
{
    return options(std::nullopt, true, true, p).policy;
}

}  // namespace

PYBIND11_MODULE(_lkq, m)
{
    m.doc() = "Defeasible erotetic sequent calculus: parsing, semantics, proof search, cut elimination";

    py::register_exception<ParaproofInput>(m, "ParaproofInput", PyExc_ValueError);
    py::register_exception<InvalidDerivation>(m, "InvalidDerivation", PyExc_ValueError);
    py::register_exception<PmceViolation>(m, "PmceViolation", PyExc_ValueError);

    m.def("parse", [](const std::string& s) { return render_formula(parse_formula(s)); },
          "Canonical rendering of a formula.");
    m.def("parse_sequent", [](const std::string& s) { return parse_sequent(s).text(); });

    m.def("entails", [](const std::vector<std::string>& X, const std::vector<std::string>& Y) {
        return mc_entails(dwffs(X), dwffs(Y));
    });
    m.def("evokes", [](const std::vector<std::string>& X, const std::string& q) {
        return evokes(dwffs(X), parse_question(q));
    });
    m.def("implies_regular", [](const std::string& q, const std::vector<std::string>& X, const std::string& q1) {
        return implies_regular(parse_question(q), dwffs(X), parse_question(q1));
    });
    m.def("implies_erotetic", [](const std::string& q, const std::vector<std::string>& X, const std::string& q1) {
        return implies_erotetic(parse_question(q), dwffs(X), parse_question(q1));
    });

    m.def("is_defeated", [](const std::string& s) { return is_defeated(parse_sequent(s)); });
    m.def("is_defeated_by_search", [](const std::string& s) { return is_defeated_by_search(parse_sequent(s)); });

    m.def(
        "prove",
        [](const std::string& s, std::optional<std::size_t> bound, bool use_qr2, bool use_ql2,
           const std::string& policy) {
            return verdict(prove(parse_sequent(s), options(bound, use_qr2, use_ql2, policy)));
        },
        py::arg("sequent"), py::arg("bound") = py::none(), py::arg("use_qr2") = true,
        py::arg("use_ql2") = true, py::arg("policy") = "recorded");
    m.def(
        "prove_evocation",
        [](const std::vector<std::string>& X, const std::string& q, const std::string& policy) {
            return verdict(prove_evocation(dwffs(X), parse_question(q), options(std::nullopt, true, true, policy)));
        },
        py::arg("premises"), py::arg("question"), py::arg("policy") = "recorded");
    m.def(
        "prove_regular_implication",
        [](const std::string& q, const std::vector<std::string>& X, const std::string& q1, bool use_qr2) {
            return verdict(prove_regular_implication(parse_question(q), dwffs(X), parse_question(q1),
                                                     options(std::nullopt, use_qr2, true, "recorded")));
        },
        py::arg("q"), py::arg("x"), py::arg("q1"), py::arg("use_qr2") = true);

    m.def(
        "validate",
        [](const std::string& json, const std::string& policy) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& v : validate_derivation(from_json(json), policy_of(policy)))
                out.emplace_back(path_text(v.path), v.message);
            return out;
        },
        py::arg("derivation"), py::arg("policy") = "recorded");
    m.def(
        "classify",
        [](const std::string& json, const std::string& policy) {
            auto c = classify(from_json(json), policy_of(policy));
            std::vector<std::string> paths;
            for (const auto& p : c.defeated) paths.push_back(path_text(p));
            py::dict d;
            d["proof"] = c.proof;
            d["defeated"] = paths;
            return d;
        },
        py::arg("derivation"), py::arg("policy") = "recorded");
    m.def("render_tree", [](const std::string& json) { return render_tree(from_json(json)); });
    m.def("eliminate_cut", [](const std::string& json) { return to_json(eliminate_cut(from_json(json))); });
    m.def("is_analytic", [](const std::string& json) { return is_analytic(from_json(json)); });

    m.def("is_pmce_axiom", [](const std::string& s) { return is_pmce_axiom(parse_esequent(s)); });
    m.def("lk_correlate", [](const std::string& s) { return lk_correlate(parse_esequent(s)).text(); });
    m.def(
        "apply_pmce_rule",
        [](const std::string& rule, const std::vector<std::string>& premises, std::optional<std::string> formula,
           std::optional<std::string> question) {
            auto r = pmce_rule_from_name(rule);
            if (!r) throw std::invalid_argument("unknown rule " + rule);
            std::vector<ESequent> ps;
            for (const auto& p : premises) ps.push_back(parse_esequent(p));
            PmceWitness w;
            if (formula) w.formula = parse_dwff(*formula);
            if (question) w.question = parse_question(*question);
            return apply_pmce_rule(*r, ps, w).text();
        },
        py::arg("rule"), py::arg("premises"), py::arg("formula") = py::none(), py::arg("question") = py::none());
}
