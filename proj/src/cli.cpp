#include "lkq/cli.hpp"

#include "lkq/cutelim.hpp"
#include "lkq/pmce.hpp"
#include "lkq/semantics.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

namespace lkq::cli {

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kDisagree = 3 };

struct Options {
    std::string input;
    std::optional<std::size_t> bound;
    bool no_qr2 = false;
    bool no_ql2 = false;
    std::string emit = "text";
    std::string oracle = "semantic";
    std::string policy = "recorded";
    std::string premises, question;
    std::string mode, q, x, q1;
    std::string rule;
    std::vector<std::string> rule_premises;
    std::string formula;
    bool verify_minimal = false;
};

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    Options o;

    int parse();
    int prove();
    int defeat();
    int evoke();
    int imply();
    int cutelim();
    int check();
    int pmce_axiom();
    int pmce_rule();
    int pmce_correlate();

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;

    std::string input()
    {
        if (!o.input.empty() && o.input != "-") return o.input;
        return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }

    ProverOptions prover_options() const
    {
        ProverOptions p;
        p.bound = o.bound;
        p.use_qr2 = !o.no_qr2;
        p.use_ql2 = !o.no_ql2;
        p.policy = o.policy == "optional" ? BackgroundPolicy::Optional : BackgroundPolicy::Recorded;
        return p;
    }

    void print_verdict(const Verdict& v)
    {
        out_ << "prover: " << verdict_name(v.kind);
        if (v.kind == Verdict::Kind::NotDerivable)
            out_ << " (bound " << v.bound << (v.exhaustive ? ", exhaustive" : "") << ")";
        out_ << "\n";
        if (v.derivation) out_ << render_tree(*v.derivation);
    }

    int agree(bool oracle, const Verdict& v)
    {
        bool proved = v.kind == Verdict::Kind::Proof;
        if (oracle != proved) {
            err_ << "oracle and prover disagree\n";
            return kDisagree;
        }
        return oracle ? kYes : kNo;
    }
};

std::string trim(std::string s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

std::vector<Dwff> dwff_list(const std::string& text)
{
    std::vector<Dwff> out;
    for (const auto& f : parse_list(text)) {
        if (f.is_question()) throw std::invalid_argument("expected declarative formulas, got " + f.text());
        out.push_back(f.dwff());
    }
    return out;
}

int Runner::parse()
{
    std::string text = trim(input());
    if (text.find("|-") == std::string::npos)
        out_ << render_formula(parse_formula(text)) << "\n";
    else if (text.find('<') == std::string::npos)
        out_ << parse_esequent(text).text() << "\n";
    else
        out_ << parse_sequent(text).text() << "\n";
    return kYes;
}

int Runner::prove()
{
    Verdict v = lkq::prove(parse_sequent(trim(input())), prover_options());
    if (o.emit != "text") {
        if (v.derivation) out_ << to_json(*v.derivation) << "\n";
        else err_ << verdict_name(v.kind) << "\n";
    } else {
        print_verdict(v);
    }
    return v.kind == Verdict::Kind::Proof ? kYes : kNo;
}

int Runner::defeat()
{
    Sequent s = parse_sequent(trim(input()));
    std::optional<bool> semantic, searched;
    if (o.oracle != "search") semantic = is_defeated(s);
    if (o.oracle != "semantic") searched = is_defeated_by_search(s, prover_options());
    if (semantic && searched && *semantic != *searched) {
        out_ << "semantic: " << (*semantic ? "defeated" : "undefeated") << "\n"
             << "search: " << (*searched ? "defeated" : "undefeated") << "\n";
        err_ << "defeat checks disagree\n";
        return kDisagree;
    }
    bool d = semantic ? *semantic : *searched;
    out_ << (d ? "defeated" : "undefeated") << "\n";
    return d ? kYes : kNo;
}

int Runner::evoke()
{
    auto x = dwff_list(o.premises);
    EFormula q = parse_question(o.question);
    bool oracle = evokes(x, q);
    out_ << "oracle: " << (oracle ? "evokes" : "does not evoke") << "\n";
    Verdict v = prove_evocation(x, q, prover_options());
    out_ << "goal: " << v.goal.text() << "\n";
    print_verdict(v);
    return agree(oracle, v);
}

int Runner::imply()
{
    EFormula q = parse_question(o.q), q1 = parse_question(o.q1);
    auto x = o.mode == "pure" ? std::vector<Dwff>{} : dwff_list(o.x);
    if (o.mode == "general") {
        bool r = implies_erotetic(q, x, q1);
        out_ << "oracle: " << (r ? "implies" : "does not imply") << "\n";
        return r ? kYes : kNo;
    }
    bool oracle = o.mode == "pure" ? implies_regular_pure(q, q1) : implies_regular(q, x, q1);
    out_ << "oracle: " << (oracle ? "implies" : "does not imply") << "\n";
    Verdict v = prove_regular_implication(q, x, q1, prover_options());
    out_ << "goal: " << v.goal.text() << "\n";
    print_verdict(v);
    return agree(oracle, v);
}

int Runner::cutelim()
{
    Derivation d = from_json(input());
    try {
        Derivation r = eliminate_cut(d, prover_options().policy);
        out_ << (o.emit == "text" ? render_tree(r) : to_json(r) + "\n");
        return kYes;
    } catch (const ParaproofInput& e) {
        err_ << "paraproof: " << e.what() << "\n";
        return kNo;
    }
}

int Runner::check()
{
    Derivation d = from_json(input());
    auto v = validate_derivation(d, prover_options().policy);
    if (!v.empty()) {
        out_ << "invalid\n";
        for (const auto& x : v) out_ << "  at " << path_text(x.path) << ": " << x.message << "\n";
        return kNo;
    }
    auto bad = defeated_nodes(d);
    if (!bad.empty()) {
        out_ << "paraproof; defeated at";
        for (const auto& p : bad) out_ << " " << path_text(p);
        out_ << "\n";
        return kNo;
    }
    out_ << "proof\n";
    return kYes;
}

int Runner::pmce_axiom()
{
    bool r = is_pmce_axiom(parse_esequent(trim(input())));
    out_ << (r ? "axiom" : "not an axiom") << "\n";
    return r ? kYes : kNo;
}

int Runner::pmce_rule()
{
    auto rule = pmce_rule_from_name(o.rule);
    if (!rule) throw CLI::ValidationError("rule", "expected one of R1, R2, R3, R4");
    std::vector<ESequent> ps;
    for (const auto& p : o.rule_premises) ps.push_back(parse_esequent(p));
    PmceWitness w;
    if (!o.formula.empty()) w.formula = parse_dwff(o.formula);
    if (!o.question.empty()) w.question = parse_question(o.question);
    try {
        out_ << apply_pmce_rule(*rule, ps, w).text() << "\n";
        return kYes;
    } catch (const PmceViolation& e) {
        out_ << "violation: " << e.what() << "\n";
        return kNo;
    }
}

int Runner::pmce_correlate()
{
    ESequent s = parse_esequent(trim(input()));
    out_ << "canonical: " << lk_correlate(s).text() << "\n";
    Correlate c = find_correlate(s, prover_options());
    out_ << "reached: " << c.sequent.text() << "\n";
    if (!c.proof) {
        out_ << "no provable correlate found\n";
        return kNo;
    }
    out_ << render_tree(*c.proof);
    if (o.verify_minimal) out_ << (is_minimal_correlate(c.sequent, prover_options()) ? "minimal\n" : "not minimal\n");
    return kYes;
}

void search_flags(CLI::App* app, Options& o)
{
    app->add_option("--bound", o.bound, "search depth bound");
    app->add_flag("--no-qr2", o.no_qr2, "disable the QR2 rule in search");
    app->add_flag("--no-ql2", o.no_ql2, "disable the QL2 rule in search");
    app->add_option("--policy", o.policy, "background bookkeeping")
        ->check(CLI::IsMember({"recorded", "optional"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Runner r(in, out, err);
    Options& o = r.o;
    CLI::App app{"Defeasible erotetic sequent calculus toolkit", "lkq"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* parse = app.add_subcommand("parse", "parse and print a formula, sequent or e-sequent");
    parse->add_option("input", o.input, "text, or - for stdin");
    parse->callback([&] { action = [&] { return r.parse(); }; });

    auto* prove = app.add_subcommand("prove", "search for a proof of a sequent");
    prove->add_option("input", o.input, "sequent, or - for stdin");
    prove->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "tree-format", "json"}));
    search_flags(prove, o);
    prove->callback([&] { action = [&] { return r.prove(); }; });

    auto* defeat = app.add_subcommand("defeat", "decide whether a sequent is defeated (exit 0 if so)");
    defeat->add_option("input", o.input, "sequent, or - for stdin");
    defeat->add_option("--oracle", o.oracle, "defeat check")->check(CLI::IsMember({"semantic", "search", "both"}));
    search_flags(defeat, o);
    defeat->callback([&] { action = [&] { return r.defeat(); }; });

    auto* evoke = app.add_subcommand("evoke", "does a set of d-wffs evoke a question");
    evoke->add_option("--premises", o.premises, "comma-separated d-wffs")->required();
    evoke->add_option("--question", o.question, "the question")->required();
    search_flags(evoke, o);
    evoke->callback([&] { action = [&] { return r.evoke(); }; });

    auto* imply = app.add_subcommand("imply", "erotetic implication of q1 by q on the basis of x");
    imply->add_option("mode", o.mode, "general, regular or pure")
        ->required()
        ->check(CLI::IsMember({"general", "regular", "pure"}));
    imply->add_option("--q", o.q, "implying question")->required();
    imply->add_option("--x", o.x, "comma-separated auxiliary d-wffs");
    imply->add_option("--q1", o.q1, "implied question")->required();
    search_flags(imply, o);
    imply->callback([&] { action = [&] { return r.imply(); }; });

    auto* cut = app.add_subcommand("cutelim", "eliminate cuts from a derivation in JSON");
    cut->add_option("input", o.input, "file, or - for stdin");
    cut->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "tree-format", "json"}));
    cut->add_option("--policy", o.policy)->check(CLI::IsMember({"recorded", "optional"}));
    cut->callback([&] { action = [&] { return r.cutelim(); }; });

    auto* check = app.add_subcommand("check", "validate and classify a derivation in JSON");
    check->add_option("input", o.input, "file, or - for stdin");
    check->add_option("--policy", o.policy)->check(CLI::IsMember({"recorded", "optional"}));
    check->callback([&] { action = [&] { return r.check(); }; });

    auto* pmce = app.add_subcommand("pmce", "PMC_E axioms, rules and correlates");
    pmce->require_subcommand(1);
    auto* axiom = pmce->add_subcommand("axiom", "is an e-sequent a PMC_E axiom");
    axiom->add_option("input", o.input, "e-sequent, or - for stdin");
    axiom->callback([&] { action = [&] { return r.pmce_axiom(); }; });
    auto* rule = pmce->add_subcommand("rule", "apply R1-R4");
    rule->add_option("rule", o.rule, "R1, R2, R3 or R4")->required();
    rule->add_option("--premise", o.rule_premises, "premise e-sequent (repeatable)")->required();
    rule->add_option("--formula", o.formula, "R2 replacement formula");
    rule->add_option("--question", o.question, "R4 target question");
    rule->callback([&] { action = [&] { return r.pmce_rule(); }; });
    auto* corr = pmce->add_subcommand("correlate", "LK? correlate of an e-sequent");
    corr->add_option("input", o.input, "e-sequent, or - for stdin");
    corr->add_flag("--verify-minimal", o.verify_minimal, "check minimality by enumeration");
    search_flags(corr, o);
    corr->callback([&] { action = [&] { return r.pmce_correlate(); }; });

    std::vector<const char*> argv{"lkq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "parse error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidDerivation& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace lkq::cli
