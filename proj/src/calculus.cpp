#include "lkq/calculus.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <variant>

namespace lkq {

namespace {

constexpr std::array<std::string_view, 18> kRuleNames = {
    "Axiom", "Cut",  "LW",   "RW",   "DE",   "BE",   "ConjL", "ConjR", "DisjL",
    "DisjR", "ImplL", "ImplR", "NegL", "NegR", "QR1", "QL1",   "QR2",   "QL2",
};

struct Shape {
    std::size_t arity = 0;
    std::vector<FormulaSet> ant_active, succ_active;
    FormulaSet ant_principal, succ_principal;
    FormulaSet bg_added;
    DefeaterSet s_added;

    void resize(std::size_t n)
    {
        arity = n;
        ant_active.assign(n, {});
        succ_active.assign(n, {});
    }
};

std::string list_text(const FormulaSet& fs)
{
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty()) out += ", ";
        out += f.text();
    }
    return out;
}

FormulaSet minus(const FormulaSet& a, const FormulaSet& b)
{
    FormulaSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

FormulaSet answer_set(const std::vector<Dwff>& as) { return {as.begin(), as.end()}; }

// Shape of a rule instance, or a description of why the annotation is unusable.
std::variant<Shape, std::string> shape_of(Rule rule, const Annotation& ann)
{
    Shape sh;
    const std::optional<Formula>& f = ann.formula;
    auto need_formula = [&](const char* what) -> std::optional<std::string> {
        if (!f) return std::string(rule_name(rule)) + ": annotation lacks the " + what;
        return std::nullopt;
    };
    auto need_dwff = [&](Connective op, const char* what) -> std::optional<std::string> {
        if (!f) return std::string(rule_name(rule)) + ": annotation lacks the principal formula";
        if (f->is_question() || f->dwff().op() != op)
            return std::string(rule_name(rule)) + ": principal formula " + f->text() + " is not " +
                   what;
        return std::nullopt;
    };

    switch (rule) {
    case Rule::Axiom: sh.resize(0); return sh;
    case Rule::Cut:
        if (auto e = need_formula("cut formula")) return *e;
        sh.resize(2);
        sh.succ_active[0] = {*f};
        sh.ant_active[1] = {*f};
        return sh;
    case Rule::LW:
    case Rule::RW:
    case Rule::BE:
        if (auto e = need_formula("weakening formula")) return *e;
        sh.resize(1);
        if (rule == Rule::LW) sh.ant_principal = {*f};
        if (rule == Rule::RW) sh.succ_principal = {*f};
        if (rule == Rule::BE) sh.bg_added = {*f};
        return sh;
    case Rule::DE:
        sh.resize(1);
        sh.s_added = ann.added;
        return sh;
    case Rule::ConjL:
    case Rule::ConjR:
        if (auto e = need_dwff(Connective::Conj, "a conjunction")) return *e;
        if (rule == Rule::ConjL) {
            sh.resize(1);
            sh.ant_active[0] = {f->dwff().lhs(), f->dwff().rhs()};
            sh.ant_principal = {*f};
        } else {
            sh.resize(2);
            sh.succ_active[0] = {f->dwff().lhs()};
            sh.succ_active[1] = {f->dwff().rhs()};
            sh.succ_principal = {*f};
        }
        return sh;
    case Rule::DisjL:
    case Rule::DisjR:
        if (auto e = need_dwff(Connective::Disj, "a disjunction")) return *e;
        if (rule == Rule::DisjL) {
            sh.resize(2);
            sh.ant_active[0] = {f->dwff().lhs()};
            sh.ant_active[1] = {f->dwff().rhs()};
            sh.ant_principal = {*f};
            sh.bg_added = {f->dwff().lhs(), f->dwff().rhs()};
        } else {
            sh.resize(1);
            sh.succ_active[0] = {f->dwff().lhs(), f->dwff().rhs()};
            sh.succ_principal = {*f};
        }
        return sh;
    case Rule::ImplL:
    case Rule::ImplR:
        if (auto e = need_dwff(Connective::Impl, "an implication")) return *e;
        if (rule == Rule::ImplL) {
            sh.resize(2);
            sh.succ_active[0] = {f->dwff().lhs()};
            sh.ant_active[1] = {f->dwff().rhs()};
            sh.ant_principal = {*f};
            sh.bg_added = {Dwff::neg(f->dwff().lhs()), f->dwff().rhs()};
        } else {
            sh.resize(1);
            sh.ant_active[0] = {f->dwff().lhs()};
            sh.succ_active[0] = {f->dwff().rhs()};
            sh.succ_principal = {*f};
            sh.bg_added = {f->dwff().lhs()};
        }
        return sh;
    case Rule::NegL:
    case Rule::NegR:
        if (auto e = need_dwff(Connective::Neg, "a negation")) return *e;
        sh.resize(1);
        if (rule == Rule::NegL) {
            sh.succ_active[0] = {f->dwff().lhs()};
            sh.ant_principal = {*f};
        } else {
            sh.ant_active[0] = {f->dwff().lhs()};
            sh.succ_principal = {*f};
            sh.bg_added = {f->dwff().lhs()};
        }
        return sh;
    case Rule::QR1: {
        std::vector<Dwff> as = ann.answers;
        if (as.empty() && f && f->is_question()) as = f->question().answers();
        if (as.size() < 2) return std::string("QR1: proviso requires n > 1 constituents");
        if (answer_set(as).size() != as.size())
            return std::string("QR1: proviso requires non-equiform constituents");
        EFormula q(as);
        if (f && !(f->is_question() && f->question() == q))
            return "QR1: principal formula " + f->text() + " does not match constituents " +
                   q.text();
        sh.resize(1);
        sh.succ_active[0] = answer_set(as);
        sh.succ_principal = {q};
        sh.s_added = answer_singletons(q);
        return sh;
    }
    case Rule::QL1: {
        if (!f || !f->is_question()) return std::string("QL1: annotation lacks the principal question");
        const auto& as = f->question().answers();
        sh.resize(as.size());
        for (std::size_t i = 0; i < as.size(); ++i) sh.ant_active[i] = {as[i]};
        sh.ant_principal = {*f};
        sh.bg_added = answer_set(as);
        return sh;
    }
    case Rule::QR2:
    case Rule::QL2: {
        const char* nm = rule == Rule::QR2 ? "QR2" : "QL2";
        if (!f || !f->is_question()) return std::string(nm) + ": annotation lacks the principal question";
        if (!ann.implying) return std::string(nm) + ": annotation lacks the implying question";
        const auto& B = f->question().answers();
        const auto& A = ann.implying->answers();
        if (ann.targets.size() != B.size())
            return std::string(nm) + ": need one answer target per constituent of " + f->text();
        for (auto t : ann.targets)
            if (t >= A.size()) return std::string(nm) + ": answer target out of range";
        const std::size_t n = A.size(), m = B.size();
        if (rule == Rule::QR2) {
            sh.resize(m + 1);
            sh.succ_active[0] = answer_set(B);
            for (std::size_t j = 0; j < m; ++j) {
                sh.ant_active[j + 1] = {B[j]};
                sh.succ_active[j + 1] = {A[ann.targets[j]]};
            }
            sh.bg_added = answer_set(B);
        } else {
            sh.resize(n + m);
            for (std::size_t i = 0; i < n; ++i) {
                sh.ant_active[i] = {A[i]};
                sh.succ_active[i] = {*f};
            }
            for (std::size_t j = 0; j < m; ++j) {
                sh.ant_active[n + j] = {B[j]};
                sh.succ_active[n + j] = {A[ann.targets[j]]};
            }
            sh.bg_added = united(answer_set(A), answer_set(B));
        }
        sh.ant_principal = {*ann.implying};
        sh.succ_principal = {*f};
        return sh;
    }
    }
    return std::string("unknown rule");
}

std::optional<std::string> check_side(const char* side, const std::vector<const FormulaSet*>& prem,
                                      const std::vector<FormulaSet>& active,
                                      const FormulaSet& principal, const FormulaSet& concl)
{
    FormulaSet base = principal, actives;
    for (std::size_t i = 0; i < prem.size(); ++i) {
        for (const auto& a : active[i])
            if (!prem[i]->count(a))
                return "premise " + std::to_string(i + 1) + " " + side + " lacks active formula " +
                       a.text();
        FormulaSet rest = minus(*prem[i], active[i]);
        base.insert(rest.begin(), rest.end());
        actives.insert(active[i].begin(), active[i].end());
    }
    FormulaSet missing = minus(base, concl);
    if (!missing.empty()) return std::string("conclusion ") + side + " lacks " + list_text(missing);
    FormulaSet extra = minus(minus(concl, base), actives);
    if (!extra.empty())
        return std::string("conclusion ") + side + " has unaccounted formulas " + list_text(extra);
    return std::nullopt;
}

std::optional<std::string> rule_specific(Rule rule, const std::vector<Sequent>& ps,
                                         const Annotation& ann)
{
    switch (rule) {
    case Rule::QR1:
        if (!all_declarative(ps[0].antecedent))
            return std::string("QR1: premise antecedent must be all-declarative");
        break;
    case Rule::QL1:
        for (const auto& p : ps) {
            if (!all_declarative(p.succedent))
                return std::string("QL1: premise succedents must be all-declarative");
            if (p.succedent != ps[0].succedent)
                return std::string("QL1: premises must share one succedent");
        }
        break;
    case Rule::QR2:
        if (!ps[0].antecedent.count(*ann.implying))
            return "QR2: first premise antecedent lacks " + ann.implying->text();
        break;
    default: break;
    }
    return std::nullopt;
}

}  // namespace

std::string_view rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(std::string_view name)
{
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (kRuleNames[i] == name) return static_cast<Rule>(i);
    return std::nullopt;
}

std::string path_text(const Path& p)
{
    std::string out = "root";
    for (auto i : p) out += "." + std::to_string(i);
    return out;
}

std::optional<std::string> validate_step(Rule rule, const std::vector<Sequent>& premises,
                                         const Sequent& c, const Annotation& ann,
                                         BackgroundPolicy policy)
{
    if (rule == Rule::Axiom) {
        if (!premises.empty()) return std::string("Axiom: takes no premises");
        if (!c.background.empty() || !c.defeaters.empty())
            return std::string("Axiom: background and defeater sets must be empty");
        if (c.antecedent.size() != 1 || c.antecedent != c.succedent)
            return std::string("Axiom: must have the form p |- p");
        const Formula& p = *c.antecedent.begin();
        if (p.is_question() || !p.dwff().is_atom())
            return "Axiom: " + p.text() + " is not atomic";
        return std::nullopt;
    }

    auto shaped = shape_of(rule, ann);
    if (auto* err = std::get_if<std::string>(&shaped)) return *err;
    const Shape& sh = std::get<Shape>(shaped);
    const std::string nm(rule_name(rule));
    if (premises.size() != sh.arity)
        return nm + ": expected " + std::to_string(sh.arity) + " premises, got " +
               std::to_string(premises.size());
    if (auto e = rule_specific(rule, premises, ann)) return e;

    std::vector<const FormulaSet*> ants, succs;
    FormulaSet bg;
    DefeaterSet S;
    for (const auto& p : premises) {
        ants.push_back(&p.antecedent);
        succs.push_back(&p.succedent);
        bg.insert(p.background.begin(), p.background.end());
        S.insert(p.defeaters);
    }
    if (auto e = check_side("antecedent", ants, sh.ant_active, sh.ant_principal, c.antecedent))
        return nm + ": " + *e;
    if (auto e = check_side("succedent", succs, sh.succ_active, sh.succ_principal, c.succedent))
        return nm + ": " + *e;

    FormulaSet full = united(bg, sh.bg_added);
    if (policy == BackgroundPolicy::Recorded) {
        FormulaSet missing = minus(full, c.background);
        if (!missing.empty()) return nm + ": conclusion background lacks " + list_text(missing);
    } else {
        FormulaSet missing = minus(bg, c.background);
        if (!missing.empty()) return nm + ": conclusion background lacks " + list_text(missing);
    }
    FormulaSet extra = minus(c.background, full);
    if (!extra.empty()) return nm + ": conclusion background has unaccounted formulas " + list_text(extra);

    S.insert(sh.s_added);
    if (!(S == c.defeaters))
        return nm + ": conclusion defeater set should be " + S.text() + ", not " + c.defeaters.text();
    return std::nullopt;
}

static void validate_rec(const Derivation& d, Path& path, BackgroundPolicy policy,
                         std::vector<Violation>& out)
{
    std::vector<Sequent> ps;
    for (const auto& p : d.premises) ps.push_back(p.conclusion);
    if (auto e = validate_step(d.rule, ps, d.conclusion, d.annotation, policy))
        out.push_back({path, *e});
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
        path.push_back(i);
        validate_rec(d.premises[i], path, policy, out);
        path.pop_back();
    }
}

std::vector<Violation> validate_derivation(const Derivation& d, BackgroundPolicy policy)
{
    std::vector<Violation> out;
    Path path;
    validate_rec(d, path, policy, out);
    return out;
}

static std::string violations_text(const std::vector<Violation>& v)
{
    std::string out = "invalid derivation";
    for (const auto& x : v) out += "\n  at " + path_text(x.path) + ": " + x.message;
    return out;
}

InvalidDerivation::InvalidDerivation(std::vector<Violation> v)
    : std::invalid_argument(violations_text(v)), violations_(std::move(v))
{
}

static void defeated_rec(const Derivation& d, Path& path, std::map<std::string, bool>& memo,
                         std::vector<Path>& out)
{
    std::string key = d.conclusion.text();
    auto it = memo.find(key);
    bool bad = it != memo.end() ? it->second : (memo[key] = is_defeated(d.conclusion));
    if (bad) out.push_back(path);
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
        path.push_back(i);
        defeated_rec(d.premises[i], path, memo, out);
        path.pop_back();
    }
}

std::vector<Path> defeated_nodes(const Derivation& d)
{
    std::vector<Path> out;
    std::map<std::string, bool> memo;
    Path path;
    defeated_rec(d, path, memo, out);
    return out;
}

Classification classify(const Derivation& d, BackgroundPolicy policy)
{
    auto v = validate_derivation(d, policy);
    if (!v.empty()) throw InvalidDerivation(std::move(v));
    Classification c;
    c.defeated = defeated_nodes(d);
    c.proof = c.defeated.empty();
    return c;
}

Sequent conclude(Rule rule, const std::vector<Sequent>& premises, const Annotation& ann,
                 BackgroundPolicy policy)
{
    if (rule == Rule::Axiom) throw std::invalid_argument("conclude: use axiom() for axioms");
    auto shaped = shape_of(rule, ann);
    if (auto* err = std::get_if<std::string>(&shaped)) throw std::invalid_argument(*err);
    const Shape& sh = std::get<Shape>(shaped);
    if (premises.size() != sh.arity)
        throw std::invalid_argument(std::string(rule_name(rule)) + ": wrong number of premises");
    Sequent c;
    c.antecedent = sh.ant_principal;
    c.succedent = sh.succ_principal;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        const auto& p = premises[i];
        FormulaSet a = minus(p.antecedent, sh.ant_active[i]);
        FormulaSet s = minus(p.succedent, sh.succ_active[i]);
        c.antecedent.insert(a.begin(), a.end());
        c.succedent.insert(s.begin(), s.end());
        c.background.insert(p.background.begin(), p.background.end());
        c.defeaters.insert(p.defeaters);
    }
    if (policy == BackgroundPolicy::Recorded)
        c.background.insert(sh.bg_added.begin(), sh.bg_added.end());
    c.defeaters.insert(sh.s_added);
    if (auto e = validate_step(rule, premises, c, ann, policy)) throw std::invalid_argument(*e);
    return c;
}

Derivation make_node(Rule rule, std::vector<Derivation> premises, Annotation ann,
                     BackgroundPolicy policy)
{
    std::vector<Sequent> ps;
    for (const auto& p : premises) ps.push_back(p.conclusion);
    Derivation d;
    d.rule = rule;
    d.conclusion = conclude(rule, ps, ann, policy);
    d.annotation = std::move(ann);
    d.premises = std::move(premises);
    return d;
}

Derivation axiom(const Dwff& p)
{
    if (!p.is_atom()) throw std::invalid_argument("axioms are atomic");
    Derivation d;
    d.rule = Rule::Axiom;
    d.conclusion.antecedent = {p};
    d.conclusion.succedent = {p};
    return d;
}

static Derivation step(Rule rule, Derivation d, Annotation ann)
{
    Derivation out;
    out.rule = rule;
    out.conclusion = d.conclusion;
    switch (rule) {
    case Rule::LW: out.conclusion.antecedent.insert(*ann.formula); break;
    case Rule::RW: out.conclusion.succedent.insert(*ann.formula); break;
    case Rule::BE: out.conclusion.background.insert(*ann.formula); break;
    case Rule::DE: out.conclusion.defeaters.insert(ann.added); break;
    default: break;
    }
    out.annotation = std::move(ann);
    out.premises.push_back(std::move(d));
    return out;
}

Derivation weaken_to(Derivation d, const FormulaSet& ant, const FormulaSet& succ)
{
    for (const auto& f : minus(ant, d.conclusion.antecedent)) {
        Annotation a;
        a.formula = f;
        d = step(Rule::LW, std::move(d), std::move(a));
    }
    for (const auto& f : minus(succ, d.conclusion.succedent)) {
        Annotation a;
        a.formula = f;
        d = step(Rule::RW, std::move(d), std::move(a));
    }
    return d;
}

Derivation pad_to(Derivation d, const Sequent& target)
{
    const Sequent& c = d.conclusion;
    if (!subset_of(c.antecedent, target.antecedent) || !subset_of(c.succedent, target.succedent) ||
        !subset_of(c.background, target.background) || !c.defeaters.subset_of(target.defeaters))
        throw std::invalid_argument("pad_to: " + c.text() + " is not contained in " + target.text());
    d = weaken_to(std::move(d), target.antecedent, target.succedent);
    for (const auto& f : minus(target.background, d.conclusion.background)) {
        Annotation a;
        a.formula = f;
        d = step(Rule::BE, std::move(d), std::move(a));
    }
    if (!(d.conclusion.defeaters == target.defeaters)) {
        Annotation a;
        for (const auto& m : target.defeaters)
            if (!d.conclusion.defeaters.contains(m)) a.added.insert(m);
        d = step(Rule::DE, std::move(d), std::move(a));
    }
    return d;
}

bool contains_rule(const Derivation& d, Rule r) { return count_rule(d, r) > 0; }

std::size_t count_rule(const Derivation& d, Rule r)
{
    std::size_t n = d.rule == r;
    for (const auto& p : d.premises) n += count_rule(p, r);
    return n;
}

std::size_t node_count(const Derivation& d)
{
    std::size_t n = 1;
    for (const auto& p : d.premises) n += node_count(p);
    return n;
}

std::size_t height(const Derivation& d)
{
    std::size_t h = 0;
    for (const auto& p : d.premises) h = std::max(h, height(p));
    return h + 1;
}

static void tree_rec(const Derivation& d, std::size_t depth, std::string& out)
{
    out.append(2 * depth, ' ');
    out += "[" + std::string(rule_name(d.rule)) + "] " + d.conclusion.text() + "\n";
    for (const auto& p : d.premises) tree_rec(p, depth + 1, out);
}

std::string render_tree(const Derivation& d)
{
    std::string out;
    tree_rec(d, 0, out);
    return out;
}

}  // namespace lkq
