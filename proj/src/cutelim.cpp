#include "lkq/cutelim.hpp"

#include "lkq/prover.hpp"

namespace lkq {

namespace {

FormulaSet without(FormulaSet s, const Formula& f)
{
    s.erase(f);
    return s;
}

FormulaSet answers_of(const EFormula& q) { return {q.answers().begin(), q.answers().end()}; }

std::optional<EFormula> qr1_question(const Derivation& d)
{
    if (d.annotation.formula && d.annotation.formula->is_question()) return d.annotation.formula->question();
    if (d.annotation.answers.size() >= 2) return EFormula(d.annotation.answers);
    return std::nullopt;
}

bool same(const std::optional<Formula>& a, const Formula& f) { return a && *a == f; }

// F introduced on the right by d's last rule.
bool principal_right(const Derivation& d, const Formula& f)
{
    switch (d.rule) {
    case Rule::ConjR:
    case Rule::DisjR:
    case Rule::ImplR:
    case Rule::NegR:
    case Rule::RW:
    case Rule::QR2:
    case Rule::QL2: return same(d.annotation.formula, f);
    case Rule::QR1: {
        auto q = qr1_question(d);
        return q && Formula(*q) == f;
    }
    default: return false;
    }
}

bool principal_left(const Derivation& d, const Formula& f)
{
    switch (d.rule) {
    case Rule::ConjL:
    case Rule::DisjL:
    case Rule::ImplL:
    case Rule::NegL:
    case Rule::LW:
    case Rule::QL1: return same(d.annotation.formula, f);
    case Rule::QR2:
    case Rule::QL2: return d.annotation.implying && Formula(*d.annotation.implying) == f;
    default: return false;
    }
}

class Eliminator {
public:
    explicit Eliminator(BackgroundPolicy p) : policy_(p) {}

    Derivation run(const Derivation& d)
    {
        std::vector<Derivation> ps;
        for (const auto& p : d.premises) ps.push_back(run(p));
        if (d.rule != Rule::Cut) {
            Derivation out = d;
            out.premises = std::move(ps);
            return out;
        }
        try {
            return pad_to(reduce(*d.annotation.formula, ps[0], ps[1]), d.conclusion);
        } catch (const ParaproofInput&) {
            throw;
        } catch (const std::invalid_argument&) {
            return research(d.conclusion);
        }
    }

private:
    BackgroundPolicy policy_;
    std::size_t calls_ = 0;

    Derivation research(const Sequent& c)
    {
        Constraints k;
        k.background = c.background;
        k.defeaters = c.defeaters;
        ProverOptions o;
        o.policy = policy_;
        auto r = search(c.antecedent, c.succedent, k, o);
        if (!r.derivation)
            throw ParaproofInput("no cut-free derivation of " + c.text() +
                                 " within its background and defeaters");
        return *r.derivation;
    }

    Derivation fallback(const Formula& f, const Derivation& l, const Derivation& r)
    {
        Annotation a;
        a.formula = f;
        return research(conclude(Rule::Cut, {l.conclusion, r.conclusion}, a, policy_));
    }

    // Pushes the cut into the premises of l that carry f on the right, then
    // re-applies l's rule.
    std::optional<Derivation> permute_left(const Formula& f, const Derivation& l, const Derivation& r)
    {
        std::vector<Derivation> qs;
        for (const auto& p : l.premises) {
            Derivation x = p.conclusion.succedent.count(f) ? reduce(f, p, r) : p;
            FormulaSet ant = united(p.conclusion.antecedent, x.conclusion.antecedent);
            FormulaSet succ = united(without(p.conclusion.succedent, f), x.conclusion.succedent);
            qs.push_back(weaken_to(std::move(x), ant, succ));
        }
        return rebuild(l, std::move(qs));
    }

    std::optional<Derivation> permute_right(const Formula& f, const Derivation& l, const Derivation& r)
    {
        std::vector<Derivation> qs;
        for (const auto& p : r.premises) {
            Derivation x = p.conclusion.antecedent.count(f) ? reduce(f, l, p) : p;
            FormulaSet ant = united(without(p.conclusion.antecedent, f), x.conclusion.antecedent);
            FormulaSet succ = united(p.conclusion.succedent, x.conclusion.succedent);
            qs.push_back(weaken_to(std::move(x), ant, succ));
        }
        return rebuild(r, std::move(qs));
    }

    std::optional<Derivation> rebuild(const Derivation& d, std::vector<Derivation> qs)
    {
        if (d.rule == Rule::QL1) {
            FormulaSet shared;
            for (const auto& q : qs) shared = united(shared, q.conclusion.succedent);
            for (auto& q : qs) {
                FormulaSet ant = q.conclusion.antecedent;
                q = weaken_to(std::move(q), ant, shared);
            }
        }
        try {
            return make_node(d.rule, std::move(qs), d.annotation, policy_);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    static bool in_premise_succ(const Derivation& d, const Formula& f)
    {
        for (const auto& p : d.premises)
            if (p.conclusion.succedent.count(f)) return true;
        return false;
    }

    static bool in_premise_ant(const Derivation& d, const Formula& f)
    {
        for (const auto& p : d.premises)
            if (p.conclusion.antecedent.count(f)) return true;
        return false;
    }

    // Cut-free derivation whose conclusion is contained in that of the cut of l and r on f.
    Derivation reduce(const Formula& f, const Derivation& l, const Derivation& r)
    {
        if (++calls_ > 200000) throw std::runtime_error("cut elimination exceeded its step budget");
        if (!l.conclusion.succedent.count(f)) return l;
        if (!r.conclusion.antecedent.count(f)) return r;
        if (l.rule == Rule::RW && same(l.annotation.formula, f)) {
            const Derivation& p = l.premises[0];
            return p.conclusion.succedent.count(f) ? reduce(f, p, r) : p;
        }
        if (r.rule == Rule::LW && same(r.annotation.formula, f)) {
            const Derivation& p = r.premises[0];
            return p.conclusion.antecedent.count(f) ? reduce(f, l, p) : p;
        }
        if (l.rule == Rule::Axiom) return r;
        if (r.rule == Rule::Axiom) return l;

        if (!principal_right(l, f)) {
            if (auto x = permute_left(f, l, r)) return *x;
            return fallback(f, l, r);
        }
        if (!principal_left(r, f)) {
            if (auto x = permute_right(f, l, r)) return *x;
            return fallback(f, l, r);
        }
        // Contracted copies of f above the principal occurrence go first.
        if (in_premise_succ(l, f) && !r.conclusion.succedent.count(f)) {
            if (auto x = permute_left(f, l, r); x && !in_premise_succ(*x, f)) return reduce(f, *x, r);
            return fallback(f, l, r);
        }
        // QR2 keeps its implying question in every premise; that is not a contraction.
        const bool right_copies = in_premise_ant(r, f) && r.rule != Rule::QR2;
        if (right_copies && !l.conclusion.antecedent.count(f)) {
            if (auto x = permute_right(f, l, r); x && !in_premise_ant(*x, f)) return reduce(f, l, *x);
            return fallback(f, l, r);
        }
        if (in_premise_succ(l, f) || right_copies) return fallback(f, l, r);

        if (f.is_declarative()) {
            const Dwff& d = f.dwff();
            const Formula a = d.is_atom() ? f : Formula(d.lhs());
            switch (d.op()) {
            case Connective::Conj: {
                const Formula b = d.rhs();
                Derivation d1 = reduce(b, l.premises[1], r.premises[0]);
                return reduce(a, l.premises[0], d1);
            }
            case Connective::Disj: {
                const Formula b = d.rhs();
                Derivation d1 = reduce(a, l.premises[0], r.premises[0]);
                return reduce(b, d1, r.premises[1]);
            }
            case Connective::Impl: {
                const Formula b = d.rhs();
                Derivation d1 = reduce(a, r.premises[0], l.premises[0]);
                return reduce(b, d1, r.premises[1]);
            }
            case Connective::Neg: return reduce(a, r.premises[0], l.premises[0]);
            default: break;
            }
            return fallback(f, l, r);
        }

        const EFormula& q = f.question();
        if ((l.rule == Rule::QR1 || l.rule == Rule::QR2) && r.rule == Rule::QL1) {
            // Cut the answers one at a time against the QL1 premises.
            Derivation acc = l.premises[0];
            for (std::size_t j = 0; j < q.arity(); ++j) acc = reduce(q.answers()[j], acc, r.premises[j]);
            return acc;
        }
        if (l.rule == Rule::QR2 && r.rule == Rule::QR2) {
            if (auto x = chain_qr2(q, l, r)) return *x;
        }
        return fallback(f, l, r);
    }

    // l derives ?B from ?A, r derives ?C from ?B: derive ?C from ?A directly.
    std::optional<Derivation> chain_qr2(const EFormula& qb, const Derivation& l, const Derivation& r)
    {
        const EFormula& qa = *l.annotation.implying;
        const EFormula qc = r.annotation.formula->question();
        std::vector<Derivation> ps;
        Derivation alpha = reduce(qb, l, r.premises[0]);
        FormulaSet alpha_ant = united(alpha.conclusion.antecedent, {qa});
        FormulaSet alpha_succ = united(alpha.conclusion.succedent, answers_of(qc));
        ps.push_back(weaken_to(std::move(alpha), alpha_ant, alpha_succ));
        Annotation ann;
        ann.formula = qc;
        ann.implying = qa;
        for (std::size_t k = 0; k < qc.arity(); ++k) {
            const std::size_t j = r.annotation.targets[k];
            Derivation b = reduce(qb, l, r.premises[k + 1]);
            Derivation g = reduce(qb.answers()[j], b, l.premises[j + 1]);
            const std::size_t t = l.annotation.targets[j];
            FormulaSet ant = g.conclusion.antecedent;
            ant.insert(qa);
            ant.insert(qc.answers()[k]);
            FormulaSet succ = g.conclusion.succedent;
            succ.insert(qa.answers()[t]);
            ps.push_back(weaken_to(std::move(g), ant, succ));
            ann.targets.push_back(t);
        }
        try {
            return make_node(Rule::QR2, std::move(ps), std::move(ann), policy_);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
};

void find_lemma22(const Derivation& d, Path& path)
{
    if (d.rule == Rule::Cut && d.annotation.formula && d.annotation.formula->is_question()) {
        const Formula& f = *d.annotation.formula;
        const Derivation& l = d.premises[0];
        const Derivation& r = d.premises[1];
        if (l.rule == Rule::QR1 && principal_right(l, f) && r.rule == Rule::QL1 && principal_left(r, f))
            throw ParaproofInput("cut at " + path_text(path) + " on " + f.text() +
                                 " joins QR1 and QL1 on the same question; its conclusion is defeated");
    }
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
        path.push_back(i);
        find_lemma22(d.premises[i], path);
        path.pop_back();
    }
}

}  // namespace

Derivation eliminate_cut(const Derivation& d, BackgroundPolicy policy)
{
    auto v = validate_derivation(d, policy);
    if (!v.empty()) throw InvalidDerivation(std::move(v));
    Path path;
    find_lemma22(d, path);
    auto bad = defeated_nodes(d);
    if (!bad.empty()) {
        std::string where;
        for (const auto& p : bad) where += (where.empty() ? "" : ", ") + path_text(p);
        throw ParaproofInput("input is a paraproof; defeated at " + where);
    }
    if (!contains_rule(d, Rule::Cut)) return d;
    Derivation out = Eliminator(policy).run(d);
    auto w = validate_derivation(out, policy);
    if (!w.empty()) throw std::logic_error(std::string("cut elimination produced an ") + InvalidDerivation(w).what());
    return out;
}

static void collect(const Derivation& d, FormulaSet& out)
{
    const Sequent& s = d.conclusion;
    for (const auto* part : {&s.background, &s.antecedent, &s.succedent}) out.insert(part->begin(), part->end());
    if (d.annotation.formula) out.insert(*d.annotation.formula);
    for (const auto& p : d.premises) collect(p, out);
}

bool is_analytic(const Derivation& d)
{
    FormulaSet allowed;
    const Sequent& root = d.conclusion;
    for (const auto* part : {&root.background, &root.antecedent, &root.succedent})
        for (const auto& f : *part) {
            auto subs = subformulas(f);
            allowed.insert(subs.begin(), subs.end());
        }
    FormulaSet used;
    collect(d, used);
    return subset_of(used, allowed);
}

}  // namespace lkq
