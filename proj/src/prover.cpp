#include "lkq/prover.hpp"

#include <map>
#include <set>

namespace lkq {

namespace {

std::size_t formula_weight(const Formula& f, std::size_t& arity)
{
    if (!f.is_question()) return f.dwff().size();
    std::size_t n = 0;
    for (const auto& a : f.question().answers()) n += a.size();
    arity += f.question().arity();
    return n;
}

FormulaSet without(FormulaSet s, const Formula& f)
{
    s.erase(f);
    return s;
}

FormulaSet with(FormulaSet s, std::initializer_list<Formula> fs)
{
    s.insert(fs.begin(), fs.end());
    return s;
}

FormulaSet declarative_part(const FormulaSet& s)
{
    FormulaSet out;
    for (const auto& f : s)
        if (f.is_declarative()) out.insert(f);
    return out;
}

Annotation annotate(const Formula& f)
{
    Annotation a;
    a.formula = f;
    return a;
}

class Search {
public:
    Search(const Constraints& c, const ProverOptions& o) : c_(c), o_(o) {}

    bool hit_bound = false;

    std::optional<Derivation> solve(const FormulaSet& ant, const FormulaSet& succ, std::size_t depth)
    {
        if (depth == 0) {
            hit_bound = true;
            return std::nullopt;
        }
        const std::string key = render_list(ant) + " |- " + render_list(succ);
        if (auto it = proved_.find(key); it != proved_.end()) return it->second;
        if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth)
            return std::nullopt;
        if (active_.count(key)) {
            ++cycle_cuts_;
            return std::nullopt;
        }
        active_.insert(key);
        const std::size_t cuts = cycle_cuts_;
        auto r = expand(ant, succ, depth);
        active_.erase(key);
        if (r) {
            proved_.emplace(key, *r);
        } else if (cycle_cuts_ == cuts) {
            auto& d = failed_[key];
            d = std::max(d, depth);
        }
        return r;
    }

private:
    const Constraints& c_;
    const ProverOptions& o_;
    std::map<std::string, Derivation> proved_;
    std::map<std::string, std::size_t> failed_;
    std::set<std::string> active_;
    std::size_t cycle_cuts_ = 0;

    bool bg_allows(const FormulaSet& added) const
    {
        if (o_.policy == BackgroundPolicy::Optional || !c_.background) return true;
        return subset_of(added, *c_.background);
    }

    // Solves a premise and pads it to exactly the premise sequent.
    std::optional<Derivation> premise(const FormulaSet& ant, const FormulaSet& succ, std::size_t depth)
    {
        auto d = solve(ant, succ, depth);
        if (!d) return std::nullopt;
        return weaken_to(std::move(*d), ant, succ);
    }

    Derivation finish(Rule rule, std::vector<Derivation> ps, Annotation ann, const FormulaSet& ant,
                      const FormulaSet& succ)
    {
        return weaken_to(make_node(rule, std::move(ps), std::move(ann), o_.policy), ant, succ);
    }

    struct Step {
        Rule rule;
        Formula principal;
        std::vector<std::pair<FormulaSet, FormulaSet>> premises;
    };

    std::optional<Step> invertible(const FormulaSet& ant, const FormulaSet& succ) const
    {
        std::optional<Step> two;
        for (const auto& f : ant) {
            if (f.is_question() || f.dwff().is_atom()) continue;
            const Dwff& d = f.dwff();
            FormulaSet rest = without(ant, f);
            switch (d.op()) {
            case Connective::Conj:
                return Step{Rule::ConjL, f, {{with(rest, {d.lhs(), d.rhs()}), succ}}};
            case Connective::Neg:
                return Step{Rule::NegL, f, {{rest, with(succ, {d.lhs()})}}};
            case Connective::Disj:
                if (!two && bg_allows({d.lhs(), d.rhs()}))
                    two = Step{Rule::DisjL, f, {{with(rest, {d.lhs()}), succ}, {with(rest, {d.rhs()}), succ}}};
                break;
            case Connective::Impl:
                if (!two && bg_allows({Dwff::neg(d.lhs()), d.rhs()}))
                    two = Step{Rule::ImplL, f, {{rest, with(succ, {d.lhs()})}, {with(rest, {d.rhs()}), succ}}};
                break;
            default: break;
            }
        }
        for (const auto& f : succ) {
            if (f.is_question() || f.dwff().is_atom()) continue;
            const Dwff& d = f.dwff();
            FormulaSet rest = without(succ, f);
            switch (d.op()) {
            case Connective::Disj:
                return Step{Rule::DisjR, f, {{ant, with(rest, {d.lhs(), d.rhs()})}}};
            case Connective::Neg:
                if (bg_allows({d.lhs()})) return Step{Rule::NegR, f, {{with(ant, {d.lhs()}), rest}}};
                break;
            case Connective::Impl:
                if (bg_allows({d.lhs()}))
                    return Step{Rule::ImplR, f, {{with(ant, {d.lhs()}), with(rest, {d.rhs()})}}};
                break;
            case Connective::Conj:
                if (!two) two = Step{Rule::ConjR, f, {{ant, with(rest, {d.lhs()})}, {ant, with(rest, {d.rhs()})}}};
                break;
            default: break;
            }
        }
        return two;
    }

    std::optional<Derivation> expand(const FormulaSet& ant, const FormulaSet& succ, std::size_t depth)
    {
        for (const auto& f : ant)
            if (f.is_declarative() && f.dwff().is_atom() && succ.count(f))
                return weaken_to(axiom(f.dwff()), ant, succ);

        // With a declarative antecedent QR1 loses nothing, and applying it
        // below the declarative rules keeps the defeaters off the upper sequents.
        if (all_declarative(ant))
            for (const auto& f : succ)
                if (f.is_question())
                    if (auto d = try_qr1(f.question(), ant, succ, depth)) return d;

        if (auto st = invertible(ant, succ)) {
            std::vector<Derivation> ps;
            for (const auto& [a, s] : st->premises) {
                auto d = premise(a, s, depth - 1);
                if (!d) return std::nullopt;
                ps.push_back(std::move(*d));
            }
            return finish(st->rule, std::move(ps), annotate(st->principal), ant, succ);
        }

        for (const auto& f : ant)
            if (f.is_question())
                if (auto d = try_ql1(f.question(), ant, succ, depth)) return d;
        for (const auto& f : succ)
            if (f.is_question())
                if (auto d = try_qr1(f.question(), ant, succ, depth)) return d;
        for (const auto& a : ant) {
            if (!a.is_question()) continue;
            for (const auto& b : succ) {
                if (!b.is_question()) continue;
                if (o_.use_qr2)
                    if (auto d = try_qr2(a.question(), b.question(), ant, succ, depth)) return d;
                if (o_.use_ql2)
                    if (auto d = try_ql2(a.question(), b.question(), ant, succ, depth)) return d;
            }
        }
        return std::nullopt;
    }

    std::optional<Derivation> try_ql1(const EFormula& q, const FormulaSet& ant, const FormulaSet& succ,
                                      std::size_t depth)
    {
        FormulaSet answers(q.answers().begin(), q.answers().end());
        if (!bg_allows(answers)) return std::nullopt;
        FormulaSet rest = without(ant, q), x = declarative_part(succ);
        std::vector<Derivation> ps;
        for (const auto& a : q.answers()) {
            auto d = premise(with(rest, {a}), x, depth - 1);
            if (!d) return std::nullopt;
            ps.push_back(std::move(*d));
        }
        return finish(Rule::QL1, std::move(ps), annotate(q), ant, succ);
    }

    std::optional<Derivation> try_qr1(const EFormula& q, const FormulaSet& ant, const FormulaSet& succ,
                                      std::size_t depth)
    {
        if (!answer_singletons(q).subset_of(c_.defeaters)) return std::nullopt;
        FormulaSet s = without(succ, q);
        s.insert(q.answers().begin(), q.answers().end());
        auto d = premise(declarative_part(ant), s, depth - 1);
        if (!d) return std::nullopt;
        std::vector<Derivation> ps;
        ps.push_back(std::move(*d));
        Annotation ann = annotate(q);
        ann.answers = q.answers();
        return finish(Rule::QR1, std::move(ps), std::move(ann), ant, succ);
    }

    // For each B_j, the first A_i with ant, B_j |- rest, A_i derivable.
    std::optional<std::pair<std::vector<Derivation>, std::vector<std::size_t>>>
    targets(const EFormula& A, const EFormula& B, const FormulaSet& ant, const FormulaSet& rest,
            std::size_t depth)
    {
        std::vector<Derivation> ps;
        std::vector<std::size_t> ts;
        for (const auto& b : B.answers()) {
            bool found = false;
            for (std::size_t i = 0; i < A.arity() && !found; ++i) {
                if (auto d = premise(with(ant, {b}), with(rest, {A.answers()[i]}), depth - 1)) {
                    ps.push_back(std::move(*d));
                    ts.push_back(i);
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
        return std::pair{std::move(ps), std::move(ts)};
    }

    std::optional<Derivation> try_qr2(const EFormula& A, const EFormula& B, const FormulaSet& ant,
                                      const FormulaSet& succ, std::size_t depth)
    {
        FormulaSet bs(B.answers().begin(), B.answers().end());
        if (!bg_allows(bs)) return std::nullopt;
        FormulaSet rest = without(succ, B);
        auto alpha = premise(ant, united(rest, bs), depth - 1);
        if (!alpha) return std::nullopt;
        auto beta = targets(A, B, ant, rest, depth);
        if (!beta) return std::nullopt;
        std::vector<Derivation> ps;
        ps.push_back(std::move(*alpha));
        for (auto& d : beta->first) ps.push_back(std::move(d));
        Annotation ann = annotate(B);
        ann.implying = A;
        ann.targets = beta->second;
        return finish(Rule::QR2, std::move(ps), std::move(ann), ant, succ);
    }

    std::optional<Derivation> try_ql2(const EFormula& A, const EFormula& B, const FormulaSet& ant,
                                      const FormulaSet& succ, std::size_t depth)
    {
        FormulaSet added(A.answers().begin(), A.answers().end());
        added.insert(B.answers().begin(), B.answers().end());
        if (!bg_allows(added)) return std::nullopt;
        FormulaSet rest_ant = without(ant, A), rest_succ = without(succ, B);
        std::vector<Derivation> ps;
        for (const auto& a : A.answers()) {
            auto d = premise(with(rest_ant, {a}), succ, depth - 1);
            if (!d) return std::nullopt;
            ps.push_back(std::move(*d));
        }
        auto beta = targets(A, B, rest_ant, rest_succ, depth);
        if (!beta) return std::nullopt;
        for (auto& d : beta->first) ps.push_back(std::move(d));
        Annotation ann = annotate(B);
        ann.implying = A;
        ann.targets = beta->second;
        return finish(Rule::QL2, std::move(ps), std::move(ann), ant, succ);
    }
};

Constraints goal_constraints(const Sequent& goal, const ProverOptions& opts)
{
    Constraints c;
    if (opts.policy == BackgroundPolicy::Recorded) c.background = goal.background;
    c.defeaters = goal.defeaters;
    return c;
}

}  // namespace

std::string_view verdict_name(Verdict::Kind k)
{
    switch (k) {
    case Verdict::Kind::Proof: return "Proof";
    case Verdict::Kind::Defeated: return "Defeated";
    case Verdict::Kind::NotDerivable: return "NotDerivable";
    }
    return "?";
}

std::size_t default_bound(const Sequent& s)
{
    std::size_t nodes = 0, arity = 0;
    for (const auto& f : s.antecedent) nodes += formula_weight(f, arity);
    for (const auto& f : s.succedent) nodes += formula_weight(f, arity);
    return 2 * nodes + arity;
}

SearchResult search(const FormulaSet& ant, const FormulaSet& succ, const Constraints& c,
                    const ProverOptions& opts)
{
    SearchResult r;
    r.bound = opts.bound.value_or(default_bound(Sequent{{}, ant, {}, succ}));
    Search s(c, opts);
    if (auto d = s.solve(ant, succ, r.bound)) r.derivation = weaken_to(std::move(*d), ant, succ);
    r.exhaustive = !s.hit_bound;
    return r;
}

static SearchResult search_goal(const Sequent& goal, const ProverOptions& opts)
{
    SearchResult r = search(goal.antecedent, goal.succedent, goal_constraints(goal, opts), opts);
    if (r.derivation) r.derivation = pad_to(std::move(*r.derivation), goal);
    return r;
}

std::optional<Derivation> derive(const Sequent& goal, const ProverOptions& opts)
{
    return search_goal(goal, opts).derivation;
}

Verdict prove(const Sequent& goal, const ProverOptions& opts)
{
    Verdict v;
    v.goal = goal;
    if (is_defeated(goal)) {
        v.kind = Verdict::Kind::Defeated;
        return v;
    }
    SearchResult r = search_goal(goal, opts);
    v.bound = r.bound;
    v.exhaustive = r.exhaustive;
    if (r.derivation) {
        v.kind = Verdict::Kind::Proof;
        v.derivation = std::move(r.derivation);
    }
    return v;
}

Verdict prove_evocation(const std::vector<Dwff>& X, const EFormula& q, const ProverOptions& opts)
{
    Sequent goal;
    goal.antecedent.insert(X.begin(), X.end());
    goal.defeaters = answer_singletons(q);
    goal.succedent = {q};
    return prove(goal, opts);
}

namespace {

// X, A_i |- [B] for every i, assembled by QL1; X, B_j |- A_i for every j; then QR2.
std::optional<Derivation> guided_implication(const EFormula& q, const FormulaSet& x,
                                             const EFormula& q1, const ProverOptions& opts)
{
    const Constraints free;
    FormulaSet bs(q1.answers().begin(), q1.answers().end());
    std::vector<Derivation> left;
    for (const auto& a : q.answers()) {
        FormulaSet ant = with(x, {a});
        auto r = search(ant, bs, free, opts);
        if (!r.derivation) return std::nullopt;
        left.push_back(std::move(*r.derivation));
    }
    Derivation alpha = weaken_to(make_node(Rule::QL1, std::move(left), annotate(q), opts.policy),
                                 with(x, {q}), bs);

    std::vector<Derivation> ps;
    ps.push_back(std::move(alpha));
    Annotation ann = annotate(q1);
    ann.implying = q;
    for (const auto& b : q1.answers()) {
        bool found = false;
        for (std::size_t i = 0; i < q.arity() && !found; ++i) {
            auto r = search(with(x, {b}), {q.answers()[i]}, free, opts);
            if (!r.derivation) continue;
            ps.push_back(weaken_to(std::move(*r.derivation), with(x, {q, b}), {q.answers()[i]}));
            ann.targets.push_back(i);
            found = true;
        }
        if (!found) return std::nullopt;
    }
    return make_node(Rule::QR2, std::move(ps), std::move(ann), opts.policy);
}

}  // namespace

Verdict prove_regular_implication(const EFormula& q, const std::vector<Dwff>& X, const EFormula& q1,
                                  const ProverOptions& opts)
{
    FormulaSet x(X.begin(), X.end());
    Verdict v;
    v.goal.antecedent = with(x, {q});
    v.goal.succedent = {q1};
    v.goal.background.insert(q.answers().begin(), q.answers().end());
    v.goal.background.insert(q1.answers().begin(), q1.answers().end());

    std::optional<Derivation> d;
    if (opts.use_qr2) d = guided_implication(q, x, q1, opts);
    if (!d) {
        SearchResult r = search(v.goal.antecedent, v.goal.succedent, Constraints{}, opts);
        v.bound = r.bound;
        v.exhaustive = r.exhaustive;
        d = std::move(r.derivation);
    }
    if (!d) return v;
    v.goal.background.insert(d->conclusion.background.begin(), d->conclusion.background.end());
    v.derivation = pad_to(std::move(*d), v.goal);
    v.kind = Verdict::Kind::Proof;
    return v;
}

bool is_defeated_by_search(const Sequent& s, const ProverOptions& opts)
{
    FormulaSet lhs;
    for (const auto& d : declarativize(united(s.background, s.antecedent))) lhs.insert(d);
    for (const auto& x : s.defeaters) {
        FormulaSet succ(x.begin(), x.end());
        if (search(lhs, succ, Constraints{}, opts).derivation) return true;
    }
    return false;
}

}  // namespace lkq
