#include "lkq/pmce.hpp"

#include "lkq/semantics.hpp"

#include <array>

namespace lkq {

std::string ESequent::text() const
{
    FormulaSet ant(antecedent.begin(), antecedent.end());
    return render_list(ant) + " |- " + succedent.text();
}

ESequent parse_esequent(std::string_view text)
{
    std::size_t turnstile = text.find("|-");
    if (turnstile == std::string_view::npos)
        throw ParseError(ParseErrorKind::Syntax, text.size(),
                         "expected '|-' at position " + std::to_string(text.size()));
    FormulaSet ant = parse_list(text.substr(0, turnstile));
    DwffSet x;
    for (const auto& f : ant) {
        if (f.is_question())
            throw ParseError(ParseErrorKind::Syntax, 0, "e-sequent antecedents are declarative at position 0");
        x.insert(f.dwff());
    }
    std::string_view rhs = text.substr(turnstile + 2);
    try {
        return ESequent{std::move(x), parse_question(rhs)};
    } catch (const ParseError& e) {
        std::string msg = e.what();
        if (auto cut = msg.rfind(" at position "); cut != std::string::npos) msg.resize(cut);
        std::size_t pos = turnstile + 2 + e.position();
        throw ParseError(e.kind(), pos, msg + " at position " + std::to_string(pos));
    }
}

bool complementary(const Dwff& a, const Dwff& b)
{
    auto negates = [](const Dwff& n, const Dwff& x) {
        return n.op() == Connective::Neg && x.is_atom() && n.lhs() == x;
    };
    return negates(a, b) || negates(b, a);
}

namespace {

// Literals of a disjunction of literals; nullopt if d is not one.
std::optional<std::vector<Dwff>> disjuncts(const Dwff& d)
{
    if (d.is_literal()) return std::vector<Dwff>{d};
    if (d.op() != Connective::Disj) return std::nullopt;
    auto l = disjuncts(d.lhs()), r = disjuncts(d.rhs());
    if (!l || !r) return std::nullopt;
    l->insert(l->end(), r->begin(), r->end());
    return l;
}

bool has_complementary_pair(const std::vector<Dwff>& lits)
{
    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j)
            if (complementary(lits[i], lits[j])) return true;
    return false;
}

const Dwff& last(const EFormula& q) { return q.answers().back(); }

std::vector<Dwff> init(const EFormula& q) { return {q.answers().begin(), q.answers().end() - 1}; }

std::vector<Dwff> with(std::vector<Dwff> v, Dwff d)
{
    v.push_back(std::move(d));
    return v;
}

bool among(const std::vector<Dwff>& v, const Dwff& d)
{
    for (const auto& x : v)
        if (x == d) return true;
    return false;
}

void arity(PmceRule r, const std::vector<ESequent>& ps, std::size_t n)
{
    if (ps.size() != n)
        throw PmceViolation(std::string(pmce_rule_name(r)) + ": expected " + std::to_string(n) +
                            " premise(s), got " + std::to_string(ps.size()));
}

}  // namespace

bool is_pmce_axiom(const ESequent& s)
{
    if (!s.antecedent.empty()) return false;
    std::vector<Dwff> all;
    for (const auto& d : s.succedent.answers()) {
        auto lits = disjuncts(d);
        if (!lits || has_complementary_pair(*lits)) return false;
        all.insert(all.end(), lits->begin(), lits->end());
    }
    return has_complementary_pair(all);
}

std::string_view pmce_rule_name(PmceRule r)
{
    static constexpr std::array<std::string_view, 4> names = {"R1", "R2", "R3", "R4"};
    return names[static_cast<std::size_t>(r)];
}

std::optional<PmceRule> pmce_rule_from_name(std::string_view name)
{
    for (auto r : {PmceRule::R1, PmceRule::R2, PmceRule::R3, PmceRule::R4})
        if (pmce_rule_name(r) == name) return r;
    return std::nullopt;
}

ESequent apply_pmce_rule(PmceRule rule, const std::vector<ESequent>& ps, const PmceWitness& w)
{
    switch (rule) {
    case PmceRule::R1: {
        arity(rule, ps, 2);
        if (ps[0].antecedent != ps[1].antecedent)
            throw PmceViolation("R1: premises must share their antecedent");
        const auto a = init(ps[0].succedent);
        if (a != init(ps[1].succedent))
            throw PmceViolation("R1: premises must agree on all but their last constituent");
        Dwff bc = Dwff::conj(last(ps[0].succedent), last(ps[1].succedent));
        if (among(a, bc)) throw PmceViolation("R1: proviso breached, " + bc.text() + " is already a constituent");
        return {ps[0].antecedent, EFormula(with(a, bc))};
    }
    case PmceRule::R2: {
        arity(rule, ps, 1);
        if (!w.formula) throw PmceViolation("R2: the replacement formula C is required");
        const auto a = init(ps[0].succedent);
        const Dwff& c = *w.formula;
        if (!equivalent(last(ps[0].succedent), c))
            throw PmceViolation("R2: proviso breached, " + last(ps[0].succedent).text() + " <-> " +
                                c.text() + " is not a theorem");
        if (among(a, c)) throw PmceViolation("R2: proviso breached, " + c.text() + " is already a constituent");
        return {ps[0].antecedent, EFormula(with(a, c))};
    }
    case PmceRule::R3: {
        arity(rule, ps, 1);
        const auto& as = ps[0].succedent.answers();
        std::vector<Dwff> heads;
        for (const auto& d : as) {
            if (d.op() != Connective::Impl || d.lhs() != as[0].lhs())
                throw PmceViolation("R3: every constituent must be B -> A_i for one B");
            heads.push_back(d.rhs());
        }
        DwffSet x = ps[0].antecedent;
        x.insert(as[0].lhs());
        return {std::move(x), EFormula(std::move(heads))};
    }
    case PmceRule::R4: {
        arity(rule, ps, 1);
        if (!w.question) throw PmceViolation("R4: the target question is required");
        const auto& a = ps[0].succedent.answers();
        const auto& b = w.question->answers();
        if (DwffSet(a.begin(), a.end()) != DwffSet(b.begin(), b.end()))
            throw PmceViolation("R4: proviso breached, the answer sets differ");
        return {ps[0].antecedent, *w.question};
    }
    }
    throw PmceViolation("unknown rule");
}

Sequent lk_correlate(const ESequent& s)
{
    Sequent out;
    out.antecedent.insert(s.antecedent.begin(), s.antecedent.end());
    out.defeaters = answer_singletons(s.succedent);
    out.succedent = {s.succedent};
    return out;
}

Correlate find_correlate(const ESequent& s, const ProverOptions& opts)
{
    Correlate c;
    c.sequent = lk_correlate(s);
    Constraints k;
    k.background = FormulaSet{};
    k.defeaters = c.sequent.defeaters;
    auto r = search(c.sequent.antecedent, c.sequent.succedent, k, opts);
    if (!r.derivation) {
        k.background.reset();
        r = search(c.sequent.antecedent, c.sequent.succedent, k, opts);
    }
    if (!r.derivation) return c;
    c.sequent = r.derivation->conclusion;
    if (!is_defeated(c.sequent)) c.proof = std::move(r.derivation);
    return c;
}

bool is_minimal_correlate(const Sequent& s, const ProverOptions& opts)
{
    std::vector<Formula> bg(s.background.begin(), s.background.end());
    std::vector<DwffSet> ds(s.defeaters.begin(), s.defeaters.end());
    if (ds.size() > 4 || bg.size() > 8)
        throw std::invalid_argument("minimality check is limited to 4 defeaters and 8 background entries");
    const std::size_t nb = std::size_t{1} << bg.size(), nd = std::size_t{1} << ds.size();
    for (std::size_t mb = 0; mb < nb; ++mb)
        for (std::size_t md = 0; md < nd; ++md) {
            if (mb == nb - 1 && md == nd - 1) continue;
            Sequent v = s;
            v.background.clear();
            v.defeaters = {};
            for (std::size_t i = 0; i < bg.size(); ++i)
                if (mb >> i & 1) v.background.insert(bg[i]);
            for (std::size_t i = 0; i < ds.size(); ++i)
                if (md >> i & 1) v.defeaters.insert(ds[i]);
            if (prove(v, opts).kind == Verdict::Kind::Proof) return false;
        }
    return true;
}

}  // namespace lkq
