#include "lkq/cutelim.hpp"
#include "lkq/prover.hpp"

#include "support/gen.hpp"

#include <gtest/gtest.h>

using namespace lkq;

namespace {

Dwff D(const char* s) { return parse_dwff(s); }

Annotation on(const Formula& f)
{
    Annotation a;
    a.formula = f;
    return a;
}

Derivation lw(Derivation d, const char* f) { return make_node(Rule::LW, {std::move(d)}, on(D(f))); }
Derivation rw(Derivation d, const char* f) { return make_node(Rule::RW, {std::move(d)}, on(D(f))); }

// p, q |- p /\ q against p /\ q |- p, cut on p /\ q.
Derivation conj_cut()
{
    auto left = make_node(Rule::ConjR, {lw(axiom(D("p")), "q"), lw(axiom(D("q")), "p")}, on(D("p /\\ q")));
    auto right = make_node(Rule::ConjL, {lw(axiom(D("p")), "q")}, on(D("p /\\ q")));
    return make_node(Rule::Cut, {left, right}, on(D("p /\\ q")));
}

void expect_clean(const Derivation& in, const Derivation& out)
{
    EXPECT_EQ(out.conclusion, in.conclusion);
    EXPECT_FALSE(contains_rule(out, Rule::Cut));
    EXPECT_TRUE(validate_derivation(out).empty()) << render_tree(out);
    EXPECT_TRUE(classify(out).proof);
    EXPECT_TRUE(is_analytic(out)) << render_tree(out);
}

}  // namespace

TEST(CutElim, CutFreeInputUnchanged)
{
    auto d = rw(axiom(D("p")), "q");
    EXPECT_EQ(eliminate_cut(d), d);
}

TEST(CutElim, PrincipalConjunction)
{
    auto d = conj_cut();
    EXPECT_EQ(d.conclusion.text(), ". | p, q |- <{}> p");
    expect_clean(d, eliminate_cut(d));
}

TEST(CutElim, CarriesDefeatersThrough)
{
    auto d = conj_cut();
    Annotation a;
    a.added = DefeaterSet{{D("r")}};
    auto left = make_node(Rule::DE, {d.premises[0]}, a);
    auto cut = make_node(Rule::Cut, {left, d.premises[1]}, on(D("p /\\ q")));
    EXPECT_EQ(cut.conclusion.text(), ". | p, q |- <{{r}}> p");
    expect_clean(cut, eliminate_cut(cut));
}

TEST(CutElim, ForeignCutFormulaIsNotAnalytic)
{
    auto left = rw(axiom(D("p")), "r");
    auto right = lw(axiom(D("p")), "r");
    auto d = make_node(Rule::Cut, {left, right}, on(D("r")));
    EXPECT_FALSE(is_analytic(d));
    expect_clean(d, eliminate_cut(d));
}

TEST(CutElim, QuestionCutBetweenQR1AndQL1IsAParaproof)
{
    auto neg = make_node(Rule::NegR, {rw(axiom(D("p")), "p")}, on(D("~p")));
    ASSERT_EQ(neg.conclusion.text(), "p | . |- <{}> p, ~p");
    Annotation qa;
    qa.answers = {D("p"), D("~p")};
    auto left = make_node(Rule::QR1, {neg}, qa);

    auto a = lw(axiom(D("q")), "p");
    auto b = lw(axiom(D("q")), "~p");
    auto right = make_node(Rule::QL1, {a, b}, on(parse_question("?{p, ~p}")));
    auto d = make_node(Rule::Cut, {left, right}, on(parse_question("?{p, ~p}")));
    EXPECT_THROW(eliminate_cut(d), ParaproofInput);
}

TEST(CutElim, RejectsInvalidInput)
{
    auto d = conj_cut();
    d.conclusion.succedent.insert(D("s"));
    EXPECT_THROW(eliminate_cut(d), InvalidDerivation);
}

TEST(CutElimProperty, RandomDeclarativeCuts)
{
    gen::Gen g(51);
    int done = 0;
    for (int i = 0; i < 400 && done < 40; ++i) {
        auto G = g.formulas(2, 1, false);
        auto A = g.dwff(2);
        auto Dl = g.formulas(1, 1, false);
        FormulaSet succL = Dl;
        succL.insert(A);
        FormulaSet antR = G;
        antR.insert(A);
        auto l = search(G, succL, {});
        auto r = search(antR, Dl, {});
        if (!l.derivation || !r.derivation) continue;
        auto cut = make_node(Rule::Cut, {*l.derivation, *r.derivation}, on(A));
        if (!defeated_nodes(cut).empty()) continue;
        ++done;
        expect_clean(cut, eliminate_cut(cut));
    }
    EXPECT_GE(done, 20);
}
