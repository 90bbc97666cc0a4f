#include "lkq/semantics.hpp"

#include "support/gen.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace lkq;

namespace {

std::vector<Dwff> ds(std::initializer_list<const char*> xs)
{
    std::vector<Dwff> out;
    for (auto x : xs) out.push_back(parse_dwff(x));
    return out;
}

EFormula Q(const char* s) { return parse_question(s); }

}  // namespace

TEST(Semantics, Entailment)
{
    EXPECT_TRUE(mc_entails(ds({"p \\/ q"}), ds({"p", "q"})));
    EXPECT_FALSE(mc_entails(ds({"p \\/ q"}), ds({"p"})));
    EXPECT_TRUE(mc_entails({}, ds({"p", "~p"})));
    EXPECT_TRUE(mc_entails(ds({"p", "~p"}), {}));
    EXPECT_FALSE(satisfiable(ds({"p /\\ ~p"})));
    EXPECT_TRUE(equivalent(parse_dwff("~~p"), parse_dwff("p")));
}

TEST(Semantics, EvaluateNeedsEveryAtom)
{
    EXPECT_THROW(evaluate({{"p", true}}, parse_dwff("p /\\ q")), std::out_of_range);
}

TEST(Semantics, Evocation)
{
    EXPECT_TRUE(evokes(ds({"p \\/ q"}), Q("?{p, q}")));
    EXPECT_FALSE(evokes(ds({"p"}), Q("?{p, q}")));
    // p=q=1, r=s=0 refutes relative soundness.
    EXPECT_FALSE(evokes(ds({"p /\\ q"}), Q("?{r, s}")));
    EXPECT_TRUE(evokes({}, Q("?{p, ~p}")));
}

TEST(Semantics, RegularImplication)
{
    EXPECT_TRUE(implies_regular(Q("?{p, q \\/ r}"), {}, Q("?{p, q, r}")));
    EXPECT_FALSE(implies_regular(Q("?{p, q}"), {}, Q("?{r, s}")));
    EXPECT_TRUE(implies_regular(Q("?{q, r}"), ds({"p", "~p"}), Q("?{s, t}")));
    EXPECT_TRUE(implies_regular_pure(Q("?{p, q \\/ r}"), Q("?{p, q, r}")));
}

TEST(Semantics, GeneralImplicationAllowsProperSubsets)
{
    // Each of ?{p/\q, p/\~q, ~p} entails p or ~p, and {p} is a proper subset of d?{p, ~p}.
    EXPECT_TRUE(implies_erotetic(Q("?{p, ~p}"), {}, Q("?{p /\\ q, p /\\ ~q, ~p}")));
    // ~p does not entail p \/ q.
    EXPECT_FALSE(implies_erotetic(Q("?{p, ~p}"), {}, Q("?{p, q}")));
}

// Values computed once by the reference oracle and frozen.
TEST(Semantics, FrozenValues)
{
    EXPECT_FALSE(evokes(ds({"p -> q", "p"}), Q("?{q, r}")));
    EXPECT_TRUE(evokes(ds({"p -> q \\/ r", "p"}), Q("?{q, r}")));
    EXPECT_FALSE(implies_regular(Q("?{p, q}"), ds({"p -> r"}), Q("?{r, q}")));
    EXPECT_TRUE(implies_regular(Q("?{p, q}"), ds({"p -> r", "r -> p"}), Q("?{r, q}")));
    EXPECT_TRUE(sound_relative_to(ds({"p -> q", "~p -> r"}), Q("?{q, r}")));
}

TEST(SemanticsProperty, AgreesWithReferenceEntailment)
{
    gen::Gen g(3);
    for (int i = 0; i < 1000; ++i) {
        auto X = g.distinct(g.below(3), 2);
        auto Y = g.distinct(g.below(3), 2);
        EXPECT_EQ(mc_entails(X, Y), oracle::entails(X, Y));
    }
}

TEST(SemanticsProperty, AgreesWithReferenceEroteticRelations)
{
    gen::Gen g(5);
    for (int i = 0; i < 500; ++i) {
        auto X = g.distinct(g.below(3), 2);
        auto q = g.question(3, 1);
        auto q1 = g.question(3, 1);
        EXPECT_EQ(evokes(X, q), oracle::evokes(X, q));
        EXPECT_EQ(implies_regular(q, X, q1), oracle::implies_regular(q, X, q1));
    }
}

TEST(SemanticsProperty, RegularImpliesGeneral)
{
    gen::Gen g(9);
    for (int i = 0; i < 400; ++i) {
        auto X = g.distinct(g.below(2), 1);
        auto q = g.question(3, 1);
        auto q1 = g.question(3, 1);
        if (implies_regular(q, X, q1) && q.arity() > 1) {
            // Singletons are nonempty proper subsets of dQ.
            EXPECT_TRUE(implies_erotetic(q, X, q1));
        }
    }
}
