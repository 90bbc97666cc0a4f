#include "lkq/formula.hpp"

#include "support/gen.hpp"

#include <gtest/gtest.h>

using namespace lkq;

TEST(Formula, RendersCanonically)
{
    EXPECT_EQ(render_formula(parse_formula("p -> q /\\ ~r")), "(p -> (q /\\ ~r))");
    EXPECT_EQ(render_formula(parse_formula("~(p \\/ q) -> ~~r")), "(~(p \\/ q) -> ~~r)");
    EXPECT_EQ(render_formula(parse_formula("?{p, q /\\ r}")), "?{p, (q /\\ r)}");
}

TEST(Formula, ImplicationIsRightAssociative)
{
    EXPECT_EQ(parse_dwff("p -> q -> r"), parse_dwff("p -> (q -> r)"));
}

TEST(Formula, QuestionKeepsOrder)
{
    auto q = parse_question("?{q, p}");
    ASSERT_EQ(q.arity(), 2u);
    EXPECT_EQ(q.answers()[0].text(), "q");
    EXPECT_NE(q, parse_question("?{p, q}"));
}

TEST(Formula, ParseErrors)
{
    auto kind_of = [](const char* s) {
        try {
            parse_formula(s);
        } catch (const ParseError& e) {
            return e.kind();
        }
        ADD_FAILURE() << s << " parsed";
        return ParseErrorKind::Syntax;
    };
    EXPECT_EQ(kind_of("p /\\"), ParseErrorKind::Syntax);
    EXPECT_EQ(kind_of("?{p}"), ParseErrorKind::TooFewAnswers);
    EXPECT_EQ(kind_of("?{p, p}"), ParseErrorKind::EquiformAnswers);
    EXPECT_EQ(kind_of("?{p, ?{q, r}}"), ParseErrorKind::NestedQuestion);
    EXPECT_EQ(kind_of("p q"), ParseErrorKind::Syntax);
}

TEST(Formula, ErrorPosition)
{
    try {
        parse_formula("p /\\");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Formula, Subformulas)
{
    auto subs = subformulas(parse_formula("?{p, q \\/ r}"));
    std::set<std::string> texts;
    for (const auto& f : subs) texts.insert(f.text());
    EXPECT_EQ(texts, (std::set<std::string>{"?{p, (q \\/ r)}", "p", "(q \\/ r)", "q", "r"}));
}

TEST(Formula, DeclarativeDisjunction)
{
    EXPECT_EQ(declarative_disjunction(parse_question("?{p, q, r}")).text(), "((p \\/ q) \\/ r)");
}

TEST(FormulaProperty, RenderParseRoundTrip)
{
    gen::Gen g(7, 4);
    for (int i = 0; i < 500; ++i) {
        auto d = g.dwff(4);
        EXPECT_EQ(parse_dwff(d.text()), d) << d.text();
        auto q = g.question(4, 2);
        EXPECT_EQ(parse_question(q.text()), q) << q.text();
    }
}

TEST(FormulaProperty, SizeCountsNodes)
{
    gen::Gen g(11);
    for (int i = 0; i < 300; ++i) {
        auto a = g.dwff(3);
        auto b = g.dwff(3);
        EXPECT_EQ(Dwff::conj(a, b).size(), a.size() + b.size() + 1);
        EXPECT_EQ(Dwff::neg(a).size(), a.size() + 1);
    }
}
