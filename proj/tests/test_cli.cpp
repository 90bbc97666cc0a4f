#include "lkq/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = lkq::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Parse)
{
    auto r = run({"parse", "?{p, ~~p}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "?{p, ~~p}\n");

    r = run({"parse", "?{p, p}"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("position"), std::string::npos);
}

TEST(Cli, ParseFromStdin)
{
    auto r = run({"parse", "-"}, "p /\\ q\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(p /\\ q)\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"prove", "--emit", "svg", ". | p |- <{}> p"}).code, 2);
}

TEST(Cli, DefeatByEntailedConjunct)
{
    auto r = run({"defeat", ". | p /\\ q |-<{{p}}> q"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("defeated"), std::string::npos);

    r = run({"defeat", "--oracle", "both", ". | p \\/ q |-<{{p}}> q"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("undefeated"), std::string::npos);
}

TEST(Cli, ProveAndCheckRoundTrip)
{
    auto proved = run({"prove", "--emit", "tree-format", ". | p /\\ q |- <{}> q \\/ r"});
    ASSERT_EQ(proved.code, 0) << proved.err;
    auto checked = run({"check", "-"}, proved.out);
    EXPECT_EQ(checked.code, 0) << checked.err;
    EXPECT_NE(checked.out.find("proof"), std::string::npos);
}

TEST(Cli, ProveNotDerivable)
{
    auto r = run({"prove", ". | p |- <{}> q"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("NotDerivable"), std::string::npos);
}

TEST(Cli, ImplyRegular)
{
    EXPECT_EQ(run({"imply", "regular", "--q", "?{p,q}", "--x", "", "--q1", "?{r,s}"}).code, 1);
    EXPECT_EQ(run({"imply", "regular", "--q", "?{p, q \\/ r}", "--q1", "?{p,q,r}"}).code, 0);
}

TEST(Cli, EvokeReportsDisagreementUnderRecordedBackground)
{
    auto r = run({"evoke", "--premises", "p\\/q", "--question", "?{p,q}"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("oracle: evokes"), std::string::npos) << r.out;
}

TEST(Cli, Pmce)
{
    EXPECT_EQ(run({"pmce", "axiom", "|- ?{p \\/ q, ~p}"}).code, 0);
    EXPECT_EQ(run({"pmce", "axiom", "|- ?{p, q}"}).code, 1);
    auto r = run({"pmce", "rule", "R3", "--premise", "|- ?{q -> p, q -> r}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q |- ?{p, r}\n");
}

TEST(Cli, CutelimFromJson)
{
    auto proved = run({"prove", "--emit", "json", ". | p |- <{}> p"});
    ASSERT_EQ(proved.code, 0);
    auto r = run({"cutelim", "-"}, proved.out);
    EXPECT_EQ(r.code, 0) << r.err;
}
