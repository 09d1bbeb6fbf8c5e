#include "minperm/commands.hpp"

#include <sstream>

#include "gtest/gtest.h"

namespace minperm {
namespace {

TEST(ResolveSize, AnyTwoOfThree)
{
    EXPECT_EQ(resolve_size(6, std::nullopt, 2), std::make_pair(6, 2));
    EXPECT_EQ(resolve_size(std::nullopt, 4, 2), std::make_pair(6, 2));
    EXPECT_EQ(resolve_size(6, 4, std::nullopt), std::make_pair(6, 2));
    EXPECT_EQ(resolve_size(6, 4, 2), std::make_pair(6, 2));
    EXPECT_THROW(resolve_size(6, std::nullopt, std::nullopt), usage_error);
    EXPECT_THROW(resolve_size(6, 3, 2), usage_error);
    EXPECT_THROW(resolve_size(6, std::nullopt, 0), usage_error);
    EXPECT_THROW(resolve_size(6, std::nullopt, 7), usage_error);
}

TEST(ParseOptions, MethodsAndFormats)
{
    EXPECT_EQ(parse_methods("det,brute"), (std::vector<std::string>{"det", "brute"}));
    EXPECT_THROW(parse_methods("det,magic"), usage_error);
    EXPECT_THROW(parse_methods(""), usage_error);
    EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
    EXPECT_THROW(parse_format("xml"), usage_error);
}

TEST(CmdCount, DeterminantsAgreeWithBruteForce)
{
    std::ostringstream diag;
    CountRequest req;
    req.n = 6;
    req.k = 2;
    req.methods = {"det", "brute", "tableaux", "closed"};
    auto r = cmd_count(req, diag);
    EXPECT_TRUE(r.agreement);
    EXPECT_EQ(exit_status(r), exit_ok);
    ASSERT_EQ(r.results.size(), 4u);
    for (auto const& row : r.results)
        EXPECT_EQ(row["value"].get<std::string>(), "32");
    EXPECT_EQ(r.results[0]["method"].get<std::string>(), "determinant_sum");
    EXPECT_EQ(r.parameters["d"].get<int>(), 4);
}

TEST(CmdCount, InfeasibleIsZeroWithNote)
{
    std::ostringstream diag;
    CountRequest req;
    req.n = 5;
    req.k = 5;
    auto r = cmd_count(req, diag);
    EXPECT_EQ(r.results[0]["value"].get<std::string>(), "0");
    EXPECT_EQ(exit_status(r), exit_ok);
    EXPECT_NE(diag.str().find("note:"), std::string::npos);
}

TEST(CmdCount, SurjectionsByBruteForce)
{
    std::ostringstream diag;
    CountRequest req;
    req.n = 5;
    req.k = 3;
    req.h = 0;
    req.methods = {"det", "brute"};
    auto r = cmd_count(req, diag);
    EXPECT_TRUE(r.agreement);
    EXPECT_EQ(r.results[1]["value"].get<std::string>(), "150");
}

TEST(CmdCount, ErrorsAreTyped)
{
    std::ostringstream diag;
    CountRequest req;
    req.n = 12;
    req.k = 3;
    req.methods = {"brute"};
    EXPECT_THROW(cmd_count(req, diag), resource_error);
    req.methods = {"closed"};
    req.h = 1;
    EXPECT_THROW(cmd_count(req, diag), usage_error);
    req.h = -1;
    EXPECT_THROW(cmd_count(req, diag), usage_error);
}

TEST(CmdTable, LengthDPlusThree)
{
    std::ostringstream diag;
    TableRequest req;
    req.k = 3;
    req.max_d = 9;
    req.methods = {"det", "closed"};
    auto r = cmd_table(req, diag);
    EXPECT_TRUE(r.agreement);
    std::vector<std::string> got;
    for (auto const& row : r.results)
        got.push_back(row["determinant_sum"].get<std::string>());
    EXPECT_EQ(got, (std::vector<std::string>{"5", "84", "686", "3936", "18387", "75372", "283052"}));
    EXPECT_EQ(r.results.front()["d"].get<int>(), 3);
}

TEST(CmdTable, RectangleMode)
{
    std::ostringstream diag;
    TableRequest req;
    req.max_d = 5;
    req.methods = {"det", "tableaux"};
    auto r = cmd_table(req, diag);
    EXPECT_TRUE(r.agreement);
    std::vector<std::string> got;
    for (auto const& row : r.results)
        got.push_back(row["tableau_oracle"].get<std::string>());
    EXPECT_EQ(got, (std::vector<std::string>{"1", "2", "5", "14", "42"}));
}

TEST(CmdTable, CsvLayout)
{
    std::ostringstream diag;
    TableRequest req;
    req.k = 2;
    req.max_d = 3;
    req.methods = {"det", "closed"};
    auto csv = to_csv(cmd_table(req, diag));
    EXPECT_EQ(csv, "d,n,k,determinant_sum,closed_form,agree\n"
                   "2,4,2,2,2,true\n"
                   "3,5,2,10,10,true\n");
}

TEST(RunReport, JsonRoundtripIsByteIdentical)
{
    std::ostringstream diag;
    TableRequest req;
    req.k = 3;
    req.max_d = 6;
    req.methods = {"det", "closed"};
    auto const text = cmd_table(req, diag).dump();
    auto const again = RunReport::from_json(ordered_json::parse(text)).dump();
    EXPECT_EQ(text, again);

    CountRequest creq;
    creq.d = 4;
    creq.k = 2;
    auto const ctext = cmd_count(creq, diag).dump();
    EXPECT_EQ(RunReport::from_json(ordered_json::parse(ctext)).dump(), ctext);
}

TEST(CmdVerify, SmallSuitePasses)
{
    std::ostringstream diag;
    VerifyRequest req;
    req.threads = 4;
    auto r = cmd_verify(req, diag);
    EXPECT_TRUE(r.agreement) << diag.str();
    EXPECT_EQ(exit_status(r), exit_ok);
    EXPECT_GE(r.results.size(), 20u);
    for (auto const& row : r.results)
        EXPECT_TRUE(row["passed"].get<bool>()) << row.dump();
    auto const text = r.dump();
    EXPECT_EQ(RunReport::from_json(ordered_json::parse(text)).dump(), text);
}

TEST(CmdVerify, InjectedFaultIsCaught)
{
    std::ostringstream diag;
    VerifyRequest req;
    req.threads = 4;
    req.inject_fault = "closed_formula";
    auto r = cmd_verify(req, diag);
    EXPECT_FALSE(r.agreement);
    EXPECT_EQ(exit_status(r), exit_disagreement);
    EXPECT_NE(diag.str().find("closed_formula"), std::string::npos);
    req.inject_fault = "nothing";
    EXPECT_THROW(cmd_verify(req, diag), usage_error);
    VerifyRequest bad;
    bad.suite = "huge";
    EXPECT_THROW(cmd_verify(bad, diag), std::invalid_argument);
}

} // namespace
} // namespace minperm
