#include "cli.hpp"
#include "cfseq/serialize.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cfseq;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kDir = CFSEQ_BFILE_DIR;

} // namespace

TEST(Cli, ExitCodesForInvalidInput)
{
    EXPECT_EQ(run({"gen", "--f", "1,0"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"gen", "--f", "2,1"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"gen", "--f", "1,-1"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"gen", "--f", "1,x"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"gen", "--n", "0"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"gen", "--n", "25"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"gen", "--format", "xml"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"nonsense"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"roth", "--delta", "0.6"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"roth", "--range", "8:3"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"asym", "--n", "6", "--k", "9"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"cf", "--value", "1/0"}).code, cli::kInvalidInput);
    EXPECT_EQ(run({"oeis-check"}).code, cli::kInvalidInput);
}

TEST(Cli, HelpIsSuccess)
{
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, GenTextAndCsv)
{
    const Result r = run({"gen", "--f", "1,1", "--n", "6"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("xs: 1, 1, 2, 12, 936, 68408496, 342022190843338960032"), std::string::npos);
    const Result c = run({"gen", "--n", "3", "--format", "csv"});
    EXPECT_EQ(c.out, "n,x,y,z\n0,1,1,2\n1,1,2,3\n2,2,6,\n3,12,,\n");
}

TEST(Cli, GenJsonRoundTrips)
{
    const Result r = run({"gen", "--f", "1,1,0,1", "--n", "7", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["kind"], "sequence_table");
    const SeqTable t = seq_table_from_json(j);
    EXPECT_EQ(t.xs(), generate(make_poly({1, 1, 0, 1}), 7).xs());
}

TEST(Cli, CfOfValueAndPartialSum)
{
    EXPECT_EQ(run({"cf", "--value", "415/93"}).out, "[4; 2, 6, 7]\n");
    const Result s = run({"cf", "--n", "3"});
    EXPECT_EQ(s.code, cli::kOk);
    EXPECT_NE(s.out.find("[1; 1, 1, 2, 2]"), std::string::npos);
    EXPECT_NE(s.out.find("equivalent"), std::string::npos);
    const Result x0 = run({"cf", "--n", "6", "--include-x0", "--format", "json"});
    const json j = json::parse(x0.out);
    EXPECT_EQ(j["a"][0], "2");
    EXPECT_EQ(j["a"].size(), 11u);
    EXPECT_TRUE(j["equivalent"].get<bool>());
}

TEST(Cli, VerifyPassesAndReportsJson)
{
    const Result r = run({"verify", "--f", "1,1,1", "--n", "8"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("\nPASS\n"), std::string::npos);
    const Result j = run({"verify", "--n", "6", "--format", "json", "--include-x0"});
    ASSERT_EQ(j.code, cli::kOk);
    const json parsed = json::parse(j.out);
    EXPECT_EQ(parsed["status"], "pass");
    EXPECT_EQ(parsed["shifted_a"][0], "2");
}

TEST(Cli, AsymAndRoth)
{
    const Result a = run({"asym", "--n", "10", "--digits", "6"});
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_NE(a.out.find("C          = 0.146864"), std::string::npos);
    const Result r = run({"roth", "--range", "3:5", "--format", "csv"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
    const Result j = run({"roth", "--f", "1,1,1", "--range", "3:4", "--delta", "1.0", "--format", "json"});
    EXPECT_EQ(j.code, cli::kOk);
    EXPECT_EQ(json::parse(j.out)["status"], "pass");
}

TEST(Cli, OeisCheckPassesOnVendoredFiles)
{
    const Result r = run({"oeis-check", "--bfile-dir", kDir});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, OeisCheckMismatchAndIoErrors)
{
    const auto tmp = std::filesystem::temp_directory_path() / "cfseq_cli_test";
    std::filesystem::create_directories(tmp);
    {
        std::ofstream bad(tmp / "b112373.txt");
        bad << "0 1\n1 1\n2 2\n3 12\n4 937\n";
    }
    const Result mm = run({"oeis-check", "--a112373", (tmp / "b112373.txt").string()});
    EXPECT_EQ(mm.code, cli::kVerificationFailed);
    EXPECT_NE(mm.out.find("MISMATCH at index 4"), std::string::npos);
    {
        std::ofstream broken(tmp / "broken.txt");
        broken << "0 1\nnot a line\n";
    }
    EXPECT_EQ(run({"oeis-check", "--a112373", (tmp / "broken.txt").string()}).code, cli::kIoError);
    EXPECT_EQ(run({"oeis-check", "--a112373", (tmp / "missing.txt").string()}).code, cli::kIoError);
    std::filesystem::remove_all(tmp);
}

TEST(Cli, ExactDecimalParsing)
{
    EXPECT_EQ(cli::parse_exact_decimal("0.1"), Rational(BigInt(1), BigInt(10)));
    EXPECT_EQ(cli::parse_exact_decimal("1.25"), Rational(BigInt(5), BigInt(4)));
    EXPECT_EQ(cli::parse_exact_decimal("3"), Rational(BigInt(3)));
    EXPECT_EQ(cli::parse_exact_decimal("2/7"), Rational(BigInt(2), BigInt(7)));
    EXPECT_THROW(cli::parse_exact_decimal("abc"), std::invalid_argument);
}
