#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hypermap");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = hypermap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool hasLine(const std::string& text, const std::string& wanted)
{
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::istringstream words(line);
        std::string w;
        std::string joined;
        while (words >> w) {
            joined += (joined.empty() ? "" : " ") + w;
        }
        if (joined == wanted) {
            return true;
        }
    }
    return false;
}

int countPrefix(const std::string& text, const std::string& prefix)
{
    std::istringstream in(text);
    int n = 0;
    for (std::string line; std::getline(in, line);) {
        n += line.rfind(prefix, 0) == 0;
    }
    return n;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() /
               ("hypermap-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_ / "cache");
        ::setenv("HYPERMAP_CACHE_DIR", (dir_ / "cache").c_str(), 1);
    }
    void TearDown() override
    {
        ::unsetenv("HYPERMAP_CACHE_DIR");
        std::filesystem::remove_all(dir_);
    }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(CliTest, RootedGenusOne)
{
    const Result r = run({"rooted", "--genus", "1", "--max-darts", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(hasLine(r.out, "4 1 2 1 5"));
    EXPECT_TRUE(hasLine(r.out, "4 sum 15"));
}

TEST_F(CliTest, RootedSingleDart)
{
    const Result r = run({"rooted", "--genus", "0", "--max-darts", "1", "--no-cache"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "   d   v   e   f   h\n   1   1   1   1   1\n\n   1         sum   1\n");
}

TEST_F(CliTest, RootedEmptyTable)
{
    const Result r = run({"rooted", "--genus", "7", "--max-darts", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "   d   v   e   f   h\n");
}

TEST_F(CliTest, SeqEngineMatchesKz)
{
    const Result kz = run({"rooted", "--genus", "1", "--max-darts", "8", "--no-cache"});
    const Result seq = run({"rooted", "--genus", "1", "--max-darts", "8", "--engine", "seq", "--no-cache"});
    EXPECT_EQ(seq.code, 0) << seq.err;
    EXPECT_EQ(seq.out, kz.out);
}

TEST_F(CliTest, SeqEngineIsCapped)
{
    const Result r = run({"rooted", "--genus", "0", "--max-darts", "12", "--engine", "seq"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("capped"), std::string::npos);
    const Result raised = run({"rooted", "--genus", "0", "--max-darts", "11", "--engine", "seq", "--seq-cap", "11"});
    EXPECT_EQ(raised.code, 0);
}

TEST_F(CliTest, Unrooted)
{
    Result r = run({"unrooted", "--genus", "0", "--max-darts", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(hasLine(r.out, "d v e f H"));
    EXPECT_TRUE(hasLine(r.out, "4 2 2 2 5"));
    EXPECT_TRUE(hasLine(r.out, "4 sum 20"));
    r = run({"unrooted", "--genus", "6", "--max-darts", "13"});
    EXPECT_TRUE(hasLine(r.out, "13 1 1 1 5263764"));
    EXPECT_TRUE(hasLine(r.out, "13 sum 5263764"));
    r = run({"unrooted", "--genus", "2", "--max-darts", "6"});
    EXPECT_TRUE(hasLine(r.out, "6 sum 48"));
}

TEST_F(CliTest, JsonCountsAreStrings)
{
    const Result r = run({"rooted", "--genus", "6", "--max-darts", "14", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"count\": \"2699672832\""), std::string::npos);
    EXPECT_NE(r.out.find("\"hyperedges\": 1"), std::string::npos);
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"rooted", "--genus", "1"}).code, 2);
    EXPECT_EQ(run({"rooted", "--genus", "1", "--max-darts", "4", "--engine", "fast"}).code, 2);
    EXPECT_EQ(run({"rooted", "--genus", "1", "--max-darts", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"rooted", "--genus", "-1", "--max-darts", "4"}).code, 2);
    EXPECT_EQ(run({"rooted", "--genus", "1", "--max-darts", "40"}).code, 2);
    EXPECT_EQ(run({"series", "--genus", "7", "--max-darts", "20"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, DeepRaisesBounds)
{
    const Result r = run({"rooted", "--genus", "13", "--max-darts", "28", "--deep", "--no-cache"});
    EXPECT_EQ(r.code, 0) << r.err;
    // one vertex, one hyperedge, one face: 2 (t-1)! / (t+1) rootings of
    // factorizations of a t-cycle into two t-cycles
    EXPECT_TRUE(hasLine(r.out, "27 1 1 1 28806532937614688256000000"));
}

TEST_F(CliTest, Series)
{
    Result r = run({"series", "--genus", "1", "--max-darts", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(hasLine(r.out, "5 165"));
    const Result t = run({"series", "--genus", "1", "--max-darts", "5", "--param", "t"});
    EXPECT_EQ(t.out, r.out);
}

TEST_F(CliTest, VerifyFixturesPass)
{
    const Result r = run({"verify", "--fixtures", HYPERMAP_FIXTURES_DIR});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(countPrefix(r.out, "FAIL"), 0);
    EXPECT_NE(r.out.find("verified 2800 rows in 14 files, 0 failed"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyReportsExactlyOnePerturbedRow)
{
    const auto fixtures = dir_ / "fixtures";
    std::filesystem::create_directories(fixtures);
    for (const auto& e : std::filesystem::directory_iterator(HYPERMAP_FIXTURES_DIR)) {
        std::filesystem::copy_file(e.path(), fixtures / e.path().filename());
    }
    const auto target = fixtures / "unrooted-genus-2.txt";
    std::ifstream in(target);
    std::stringstream s;
    s << in.rdbuf();
    in.close();
    std::string text = s.str();
    const std::string row = "   8   2   2   2   2664";
    const auto at = text.find(row);
    ASSERT_NE(at, std::string::npos);
    text.replace(at, row.size(), "   8   2   2   2   2665");
    std::ofstream(target) << text;

    const Result r = run({"verify", "--fixtures", fixtures.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(countPrefix(r.out, "FAIL"), 1) << r.out;
    EXPECT_NE(r.out.find("expected 2665, computed 2664"), std::string::npos);
    EXPECT_NE(r.out.find("unrooted-genus-2.txt:"), std::string::npos);
}

TEST_F(CliTest, VerifyEmptyDirectoryIsAnError)
{
    const auto empty = dir_ / "empty";
    std::filesystem::create_directories(empty);
    const Result r = run({"verify", "--fixtures", empty.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"verify", "--fixtures", (dir_ / "missing").string()}).code, 2);
}

TEST_F(CliTest, VerifyParseErrorNamesFileAndLine)
{
    const auto fixtures = dir_ / "broken";
    std::filesystem::create_directories(fixtures);
    std::ofstream(fixtures / "rooted-genus-0.txt") << "   d   v   e   f   h\n   1   1   1   1   1\n   2   9   9   9   1\n";
    const Result r = run({"verify", "--fixtures", fixtures.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("rooted-genus-0.txt:3"), std::string::npos) << r.err;
}

TEST_F(CliTest, CrosscheckDefaultsPass)
{
    const Result r = run({"crosscheck"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(countPrefix(r.out, "ok"), 6) << r.out;
}

TEST_F(CliTest, CrosscheckSeriesOnly)
{
    const Result r = run({"crosscheck", "--genus", "6", "--max-darts", "14", "--series-only"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(countPrefix(r.out, "FAIL"), 0);
    EXPECT_EQ(r.out.find("seq"), std::string::npos);
}

TEST_F(CliTest, CrosscheckCapsSeqGenusWithWarning)
{
    const Result r = run({"crosscheck", "--genus", "5", "--max-darts", "11"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, CacheIsWrittenAndReused)
{
    EXPECT_EQ(run({"rooted", "--genus", "2", "--max-darts", "9"}).code, 0);
    const auto file = dir_ / "cache" / "kz-g2-d9.txt";
    ASSERT_TRUE(std::filesystem::exists(file));

    // A cached table is served as stored: tamper with one value and read it back.
    std::ifstream in(file);
    std::stringstream s;
    s << in.rdbuf();
    in.close();
    std::string text = s.str();
    const auto at = text.find("2 5 1 1 8\n");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 10, "2 5 1 1 9\n");
    std::ofstream(file) << text;
    EXPECT_TRUE(hasLine(run({"rooted", "--genus", "2", "--max-darts", "9"}).out, "5 1 1 1 9"));
    EXPECT_TRUE(hasLine(run({"rooted", "--genus", "2", "--max-darts", "9", "--no-cache"}).out, "5 1 1 1 8"));

    const Result info = run({"cache-info"});
    EXPECT_EQ(info.code, 0);
    EXPECT_NE(info.out.find("kz-g2-d9.txt: engine kz, genus 2, darts <= 9"), std::string::npos) << info.out;
}

TEST_F(CliTest, NoCacheWritesNothing)
{
    EXPECT_EQ(run({"unrooted", "--genus", "1", "--max-darts", "8", "--no-cache"}).code, 0);
    EXPECT_TRUE(std::filesystem::is_empty(dir_ / "cache"));
    EXPECT_NE(run({"cache-info"}).out.find("no cache files"), std::string::npos);
}
