#include "hypermap/errors.hpp"
#include "hypermap/kz.hpp"
#include "hypermap/orbifold.hpp"
#include "hypermap/table_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace hypermap;

namespace {

std::filesystem::path fixturesDir()
{
    return HYPERMAP_FIXTURES_DIR;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Drops comment lines and collapses runs of blanks.
std::string normalize(const std::string& text)
{
    std::istringstream in(text);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        std::istringstream words(line);
        std::string w;
        std::string joined;
        while (words >> w) {
            joined += (joined.empty() ? "" : " ") + w;
        }
        out += joined + '\n';
    }
    return out;
}

class TempDir {
public:
    TempDir()
    {
        path_ = std::filesystem::temp_directory_path() /
                ("hypermap-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

Fixture parse(const std::string& text, const std::string& name = "genus-0.txt")
{
    std::istringstream in(text);
    return parseFixture(in, name);
}

} // namespace

TEST(Render, RootedLayoutMatchesFixtures)
{
    const KzTable kz = KzTable::fill(6, 14);
    for (int g = 0; g <= 6; ++g) {
        const auto path = fixturesDir() / ("rooted-genus-" + std::to_string(g) + ".txt");
        EXPECT_EQ(normalize(renderTable(kz.toCountTable(g), g, 14, TableKind::Rooted)), normalize(slurp(path)))
            << path;
    }
}

TEST(Render, UnrootedLayoutMatchesFixtures)
{
    const KzTable kz = KzTable::fill(6, 14);
    for (int g = 0; g <= 6; ++g) {
        const auto path = fixturesDir() / ("unrooted-genus-" + std::to_string(g) + ".txt");
        EXPECT_EQ(normalize(renderTable(sensedTable(g, 14, kz), g, 14, TableKind::Unrooted)), normalize(slurp(path)))
            << path;
    }
}

TEST(Render, EmptyTableIsHeaderOnly)
{
    const KzTable kz = KzTable::fill(7, 3);
    EXPECT_EQ(renderTable(kz.toCountTable(7), 7, 3, TableKind::Rooted), "   d   v   e   f   h\n");
}

TEST(Render, ParseRoundTrip)
{
    const KzTable kz = KzTable::fill(3, 12);
    for (int g = 0; g <= 3; ++g) {
        const CountTable table = kz.toCountTable(g);
        const Fixture fx = parse(renderTable(table, g, 12, TableKind::Rooted), "genus-" + std::to_string(g));
        EXPECT_EQ(fx.genus, g);
        EXPECT_EQ(fx.kind, TableKind::Rooted);
        EXPECT_TRUE(tableFromFixture(fx).sameCounts(table));
        for (const FixtureRow& r : fx.rows) {
            if (r.isSum) {
                EXPECT_EQ(r.count, table.total(g, r.darts));
            }
        }
    }
}

TEST(Parse, AllFixturesLoad)
{
    const auto files = fixtureFiles(fixturesDir());
    ASSERT_EQ(files.size(), 14u);
    int rooted = 0;
    for (const auto& f : files) {
        const Fixture fx = loadFixture(f);
        EXPECT_EQ(fx.maxDarts(), 14);
        rooted += fx.kind == TableKind::Rooted;
    }
    EXPECT_EQ(rooted, 7);
}

TEST(Parse, KindAndGenusFromHeaderAndName)
{
    const Fixture fx = parse("   d   v   e   f   H\n   3   1   1   1   1\n\n   3         sum   1\n", "x/genus-1.txt");
    EXPECT_EQ(fx.kind, TableKind::Unrooted);
    EXPECT_EQ(fx.genus, 1);
    ASSERT_EQ(fx.rows.size(), 2u);
    EXPECT_TRUE(fx.rows[1].isSum);
    EXPECT_EQ(fx.rows[1].line, 4);
}

TEST(Parse, CommentsOverrideFileName)
{
    const Fixture fx = parse("# kind: unrooted\n# genus: 1\n   3   1   1   1   1\n", "genus-4.txt");
    EXPECT_EQ(fx.genus, 1);
    EXPECT_EQ(fx.kind, TableKind::Unrooted);
}

TEST(Parse, ErrorsNameFileAndLine)
{
    try {
        parse("   d   v   e   f   h\n   4   2   2   2   17\n   4   2   2   3   1\n", "bad.txt");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.txt"), std::string::npos);
        // genus unknown for this name: reported at the first data row
        EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos);
    }
    try {
        parse("# genus: 0\n   d   v   e   f   h\n   4   2   2   2   17\n   4   2   2   3   1\n", "bad.txt");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.txt:4"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse("   d   v   e   f   h\n   4   2   x   2   17\n"), ParseError);
    EXPECT_THROW(parse("   d   v   e   f   h\n   4   2   2   2   -17\n"), ParseError);
    EXPECT_THROW(parse("   4   2   2   2   17\n"), ParseError); // kind unknown
    EXPECT_THROW(parse("# kind: rooted\n   d   v   e   f   H\n"), ParseError);
}

TEST(Cache, StreamRoundTrip)
{
    const KzTable kz = KzTable::fill(4, 13);
    CountTable table = kz.toCountTable(4);
    table.meta() = TableMeta{"kz", 13, 4};
    std::stringstream buf;
    writeCacheStream(table, buf);
    const CountTable back = readCacheStream(buf, "mem");
    EXPECT_TRUE(back.sameCounts(table));
    EXPECT_EQ(back.meta(), table.meta());
    for (const auto& [key, n] : table.entries()) {
        EXPECT_EQ(back.at(key), n);
    }
}

TEST(Cache, FileRoundTripIsAtomic)
{
    TempDir dir;
    const KzTable kz = KzTable::fill(2, 10);
    CountTable table = kz.toCountTable(2);
    table.meta() = TableMeta{"kz", 10, 2};
    const auto path = dir.path() / "sub" / cacheFileName(table.meta());
    writeCacheFile(table, path);
    writeCacheFile(table, path); // overwrite in place
    const CountTable back = readCacheFile(path);
    EXPECT_TRUE(back.sameCounts(table));
    int files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(path.parent_path())) {
        ++files;
    }
    EXPECT_EQ(files, 1);
    EXPECT_EQ(path.filename().string(), "kz-g2-d10.txt");
}

TEST(Cache, RejectsDamagedFiles)
{
    std::istringstream wrongVersion("hypermap-cache 99\nengine kz\nmax-genus 0\nmax-darts 1\nentries 0\n");
    EXPECT_THROW(readCacheStream(wrongVersion, "x"), ParseError);
    std::istringstream truncated("hypermap-cache 1\nengine kz\nmax-genus 0\nmax-darts 1\nentries 2\n0 1 1 1 1\n");
    EXPECT_THROW(readCacheStream(truncated, "x"), ParseError);
    std::istringstream invalid("hypermap-cache 1\nengine kz\nmax-genus 0\nmax-darts 1\nentries 1\n0 1 3 3 1\n");
    EXPECT_THROW(readCacheStream(invalid, "x"), ParseError);
}

TEST(Cache, DirectoryOverride)
{
    const char* old = std::getenv("HYPERMAP_CACHE_DIR");
    const std::string saved = old ? old : "";
    ::setenv("HYPERMAP_CACHE_DIR", "/tmp/somewhere-else", 1);
    EXPECT_EQ(cacheDirectory(), std::filesystem::path("/tmp/somewhere-else"));
    if (old) {
        ::setenv("HYPERMAP_CACHE_DIR", saved.c_str(), 1);
    } else {
        ::unsetenv("HYPERMAP_CACHE_DIR");
    }
}
