#include "hypermap/table_io.hpp"

#include "hypermap/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include <unistd.h>

namespace hypermap {

namespace {

std::string padLeft(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

std::optional<int> parseInt(std::string_view s)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& what)
{
    throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::string renderTable(const CountTable& table, int genus, int maxDarts, TableKind kind)
{
    std::string out = "   d   v   e   f   ";
    out += kind == TableKind::Rooted ? "h\n" : "H\n";
    bool first = true;
    for (int d = 0; d <= maxDarts; ++d) {
        auto rows = table.slice(genus, d);
        if (rows.empty()) {
            continue;
        }
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            const int fa = a.first.faces();
            const int fb = b.first.faces();
            return fa != fb ? fa > fb : a.first.vertices < b.first.vertices;
        });
        if (!first) {
            out += '\n';
        }
        first = false;
        BigInt sum = 0;
        const std::string ds = padLeft(std::to_string(d), 4);
        for (const auto& [key, count] : rows) {
            out += ds + padLeft(std::to_string(key.vertices), 4) + padLeft(std::to_string(key.hyperedges), 4) +
                   padLeft(std::to_string(key.faces()), 4) + "   " + to_decimal(count) + '\n';
            sum += count;
        }
        out += '\n' + ds + "         sum   " + to_decimal(sum) + '\n';
    }
    return out;
}

int Fixture::maxDarts() const
{
    int m = 0;
    for (const FixtureRow& r : rows) {
        m = std::max(m, r.darts);
    }
    return m;
}

Fixture parseFixture(std::istream& in, const std::string& name)
{
    Fixture fx;
    fx.name = name;
    std::optional<TableKind> kind;
    std::optional<int> genus;

    static const std::regex genusInName(R"(genus-(\d+))");
    std::smatch m;
    if (std::regex_search(name, m, genusInName)) {
        genus = parseInt(m[1].str());
    }

    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        if (text[0] == '#') {
            const auto toks = tokens(text.substr(1));
            if (toks.size() == 2 && toks[0] == "kind:") {
                if (toks[1] == "rooted") {
                    kind = TableKind::Rooted;
                } else if (toks[1] == "unrooted") {
                    kind = TableKind::Unrooted;
                } else {
                    fail(name, lineNo, "unknown kind '" + toks[1] + "'");
                }
            } else if (toks.size() == 2 && toks[0] == "genus:") {
                genus = parseInt(toks[1]);
                if (!genus || *genus < 0) {
                    fail(name, lineNo, "bad genus '" + toks[1] + "'");
                }
            }
            continue;
        }
        const auto toks = tokens(text);
        if (toks.size() == 5 && toks[0] == "d" && toks[1] == "v" && toks[2] == "e" && toks[3] == "f") {
            const TableKind headerKind = toks[4] == "h"   ? TableKind::Rooted
                                         : toks[4] == "H" ? TableKind::Unrooted
                                                          : (fail(name, lineNo, "unknown count column '" + toks[4] + "'"),
                                                             TableKind::Rooted);
            if (kind && *kind != headerKind) {
                fail(name, lineNo, "header column contradicts the declared kind");
            }
            kind = headerKind;
            continue;
        }
        if (!genus) {
            fail(name, lineNo, "genus unknown; add '# genus: N' or name the file genus-N");
        }
        FixtureRow row;
        row.line = lineNo;
        if (toks.size() == 3 && toks[1] == "sum") {
            auto d = parseInt(toks[0]);
            if (!d || *d < 0 || !parse_natural(toks[2], row.count)) {
                fail(name, lineNo, "malformed sum row");
            }
            row.darts = *d;
            row.isSum = true;
        } else if (toks.size() == 5) {
            auto d = parseInt(toks[0]);
            auto v = parseInt(toks[1]);
            auto e = parseInt(toks[2]);
            auto f = parseInt(toks[3]);
            if (!d || !v || !e || !f || !parse_natural(toks[4], row.count)) {
                fail(name, lineNo, "malformed row");
            }
            if (!validateHypermapKey(*genus, *d, *v, *e, *f)) {
                fail(name, lineNo, "row violates the genus relation for genus " + std::to_string(*genus));
            }
            row.darts = *d;
            row.vertices = *v;
            row.hyperedges = *e;
            row.faces = *f;
        } else {
            fail(name, lineNo, "unrecognized line '" + text + "'");
        }
        fx.rows.push_back(std::move(row));
    }
    if (!kind) {
        fail(name, lineNo, "cannot tell rooted from unrooted; no header or '# kind:' line");
    }
    if (!genus) {
        fail(name, lineNo, "genus unknown");
    }
    fx.kind = *kind;
    fx.genus = *genus;
    return fx;
}

Fixture loadFixture(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string() + ": cannot open");
    }
    return parseFixture(in, path.string());
}

std::vector<std::filesystem::path> fixtureFiles(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            out.push_back(entry.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CountTable tableFromFixture(const Fixture& fixture)
{
    CountTable table(TableMeta{"fixture", fixture.maxDarts(), fixture.genus});
    for (const FixtureRow& r : fixture.rows) {
        if (!r.isSum) {
            table.add(HypermapKey{fixture.genus, r.darts, r.vertices, r.hyperedges}, r.count);
        }
    }
    return table;
}

// ---------------------------------------------------------------- cache

void writeCacheStream(const CountTable& table, std::ostream& out)
{
    const TableMeta& meta = table.meta();
    out << "hypermap-cache " << kCacheFormatVersion << '\n'
        << "engine " << meta.engine << '\n'
        << "max-genus " << meta.maxGenus << '\n'
        << "max-darts " << meta.maxDarts << '\n'
        << "entries " << table.size() << '\n';
    for (const auto& [key, count] : table.entries()) {
        out << key.genus << ' ' << key.darts << ' ' << key.vertices << ' ' << key.hyperedges << ' '
            << to_decimal(count) << '\n';
    }
}

CountTable readCacheStream(std::istream& in, const std::string& name)
{
    std::string line;
    int lineNo = 0;
    auto header = [&](const std::string& field) {
        ++lineNo;
        if (!std::getline(in, line)) {
            fail(name, lineNo, "truncated header");
        }
        const auto toks = tokens(line);
        if (toks.size() != 2 || toks[0] != field) {
            fail(name, lineNo, "expected '" + field + "'");
        }
        return toks[1];
    };

    const auto version = parseInt(header("hypermap-cache"));
    if (!version || *version != kCacheFormatVersion) {
        fail(name, lineNo, "unsupported cache format version");
    }
    TableMeta meta;
    meta.engine = header("engine");
    const auto g = parseInt(header("max-genus"));
    const auto d = parseInt(header("max-darts"));
    const auto n = parseInt(header("entries"));
    if (!g || !d || !n || *n < 0) {
        fail(name, lineNo, "bad bounds in header");
    }
    meta.maxGenus = *g;
    meta.maxDarts = *d;

    CountTable table(meta);
    while (std::getline(in, line)) {
        ++lineNo;
        const auto toks = tokens(line);
        if (toks.empty()) {
            continue;
        }
        BigInt count;
        std::optional<int> f[4];
        if (toks.size() == 5) {
            for (int i = 0; i < 4; ++i) {
                f[i] = parseInt(toks[i]);
            }
        }
        if (toks.size() != 5 || !f[0] || !f[1] || !f[2] || !f[3] || !parse_natural(toks[4], count) || count == 0) {
            fail(name, lineNo, "malformed entry");
        }
        const HypermapKey key{*f[0], *f[1], *f[2], *f[3]};
        if (!key.valid() || table.contains(key)) {
            fail(name, lineNo, "invalid or repeated key");
        }
        table.add(key, count);
    }
    if (static_cast<int>(table.size()) != *n) {
        fail(name, lineNo, "entry count does not match header");
    }
    return table;
}

void writeCacheFile(const CountTable& table, const std::filesystem::path& path)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw CensusError("cannot write " + tmp.string());
        }
        writeCacheStream(table, out);
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw CensusError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

CountTable readCacheFile(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string() + ": cannot open");
    }
    return readCacheStream(in, path.string());
}

std::filesystem::path cacheDirectory()
{
    if (const char* dir = std::getenv("HYPERMAP_CACHE_DIR"); dir && *dir) {
        return dir;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "hypermap";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "hypermap";
    }
    return std::filesystem::temp_directory_path() / "hypermap-cache";
}

std::string cacheFileName(const TableMeta& meta)
{
    return meta.engine + "-g" + std::to_string(meta.maxGenus) + "-d" + std::to_string(meta.maxDarts) + ".txt";
}

} // namespace hypermap
