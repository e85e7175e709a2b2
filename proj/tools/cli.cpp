#include "cli.hpp"

#include "hypermap/errors.hpp"
#include "hypermap/keys.hpp"
#include "hypermap/kz.hpp"
#include "hypermap/orbifold.hpp"
#include "hypermap/sequenced.hpp"
#include "hypermap/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace hypermap::cli {

namespace {

void checkBounds(int genus, int maxDarts, bool deep)
{
    const int gCap = deep ? kDeepMaxGenus : kNormalMaxGenus;
    const int dCap = deep ? kDeepMaxDarts : kNormalMaxDarts;
    if (genus < 0 || maxDarts < 1) {
        throw UsageError("need --genus >= 0 and --max-darts >= 1");
    }
    if (genus > gCap || maxDarts > dCap) {
        throw UsageError("bounds exceed genus " + std::to_string(gCap) + ", darts " + std::to_string(dCap) +
                         (deep ? "" : "; pass --deep for larger runs"));
    }
}

CountTable seqRootedTable(int genus, int maxDarts)
{
    SequencedHypermapCounter seq;
    CountTable table(TableMeta{"seq", maxDarts, genus});
    for (int t = 1; t <= maxDarts; ++t) {
        for (int e = 1; e <= t; ++e) {
            for (int f = 1; f <= t; ++f) {
                const int v = t + 2 * (1 - genus) - e - f;
                if (v < 1) {
                    continue;
                }
                table.add(HypermapKey{genus, t, v, e}, seq.rootedFromSequenced(genus, t, f, e));
            }
        }
    }
    return table;
}

CountTable cached(const TableMeta& meta, const CacheOptions& cache, std::ostream& err,
                  const std::function<CountTable()>& compute)
{
    if (!cache.enabled) {
        return compute();
    }
    const std::filesystem::path path = cache.directory.value_or(cacheDirectory()) / cacheFileName(meta);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        try {
            CountTable table = readCacheFile(path);
            if (table.meta() == meta) {
                return table;
            }
            err << "warning: " << path.string() << " holds a different table; recomputing\n";
        } catch (const CensusError& e) {
            err << "warning: ignoring unreadable cache: " << e.what() << '\n';
        }
    }
    CountTable table = compute();
    try {
        writeCacheFile(table, path);
    } catch (const std::exception& e) {
        err << "warning: cache not written: " << e.what() << '\n';
    }
    return table;
}

template <class Row>
void sortTableOrder(std::vector<Row>& rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        const int fa = a.first.faces();
        const int fb = b.first.faces();
        return fa != fb ? fa > fb : a.first.vertices < b.first.vertices;
    });
}

} // namespace

CountTable rootedTable(int genus, int maxDarts, const std::string& engine, int seqCap, const CacheOptions& cache,
                       std::ostream& err)
{
    if (engine == "seq") {
        if (maxDarts > seqCap) {
            throw UsageError("the seq engine is capped at " + std::to_string(seqCap) +
                             " darts; raise --seq-cap to go further");
        }
        return cached(TableMeta{"seq", maxDarts, genus}, cache, err, [&] { return seqRootedTable(genus, maxDarts); });
    }
    if (engine != "kz") {
        throw UsageError("unknown engine '" + engine + "'");
    }
    return cached(TableMeta{"kz", maxDarts, genus}, cache, err, [&] {
        CountTable t = KzTable::fill(genus, maxDarts).toCountTable(genus);
        t.meta() = TableMeta{"kz", maxDarts, genus};
        return t;
    });
}

CountTable unrootedTable(int genus, int maxDarts, const CacheOptions& cache, std::ostream& err)
{
    return cached(TableMeta{"orbifold", maxDarts, genus}, cache, err, [&] {
        CountTable t = sensedTable(genus, maxDarts, KzTable::fill(genus, maxDarts));
        t.meta() = TableMeta{"orbifold", maxDarts, genus};
        return t;
    });
}

std::string renderJson(const CountTable& table, int genus, int maxDarts)
{
    nlohmann::json out = nlohmann::json::array();
    for (int d = 0; d <= maxDarts; ++d) {
        auto rows = table.slice(genus, d);
        sortTableOrder(rows);
        for (const auto& [key, count] : rows) {
            out.push_back({{"genus", key.genus},
                           {"darts", key.darts},
                           {"vertices", key.vertices},
                           {"hyperedges", key.hyperedges},
                           {"faces", key.faces()},
                           {"count", to_decimal(count)}});
        }
    }
    return out.dump(2) + '\n';
}

VerifyReport verifyFixtures(const std::filesystem::path& dir, bool verbose, std::ostream& out)
{
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw UsageError("not a directory: " + dir.string());
    }
    const auto files = fixtureFiles(dir);
    if (files.empty()) {
        throw UsageError("no fixture files (*.txt) in " + dir.string());
    }
    std::vector<Fixture> fixtures;
    int maxGenus = 0;
    int maxDarts = 1;
    for (const auto& path : files) {
        fixtures.push_back(loadFixture(path));
        maxGenus = std::max(maxGenus, fixtures.back().genus);
        maxDarts = std::max(maxDarts, fixtures.back().maxDarts());
    }
    checkBounds(maxGenus, maxDarts, true);

    const KzTable kz = KzTable::fill(maxGenus, maxDarts);
    std::map<int, CountTable> sensed;

    VerifyReport report;
    for (const Fixture& fx : fixtures) {
        ++report.files;
        int fileFailures = 0;
        const CountTable* unrooted = nullptr;
        if (fx.kind == TableKind::Unrooted) {
            auto it = sensed.find(fx.genus);
            if (it == sensed.end()) {
                it = sensed.emplace(fx.genus, sensedTable(fx.genus, maxDarts, kz)).first;
            }
            unrooted = &it->second;
        }
        for (const FixtureRow& row : fx.rows) {
            ++report.rows;
            BigInt computed;
            std::string label;
            if (row.isSum) {
                computed = unrooted ? unrooted->total(fx.genus, row.darts) : kz.rootedTotal(fx.genus, row.darts);
                label = std::to_string(row.darts) + " sum";
            } else {
                computed = unrooted ? unrooted->at(HypermapKey{fx.genus, row.darts, row.vertices, row.hyperedges})
                                    : kz.rootedCount(fx.genus, row.darts, row.vertices, row.hyperedges, row.faces);
                label = std::to_string(row.darts) + ' ' + std::to_string(row.vertices) + ' ' +
                        std::to_string(row.hyperedges) + ' ' + std::to_string(row.faces);
            }
            const std::string where = fx.name + ":" + std::to_string(row.line);
            if (computed != row.count) {
                ++fileFailures;
                out << "FAIL " << where << "  " << label << ": expected " << to_decimal(row.count) << ", computed "
                    << to_decimal(computed) << '\n';
            } else if (verbose) {
                out << "ok   " << where << "  " << label << ' ' << to_decimal(computed) << '\n';
            }
        }
        report.failures += fileFailures;
        out << fx.name << ": " << fx.rows.size() << " rows, " << fileFailures << " failed\n";
    }
    out << "verified " << report.rows << " rows in " << report.files << " files, " << report.failures
        << " failed\n";
    return report;
}

int crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err)
{
    int failed = 0;
    auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        try {
            const std::string problem = body();
            if (problem.empty()) {
                out << "ok   " << name << '\n';
            } else {
                ++failed;
                out << "FAIL " << name << ": " << problem << '\n';
            }
        } catch (const CensusError& e) {
            ++failed;
            out << "FAIL " << name << ": " << e.what() << '\n';
        }
    };

    const int seriesGenus = std::min(options.maxGenus, kMaxUnivariateGenus);
    const int triGenus = std::min(options.maxGenus, kMaxTrivariateGenus);
    const int triDegree = std::min(12, options.maxDarts + 2);
    int kzDarts = options.maxDarts;
    if (triGenus >= 0) {
        kzDarts = std::max(kzDarts, triDegree - 2 + 2 * triGenus);
    }
    const KzTable kz = KzTable::fill(options.maxGenus, kzDarts);

    if (!options.seriesOnly) {
        int seqGenus = options.maxGenus;
        int seqDarts = options.maxDarts;
        if (seqGenus > kSeqGenusCap) {
            err << "warning: seq checks capped at genus " << kSeqGenusCap << '\n';
            seqGenus = kSeqGenusCap;
        }
        if (seqDarts > options.seqCap) {
            err << "warning: seq checks capped at " << options.seqCap << " darts (--seq-cap)\n";
            seqDarts = options.seqCap;
        }
        SequencedHypermapCounter seq;

        check("kz = seq (g <= " + std::to_string(seqGenus) + ", t <= " + std::to_string(seqDarts) + ")", [&] {
            for (int g = 0; g <= seqGenus; ++g) {
                for (int t = 1; t <= seqDarts; ++t) {
                    for (int e = 1; e <= t; ++e) {
                        for (int f = 1; f <= t; ++f) {
                            const int v = t + 2 * (1 - g) - e - f;
                            if (v < 1) {
                                continue;
                            }
                            const BigInt a = kz.rootedCount(g, t, v, e, f);
                            const BigInt b = seq.rootedFromSequenced(g, t, f, e);
                            if (a != b) {
                                std::ostringstream s;
                                s << "(g,t,v,e,f)=(" << g << ',' << t << ',' << v << ',' << e << ',' << f
                                  << "): kz " << a << ", seq " << b;
                                return s.str();
                            }
                        }
                    }
                }
            }
            return std::string{};
        });

        const int multiDarts = std::min(8, seqDarts);
        check("H_m = H * prod(D) (t <= " + std::to_string(multiDarts) + ", |D| <= 2)", [&] {
            for (int g = 0; g <= seqGenus; ++g) {
                for (int t = 0; t <= multiDarts; ++t) {
                    for (int e = 0; e <= t; ++e) {
                        for (int f = 1; f <= t + 1; ++f) {
                            for (int n = 0; n <= t; ++n) {
                                std::vector<std::vector<int>> lists{{}};
                                for (int a = 1; n + a <= t; ++a) {
                                    lists.push_back({a});
                                    for (int b = a; n + a + b <= t; ++b) {
                                        lists.push_back({a, b});
                                    }
                                }
                                for (const auto& d : lists) {
                                    const BigInt direct = seq.multirootedDirect(g, t, f, e, n, d);
                                    const BigInt viaH = seq.multirootedCount(g, t, f, e, n, d);
                                    if (direct != viaH) {
                                        std::ostringstream s;
                                        s << "(g,t,f,e,n)=(" << g << ',' << t << ',' << f << ',' << e << ',' << n
                                          << "), |D|=" << d.size() << ": direct " << direct << ", H*prod " << viaH;
                                        return s.str();
                                    }
                                }
                            }
                        }
                    }
                }
            }
            return std::string{};
        });
    }

    check("series = kz totals (g <= " + std::to_string(seriesGenus) + ", d <= " + std::to_string(options.maxDarts) +
              ")",
          [&] {
              for (int g = 0; g <= seriesGenus; ++g) {
                  const USeries h = hgUnivariate(g, options.maxDarts);
                  for (int d = 1; d <= options.maxDarts; ++d) {
                      if (h[d] != Rational(kz.rootedTotal(g, d))) {
                          return "genus " + std::to_string(g) + ", z^" + std::to_string(d) + ": series " +
                                 h[d].get_str() + ", kz " + to_decimal(kz.rootedTotal(g, d));
                      }
                  }
              }
              return std::string{};
          });

    check("trivariate series = kz counts (g <= " + std::to_string(triGenus) + ", degree <= " +
              std::to_string(triDegree) + ")",
          [&] {
              for (int g = 0; g <= triGenus; ++g) {
                  const TSeries h = hgTrivariate(g, triDegree);
                  for (int n = 0; n <= triDegree; ++n) {
                      for (int a = 0; a <= n; ++a) {
                          for (int b = 0; a + b <= n; ++b) {
                              const int c = n - a - b;
                              const int t = n - 2 + 2 * g;
                              const BigInt expected = t >= 1 ? kz.rootedCount(g, t, a, b, c) : BigInt(0);
                              if (h.coefficient(a, b, c) != Rational(expected)) {
                                  return "genus " + std::to_string(g) + ", x^" + std::to_string(a) + " y^" +
                                         std::to_string(b) + " u^" + std::to_string(c) + ": series " +
                                         h.coefficient(a, b, c).get_str() + ", kz " + to_decimal(expected);
                              }
                          }
                      }
                  }
              }
              return std::string{};
          });

    const int paramOrder = std::max(options.maxDarts, 20);
    check("tau and t parameterizations agree (g <= " + std::to_string(seriesGenus) + ", order " +
              std::to_string(paramOrder) + ")",
          [&] {
              for (int g = 0; g <= seriesGenus; ++g) {
                  if (!(hgViaT(g, paramOrder) == hgUnivariate(g, paramOrder))) {
                      return "genus " + std::to_string(g);
                  }
              }
              return std::string{};
          });

    if (!options.seriesOnly) {
        check("Burnside sandwich and divisibility by E (G <= " + std::to_string(options.maxGenus) + ", E <= " +
                  std::to_string(options.maxDarts) + ")",
              [&] {
                  for (int G = 0; G <= options.maxGenus; ++G) {
                      const CountTable sensed = sensedTable(G, options.maxDarts, kz);
                      const CountTable rooted = kz.toCountTable(G);
                      const CountTable identity = orbifoldAccumulator(G, options.maxDarts, kz, 1, 1);
                      for (const auto& [key, r] : rooted.entries()) {
                          if (key.darts > options.maxDarts) {
                              continue;
                          }
                          const BigInt s = sensed.at(key);
                          if (r > key.darts * s || s > r || identity.at(key) != r) {
                              std::ostringstream msg;
                              msg << "(G,E,W,B)=(" << key.genus << ',' << key.darts << ',' << key.vertices << ','
                                  << key.hyperedges << "): rooted " << r << ", sensed " << s;
                              return msg.str();
                          }
                      }
                      for (const auto& [key, s] : sensed.entries()) {
                          if (rooted.at(key) == 0) {
                              return "sensed count without rooted count at E=" + std::to_string(key.darts);
                          }
                      }
                  }
                  return std::string{};
              });
    }
    return failed;
}

namespace {

struct Common {
    int genus = 0;
    int maxDarts = 0;
    std::string format = "table";
    bool deep = false;
    bool noCache = false;
};

void addCommon(CLI::App* sub, Common& c, bool genusRequired = true)
{
    auto* g = sub->add_option("--genus", c.genus, "Genus")->check(CLI::NonNegativeNumber);
    if (genusRequired) {
        g->required();
    }
    sub->add_option("--max-darts", c.maxDarts, "Largest dart count")->required()->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--deep", c.deep, "Allow bounds up to genus 24 and 50 darts");
    sub->add_flag("--no-cache", c.noCache, "Neither read nor write the table cache");
}

std::string renderSeries(const USeries& s, int genus, const std::string& format)
{
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (int d = 0; d <= s.order(); ++d) {
            if (s[d] != 0) {
                out.push_back({{"genus", genus}, {"darts", d}, {"count", s[d].get_str()}});
            }
        }
        return out.dump(2) + '\n';
    }
    std::string text = "   d   h\n";
    for (int d = 0; d <= s.order(); ++d) {
        if (s[d] != 0) {
            std::string ds = std::to_string(d);
            text += std::string(ds.size() < 4 ? 4 - ds.size() : 0, ' ') + ds + "   " + s[d].get_str() + '\n';
        }
    }
    return text;
}

int cacheInfo(const CacheOptions& cache, std::ostream& out)
{
    const std::filesystem::path dir = cache.directory.value_or(cacheDirectory());
    out << "cache directory: " << dir.string() << '\n';
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        out << "no cache files\n";
        return kSuccess;
    }
    int n = 0;
    for (const auto& path : fixtureFiles(dir)) {
        ++n;
        try {
            const CountTable t = readCacheFile(path);
            out << path.filename().string() << ": engine " << t.meta().engine << ", genus " << t.meta().maxGenus
                << ", darts <= " << t.meta().maxDarts << ", " << t.size() << " entries, format "
                << kCacheFormatVersion << '\n';
        } catch (const CensusError& e) {
            out << path.filename().string() << ": unreadable (" << e.what() << ")\n";
        }
    }
    if (n == 0) {
        out << "no cache files\n";
    }
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of rooted and sensed orientable hypermaps", "hypermap"};
    app.require_subcommand(1);

    Common rooted;
    std::string engine = "kz";
    int seqCap = kDefaultSeqCap;
    auto* rootedCmd = app.add_subcommand("rooted", "Rooted hypermaps of one genus");
    addCommon(rootedCmd, rooted);
    rootedCmd->add_option("--engine", engine, "Counting engine")->check(CLI::IsMember({"kz", "seq"}));
    rootedCmd->add_option("--seq-cap", seqCap, "Largest dart count for the seq engine")->check(CLI::PositiveNumber);

    Common unrooted;
    auto* unrootedCmd = app.add_subcommand("unrooted", "Sensed (unrooted) hypermaps of one genus");
    addCommon(unrootedCmd, unrooted);

    Common series;
    std::string param = "tau";
    auto* seriesCmd = app.add_subcommand("series", "Coefficients of the closed-form generating function");
    addCommon(seriesCmd, series);
    seriesCmd->add_option("--param", param, "Parameterization")->check(CLI::IsMember({"tau", "t"}));

    std::string fixturesDir;
    bool verbose = false;
    auto* verifyCmd = app.add_subcommand("verify", "Recompute every row of the fixture tables");
    verifyCmd->add_option("--fixtures", fixturesDir, "Directory of fixture tables")->required();
    verifyCmd->add_flag("--verbose", verbose, "Also list passing rows");

    CrosscheckOptions cross;
    bool crossDeep = false;
    auto* crossCmd = app.add_subcommand("crosscheck", "Compare the engines against each other");
    crossCmd->add_option("--genus", cross.maxGenus, "Largest genus")->check(CLI::NonNegativeNumber);
    crossCmd->add_option("--max-darts", cross.maxDarts, "Largest dart count")->check(CLI::PositiveNumber);
    crossCmd->add_option("--seq-cap", cross.seqCap, "Largest dart count for the seq engine")
        ->check(CLI::PositiveNumber);
    crossCmd->add_flag("--series-only", cross.seriesOnly, "Run only the series checks");
    crossCmd->add_flag("--deep", crossDeep, "Allow bounds up to genus 24 and 50 darts");

    bool cacheDisabled = false;
    auto* cacheCmd = app.add_subcommand("cache-info", "Show the cache location and contents");
    cacheCmd->add_flag("--no-cache", cacheDisabled, "Accepted for symmetry; nothing is read or written");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i) {
            args.emplace_back(argv[i]);
        }
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (rootedCmd->parsed()) {
            checkBounds(rooted.genus, rooted.maxDarts, rooted.deep);
            const CountTable t =
                rootedTable(rooted.genus, rooted.maxDarts, engine, seqCap, CacheOptions{!rooted.noCache, {}}, err);
            out << (rooted.format == "json" ? renderJson(t, rooted.genus, rooted.maxDarts)
                                            : renderTable(t, rooted.genus, rooted.maxDarts, TableKind::Rooted));
            return kSuccess;
        }
        if (unrootedCmd->parsed()) {
            checkBounds(unrooted.genus, unrooted.maxDarts, unrooted.deep);
            const CountTable t = unrootedTable(unrooted.genus, unrooted.maxDarts, CacheOptions{!unrooted.noCache, {}}, err);
            out << (unrooted.format == "json" ? renderJson(t, unrooted.genus, unrooted.maxDarts)
                                              : renderTable(t, unrooted.genus, unrooted.maxDarts, TableKind::Unrooted));
            return kSuccess;
        }
        if (seriesCmd->parsed()) {
            if (series.genus > kMaxUnivariateGenus) {
                throw UsageError("closed forms exist for genus <= " + std::to_string(kMaxUnivariateGenus));
            }
            checkBounds(series.genus, series.maxDarts, series.deep);
            const USeries s = param == "t" ? hgViaT(series.genus, series.maxDarts)
                                           : hgUnivariate(series.genus, series.maxDarts);
            out << renderSeries(s, series.genus, series.format);
            return kSuccess;
        }
        if (verifyCmd->parsed()) {
            const VerifyReport r = verifyFixtures(fixturesDir, verbose, out);
            return r.failures == 0 ? kSuccess : kVerificationFailure;
        }
        if (crossCmd->parsed()) {
            checkBounds(cross.maxGenus, cross.maxDarts, crossDeep);
            const int failed = crosscheck(cross, out, err);
            return failed == 0 ? kSuccess : kVerificationFailure;
        }
        if (cacheCmd->parsed()) {
            return cacheInfo(CacheOptions{!cacheDisabled, {}}, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CensusError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace hypermap::cli
