#pragma once

#include "hypermap/count_table.hpp"
#include "hypermap/table_io.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace hypermap::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

// Bounds accepted without --deep, and with it.
inline constexpr int kNormalMaxGenus = 12;
inline constexpr int kNormalMaxDarts = 24;
inline constexpr int kDeepMaxGenus = 24;
inline constexpr int kDeepMaxDarts = 50;

// The sequenced engine is an oracle: its dart count and the genus checked
// against it are capped.
inline constexpr int kDefaultSeqCap = 10;
inline constexpr int kSeqGenusCap = 3;

enum class Format { Table, Json };

struct CacheOptions {
    bool enabled = true;
    std::optional<std::filesystem::path> directory; // defaults to cacheDirectory()
};

// Thrown for arguments that parse but make no sense (bounds, caps).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tables behind `rooted` and `unrooted`, read from or written to the cache.
CountTable rootedTable(int genus, int maxDarts, const std::string& engine, int seqCap, const CacheOptions& cache,
                       std::ostream& err);
CountTable unrootedTable(int genus, int maxDarts, const CacheOptions& cache, std::ostream& err);

std::string renderJson(const CountTable& table, int genus, int maxDarts);

struct VerifyReport {
    int files = 0;
    int rows = 0;
    int failures = 0;
};

// Recomputes every row of every fixture under `dir`. Failures are always
// written to `out`; passing rows only when `verbose`.
VerifyReport verifyFixtures(const std::filesystem::path& dir, bool verbose, std::ostream& out);

struct CrosscheckOptions {
    int maxGenus = 2;
    int maxDarts = 10;
    int seqCap = kDefaultSeqCap;
    bool seriesOnly = false;
};

// Runs the cross-engine checks; returns the number of failed checks.
int crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err);

// Full command line. Never throws; returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hypermap::cli
