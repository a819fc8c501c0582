#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace smellvuln {

/// 2x2 table. Rows: vulnerable / not vulnerable. Columns: smell / no smell.
///   a = smell and vulnerable       b = no smell and vulnerable
///   c = smell and not vulnerable   d = no smell and not vulnerable
struct ContingencyTable {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;

    std::int64_t total() const { return a + b + c + d; }
    ContingencyTable transposed() const { return {a, c, b, d}; }
    ContingencyTable& operator+=(const ContingencyTable& o);

    bool operator==(const ContingencyTable&) const = default;
};

struct FisherResult {
    double p_value = 1.0;
    bool degenerate = false; ///< all-zero table; p is defined as 1
};

/// Two-sided Fisher exact test, summing the probabilities of every table
/// with the observed margins that is no more likely than the observed one.
/// Throws StatsError on negative cells.
FisherResult fisher_exact_two_sided(const ContingencyTable& t);

/// Odds ratio with 0.5 added to every cell.
double odds_ratio(const ContingencyTable& t);

struct ChiSquare {
    double statistic = 0;
    double p_value = 1;
};

/// Pearson chi-square with df = 1, optionally with Yates' continuity
/// correction. Throws StatsError naming the zero margin.
ChiSquare chi_square(const ContingencyTable& t, bool yates);

/// Survival function of the chi-square distribution.
double chi_square_sf(double statistic, double df);

/// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

inline constexpr double kCriticalValue05 = 3.84;

/// Chi-square decision at alpha = .05 with one degree of freedom.
inline bool reject_at_05(double statistic) { return statistic >= kCriticalValue05; }

struct TestResult {
    ContingencyTable table;
    double p_value = 1;          ///< Fisher, two-sided
    bool degenerate = false;
    double odds_ratio = 1;
    bool chi_square_computable = false; ///< false when a margin is zero
    double chi_square = 0;
    double chi_square_p = 1;
    double chi_square_yates = 0;
    double chi_square_yates_p = 1;
    int df = 1;
    bool reject_at_05 = false;   ///< Yates statistic >= 3.84
};

/// Runs every test on one table. Never throws for valid (non-negative) tables.
TestResult run_tests(const ContingencyTable& t);

/// p to two significant figures, or four decimals below 0.01.
std::string format_p(double p);
/// Two decimals.
std::string format_2dp(double value);
/// "X.XX (Y.YY)" (uncorrected, Yates), or "-" when not computable.
std::string format_chi_cell(const TestResult& result);

} // namespace smellvuln
