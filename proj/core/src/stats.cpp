#include "smellvuln/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "smellvuln/error.hpp"

namespace smellvuln {

namespace {

double log_choose(std::int64_t n, std::int64_t k)
{
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

void require_non_negative(const ContingencyTable& t)
{
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0) {
        throw StatsError(fmt::format("negative cell in table ({}, {}, {}, {})", t.a, t.b, t.c, t.d));
    }
}

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x)
{
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_fraction(double a, double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1 - a;
    double c = 1 / tiny;
    double d = 1 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

ContingencyTable& ContingencyTable::operator+=(const ContingencyTable& o)
{
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
}

FisherResult fisher_exact_two_sided(const ContingencyTable& t)
{
    require_non_negative(t);
    const std::int64_t n = t.total();
    if (n == 0) return {1.0, true};

    const std::int64_t row1 = t.a + t.b;
    const std::int64_t row2 = t.c + t.d;
    const std::int64_t col1 = t.a + t.c;
    const std::int64_t lo = std::max<std::int64_t>(0, col1 - row2);
    const std::int64_t hi = std::min(row1, col1);
    const double log_norm = log_choose(n, col1);

    auto log_prob = [&](std::int64_t k) { return log_choose(row1, k) + log_choose(row2, col1 - k) - log_norm; };

    const double observed = log_prob(t.a);
    const double cutoff = observed + std::log1p(1e-12);

    // Sum in log space relative to the largest included term.
    std::vector<double> included;
    for (std::int64_t k = lo; k <= hi; ++k) {
        const double lp = log_prob(k);
        if (lp <= cutoff) included.push_back(lp);
    }
    const double peak = *std::max_element(included.begin(), included.end());
    double sum = 0;
    for (double lp : included) sum += std::exp(lp - peak);
    const double p = std::exp(peak + std::log(sum));
    return {std::clamp(p, 0.0, 1.0), false};
}

double odds_ratio(const ContingencyTable& t)
{
    require_non_negative(t);
    return ((t.a + 0.5) * (t.d + 0.5)) / ((t.b + 0.5) * (t.c + 0.5));
}

double gamma_q(double a, double x)
{
    if (a <= 0) throw StatsError("gamma_q: shape must be positive");
    if (x <= 0) return 1.0;
    if (x < a + 1) return std::clamp(1.0 - gamma_p_series(a, x), 0.0, 1.0);
    return std::clamp(gamma_q_fraction(a, x), 0.0, 1.0);
}

double chi_square_sf(double statistic, double df) { return gamma_q(df / 2, statistic / 2); }

ChiSquare chi_square(const ContingencyTable& t, bool yates)
{
    require_non_negative(t);
    const double a = static_cast<double>(t.a), b = static_cast<double>(t.b);
    const double c = static_cast<double>(t.c), d = static_cast<double>(t.d);
    const double row1 = a + b, row2 = c + d, col1 = a + c, col2 = b + d, n = a + b + c + d;
    if (row1 == 0) throw StatsError("chi-square undefined: vulnerable row total (a+b) is zero");
    if (row2 == 0) throw StatsError("chi-square undefined: non-vulnerable row total (c+d) is zero");
    if (col1 == 0) throw StatsError("chi-square undefined: smell column total (a+c) is zero");
    if (col2 == 0) throw StatsError("chi-square undefined: no-smell column total (b+d) is zero");

    double statistic = 0;
    if (!yates) {
        const double diff = a * d - b * c;
        statistic = n * diff * diff / (row1 * row2 * col1 * col2);
    } else {
        const double observed[4] = {a, b, c, d};
        const double expected[4] = {row1 * col1 / n, row1 * col2 / n, row2 * col1 / n, row2 * col2 / n};
        for (int i = 0; i < 4; ++i) {
            const double dev = std::max(std::abs(observed[i] - expected[i]) - 0.5, 0.0);
            statistic += dev * dev / expected[i];
        }
    }
    return {statistic, chi_square_sf(statistic, 1)};
}

TestResult run_tests(const ContingencyTable& t)
{
    TestResult r;
    r.table = t;
    const FisherResult fisher = fisher_exact_two_sided(t);
    r.p_value = fisher.p_value;
    r.degenerate = fisher.degenerate;
    r.odds_ratio = odds_ratio(t);
    const bool margins_positive = t.a + t.b > 0 && t.c + t.d > 0 && t.a + t.c > 0 && t.b + t.d > 0;
    if (margins_positive) {
        const ChiSquare plain = chi_square(t, false);
        const ChiSquare corrected = chi_square(t, true);
        r.chi_square_computable = true;
        r.chi_square = plain.statistic;
        r.chi_square_p = plain.p_value;
        r.chi_square_yates = corrected.statistic;
        r.chi_square_yates_p = corrected.p_value;
        r.reject_at_05 = reject_at_05(corrected.statistic);
    }
    return r;
}

std::string format_p(double p)
{
    if (p < 0.01) return fmt::format("{:.4f}", p);
    return fmt::format("{:.2g}", p);
}

std::string format_2dp(double value) { return fmt::format("{:.2f}", value); }

std::string format_chi_cell(const TestResult& result)
{
    if (!result.chi_square_computable) return "-";
    return fmt::format("{:.2f} ({:.2f})", result.chi_square, result.chi_square_yates);
}

} // namespace smellvuln
