#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace antalign::stats {

/// Corrected mean reported when trimming leaves no samples.
inline constexpr double kAllTrimmedSentinel = -10000.0;

enum class StddevDivisor {
    n_plus_one,  ///< sqrt(sum / (N + 1)), as the tuner has always computed it
    n_minus_one, ///< the usual sample standard deviation
};

struct TrimmedStats {
    double raw_mean = 0;
    double stddev = 0;
    double corrected_mean = 0;
    std::size_t kept = 0;
    std::size_t discarded = 0;

    bool all_trimmed() const noexcept { return kept == 0; }
};

/// Mean over the samples lying within raw_mean +/- stddev (bounds inclusive).
/// Throws InvalidInput on an empty sample.
TrimmedStats corrected_mean(std::span<const double> samples,
                            StddevDivisor divisor = StddevDivisor::n_plus_one);

struct FitnessScore {
    double value = 0;
    double total_time = 0;
};

/// corrected_mean^3 / total_time. Throws InvalidInput when total_time <= 0.
FitnessScore ga_score(const TrimmedStats& stats, double total_time);

/// Fitness that rewards consistency: (corrected_mean - stddev)^3 / total_time.
/// Optional tuner mode; off unless selected.
FitnessScore consistency_score(const TrimmedStats& stats, double total_time);

struct HistogramBin {
    double low;
    double high;
    std::size_t count;
};

/// Equal-width bins spanning [min, max]; the maximum lands in the last bin.
/// A constant sample puts every count in the first bin.
std::vector<HistogramBin> histogram(std::span<const double> samples, std::size_t bins);

/// bin_low,bin_high,count
void write_histogram_csv(std::ostream& out, std::span<const HistogramBin> bins);

double mean(std::span<const double> samples);

/// Standardized third central moment (population moments). Throws
/// UndefinedStatistic for fewer than 3 samples or zero variance.
double skewness(std::span<const double> samples);

} // namespace antalign::stats
