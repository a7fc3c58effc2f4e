#include "antalign/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "antalign/errors.hpp"

namespace antalign::stats {

double mean(std::span<const double> samples) {
    if (samples.empty()) {
        throw InvalidInput("mean of an empty sample");
    }
    double sum = 0;
    for (double s : samples) sum += s;
    return sum / static_cast<double>(samples.size());
}

TrimmedStats corrected_mean(std::span<const double> samples, StddevDivisor divisor) {
    if (samples.empty()) {
        throw InvalidInput("corrected_mean needs at least one sample");
    }
    TrimmedStats out;
    const auto n = static_cast<double>(samples.size());
    out.raw_mean = mean(samples);

    double squares = 0;
    for (double s : samples) {
        squares += (out.raw_mean - s) * (out.raw_mean - s);
    }
    const double denom = divisor == StddevDivisor::n_plus_one ? n + 1 : std::max(n - 1, 1.0);
    out.stddev = std::sqrt(squares / denom);

    double kept_sum = 0;
    for (double s : samples) {
        if (s >= out.raw_mean - out.stddev && s <= out.raw_mean + out.stddev) {
            kept_sum += s;
            ++out.kept;
        } else {
            ++out.discarded;
        }
    }
    out.corrected_mean =
        out.kept == 0 ? kAllTrimmedSentinel : kept_sum / static_cast<double>(out.kept);
    return out;
}

FitnessScore ga_score(const TrimmedStats& stats, double total_time) {
    if (!(total_time > 0)) {
        throw InvalidInput("fitness needs a positive total time");
    }
    const double m = stats.corrected_mean;
    return {m * m * m / total_time, total_time};
}

FitnessScore consistency_score(const TrimmedStats& stats, double total_time) {
    if (!(total_time > 0)) {
        throw InvalidInput("fitness needs a positive total time");
    }
    const double m = stats.corrected_mean - stats.stddev;
    return {m * m * m / total_time, total_time};
}

std::vector<HistogramBin> histogram(std::span<const double> samples, std::size_t bins) {
    if (bins == 0) {
        throw InvalidInput("histogram needs at least one bin");
    }
    if (samples.empty()) {
        throw InvalidInput("histogram of an empty sample");
    }
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double width = (hi - lo) / static_cast<double>(bins);

    std::vector<HistogramBin> out(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out[b].low = lo + width * static_cast<double>(b);
        out[b].high = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
        out[b].count = 0;
    }
    for (double s : samples) {
        std::size_t b = 0;
        if (width > 0) {
            b = static_cast<std::size_t>((s - lo) / width);
            b = std::min(b, bins - 1);
        }
        ++out[b].count;
    }
    return out;
}

void write_histogram_csv(std::ostream& out, std::span<const HistogramBin> bins) {
    out << "bin_low,bin_high,count\n";
    char line[96];
    for (const auto& b : bins) {
        std::snprintf(line, sizeof line, "%.6f,%.6f,%zu\n", b.low, b.high, b.count);
        out << line;
    }
}

double skewness(std::span<const double> samples) {
    if (samples.size() < 3) {
        throw UndefinedStatistic("skewness needs at least three samples");
    }
    const double m = mean(samples);
    double m2 = 0;
    double m3 = 0;
    for (double s : samples) {
        const double d = s - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    const auto n = static_cast<double>(samples.size());
    m2 /= n;
    m3 /= n;
    if (m2 <= 0) {
        throw UndefinedStatistic("skewness of a zero-variance sample");
    }
    return m3 / std::pow(m2, 1.5);
}

} // namespace antalign::stats
