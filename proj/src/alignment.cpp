#include "antalign/alignment.hpp"

#include <algorithm>
#include <vector>

#include "antalign/errors.hpp"

namespace antalign {

void ScoringScheme::validate() const {
    if (match_bonus <= 0 || mismatch_penalty >= 0 || gap_penalty >= 0) {
        throw InvalidInput("scoring scheme needs match_bonus > 0 and negative penalties");
    }
}

namespace {

std::string strip_gaps(const std::string& row) {
    std::string out;
    out.reserve(row.size());
    std::copy_if(row.begin(), row.end(), std::back_inserter(out),
                 [](char c) { return c != kGapChar; });
    return out;
}

char marker_for(char a, char b) noexcept {
    return (a == b && a != kGapChar) ? kMatchMarker : ' ';
}

} // namespace

std::string Alignment::ungapped_x() const { return strip_gaps(row_x); }

std::string Alignment::ungapped_y() const { return strip_gaps(row_y); }

bool Alignment::well_formed() const noexcept {
    if (row_x.size() != row_y.size() || markers.size() != row_x.size()) {
        return false;
    }
    for (std::size_t i = 0; i < row_x.size(); ++i) {
        if (row_x[i] == kGapChar && row_y[i] == kGapChar) return false;
        if (markers[i] != marker_for(row_x[i], row_y[i])) return false;
    }
    return true;
}

void Alignment::refresh_markers() {
    const std::size_t n = std::min(row_x.size(), row_y.size());
    markers.assign(n, ' ');
    for (std::size_t i = 0; i < n; ++i) {
        markers[i] = marker_for(row_x[i], row_y[i]);
    }
}

std::string Alignment::to_text() const { return row_x + '\n' + markers + '\n' + row_y + '\n'; }

int score_alignment(const Alignment& alignment, const ScoringScheme& scheme) {
    const auto& rx = alignment.row_x;
    const auto& ry = alignment.row_y;
    if (rx.size() != ry.size()) {
        throw InvalidInput("alignment rows differ in length");
    }
    int score = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const bool gap_x = rx[i] == kGapChar;
        const bool gap_y = ry[i] == kGapChar;
        if (gap_x && gap_y) {
            throw InvalidInput("alignment column " + std::to_string(i) + " is gap against gap");
        }
        if (gap_x || gap_y) {
            score += scheme.gap_penalty;
        } else {
            score += scheme.pair_score(rx[i] == ry[i]);
        }
    }
    return score;
}

NwResult nw_align(const Sequence& x, const Sequence& y, const ScoringScheme& scheme) {
    if (x.empty() || y.empty()) {
        throw InvalidInput("nw_align needs two non-empty sequences");
    }
    scheme.validate();

    const std::size_t n = x.size();
    const std::size_t m = y.size();
    const std::size_t stride = m + 1;
    std::vector<int> table((n + 1) * stride);
    auto cell = [&](std::size_t i, std::size_t j) -> int& { return table[i * stride + j]; };

    for (std::size_t i = 0; i <= n; ++i) cell(i, 0) = static_cast<int>(i) * scheme.gap_penalty;
    for (std::size_t j = 0; j <= m; ++j) cell(0, j) = static_cast<int>(j) * scheme.gap_penalty;

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const int diag = cell(i - 1, j - 1) + scheme.pair_score(x[i - 1] == y[j - 1]);
            const int up = cell(i, j - 1) + scheme.gap_penalty;
            const int left = cell(i - 1, j) + scheme.gap_penalty;
            cell(i, j) = std::max({diag, up, left});
        }
    }

    NwResult result;
    result.score = cell(n, m);

    std::string rx;
    std::string ry;
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 || j > 0) {
        const int here = cell(i, j);
        if (i > 0 && j > 0 && here == cell(i - 1, j - 1) + scheme.pair_score(x[i - 1] == y[j - 1])) {
            rx.push_back(x.char_at(i - 1));
            ry.push_back(y.char_at(j - 1));
            --i;
            --j;
        } else if (j > 0 && here == cell(i, j - 1) + scheme.gap_penalty) {
            rx.push_back(kGapChar);
            ry.push_back(y.char_at(j - 1));
            --j;
        } else {
            rx.push_back(x.char_at(i - 1));
            ry.push_back(kGapChar);
            --i;
        }
    }
    std::reverse(rx.begin(), rx.end());
    std::reverse(ry.begin(), ry.end());
    result.alignment.row_x = std::move(rx);
    result.alignment.row_y = std::move(ry);
    result.alignment.refresh_markers();
    return result;
}

} // namespace antalign
