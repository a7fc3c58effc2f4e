#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library's alignment or ACO code, so agreement is meaningful.

#include <algorithm>
#include <climits>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

struct Scheme {
    int match = 5;
    int mismatch = -3;
    int gap = -4;
};

/// Best global score by depth-first enumeration of every alignment. Each
/// alignment is scored column by column as it is built; no table is shared
/// between branches. Exponential: keep both lengths small.
inline int exhaustive_best(const std::string& x, const std::string& y, Scheme s = {}) {
    int best = INT_MIN;
    std::function<void(std::size_t, std::size_t, int)> walk = [&](std::size_t i, std::size_t j,
                                                                   int acc) {
        if (i == x.size() && j == y.size()) {
            best = std::max(best, acc);
            return;
        }
        if (i < x.size() && j < y.size()) walk(i + 1, j + 1, acc + (x[i] == y[j] ? s.match : s.mismatch));
        if (i < x.size()) walk(i + 1, j, acc + s.gap);
        if (j < y.size()) walk(i, j + 1, acc + s.gap);
    };
    walk(0, 0, 0);
    return best;
}

struct TextAlignment {
    std::string row_x;
    std::string row_y;
};

/// Every alignment of x and y as explicit gapped rows.
inline std::vector<TextAlignment> enumerate_alignments(const std::string& x, const std::string& y) {
    std::vector<TextAlignment> out;
    std::string rx;
    std::string ry;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        if (i == x.size() && j == y.size()) {
            out.push_back({rx, ry});
            return;
        }
        auto step = [&](char a, char b, std::size_t ni, std::size_t nj) {
            rx.push_back(a);
            ry.push_back(b);
            walk(ni, nj);
            rx.pop_back();
            ry.pop_back();
        };
        if (i < x.size() && j < y.size()) step(x[i], y[j], i + 1, j + 1);
        if (i < x.size()) step(x[i], '-', i + 1, j);
        if (j < y.size()) step('-', y[j], i, j + 1);
    };
    walk(0, 0);
    return out;
}

/// Independent optimum for longer pairs: suffix recursion with memoization,
/// the mirror image of the usual prefix table.
inline int suffix_dp_best(const std::string& x, const std::string& y, Scheme s = {}) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    std::vector<std::vector<int>> memo(n + 1, std::vector<int>(m + 1, INT_MIN));
    std::function<int(std::size_t, std::size_t)> best = [&](std::size_t i, std::size_t j) -> int {
        if (i == n) return static_cast<int>(m - j) * s.gap;
        if (j == m) return static_cast<int>(n - i) * s.gap;
        int& slot = memo[i][j];
        if (slot != INT_MIN) return slot;
        slot = std::max({best(i + 1, j + 1) + (x[i] == y[j] ? s.match : s.mismatch),
                         best(i + 1, j) + s.gap, best(i, j + 1) + s.gap});
        return slot;
    };
    return best(0, 0);
}

/// Column-by-column score of two gapped rows.
inline int column_score(const std::string& rx, const std::string& ry, Scheme s = {}) {
    int total = 0;
    for (std::size_t k = 0; k < rx.size(); ++k) {
        if (rx[k] == '-' || ry[k] == '-') total += s.gap;
        else total += rx[k] == ry[k] ? s.match : s.mismatch;
    }
    return total;
}

} // namespace oracle
