#pragma once

#include <string>

#include "antalign/sequence.hpp"

namespace antalign {

inline constexpr char kGapChar = '-';
inline constexpr char kMatchMarker = '|';

struct ScoringScheme {
    int match_bonus = 5;
    int mismatch_penalty = -3;
    int gap_penalty = -4;

    /// Throws InvalidInput unless bonus > 0 and both penalties < 0.
    void validate() const;

    int pair_score(bool match) const noexcept { return match ? match_bonus : mismatch_penalty; }
};

/// Three-line gapped alignment: the x row, the match-marker line, the y row.
struct Alignment {
    std::string row_x;
    std::string markers;
    std::string row_y;

    std::size_t columns() const noexcept { return row_x.size(); }

    /// Gap characters removed from row_x.
    std::string ungapped_x() const;
    std::string ungapped_y() const;

    /// Equal row lengths, no gap-vs-gap column, markers consistent with the rows.
    bool well_formed() const noexcept;

    /// Rebuilds the marker line from the two rows.
    void refresh_markers();

    /// The three lines joined with '\n', each newline-terminated.
    std::string to_text() const;

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Sum over columns of match bonus, mismatch penalty, or gap penalty.
/// Throws InvalidInput for unequal rows or a gap-vs-gap column.
int score_alignment(const Alignment& alignment, const ScoringScheme& scheme = {});

struct NwResult {
    int score = 0;
    Alignment alignment;
};

/// Exact global alignment. When several tracebacks are co-optimal the
/// traceback prefers diagonal, then up (gap in x), then left (gap in y).
NwResult nw_align(const Sequence& x, const Sequence& y, const ScoringScheme& scheme = {});

} // namespace antalign
