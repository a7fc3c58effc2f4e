#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "antalign/alignment.hpp"
#include "antalign/params.hpp"
#include "antalign/rng.hpp"
#include "antalign/sequence.hpp"

namespace antalign::aco {

/// Move out of a matrix cell toward the origin. Values index the pheromone
/// triple of a cell.
enum class Direction : std::uint8_t { diag = 0, left = 1, up = 2 };

inline constexpr std::array<Direction, 3> kDirections = {Direction::diag, Direction::left,
                                                         Direction::up};

char direction_code(Direction d) noexcept;

/// Pheromone levels over an n x m matrix (n = |seq_x| columns, m = |seq_y|
/// rows), one level per cell and direction. Levels never drop below
/// kPheromoneFloor.
class PheromoneGrid {
public:
    /// Smallest level a grid entry may hold: the smallest normal double.
    static constexpr double kPheromoneFloor = 2.2250738585072014e-308;

    PheromoneGrid(std::size_t width, std::size_t height, double initial);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }

    double at(std::size_t x, std::size_t y, Direction d) const {
        return levels_[index(x, y, d)];
    }
    /// Replaces one entry, clamping to the floor.
    void set(std::size_t x, std::size_t y, Direction d, double level);

    void fill(double level);
    /// Multiplies every entry by factor, clamping to the floor.
    void scale(double factor);

    double min_level() const noexcept;
    const std::vector<double>& levels() const noexcept { return levels_; }

private:
    std::size_t index(std::size_t x, std::size_t y, Direction d) const noexcept {
        return (y * width_ + x) * 3 + static_cast<std::size_t>(d);
    }

    std::size_t width_;
    std::size_t height_;
    std::vector<double> levels_;
};

struct DirectionScores {
    double up;
    double diag;
    double left;

    double of(Direction d) const noexcept;
};

struct Cell {
    std::size_t x;
    std::size_t y;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Route of one ant from (n-1, m-1) to the first cell with x == 0 or y == 0.
/// moves[i] leaves cells[i]; the final edge cell has no move.
struct AntPath {
    std::vector<Cell> cells;
    std::vector<Direction> moves;
    int score = 0;

    const Cell& edge() const { return cells.back(); }

    friend bool operator==(const AntPath&, const AntPath&) = default;
};

/// Throws InvalidInput when the path is not a monotone walk from the start
/// cell to the first edge cell of a width x height matrix.
void check_path(const AntPath& path, std::size_t width, std::size_t height);

/// phi^W_phi * M^W_m * R^W_r per direction, evaluated in the log domain.
/// Requires an interior cell (0 < x < n, 0 < y < m). Throws std::logic_error
/// if any of the three pheromone levels is not positive.
DirectionScores direction_scores(std::size_t x, std::size_t y, const PheromoneGrid& grid,
                                 const AcoParams& params, const Sequence& seq_x,
                                 const Sequence& seq_y);

/// Same exponents as direction_scores() but returned as logarithms, which
/// stay finite when the products underflow.
DirectionScores direction_log_scores(std::size_t x, std::size_t y, const PheromoneGrid& grid,
                                     const AcoParams& params, const Sequence& seq_x,
                                     const Sequence& seq_y);

/// Greedy argmax (ties: up, diag, left) when a uniform draw exceeds p,
/// otherwise roulette selection proportional to the scores.
Direction choose_direction(const DirectionScores& scores, double p, Rng& rng);

/// level <- (level + pher_step) * local_decay for one (cell, direction).
void local_update(PheromoneGrid& grid, std::size_t x, std::size_t y, Direction dir,
                  double pher_step, double local_decay);

/// Adds pher_step * gen_best / overall_best to every (cell, move) of the
/// path when both scores are positive.
void reinforce_best_path(PheromoneGrid& grid, const AntPath& path, int gen_best,
                         int overall_best, double pher_step);

void global_decay(PheromoneGrid& grid, double factor);

/// Alignment spelled by a path: leading pad columns for the skipped prefix,
/// the edge cell column, then one column per move back to the start cell.
Alignment extract_alignment(const AntPath& path, const Sequence& seq_x, const Sequence& seq_y);

struct RunOptions {
    ScoringScheme scheme{};
    bool global_decay = true;
    /// Stop after this many consecutive repeats of the generation-best score.
    int convergence_repeats = 5;
};

struct RunResult {
    int best_score = 0;
    Alignment best_alignment;
    AntPath best_path;
    int generations_run = 0;
    std::vector<int> per_generation_best;
    /// Smallest grid entry at the end of each generation.
    std::vector<double> per_generation_min_pheromone;
    /// Total ant moves simulated. Used as a deterministic cost measure.
    std::uint64_t ant_steps = 0;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Runs the colony on one pair. Both sequences need at least two symbols.
RunResult run_aco(const Sequence& seq_x, const Sequence& seq_y, const AcoParams& params, Rng& rng,
                  const RunOptions& options = {});

} // namespace antalign::aco
