#include "antalign/aco.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "antalign/errors.hpp"

namespace antalign::aco {

char direction_code(Direction d) noexcept {
    switch (d) {
    case Direction::diag: return 'D';
    case Direction::left: return 'L';
    case Direction::up: return 'U';
    }
    return '?';
}

PheromoneGrid::PheromoneGrid(std::size_t width, std::size_t height, double initial)
    : width_(width), height_(height), levels_(width * height * 3, std::max(initial, kPheromoneFloor)) {}

void PheromoneGrid::set(std::size_t x, std::size_t y, Direction d, double level) {
    levels_.at(index(x, y, d)) = std::max(level, kPheromoneFloor);
}

void PheromoneGrid::fill(double level) {
    std::fill(levels_.begin(), levels_.end(), std::max(level, kPheromoneFloor));
}

void PheromoneGrid::scale(double factor) {
    for (double& v : levels_) {
        v = std::max(v * factor, kPheromoneFloor);
    }
}

double PheromoneGrid::min_level() const noexcept {
    if (levels_.empty()) return std::numeric_limits<double>::infinity();
    return *std::min_element(levels_.begin(), levels_.end());
}

double DirectionScores::of(Direction d) const noexcept {
    switch (d) {
    case Direction::diag: return diag;
    case Direction::left: return left;
    case Direction::up: return up;
    }
    return 0;
}

void check_path(const AntPath& path, std::size_t width, std::size_t height) {
    if (path.cells.empty()) {
        throw InvalidInput("ant path has no cells");
    }
    if (path.moves.size() + 1 != path.cells.size()) {
        throw InvalidInput("ant path needs exactly one move per non-final cell");
    }
    if (width == 0 || height == 0 || path.cells.front() != Cell{width - 1, height - 1}) {
        throw InvalidInput("ant path must start at the bottom-right cell");
    }
    for (std::size_t i = 0; i < path.cells.size(); ++i) {
        const Cell& c = path.cells[i];
        const bool on_edge = c.x == 0 || c.y == 0;
        const bool last = i + 1 == path.cells.size();
        if (on_edge != last) {
            throw InvalidInput(last ? "ant path does not end on the top or left edge"
                                    : "ant path continues past an edge cell");
        }
        if (last) break;
        const Cell& next = path.cells[i + 1];
        Cell expected = c;
        switch (path.moves[i]) {
        case Direction::diag: expected = {c.x - 1, c.y - 1}; break;
        case Direction::left: expected = {c.x - 1, c.y}; break;
        case Direction::up: expected = {c.x, c.y - 1}; break;
        }
        if (next != expected) {
            throw InvalidInput("ant path step " + std::to_string(i) + " disagrees with its move");
        }
    }
}

DirectionScores direction_log_scores(std::size_t x, std::size_t y, const PheromoneGrid& grid,
                                     const AcoParams& params, const Sequence& seq_x,
                                     const Sequence& seq_y) {
    if (x == 0 || y == 0 || x >= seq_x.size() || y >= seq_y.size()) {
        throw std::logic_error("direction scores requested outside the matrix interior");
    }

    // regional weights pull ants toward the x == y diagonal
    double region_up = 2;
    double region_left = 1;
    double region_diag = 1.5;
    if (x == y) {
        region_up = 1;
        region_left = 1;
        region_diag = 2;
    } else if (x > y) {
        region_up = 1;
        region_left = 2;
        region_diag = 1.5;
    }

    // M compares the two symbols of the cell the move lands on
    const double match_up = seq_x[x] == seq_y[y - 1] ? 2 : 1;
    const double match_diag = seq_x[x - 1] == seq_y[y - 1] ? 2 : 1;
    const double match_left = seq_x[x - 1] == seq_y[y] ? 2 : 1;

    auto log_score = [&](Direction d, double match, double region) {
        const double level = grid.at(x, y, d);
        if (!(level > 0)) {
            throw std::logic_error("non-positive pheromone level at (" + std::to_string(x) + ", " +
                                   std::to_string(y) + ")");
        }
        return params.pher_weight * std::log(level) + params.match_weight * std::log(match) +
               params.region_weight * std::log(region);
    };

    return {
        .up = log_score(Direction::up, match_up, region_up),
        .diag = log_score(Direction::diag, match_diag, region_diag),
        .left = log_score(Direction::left, match_left, region_left),
    };
}

DirectionScores direction_scores(std::size_t x, std::size_t y, const PheromoneGrid& grid,
                                 const AcoParams& params, const Sequence& seq_x,
                                 const Sequence& seq_y) {
    const auto logs = direction_log_scores(x, y, grid, params, seq_x, seq_y);
    return {std::exp(logs.up), std::exp(logs.diag), std::exp(logs.left)};
}

Direction choose_direction(const DirectionScores& scores, double p, Rng& rng) {
    if (rng.uniform01() > p) {
        const double best = std::max({scores.up, scores.diag, scores.left});
        if (scores.up == best) return Direction::up;
        if (scores.diag == best) return Direction::diag;
        return Direction::left;
    }
    const double total = scores.up + scores.diag + scores.left;
    const double draw = rng.uniform01() * total;
    if (draw < scores.up) return Direction::up;
    if (draw < scores.up + scores.diag) return Direction::diag;
    return Direction::left;
}

void local_update(PheromoneGrid& grid, std::size_t x, std::size_t y, Direction dir,
                  double pher_step, double local_decay) {
    grid.set(x, y, dir, (grid.at(x, y, dir) + pher_step) * local_decay);
}

void reinforce_best_path(PheromoneGrid& grid, const AntPath& path, int gen_best, int overall_best,
                         double pher_step) {
    if (gen_best <= 0 || overall_best <= 0) {
        return;
    }
    const double deposit = pher_step * (static_cast<double>(gen_best) / overall_best);
    for (std::size_t i = 0; i < path.moves.size(); ++i) {
        const Cell& c = path.cells[i];
        const Direction d = path.moves[i];
        grid.set(c.x, c.y, d, grid.at(c.x, c.y, d) + deposit);
    }
}

void global_decay(PheromoneGrid& grid, double factor) { grid.scale(factor); }

Alignment extract_alignment(const AntPath& path, const Sequence& seq_x, const Sequence& seq_y) {
    check_path(path, seq_x.size(), seq_y.size());

    Alignment out;
    const Cell& edge = path.edge();
    const std::size_t columns = seq_x.size() + seq_y.size();
    out.row_x.reserve(columns);
    out.row_y.reserve(columns);

    // prefix the path never visits
    for (std::size_t i = 0; i < edge.x; ++i) {
        out.row_x.push_back(seq_x.char_at(i));
        out.row_y.push_back(kGapChar);
    }
    for (std::size_t j = 0; j < edge.y; ++j) {
        out.row_x.push_back(kGapChar);
        out.row_y.push_back(seq_y.char_at(j));
    }

    out.row_x.push_back(seq_x.char_at(edge.x));
    out.row_y.push_back(seq_y.char_at(edge.y));

    for (std::size_t k = path.moves.size(); k-- > 0;) {
        const Cell& c = path.cells[k];
        switch (path.moves[k]) {
        case Direction::diag:
            out.row_x.push_back(seq_x.char_at(c.x));
            out.row_y.push_back(seq_y.char_at(c.y));
            break;
        case Direction::up:
            out.row_x.push_back(kGapChar);
            out.row_y.push_back(seq_y.char_at(c.y));
            break;
        case Direction::left:
            out.row_x.push_back(seq_x.char_at(c.x));
            out.row_y.push_back(kGapChar);
            break;
        }
    }
    out.refresh_markers();
    return out;
}

namespace {

AcoParams sanitize(const AcoParams& in) {
    const auto values = in.to_array();
    for (std::size_t i = 0; i < kNumParams; ++i) {
        if (!std::isfinite(values[i]) || values[i] < 0) {
            throw InvalidInput("ACO parameter " + std::string(kParamNames[i]) +
                               " must be a finite non-negative number");
        }
    }
    if (in.local_decay > 1 || in.global_decay > 1 || in.prob_prob > 1) {
        throw InvalidInput("decay factors and the choice probability must not exceed 1");
    }
    if (in.generations() < 1 || in.ants() < 1) {
        throw InvalidInput("ACO needs at least one generation and one ant");
    }
    AcoParams out = in;
    out.init_pher = std::max(out.init_pher, kParamFloor);
    out.local_decay = std::max(out.local_decay, kParamFloor);
    out.global_decay = std::max(out.global_decay, kParamFloor);
    return out;
}

} // namespace

RunResult run_aco(const Sequence& seq_x, const Sequence& seq_y, const AcoParams& raw_params,
                  Rng& rng, const RunOptions& options) {
    if (seq_x.size() < 2 || seq_y.size() < 2) {
        throw InvalidInput("run_aco needs sequences of at least two symbols");
    }
    options.scheme.validate();
    const AcoParams params = sanitize(raw_params);

    const std::size_t n = seq_x.size();
    const std::size_t m = seq_y.size();
    const int max_gen = params.generations();
    const auto num_ants = static_cast<std::size_t>(params.ants());

    PheromoneGrid grid(n, m, params.init_pher);
    RunResult result;
    result.per_generation_best.reserve(static_cast<std::size_t>(max_gen));

    std::vector<AntPath> ants(num_ants);
    std::optional<int> previous_best;
    int repeats = 0;

    for (int gen = 0; gen < max_gen; ++gen) {
        for (auto& ant : ants) {
            ant.cells.assign(1, Cell{n - 1, m - 1});
            ant.moves.clear();
            ant.score = 0;
        }

        // ants advance in lockstep, one move each per sweep, in fixed order
        std::size_t finished = 0;
        std::vector<bool> done(num_ants, false);
        while (finished < num_ants) {
            for (std::size_t a = 0; a < num_ants; ++a) {
                if (done[a]) continue;
                AntPath& ant = ants[a];
                const Cell here = ant.cells.back();

                const auto logs = direction_log_scores(here.x, here.y, grid, params, seq_x, seq_y);
                // shift by the max so the largest score is 1 and nothing underflows to all-zero
                const double top = std::max({logs.up, logs.diag, logs.left});
                const DirectionScores scores{std::exp(logs.up - top), std::exp(logs.diag - top),
                                             std::exp(logs.left - top)};
                const Direction dir = choose_direction(scores, params.prob_prob, rng);
                local_update(grid, here.x, here.y, dir, params.pher_step, params.local_decay);

                Cell next = here;
                switch (dir) {
                case Direction::diag: next = {here.x - 1, here.y - 1}; break;
                case Direction::left: next = {here.x - 1, here.y}; break;
                case Direction::up: next = {here.x, here.y - 1}; break;
                }
                ant.moves.push_back(dir);
                ant.cells.push_back(next);
                ++result.ant_steps;

                if (next.x == 0 || next.y == 0) {
                    done[a] = true;
                    ++finished;
                }
            }
        }

        std::size_t best_ant = 0;
        for (std::size_t a = 0; a < num_ants; ++a) {
            ants[a].score = score_alignment(extract_alignment(ants[a], seq_x, seq_y), options.scheme);
            if (ants[a].score > ants[best_ant].score) {
                best_ant = a;
            }
        }
        const AntPath& gen_best = ants[best_ant];

        if (gen == 0 || gen_best.score > result.best_score) {
            result.best_score = gen_best.score;
            result.best_path = gen_best;
        }

        reinforce_best_path(grid, gen_best, gen_best.score, result.best_score, params.pher_step);
        if (options.global_decay) {
            global_decay(grid, params.global_decay);
        }

        result.per_generation_best.push_back(gen_best.score);
        result.per_generation_min_pheromone.push_back(grid.min_level());
        result.generations_run = gen + 1;

        if (previous_best && *previous_best == gen_best.score) {
            ++repeats;
        } else {
            previous_best = gen_best.score;
            repeats = 0;
        }
        if (options.convergence_repeats > 0 && repeats >= options.convergence_repeats) {
            break;
        }
    }

    result.best_alignment = extract_alignment(result.best_path, seq_x, seq_y);
    return result;
}

} // namespace antalign::aco
