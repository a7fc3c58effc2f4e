#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antalign/aco.hpp"
#include "antalign/params.hpp"
#include "antalign/rng.hpp"
#include "antalign/sequence.hpp"
#include "antalign/stats.hpp"

namespace antalign::ga {

enum class TimingMode {
    wall_clock, ///< steady-clock seconds around each ACO run
    ant_steps,  ///< simulated ant moves times kSecondsPerAntStep; reproducible
};

/// Cost charged per simulated ant move in TimingMode::ant_steps.
inline constexpr double kSecondsPerAntStep = 1e-6;

enum class FitnessMode {
    mean_cubed,  ///< corrected_mean^3 / time
    consistency, ///< (corrected_mean - stddev)^3 / time
};

struct GaConfig {
    int str_length = 20;
    int pop_limit = 500;
    int keep_parents = 50;
    int trials_per_individual = 7;
    double crossover_prob = 0.2;
    /// Probability of an upward nudge, and separately of a downward nudge,
    /// for every copied gene.
    double mutation_prob = 0.2;
    /// Nudge size as a fraction of the gene's range width.
    double mutation_scale = 0.1;
    int record_freq = 5;
    std::optional<int> max_generations;
    /// Stop once the elite genome set is unchanged this many generations.
    int equilibrium_generations = 10;
    std::uint64_t seed = 20040501;
    /// Evaluate every generation on one pair drawn up front.
    bool fixed_pair = false;
    TimingMode timing = TimingMode::wall_clock;
    FitnessMode fitness = FitnessMode::mean_cubed;
    stats::StddevDivisor stddev_divisor = stats::StddevDivisor::n_plus_one;
    aco::RunOptions aco_options{};
    int threads = 1;

    /// Throws InvalidInput on inconsistent settings.
    void validate() const;

    /// keep_parents at 10% of pop_limit (at least 1).
    void set_population(int pop);

    /// Reads flat key=value lines; '#' starts a comment. Unknown keys throw
    /// ParseError.
    static GaConfig parse(std::istream& in);
    static GaConfig load(const std::filesystem::path& path);
    void apply(const std::string& key, const std::string& value, std::size_t line = 0);
};

struct Individual {
    AcoParams genome;
    std::optional<double> fitness;

    friend bool operator==(const Individual&, const Individual&) = default;
};

struct Population {
    std::vector<Individual> individuals;
    int generation = 0;

    std::size_t size() const noexcept { return individuals.size(); }
    /// Descending by fitness; unset fitness sorts last. Stable.
    void sort();
    bool evaluated() const noexcept;
    std::optional<double> best_fitness() const;
};

using SequencePair = std::pair<Sequence, Sequence>;

Population init_population(const GaConfig& config, const ParamRanges& ranges, Rng& rng);

/// Random template of config.str_length symbols and a mutant of it.
SequencePair generation_pair(const GaConfig& config, Rng& rng);

struct Evaluation {
    stats::FitnessScore fitness;
    stats::TrimmedStats trimmed;
    std::vector<double> scores;
    bool failed = false;
};

/// Runs the ACO trials_per_individual times and scores the outcome. A run
/// that throws marks the evaluation failed with the all-trimmed sentinel.
Evaluation evaluate_individual(const Individual& ind, const SequencePair& pair,
                               const GaConfig& config, Rng& rng);

/// Scores the members that need it and sorts. With reuse_fitness set only
/// members without a fitness are evaluated. Member i draws from the stream
/// derive_seed(seed, generation, i), so threads do not change the result.
void evaluate_population(Population& pop, const SequencePair& pair, const GaConfig& config,
                         bool reuse_fitness);

/// Elite carried over unchanged; the rest built gene by gene from elite
/// parents with branch migration and clamped copy mutation.
Population next_generation(const Population& pop, const GaConfig& config,
                           const ParamRanges& ranges, Rng& rng);

/// Writes an evaluated population in the fixed-width checkpoint format.
void format_checkpoint(std::ostream& out, const Population& pop);
Population parse_checkpoint(std::istream& in);

/// Writes to a temporary sibling and renames it into place.
void write_checkpoint(const Population& pop, const std::filesystem::path& path);
Population read_checkpoint(const std::filesystem::path& path);

std::string checkpoint_header();
std::string checkpoint_filename(int index);

class CheckpointSink {
public:
    virtual ~CheckpointSink() = default;
    virtual void write(const Population& pop, int index) = 0;
};

/// Writes out-<index>.txt files into a directory.
class DirectorySink : public CheckpointSink {
public:
    explicit DirectorySink(std::filesystem::path dir);
    /// Throws std::runtime_error unless the directory can be created and written.
    void probe() const;
    void write(const Population& pop, int index) override;
    const std::filesystem::path& dir() const noexcept { return dir_; }

private:
    std::filesystem::path dir_;
};

/// Raised when a checkpoint cannot be written. Holds the evaluated
/// population at the moment of failure.
class CheckpointError : public std::runtime_error {
public:
    CheckpointError(const std::string& what, Population pop)
        : std::runtime_error(what), population_(std::move(pop)) {}
    const Population& population() const noexcept { return population_; }

private:
    Population population_;
};

struct GenerationReport {
    int generation;
    const Population& population; ///< evaluated and sorted
    const SequencePair& pair;
};

using GenerationObserver = std::function<void(const GenerationReport&)>;

/// Evolve until max_generations or equilibrium. Returns the last evaluated
/// population, sorted.
Population run_ga(const GaConfig& config, const ParamRanges& ranges, Rng& rng,
                  CheckpointSink* sink = nullptr, const GenerationObserver& observer = {});

} // namespace antalign::ga
