#include "antalign/ga.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "antalign/errors.hpp"
#include "parallel.hpp"

namespace antalign::ga {

namespace {

constexpr std::uint64_t kEvaluationStream = 0x45564131ULL;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& text, const std::string& key, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(line, "bad value '" + text + "' for " + key);
    }
    return value;
}

bool parse_bool(const std::string& text, const std::string& key, std::size_t line) {
    if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
    if (text == "0" || text == "false" || text == "no" || text == "off") return false;
    throw ParseError(line, "bad boolean '" + text + "' for " + key);
}

std::vector<std::array<double, kNumParams>> elite_set(const Population& pop, std::size_t keep) {
    std::vector<std::array<double, kNumParams>> out;
    for (std::size_t i = 0; i < std::min(keep, pop.size()); ++i) {
        out.push_back(pop.individuals[i].genome.to_array());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

void GaConfig::validate() const {
    if (str_length < 2) throw InvalidInput("str_length must be at least 2");
    if (pop_limit < 2) throw InvalidInput("pop_limit must be at least 2");
    if (keep_parents <= 0 || keep_parents >= pop_limit) {
        throw InvalidInput("keep_parents must lie strictly between 0 and pop_limit");
    }
    if (trials_per_individual < 2) throw InvalidInput("trials_per_individual must be at least 2");
    if (!(crossover_prob >= 0 && crossover_prob <= 1)) {
        throw InvalidInput("crossover_prob must lie in [0, 1]");
    }
    if (!(mutation_prob >= 0 && mutation_prob <= 0.5)) {
        throw InvalidInput("mutation_prob must lie in [0, 0.5]");
    }
    if (!(mutation_scale >= 0)) throw InvalidInput("mutation_scale must be non-negative");
    if (record_freq < 1) throw InvalidInput("record_freq must be at least 1");
    if (max_generations && *max_generations < 1) {
        throw InvalidInput("max_generations must be at least 1");
    }
    if (equilibrium_generations < 1) throw InvalidInput("equilibrium_generations must be at least 1");
    if (threads < 1) throw InvalidInput("threads must be at least 1");
}

void GaConfig::set_population(int pop) {
    pop_limit = pop;
    keep_parents = std::max(1, static_cast<int>(pop * 0.1));
}

void GaConfig::apply(const std::string& key, const std::string& value, std::size_t line) {
    if (key == "str_length") str_length = parse_number<int>(value, key, line);
    else if (key == "pop_limit") set_population(parse_number<int>(value, key, line));
    else if (key == "keep_parents") keep_parents = parse_number<int>(value, key, line);
    else if (key == "trials_per_individual" || key == "trials")
        trials_per_individual = parse_number<int>(value, key, line);
    else if (key == "crossover_prob") crossover_prob = parse_number<double>(value, key, line);
    else if (key == "mutation_prob") mutation_prob = parse_number<double>(value, key, line);
    else if (key == "mutation_scale") mutation_scale = parse_number<double>(value, key, line);
    else if (key == "record_freq") record_freq = parse_number<int>(value, key, line);
    else if (key == "max_generations") {
        if (value == "unbounded" || value == "none") max_generations.reset();
        else max_generations = parse_number<int>(value, key, line);
    } else if (key == "equilibrium_generations")
        equilibrium_generations = parse_number<int>(value, key, line);
    else if (key == "seed") seed = parse_number<std::uint64_t>(value, key, line);
    else if (key == "fixed_pair") fixed_pair = parse_bool(value, key, line);
    else if (key == "global_decay") aco_options.global_decay = parse_bool(value, key, line);
    else if (key == "threads") threads = parse_number<int>(value, key, line);
    else if (key == "timing") {
        if (value == "wall") timing = TimingMode::wall_clock;
        else if (value == "steps") timing = TimingMode::ant_steps;
        else throw ParseError(line, "timing must be 'wall' or 'steps'");
    } else if (key == "fitness") {
        if (value == "mean_cubed") fitness = FitnessMode::mean_cubed;
        else if (value == "consistency") fitness = FitnessMode::consistency;
        else throw ParseError(line, "fitness must be 'mean_cubed' or 'consistency'");
    } else if (key == "stddev_divisor") {
        if (value == "n+1") stddev_divisor = stats::StddevDivisor::n_plus_one;
        else if (value == "n-1") stddev_divisor = stats::StddevDivisor::n_minus_one;
        else throw ParseError(line, "stddev_divisor must be 'n+1' or 'n-1'");
    } else {
        throw ParseError(line, "unknown key '" + key + "'");
    }
}

GaConfig GaConfig::parse(std::istream& in) {
    GaConfig config;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key=value");
        config.apply(trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line);
    }
    return config;
}

GaConfig GaConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open GA config '" + path.string() + "'");
    return parse(in);
}

void Population::sort() {
    std::stable_sort(individuals.begin(), individuals.end(),
                     [](const Individual& a, const Individual& b) {
                         if (!a.fitness) return false;
                         if (!b.fitness) return true;
                         return *a.fitness > *b.fitness;
                     });
}

bool Population::evaluated() const noexcept {
    return std::all_of(individuals.begin(), individuals.end(),
                       [](const Individual& i) { return i.fitness.has_value(); });
}

std::optional<double> Population::best_fitness() const {
    std::optional<double> best;
    for (const auto& ind : individuals) {
        if (ind.fitness && (!best || *ind.fitness > *best)) best = ind.fitness;
    }
    return best;
}

Population init_population(const GaConfig& config, const ParamRanges& ranges, Rng& rng) {
    Population pop;
    pop.individuals.resize(static_cast<std::size_t>(config.pop_limit));
    for (auto& ind : pop.individuals) {
        std::array<double, kNumParams> genes{};
        for (std::size_t j = 0; j < kNumParams; ++j) {
            genes[j] = rng.uniform(ranges[j].low, ranges[j].high);
        }
        genes[0] = std::floor(genes[0]);
        genes[1] = std::floor(genes[1]);
        ind.genome = AcoParams::from_array(genes);
    }
    return pop;
}

SequencePair generation_pair(const GaConfig& config, Rng& rng) {
    if (config.str_length < 2) throw InvalidInput("str_length must be at least 2");
    Sequence tmpl = random_template(static_cast<std::size_t>(config.str_length),
                                    Alphabet::digits(), rng);
    Sequence mutant = mutate_template(tmpl, rng);
    return {std::move(tmpl), std::move(mutant)};
}

Evaluation evaluate_individual(const Individual& ind, const SequencePair& pair,
                               const GaConfig& config, Rng& rng) {
    using clock = std::chrono::steady_clock;
    Evaluation out;
    double wall_seconds = 0;
    std::uint64_t steps = 0;

    try {
        for (int t = 0; t < config.trials_per_individual; ++t) {
            const auto before = clock::now();
            const auto run = aco::run_aco(pair.first, pair.second, ind.genome, rng, config.aco_options);
            wall_seconds += std::chrono::duration<double>(clock::now() - before).count();
            steps += run.ant_steps;
            out.scores.push_back(run.best_score);
        }
    } catch (const std::exception&) {
        out.failed = true;
    }

    double total_time = config.timing == TimingMode::wall_clock
                            ? wall_seconds
                            : static_cast<double>(steps) * kSecondsPerAntStep;
    // a timer with coarse resolution can report zero for tiny runs
    total_time = std::max(total_time, 1e-9);

    if (out.failed) {
        out.trimmed = stats::TrimmedStats{};
        out.trimmed.corrected_mean = stats::kAllTrimmedSentinel;
        out.trimmed.discarded = out.scores.size();
    } else {
        out.trimmed = stats::corrected_mean(out.scores, config.stddev_divisor);
    }

    if (config.fitness == FitnessMode::consistency && !out.failed) {
        out.fitness = stats::consistency_score(out.trimmed, total_time);
    } else {
        out.fitness = stats::ga_score(out.trimmed, total_time);
    }
    return out;
}

void evaluate_population(Population& pop, const SequencePair& pair, const GaConfig& config,
                         bool reuse_fitness) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (!reuse_fitness || !pop.individuals[i].fitness) pending.push_back(i);
    }
    const auto generation = static_cast<std::uint64_t>(pop.generation);
    detail::parallel_for(pending.size(), config.threads, [&](std::size_t k) {
        const std::size_t i = pending[k];
        Rng rng(derive_seed(config.seed ^ kEvaluationStream, generation, i));
        const auto eval = evaluate_individual(pop.individuals[i], pair, config, rng);
        pop.individuals[i].fitness = eval.fitness.value;
    });
    pop.sort();
}

Population next_generation(const Population& pop, const GaConfig& config,
                           const ParamRanges& ranges, Rng& rng) {
    const std::size_t keep =
        std::min(static_cast<std::size_t>(config.keep_parents), pop.individuals.size());
    if (keep == 0) throw InvalidInput("next_generation needs at least one parent");

    Population next;
    next.generation = pop.generation + 1;
    next.individuals.reserve(pop.size());
    for (std::size_t i = 0; i < keep; ++i) {
        next.individuals.push_back(pop.individuals[i]);
    }

    for (std::size_t i = keep; i < pop.size(); ++i) {
        std::size_t parent = rng.below(keep);
        std::array<double, kNumParams> genes{};
        for (std::size_t j = 0; j < kNumParams; ++j) {
            double gene = pop.individuals[parent].genome.to_array()[j];
            const double roll = rng.uniform01();
            if (roll < config.mutation_prob) {
                gene += config.mutation_scale * rng.uniform01() * ranges[j].width();
                gene = std::min(gene, ranges[j].high);
            } else if (roll < 2 * config.mutation_prob) {
                gene -= config.mutation_scale * rng.uniform01() * ranges[j].width();
                gene = std::max(gene, ranges[j].low);
            }
            genes[j] = gene;

            // branch migration: continue copying from another elite parent
            if (rng.uniform01() < config.crossover_prob) {
                parent = rng.below(keep);
            }
        }
        next.individuals.push_back(Individual{AcoParams::from_array(genes), std::nullopt});
    }
    return next;
}

std::string checkpoint_header() {
    std::string out;
    char field[32];
    for (auto name : kParamNames) {
        std::snprintf(field, sizeof field, "%13s ", std::string(name).c_str());
        out += field;
    }
    std::snprintf(field, sizeof field, "%13s ", "SCORE");
    out += field;
    return out;
}

std::string checkpoint_filename(int index) { return "out-" + std::to_string(index) + ".txt"; }

void format_checkpoint(std::ostream& out, const Population& pop) {
    if (!pop.evaluated()) {
        throw InvalidInput("only an evaluated population can be checkpointed");
    }
    out << checkpoint_header() << '\n';
    char field[64];
    for (const auto& ind : pop.individuals) {
        for (double v : ind.genome.to_array()) {
            std::snprintf(field, sizeof field, "%13.9f ", v);
            out << field;
        }
        std::snprintf(field, sizeof field, "%13.9f ", *ind.fitness);
        out << field << '\n';
    }
    out << '\n';
}

Population parse_checkpoint(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError(1, "empty checkpoint");
    if (trim(line) != trim(checkpoint_header())) {
        throw ParseError(1, "checkpoint header does not match the expected columns");
    }

    Population pop;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::istringstream fields(line);
        std::array<double, kNumParams + 1> values{};
        std::size_t count = 0;
        std::string token;
        while (fields >> token) {
            if (count == values.size()) throw ParseError(line_no, "too many columns");
            values[count] = parse_number<double>(token, "column " + std::to_string(count + 1), line_no);
            ++count;
        }
        if (count != values.size()) throw ParseError(line_no, "expected 11 columns");
        std::array<double, kNumParams> genes{};
        std::copy_n(values.begin(), kNumParams, genes.begin());
        pop.individuals.push_back(Individual{AcoParams::from_array(genes), values[kNumParams]});
    }
    return pop;
}

void write_checkpoint(const Population& pop, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        format_checkpoint(out, pop);
        out.flush();
        if (!out) throw std::runtime_error("error writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move checkpoint into place at '" + path.string() + "'");
    }
}

Population read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open checkpoint '" + path.string() + "'");
    return parse_checkpoint(in);
}

DirectorySink::DirectorySink(std::filesystem::path dir) : dir_(std::move(dir)) {}

void DirectorySink::probe() const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir_.string() +
                                 "': " + ec.message());
    }
    const auto probe_file = dir_ / ".antalign-write-probe";
    {
        std::ofstream out(probe_file);
        if (!out || !(out << "probe")) {
            throw std::runtime_error("output directory '" + dir_.string() + "' is not writable");
        }
    }
    std::filesystem::remove(probe_file, ec);
}

void DirectorySink::write(const Population& pop, int index) {
    write_checkpoint(pop, dir_ / checkpoint_filename(index));
}

Population run_ga(const GaConfig& config, const ParamRanges& ranges, Rng& rng,
                  CheckpointSink* sink, const GenerationObserver& observer) {
    config.validate();

    Population pop = init_population(config, ranges, rng);
    SequencePair pair = generation_pair(config, rng);
    std::vector<std::array<double, kNumParams>> previous_elite;
    int stable = 0;
    int checkpoint_index = 0;

    for (int gen = 0;; ++gen) {
        if (gen > 0 && !config.fixed_pair) {
            pair = generation_pair(config, rng);
        }
        pop.generation = gen;
        // with a fixed pair the elite keep their scores; otherwise everyone is re-run
        evaluate_population(pop, pair, config, config.fixed_pair);

        if (observer) observer(GenerationReport{gen, pop, pair});

        if (sink && (gen + 1) % config.record_freq == 0) {
            try {
                sink->write(pop, checkpoint_index);
            } catch (const std::exception& e) {
                throw CheckpointError(e.what(), pop);
            }
            ++checkpoint_index;
        }

        auto elite = elite_set(pop, static_cast<std::size_t>(config.keep_parents));
        stable = (gen > 0 && elite == previous_elite) ? stable + 1 : 0;
        previous_elite = std::move(elite);

        if (stable >= config.equilibrium_generations) break;
        if (config.max_generations && gen + 1 >= *config.max_generations) break;

        pop = next_generation(pop, config, ranges, rng);
    }
    return pop;
}

} // namespace antalign::ga
