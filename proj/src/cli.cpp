#include "antalign/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "antalign/aco.hpp"
#include "antalign/alignment.hpp"
#include "antalign/errors.hpp"
#include "antalign/stats.hpp"
#include "parallel.hpp"

namespace antalign::cli {

namespace {

// stream tags for derive_seed, one per independent use of the master seed
constexpr std::uint64_t kPairStream = 1;
constexpr std::uint64_t kRunStream = 2;
constexpr std::uint64_t kHistPairStream = 3;
constexpr std::uint64_t kHistRunStream = 4;

const char* const kLengthMessage =
    "The string lengths of SEG1 and SEG2 must have an average string length between 10 and 100!";

std::string read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open sequence file '" + path + "'");
    std::string seq;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '>') continue; // FASTA header
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) seq.push_back(c);
        }
    }
    return seq;
}

std::string fmt_double(const char* spec, double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, spec, v);
    return buffer;
}

/// Tuned parameters for a generated pair whose mutant may leave the table's
/// length range; the average is clamped to [10, 100].
AcoParams params_for(const Sequence& x, const Sequence& y) {
    const double avg = std::clamp(average_length(x, y), double(TunedTable::kMinLength),
                                  double(TunedTable::kMaxLength));
    return interpolate_params(avg);
}

Sequence template_for(int length, Rng& rng) {
    return random_template(static_cast<std::size_t>(length), Alphabet::digits(), rng);
}

} // namespace

int cmd_align(const std::string& seg1, const std::string& seg2, const AlignOptions& options,
              std::ostream& out, std::ostream& err) {
    try {
        const std::string text_x = options.from_files ? read_sequence_file(seg1) : seg1;
        const std::string text_y = options.from_files ? read_sequence_file(seg2) : seg2;

        Alphabet alphabet = Alphabet::digits();
        if (options.alphabet == "auto") {
            const std::array<std::string_view, 2> texts{text_x, text_y};
            alphabet = Alphabet::infer(texts);
        } else {
            alphabet = Alphabet::by_name(options.alphabet);
        }
        const Sequence x = Sequence::parse(text_x, alphabet);
        const Sequence y = Sequence::parse(text_y, alphabet);

        AcoParams params;
        if (options.params) {
            params = *options.params;
        } else {
            const double avg = average_length(x, y);
            if (avg < TunedTable::kMinLength || avg > TunedTable::kMaxLength) {
                err << kLengthMessage << '\n';
                return 1;
            }
            params = options.table_path ? TunedTable::load(*options.table_path).interpolate(avg)
                                        : interpolate_params(avg);
        }

        aco::RunOptions run_options;
        run_options.global_decay = options.global_decay;
        Rng rng(options.seed);
        const auto result = aco::run_aco(x, y, params, rng, run_options);

        std::optional<NwResult> nw;
        if (options.compare_nw) nw = nw_align(x, y, run_options.scheme);

        if (options.format == Format::csv) {
            out << "method,score,row_x,markers,row_y\n";
            out << "aco," << result.best_score << ',' << result.best_alignment.row_x << ','
                << result.best_alignment.markers << ',' << result.best_alignment.row_y << '\n';
            if (nw) {
                out << "nw," << nw->score << ',' << nw->alignment.row_x << ','
                    << nw->alignment.markers << ',' << nw->alignment.row_y << '\n';
            }
        } else {
            out << "Aligning: " << x.to_string() << " with " << y.to_string() << '\n';
            out << "The best alignment obtained was:\n" << result.best_alignment.to_text();
            out << "The high score was: " << result.best_score << '\n';
            if (nw) {
                out << "The Needleman-Wunsch alignment is:\n" << nw->alignment.to_text();
                out << "The Needleman-Wunsch score was: " << nw->score << '\n';
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
    if (options.length < TunedTable::kMinLength || options.length > TunedTable::kMaxLength) {
        err << "error: --length must lie between 10 and 100\n";
        return 1;
    }
    if (options.pairs < 0) {
        err << "error: --pairs must be non-negative\n";
        return 1;
    }

    struct Row {
        int nw = 0;
        int aco = 0;
    };
    std::vector<Row> rows(static_cast<std::size_t>(options.pairs));
    try {
        detail::parallel_for(rows.size(), options.threads, [&](std::size_t i) {
            Rng pair_rng(derive_seed(options.seed, kPairStream, i));
            const Sequence x = template_for(options.length, pair_rng);
            const Sequence y = mutate_template(x, pair_rng);

            aco::RunOptions run_options;
            run_options.global_decay = options.global_decay;
            Rng run_rng(derive_seed(options.seed, kRunStream, i));
            rows[i].nw = nw_align(x, y, run_options.scheme).score;
            rows[i].aco = aco::run_aco(x, y, params_for(x, y), run_rng, run_options).best_score;
        });
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (options.format == Format::csv) {
        out << "pair_id,nw_score,aco_score,gap\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << i << ',' << rows[i].nw << ',' << rows[i].aco << ',' << rows[i].nw - rows[i].aco
                << '\n';
        }
    } else {
        char line[96];
        std::snprintf(line, sizeof line, "%8s %9s %9s %6s\n", "pair_id", "nw_score", "aco_score",
                      "gap");
        out << line;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::snprintf(line, sizeof line, "%8zu %9d %9d %6d\n", i, rows[i].nw, rows[i].aco,
                          rows[i].nw - rows[i].aco);
            out << line;
        }
    }
    return 0;
}

int cmd_hist(const HistOptions& options, std::ostream& out, std::ostream& err) {
    if (options.length < TunedTable::kMinLength || options.length > TunedTable::kMaxLength) {
        err << "error: --length must lie between 10 and 100\n";
        return 1;
    }
    if (options.repetitions < 1 || options.bins < 1) {
        err << "error: --repetitions and --bins must be at least 1\n";
        return 1;
    }
    try {
        Rng pair_rng(derive_seed(options.seed, kHistPairStream, 0));
        const Sequence x = template_for(options.length, pair_rng);
        const Sequence y = mutate_template(x, pair_rng);
        const AcoParams params = options.params ? *options.params : params_for(x, y);

        aco::RunOptions run_options;
        run_options.global_decay = options.global_decay;
        std::vector<double> scores;
        scores.reserve(static_cast<std::size_t>(options.repetitions));
        for (int r = 0; r < options.repetitions; ++r) {
            Rng run_rng(derive_seed(options.seed, kHistRunStream, static_cast<std::uint64_t>(r)));
            scores.push_back(aco::run_aco(x, y, params, run_rng, run_options).best_score);
        }

        const auto bins = stats::histogram(scores, static_cast<std::size_t>(options.bins));
        const auto trimmed = stats::corrected_mean(scores);
        std::string skew = "undefined";
        try {
            skew = fmt_double("%.6f", stats::skewness(scores));
        } catch (const UndefinedStatistic&) {
        }

        if (options.format == Format::csv) {
            stats::write_histogram_csv(out, bins);
            out << "# n=" << scores.size() << " raw_mean=" << fmt_double("%.6f", trimmed.raw_mean)
                << " stddev=" << fmt_double("%.6f", trimmed.stddev)
                << " corrected_mean=" << fmt_double("%.6f", trimmed.corrected_mean)
                << " skewness=" << skew << '\n';
        } else {
            out << "Pair: " << x.to_string() << " / " << y.to_string() << '\n';
            char line[96];
            for (const auto& b : bins) {
                std::snprintf(line, sizeof line, "[%10.3f, %10.3f] %6zu ", b.low, b.high, b.count);
                out << line << std::string(b.count, '#') << '\n';
            }
            out << "raw mean " << fmt_double("%.6f", trimmed.raw_mean) << ", stddev "
                << fmt_double("%.6f", trimmed.stddev) << ", corrected mean "
                << fmt_double("%.6f", trimmed.corrected_mean) << ", skewness " << skew << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_tune(const TuneOptions& options, std::ostream& out, std::ostream& err) {
    try {
        options.config.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    ga::DirectorySink sink(options.out_dir);
    try {
        sink.probe();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        Rng rng(options.config.seed);
        const auto observer = [&](const ga::GenerationReport& report) {
            out << "generation " << report.generation << ": best fitness "
                << fmt_double("%.9f", report.population.individuals.front().fitness.value_or(0))
                << '\n';
        };
        const auto pop =
            ga::run_ga(options.config, ParamRanges::standard(), rng, &sink, observer);

        const auto& best = pop.individuals.front().genome;
        out << "Best genome (table order:";
        for (auto name : kParamNames) out << ' ' << name;
        out << "):\n";
        const auto values = best.to_array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << (i ? " " : "") << fmt_double("%.9f", values[i]);
        }
        out << '\n';

        if (options.table_out) {
            TunedTable table = options.table_in ? TunedTable::load(*options.table_in)
                                                : TunedTable::builtin();
            const int len = options.config.str_length;
            if (len % TunedTable::kStep == 0 && len >= TunedTable::kMinLength &&
                len <= TunedTable::kMaxLength) {
                table.set_row(len, best);
            } else {
                err << "warning: length " << len
                    << " is not a table knot; writing the table unchanged\n";
            }
            table.save(*options.table_out);
        }
        return 0;
    } catch (const ga::CheckpointError& e) {
        err << "error: checkpoint failed after generation " << e.population().generation << ": "
            << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

namespace {

Format parse_format(const std::string& s) { return s == "csv" ? Format::csv : Format::text; }

/// Runs fn against the --out file when one was named, else against out.
template <typename Fn>
int with_output(const std::string& path, std::ostream& out, std::ostream& err, Fn&& fn) {
    if (path.empty()) return fn(out);
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return 1;
    }
    const int code = fn(file);
    file.flush();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return 1;
    }
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pairwise sequence alignment by ant colony optimization", "antalign"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    std::string params_text;
    std::string out_path;
    std::string format_name;
    bool no_global_decay = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Random seed")->capture_default_str();
        sub->add_option("--out", out_path, "Write the report to this file");
        sub->add_flag("--no-global-decay", no_global_decay,
                      "Skip the once-per-generation global pheromone decay");
    };

    // align
    auto* align = app.add_subcommand("align", "Align two sequences");
    std::string seg1;
    std::string seg2;
    AlignOptions align_opts;
    std::string table_path;
    align->add_option("SEG1", seg1, "First sequence (or file with --files)")->required();
    align->add_option("SEG2", seg2, "Second sequence (or file with --files)")->required();
    align->add_option("--params", params_text, "Ten comma-separated ACO parameters in table order");
    align->add_flag("--compare-nw", align_opts.compare_nw, "Also print the Needleman-Wunsch alignment");
    align->add_flag("--files", align_opts.from_files, "Treat SEG1 and SEG2 as file paths");
    align->add_option("--alphabet", align_opts.alphabet, "auto, digits, acgt or letters")
        ->check(CLI::IsMember({"auto", "digits", "acgt", "letters"}))
        ->capture_default_str();
    align->add_option("--table", table_path, "Tuned-table CSV to interpolate from");
    align->add_option("--format", format_name, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    add_common(align);

    // compare
    auto* compare = app.add_subcommand("compare", "ACO versus Needleman-Wunsch on generated pairs");
    CompareOptions compare_opts;
    compare->add_option("--pairs", compare_opts.pairs, "Number of pairs")->capture_default_str();
    compare->add_option("--length", compare_opts.length, "Template length (10-100)")
        ->capture_default_str();
    compare->add_option("--threads", compare_opts.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compare->add_option("--format", format_name, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    add_common(compare);

    // hist
    auto* hist = app.add_subcommand("hist", "Score distribution of repeated runs on one pair");
    HistOptions hist_opts;
    hist->add_option("--length", hist_opts.length, "Template length (10-100)")->capture_default_str();
    hist->add_option("--repetitions", hist_opts.repetitions, "Number of ACO runs")
        ->capture_default_str();
    hist->add_option("--bins", hist_opts.bins, "Histogram bins")->capture_default_str();
    hist->add_option("--params", params_text, "Ten comma-separated ACO parameters in table order");
    hist->add_option("--format", format_name, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    add_common(hist);

    // tune
    auto* tune = app.add_subcommand("tune", "Evolve ACO parameters with the genetic algorithm");
    std::string config_path;
    std::string tune_out = ".";
    std::string table_in;
    std::string table_out;
    std::optional<int> pop_size;
    std::optional<int> str_length;
    std::optional<int> generations;
    std::optional<int> trials;
    std::optional<int> record_freq;
    std::optional<int> keep_parents;
    std::optional<int> threads;
    std::optional<double> crossover;
    std::string timing;
    bool fixed_pair = false;
    tune->add_option("--config", config_path, "key=value GA configuration file");
    tune->add_option("--pop", pop_size, "Population size");
    tune->add_option("--length", str_length, "Template length of the generated pairs");
    tune->add_option("--generations", generations, "Stop after this many generations");
    tune->add_option("--trials", trials, "ACO runs per individual");
    tune->add_option("--record-freq", record_freq, "Generations between checkpoints");
    tune->add_option("--keep-parents", keep_parents, "Elite size");
    tune->add_option("--crossover", crossover, "Branch-migration probability");
    tune->add_option("--threads", threads, "Worker threads for evaluation");
    tune->add_option("--timing", timing, "wall or steps")->check(CLI::IsMember({"wall", "steps"}));
    tune->add_flag("--fixed-pair", fixed_pair, "Evaluate every generation on one pair");
    tune->add_option("--table-in", table_in, "Tuned table to update (default: built-in)");
    tune->add_option("--table-out", table_out, "Write the table with the evolved row here");
    tune->add_option("--seed", seed, "Random seed");
    tune->add_option("--out", tune_out, "Checkpoint directory")->capture_default_str();
    tune->add_flag("--no-global-decay", no_global_decay,
                   "Skip the once-per-generation global pheromone decay");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    std::optional<AcoParams> params;
    if (!params_text.empty()) {
        try {
            params = AcoParams::parse_csv(params_text);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
    }

    if (align->parsed()) {
        align_opts.seed = seed;
        align_opts.params = params;
        align_opts.global_decay = !no_global_decay;
        align_opts.format = parse_format(format_name);
        if (!table_path.empty()) align_opts.table_path = table_path;
        return with_output(out_path, out, err,
                           [&](std::ostream& o) { return cmd_align(seg1, seg2, align_opts, o, err); });
    }
    if (compare->parsed()) {
        compare_opts.seed = seed;
        compare_opts.global_decay = !no_global_decay;
        compare_opts.format = format_name.empty() ? Format::csv : parse_format(format_name);
        return with_output(out_path, out, err,
                           [&](std::ostream& o) { return cmd_compare(compare_opts, o, err); });
    }
    if (hist->parsed()) {
        hist_opts.seed = seed;
        hist_opts.params = params;
        hist_opts.global_decay = !no_global_decay;
        hist_opts.format = format_name.empty() ? Format::csv : parse_format(format_name);
        return with_output(out_path, out, err,
                           [&](std::ostream& o) { return cmd_hist(hist_opts, o, err); });
    }

    TuneOptions tune_opts;
    try {
        if (!config_path.empty()) tune_opts.config = ga::GaConfig::load(config_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    auto& cfg = tune_opts.config;
    if (tune->count("--seed")) cfg.seed = seed;
    if (pop_size) cfg.set_population(*pop_size);
    if (keep_parents) cfg.keep_parents = *keep_parents;
    if (str_length) cfg.str_length = *str_length;
    if (generations) cfg.max_generations = *generations;
    if (trials) cfg.trials_per_individual = *trials;
    if (record_freq) cfg.record_freq = *record_freq;
    if (crossover) cfg.crossover_prob = *crossover;
    if (threads) cfg.threads = *threads;
    if (!timing.empty()) {
        cfg.timing = timing == "steps" ? ga::TimingMode::ant_steps : ga::TimingMode::wall_clock;
    }
    if (fixed_pair) cfg.fixed_pair = true;
    if (no_global_decay) cfg.aco_options.global_decay = false;
    tune_opts.out_dir = tune_out;
    if (!table_in.empty()) tune_opts.table_in = table_in;
    if (!table_out.empty()) tune_opts.table_out = table_out;
    return cmd_tune(tune_opts, out, err);
}

} // namespace antalign::cli
