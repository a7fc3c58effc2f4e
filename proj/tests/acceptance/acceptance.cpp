// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antalign/aco.hpp"
#include "antalign/alignment.hpp"
#include "antalign/cli.hpp"
#include "antalign/ga.hpp"
#include "antalign/params.hpp"
#include "antalign/stats.hpp"
#include "oracles/alignment_oracle.hpp"

using namespace antalign;

namespace {

// Tolerances and sizes.
constexpr int kNwPairs = 1000;
constexpr std::size_t kNwMaxLength = 8;
constexpr double kNwSeconds = 60;

constexpr int kBoundPairs = 200;
constexpr double kBoundSeconds = 300;

constexpr int kSeededRuns = 20;
constexpr int kTypeOneRequired = 18;
constexpr int kTypeTwoRequired = 15;
constexpr int kTypeTwoSlack = 8;

constexpr int kHistRuns = 100;
constexpr std::size_t kHistLength = 50;
constexpr std::size_t kMinDistinctScores = 3;
constexpr double kMaxAbsSkew = 1.0;

constexpr double kMidpointRelTol = 1e-12;

constexpr int kGaPopulation = 50;
constexpr int kGaLength = 10;
constexpr int kGaGenerations = 10;
constexpr double kGaSeconds = 300;

constexpr std::size_t kCheckpointGenomes = 500;

constexpr std::uint64_t kSeed = 20040501;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass;
    std::string detail;
};

// Smallest pheromone entry seen after any generation of criteria 2-5.
double g_min_pheromone = std::numeric_limits<double>::infinity();
std::size_t g_generations_checked = 0;

aco::RunResult tracked_run(const Sequence& x, const Sequence& y, const AcoParams& p, Rng& rng) {
    auto r = aco::run_aco(x, y, p, rng);
    for (double level : r.per_generation_min_pheromone) {
        g_min_pheromone = std::min(g_min_pheromone, level);
        ++g_generations_checked;
    }
    return r;
}

AcoParams clamped_params(const Sequence& x, const Sequence& y) {
    return interpolate_params(std::clamp(average_length(x, y), 10.0, 100.0));
}

std::string fmt(const char* spec, double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, spec, v);
    return buffer;
}

Verdict nw_oracle() {
    const auto start = Clock::now();
    Rng rng(derive_seed(kSeed, 101));
    int mismatches = 0;
    for (int i = 0; i < kNwPairs; ++i) {
        const auto x = random_template(1 + rng.below(kNwMaxLength), Alphabet::digits(), rng);
        const auto y = random_template(1 + rng.below(kNwMaxLength), Alphabet::digits(), rng);
        if (nw_align(x, y).score != oracle::exhaustive_best(x.to_string(), y.to_string())) {
            ++mismatches;
        }
    }
    const double t = seconds_since(start);
    return {mismatches == 0 && t < kNwSeconds,
            std::to_string(kNwPairs) + " pairs, " + std::to_string(mismatches) + " mismatches, " +
                fmt("%.2f s", t)};
}

Verdict optimality_bound() {
    const auto start = Clock::now();
    Rng rng(derive_seed(kSeed, 102));
    int violations = 0;
    int pairs = 0;
    while (pairs < kBoundPairs) {
        const auto tmpl = random_template(10 + rng.below(21), Alphabet::digits(), rng);
        const auto mutant = mutate_template(tmpl, rng);
        if (mutant.size() < 2) continue;
        ++pairs;
        Rng run_rng = rng.split(static_cast<std::uint64_t>(pairs));
        const auto r = tracked_run(tmpl, mutant, clamped_params(tmpl, mutant), run_rng);
        if (r.best_score > nw_align(tmpl, mutant).score) ++violations;
    }
    const double t = seconds_since(start);
    return {violations == 0 && t < kBoundSeconds,
            std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations, " +
                fmt("%.2f s", t)};
}

std::vector<int> seeded_scores(const Sequence& x, const Sequence& y, std::uint64_t stream) {
    const auto p = interpolate_params(average_length(x, y));
    std::vector<int> scores;
    for (int i = 0; i < kSeededRuns; ++i) {
        Rng rng(derive_seed(kSeed, stream, static_cast<std::uint64_t>(i)));
        scores.push_back(tracked_run(x, y, p, rng).best_score);
    }
    return scores;
}

Verdict type_one() {
    const auto x = Sequence::parse("abcdefgggghijklmnopq", Alphabet::letters());
    const auto y = Sequence::parse("abcdefghijklmnopq", Alphabet::letters());
    const int nw = nw_align(x, y).score;
    const auto scores = seeded_scores(x, y, 103);
    const auto hits = std::count(scores.begin(), scores.end(), nw);
    return {hits >= kTypeOneRequired && nw == 73,
            "NW " + std::to_string(nw) + ", optimal in " + std::to_string(hits) + "/" +
                std::to_string(kSeededRuns)};
}

Verdict type_two() {
    const auto x = Sequence::parse("qponmlkjihgfedcba", Alphabet::letters());
    const auto y = Sequence::parse("abcdefghijklmnopq", Alphabet::letters());
    const int nw = nw_align(x, y).score;
    const int oracle_nw = oracle::suffix_dp_best(x.to_string(), y.to_string());
    const auto scores = seeded_scores(x, y, 104);
    const auto close = std::count_if(scores.begin(), scores.end(),
                                     [&](int s) { return nw - s <= kTypeTwoSlack; });
    return {close >= kTypeTwoRequired && nw == oracle_nw,
            "NW " + std::to_string(nw) + " (oracle " + std::to_string(oracle_nw) + "), within " +
                std::to_string(kTypeTwoSlack) + " in " + std::to_string(close) + "/" +
                std::to_string(kSeededRuns)};
}

Verdict distribution() {
    Rng pair_rng(derive_seed(kSeed, 105));
    const auto x = random_template(kHistLength, Alphabet::digits(), pair_rng);
    const auto y = mutate_template(x, pair_rng);
    const auto p = clamped_params(x, y);
    std::vector<double> scores;
    for (int i = 0; i < kHistRuns; ++i) {
        Rng rng(derive_seed(kSeed, 106, static_cast<std::uint64_t>(i)));
        scores.push_back(tracked_run(x, y, p, rng).best_score);
    }
    const std::set<double> distinct(scores.begin(), scores.end());
    double skew = std::numeric_limits<double>::quiet_NaN();
    try {
        skew = stats::skewness(scores);
    } catch (const std::exception&) {
    }
    return {distinct.size() >= kMinDistinctScores && std::abs(skew) <= kMaxAbsSkew,
            std::to_string(distinct.size()) + " distinct scores, skewness " + fmt("%.4f", skew)};
}

Verdict interpolation() {
    const auto& table = TunedTable::builtin();
    int knot_errors = 0;
    double worst = 0;
    for (int len = 10; len <= 100; len += 10) {
        const auto got = interpolate_params(len).to_array();
        const auto want = table.row(len).to_array();
        for (std::size_t i = 0; i < kNumParams; ++i) {
            if (got[i] != want[i]) ++knot_errors;
        }
        if (len == 100) continue;
        const auto mid = interpolate_params(len + 5).to_array();
        const auto next = table.row(len + 10).to_array();
        for (std::size_t i = 0; i < kNumParams; ++i) {
            const double expected = (want[i] + next[i]) / 2;
            worst = std::max(worst, std::abs(mid[i] - expected) / std::abs(expected));
        }
    }
    return {knot_errors == 0 && worst <= kMidpointRelTol,
            std::to_string(knot_errors) + " knot mismatches, worst midpoint rel. error " +
                fmt("%.3g", worst)};
}

Verdict ga_desk_run() {
    const auto start = Clock::now();
    ga::GaConfig c;
    c.set_population(kGaPopulation);
    c.str_length = kGaLength;
    c.fixed_pair = true;
    c.max_generations = kGaGenerations;
    c.equilibrium_generations = kGaGenerations + 1;
    Rng rng(kSeed);
    std::vector<double> best;
    ga::run_ga(c, ParamRanges::standard(), rng, nullptr, [&](const ga::GenerationReport& r) {
        best.push_back(r.population.best_fitness().value_or(-std::numeric_limits<double>::infinity()));
    });
    int drops = 0;
    for (std::size_t i = 1; i < best.size(); ++i) drops += best[i] < best[i - 1];
    const double t = seconds_since(start);
    return {drops == 0 && best.size() == static_cast<std::size_t>(kGaGenerations) && t < kGaSeconds,
            std::to_string(best.size()) + " generations, " + std::to_string(drops) +
                " decreases, best " + fmt("%.6g", best.empty() ? 0 : best.back()) + ", " +
                fmt("%.2f s", t)};
}

Verdict pheromone_positivity() {
    return {g_generations_checked > 0 && g_min_pheromone > 0,
            std::to_string(g_generations_checked) + " generations checked, minimum " +
                fmt("%.3g", g_min_pheromone)};
}

Verdict checkpoint_fidelity() {
    Rng rng(derive_seed(kSeed, 107));
    ga::GaConfig c;
    c.set_population(static_cast<int>(kCheckpointGenomes));
    auto pop = ga::init_population(c, ParamRanges::standard(), rng);
    for (auto& ind : pop.individuals) {
        // continuous genes for the count slots too, so every column exercises 9 decimals
        auto g = ind.genome.to_array();
        g[0] += rng.uniform01();
        g[1] += rng.uniform01();
        ind.genome = AcoParams::from_array(g);
        ind.fitness = rng.uniform(-1e5, 1e5);
    }
    const auto path = std::filesystem::temp_directory_path() / "antalign_acceptance_out-0.txt";
    ga::write_checkpoint(pop, path);
    const auto back = ga::read_checkpoint(path);

    std::string header;
    {
        std::ifstream in(path);
        std::getline(in, header);
    }
    std::filesystem::remove(path);

    std::string expected;
    for (const char* name : {"MAX_GEN", "NUM_ANTS", "PHER_STEP", "PHER_WEIGHT", "MATCH_WEIGHT",
                             "REGION_WEIGHT", "INIT_PHER", "L_DECAY", "G_DECAY", "PROB_PROB",
                             "SCORE"}) {
        char field[32];
        std::snprintf(field, sizeof field, "%13s ", name);
        expected += field;
    }

    std::size_t mismatched = 0;
    if (back.size() != pop.size()) mismatched = pop.size();
    for (std::size_t i = 0; i < std::min(back.size(), pop.size()); ++i) {
        const auto a = pop.individuals[i].genome.to_array();
        const auto b = back.individuals[i].genome.to_array();
        bool ok = fmt("%.9f", *pop.individuals[i].fitness) == fmt("%.9f", *back.individuals[i].fitness);
        for (std::size_t j = 0; j < kNumParams; ++j) ok = ok && fmt("%.9f", a[j]) == fmt("%.9f", b[j]);
        mismatched += !ok;
    }
    return {mismatched == 0 && header == expected,
            std::to_string(pop.size()) + " genomes, " + std::to_string(mismatched) +
                " mismatches, header " + (header == expected ? "exact" : "differs")};
}

Verdict determinism() {
    const std::vector<std::vector<std::string>> commands = {
        {"antalign", "align", "0123012301230", "0123301230120", "--compare-nw", "--seed", "11"},
        {"antalign", "compare", "--pairs", "10", "--length", "20", "--seed", "12"},
        {"antalign", "hist", "--length", "30", "--repetitions", "30", "--seed", "13"},
    };
    int differing = 0;
    for (const auto& args : commands) {
        std::ostringstream out1, err1, out2, err2;
        const int c1 = cli::run(args, out1, err1);
        const int c2 = cli::run(args, out2, err2);
        if (c1 != 0 || c2 != 0 || out1.str() != out2.str() || out1.str().empty()) ++differing;
    }
    return {differing == 0, "align/compare/hist, " + std::to_string(differing) + " differing"};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "NW oracle equivalence", nw_oracle},
        {2, "ACO optimality bound", optimality_bound},
        {3, "Type I reproduction", type_one},
        {4, "Type II behavior", type_two},
        {5, "score distribution sanity", distribution},
        {6, "interpolation exactness", interpolation},
        {7, "GA desk run", ga_desk_run},
        {8, "pheromone positivity", pheromone_positivity},
        {9, "checkpoint fidelity", checkpoint_fidelity},
        {10, "determinism", determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v{false, ""};
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("[%s] %2d %-28s %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
