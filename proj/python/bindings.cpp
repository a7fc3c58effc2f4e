#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>
#include <string>

#include "antalign/aco.hpp"
#include "antalign/alignment.hpp"
#include "antalign/errors.hpp"
#include "antalign/ga.hpp"
#include "antalign/params.hpp"
#include "antalign/sequence.hpp"
#include "antalign/stats.hpp"

namespace py = pybind11;
using namespace antalign;

namespace {

Alphabet resolve_alphabet(const std::string& name, const std::string& x, const std::string& y) {
    if (name != "auto") return Alphabet::by_name(name);
    const std::array<std::string_view, 2> texts{x, y};
    return Alphabet::infer(texts);
}

std::pair<Sequence, Sequence> parse_pair(const std::string& x, const std::string& y,
                                         const std::string& alphabet) {
    const auto a = resolve_alphabet(alphabet, x, y);
    return {Sequence::parse(x, a), Sequence::parse(y, a)};
}

ScoringScheme scheme_of(int match, int mismatch, int gap) {
    ScoringScheme s{match, mismatch, gap};
    s.validate();
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pairwise sequence alignment by ant colony optimization";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Alignment>(m, "Alignment")
        .def(py::init([](std::string row_x, std::string row_y) {
                 Alignment a{std::move(row_x), {}, std::move(row_y)};
                 a.refresh_markers();
                 return a;
             }),
             py::arg("row_x"), py::arg("row_y"))
        .def_readonly("row_x", &Alignment::row_x)
        .def_readonly("markers", &Alignment::markers)
        .def_readonly("row_y", &Alignment::row_y)
        .def("ungapped_x", &Alignment::ungapped_x)
        .def("ungapped_y", &Alignment::ungapped_y)
        .def("well_formed", &Alignment::well_formed)
        .def("to_text", &Alignment::to_text)
        .def("__eq__", [](const Alignment& a, const Alignment& b) { return a == b; })
        .def("__repr__", [](const Alignment& a) {
            return "Alignment('" + a.row_x + "', '" + a.row_y + "')";
        });

    m.def(
        "score_alignment",
        [](const Alignment& a, int match, int mismatch, int gap) {
            return score_alignment(a, scheme_of(match, mismatch, gap));
        },
        py::arg("alignment"), py::arg("match") = 5, py::arg("mismatch") = -3, py::arg("gap") = -4);

    m.def(
        "nw_align",
        [](const std::string& x, const std::string& y, const std::string& alphabet, int match,
           int mismatch, int gap) {
            const auto [sx, sy] = parse_pair(x, y, alphabet);
            const auto r = nw_align(sx, sy, scheme_of(match, mismatch, gap));
            return py::make_tuple(r.score, r.alignment);
        },
        py::arg("x"), py::arg("y"), py::arg("alphabet") = "auto", py::arg("match") = 5,
        py::arg("mismatch") = -3, py::arg("gap") = -4,
        "Optimal global alignment; returns (score, Alignment).");

    m.def(
        "random_template",
        [](std::size_t length, std::uint64_t seed, const std::string& alphabet) {
            Rng rng(seed);
            return random_template(length, Alphabet::by_name(alphabet), rng).to_string();
        },
        py::arg("length"), py::arg("seed"), py::arg("alphabet") = "digits");

    m.def(
        "mutate_template",
        [](const std::string& tmpl, std::uint64_t seed, const std::string& alphabet) {
            Rng rng(seed);
            return mutate_template(Sequence::parse(tmpl, Alphabet::by_name(alphabet)), rng)
                .to_string();
        },
        py::arg("template"), py::arg("seed"), py::arg("alphabet") = "digits");

    py::class_<AcoParams>(m, "AcoParams")
        .def(py::init<>())
        .def(py::init([](const std::array<double, kNumParams>& v) { return AcoParams::from_array(v); }),
             py::arg("values"))
        .def_readwrite("max_generations", &AcoParams::max_generations)
        .def_readwrite("num_ants", &AcoParams::num_ants)
        .def_readwrite("pher_step", &AcoParams::pher_step)
        .def_readwrite("pher_weight", &AcoParams::pher_weight)
        .def_readwrite("match_weight", &AcoParams::match_weight)
        .def_readwrite("region_weight", &AcoParams::region_weight)
        .def_readwrite("init_pher", &AcoParams::init_pher)
        .def_readwrite("local_decay", &AcoParams::local_decay)
        .def_readwrite("global_decay", &AcoParams::global_decay)
        .def_readwrite("prob_prob", &AcoParams::prob_prob)
        .def("to_list", &AcoParams::to_array)
        .def("__eq__", [](const AcoParams& a, const AcoParams& b) { return a == b; })
        .def("__repr__", [](const AcoParams& p) {
            std::ostringstream out;
            out << "AcoParams([";
            const auto v = p.to_array();
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
            out << "])";
            return out.str();
        });

    m.attr("PARAM_NAMES") = [] {
        py::list names;
        for (auto n : kParamNames) names.append(std::string(n));
        return names;
    }();

    m.def("interpolate_params", &interpolate_params, py::arg("avg_len"));
    m.def(
        "validate_params",
        [](const AcoParams& p) {
            std::vector<std::string> out;
            for (const auto& v : validate_params(p)) out.push_back(v.describe());
            return out;
        },
        py::arg("params"), "Descriptions of every out-of-range field; empty when valid.");

    py::class_<aco::RunResult>(m, "RunResult")
        .def_readonly("best_score", &aco::RunResult::best_score)
        .def_readonly("best_alignment", &aco::RunResult::best_alignment)
        .def_readonly("generations_run", &aco::RunResult::generations_run)
        .def_readonly("per_generation_best", &aco::RunResult::per_generation_best)
        .def_readonly("per_generation_min_pheromone", &aco::RunResult::per_generation_min_pheromone)
        .def_readonly("ant_steps", &aco::RunResult::ant_steps);

    m.def(
        "run_aco",
        [](const std::string& x, const std::string& y, std::optional<AcoParams> params,
           std::uint64_t seed, bool global_decay, const std::string& alphabet) {
            const auto [sx, sy] = parse_pair(x, y, alphabet);
            const AcoParams p = params ? *params : interpolate_params(average_length(sx, sy));
            aco::RunOptions options;
            options.global_decay = global_decay;
            Rng rng(seed);
            py::gil_scoped_release release;
            return aco::run_aco(sx, sy, p, rng, options);
        },
        py::arg("x"), py::arg("y"), py::arg("params") = py::none(), py::arg("seed") = 20040501,
        py::arg("global_decay") = true, py::arg("alphabet") = "auto",
        "One colony run. Without params the tuned table is interpolated at the average length.");

    py::class_<stats::TrimmedStats>(m, "TrimmedStats")
        .def_readonly("raw_mean", &stats::TrimmedStats::raw_mean)
        .def_readonly("stddev", &stats::TrimmedStats::stddev)
        .def_readonly("corrected_mean", &stats::TrimmedStats::corrected_mean)
        .def_readonly("kept", &stats::TrimmedStats::kept)
        .def_readonly("discarded", &stats::TrimmedStats::discarded);

    m.attr("ALL_TRIMMED_SENTINEL") = stats::kAllTrimmedSentinel;

    m.def(
        "corrected_mean",
        [](const std::vector<double>& samples, bool sample_stddev) {
            return stats::corrected_mean(samples, sample_stddev ? stats::StddevDivisor::n_minus_one
                                                                : stats::StddevDivisor::n_plus_one);
        },
        py::arg("samples"), py::arg("sample_stddev") = false);
    m.def(
        "ga_score",
        [](const stats::TrimmedStats& t, double total_time) { return stats::ga_score(t, total_time).value; },
        py::arg("stats"), py::arg("total_time"));
    m.def(
        "histogram",
        [](const std::vector<double>& samples, std::size_t bins) {
            std::vector<std::tuple<double, double, std::size_t>> out;
            for (const auto& b : stats::histogram(samples, bins)) out.emplace_back(b.low, b.high, b.count);
            return out;
        },
        py::arg("samples"), py::arg("bins"), "List of (low, high, count).");
    m.def(
        "skewness", [](const std::vector<double>& samples) { return stats::skewness(samples); },
        py::arg("samples"));

    m.def(
        "run_ga",
        [](int pop, int length, int generations, int trials, std::uint64_t seed, bool fixed_pair,
           bool step_timing, int threads, const std::function<void(int, double)>& on_generation) {
            ga::GaConfig c;
            c.set_population(pop);
            c.str_length = length;
            c.max_generations = generations;
            c.trials_per_individual = trials;
            c.seed = seed;
            c.fixed_pair = fixed_pair;
            c.timing = step_timing ? ga::TimingMode::ant_steps : ga::TimingMode::wall_clock;
            c.threads = threads;
            Rng rng(seed);
            ga::GenerationObserver observer;
            if (on_generation) {
                observer = [&](const ga::GenerationReport& r) {
                    on_generation(r.generation, r.population.best_fitness().value_or(0));
                };
            }
            const auto result = ga::run_ga(c, ParamRanges::standard(), rng, nullptr, observer);
            std::vector<std::pair<AcoParams, double>> out;
            for (const auto& ind : result.individuals) out.emplace_back(ind.genome, ind.fitness.value_or(0));
            return out;
        },
        py::arg("pop") = 50, py::arg("length") = 10, py::arg("generations") = 10,
        py::arg("trials") = 7, py::arg("seed") = 20040501, py::arg("fixed_pair") = true,
        py::arg("step_timing") = true, py::arg("threads") = 1,
        py::arg("on_generation") = std::function<void(int, double)>{},
        "Evolves ACO parameters; returns the final population as (AcoParams, fitness), best first.");

    m.def(
        "format_checkpoint",
        [](const std::vector<std::pair<AcoParams, double>>& members) {
            ga::Population pop;
            for (const auto& [g, f] : members) pop.individuals.push_back({g, f});
            std::ostringstream out;
            ga::format_checkpoint(out, pop);
            return out.str();
        },
        py::arg("members"));
    m.def(
        "parse_checkpoint",
        [](const std::string& text) {
            std::istringstream in(text);
            std::vector<std::pair<AcoParams, double>> out;
            for (const auto& ind : ga::parse_checkpoint(in).individuals) {
                out.emplace_back(ind.genome, ind.fitness.value_or(0));
            }
            return out;
        },
        py::arg("text"));
    m.def("checkpoint_header", &ga::checkpoint_header);
}
