#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "antalign/ga.hpp"
#include "antalign/params.hpp"

namespace antalign::cli {

inline constexpr std::uint64_t kDefaultSeed = 20040501;

enum class Format { text, csv };

struct AlignOptions {
    std::uint64_t seed = kDefaultSeed;
    std::optional<AcoParams> params;
    std::optional<std::string> table_path;
    std::string alphabet = "auto";
    bool compare_nw = false;
    bool global_decay = true;
    bool from_files = false;
    Format format = Format::text;
};

struct CompareOptions {
    int pairs = 20;
    int length = 20;
    std::uint64_t seed = kDefaultSeed;
    bool global_decay = true;
    int threads = 1;
    Format format = Format::csv;
};

struct HistOptions {
    int length = 50;
    int repetitions = 100;
    int bins = 10;
    std::uint64_t seed = kDefaultSeed;
    std::optional<AcoParams> params;
    bool global_decay = true;
    Format format = Format::csv;
};

struct TuneOptions {
    ga::GaConfig config;
    std::string out_dir = ".";
    std::optional<std::string> table_in;
    std::optional<std::string> table_out;
};

/// Each command writes its report to out and diagnostics to err, and
/// returns the process exit code.
int cmd_align(const std::string& seg1, const std::string& seg2, const AlignOptions& options,
              std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);
int cmd_hist(const HistOptions& options, std::ostream& out, std::ostream& err);
int cmd_tune(const TuneOptions& options, std::ostream& out, std::ostream& err);

/// Full command line, args[0] being the program name. Output files named
/// with --out are written directly; everything else goes to out / err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace antalign::cli
