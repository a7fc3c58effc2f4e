#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "antalign/sequence.hpp"

namespace antalign {

/// Lower bound substituted for zero wherever a parameter feeds a logarithm.
inline constexpr double kParamFloor = 1e-9;

inline constexpr std::size_t kNumParams = 10;

/// Parameter slots in tuned-table order.
enum class ParamIndex : std::size_t {
    max_generations = 0,
    num_ants,
    pher_step,
    pher_weight,
    match_weight,
    region_weight,
    init_pher,
    local_decay,
    global_decay,
    prob_prob,
};

/// Names used in checkpoint headers, in table order.
inline constexpr std::array<std::string_view, kNumParams> kParamNames = {
    "MAX_GEN",       "NUM_ANTS",  "PHER_STEP", "PHER_WEIGHT", "MATCH_WEIGHT",
    "REGION_WEIGHT", "INIT_PHER", "L_DECAY",   "G_DECAY",     "PROB_PROB",
};

/// One ACO configuration. All ten values are held as reals so the GA can
/// mutate them continuously; the two count parameters are floored on use.
struct AcoParams {
    double max_generations = 10;
    double num_ants = 5;
    double pher_step = 0.1;
    double pher_weight = 1;
    double match_weight = 1;
    double region_weight = 1;
    double init_pher = 0.5;
    double local_decay = 0.7;
    double global_decay = 0.9;
    double prob_prob = 0.5;

    int generations() const noexcept { return static_cast<int>(std::floor(max_generations)); }
    int ants() const noexcept { return static_cast<int>(std::floor(num_ants)); }

    std::array<double, kNumParams> to_array() const noexcept;
    static AcoParams from_array(const std::array<double, kNumParams>& values) noexcept;

    double get(ParamIndex i) const noexcept { return to_array()[static_cast<std::size_t>(i)]; }

    /// Parses ten comma-separated values in table order.
    static AcoParams parse_csv(std::string_view text);

    friend bool operator==(const AcoParams&, const AcoParams&) = default;
};

struct Bounds {
    double low;
    double high;

    bool contains(double v) const noexcept { return v >= low && v <= high; }
    double width() const noexcept { return high - low; }
};

/// Per-parameter closed ranges, indexed in table order.
struct ParamRanges {
    std::array<Bounds, kNumParams> bounds;

    const Bounds& operator[](ParamIndex i) const { return bounds[static_cast<std::size_t>(i)]; }
    const Bounds& operator[](std::size_t i) const { return bounds[i]; }

    /// The GA search ranges with zero lower bounds replaced by kParamFloor.
    static ParamRanges standard();
};

struct ParamViolation {
    ParamIndex param;
    double value;
    Bounds bounds;

    std::string describe() const;
};

/// Every field outside its range. Empty when the parameters are valid.
std::vector<ParamViolation> validate_params(const AcoParams& params,
                                            const ParamRanges& ranges = ParamRanges::standard());

/// Clamps every field into its range.
AcoParams clamp_params(const AcoParams& params, const ParamRanges& ranges = ParamRanges::standard());

/// Tuned parameter rows at string lengths 10, 20, ..., 100.
class TunedTable {
public:
    static constexpr int kMinLength = 10;
    static constexpr int kMaxLength = 100;
    static constexpr int kStep = 10;
    static constexpr std::size_t kRows = 10;

    /// The shipped GA-optimized table.
    static const TunedTable& builtin();

    explicit TunedTable(const std::array<AcoParams, kRows>& rows) : rows_(rows) {}

    /// Row for a knot length (10, 20, ..., 100). Throws OutOfRange otherwise.
    const AcoParams& row(int length) const;
    void set_row(int length, const AcoParams& params);

    /// Linear interpolation between the bracketing knots. Throws OutOfRange
    /// outside [10, 100]; length 100 returns the last row.
    AcoParams interpolate(double avg_len) const;

    /// CSV with a header row and one row per knot length.
    void write_csv(std::ostream& out) const;
    static TunedTable read_csv(std::istream& in);

    static TunedTable load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::array<AcoParams, kRows> rows_;
};

/// Interpolates the shipped table.
AcoParams interpolate_params(double avg_len);

/// (|x| + |y|) / 2
double average_length(const Sequence& x, const Sequence& y) noexcept;

} // namespace antalign
