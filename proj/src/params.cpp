#include "antalign/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "antalign/errors.hpp"

namespace antalign {

namespace {

std::optional<double> parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) return std::nullopt;
    // std::from_chars rejects a leading '+' and a bare leading '.'; handle the latter
    std::string buffer(text);
    if (buffer.front() == '.') buffer.insert(buffer.begin(), '0');
    double value = 0;
    const auto [ptr, ec] = std::from_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{} || ptr != buffer.data() + buffer.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string format_value(double v) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
    return std::string(buffer, ptr);
}

// GA-optimized rows at lengths 10..100, columns in table order.
constexpr std::array<std::array<double, kNumParams>, TunedTable::kRows> kBuiltinRows = {{
    {10, 5, .411191490, 9.434392207, 6.109820365, 3.909960135, 0.853763237, 0.660878498, 0.917907684, 0.990544051},
    {10, 5, .438349294, 9.423857194, 6.926580738, 2.350289525, 0.830586273, 0.635274652, 1, 1},
    {10, 5, .453581583, 9.353249096, 9.343075608, 2.224402772, 0.827315180, 0.606102419, 1, 1},
    {10, 5, .517059770, 9.284172996, 9.244311660, 1.853908945, 0.827352487, 0.595236898, 0.965550166, 1},
    {10, 5, .432201854, 9.290221874, 10, 2.142958734, 0.798933405, 0.571805707, 1, 1},
    {10, 5, .436950953, 9.282690356, 10, 1.915834968, 0.728488635, 0.577967010, 1, 1},
    {10, 5, .417636990, 9.149204714, 10, 1.736982155, 0.730894471, 0.579124731, 1, 1},
    {10, 5, .366514982, 9.064648465, 10, 1.878705913, 0.620157623, 0.532124853, 1, 1},
    {12, 8, .341437549, 9.332940631, 10, 1.856936304, 0.622498305, 0.519128179, 1, 1},
    {15, 10, .329430526, 9.259328124, 10, 1.862138526, 0.628942392, 0.515925041, 1, 1},
}};

TunedTable make_builtin() {
    std::array<AcoParams, TunedTable::kRows> rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = AcoParams::from_array(kBuiltinRows[i]);
    }
    return TunedTable(rows);
}

std::size_t row_index(int length) {
    if (length < TunedTable::kMinLength || length > TunedTable::kMaxLength ||
        length % TunedTable::kStep != 0) {
        throw OutOfRange("no tuned-table row for length " + std::to_string(length));
    }
    return static_cast<std::size_t>(length / TunedTable::kStep - 1);
}

constexpr std::string_view kCsvHeader =
    "length,max_gen,num_ants,pher_step,pher_weight,match_weight,region_weight,init_pher,"
    "l_decay,g_decay,prob_prob";

} // namespace

std::array<double, kNumParams> AcoParams::to_array() const noexcept {
    return {max_generations, num_ants,  pher_step,   pher_weight,  match_weight,
            region_weight,   init_pher, local_decay, global_decay, prob_prob};
}

AcoParams AcoParams::from_array(const std::array<double, kNumParams>& v) noexcept {
    AcoParams p;
    p.max_generations = v[0];
    p.num_ants = v[1];
    p.pher_step = v[2];
    p.pher_weight = v[3];
    p.match_weight = v[4];
    p.region_weight = v[5];
    p.init_pher = v[6];
    p.local_decay = v[7];
    p.global_decay = v[8];
    p.prob_prob = v[9];
    return p;
}

AcoParams AcoParams::parse_csv(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != kNumParams) {
        throw InvalidInput("expected " + std::to_string(kNumParams) +
                           " comma-separated parameter values, got " +
                           std::to_string(parts.size()));
    }
    std::array<double, kNumParams> values{};
    for (std::size_t i = 0; i < kNumParams; ++i) {
        const auto v = parse_double(parts[i]);
        if (!v) {
            throw InvalidInput("parameter " + std::string(kParamNames[i]) + " is not a number: '" +
                               std::string(parts[i]) + "'");
        }
        values[i] = *v;
    }
    return from_array(values);
}

ParamRanges ParamRanges::standard() {
    constexpr double eps = kParamFloor;
    return ParamRanges{{{
        {10, 40},   // max generations
        {5, 30},    // ants
        {eps, 1},   // pheromone step
        {eps, 10},  // pheromone weight
        {eps, 10},  // match weight
        {eps, 10},  // region weight
        {eps, 1},   // initial pheromone
        {eps, 1},   // local decay
        {eps, 1},   // global decay
        {eps, 1},   // probabilistic-choice probability
    }}};
}

std::string ParamViolation::describe() const {
    std::ostringstream os;
    os << kParamNames[static_cast<std::size_t>(param)] << " = " << value << " outside ["
       << bounds.low << ", " << bounds.high << "]";
    return os.str();
}

std::vector<ParamViolation> validate_params(const AcoParams& params, const ParamRanges& ranges) {
    std::vector<ParamViolation> out;
    const auto values = params.to_array();
    for (std::size_t i = 0; i < kNumParams; ++i) {
        if (!ranges[i].contains(values[i])) {
            out.push_back({static_cast<ParamIndex>(i), values[i], ranges[i]});
        }
    }
    return out;
}

AcoParams clamp_params(const AcoParams& params, const ParamRanges& ranges) {
    auto values = params.to_array();
    for (std::size_t i = 0; i < kNumParams; ++i) {
        values[i] = std::clamp(values[i], ranges[i].low, ranges[i].high);
    }
    return AcoParams::from_array(values);
}

const TunedTable& TunedTable::builtin() {
    static const TunedTable table = make_builtin();
    return table;
}

const AcoParams& TunedTable::row(int length) const { return rows_[row_index(length)]; }

void TunedTable::set_row(int length, const AcoParams& params) { rows_[row_index(length)] = params; }

AcoParams TunedTable::interpolate(double avg_len) const {
    if (!(avg_len >= kMinLength && avg_len <= kMaxLength)) {
        throw OutOfRange("the sequences must have an average length between 10 and 100");
    }
    const int low = static_cast<int>(std::floor(avg_len / kStep)) * kStep;
    if (low == kMaxLength) {
        return row(kMaxLength);
    }
    const int high = low + kStep;
    const double where = avg_len - low;
    const auto lo = row(low).to_array();
    const auto hi = row(high).to_array();
    std::array<double, kNumParams> out{};
    for (std::size_t i = 0; i < kNumParams; ++i) {
        out[i] = where * (hi[i] - lo[i]) / kStep + lo[i];
    }
    return AcoParams::from_array(out);
}

void TunedTable::write_csv(std::ostream& out) const {
    out << kCsvHeader << '\n';
    for (std::size_t r = 0; r < kRows; ++r) {
        out << (static_cast<int>(r) + 1) * kStep;
        for (double v : rows_[r].to_array()) {
            out << ',' << format_value(v);
        }
        out << '\n';
    }
}

TunedTable TunedTable::read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError(1, "empty tuned-table file");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) {
        throw ParseError(line_no, "unexpected tuned-table header");
    }

    std::array<AcoParams, kRows> rows{};
    std::array<bool, kRows> seen{};
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != kNumParams + 1) {
            throw ParseError(line_no, "expected 11 fields");
        }
        const auto length = parse_double(parts[0]);
        if (!length || *length != std::floor(*length)) {
            throw ParseError(line_no, "bad length field");
        }
        std::size_t idx = 0;
        try {
            idx = row_index(static_cast<int>(*length));
        } catch (const OutOfRange& e) {
            throw ParseError(line_no, e.what());
        }
        std::array<double, kNumParams> values{};
        for (std::size_t i = 0; i < kNumParams; ++i) {
            const auto v = parse_double(parts[i + 1]);
            if (!v) throw ParseError(line_no, "bad value for " + std::string(kParamNames[i]));
            values[i] = *v;
        }
        if (seen[idx]) throw ParseError(line_no, "duplicate row");
        seen[idx] = true;
        rows[idx] = AcoParams::from_array(values);
    }
    for (std::size_t r = 0; r < kRows; ++r) {
        if (!seen[r]) {
            throw ParseError(line_no, "missing row for length " +
                                          std::to_string((static_cast<int>(r) + 1) * kStep));
        }
    }
    return TunedTable(rows);
}

TunedTable TunedTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open tuned table '" + path + "'");
    return read_csv(in);
}

void TunedTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tuned table '" + path + "'");
    write_csv(out);
    if (!out) throw std::runtime_error("error writing tuned table '" + path + "'");
}

AcoParams interpolate_params(double avg_len) { return TunedTable::builtin().interpolate(avg_len); }

double average_length(const Sequence& x, const Sequence& y) noexcept {
    return (static_cast<double>(x.size()) + static_cast<double>(y.size())) / 2.0;
}

} // namespace antalign
