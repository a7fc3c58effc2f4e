#include "antalign/sequence.hpp"

#include <algorithm>
#include <cctype>

#include "antalign/errors.hpp"

namespace antalign {

Alphabet Alphabet::digits() { return Alphabet("digits", "0123", false); }

Alphabet Alphabet::nucleotides() { return Alphabet("acgt", "ACGT", true); }

Alphabet Alphabet::letters() { return Alphabet("letters", "abcdefghijklmnopqrstuvwxyz", false); }

Alphabet Alphabet::by_name(std::string_view name) {
    if (name == "digits") return digits();
    if (name == "acgt") return nucleotides();
    if (name == "letters") return letters();
    throw InvalidInput("unknown alphabet '" + std::string(name) + "'");
}

Alphabet Alphabet::infer(std::span<const std::string_view> texts) {
    for (const auto& candidate : {digits(), nucleotides(), letters()}) {
        const bool covers = std::all_of(texts.begin(), texts.end(), [&](std::string_view t) {
            return std::all_of(t.begin(), t.end(),
                               [&](char c) { return candidate.symbol_of(c).has_value(); });
        });
        if (covers) {
            return candidate;
        }
    }
    throw InvalidInput("sequences use symbols outside every supported alphabet "
                       "(0-3, ACGT, a-z)");
}

std::optional<Symbol> Alphabet::symbol_of(char c) const noexcept {
    if (fold_case_) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    const auto pos = chars_.find(c);
    if (pos == std::string::npos) {
        return std::nullopt;
    }
    return static_cast<Symbol>(pos);
}

Sequence::Sequence(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
    for (Symbol s : symbols_) {
        if (s >= alphabet_.size()) {
            throw InvalidInput("symbol index " + std::to_string(s) + " outside alphabet '" +
                               std::string(alphabet_.name()) + "'");
        }
    }
}

Sequence Sequence::parse(std::string_view text, const Alphabet& alphabet) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto s = alphabet.symbol_of(text[i]);
        if (!s) {
            throw InvalidInput("invalid symbol '" + std::string(1, text[i]) + "' at position " +
                               std::to_string(i) + " for alphabet '" +
                               std::string(alphabet.name()) + "'");
        }
        symbols.push_back(*s);
    }
    Sequence seq(alphabet);
    seq.symbols_ = std::move(symbols);
    return seq;
}

std::string Sequence::to_string() const {
    std::string text;
    text.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        text.push_back(alphabet_.char_of(s));
    }
    return text;
}

Sequence random_template(std::size_t length, const Alphabet& alphabet, Rng& rng) {
    std::vector<Symbol> symbols(length);
    for (auto& s : symbols) {
        s = static_cast<Symbol>(rng.below(alphabet.size()));
    }
    return Sequence(std::move(symbols), alphabet);
}

std::size_t draw_mutation_count(std::size_t length, Rng& rng) {
    const double divisor = rng.uniform(1.5, 3.5);
    return static_cast<std::size_t>(static_cast<double>(length) / divisor);
}

Sequence mutate_template(const Sequence& tmpl, Rng& rng) {
    if (tmpl.empty()) {
        throw InvalidInput("cannot mutate an empty template");
    }
    const auto& alphabet = tmpl.alphabet();
    std::vector<Symbol> symbols(tmpl.symbols().begin(), tmpl.symbols().end());
    const std::size_t count = draw_mutation_count(symbols.size(), rng);

    for (std::size_t i = 0; i < count; ++i) {
        const auto kind = rng.below(3);
        // an empty working copy is unreachable (count < length) but stays safe
        const std::size_t where = symbols.empty() ? 0 : rng.below(symbols.size());
        const auto fresh = static_cast<Symbol>(rng.below(alphabet.size()));
        switch (kind) {
        case 0: // point substitution
            if (!symbols.empty()) symbols[where] = fresh;
            break;
        case 1: // insertion before `where`
            symbols.insert(symbols.begin() + static_cast<std::ptrdiff_t>(where), fresh);
            break;
        default: // deletion
            if (!symbols.empty()) symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(where));
            break;
        }
    }
    return Sequence(std::move(symbols), alphabet);
}

} // namespace antalign
