#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antalign/rng.hpp"

namespace antalign {

using Symbol = std::uint8_t;

/// A finite symbol set with a text mapping. Symbols are stored internally as
/// their index into the set, so "0123" and "ACGT" share one internal form.
class Alphabet {
public:
    /// The GA's four-value alphabet, printed as 0..3.
    static Alphabet digits();
    /// The same four symbols printed as A, C, G, T (lower case accepted on input).
    static Alphabet nucleotides();
    /// Lower-case a..z, for the hand-built test pairs.
    static Alphabet letters();

    /// Picks the smallest built-in alphabet that covers every character of
    /// every text. Throws InvalidInput when none does.
    static Alphabet infer(std::span<const std::string_view> texts);

    /// Looks up a built-in alphabet by name: digits, acgt, letters.
    static Alphabet by_name(std::string_view name);

    std::size_t size() const noexcept { return chars_.size(); }
    std::string_view name() const noexcept { return name_; }
    std::string_view chars() const noexcept { return chars_; }

    std::optional<Symbol> symbol_of(char c) const noexcept;
    char char_of(Symbol s) const { return chars_.at(s); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.chars_ == b.chars_; }

private:
    Alphabet(std::string name, std::string chars, bool fold_case)
        : name_(std::move(name)), chars_(std::move(chars)), fold_case_(fold_case) {}

    std::string name_;
    std::string chars_;
    bool fold_case_ = false;
};

class Sequence {
public:
    Sequence() : alphabet_(Alphabet::digits()) {}
    explicit Sequence(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Every symbol must be < alphabet.size().
    Sequence(std::vector<Symbol> symbols, Alphabet alphabet);

    /// Throws InvalidInput naming the first character outside the alphabet.
    static Sequence parse(std::string_view text, const Alphabet& alphabet);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    char char_at(std::size_t i) const { return alphabet_.char_of(symbols_.at(i)); }
    std::string to_string() const;

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.symbols_ == b.symbols_ && a.alphabet_ == b.alphabet_;
    }

private:
    std::vector<Symbol> symbols_;
    Alphabet alphabet_;
};

/// Uniform i.i.d. symbols.
Sequence random_template(std::size_t length, const Alphabet& alphabet, Rng& rng);

/// Number of mutations drawn for a template of the given length:
/// floor(length / u) with u uniform on [1.5, 3.5).
std::size_t draw_mutation_count(std::size_t length, Rng& rng);

/// Applies draw_mutation_count() random edits to a copy of the template.
/// Each edit is uniformly a point substitution, an insertion, or a deletion
/// at an independently drawn position.
Sequence mutate_template(const Sequence& tmpl, Rng& rng);

/// Largest mutation count the generator can draw for a length.
constexpr std::size_t max_mutation_count(std::size_t length) noexcept {
    return static_cast<std::size_t>(static_cast<double>(length) / 1.5);
}

} // namespace antalign
