#include <doctest.h>

#include <array>
#include <string_view>

#include "antalign/errors.hpp"
#include "antalign/sequence.hpp"

using namespace antalign;

TEST_CASE("alphabets map text both ways") {
    const auto dna = Alphabet::nucleotides();
    const auto seq = Sequence::parse("acGT", dna);
    CHECK(seq.to_string() == "ACGT");
    CHECK(seq.size() == 4);

    const auto digits = Sequence::parse("0123", Alphabet::digits());
    CHECK(std::equal(seq.symbols().begin(), seq.symbols().end(), digits.symbols().begin()));

    CHECK_THROWS_AS(Sequence::parse("01x3", Alphabet::digits()), InvalidInput);
    CHECK_THROWS_AS(Sequence({0, 4}, Alphabet::digits()), InvalidInput);
    CHECK(Sequence::parse("", Alphabet::digits()).empty());
}

TEST_CASE("alphabet inference picks the narrowest built-in set") {
    auto infer = [](std::string_view a, std::string_view b) {
        const std::array<std::string_view, 2> texts{a, b};
        return std::string(Alphabet::infer(texts).name());
    };
    CHECK(infer("0123", "3210") == "digits");
    CHECK(infer("ACGT", "acgt") == "acgt");
    CHECK(infer("abcdefg", "qpo") == "letters");
    CHECK_THROWS_AS(infer("01234", "0"), InvalidInput);
    CHECK_THROWS_AS(infer("AC-G", "A"), InvalidInput);
    CHECK_THROWS_AS(Alphabet::by_name("rna"), InvalidInput);
}

TEST_CASE("random_template") {
    Rng rng(7);
    CHECK(random_template(0, Alphabet::digits(), rng).empty());

    const auto t = random_template(20, Alphabet::digits(), rng);
    CHECK(t.size() == 20);
    for (Symbol s : t.symbols()) CHECK(s < 4);

    Rng a(99);
    Rng b(99);
    CHECK(random_template(50, Alphabet::digits(), a) == random_template(50, Alphabet::digits(), b));
}

TEST_CASE("random_template is roughly uniform") {
    Rng rng(3);
    const auto t = random_template(40000, Alphabet::digits(), rng);
    std::array<int, 4> counts{};
    for (Symbol s : t.symbols()) ++counts[s];
    for (int c : counts) CHECK(std::abs(c - 10000) < 400);
}

TEST_CASE("mutation count bounds for length 20") {
    CHECK(max_mutation_count(20) == 13);
    Rng rng(11);
    std::size_t lo = 100;
    std::size_t hi = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto k = draw_mutation_count(20, rng);
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    // floor(20 / 3.5) = 5 .. floor(20 / 1.5) = 13
    CHECK(lo == 5);
    CHECK(hi == 13);
}

TEST_CASE("mutate_template") {
    Rng rng(5);
    CHECK_THROWS_AS(mutate_template(Sequence(Alphabet::digits()), rng), InvalidInput);

    const auto tmpl = random_template(20, Alphabet::digits(), rng);
    Rng a(42);
    Rng b(42);
    CHECK(mutate_template(tmpl, a) == mutate_template(tmpl, b));

    const auto mutant = mutate_template(tmpl, rng);
    CHECK(mutant.alphabet() == tmpl.alphabet());
    CHECK(mutant.size() >= 20 - 13);
    CHECK(mutant.size() <= 20 + 13);
}

TEST_CASE("mutation drift stays within the mutation-count envelope") {
    Rng rng(2024);
    const auto tmpl = random_template(30, Alphabet::nucleotides(), rng);
    const std::size_t k_max = max_mutation_count(30);
    bool length_changed = false;
    for (int i = 0; i < 1000; ++i) {
        const auto m = mutate_template(tmpl, rng);
        REQUIRE(m.size() >= 30 - k_max);
        REQUIRE(m.size() <= 30 + k_max);
        length_changed = length_changed || m.size() != 30;
    }
    CHECK(length_changed);
}
