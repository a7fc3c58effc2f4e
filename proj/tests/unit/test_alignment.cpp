#include <doctest.h>

#include "antalign/alignment.hpp"
#include "antalign/errors.hpp"
#include "oracles/alignment_oracle.hpp"

using namespace antalign;

namespace {

Sequence digits(const char* s) { return Sequence::parse(s, Alphabet::digits()); }
Sequence letters(const char* s) { return Sequence::parse(s, Alphabet::letters()); }
Sequence dna(const char* s) { return Sequence::parse(s, Alphabet::nucleotides()); }

Alignment make(std::string rx, std::string ry) {
    Alignment a{std::move(rx), {}, std::move(ry)};
    a.refresh_markers();
    return a;
}

} // namespace

TEST_CASE("score_alignment") {
    CHECK(score_alignment(make("0123", "0123")) == 20);
    CHECK(score_alignment(make("0", "1")) == -3);
    CHECK(score_alignment(make("0-", "01")) == 1);

    // 17 matches and 3 gap columns
    const auto type1 = make("abcdefgggghijklmnopq", "abcdefg---hijklmnopq");
    CHECK(type1.columns() == 20);
    CHECK(score_alignment(type1) == 17 * 5 + 3 * -4);
    CHECK(score_alignment(type1) == 73);

    CHECK_THROWS_AS(score_alignment(make("01", "0")), InvalidInput);
    CHECK_THROWS_AS(score_alignment(make("0-", "0-")), InvalidInput);
}

TEST_CASE("alignment well-formedness and markers") {
    const auto a = make("ab-d", "a-cd");
    CHECK(a.markers == "|  |");
    CHECK(a.well_formed());
    CHECK(a.ungapped_x() == "abd");
    CHECK(a.ungapped_y() == "acd");
    CHECK(a.to_text() == "ab-d\n|  |\na-cd\n");

    Alignment bad = a;
    bad.markers = "||||";
    CHECK_FALSE(bad.well_formed());
    CHECK_FALSE(make("-", "-").well_formed());
}

TEST_CASE("nw_align basic cases") {
    const auto same = nw_align(digits("0123"), digits("0123"));
    CHECK(same.score == 20);
    CHECK(same.alignment.markers == "||||");

    CHECK_THROWS_AS(nw_align(digits("01"), digits("")), InvalidInput);
    CHECK_THROWS_AS(nw_align(digits(""), digits("01")), InvalidInput);

    // two mismatches (-6) beat four gaps (-16)
    const auto two = nw_align(digits("01"), digits("23"));
    CHECK(two.score == -6);
    CHECK(two.alignment.row_x == "01");
    CHECK(two.alignment.row_y == "23");

    CHECK_THROWS_AS(nw_align(digits("0"), digits("0"), ScoringScheme{0, -3, -4}), InvalidInput);
}

TEST_CASE("nw tie-break prefers diagonal, then up, then left") {
    // x = "0", y = "00": the gap may go before or after; traceback from the end
    // takes the diagonal first, so the leading column is the gap in x.
    const auto r = nw_align(digits("0"), digits("00"));
    CHECK(r.score == 1);
    CHECK(r.alignment.row_x == "-0");
    CHECK(r.alignment.row_y == "00");

    const auto l = nw_align(digits("00"), digits("0"));
    CHECK(l.alignment.row_x == "00");
    CHECK(l.alignment.row_y == "-0");
}

TEST_CASE("nw on the Type I, II and III sample pairs") {
    const auto type1 = nw_align(letters("abcdefgggghijklmnopq"), letters("abcdefghijklmnopq"));
    CHECK(type1.score == 73);
    CHECK(type1.score == oracle::suffix_dp_best("abcdefgggghijklmnopq", "abcdefghijklmnopq"));

    const auto type2 = nw_align(letters("qponmlkjihgfedcba"), letters("abcdefghijklmnopq"));
    CHECK(type2.score == oracle::suffix_dp_best("qponmlkjihgfedcba", "abcdefghijklmnopq"));
    CHECK(type2.score == -43);

    // the printed Type III rows disagree on one symbol; check both readings
    for (const char* x : {"CACTTTTCAGATCTATTG", "CACCTTTTCAGATCTATTG"}) {
        const auto r = nw_align(dna(x), dna("CTACTTTTCAGATATATTC"));
        CHECK(r.score == oracle::suffix_dp_best(x, "CTACTTTTCAGATATATTC"));
        CHECK(score_alignment(r.alignment) == r.score);
    }
}

TEST_CASE("nw score equals the best over every explicit alignment") {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const auto x = random_template(1 + rng.below(5), Alphabet::digits(), rng);
        const auto y = random_template(1 + rng.below(5), Alphabet::digits(), rng);
        int best = INT_MIN;
        for (const auto& a : oracle::enumerate_alignments(x.to_string(), y.to_string())) {
            Alignment al{a.row_x, {}, a.row_y};
            al.refresh_markers();
            best = std::max(best, score_alignment(al));
        }
        REQUIRE(nw_align(x, y).score == best);
    }
}

TEST_CASE("nw invariants on random pairs") {
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_template(1 + rng.below(30), Alphabet::nucleotides(), rng);
        const auto y = random_template(1 + rng.below(30), Alphabet::nucleotides(), rng);
        const auto xy = nw_align(x, y);
        const auto yx = nw_align(y, x);
        REQUIRE(xy.score == yx.score);
        REQUIRE(xy.alignment.well_formed());
        REQUIRE(xy.alignment.ungapped_x() == x.to_string());
        REQUIRE(xy.alignment.ungapped_y() == y.to_string());
        REQUIRE(score_alignment(xy.alignment) == xy.score);
        REQUIRE(xy.score == oracle::suffix_dp_best(x.to_string(), y.to_string()));
    }
}

TEST_CASE("scoring scheme validation") {
    CHECK_NOTHROW(ScoringScheme{}.validate());
    CHECK_THROWS_AS((ScoringScheme{5, 1, -4}.validate()), InvalidInput);
    CHECK_THROWS_AS((ScoringScheme{5, -3, 0}.validate()), InvalidInput);
}
