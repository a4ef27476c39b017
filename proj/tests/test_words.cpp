#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "avoid/factor_index.hpp"
#include "avoid/freeness.hpp"
#include "avoid/word.hpp"
#include "oracles.hpp"

using namespace avoid;

TEST_CASE("reverse") {
    CHECK(reverse(Word::parse("011")).str() == "110");
    CHECK(reverse(Word::parse("0")).str() == "0");
    CHECK(reverse(reverse(Word::parse("012012"))).str() == "012012");
}

TEST_CASE("reverse is an involution on random words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        size_t len = rng() % 30;
        std::vector<uint8_t> letters(len);
        for (auto& c : letters) c = static_cast<uint8_t>(rng() % k);
        Word w(letters, Alphabet(k));
        CHECK(reverse(reverse(w)) == w);
    }
}

TEST_CASE("letter encoding") {
    CHECK(Alphabet::letter_to_char(0) == '0');
    CHECK(Alphabet::letter_to_char(10) == 'a');
    CHECK(Alphabet::char_to_letter('z') == 35);
    CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet(37), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("0!1"), std::invalid_argument);
}

TEST_CASE("max_exponent_violation examples") {
    auto w = Word::parse("0101");
    auto witness = max_exponent_violation(w, FreenessSpec(Rational(3, 2), 1));
    REQUIRE(witness);
    CHECK(witness->start == 0);
    CHECK(witness->length == 4);
    CHECK(witness->period == 2);
    CHECK(witness->exponent() == Rational(2));

    CHECK(!max_exponent_violation(Word::parse("00"), FreenessSpec(Rational(3, 2), 2)));

    // Thue-Morse prefix is overlap-free.
    CHECK(!max_exponent_violation(Word::parse("0110100110010110"), FreenessSpec(Rational(2), 1)));
}

TEST_CASE("exponent exactly beta is allowed") {
    // 010 has exponent 3/2 with period 2.
    CHECK(!max_exponent_violation(Word::parse("010"), FreenessSpec(Rational(3, 2), 1)));
    CHECK(max_exponent_violation(Word::parse("0101"), FreenessSpec(Rational(3, 2), 1)));
}

TEST_CASE("freeness checker agrees with the naive triple loop") {
    FreenessSpec specs[] = {FreenessSpec(Rational(2), 1), FreenessSpec(Rational(7, 4), 1),
                            FreenessSpec(Rational(3, 2), 2)};
    for (int alpha = 2; alpha <= 3; ++alpha) {
        size_t max_len = alpha == 2 ? 12 : 8;
        for (size_t len = 1; len <= max_len; ++len) {
            for (const auto& text : oracles::all_words(alpha, len)) {
                Word w = Word::parse(text, Alphabet(alpha));
                for (const auto& spec : specs)
                    CHECK(is_free(w, spec) == oracles::naive_is_free(w, spec));
            }
        }
    }
}

TEST_CASE("freeness is factor-closed") {
    FreenessSpec spec(Rational(7, 4), 1);
    Word w = Word::parse("01020120", Alphabet(3));
    REQUIRE(is_free(w, spec));
    for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t len = 1; pos + len <= w.size(); ++len)
            CHECK(is_free(w.subword(pos, len), spec));
}

TEST_CASE("violation_ending_at_last matches a full check on extensions") {
    std::mt19937 rng(11);
    FreenessSpec spec(Rational(7, 4), 1);
    for (int trial = 0; trial < 300; ++trial) {
        size_t len = 1 + rng() % 12;
        std::vector<uint8_t> letters(len);
        for (auto& c : letters) c = static_cast<uint8_t>(rng() % 3);
        Word w(letters, Alphabet(3));
        Word prefix = w.subword(0, len - 1);
        bool incremental = violation_ending_at_last(w, spec);
        bool full = !is_free(w, spec);
        bool full_prefix = len > 1 ? !is_free(prefix, spec) : false;
        // Exactness of the incremental pruning: a clean prefix extended by one
        // letter violates iff a violation ends at the last position.
        if (!full_prefix) CHECK(incremental == full);
        if (incremental) CHECK(full);
    }
}

TEST_CASE("is_d_directed examples") {
    CHECK(!is_d_directed(Word::parse("012012"), 2));
    auto v = is_d_directed(Word::parse("0121"), 2);
    REQUIRE(v);
    CHECK(v->factor.str() == "12");
    auto pal = is_d_directed(Word::parse("00"), 1);
    REQUIRE(pal);
    CHECK(pal->factor.str() == "0");
}

TEST_CASE("directedness monotonicity") {
    for (size_t len = 2; len <= 12; ++len) {
        std::mt19937 rng(static_cast<unsigned>(len));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<uint8_t> letters(len);
            for (auto& c : letters) c = static_cast<uint8_t>(rng() % 3);
            Word w(letters, Alphabet(3));
            for (int d = 1; d + 1 <= static_cast<int>(len); ++d)
                if (!is_d_directed(w, d))
                    CHECK(!is_d_directed(w, d + 1));
        }
    }
}

TEST_CASE("periodic_word") {
    CHECK(periodic_word(2, 7).str() == "0120120");
    CHECK(periodic_word(1, 4).str() == "0101");
    CHECK(periodic_word(4, 5).str() == "01234");
    CHECK_THROWS_AS(periodic_word(0, 5), std::invalid_argument);
}

TEST_CASE("periodic words are 2-directed for k >= 2") {
    for (int k = 2; k <= 8; ++k)
        for (int len : {2, 10, 57, 100})
            CHECK(!is_d_directed(periodic_word(k, len), 2));
}

TEST_CASE("factor index examples") {
    FactorIndex idx(Word::parse("0110"));
    CHECK(idx.contains(Word::parse("11")));
    CHECK(!idx.contains(Word::parse("00")));
    CHECK(FactorIndex(Word::parse("012012")).contains(Word::parse("20", Alphabet(3))));
}

TEST_CASE("factor index agrees with naive substring search") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        size_t len = 1 + rng() % 200;
        int alpha = 2 + static_cast<int>(rng() % 3);
        std::vector<uint8_t> letters(len);
        for (auto& c : letters) c = static_cast<uint8_t>(rng() % alpha);
        Word w(letters, Alphabet(alpha));
        FactorIndex idx(w);
        std::string text = w.str();
        for (int q = 0; q < 200; ++q) {
            size_t flen = 1 + rng() % 12;
            std::vector<uint8_t> fl(flen);
            for (auto& c : fl) c = static_cast<uint8_t>(rng() % alpha);
            Word f(fl, Alphabet(alpha));
            CHECK(idx.contains(f) == oracles::naive_contains_factor(text, f.str()));
        }
    }
}
