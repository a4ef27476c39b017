#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "avoid/morphism.hpp"

using namespace avoid;

TEST_CASE("the 21-uniform morphism table") {
    UniformMorphism m = paper_morphism_21();
    CHECK(m.width() == 21);
    CHECK(m.source_alphabet().size == 4);
    CHECK(m.target_alphabet().size == 2);
    CHECK(m.image(0).str() == "000010111000111100111");
    CHECK(m.image(1).str() == "000010110011011110011");
    CHECK(m.image(2).str() == "000010110001111010011");
    CHECK(m.image(3).str() == "000010110001001101111");
}

TEST_CASE("the 9-uniform morphism table") {
    UniformMorphism m = paper_morphism_9();
    CHECK(m.width() == 9);
    CHECK(m.target_alphabet().size == 3);
    CHECK(m.image(0).str() == "011122202");
    CHECK(m.image(1).str() == "010121202");
    CHECK(m.image(2).str() == "001112122");
    CHECK(m.image(3).str() == "000101120");
}

TEST_CASE("apply") {
    CHECK(paper_morphism_9().apply(Word::parse("0", Alphabet(4))).str() == "011122202");
    CHECK(paper_morphism_21().apply(Word::parse("1", Alphabet(4))).str() ==
          "000010110011011110011");
    CHECK(paper_morphism_21().apply(Word({}, Alphabet(4))).empty());
    CHECK_THROWS_AS(paper_morphism_9().apply(Word::parse("05", Alphabet(6))),
                    std::invalid_argument);
}

TEST_CASE("psi morphism templates") {
    CHECK(psi_morphism(3).image(0).str() == "012012");
    CHECK(psi_morphism(3).width() == 6);
    CHECK(psi_morphism(4).image(0).str() == "0120123");
    CHECK(psi_morphism(4).width() == 7);
    CHECK(psi_morphism(5).image(1).str() == "01340134");
    CHECK(psi_morphism(5).target_alphabet().size == 5);
    CHECK_THROWS_AS(psi_morphism(2), std::invalid_argument);
    for (int k = 3; k <= 30; ++k)
        CHECK(psi_morphism(k).width() == static_cast<size_t>(k + 3));
}

TEST_CASE("homomorphism and length laws") {
    std::mt19937 rng(3);
    UniformMorphism m = paper_morphism_9();
    for (int trial = 0; trial < 100; ++trial) {
        auto random_word = [&](size_t len) {
            std::vector<uint8_t> letters(len);
            for (auto& c : letters) c = static_cast<uint8_t>(rng() % 4);
            return Word(letters, Alphabet(4));
        };
        Word u = random_word(rng() % 8), v = random_word(rng() % 8);
        CHECK(m.apply(u + v) == m.apply(u) + m.apply(v));
        CHECK(m.apply(u).size() == m.width() * u.size());
    }
}

TEST_CASE("morphism file parsing") {
    std::string text =
        "# the 9-uniform morphism\n"
        "0 -> 011122202\n"
        "1 -> 010121202\n"
        "\n"
        "2 -> 001112122\n"
        "3 -> 000101120\n";
    UniformMorphism m = UniformMorphism::parse(text);
    CHECK(m.width() == 9);
    CHECK(m.source_alphabet().size == 4);
    for (int c = 0; c < 4; ++c) CHECK(m.image(c) == paper_morphism_9().image(c));

    CHECK_THROWS_AS(UniformMorphism::parse("0 : 01"), std::invalid_argument);
    CHECK_THROWS_AS(UniformMorphism::parse("1 -> 01\n0 -> 10"), std::invalid_argument);
    CHECK_THROWS_AS(UniformMorphism::parse("0 -> 01\n1 -> 011"), std::invalid_argument);
}
