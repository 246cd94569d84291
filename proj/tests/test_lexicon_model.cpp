#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sentilex/error.hpp"
#include "sentilex/formats.hpp"
#include "sentilex/lexicon.hpp"
#include "sentilex/unicode.hpp"

using namespace sentilex;

TEST_CASE("parse_categorical basic") {
    Lexicon lex = parse_categorical("good\ngreat", "bad", "liu", "en");
    CHECK(lex.size() == 3);
    CHECK(lex.kind() == LexiconKind::Categorical);
    const auto* good = lex.lookup(parse_term("good"));
    REQUIRE(good != nullptr);
    CHECK(*good->polarity == Polarity::Positive);
    CHECK(good->source == EntrySource::Imported);
    const auto* bad = lex.lookup(parse_term("bad"));
    REQUIRE(bad != nullptr);
    CHECK(*bad->polarity == Polarity::Negative);
}

TEST_CASE("parse_categorical skips comments and blank lines") {
    Lexicon lex = parse_categorical("; comment\n\ngood", "", "liu", "en");
    CHECK(lex.size() == 1);
    CHECK(lex.lookup(parse_term("good")) != nullptr);
}

TEST_CASE("parse_categorical opposing duplicate is an error naming the term") {
    CHECK_THROWS_WITH_AS(parse_categorical("win", "win", "liu", "en"),
                         doctest::Contains("win"), error);
}

TEST_CASE("parse_categorical same-polarity duplicates are deduplicated") {
    Lexicon lex = parse_categorical("good\ngood\ngreat", "bad", "liu", "en");
    CHECK(lex.size() == 3);
}

TEST_CASE("parse_categorical entry count equals surviving line count") {
    Lexicon lex = parse_categorical("a\n; x\nb\n\nc\n", "d\ne", "l", "en");
    CHECK(lex.size() == 5);
}

TEST_CASE("parse_categorical multiword lines become multi-token terms") {
    Lexicon lex = parse_categorical("obi ụtọ", "", "liu", "ig");
    const auto* e = lex.lookup(parse_term("obi ụtọ"));
    REQUIRE(e != nullptr);
    CHECK(e->term.arity() == 2);
    CHECK_FALSE(e->term.skip);
}

TEST_CASE("parse_categorical rejects malformed UTF-8 with byte offset") {
    std::string bad = "go";
    bad += static_cast<char>(0xFF);
    try {
        parse_categorical(bad, "", "l", "en");
        FAIL("expected utf8_error");
    } catch (const utf8_error& e) {
        CHECK(e.byte_offset() == 2);
    }
}

TEST_CASE("parse_valenced basic") {
    Lexicon lex = parse_valenced("happy\t3\nsad\t-2", "afinn", "en");
    CHECK(lex.size() == 2);
    CHECK(*lex.lookup(parse_term("happy"))->valence == 3.0);
    CHECK(*lex.lookup(parse_term("sad"))->valence == -2.0);
}

TEST_CASE("parse_valenced zero is in range") {
    Lexicon lex = parse_valenced("calm\t0", "afinn", "en");
    CHECK(*lex.lookup(parse_term("calm"))->valence == 0.0);
}

TEST_CASE("parse_valenced rejects out-of-range score with line number") {
    try {
        parse_valenced("x\t9", "afinn", "en");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(parse_valenced("ok\t1\ny\t-6", "a", "en"), parse_error);
}

TEST_CASE("parse_valenced rejects missing TAB") {
    CHECK_THROWS_AS(parse_valenced("happy 3", "afinn", "en"), parse_error);
}

TEST_CASE("parse_ngram_scored arity derivation") {
    Lexicon lex = parse_ngram_scored(
        "good\t1.2\ngood day\t0.5\ngood---day\t0.3", "nrc", "en");
    CHECK(lex.size() == 3);
    CHECK(lex.lookup(parse_term("good"))->term.arity() == 1);
    const auto* bi = lex.lookup(parse_term("good day"));
    REQUIRE(bi != nullptr);
    CHECK(bi->term.arity() == 2);
    CHECK_FALSE(bi->term.skip);
    const auto* sk = lex.lookup(parse_term("good---day"));
    REQUIRE(sk != nullptr);
    CHECK(sk->term.skip);
    CHECK(lex.has_skip_terms());
}

TEST_CASE("parse_ngram_scored rejects trigrams") {
    CHECK_THROWS_AS(parse_ngram_scored("a b c\t1.0", "nrc", "en"),
                    parse_error);
}

TEST_CASE("parse_ngram_scored rejects skip terms of arity > 2") {
    CHECK_THROWS_AS(parse_ngram_scored("a---b---c\t1.0", "nrc", "en"),
                    parse_error);
}

TEST_CASE("parse_ngram_scored rejects unparseable score with line number") {
    try {
        parse_ngram_scored("a\t1.0\nb\tzzz", "nrc", "en");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse_ngram_scored empty input is a valid empty lexicon") {
    Lexicon lex = parse_ngram_scored("", "nrc", "en");
    CHECK(lex.size() == 0);
}

TEST_CASE("serialize_canonical of an empty lexicon is header only") {
    Lexicon lex("empty", "ig", LexiconKind::Categorical);
    std::string text = serialize_canonical(lex);
    CHECK(text == ";sentilex empty ig categorical\n"
                  "term\tkindvalue\tsource\tprovenance\n");
}

TEST_CASE("serialize_canonical sorts entries by term") {
    Lexicon lex = parse_categorical("zz\naa", "", "l", "ig");
    std::string text = serialize_canonical(lex);
    CHECK(text.find("aa") < text.find("zz"));
    // deterministic: serializing twice gives identical bytes
    CHECK(text == serialize_canonical(lex));
}

TEST_CASE("canonical round-trip on randomized lexicons") {
    std::mt19937 rng(42);
    for (int i = 0; i < 300; ++i) {
        Lexicon lex =
            sentilex::testing::random_lexicon(rng, "rt" + std::to_string(i));
        Lexicon back = parse_canonical(serialize_canonical(lex));
        CHECK(back == lex);
    }
}

TEST_CASE("parse_canonical rejects bad header") {
    CHECK_THROWS_AS(parse_canonical("nonsense\nterm\tkindvalue\tsource\t"
                                    "provenance\n"),
                    parse_error);
    CHECK_THROWS_AS(
        parse_canonical(";sentilex a ig categorical\nwrong header\n"),
        parse_error);
}

TEST_CASE("parse_canonical rejects unknown source tag with line number") {
    try {
        parse_canonical(";sentilex a ig categorical\n"
                        "term\tkindvalue\tsource\tprovenance\n"
                        "mma\tpositive\tguessed\t\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parse_canonical rejects duplicate terms") {
    CHECK_THROWS_WITH_AS(
        parse_canonical(";sentilex a ig categorical\n"
                        "term\tkindvalue\tsource\tprovenance\n"
                        "mma\tpositive\timported\t\n"
                        "mma\tnegative\timported\t\n"),
        doctest::Contains("mma"), parse_error);
}

TEST_CASE("lookup returns inserted entry and misses absent terms") {
    Lexicon lex("l", "ig", LexiconKind::Categorical);
    LexiconEntry e;
    e.term = parse_term("mma");
    e.polarity = Polarity::Positive;
    lex.add(e);
    CHECK(lex.lookup(parse_term("mma")) != nullptr);
    CHECK(lex.lookup(parse_term("njọ")) == nullptr);
}

TEST_CASE("lookup is insensitive to composed vs decomposed input") {
    Lexicon lex("l", "ig", LexiconKind::Categorical);
    LexiconEntry e;
    e.term = parse_term("ọma");  // NFC
    e.polarity = Polarity::Positive;
    lex.add(e);
    // NFD: 'o' + combining dot below, uppercased for good measure
    Term decomposed = parse_term("Ọma");
    CHECK(lex.lookup(decomposed) != nullptr);
}

TEST_CASE("valenced lexicon rejects out-of-range valence on add") {
    Lexicon lex("l", "ig", LexiconKind::Valenced);
    LexiconEntry e;
    e.term = parse_term("x");
    e.valence = 7.0;
    CHECK_THROWS_AS(lex.add(e), error);
}

TEST_CASE("auto-translated entries require provenance") {
    Lexicon lex("l", "ig", LexiconKind::Categorical);
    LexiconEntry e;
    e.term = parse_term("x");
    e.polarity = Polarity::Positive;
    e.source = EntrySource::AutoTranslated;
    CHECK_THROWS_AS(lex.add(e), error);
}

TEST_CASE("categorical lexicons never store neutral entries") {
    Lexicon lex("l", "ig", LexiconKind::Categorical);
    LexiconEntry e;
    e.term = parse_term("x");
    e.polarity = Polarity::Neutral;
    CHECK_THROWS_AS(lex.add(e), error);
}

TEST_CASE("line order of duplicate-free input does not matter") {
    Lexicon a = parse_categorical("x\ny", "z", "l", "en");
    Lexicon b = parse_categorical("y\nx", "z", "l", "en");
    CHECK(a == b);
}
