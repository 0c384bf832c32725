#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <maxcode/maxcode.hpp>

#include "oracles.hpp"

using namespace maxcode;

namespace {

const Alphabet kBin("01");

std::string render_nfa(const Nfa& a) {
    std::ostringstream out;
    write_nfa(out, a);
    return out.str();
}

std::string render_transducer(const Transducer& t) {
    std::ostringstream out;
    write_transducer(out, t);
    return out.str();
}

}  // namespace

TEST_CASE("automaton format round and comments") {
    std::istringstream in(
        "# a tiny automaton\n"
        "alphabet: 0 1\n"
        "states: q0 q1\n"
        "initial: q0\n"
        "final: q1\n"
        "trans: q0 0 q0\n"
        "trans: q0 1 q1\n"
        "trans: q1 @ q0      # @ = epsilon\n");
    Nfa a = load_nfa(in);
    CHECK(a.num_states() == 2);
    CHECK(contains(a, "01"));
    CHECK(contains(a, "011"));
    CHECK_FALSE(contains(a, "0"));

    std::istringstream back(render_nfa(a));
    CHECK(equals(load_nfa(back), a));
}

TEST_CASE("automaton parse errors") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return load_nfa(in);
    };
    CHECK_THROWS_AS(load("states: a\ninitial: a\nfinal: a\n"), parse_error);
    CHECK_THROWS_AS(load("alphabet: 0 1\ninitial: a\n"), parse_error);
    CHECK_THROWS_AS(
        load("alphabet: 0 1\nstates: a\ninitial: b\nfinal: a\n"),
        parse_error);
    CHECK_THROWS_AS(
        load("alphabet: 0 1\nstates: a\nbogus: 1\n"), parse_error);
    CHECK_THROWS_AS(
        load("alphabet: 0 1\nstates: a\ntrans: a 2 a\n"), parse_error);
    CHECK_THROWS_AS(
        load("alphabet: 0 1\nstates: a a\n"), parse_error);
    CHECK_THROWS_AS(load("alphabet: 01\nstates: a\n"), parse_error);
}

TEST_CASE("transducer format and label splitting") {
    std::istringstream in(
        "alphabet: 0 1\n"
        "states: 0 1\n"
        "initial: 0\n"
        "final: 1\n"
        "trans: 0 0/0 0\n"
        "trans: 0 1/@ 1\n"
        "trans: 1 @/0 1\n");
    Transducer t = load_transducer(in);
    CHECK(oracle::outputs(t, "01", 4) ==
          std::set<Word>{"0", "00", "000", "0000"});

    std::istringstream back(render_transducer(t));
    Transducer reloaded = load_transducer(back);
    for (const Word& w : oracle::all_words_upto(kBin, 4))
        CHECK(oracle::outputs(t, w, 4) == oracle::outputs(reloaded, w, 4));

    auto load = [](const std::string& text) {
        std::istringstream in2(text);
        return load_transducer(in2);
    };
    std::string head =
        "alphabet: 0 1\nstates: a b\ninitial: a\nfinal: b\n";
    CHECK_THROWS_AS(load(head + "trans: a 0 b\n"), parse_error);
    CHECK_THROWS_AS(load(head + "trans: a 0/1/0 b\n"), parse_error);
    CHECK_THROWS_AS(load(head + "trans: a 2/0 b\n"), parse_error);
}

TEST_CASE("longer output sides pad with epsilon input") {
    std::istringstream in(
        "alphabet: 0 1\n"
        "states: a b\n"
        "initial: a\n"
        "final: b\n"
        "trans: a 0/110 b\n");
    Transducer t = load_transducer(in);
    CHECK(oracle::outputs(t, "0", 4) == std::set<Word>{"110"});
    CHECK(oracle::outputs(t, "", 4).empty());
}

TEST_CASE("word lists") {
    std::istringstream in(
        "# comment\n"
        "@\n"
        "01\n"
        "\n"
        "1\n");
    auto words = load_words(in);
    CHECK(words == std::vector<Word>{"", "01", "1"});

    std::ostringstream out;
    write_words(out, words);
    CHECK(out.str() == "@\n01\n1\n");

    std::istringstream bad("0 1\n");
    CHECK_THROWS_AS(load_words(bad), parse_error);
}

TEST_CASE("file sniffing") {
    CHECK(sniff_file("alphabet: 0 1\nstates: a\ninitial: a\nfinal: a\n"
                     "trans: a 0 a\n") == FileKind::automaton);
    CHECK(sniff_file("alphabet: 0 1\nstates: a\ninitial: a\nfinal: a\n"
                     "trans: a 0/0 a\n") == FileKind::transducer);
    CHECK(sniff_file("01\n10\n") == FileKind::words);
    CHECK(sniff_file("# only a comment\n@\n") == FileKind::words);
    CHECK(sniff_file("alphabet: 0 1\nstates: a\ninitial: a\nfinal: a\n") ==
          FileKind::automaton);
}

TEST_CASE("language specs") {
    std::optional<Alphabet> bin(kBin);
    CHECK(oracle::accepted_upto(lang_from_spec("words:@", bin), 2) ==
          std::set<Word>{""});
    CHECK(oracle::accepted_upto(lang_from_spec("words:1,00", bin), 3) ==
          std::set<Word>{"1", "00"});
    Nfa golomb = lang_from_spec("re:(0+1)^3(0+10*1)", bin);
    CHECK(contains(golomb, "0000"));
    CHECK(contains(golomb, "00011"));
    CHECK(contains(golomb, "110101"));
    CHECK_FALSE(contains(golomb, "0001"));
    CHECK_FALSE(contains(golomb, "000"));

    CHECK_THROWS_AS(lang_from_spec("file:does-not-exist", bin), error);
    CHECK_THROWS_AS(lang_from_spec("nonsense", bin), error);
    CHECK_THROWS_AS(lang_from_spec("re:0", std::nullopt), error);

    auto dir = std::filesystem::temp_directory_path() / "maxcode-io-test";
    std::filesystem::create_directories(dir);
    auto words_path = (dir / "words.txt").string();
    write_file(words_path, "0\n11\n");
    CHECK(oracle::accepted_upto(
              lang_from_spec("file:" + words_path, bin), 3) ==
          std::set<Word>{"0", "11"});

    auto aut_path = (dir / "lang.aut").string();
    {
        std::ostringstream buf;
        write_dfa(buf, determinize_minimize(regex_parse("0*1", kBin)));
        write_file(aut_path, buf.str());
    }
    CHECK(equals(lang_from_spec("file:" + aut_path, bin),
                 regex_parse("0*1", kBin)));
    CHECK_THROWS_AS(
        lang_from_spec("file:" + aut_path, std::optional<Alphabet>(
                                               Alphabet("ab"))),
        alphabet_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("writers round-trip random automata") {
    oracle::Rng rng(9090);
    for (int i = 0; i < 25; ++i) {
        Nfa a = rng.nfa(kBin);
        std::istringstream back(render_nfa(a));
        CHECK(equals(load_nfa(back), a));
    }
    for (const Transducer& t :
         {make_bifix(kBin), make_did2(kBin), make_fig1(kBin)}) {
        std::istringstream back(render_transducer(t));
        Transducer reloaded = load_transducer(back);
        for (const Word& w : oracle::all_words_upto(kBin, 4))
            CHECK(oracle::outputs(t, w, 5) ==
                  oracle::outputs(reloaded, w, 5));
    }
}
