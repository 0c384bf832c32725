#include <catch2/catch_amalgamated.hpp>

#include <maxcode/maxcode.hpp>

#include "oracles.hpp"

using namespace maxcode;

namespace {
const Alphabet kBin("01");
}

TEST_CASE("from_words basics") {
    CHECK(is_empty(from_words({}, kBin)));
    Nfa eps = from_words({Word()}, kBin);
    CHECK(contains(eps, ""));
    CHECK_FALSE(contains(eps, "0"));
    CHECK(enumerate_upto(eps, 3) == std::vector<Word>{""});

    Nfa two = from_words({"1", "00"}, kBin);
    CHECK(oracle::accepted_upto(two, 4) == std::set<Word>{"1", "00"});
    CHECK_FALSE(contains(two, "01"));
    CHECK_THROWS_AS(from_words({"2"}, kBin), alphabet_error);
}

TEST_CASE("boolean combinations") {
    Nfa star = sigma_star(kBin);
    CHECK(is_empty(boolean_combine(star, star, BoolOp::difference)));
    CHECK(oracle::accepted_upto(
              boolean_combine(from_words({"1", "00"}, kBin),
                              from_words({"00", "01"}, kBin),
                              BoolOp::intersection),
              4) == std::set<Word>{"00"});
    CHECK(oracle::accepted_upto(
              boolean_combine(from_words({"10"}, kBin),
                              from_words({"11"}, kBin), BoolOp::union_op),
              4) == std::set<Word>{"10", "11"});
    CHECK_THROWS_AS(
        boolean_combine(star, sigma_star(Alphabet("ab")), BoolOp::union_op),
        alphabet_error);
}

TEST_CASE("complement") {
    CHECK(is_empty(complement(sigma_star(kBin))));
    CHECK(equals(complement(from_words({}, kBin)), sigma_star(kBin)));

    oracle::Rng rng(2024);
    for (int i = 0; i < 25; ++i) {
        Nfa a = rng.nfa(kBin);
        Nfa c = complement(a);
        for (const Word& w : oracle::all_words_upto(kBin, 6))
            CHECK(contains(c, w) == !contains(a, w));
    }
}

TEST_CASE("determinize_minimize is canonical and membership-preserving") {
    Nfa words = from_words({"001", "000", "10", "11"}, kBin);
    Dfa d = determinize_minimize(words);
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        CHECK(contains(d, w) == contains(words, w));

    Dfa again = minimize(d);
    CHECK(again == d);

    // (0+1)*1 has a two-state minimal automaton.
    Dfa ends_in_one = determinize_minimize(regex_parse("(0+1)*1", kBin));
    CHECK(ends_in_one.num_states() == 2);
    CHECK_FALSE(ends_in_one.is_final(0));
    CHECK(ends_in_one.is_final(ends_in_one.next(0, 1)));

    // Equal languages minimize to structurally equal automata.
    oracle::Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        Nfa a = rng.nfa(kBin);
        Nfa b = nfa_union(a, a);
        CHECK(determinize_minimize(a) == determinize_minimize(b));
    }
}

TEST_CASE("emptiness") {
    CHECK(is_empty(from_words({}, kBin)));
    CHECK(is_empty(difference(sigma_star(kBin), sigma_star(kBin))));
    CHECK_FALSE(is_empty(regex_parse("01*0(0+1)+10+11", kBin)));
}

TEST_CASE("language equality") {
    CHECK(equals(regex_parse("(0+1)(0+1)", kBin),
                 regex_parse("00+01+10+11", kBin)));
    Nfa a = regex_parse("0*1", kBin);
    CHECK(equals(a, a));
    CHECK_FALSE(equals(a, regex_parse("0*", kBin)));
    CHECK_THROWS_AS(equals(a, sigma_star(Alphabet("ab"))), alphabet_error);
}

TEST_CASE("membership") {
    CHECK(contains(sigma_star(kBin), ""));
    CHECK_FALSE(contains(from_words({"1", "00"}, kBin), "01"));
}

TEST_CASE("enumerate_upto is radix sorted") {
    CHECK(enumerate_upto(from_words({"1", "00"}, kBin), 2) ==
          std::vector<Word>{"1", "00"});
    CHECK(enumerate_upto(sigma_star(kBin), 1) ==
          std::vector<Word>{"", "0", "1"});

    oracle::Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Nfa a = rng.nfa(kBin);
        auto ws = enumerate_upto(a, 5);
        for (std::size_t j = 1; j < ws.size(); ++j)
            CHECK(oracle::radix_less(kBin, ws[j - 1], ws[j]));
        for (const Word& w : oracle::all_words_upto(kBin, 5))
            CHECK(std::binary_search(
                      ws.begin(), ws.end(), w,
                      [&](const Word& x, const Word& y) {
                          return oracle::radix_less(kBin, x, y);
                      }) == contains(a, w));
    }
}

TEST_CASE("equality matches bounded enumeration") {
    oracle::Rng rng(5150);
    for (int i = 0; i < 40; ++i) {
        Nfa a = rng.nfa(kBin);
        Nfa b = rng.nfa(kBin);
        int bound = determinize_minimize(a).num_states() +
                    determinize_minimize(b).num_states();
        CHECK(equals(a, b) ==
              (enumerate_upto(a, bound) == enumerate_upto(b, bound)));
    }
}

TEST_CASE("De Morgan identities") {
    oracle::Rng rng(404);
    for (int i = 0; i < 30; ++i) {
        Nfa a = rng.nfa(kBin);
        Nfa b = rng.nfa(kBin);
        CHECK(equals(complement(nfa_union(a, b)),
                     intersect(complement(a), complement(b))));
        CHECK(equals(complement(intersect(a, b)),
                     nfa_union(complement(a), complement(b))));
        CHECK(equals(difference(a, b), intersect(a, complement(b))));
    }
}

TEST_CASE("state budget is enforced") {
    // (0+1)*1(0+1)^10 needs 2^10 subsets to determinize.
    Nfa hard = regex_parse("(0+1)*1(0+1)^10", kBin);
    CHECK_THROWS_AS(determinize(hard, 100), budget_error);
    CHECK_NOTHROW(determinize(hard, 5000));
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(""), alphabet_error);
    CHECK_THROWS_AS(Alphabet("00"), alphabet_error);
    CHECK_THROWS_AS(Alphabet("0@"), alphabet_error);
    CHECK_THROWS_AS(Alphabet("a/b"), alphabet_error);
    CHECK_THROWS_AS(Alphabet("a b"), alphabet_error);
    CHECK_THROWS_AS(Alphabet("a#"), alphabet_error);
    Alphabet abc("abc");
    CHECK(abc.index_of('b') == 1);
    CHECK(abc.index_of('z') == -1);
}
