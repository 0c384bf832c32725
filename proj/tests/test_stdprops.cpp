#include <catch2/catch_amalgamated.hpp>

#include <maxcode/maxcode.hpp>

#include "oracles.hpp"

using namespace maxcode;

namespace {

const Alphabet kBin("01");

std::set<Word> image(const Transducer& t, const Word& w, int maxlen) {
    return oracle::accepted_upto(apply_word(t, w), maxlen);
}

}  // namespace

TEST_CASE("prefix transducer") {
    Transducer px = make_prefix(kBin);
    CHECK(image(px, "001", 3) == std::set<Word>{"", "0", "00"});
    CHECK(image(px, "", 3).empty());
    CHECK(image(px, "0", 3) == std::set<Word>{""});
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        CHECK(image(px, w, 6) == oracle::proper_prefixes(w));
}

TEST_CASE("suffix transducer") {
    Transducer sx = make_suffix(kBin);
    CHECK(image(sx, "001", 3) == std::set<Word>{"", "1", "01"});
    CHECK(image(sx, "", 3).empty());
    CHECK(image(sx, "1", 3) == std::set<Word>{""});
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        CHECK(image(sx, w, 6) == oracle::proper_suffixes(w));
}

TEST_CASE("bifix transducer") {
    Transducer bx = make_bifix(kBin);
    CHECK(image(bx, "01", 2) == std::set<Word>{"", "0", "1"});
    CHECK(image(bx, "", 2).empty());
    CHECK(image(bx, "001", 3) == std::set<Word>{"", "0", "00", "1", "01"});
}

TEST_CASE("substitution transducers") {
    Transducer tsub1 = make_tsub(1, kBin);
    CHECK(image(tsub1, "00", 2) == std::set<Word>{"10", "01"});
    CHECK(image(tsub1, "", 2).empty());
    CHECK(image(tsub1, "1", 1) == std::set<Word>{"0"});
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        CHECK(image(tsub1, w, 6) ==
              oracle::substitutions_upto(kBin, w, 1));

    Transducer tsub2 = make_tsub(2, kBin);
    for (const Word& w : oracle::all_words_upto(kBin, 5))
        CHECK(image(tsub2, w, 5) ==
              oracle::substitutions_upto(kBin, w, 2));

    CHECK_THROWS_AS(make_tsub(0, kBin), error);
}

TEST_CASE("decreasing substitution transducers") {
    Transducer dsub1 = make_dsub(1, kBin);
    CHECK(image(dsub1, "011", 3) == std::set<Word>{"001", "010"});
    CHECK(image(dsub1, "000", 3).empty());

    Transducer dsub2 = make_dsub(2, kBin);
    CHECK(image(dsub2, "110", 3) ==
          std::set<Word>{"010", "100", "000", "011", "101"});

    // Over {0,1}: dsub1 substitutes exactly one 1 with a 0; dsub2 allows
    // one further arbitrary substitution at a later position.
    for (const Word& w : oracle::all_words_upto(kBin, 6)) {
        std::set<Word> expect1;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == '1') {
                Word v = w;
                v[i] = '0';
                expect1.insert(v);
            }
        CHECK(image(dsub1, w, 6) == expect1);

        std::set<Word> expect2 = expect1;
        for (const Word& v : expect1)
            for (std::size_t j = 0; j < v.size(); ++j) {
                // The first substitution happened at the position where w
                // had a 1 and v has a 0; later positions may flip again.
                if (w[j] == '1' && v[j] == '0') {
                    for (std::size_t l = j + 1; l < v.size(); ++l) {
                        Word u = v;
                        u[l] = v[l] == '0' ? '1' : '0';
                        expect2.insert(u);
                    }
                    break;
                }
            }
        CHECK(image(dsub2, w, 6) == expect2);
    }

    // Generalization: the first substitution strictly decreases a symbol.
    Alphabet tern("012");
    Transducer dsub1t = make_dsub(1, tern);
    CHECK(image(dsub1t, "2", 1) == std::set<Word>{"0", "1"});
    CHECK(image(dsub1t, "01", 2) == std::set<Word>{"00"});
    CHECK(image(dsub1t, "00", 2).empty());
}

TEST_CASE("insertion-deletion transducer") {
    Transducer did2 = make_did2(kBin);
    REQUIRE(did2.num_states() == 9);
    CHECK(image(did2, "1", 2).count("") == 1);
    CHECK(is_empty(apply_word(did2, "")));

    RadixOrder order(kBin);
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        for (const Word& y : image(did2, w, 6))
            CHECK(order.less(y, w));

    CHECK_THROWS_AS(make_did2(Alphabet("012")), error);
}

TEST_CASE("did2 realizes the decreasing distance-2 pairs exactly") {
    // y ∈ did2(x) iff y is below x in radix order and obtainable from x
    // with at most two insertions/deletions; the union with the inverse
    // therefore relates exactly the word pairs at distance 1 or 2.
    Transducer did2 = make_did2(kBin);
    RadixOrder order(kBin);
    auto words = oracle::all_words_upto(kBin, 5);
    for (const Word& x : words) {
        std::set<Word> got = image(did2, x, 5);
        std::set<Word> expect;
        for (const Word& y : words)
            if (order.less(y, x) && oracle::insdel_distance(x, y) <= 2)
                expect.insert(y);
        CHECK(got == expect);
    }
}

TEST_CASE("fixture transducer") {
    Transducer t1 = make_fig1(kBin);
    Transducer t1_sq = power(t1, 2);
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        CHECK(is_empty(apply_word(t1_sq, w)));

    CHECK(image(t1, "1", 2) == std::set<Word>{"", "0", "00"});
    CHECK(verify_input_altering(t1, 6) == std::nullopt);
    CHECK_THROWS_AS(make_fig1(Alphabet("012")), error);
}

TEST_CASE("constructors are input-decreasing where claimed") {
    for (const Transducer& t :
         {make_prefix(kBin), make_suffix(kBin), make_bifix(kBin),
          make_dsub(1, kBin), make_dsub(2, kBin), make_did2(kBin)}) {
        CHECK(verify_input_decreasing(t, 6) == std::nullopt);
    }

    auto witness = verify_input_decreasing(make_tsub(1, kBin), 6);
    REQUIRE(witness.has_value());
    CHECK(witness->input == "0");
    CHECK(witness->output == "1");
    CHECK(verify_input_altering(make_tsub(1, kBin), 6) == std::nullopt);
}

TEST_CASE("union of dsub1 and its inverse is tsub1") {
    Transducer dsub1 = make_dsub(1, kBin);
    Transducer combined = t_union(dsub1, invert(dsub1));
    Transducer tsub1 = make_tsub(1, kBin);
    for (const Word& w : oracle::all_words_upto(kBin, 6))
        CHECK(image(combined, w, 6) == image(tsub1, w, 6));
}

TEST_CASE("transitivity of the constructors") {
    CHECK(verify_transitive(make_prefix(kBin), 5) == std::nullopt);
    auto witness = verify_transitive(make_bifix(kBin), 5);
    REQUIRE(witness.has_value());
    // Smallest failure: 01 is a proper prefix of 010 and 1 a proper
    // suffix of 01, yet 1 is neither a prefix nor a suffix of 010.
    CHECK(*witness == "010");
    CHECK(verify_transitive(make_fig1(kBin), 5) == std::nullopt);
}

TEST_CASE("constructors are deterministic") {
    auto render = [](const Transducer& t) {
        std::ostringstream out;
        write_transducer(out, t);
        return out.str();
    };
    CHECK(render(make_bifix(kBin)) == render(make_bifix(kBin)));
    CHECK(render(make_did2(kBin)) == render(make_did2(kBin)));
}
