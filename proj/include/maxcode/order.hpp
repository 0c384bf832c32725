#pragma once

#include <cstdint>
#include <optional>

#include "dfa.hpp"
#include "transducer.hpp"

namespace maxcode {

// All words of length <= n over the alphabet, in radix order.
inline std::vector<Word> words_upto(const Alphabet& alphabet, int n) {
    std::vector<Word> out;
    out.emplace_back();
    std::vector<Word> layer{Word()};
    for (int len = 1; len <= n; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * static_cast<std::size_t>(alphabet.size()));
        for (const Word& w : layer)
            for (int a = 0; a < alphabet.size(); ++a)
                next.push_back(w + alphabet.symbol(a));
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

enum class Ordering { less, equal, greater };

// The quasi-lexicographic (radix) total order: shorter words first, words
// of equal length compared lexicographically by the alphabet's symbol
// order. pos() is the 0-based rank of a word in that order.
class RadixOrder {
  public:
    explicit RadixOrder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const { return alphabet_; }

    Ordering compare(const Word& u, const Word& v) const {
        alphabet_.check_word(u);
        alphabet_.check_word(v);
        if (u.size() != v.size())
            return u.size() < v.size() ? Ordering::less : Ordering::greater;
        for (std::size_t i = 0; i < u.size(); ++i) {
            int a = alphabet_.index_of(u[i]);
            int b = alphabet_.index_of(v[i]);
            if (a != b) return a < b ? Ordering::less : Ordering::greater;
        }
        return Ordering::equal;
    }

    bool less(const Word& u, const Word& v) const {
        return compare(u, v) == Ordering::less;
    }

    // pos(w) = (q^|w| - 1)/(q - 1) + value of w as a base-q numeral.
    std::uint64_t word_pos(const Word& w) const {
        alphabet_.check_word(w);
        std::uint64_t q = static_cast<std::uint64_t>(alphabet_.size());
        std::uint64_t shorter = 0;  // count of words of length < |w|
        std::uint64_t power = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (shorter > (UINT64_MAX - power) ||
                (q != 1 && power > UINT64_MAX / q))
                throw error("word position overflows 64 bits");
            shorter += power;
            power *= q;
        }
        std::uint64_t value = 0;
        for (char c : w) {
            std::uint64_t digit =
                static_cast<std::uint64_t>(alphabet_.index_of(c));
            if (value > (UINT64_MAX - digit) / q)
                throw error("word position overflows 64 bits");
            value = value * q + digit;
        }
        if (shorter > UINT64_MAX - value)
            throw error("word position overflows 64 bits");
        return shorter + value;
    }

    // Nfa accepting exactly {y : y < w} in this order.
    Nfa lang_below(const Word& w) const {
        alphabet_.check_word(w);
        int len = static_cast<int>(w.size());
        int q = alphabet_.size();
        if (len == 0) return from_words({}, alphabet_);
        // States: c_0..c_{len-1} accept everything shorter than w;
        // e_0..e_{len-1} track an equal prefix; g_1..g_len pad a committed
        // lexicographically smaller word out to |w|.
        int c0 = 0;
        int e0 = len;
        int g1 = 2 * len;
        auto c = [&](int i) { return c0 + i; };
        auto e = [&](int i) { return e0 + i; };
        auto g = [&](int j) { return g1 + (j - 1); };
        std::vector<NfaTransition> trans;
        std::vector<int> finals;
        for (int i = 0; i < len; ++i) {
            finals.push_back(c(i));
            if (i + 1 < len)
                for (int a = 0; a < q; ++a)
                    trans.push_back({c(i), a, c(i + 1)});
        }
        for (int i = 0; i < len; ++i) {
            int wi = alphabet_.index_of(w[static_cast<std::size_t>(i)]);
            for (int a = 0; a < wi; ++a)
                trans.push_back({e(i), a, g(i + 1)});
            if (i + 1 < len) trans.push_back({e(i), wi, e(i + 1)});
        }
        for (int j = 1; j <= len; ++j) {
            if (j < len)
                for (int a = 0; a < q; ++a)
                    trans.push_back({g(j), a, g(j + 1)});
        }
        finals.push_back(g(len));
        return Nfa(alphabet_, 3 * len, std::move(trans), {c(0), e(0)},
                   finals);
    }

  private:
    Alphabet alphabet_;
};

// Bounded verifiers for the transducer classes. "pass" is nullopt;
// otherwise the radix-smallest witness is returned. Exact verification
// reduces to undecidable rational-relation questions, hence the bound.

inline std::optional<Word> verify_input_altering(const Transducer& t, int n) {
    for (const Word& w : words_upto(t.alphabet(), n))
        if (contains(apply_word(t, w), w)) return w;
    return std::nullopt;
}

struct DecreasingWitness {
    Word input;
    Word output;  // output in t(input) with output not < input
};

inline std::optional<DecreasingWitness> verify_input_decreasing(
    const Transducer& t, int n, int state_budget = kDefaultStateBudget) {
    RadixOrder order(t.alphabet());
    for (const Word& x : words_upto(t.alphabet(), n)) {
        Nfa bad = difference(apply_word(t, x), order.lang_below(x),
                             state_budget);
        if (auto y = radix_smallest(bad, state_budget))
            return DecreasingWitness{x, *y};
    }
    return std::nullopt;
}

inline std::optional<Word> verify_transitive(
    const Transducer& t, int n, int state_budget = kDefaultStateBudget) {
    for (const Word& x : words_upto(t.alphabet(), n)) {
        Nfa once = apply_word(t, x);
        Nfa twice = apply_lang(t, once);
        if (!is_empty(difference(twice, once, state_budget))) return x;
    }
    return std::nullopt;
}

}  // namespace maxcode
