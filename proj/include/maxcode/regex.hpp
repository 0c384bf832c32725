#pragma once

#include <cctype>
#include <string_view>
#include <vector>

#include "nfa.hpp"

namespace maxcode {

// Regular expression parser for the notation used throughout:
//   symbols        (must belong to the alphabet)
//   @              the empty word
//   +              union
//   juxtaposition  concatenation
//   *              Kleene star (postfix)
//   ^n             n-fold repetition, decimal n >= 0 (postfix)
//   ( )            grouping; whitespace is ignored
// There is no literal for the empty language; use from_words({}) or a
// difference instead.
namespace detail {

struct Fragment {
    int num_states = 0;
    std::vector<NfaTransition> trans;
    int start = 0;
    int accept = 0;
};

inline Fragment frag_epsilon() {
    Fragment f;
    f.num_states = 2;
    f.start = 0;
    f.accept = 1;
    f.trans.push_back({0, kEpsilon, 1});
    return f;
}

inline Fragment frag_symbol(int sym) {
    Fragment f;
    f.num_states = 2;
    f.start = 0;
    f.accept = 1;
    f.trans.push_back({0, sym, 1});
    return f;
}

inline void append_shifted(Fragment& dst, const Fragment& src, int off) {
    for (const auto& t : src.trans)
        dst.trans.push_back({t.from + off, t.label, t.to + off});
}

inline Fragment frag_concat(const Fragment& a, const Fragment& b) {
    Fragment f;
    f.num_states = a.num_states + b.num_states;
    f.trans = a.trans;
    append_shifted(f, b, a.num_states);
    f.trans.push_back({a.accept, kEpsilon, b.start + a.num_states});
    f.start = a.start;
    f.accept = b.accept + a.num_states;
    return f;
}

inline Fragment frag_union(const Fragment& a, const Fragment& b) {
    Fragment f;
    int sa = 0;                        // fresh start
    int oa = 1;                        // a offset
    int ob = 1 + a.num_states;         // b offset
    int acc = ob + b.num_states;       // fresh accept
    f.num_states = acc + 1;
    append_shifted(f, a, oa);
    append_shifted(f, b, ob);
    f.trans.push_back({sa, kEpsilon, a.start + oa});
    f.trans.push_back({sa, kEpsilon, b.start + ob});
    f.trans.push_back({a.accept + oa, kEpsilon, acc});
    f.trans.push_back({b.accept + ob, kEpsilon, acc});
    f.start = sa;
    f.accept = acc;
    return f;
}

inline Fragment frag_star(const Fragment& a) {
    Fragment f;
    int s = 0;
    int oa = 1;
    int acc = 1 + a.num_states;
    f.num_states = acc + 1;
    append_shifted(f, a, oa);
    f.trans.push_back({s, kEpsilon, a.start + oa});
    f.trans.push_back({s, kEpsilon, acc});
    f.trans.push_back({a.accept + oa, kEpsilon, a.start + oa});
    f.trans.push_back({a.accept + oa, kEpsilon, acc});
    f.start = s;
    f.accept = acc;
    return f;
}

inline Fragment frag_power(const Fragment& a, long n) {
    if (n == 0) return frag_epsilon();
    Fragment f = a;
    for (long i = 1; i < n; ++i) f = frag_concat(f, a);
    return f;
}

class RegexParser {
  public:
    RegexParser(std::string_view src, const Alphabet& alphabet)
        : src_(src), alphabet_(alphabet) {}

    Fragment parse() {
        Fragment f = parse_union();
        skip_ws();
        if (pos_ < src_.size())
            throw parse_error("unexpected character '" +
                                  std::string(1, src_[pos_]) + "'",
                              pos_);
        return f;
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool at_atom_start() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return c == '(' || c == kEpsilonGlyph || alphabet_.contains(c) ||
               (!is_reserved_char(c) && c != ')' && c != '+' && c != '*' &&
                c != '^');
    }

    Fragment parse_union() {
        Fragment f = parse_concat();
        while (peek_is('+')) {
            ++pos_;
            f = frag_union(f, parse_concat());
        }
        return f;
    }

    Fragment parse_concat() {
        skip_ws();
        if (!at_atom_start())
            throw parse_error("expected a symbol, '@' or '('", pos_);
        Fragment f = parse_postfix();
        while (at_atom_start()) f = frag_concat(f, parse_postfix());
        return f;
    }

    Fragment parse_postfix() {
        Fragment f = parse_atom();
        for (;;) {
            if (peek_is('*')) {
                ++pos_;
                f = frag_star(f);
            } else if (peek_is('^')) {
                ++pos_;
                f = frag_power(f, parse_number());
            } else {
                break;
            }
        }
        return f;
    }

    long parse_number() {
        skip_ws();
        std::size_t begin = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == begin)
            throw parse_error("expected a repetition count after '^'", pos_);
        long n = 0;
        for (std::size_t i = begin; i < pos_; ++i) {
            n = n * 10 + (src_[i] - '0');
            if (n > kMaxRepeat)
                throw parse_error("repetition count too large", begin);
        }
        return n;
    }

    Fragment parse_atom() {
        skip_ws();
        if (pos_ >= src_.size())
            throw parse_error("unexpected end of regex", pos_);
        char c = src_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            Fragment f = parse_union();
            if (!peek_is(')'))
                throw parse_error("unmatched '('", open);
            ++pos_;
            return f;
        }
        if (c == kEpsilonGlyph) {
            ++pos_;
            return frag_epsilon();
        }
        int sym = alphabet_.index_of(c);
        if (sym == -1)
            throw parse_error("symbol '" + std::string(1, c) +
                                  "' not in alphabet",
                              pos_);
        ++pos_;
        return frag_symbol(sym);
    }

    static constexpr long kMaxRepeat = 100000;

    std::string_view src_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Nfa regex_parse(std::string_view src, const Alphabet& alphabet) {
    detail::RegexParser parser(src, alphabet);
    detail::Fragment f = parser.parse();
    return Nfa(alphabet, f.num_states, std::move(f.trans), {f.start},
               {f.accept});
}

}  // namespace maxcode
