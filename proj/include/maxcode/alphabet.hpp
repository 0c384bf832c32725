#pragma once

#include <array>
#include <string>
#include <string_view>

#include "error.hpp"

namespace maxcode {

// A word is a finite sequence of alphabet symbols; "" is the empty word.
using Word = std::string;

// '@' denotes the empty word in all text formats and on the CLI.
inline constexpr char kEpsilonGlyph = '@';

inline bool is_reserved_char(char c) {
    return c == '@' || c == '/' || c == '#' || c <= ' ' || c > '~';
}

// An ordered set of distinct printable symbols. The listed order doubles
// as the symbol order of the radix order on words.
class Alphabet {
  public:
    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        index_.fill(-1);
        if (symbols_.empty())
            throw alphabet_error("alphabet must be nonempty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            char c = symbols_[i];
            if (is_reserved_char(c))
                throw alphabet_error(std::string("reserved or non-printable "
                                                 "character in alphabet: '") +
                                     c + "'");
            if (index_[uc(c)] != -1)
                throw alphabet_error(std::string("duplicate symbol '") + c +
                                     "' in alphabet");
            index_[uc(c)] = static_cast<int>(i);
        }
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    const std::string& symbols() const { return symbols_; }

    // Index of c in the symbol order, or -1 if c is not a symbol.
    int index_of(char c) const { return index_[uc(c)]; }
    bool contains(char c) const { return index_[uc(c)] != -1; }

    void check_symbol(char c) const {
        if (!contains(c))
            throw alphabet_error(std::string("symbol '") + c +
                                 "' not in alphabet " + symbols_);
    }
    void check_word(const Word& w) const {
        for (char c : w) check_symbol(c);
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) {
        return !(a == b);
    }

  private:
    static std::size_t uc(char c) {
        return static_cast<unsigned char>(c);
    }

    std::string symbols_;
    std::array<int, 256> index_;
};

inline void check_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (a != b)
        throw alphabet_error("alphabet mismatch: '" + a.symbols() + "' vs '" +
                             b.symbols() + "'");
}

}  // namespace maxcode
