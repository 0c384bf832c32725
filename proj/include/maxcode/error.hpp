#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxcode {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed regex / automaton / transducer / word-list input.
// `where` is a 0-based character offset for regexes and a 1-based line
// number for line-oriented files (see what()).
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t where)
        : error(msg + " (at " + std::to_string(where) + ")"), position(where) {}
    std::size_t position;
};

// Operands disagree on the alphabet, or a word/symbol falls outside it.
struct alphabet_error : error {
    using error::error;
};

// An intermediate automaton exceeded the configured state budget.
struct budget_error : error {
    explicit budget_error(int budget)
        : error("state budget of " + std::to_string(budget) +
                " states exceeded"),
          budget(budget) {}
    int budget;
};

}  // namespace maxcode
