#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dfa.hpp"
#include "nfa.hpp"
#include "regex.hpp"
#include "transducer.hpp"

namespace maxcode {

// Line-oriented text formats. `#` starts a comment. Automaton files:
//
//   alphabet: 0 1
//   states: q0 q1
//   initial: q0
//   final: q1
//   trans: q0 0 q0
//   trans: q1 @ q0      # @ = epsilon
//
// Transducer files use labels `in/out` where each side is a symbol word or
// `@`; word labels are normalized (split symbol-by-symbol) on load. Word
// lists hold one word per line, `@` alone denoting the empty word.

namespace detail {

struct RawLine {
    std::size_t number;  // 1-based
    std::string key;
    std::vector<std::string> fields;
};

inline std::vector<RawLine> read_keyed_lines(std::istream& in) {
    std::vector<RawLine> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first.back() != ':')
            throw parse_error("expected 'key:' at line start, got '" + first +
                                  "'",
                              number);
        RawLine raw;
        raw.number = number;
        raw.key = first.substr(0, first.size() - 1);
        std::string tok;
        while (fields >> tok) raw.fields.push_back(tok);
        out.push_back(std::move(raw));
    }
    return out;
}

struct ParsedHeader {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::vector<int> initial;
    std::vector<int> final;
    std::vector<RawLine> trans_lines;
};

inline ParsedHeader parse_header(std::istream& in) {
    auto lines = read_keyed_lines(in);
    std::string alphabet_chars;
    std::vector<std::string> state_names;
    std::map<std::string, int> state_ids;
    std::vector<std::pair<RawLine, bool>> pending_marks;  // line, is_initial
    std::vector<RawLine> trans_lines;
    bool saw_alphabet = false, saw_states = false;
    for (auto& raw : lines) {
        if (raw.key == "alphabet") {
            for (const auto& f : raw.fields) {
                if (f.size() != 1)
                    throw parse_error("alphabet symbols must be single "
                                      "characters, got '" + f + "'",
                                      raw.number);
                alphabet_chars += f;
            }
            saw_alphabet = true;
        } else if (raw.key == "states") {
            for (const auto& f : raw.fields) {
                if (!state_ids.emplace(f, static_cast<int>(
                                              state_names.size()))
                         .second)
                    throw parse_error("duplicate state '" + f + "'",
                                      raw.number);
                state_names.push_back(f);
            }
            saw_states = true;
        } else if (raw.key == "initial" || raw.key == "final") {
            bool is_initial = raw.key == "initial";
            pending_marks.emplace_back(std::move(raw), is_initial);
        } else if (raw.key == "trans") {
            trans_lines.push_back(std::move(raw));
        } else {
            throw parse_error("unknown key '" + raw.key + "'", raw.number);
        }
    }
    if (!saw_alphabet) throw parse_error("missing 'alphabet:' line", 1);
    if (!saw_states) throw parse_error("missing 'states:' line", 1);
    ParsedHeader h{Alphabet(alphabet_chars), std::move(state_names), {}, {},
                   std::move(trans_lines)};
    std::map<std::string, int> ids;
    for (std::size_t i = 0; i < h.state_names.size(); ++i)
        ids[h.state_names[i]] = static_cast<int>(i);
    for (auto& [raw, is_initial] : pending_marks) {
        for (const auto& f : raw.fields) {
            auto it = ids.find(f);
            if (it == ids.end())
                throw parse_error("undeclared state '" + f + "'", raw.number);
            (is_initial ? h.initial : h.final).push_back(it->second);
        }
    }
    return h;
}

inline int lookup_state(const ParsedHeader& h, const std::string& name,
                        std::size_t line) {
    for (std::size_t i = 0; i < h.state_names.size(); ++i)
        if (h.state_names[i] == name) return static_cast<int>(i);
    throw parse_error("undeclared state '" + name + "'", line);
}

}  // namespace detail

inline Nfa load_nfa(std::istream& in) {
    auto h = detail::parse_header(in);
    std::vector<NfaTransition> trans;
    for (const auto& raw : h.trans_lines) {
        if (raw.fields.size() != 3)
            throw parse_error("automaton transition needs 'from label to'",
                              raw.number);
        int from = detail::lookup_state(h, raw.fields[0], raw.number);
        int to = detail::lookup_state(h, raw.fields[2], raw.number);
        const std::string& label = raw.fields[1];
        int sym;
        if (label.size() == 1 && label[0] == kEpsilonGlyph) {
            sym = kEpsilon;
        } else if (label.size() == 1 && h.alphabet.contains(label[0])) {
            sym = h.alphabet.index_of(label[0]);
        } else {
            throw parse_error("bad transition label '" + label + "'",
                              raw.number);
        }
        trans.push_back({from, sym, to});
    }
    return Nfa(h.alphabet, static_cast<int>(h.state_names.size()),
               std::move(trans), h.initial, h.final);
}

inline void write_nfa(std::ostream& out, const Nfa& a) {
    out << "alphabet:";
    for (char c : a.alphabet().symbols()) out << ' ' << c;
    out << "\nstates:";
    for (int s = 0; s < a.num_states(); ++s) out << ' ' << s;
    out << "\ninitial:";
    for (int s : a.initial_states()) out << ' ' << s;
    out << "\nfinal:";
    for (int s : a.final_states()) out << ' ' << s;
    out << '\n';
    for (const auto& t : a.transitions()) {
        out << "trans: " << t.from << ' ';
        if (t.label == kEpsilon)
            out << kEpsilonGlyph;
        else
            out << a.alphabet().symbol(t.label);
        out << ' ' << t.to << '\n';
    }
}

inline void write_dfa(std::ostream& out, const Dfa& d) {
    write_nfa(out, to_nfa(d));
}

// Loads a transducer, splitting word labels into chains of single-symbol
// transitions (input symbols paired first, surplus against epsilon) and
// trimming the result.
inline Transducer load_transducer(std::istream& in) {
    auto h = detail::parse_header(in);
    int num_states = static_cast<int>(h.state_names.size());
    std::vector<TdTransition> trans;
    auto side_symbols = [&](const std::string& side,
                            std::size_t line) -> std::vector<int> {
        if (side.size() == 1 && side[0] == kEpsilonGlyph) return {};
        std::vector<int> syms;
        for (char c : side) {
            if (!h.alphabet.contains(c))
                throw parse_error("symbol '" + std::string(1, c) +
                                      "' not in alphabet",
                                  line);
            syms.push_back(h.alphabet.index_of(c));
        }
        if (syms.empty())
            throw parse_error("empty label side", line);
        return syms;
    };
    for (const auto& raw : h.trans_lines) {
        if (raw.fields.size() != 3)
            throw parse_error("transducer transition needs 'from in/out to'",
                              raw.number);
        int from = detail::lookup_state(h, raw.fields[0], raw.number);
        int to = detail::lookup_state(h, raw.fields[2], raw.number);
        const std::string& label = raw.fields[1];
        auto slash = label.find('/');
        if (slash == std::string::npos ||
            label.find('/', slash + 1) != std::string::npos)
            throw parse_error("label must be 'in/out', got '" + label + "'",
                              raw.number);
        std::vector<int> in_syms =
            side_symbols(label.substr(0, slash), raw.number);
        std::vector<int> out_syms =
            side_symbols(label.substr(slash + 1), raw.number);
        std::size_t steps = std::max(in_syms.size(), out_syms.size());
        if (steps <= 1) {
            trans.push_back({from,
                             in_syms.empty() ? kEpsilon : in_syms[0],
                             out_syms.empty() ? kEpsilon : out_syms[0], to});
            continue;
        }
        // Chain through fresh states, pairing positionally.
        int prev = from;
        for (std::size_t i = 0; i < steps; ++i) {
            int next = i + 1 == steps ? to : num_states++;
            trans.push_back(
                {prev, i < in_syms.size() ? in_syms[i] : kEpsilon,
                 i < out_syms.size() ? out_syms[i] : kEpsilon, next});
            prev = next;
        }
    }
    return trim(Transducer(h.alphabet, num_states, std::move(trans),
                           h.initial, h.final));
}

inline void write_transducer(std::ostream& out, const Transducer& t) {
    out << "alphabet:";
    for (char c : t.alphabet().symbols()) out << ' ' << c;
    out << "\nstates:";
    for (int s = 0; s < t.num_states(); ++s) out << ' ' << s;
    out << "\ninitial:";
    for (int s : t.initial_states()) out << ' ' << s;
    out << "\nfinal:";
    for (int s : t.final_states()) out << ' ' << s;
    out << '\n';
    auto glyph = [&](int label) {
        return label == kEpsilon ? kEpsilonGlyph
                                 : t.alphabet().symbol(label);
    };
    for (const auto& tr : t.transitions())
        out << "trans: " << tr.from << ' ' << glyph(tr.in) << '/'
            << glyph(tr.out) << ' ' << tr.to << '\n';
}

// Word lists: one word per line, `@` = empty word, `#` comments.
inline std::vector<Word> load_words(std::istream& in) {
    std::vector<Word> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string word;
        if (!(fields >> word)) continue;
        std::string extra;
        if (fields >> extra)
            throw parse_error("one word per line expected", number);
        out.push_back(word.size() == 1 && word[0] == kEpsilonGlyph ? Word()
                                                                   : word);
    }
    return out;
}

inline void write_words(std::ostream& out, const std::vector<Word>& words) {
    for (const Word& w : words)
        out << (w.empty() ? std::string(1, kEpsilonGlyph) : w) << '\n';
}

enum class FileKind { automaton, transducer, words };

// An automaton/transducer file starts with keyed lines and carries '/' in
// transition labels iff it is a transducer; anything else is a word list.
inline FileKind sniff_file(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    bool keyed = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (!keyed) {
            if (first != "alphabet:") return FileKind::words;
            keyed = true;
            continue;
        }
        if (first == "trans:") {
            std::string from, label;
            if (fields >> from >> label &&
                label.find('/') != std::string::npos)
                return FileKind::transducer;
            return FileKind::automaton;
        }
    }
    return keyed ? FileKind::automaton : FileKind::words;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open file for writing: " + path);
    out << content;
}

// Language specs: `re:<regex>`, `words:<comma list>` (@ = empty word), or
// `file:<path>` holding an automaton or a word list (sniffed by header).
// `alphabet` supplies the symbols for re:/words:/word-list forms; a
// `file:` automaton brings its own and must agree when one is supplied.
inline Nfa lang_from_spec(const std::string& spec,
                          const std::optional<Alphabet>& alphabet) {
    auto need_alphabet = [&]() -> const Alphabet& {
        if (!alphabet)
            throw error("language spec '" + spec +
                        "' needs an alphabet (use --alphabet or a "
                        "transducer/automaton file)");
        return *alphabet;
    };
    if (spec.rfind("re:", 0) == 0)
        return regex_parse(spec.substr(3), need_alphabet());
    if (spec.rfind("words:", 0) == 0) {
        std::vector<Word> words;
        std::string rest = spec.substr(6);
        std::size_t begin = 0;
        while (begin <= rest.size()) {
            std::size_t comma = rest.find(',', begin);
            std::string item = rest.substr(
                begin, comma == std::string::npos ? std::string::npos
                                                  : comma - begin);
            if (!item.empty())
                words.push_back(item.size() == 1 && item[0] == kEpsilonGlyph
                                    ? Word()
                                    : Word(item));
            if (comma == std::string::npos) break;
            begin = comma + 1;
        }
        return from_words(words, need_alphabet());
    }
    if (spec.rfind("file:", 0) == 0) {
        std::string content = read_file(spec.substr(5));
        FileKind kind = sniff_file(content);
        if (kind == FileKind::transducer)
            throw error("expected a language, found a transducer: " + spec);
        std::istringstream in(content);
        if (kind == FileKind::automaton) {
            Nfa a = load_nfa(in);
            if (alphabet) check_same_alphabet(*alphabet, a.alphabet());
            return a;
        }
        return from_words(load_words(in), need_alphabet());
    }
    throw error("language spec must start with re:, words: or file:, got '" +
                spec + "'");
}

inline Transducer load_transducer_file(const std::string& path) {
    std::string content = read_file(path);
    std::istringstream in(content);
    return load_transducer(in);
}

}  // namespace maxcode
