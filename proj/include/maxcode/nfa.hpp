#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "alphabet.hpp"

namespace maxcode {

// Transition label for the empty word; symbol labels are alphabet indices.
inline constexpr int kEpsilon = -1;

// Default cap on the number of states any single constructed automaton may
// reach. Exceeding it raises budget_error, never silent truncation.
inline constexpr int kDefaultStateBudget = 100000;

struct NfaTransition {
    int from;
    int label;  // kEpsilon or symbol index
    int to;

    friend auto operator<=>(const NfaTransition&,
                            const NfaTransition&) = default;
};

// Nondeterministic finite automaton over one alphabet. Epsilon transitions
// are allowed. Immutable after construction.
class Nfa {
  public:
    Nfa(Alphabet alphabet, int num_states, std::vector<NfaTransition> trans,
        std::vector<int> initial, const std::vector<int>& final)
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          transitions_(std::move(trans)),
          initial_(std::move(initial)),
          final_(static_cast<std::size_t>(num_states), false) {
        if (num_states_ < 0) throw error("negative state count");
        for (const auto& t : transitions_) {
            check_state(t.from);
            check_state(t.to);
            if (t.label != kEpsilon &&
                (t.label < 0 || t.label >= alphabet_.size()))
                throw error("transition label out of range");
        }
        for (int s : initial_) check_state(s);
        for (int s : final) {
            check_state(s);
            final_[static_cast<std::size_t>(s)] = true;
        }
        std::sort(initial_.begin(), initial_.end());
        initial_.erase(std::unique(initial_.begin(), initial_.end()),
                       initial_.end());
        std::sort(transitions_.begin(), transitions_.end());
        transitions_.erase(
            std::unique(transitions_.begin(), transitions_.end()),
            transitions_.end());
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    const std::vector<NfaTransition>& transitions() const {
        return transitions_;
    }
    const std::vector<int>& initial_states() const { return initial_; }
    bool is_final(int s) const { return final_[static_cast<std::size_t>(s)]; }

    std::vector<int> final_states() const {
        std::vector<int> out;
        for (int s = 0; s < num_states_; ++s)
            if (final_[static_cast<std::size_t>(s)]) out.push_back(s);
        return out;
    }

    // out[s] = transitions leaving s, sorted by (label, to).
    std::vector<std::vector<NfaTransition>> adjacency() const {
        std::vector<std::vector<NfaTransition>> out(
            static_cast<std::size_t>(num_states_));
        for (const auto& t : transitions_)
            out[static_cast<std::size_t>(t.from)].push_back(t);
        return out;
    }

  private:
    void check_state(int s) const {
        if (s < 0 || s >= num_states_) throw error("state id out of range");
    }

    Alphabet alphabet_;
    int num_states_;
    std::vector<NfaTransition> transitions_;
    std::vector<int> initial_;
    std::vector<bool> final_;
};

// Expands `states` to its epsilon closure, in place. `states` is a sorted
// set of state ids on return.
inline void eps_close(const Nfa& a,
                      const std::vector<std::vector<NfaTransition>>& adj,
                      std::vector<int>& states) {
    std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
    std::vector<int> stack = states;
    for (int s : states) seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (const auto& t : adj[static_cast<std::size_t>(s)]) {
            if (t.label != kEpsilon) continue;
            if (!seen[static_cast<std::size_t>(t.to)]) {
                seen[static_cast<std::size_t>(t.to)] = true;
                states.push_back(t.to);
                stack.push_back(t.to);
            }
        }
    }
    std::sort(states.begin(), states.end());
}

inline bool contains(const Nfa& a, const Word& w) {
    a.alphabet().check_word(w);
    auto adj = a.adjacency();
    std::vector<int> cur = a.initial_states();
    eps_close(a, adj, cur);
    for (char c : w) {
        int sym = a.alphabet().index_of(c);
        std::set<int> next;
        for (int s : cur)
            for (const auto& t : adj[static_cast<std::size_t>(s)])
                if (t.label == sym) next.insert(t.to);
        cur.assign(next.begin(), next.end());
        if (cur.empty()) return false;
        eps_close(a, adj, cur);
    }
    for (int s : cur)
        if (a.is_final(s)) return true;
    return false;
}

inline bool is_empty(const Nfa& a) {
    std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
    std::vector<int> stack;
    for (int s : a.initial_states()) {
        if (a.is_final(s)) return false;
        seen[static_cast<std::size_t>(s)] = true;
        stack.push_back(s);
    }
    auto adj = a.adjacency();
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (const auto& t : adj[static_cast<std::size_t>(s)]) {
            if (seen[static_cast<std::size_t>(t.to)]) continue;
            if (a.is_final(t.to)) return false;
            seen[static_cast<std::size_t>(t.to)] = true;
            stack.push_back(t.to);
        }
    }
    return true;
}

// Accepts exactly the given finite set of words (built as a trie).
inline Nfa from_words(const std::vector<Word>& words,
                      const Alphabet& alphabet) {
    std::vector<std::vector<int>> next;  // trie: next[node][symbol]
    std::vector<bool> accept;
    auto new_node = [&] {
        next.emplace_back(static_cast<std::size_t>(alphabet.size()), -1);
        accept.push_back(false);
        return static_cast<int>(next.size()) - 1;
    };
    new_node();  // root
    for (const Word& w : words) {
        alphabet.check_word(w);
        int node = 0;
        for (char c : w) {
            int sym = alphabet.index_of(c);
            auto& slot = next[static_cast<std::size_t>(node)]
                             [static_cast<std::size_t>(sym)];
            if (slot == -1) slot = new_node();
            node = slot;
        }
        accept[static_cast<std::size_t>(node)] = true;
    }
    std::vector<NfaTransition> trans;
    std::vector<int> finals;
    for (int s = 0; s < static_cast<int>(next.size()); ++s) {
        for (int a = 0; a < alphabet.size(); ++a) {
            int to = next[static_cast<std::size_t>(s)]
                         [static_cast<std::size_t>(a)];
            if (to != -1) trans.push_back({s, a, to});
        }
        if (accept[static_cast<std::size_t>(s)]) finals.push_back(s);
    }
    return Nfa(alphabet, static_cast<int>(next.size()), std::move(trans), {0},
               finals);
}

inline Nfa from_words(std::initializer_list<Word> words,
                      const Alphabet& alphabet) {
    return from_words(std::vector<Word>(words), alphabet);
}

// Plain state-disjoint union; accepts L(a) ∪ L(b).
inline Nfa nfa_union(const Nfa& a, const Nfa& b) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    int off = a.num_states();
    std::vector<NfaTransition> trans = a.transitions();
    for (const auto& t : b.transitions())
        trans.push_back({t.from + off, t.label, t.to + off});
    std::vector<int> initial = a.initial_states();
    for (int s : b.initial_states()) initial.push_back(s + off);
    std::vector<int> finals = a.final_states();
    for (int s : b.final_states()) finals.push_back(s + off);
    return Nfa(a.alphabet(), a.num_states() + b.num_states(),
               std::move(trans), std::move(initial), finals);
}

// Σ*, Σ^n and Σ^{<=n} over the given alphabet.
inline Nfa sigma_star(const Alphabet& alphabet) {
    std::vector<NfaTransition> trans;
    trans.reserve(static_cast<std::size_t>(alphabet.size()));
    for (int a = 0; a < alphabet.size(); ++a) trans.push_back({0, a, 0});
    return Nfa(alphabet, 1, std::move(trans), {0}, {0});
}

inline Nfa sigma_exact(const Alphabet& alphabet, int n) {
    std::vector<NfaTransition> trans;
    trans.reserve(static_cast<std::size_t>(n) *
                  static_cast<std::size_t>(alphabet.size()));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < alphabet.size(); ++a)
            trans.push_back({i, a, i + 1});
    return Nfa(alphabet, n + 1, std::move(trans), {0}, {n});
}

inline Nfa sigma_upto(const Alphabet& alphabet, int n) {
    std::vector<NfaTransition> trans;
    std::vector<int> finals;
    for (int i = 0; i <= n; ++i) finals.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < alphabet.size(); ++a)
            trans.push_back({i, a, i + 1});
    return Nfa(alphabet, n + 1, std::move(trans), {0}, finals);
}

}  // namespace maxcode
