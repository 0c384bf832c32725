#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "nfa.hpp"

namespace maxcode {

inline constexpr int kNoState = -1;

// Deterministic finite automaton with a partial transition map. State 0 is
// always the initial state. The minimized form produced by minimize() is
// canonical: states are trim (except possibly the initial state) and
// renumbered in breadth-first order following the alphabet order, so two
// minimized Dfas accept the same language iff they are structurally equal.
class Dfa {
  public:
    Dfa(Alphabet alphabet, int num_states, std::vector<std::vector<int>> next,
        std::vector<bool> final)
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          next_(std::move(next)),
          final_(std::move(final)) {
        if (num_states_ <= 0) throw error("dfa needs at least one state");
        if (static_cast<int>(next_.size()) != num_states_ ||
            static_cast<int>(final_.size()) != num_states_)
            throw error("dfa table size mismatch");
        for (const auto& row : next_) {
            if (static_cast<int>(row.size()) != alphabet_.size())
                throw error("dfa row size mismatch");
            for (int s : row)
                if (s != kNoState && (s < 0 || s >= num_states_))
                    throw error("dfa target out of range");
        }
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    int initial_state() const { return 0; }
    int next(int s, int sym) const {
        return next_[static_cast<std::size_t>(s)]
                    [static_cast<std::size_t>(sym)];
    }
    bool is_final(int s) const { return final_[static_cast<std::size_t>(s)]; }

    friend bool operator==(const Dfa& a, const Dfa& b) {
        return a.alphabet_ == b.alphabet_ && a.num_states_ == b.num_states_ &&
               a.next_ == b.next_ && a.final_ == b.final_;
    }

  private:
    Alphabet alphabet_;
    int num_states_;
    std::vector<std::vector<int>> next_;  // next_[state][symbol], kNoState ok
    std::vector<bool> final_;
};

inline Nfa to_nfa(const Dfa& d) {
    std::vector<NfaTransition> trans;
    std::vector<int> finals;
    for (int s = 0; s < d.num_states(); ++s) {
        for (int a = 0; a < d.alphabet().size(); ++a)
            if (d.next(s, a) != kNoState)
                trans.push_back({s, a, d.next(s, a)});
        if (d.is_final(s)) finals.push_back(s);
    }
    return Nfa(d.alphabet(), d.num_states(), std::move(trans), {0}, finals);
}

// Subset construction with epsilon closures. Only reachable subsets are
// materialized; the empty subset becomes a missing transition.
inline Dfa determinize(const Nfa& a, int state_budget = kDefaultStateBudget) {
    auto adj = a.adjacency();
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    std::vector<std::vector<int>> next;
    std::vector<bool> final;
    int q = a.alphabet().size();

    auto intern = [&](std::vector<int> subset) {
        auto [it, fresh] = ids.emplace(std::move(subset),
                                       static_cast<int>(subsets.size()));
        if (fresh) {
            if (static_cast<int>(subsets.size()) >= state_budget)
                throw budget_error(state_budget);
            subsets.push_back(it->first);
            next.emplace_back(static_cast<std::size_t>(q), kNoState);
            bool fin = false;
            for (int s : it->first) fin = fin || a.is_final(s);
            final.push_back(fin);
        }
        return it->second;
    };

    std::vector<int> start = a.initial_states();
    eps_close(a, adj, start);
    intern(start);
    for (int cur = 0; cur < static_cast<int>(subsets.size()); ++cur) {
        for (int sym = 0; sym < q; ++sym) {
            std::set<int> moved;
            for (int s : subsets[static_cast<std::size_t>(cur)])
                for (const auto& t : adj[static_cast<std::size_t>(s)])
                    if (t.label == sym) moved.insert(t.to);
            if (moved.empty()) continue;
            std::vector<int> subset(moved.begin(), moved.end());
            eps_close(a, adj, subset);
            next[static_cast<std::size_t>(cur)]
                [static_cast<std::size_t>(sym)] = intern(std::move(subset));
        }
    }
    return Dfa(a.alphabet(), static_cast<int>(subsets.size()),
               std::move(next), std::move(final));
}

// Canonical minimal partial DFA: Moore partition refinement over the
// completed automaton, dead states dropped, breadth-first renumbering.
inline Dfa minimize(const Dfa& d) {
    int q = d.alphabet().size();
    // Work on the completed automaton: kNoState becomes a sink state n.
    int n = d.num_states();
    int sink = n;
    auto step = [&](int s, int a) {
        if (s == sink) return sink;
        int t = d.next(s, a);
        return t == kNoState ? sink : t;
    };
    std::vector<int> cls(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s)
        cls[static_cast<std::size_t>(s)] =
            (s != sink && d.is_final(s)) ? 1 : 0;
    for (;;) {
        int before = static_cast<int>(
            std::set<int>(cls.begin(), cls.end()).size());
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(static_cast<std::size_t>(n) + 1);
        for (int s = 0; s <= n; ++s) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(q) + 1);
            sig.push_back(cls[static_cast<std::size_t>(s)]);
            for (int a = 0; a < q; ++a)
                sig.push_back(cls[static_cast<std::size_t>(step(s, a))]);
            auto [it, fresh] = sig_ids.emplace(
                std::move(sig), static_cast<int>(sig_ids.size()));
            (void)fresh;
            next_cls[static_cast<std::size_t>(s)] = it->second;
        }
        int after = static_cast<int>(sig_ids.size());
        cls = std::move(next_cls);
        // Signatures only ever split classes, so equal counts = fixpoint.
        if (after == before) break;
    }

    // Quotient tables over class representatives.
    std::map<int, int> rep;  // class -> quotient state
    std::vector<int> rep_state;
    for (int s = 0; s <= n; ++s) {
        if (rep.emplace(cls[static_cast<std::size_t>(s)],
                        static_cast<int>(rep_state.size()))
                .second)
            rep_state.push_back(s);
    }
    int m = static_cast<int>(rep_state.size());
    std::vector<std::vector<int>> qnext(
        static_cast<std::size_t>(m),
        std::vector<int>(static_cast<std::size_t>(q), kNoState));
    std::vector<bool> qfinal(static_cast<std::size_t>(m), false);
    for (int c = 0; c < m; ++c) {
        int s = rep_state[static_cast<std::size_t>(c)];
        qfinal[static_cast<std::size_t>(c)] = s != sink && d.is_final(s);
        for (int a = 0; a < q; ++a)
            qnext[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] =
                rep.at(cls[static_cast<std::size_t>(step(s, a))]);
    }
    int qinit = rep.at(cls[0]);

    // States with a path to a final quotient state.
    auto live = [&] {
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(m));
        std::vector<bool> lv(static_cast<std::size_t>(m), false);
        std::vector<int> stack;
        for (int s = 0; s < m; ++s)
            for (int a = 0; a < q; ++a)
                rev[static_cast<std::size_t>(
                        qnext[static_cast<std::size_t>(s)]
                             [static_cast<std::size_t>(a)])]
                    .push_back(s);
        for (int s = 0; s < m; ++s)
            if (qfinal[static_cast<std::size_t>(s)]) {
                lv[static_cast<std::size_t>(s)] = true;
                stack.push_back(s);
            }
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            for (int p : rev[static_cast<std::size_t>(s)])
                if (!lv[static_cast<std::size_t>(p)]) {
                    lv[static_cast<std::size_t>(p)] = true;
                    stack.push_back(p);
                }
        }
        return lv;
    }();

    // BFS renumbering from the initial state, following symbol order,
    // visiting live states only. Dead initial = the empty language.
    if (!live[static_cast<std::size_t>(qinit)]) {
        return Dfa(d.alphabet(), 1,
                   {std::vector<int>(static_cast<std::size_t>(q), kNoState)},
                   {false});
    }
    std::vector<int> order(static_cast<std::size_t>(m), -1);
    std::vector<int> bfs{qinit};
    order[static_cast<std::size_t>(qinit)] = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        int s = bfs[i];
        for (int a = 0; a < q; ++a) {
            int t = qnext[static_cast<std::size_t>(s)]
                         [static_cast<std::size_t>(a)];
            if (!live[static_cast<std::size_t>(t)]) continue;
            if (order[static_cast<std::size_t>(t)] == -1) {
                order[static_cast<std::size_t>(t)] =
                    static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }
    int k = static_cast<int>(bfs.size());
    std::vector<std::vector<int>> rnext(
        static_cast<std::size_t>(k),
        std::vector<int>(static_cast<std::size_t>(q), kNoState));
    std::vector<bool> rfinal(static_cast<std::size_t>(k), false);
    for (int i = 0; i < k; ++i) {
        int s = bfs[static_cast<std::size_t>(i)];
        rfinal[static_cast<std::size_t>(i)] =
            qfinal[static_cast<std::size_t>(s)];
        for (int a = 0; a < q; ++a) {
            int t = qnext[static_cast<std::size_t>(s)]
                         [static_cast<std::size_t>(a)];
            if (live[static_cast<std::size_t>(t)])
                rnext[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(a)] =
                    order[static_cast<std::size_t>(t)];
        }
    }
    return Dfa(d.alphabet(), k, std::move(rnext), std::move(rfinal));
}

inline Dfa determinize_minimize(const Nfa& a,
                                int state_budget = kDefaultStateBudget) {
    return minimize(determinize(a, state_budget));
}

inline bool contains(const Dfa& d, const Word& w) {
    d.alphabet().check_word(w);
    int s = d.initial_state();
    for (char c : w) {
        s = d.next(s, d.alphabet().index_of(c));
        if (s == kNoState) return false;
    }
    return d.is_final(s);
}

enum class BoolOp { union_op, intersection, difference };

namespace detail {

// Reachable product of two completed DFAs; accepting rule per op.
inline Dfa product(const Dfa& a, const Dfa& b, BoolOp op, int state_budget) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    int q = a.alphabet().size();
    // kNoState acts as a non-final sink on each side.
    auto accepts = [&](int sa, int sb) {
        bool fa = sa != kNoState && a.is_final(sa);
        bool fb = sb != kNoState && b.is_final(sb);
        switch (op) {
            case BoolOp::union_op: return fa || fb;
            case BoolOp::intersection: return fa && fb;
            case BoolOp::difference: return fa && !fb;
        }
        return false;
    };
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> next;
    std::vector<bool> final;
    auto intern = [&](std::pair<int, int> p) {
        auto [it, fresh] = ids.emplace(p, static_cast<int>(pairs.size()));
        if (fresh) {
            if (static_cast<int>(pairs.size()) >= state_budget)
                throw budget_error(state_budget);
            pairs.push_back(p);
            next.emplace_back(static_cast<std::size_t>(q), kNoState);
            final.push_back(accepts(p.first, p.second));
        }
        return it->second;
    };
    intern({a.initial_state(), b.initial_state()});
    for (int cur = 0; cur < static_cast<int>(pairs.size()); ++cur) {
        auto [sa, sb] = pairs[static_cast<std::size_t>(cur)];
        for (int sym = 0; sym < q; ++sym) {
            int ta = sa == kNoState ? kNoState : a.next(sa, sym);
            int tb = sb == kNoState ? kNoState : b.next(sb, sym);
            if (ta == kNoState && tb == kNoState) continue;
            next[static_cast<std::size_t>(cur)][static_cast<std::size_t>(
                sym)] = intern({ta, tb});
        }
    }
    return Dfa(a.alphabet(), static_cast<int>(pairs.size()), std::move(next),
               std::move(final));
}

}  // namespace detail

inline Nfa boolean_combine(const Nfa& a, const Nfa& b, BoolOp op,
                           int state_budget = kDefaultStateBudget) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    if (op == BoolOp::union_op) return nfa_union(a, b);
    Dfa da = determinize(a, state_budget);
    Dfa db = determinize(b, state_budget);
    return to_nfa(detail::product(da, db, op, state_budget));
}

inline Nfa intersect(const Nfa& a, const Nfa& b,
                     int state_budget = kDefaultStateBudget) {
    return boolean_combine(a, b, BoolOp::intersection, state_budget);
}

inline Nfa difference(const Nfa& a, const Nfa& b,
                      int state_budget = kDefaultStateBudget) {
    return boolean_combine(a, b, BoolOp::difference, state_budget);
}

inline Nfa complement(const Nfa& a, int state_budget = kDefaultStateBudget) {
    return difference(sigma_star(a.alphabet()), a, state_budget);
}

// Language equality via emptiness of the symmetric difference.
inline bool equals(const Nfa& a, const Nfa& b,
                   int state_budget = kDefaultStateBudget) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    Dfa da = determinize(a, state_budget);
    Dfa db = determinize(b, state_budget);
    return is_empty(to_nfa(detail::product(da, db, BoolOp::difference,
                                           state_budget))) &&
           is_empty(to_nfa(detail::product(db, da, BoolOp::difference,
                                           state_budget)));
}

inline bool equals(const Dfa& a, const Dfa& b,
                   int state_budget = kDefaultStateBudget) {
    return equals(to_nfa(a), to_nfa(b), state_budget);
}

// All accepted words of length <= n, in radix order.
inline std::vector<Word> enumerate_upto(const Nfa& a, int n,
                                        int state_budget =
                                            kDefaultStateBudget) {
    Dfa d = determinize_minimize(a, state_budget);
    int q = d.alphabet().size();
    // dist[s] = length of a shortest word accepted from s, or -1.
    std::vector<int> dist(static_cast<std::size_t>(d.num_states()), -1);
    {
        std::vector<std::vector<int>> rev(
            static_cast<std::size_t>(d.num_states()));
        std::queue<int> bfs;
        for (int s = 0; s < d.num_states(); ++s) {
            for (int sym = 0; sym < q; ++sym)
                if (d.next(s, sym) != kNoState)
                    rev[static_cast<std::size_t>(d.next(s, sym))].push_back(
                        s);
            if (d.is_final(s)) {
                dist[static_cast<std::size_t>(s)] = 0;
                bfs.push(s);
            }
        }
        while (!bfs.empty()) {
            int s = bfs.front();
            bfs.pop();
            for (int p : rev[static_cast<std::size_t>(s)])
                if (dist[static_cast<std::size_t>(p)] == -1) {
                    dist[static_cast<std::size_t>(p)] =
                        dist[static_cast<std::size_t>(s)] + 1;
                    bfs.push(p);
                }
        }
    }
    // Collect per exact length so the output comes out radix sorted.
    std::vector<Word> all;
    Word prefix;
    auto exact = [&](auto&& self, int s, int remaining) -> void {
        if (remaining == 0) {
            if (d.is_final(s)) all.push_back(prefix);
            return;
        }
        for (int sym = 0; sym < q; ++sym) {
            int t = d.next(s, sym);
            if (t == kNoState) continue;
            int dd = dist[static_cast<std::size_t>(t)];
            if (dd == -1 || dd > remaining - 1) continue;
            prefix.push_back(d.alphabet().symbol(sym));
            self(self, t, remaining - 1);
            prefix.pop_back();
        }
    };
    for (int len = 0; len <= n; ++len)
        exact(exact, d.initial_state(), len);
    return all;
}

// Radix-smallest accepted word, if the language is nonempty.
inline std::optional<Word> radix_smallest(const Nfa& a,
                                          int state_budget =
                                              kDefaultStateBudget) {
    Dfa d = determinize(a, state_budget);
    int q = d.alphabet().size();
    std::vector<int> parent(static_cast<std::size_t>(d.num_states()), -2);
    std::vector<int> via(static_cast<std::size_t>(d.num_states()), -1);
    std::queue<int> bfs;
    parent[static_cast<std::size_t>(d.initial_state())] = -1;
    bfs.push(d.initial_state());
    while (!bfs.empty()) {
        int s = bfs.front();
        bfs.pop();
        if (d.is_final(s)) {
            Word w;
            for (int cur = s; parent[static_cast<std::size_t>(cur)] != -1;
                 cur = parent[static_cast<std::size_t>(cur)])
                w.push_back(
                    d.alphabet().symbol(via[static_cast<std::size_t>(cur)]));
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int sym = 0; sym < q; ++sym) {
            int t = d.next(s, sym);
            if (t == kNoState || parent[static_cast<std::size_t>(t)] != -2)
                continue;
            parent[static_cast<std::size_t>(t)] = s;
            via[static_cast<std::size_t>(t)] = sym;
            bfs.push(t);
        }
    }
    return std::nullopt;
}

}  // namespace maxcode
