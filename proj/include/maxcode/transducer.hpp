#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "dfa.hpp"
#include "nfa.hpp"

namespace maxcode {

struct TdTransition {
    int from;
    int in;   // kEpsilon or symbol index
    int out;  // kEpsilon or symbol index
    int to;

    friend auto operator<=>(const TdTransition&, const TdTransition&) = default;
};

// Normalized finite transducer over a single alphabet: every transition
// carries one input symbol or epsilon and one output symbol or epsilon.
// The relation realized is the set of accepting-path labels. Immutable.
class Transducer {
  public:
    Transducer(Alphabet alphabet, int num_states,
               std::vector<TdTransition> trans, std::vector<int> initial,
               std::vector<int> final)
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          transitions_(std::move(trans)),
          initial_(std::move(initial)),
          final_(std::move(final)) {
        if (num_states_ < 0) throw error("negative state count");
        auto check_state = [&](int s) {
            if (s < 0 || s >= num_states_)
                throw error("state id out of range");
        };
        auto check_label = [&](int l) {
            if (l != kEpsilon && (l < 0 || l >= alphabet_.size()))
                throw error("transducer label out of range");
        };
        for (const auto& t : transitions_) {
            check_state(t.from);
            check_state(t.to);
            check_label(t.in);
            check_label(t.out);
        }
        for (int s : initial_) check_state(s);
        for (int s : final_) check_state(s);
        std::sort(initial_.begin(), initial_.end());
        initial_.erase(std::unique(initial_.begin(), initial_.end()),
                       initial_.end());
        std::sort(final_.begin(), final_.end());
        final_.erase(std::unique(final_.begin(), final_.end()), final_.end());
        std::sort(transitions_.begin(), transitions_.end());
        transitions_.erase(
            std::unique(transitions_.begin(), transitions_.end()),
            transitions_.end());
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    const std::vector<TdTransition>& transitions() const {
        return transitions_;
    }
    const std::vector<int>& initial_states() const { return initial_; }
    const std::vector<int>& final_states() const { return final_; }
    bool is_final(int s) const {
        return std::binary_search(final_.begin(), final_.end(), s);
    }

    std::vector<std::vector<TdTransition>> adjacency() const {
        std::vector<std::vector<TdTransition>> out(
            static_cast<std::size_t>(num_states_));
        for (const auto& t : transitions_)
            out[static_cast<std::size_t>(t.from)].push_back(t);
        return out;
    }

  private:
    Alphabet alphabet_;
    int num_states_;
    std::vector<TdTransition> transitions_;
    std::vector<int> initial_;
    std::vector<int> final_;
};

// Keeps exactly the states on some initial-to-final path, renumbered in
// ascending original order so the result is deterministic.
inline Transducer trim(const Transducer& t) {
    int n = t.num_states();
    std::vector<bool> fwd(static_cast<std::size_t>(n), false);
    std::vector<bool> bwd(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
    for (const auto& tr : t.transitions()) {
        succ[static_cast<std::size_t>(tr.from)].push_back(tr.to);
        pred[static_cast<std::size_t>(tr.to)].push_back(tr.from);
    }
    std::vector<int> stack;
    for (int s : t.initial_states()) {
        fwd[static_cast<std::size_t>(s)] = true;
        stack.push_back(s);
    }
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int to : succ[static_cast<std::size_t>(s)])
            if (!fwd[static_cast<std::size_t>(to)]) {
                fwd[static_cast<std::size_t>(to)] = true;
                stack.push_back(to);
            }
    }
    for (int s : t.final_states()) {
        bwd[static_cast<std::size_t>(s)] = true;
        stack.push_back(s);
    }
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int from : pred[static_cast<std::size_t>(s)])
            if (!bwd[static_cast<std::size_t>(from)]) {
                bwd[static_cast<std::size_t>(from)] = true;
                stack.push_back(from);
            }
    }
    std::vector<int> renumber(static_cast<std::size_t>(n), -1);
    int kept = 0;
    for (int s = 0; s < n; ++s)
        if (fwd[static_cast<std::size_t>(s)] &&
            bwd[static_cast<std::size_t>(s)])
            renumber[static_cast<std::size_t>(s)] = kept++;
    std::vector<TdTransition> trans;
    for (const auto& tr : t.transitions()) {
        int f = renumber[static_cast<std::size_t>(tr.from)];
        int to = renumber[static_cast<std::size_t>(tr.to)];
        if (f != -1 && to != -1) trans.push_back({f, tr.in, tr.out, to});
    }
    std::vector<int> initial, final;
    for (int s : t.initial_states())
        if (renumber[static_cast<std::size_t>(s)] != -1)
            initial.push_back(renumber[static_cast<std::size_t>(s)]);
    for (int s : t.final_states())
        if (renumber[static_cast<std::size_t>(s)] != -1)
            final.push_back(renumber[static_cast<std::size_t>(s)]);
    return Transducer(t.alphabet(), kept, std::move(trans),
                      std::move(initial), std::move(final));
}

// rel(result) = rel(t)^{-1}.
inline Transducer invert(const Transducer& t) {
    std::vector<TdTransition> trans;
    trans.reserve(t.transitions().size());
    for (const auto& tr : t.transitions())
        trans.push_back({tr.from, tr.out, tr.in, tr.to});
    return Transducer(t.alphabet(), t.num_states(), std::move(trans),
                      t.initial_states(), t.final_states());
}

// rel(result) = rel(t) ∪ rel(s).
inline Transducer t_union(const Transducer& t, const Transducer& s) {
    check_same_alphabet(t.alphabet(), s.alphabet());
    int off = t.num_states();
    std::vector<TdTransition> trans = t.transitions();
    for (const auto& tr : s.transitions())
        trans.push_back({tr.from + off, tr.in, tr.out, tr.to + off});
    std::vector<int> initial = t.initial_states();
    for (int st : s.initial_states()) initial.push_back(st + off);
    std::vector<int> final = t.final_states();
    for (int st : s.final_states()) final.push_back(st + off);
    return Transducer(t.alphabet(), t.num_states() + s.num_states(),
                      std::move(trans), std::move(initial), std::move(final));
}

// rel(result) = {(x,z) : exists y with (x,y) in rel(t), (y,z) in rel(s)},
// so result(x) = s(t(x)). Epsilon moves are synchronized: a transition of
// t with epsilon output advances t alone, one of s with epsilon input
// advances s alone, and matching middle symbols advance both.
inline Transducer compose(const Transducer& t, const Transducer& s) {
    check_same_alphabet(t.alphabet(), s.alphabet());
    auto adj_t = t.adjacency();
    auto adj_s = s.adjacency();
    int ns = s.num_states();
    auto id = [&](int p, int q) { return p * ns + q; };
    std::vector<TdTransition> trans;
    for (int p = 0; p < t.num_states(); ++p) {
        for (int q = 0; q < ns; ++q) {
            for (const auto& a : adj_t[static_cast<std::size_t>(p)]) {
                if (a.out == kEpsilon) {
                    trans.push_back({id(p, q), a.in, kEpsilon, id(a.to, q)});
                } else {
                    for (const auto& b : adj_s[static_cast<std::size_t>(q)])
                        if (b.in == a.out)
                            trans.push_back(
                                {id(p, q), a.in, b.out, id(a.to, b.to)});
                }
            }
            for (const auto& b : adj_s[static_cast<std::size_t>(q)])
                if (b.in == kEpsilon)
                    trans.push_back({id(p, q), kEpsilon, b.out, id(p, b.to)});
        }
    }
    std::vector<int> initial, final;
    for (int p : t.initial_states())
        for (int q : s.initial_states()) initial.push_back(id(p, q));
    for (int p : t.final_states())
        for (int q : s.final_states()) final.push_back(id(p, q));
    return trim(Transducer(t.alphabet(), t.num_states() * ns,
                           std::move(trans), std::move(initial),
                           std::move(final)));
}

// i-fold self-composition, i >= 1.
inline Transducer power(const Transducer& t, int i) {
    if (i < 1) throw error("power requires a positive exponent");
    Transducer result = trim(t);
    for (int k = 1; k < i; ++k) result = compose(result, t);
    return result;
}

// Nfa accepting t(w); may denote an infinite language.
inline Nfa apply_word(const Transducer& t, const Word& w) {
    t.alphabet().check_word(w);
    int len = static_cast<int>(w.size());
    std::vector<int> wsym(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        wsym[static_cast<std::size_t>(i)] =
            t.alphabet().index_of(w[static_cast<std::size_t>(i)]);
    int cols = len + 1;
    auto id = [&](int p, int j) { return p * cols + j; };
    std::vector<NfaTransition> trans;
    for (const auto& tr : t.transitions()) {
        if (tr.in == kEpsilon) {
            for (int j = 0; j <= len; ++j)
                trans.push_back({id(tr.from, j), tr.out, id(tr.to, j)});
        } else {
            for (int j = 0; j < len; ++j)
                if (wsym[static_cast<std::size_t>(j)] == tr.in)
                    trans.push_back(
                        {id(tr.from, j), tr.out, id(tr.to, j + 1)});
        }
    }
    std::vector<int> initial, final;
    for (int p : t.initial_states()) initial.push_back(id(p, 0));
    for (int p : t.final_states()) final.push_back(id(p, len));
    return Nfa(t.alphabet(), t.num_states() * cols, std::move(trans),
               std::move(initial), final);
}

// Nfa accepting t(L(x)) = union of t(x) over accepted x.
inline Nfa apply_lang(const Transducer& t, const Nfa& x) {
    check_same_alphabet(t.alphabet(), x.alphabet());
    auto adj_x = x.adjacency();
    int nx = x.num_states();
    auto id = [&](int p, int s) { return p * nx + s; };
    std::vector<NfaTransition> trans;
    for (int p = 0; p < t.num_states(); ++p)
        for (int s = 0; s < nx; ++s)
            for (const auto& e : adj_x[static_cast<std::size_t>(s)])
                if (e.label == kEpsilon)
                    trans.push_back({id(p, s), kEpsilon, id(p, e.to)});
    for (const auto& tr : t.transitions()) {
        if (tr.in == kEpsilon) {
            for (int s = 0; s < nx; ++s)
                trans.push_back({id(tr.from, s), tr.out, id(tr.to, s)});
        } else {
            for (int s = 0; s < nx; ++s)
                for (const auto& e : adj_x[static_cast<std::size_t>(s)])
                    if (e.label == tr.in)
                        trans.push_back(
                            {id(tr.from, s), tr.out, id(tr.to, e.to)});
        }
    }
    std::vector<int> initial, final;
    for (int p : t.initial_states())
        for (int s : x.initial_states()) initial.push_back(id(p, s));
    for (int p : t.final_states())
        for (int s = 0; s < nx; ++s)
            if (x.is_final(s)) final.push_back(id(p, s));
    if (t.num_states() == 0 || nx == 0)
        return from_words({}, t.alphabet());
    return Nfa(t.alphabet(), t.num_states() * nx, std::move(trans),
               std::move(initial), final);
}

enum class Side { input, output };

// rel(result) = rel(t) ∩ (L × Σ*) for side=input,
//               rel(t) ∩ (Σ* × L) for side=output.
inline Transducer restrict(const Transducer& t, const Nfa& lang, Side side) {
    check_same_alphabet(t.alphabet(), lang.alphabet());
    auto adj_l = lang.adjacency();
    int nl = lang.num_states();
    if (t.num_states() == 0 || nl == 0)
        return Transducer(t.alphabet(), 0, {}, {}, {});
    auto id = [&](int p, int s) { return p * nl + s; };
    auto tracked = [&](const TdTransition& tr) {
        return side == Side::input ? tr.in : tr.out;
    };
    std::vector<TdTransition> trans;
    for (int p = 0; p < t.num_states(); ++p)
        for (int s = 0; s < nl; ++s)
            for (const auto& e : adj_l[static_cast<std::size_t>(s)])
                if (e.label == kEpsilon)
                    trans.push_back(
                        {id(p, s), kEpsilon, kEpsilon, id(p, e.to)});
    for (const auto& tr : t.transitions()) {
        int watched = tracked(tr);
        if (watched == kEpsilon) {
            for (int s = 0; s < nl; ++s)
                trans.push_back({id(tr.from, s), tr.in, tr.out, id(tr.to, s)});
        } else {
            for (int s = 0; s < nl; ++s)
                for (const auto& e : adj_l[static_cast<std::size_t>(s)])
                    if (e.label == watched)
                        trans.push_back(
                            {id(tr.from, s), tr.in, tr.out, id(tr.to, e.to)});
        }
    }
    std::vector<int> initial, final;
    for (int p : t.initial_states())
        for (int s : lang.initial_states()) initial.push_back(id(p, s));
    for (int p : t.final_states())
        for (int s = 0; s < nl; ++s)
            if (lang.is_final(s)) final.push_back(id(p, s));
    return trim(Transducer(t.alphabet(), t.num_states() * nl,
                           std::move(trans), std::move(initial),
                           std::move(final)));
}

}  // namespace maxcode
