#pragma once

#include <optional>
#include <utility>

#include "order.hpp"
#include "transducer.hpp"

namespace maxcode {

// An input-altering transducer t together with the universe language M
// relative to which independence and maximality are judged. M defaults to
// the full Σ*.
class PropertyInstance {
  public:
    PropertyInstance(const Transducer& t, Dfa universe,
                     int state_budget = kDefaultStateBudget)
        : transducer_(trim(t)),
          inverse_(trim(invert(t))),
          universe_(std::move(universe)),
          state_budget_(state_budget) {
        check_same_alphabet(transducer_.alphabet(), universe_.alphabet());
    }

    PropertyInstance(const Transducer& t, const Nfa& universe,
                     int state_budget = kDefaultStateBudget)
        : PropertyInstance(t, determinize_minimize(universe, state_budget),
                           state_budget) {}

    explicit PropertyInstance(const Transducer& t,
                              int state_budget = kDefaultStateBudget)
        : PropertyInstance(t, sigma_star(t.alphabet()), state_budget) {}

    const Transducer& transducer() const { return transducer_; }
    const Transducer& inverse() const { return inverse_; }
    const Dfa& universe() const { return universe_; }
    const Alphabet& alphabet() const { return transducer_.alphabet(); }
    int state_budget() const { return state_budget_; }

  private:
    Transducer transducer_;
    Transducer inverse_;  // t^{-1}, kept alongside t
    Dfa universe_;
    int state_budget_;
};

// ind(X) = M \ (t(X) ∪ t^{-1}(X)): every universe word that is in X or
// independent from X.
inline Dfa ind(const PropertyInstance& p, const Nfa& x) {
    check_same_alphabet(p.alphabet(), x.alphabet());
    Nfa reached = nfa_union(apply_lang(p.transducer(), x),
                            apply_lang(p.inverse(), x));
    return determinize_minimize(
        difference(to_nfa(p.universe()), reached, p.state_budget()),
        p.state_budget());
}

// The max-min operator: mu(X) = ind(X) \ t^{-1}(ind(X)), i.e. the ind
// words that cannot produce another ind word via t.
inline Dfa mu(const PropertyInstance& p, const Nfa& x) {
    Dfa indx = ind(p, x);
    Nfa producers = apply_lang(p.inverse(), to_nfa(indx));
    return determinize_minimize(
        difference(to_nfa(indx), producers, p.state_budget()),
        p.state_budget());
}

// sigma_{X,t} = t^{-1} restricted to outputs in ind(X). Exposed for tests.
inline Transducer sigma(const PropertyInstance& p, const Nfa& x) {
    return restrict(p.inverse(), to_nfa(ind(p, x)), Side::output);
}

// L satisfies the property iff t(L) ∩ L = ∅.
inline bool is_independent(const PropertyInstance& p, const Nfa& lang) {
    check_same_alphabet(p.alphabet(), lang.alphabet());
    return is_empty(intersect(apply_lang(p.transducer(), lang), lang,
                              p.state_budget()));
}

struct MaximalityResult {
    bool maximal;
    std::optional<Word> witness;  // radix-smallest word addable to L
};

// L (which must satisfy the property) is maximal within M iff
// M \ (L ∪ t(L) ∪ t^{-1}(L)) is empty; otherwise the radix-smallest
// member of that difference can be added to L without breaking
// independence.
inline MaximalityResult is_maximal(const PropertyInstance& p,
                                   const Nfa& lang) {
    check_same_alphabet(p.alphabet(), lang.alphabet());
    if (!is_independent(p, lang))
        throw error("maximality is only defined for independent languages");
    Nfa covered = nfa_union(lang, nfa_union(apply_lang(p.transducer(), lang),
                                            apply_lang(p.inverse(), lang)));
    Nfa rest = difference(to_nfa(p.universe()), covered, p.state_budget());
    if (auto w = radix_smallest(rest, p.state_budget()))
        return {false, std::move(w)};
    return {true, std::nullopt};
}

// L \ t^{-1}(L): always independent; the paper's extract-then-embed
// preprocessing for seeds that do not satisfy the property yet.
inline Dfa extract_independent(const PropertyInstance& p, const Nfa& lang) {
    check_same_alphabet(p.alphabet(), lang.alphabet());
    return determinize_minimize(
        difference(lang, apply_lang(p.inverse(), lang), p.state_budget()),
        p.state_budget());
}

// The trace of iterating mu from a seed.
struct EmbedTrace {
    enum class Status { converged, cap_reached };

    std::vector<Dfa> iterates;  // mu^0 L, mu^1 L, ...
    std::vector<Dfa> diffs;     // diffs[i] = iterates[i+1] \ iterates[i]
    Status status;
    int converged_at = -1;  // i with iterates[i] == iterates[i+1]
    int cap = 0;
    // The embedding guarantees (increasing chain, final maximality) hold
    // only when the seed satisfies the property; callers may still iterate
    // an arbitrary seed and get the raw operator behaviour.
    bool seed_independent = true;

    const Dfa& final_language() const { return iterates.back(); }
};

// Iterates mu until two consecutive iterates are equal or `cap` steps were
// taken. Every iterate is minimized before the equality test, so
// convergence detection is exact.
inline EmbedTrace mu_iterate(const PropertyInstance& p, const Nfa& seed,
                             int cap = 64) {
    check_same_alphabet(p.alphabet(), seed.alphabet());
    if (cap < 1) throw error("iteration cap must be positive");
    if (!is_empty(difference(seed, to_nfa(p.universe()), p.state_budget())))
        throw error("seed language is not a subset of the universe");
    EmbedTrace trace;
    trace.cap = cap;
    trace.seed_independent = is_independent(p, seed);
    trace.iterates.push_back(determinize_minimize(seed, p.state_budget()));
    trace.status = EmbedTrace::Status::cap_reached;
    for (int step = 1; step <= cap; ++step) {
        const Dfa& cur = trace.iterates.back();
        Dfa next = mu(p, to_nfa(cur));
        trace.diffs.push_back(determinize_minimize(
            difference(to_nfa(next), to_nfa(cur), p.state_budget()),
            p.state_budget()));
        bool fixed = equals(next, cur, p.state_budget());
        trace.iterates.push_back(std::move(next));
        if (fixed) {
            trace.status = EmbedTrace::Status::converged;
            trace.converged_at = step - 1;
            break;
        }
    }
    return trace;
}

}  // namespace maxcode
