#pragma once

#include "transducer.hpp"

namespace maxcode {

// Constructors for the stock property transducers, parameterized by
// alphabet. All of them emit trim, normalized transducers with a fixed
// state numbering, so files written from them are byte-stable.

// {(x,u) : u is a proper prefix of x}. Input-decreasing.
inline Transducer make_prefix(const Alphabet& alphabet) {
    std::vector<TdTransition> trans;
    for (int a = 0; a < alphabet.size(); ++a) {
        trans.push_back({0, a, a, 0});         // copy a prefix
        trans.push_back({0, a, kEpsilon, 1});  // drop the first extra symbol
        trans.push_back({1, a, kEpsilon, 1});  // drop the rest
    }
    return Transducer(alphabet, 2, std::move(trans), {0}, {1});
}

// {(x,u) : u is a proper suffix of x}. Input-decreasing.
inline Transducer make_suffix(const Alphabet& alphabet) {
    std::vector<TdTransition> trans;
    for (int a = 0; a < alphabet.size(); ++a) {
        trans.push_back({0, a, kEpsilon, 0});  // drop a nonempty prefix
        trans.push_back({0, a, kEpsilon, 1});
        trans.push_back({1, a, a, 1});         // copy the rest
    }
    return Transducer(alphabet, 2, std::move(trans), {0}, {1});
}

// Proper prefixes and proper suffixes; describes bifix codes.
inline Transducer make_bifix(const Alphabet& alphabet) {
    return t_union(make_prefix(alphabet), make_suffix(alphabet));
}

// Between 1 and k positions substituted by a different symbol. Describes
// k-substitution-detecting languages; input-altering but not
// input-decreasing.
inline Transducer make_tsub(int k, const Alphabet& alphabet) {
    if (k < 1) throw error("substitution count must be positive");
    std::vector<TdTransition> trans;
    std::vector<int> final;
    for (int i = 0; i <= k; ++i) {
        for (int a = 0; a < alphabet.size(); ++a) {
            trans.push_back({i, a, a, i});
            if (i < k)
                for (int b = 0; b < alphabet.size(); ++b)
                    if (b != a) trans.push_back({i, a, b, i + 1});
        }
        if (i >= 1) final.push_back(i);
    }
    return Transducer(alphabet, k + 1, std::move(trans), {0},
                      std::move(final));
}

// Input-decreasing variant: the first substitution replaces a symbol by a
// strictly smaller one, each of the up-to-(k-1) later substitutions is
// arbitrary. Over {0,1} with k in {1,2} this is exactly the two-transducer
// pair dsub1/dsub2 (the only decreasing binary substitution is 1 -> 0).
inline Transducer make_dsub(int k, const Alphabet& alphabet) {
    if (k < 1) throw error("substitution count must be positive");
    std::vector<TdTransition> trans;
    std::vector<int> final;
    for (int i = 0; i <= k; ++i) {
        for (int a = 0; a < alphabet.size(); ++a) {
            trans.push_back({i, a, a, i});
            if (i == 0) {
                for (int b = 0; b < a; ++b)
                    trans.push_back({0, a, b, 1});
            } else if (i < k) {
                for (int b = 0; b < alphabet.size(); ++b)
                    if (b != a) trans.push_back({i, a, b, i + 1});
            }
        }
        if (i >= 1) final.push_back(i);
    }
    return Transducer(alphabet, k + 1, std::move(trans), {0},
                      std::move(final));
}

// The 9-state binary transducer describing 2-insertion-deletion-detecting
// languages. State layout: 0,1,2 = 0,0',0''; 3,4,5 = 1,1',1'';
// 6,7 = 2',2''; 8 = 3. Initial {0,0',0''}, final {1,3}.
//
// Branch 0 deletes one or two symbols. Branch 0' starts with a deletion
// of a 1 immediately followed by an inserted 0 (adjacent case) or by a 0
// not changed; the kept-0 case ends with one insertion further right.
// Branch 0'' starts with an insertion of a 0 immediately followed by a
// deleted 1 (adjacent case) or by a 1 not changed; the kept-1 case ends
// with one deletion further right. The leading 1->0 change pins the
// first differing position, so every output is below its input in radix
// order.
inline Transducer make_did2(const Alphabet& alphabet) {
    if (alphabet.size() != 2)
        throw error("2-insertion-deletion transducer is binary only");
    constexpr int s0 = 0, s0p = 1, s0pp = 2, s1 = 3, s1p = 4, s1pp = 5,
                  s2p = 6, s2pp = 7, s3 = 8;
    const int zero = 0, one = 1;
    std::vector<TdTransition> trans;
    auto copy_loop = [&](int s) {
        for (int a = 0; a < 2; ++a) trans.push_back({s, a, a, s});
    };
    copy_loop(s0);
    for (int a = 0; a < 2; ++a) trans.push_back({s0, a, kEpsilon, s1});
    copy_loop(s1);
    for (int a = 0; a < 2; ++a) trans.push_back({s1, a, kEpsilon, s3});

    copy_loop(s0p);
    trans.push_back({s0p, one, kEpsilon, s1p});
    trans.push_back({s1p, kEpsilon, zero, s3});
    trans.push_back({s1p, zero, zero, s2p});
    copy_loop(s2p);
    for (int a = 0; a < 2; ++a) trans.push_back({s2p, kEpsilon, a, s3});

    copy_loop(s0pp);
    trans.push_back({s0pp, kEpsilon, zero, s1pp});
    trans.push_back({s1pp, one, kEpsilon, s3});
    trans.push_back({s1pp, one, one, s2pp});
    copy_loop(s2pp);
    for (int a = 0; a < 2; ++a) trans.push_back({s2pp, a, kEpsilon, s3});

    copy_loop(s3);
    return Transducer(alphabet, 9, std::move(trans), {s0, s0p, s0pp},
                      {s1, s3});
}

// Three-state binary fixture: copies leading 0s, deletes the rest after
// the first 1, then may append 0s. Transitive and smooth but neither
// length-decreasing nor length-increasing; t^2(x) is empty for every x.
inline Transducer make_fig1(const Alphabet& alphabet) {
    if (alphabet.size() != 2)
        throw error("fixture transducer is binary only");
    const int zero = 0, one = 1;
    std::vector<TdTransition> trans;
    trans.push_back({0, zero, zero, 0});
    trans.push_back({0, one, kEpsilon, 1});
    trans.push_back({1, one, kEpsilon, 1});
    trans.push_back({1, zero, zero, 1});
    trans.push_back({1, kEpsilon, zero, 2});
    trans.push_back({2, kEpsilon, zero, 2});
    return Transducer(alphabet, 3, std::move(trans), {0}, {1, 2});
}

}  // namespace maxcode
