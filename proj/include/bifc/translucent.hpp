#pragma once

#include "bifc/biset.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace bifc {

// A word over {L,R} with a mask; mask 0 marks a translucent position and
// mask 1 an opaque one. Text form "ALPHA,MASK", e.g. "LLRLRLRR,01100101".
struct TranslucentWord {
    LRWord alpha;
    std::string mask;  // characters '0' / '1'

    TranslucentWord() = default;
    TranslucentWord(LRWord a, std::string m);

    static TranslucentWord parse(const std::string& text);
    static TranslucentWord identity(const LRWord& a);  // all translucent
    static TranslucentWord opaque(const LRWord& a);    // all opaque

    int size() const { return alpha.size(); }
    bool is_opaque(int pos) const { return mask[pos - 1] == '1'; }
    PosSet translucent_set() const;  // [t]_0
    PosSet opaque_set() const;       // [t]_1
    std::string str() const { return alpha.str() + "," + mask; }

    auto operator<=>(const TranslucentWord&) const = default;
};

LRWord source(const TranslucentWord& t);
LRWord target(const TranslucentWord& t);

// s overwrites the translucent positions of t. Requires source(s) == target(t).
TranslucentWord compose(const TranslucentWord& s, const TranslucentWord& t);

TranslucentWord restrict(const TranslucentWord& t, const PosSet& I);
TranslucentWord translucidate(const TranslucentWord& t, const PosSet& I);

// The strictly increasing map from positions of target(t) onto [t]_0.
std::vector<int> iota_map(const TranslucentWord& t);

struct Factorization {
    PosSet J;  // [t]_0 is contained in J
    TranslucentWord r;
    TranslucentWord s;
};

// All (r, s) with compose(r, s) == t, ordered by J lexicographically.
std::vector<Factorization> factorizations(const TranslucentWord& t);

// True iff s is the right factor of some factorization of t, i.e. s has the
// letters of t and only opaque where t is.
bool is_right_factor(const TranslucentWord& s, const TranslucentWord& t);

// (t restricted to positions before i, t restricted to positions after i) in
// the standard order. Requires i in [t]_0.
std::pair<TranslucentWord, TranslucentWord> split(const TranslucentWord& t, int i);

struct Exchange {
    TranslucentWord r;
    TranslucentWord s;
};

// The unique s with s^{<i} = s_minus, s^{>i} = s_plus and s(i) = t(i),
// together with r = restrict(t, [s]_0).
Exchange exchange(const TranslucentWord& s_minus, const TranslucentWord& s_plus,
                  const TranslucentWord& t, int i);

// Maximal contiguous (in standard order) subsets of [t]_1, in standard order.
std::vector<PosSet> opaque_intervals(const TranslucentWord& t);

}  // namespace bifc
