#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bifc {

enum class Side : std::uint8_t { L, R };

char side_char(Side s);

// Sorted list of 1-based positions.
using PosSet = std::vector<int>;

// A word over {L,R}. Position i (1-based) is a left or right point of the
// associated ordered biset.
class LRWord {
public:
    LRWord() = default;
    explicit LRWord(std::string letters);
    explicit LRWord(const std::vector<Side>& sides);

    int size() const { return static_cast<int>(s_.size()); }
    bool empty() const { return s_.empty(); }
    Side at(int pos) const;  // 1-based
    const std::string& str() const { return s_; }

    auto operator<=>(const LRWord&) const = default;

private:
    std::string s_;
};

// Subword at the positions of I, in natural order.
LRWord restrict_lr(const LRWord& alpha, const PosSet& I);

// The standard order: left positions ascending, then right positions
// descending.
class StdOrder {
public:
    explicit StdOrder(const LRWord& alpha);

    int size() const { return static_cast<int>(perm_.size()); }
    // Positions listed in increasing standard order.
    const std::vector<int>& perm() const { return perm_; }
    // 0-based slot of a position in perm().
    int rank(int pos) const { return rank_[pos]; }
    bool lt(int i, int j) const { return rank_[i] < rank_[j]; }

    int min_of(const PosSet& S) const;
    int max_of(const PosSet& S) const;
    // True iff S occupies consecutive slots of perm(). The empty set counts.
    bool is_interval(const PosSet& S) const;
    // Positions strictly between lo and hi; an absent bound stands for the
    // virtual -inf / +inf element. Returned in natural order.
    PosSet between(std::optional<int> lo, std::optional<int> hi) const;
    // S sorted by standard order.
    std::vector<int> sorted(const PosSet& S) const;

private:
    std::vector<int> perm_;
    std::vector<int> rank_;  // indexed by position, rank_[0] unused
};

StdOrder standard_order(const LRWord& alpha);

// Throws unless I is strictly increasing with entries in 1..n.
void validate_positions(const PosSet& I, int n);

// Sub-helpers on position sets.
PosSet full_range(int n);
PosSet set_minus(const PosSet& a, const PosSet& b);
bool is_subset(const PosSet& a, const PosSet& b);
// Positions of I mapped to their 1-based index inside the sorted set J.
// Every element of I must belong to J.
PosSet reindex(const PosSet& I, const PosSet& J);

}  // namespace bifc
