#include "bifc/biset.hpp"

#include <algorithm>
#include <stdexcept>

namespace bifc {

char side_char(Side s) { return s == Side::L ? 'L' : 'R'; }

LRWord::LRWord(std::string letters) : s_(std::move(letters)) {
    for (char c : s_)
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("LR word may only contain 'L' and 'R': \"" + s_ + "\"");
}

LRWord::LRWord(const std::vector<Side>& sides) {
    s_.reserve(sides.size());
    for (Side s : sides) s_.push_back(side_char(s));
}

Side LRWord::at(int pos) const {
    if (pos < 1 || pos > size())
        throw std::out_of_range("position " + std::to_string(pos) + " outside word of length " +
                                std::to_string(size()));
    return s_[pos - 1] == 'L' ? Side::L : Side::R;
}

void validate_positions(const PosSet& I, int n) {
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 1 || I[k] > n)
            throw std::out_of_range("position " + std::to_string(I[k]) + " outside 1.." +
                                    std::to_string(n));
        if (k > 0 && I[k - 1] >= I[k])
            throw std::invalid_argument("position set must be strictly increasing");
    }
}

LRWord restrict_lr(const LRWord& alpha, const PosSet& I) {
    validate_positions(I, alpha.size());
    std::string out;
    out.reserve(I.size());
    for (int p : I) out.push_back(alpha.str()[p - 1]);
    return LRWord(std::move(out));
}

StdOrder::StdOrder(const LRWord& alpha) : rank_(alpha.size() + 1, -1) {
    int n = alpha.size();
    perm_.reserve(n);
    for (int p = 1; p <= n; ++p)
        if (alpha.str()[p - 1] == 'L') perm_.push_back(p);
    for (int p = n; p >= 1; --p)
        if (alpha.str()[p - 1] == 'R') perm_.push_back(p);
    for (int k = 0; k < n; ++k) rank_[perm_[k]] = k;
}

int StdOrder::min_of(const PosSet& S) const {
    if (S.empty()) throw std::invalid_argument("min_of: empty set");
    return *std::min_element(S.begin(), S.end(), [&](int a, int b) { return lt(a, b); });
}

int StdOrder::max_of(const PosSet& S) const {
    if (S.empty()) throw std::invalid_argument("max_of: empty set");
    return *std::max_element(S.begin(), S.end(), [&](int a, int b) { return lt(a, b); });
}

bool StdOrder::is_interval(const PosSet& S) const {
    if (S.empty()) return true;
    int lo = size(), hi = -1;
    for (int p : S) {
        lo = std::min(lo, rank(p));
        hi = std::max(hi, rank(p));
    }
    return hi - lo + 1 == static_cast<int>(S.size());
}

PosSet StdOrder::between(std::optional<int> lo, std::optional<int> hi) const {
    int a = lo ? rank(*lo) : -1;
    int b = hi ? rank(*hi) : size();
    PosSet out;
    for (int k = a + 1; k < b; ++k) out.push_back(perm_[k]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> StdOrder::sorted(const PosSet& S) const {
    std::vector<int> out(S);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return lt(a, b); });
    return out;
}

StdOrder standard_order(const LRWord& alpha) { return StdOrder(alpha); }

PosSet full_range(int n) {
    PosSet out(n);
    for (int i = 0; i < n; ++i) out[i] = i + 1;
    return out;
}

PosSet set_minus(const PosSet& a, const PosSet& b) {
    PosSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const PosSet& a, const PosSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PosSet reindex(const PosSet& I, const PosSet& J) {
    PosSet out;
    out.reserve(I.size());
    for (int p : I) {
        auto it = std::lower_bound(J.begin(), J.end(), p);
        if (it == J.end() || *it != p)
            throw std::invalid_argument("reindex: position " + std::to_string(p) + " not in set");
        out.push_back(static_cast<int>(it - J.begin()) + 1);
    }
    return out;
}

}  // namespace bifc
