#include "bifc/translucent.hpp"

#include <algorithm>
#include <stdexcept>

namespace bifc {

TranslucentWord::TranslucentWord(LRWord a, std::string m) : alpha(std::move(a)), mask(std::move(m)) {
    if (static_cast<int>(mask.size()) != alpha.size())
        throw std::invalid_argument("mask length " + std::to_string(mask.size()) +
                                    " differs from word length " + std::to_string(alpha.size()));
    for (char c : mask)
        if (c != '0' && c != '1') throw std::invalid_argument("mask may only contain '0' and '1'");
}

TranslucentWord TranslucentWord::parse(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("translucent word must read ALPHA,MASK: \"" + text + "\"");
    return TranslucentWord(LRWord(text.substr(0, comma)), text.substr(comma + 1));
}

TranslucentWord TranslucentWord::identity(const LRWord& a) {
    return TranslucentWord(a, std::string(a.size(), '0'));
}

TranslucentWord TranslucentWord::opaque(const LRWord& a) {
    return TranslucentWord(a, std::string(a.size(), '1'));
}

PosSet TranslucentWord::translucent_set() const {
    PosSet out;
    for (int p = 1; p <= size(); ++p)
        if (!is_opaque(p)) out.push_back(p);
    return out;
}

PosSet TranslucentWord::opaque_set() const {
    PosSet out;
    for (int p = 1; p <= size(); ++p)
        if (is_opaque(p)) out.push_back(p);
    return out;
}

LRWord source(const TranslucentWord& t) { return t.alpha; }

LRWord target(const TranslucentWord& t) { return restrict_lr(t.alpha, t.translucent_set()); }

TranslucentWord compose(const TranslucentWord& s, const TranslucentWord& t) {
    if (source(s) != target(t))
        throw std::invalid_argument("cannot compose " + s.str() + " after " + t.str() +
                                    ": source/target mismatch");
    std::string mask = t.mask;
    int k = 0;
    for (int p = 1; p <= t.size(); ++p)
        if (!t.is_opaque(p)) mask[p - 1] = s.mask[k++];
    return TranslucentWord(t.alpha, std::move(mask));
}

TranslucentWord restrict(const TranslucentWord& t, const PosSet& I) {
    validate_positions(I, t.size());
    std::string mask;
    for (int p : I) mask.push_back(t.mask[p - 1]);
    return TranslucentWord(restrict_lr(t.alpha, I), std::move(mask));
}

TranslucentWord translucidate(const TranslucentWord& t, const PosSet& I) {
    validate_positions(I, t.size());
    std::string mask = t.mask;
    for (int p : I) mask[p - 1] = '0';
    return TranslucentWord(t.alpha, std::move(mask));
}

std::vector<int> iota_map(const TranslucentWord& t) { return t.translucent_set(); }

std::vector<Factorization> factorizations(const TranslucentWord& t) {
    PosSet zero = t.translucent_set();
    PosSet one = t.opaque_set();
    std::vector<Factorization> out;
    out.reserve(std::size_t{1} << one.size());
    for (unsigned bits = 0; bits < (1u << one.size()); ++bits) {
        PosSet J = zero;
        for (std::size_t k = 0; k < one.size(); ++k)
            if (bits >> k & 1u) J.push_back(one[k]);
        std::sort(J.begin(), J.end());
        out.push_back({J, restrict(t, J), translucidate(t, J)});
    }
    std::sort(out.begin(), out.end(),
              [](const Factorization& a, const Factorization& b) { return a.J < b.J; });
    return out;
}

bool is_right_factor(const TranslucentWord& s, const TranslucentWord& t) {
    if (s.alpha != t.alpha) return false;
    for (int p = 1; p <= t.size(); ++p)
        if (s.is_opaque(p) && !t.is_opaque(p)) return false;
    return true;
}

std::pair<TranslucentWord, TranslucentWord> split(const TranslucentWord& t, int i) {
    if (i < 1 || i > t.size()) throw std::out_of_range("split position out of range");
    if (t.is_opaque(i))
        throw std::invalid_argument("split position " + std::to_string(i) + " of " + t.str() +
                                    " is not translucent");
    StdOrder ord(t.alpha);
    return {restrict(t, ord.between(std::nullopt, i)), restrict(t, ord.between(i, std::nullopt))};
}

Exchange exchange(const TranslucentWord& s_minus, const TranslucentWord& s_plus,
                  const TranslucentWord& t, int i) {
    auto [lo, hi] = split(t, i);
    if (!is_right_factor(s_minus, lo))
        throw std::invalid_argument("exchange: " + s_minus.str() + " is not a right factor of " +
                                    lo.str());
    if (!is_right_factor(s_plus, hi))
        throw std::invalid_argument("exchange: " + s_plus.str() + " is not a right factor of " +
                                    hi.str());
    StdOrder ord(t.alpha);
    std::string mask(t.size(), '0');
    PosSet before = ord.between(std::nullopt, i);
    PosSet after = ord.between(i, std::nullopt);
    for (std::size_t k = 0; k < before.size(); ++k) mask[before[k] - 1] = s_minus.mask[k];
    for (std::size_t k = 0; k < after.size(); ++k) mask[after[k] - 1] = s_plus.mask[k];
    mask[i - 1] = t.mask[i - 1];
    TranslucentWord s(t.alpha, std::move(mask));
    TranslucentWord r = restrict(t, s.translucent_set());
    return {std::move(r), std::move(s)};
}

std::vector<PosSet> opaque_intervals(const TranslucentWord& t) {
    StdOrder ord(t.alpha);
    std::vector<PosSet> out;
    PosSet run;
    for (int p : ord.perm()) {
        if (t.is_opaque(p)) {
            run.push_back(p);
        } else if (!run.empty()) {
            std::sort(run.begin(), run.end());
            out.push_back(std::move(run));
            run.clear();
        }
    }
    if (!run.empty()) {
        std::sort(run.begin(), run.end());
        out.push_back(std::move(run));
    }
    return out;
}

}  // namespace bifc
