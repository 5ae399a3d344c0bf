#include "bifc/functional.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bifc {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::lie_interval: return "lie_interval";
        case Kind::group_multiplicative: return "group_multiplicative";
        case Kind::lie_full: return "lie_full";
        case Kind::group_full: return "group_full";
        case Kind::generic: return "generic";
    }
    return "?";
}

static bool is_group(Kind k) { return k == Kind::group_multiplicative || k == Kind::group_full; }

Functional::Functional(Kind kind, Table table, Rational unit_value)
    : kind_(kind), table_(std::move(table)), unit_(std::move(unit_value)) {
    if (kind_ == Kind::lie_interval || kind_ == Kind::lie_full) unit_ = 0;
    if (is_group(kind_)) unit_ = 1;
    if (kind_ != Kind::generic)
        for (const auto& [w, v] : table_)
            if (!is_complete(w) || w.empty())
                throw std::invalid_argument(kind_name(kind_) +
                                            " tables are keyed by nonempty complete words");
}

Functional Functional::make(Kind kind, Table table, const Alphabet& A, int max_len) {
    if (is_group(kind))
        for (const auto& w : all_words(A, max_len, true))
            if (!w.empty() && !table.count(w))
                throw std::invalid_argument("group functional is missing the value of \"" +
                                            to_string(A, w) + "\"");
    return Functional(kind, std::move(table));
}

Functional Functional::counit() { return Functional(Kind::generic, {}, 1); }

Rational Functional::lookup(const Word& w) const {
    auto it = table_.find(w);
    if (it != table_.end()) return it->second;
    if (is_group(kind_)) throw std::out_of_range("group functional has no value for a word of length " +
                                                 std::to_string(w.size()));
    return 0;
}

Rational Functional::eval(const Word& w) const {
    if (!has_opaque(w)) return unit_;
    switch (kind_) {
        case Kind::generic:
            return lookup(w);
        case Kind::lie_full:
        case Kind::group_full:
            return lookup(is_complete(w) ? w : restrict_word(w, opaque_positions(w)));
        case Kind::lie_interval: {
            if (is_complete(w)) return lookup(w);
            auto J = opaque_intervals(type_of(w));
            if (J.size() != 1) return 0;
            return lookup(restrict_word(w, J[0]));
        }
        case Kind::group_multiplicative: {
            if (is_complete(w)) return lookup(w);
            Rational prod = 1;
            for (const auto& J : opaque_intervals(type_of(w))) {
                prod *= lookup(restrict_word(w, J));
                if (prod == 0) break;
            }
            return prod;
        }
    }
    return 0;
}

Rational star_eval(const Functional& f, const Functional& g, const Word& w) {
    Rational sum = 0;
    for (const auto& c : cuts(w)) {
        Rational a = f.eval(c.left);
        if (a != 0) sum += a * g.eval(c.right);
    }
    return sum;
}

static void check_half(const Functional& f, const Functional& g, const char* op) {
    if (!f.in_lie() && !g.in_lie())
        throw std::invalid_argument(std::string(op) +
                                    " is not defined when both arguments are non-zero on placeholder-only words");
}

Rational prec_eval(const Functional& f, const Functional& g, const Word& w) {
    check_half(f, g, "prec");
    Rational sum = 0;
    for (const auto& c : cuts(w)) {
        if (!c.has_min) continue;
        Rational a = f.eval(c.left);
        if (a != 0) sum += a * g.eval(c.right);
    }
    return sum;
}

Rational succ_eval(const Functional& f, const Functional& g, const Word& w) {
    check_half(f, g, "succ");
    if (!has_opaque(w)) return 0;
    Rational sum = 0;
    for (const auto& c : cuts(w)) {
        if (c.has_min) continue;
        Rational a = f.eval(c.left);
        if (a != 0) sum += a * g.eval(c.right);
    }
    return sum;
}

Rational prelie_eval(const Functional& f, const Functional& g, const Word& w) {
    if (!f.in_lie() || !g.in_lie())
        throw std::invalid_argument("prelie_eval requires functionals vanishing on placeholder-only words");
    return prec_eval(f, g, w) - succ_eval(g, f, w);
}

Rational prelie_interval_formula(const Functional& f, const Functional& g, const Word& w) {
    TranslucentWord t = type_of(w);
    auto J = opaque_intervals(t);
    if (J.size() != 1) return 0;
    std::vector<int> seq = StdOrder(t.alpha).sorted(J[0]);
    int n = static_cast<int>(seq.size());
    Rational sum = 0;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            PosSet outer(seq.begin(), seq.begin() + a), inner(seq.begin() + a, seq.begin() + b);
            outer.insert(outer.end(), seq.begin() + b, seq.end());
            std::sort(outer.begin(), outer.end());
            std::sort(inner.begin(), inner.end());
            sum += f.eval(restrict_word(w, outer)) * g.eval(restrict_word(w, inner));
        }
    return sum;
}

namespace {

void require_kind(const Functional& f, Kind k, const char* op) {
    if (f.kind() != k)
        throw std::invalid_argument(std::string(op) + " expects a " + kind_name(k) + " functional, got " +
                                    kind_name(f.kind()));
}

// Left recursion M(w) = sum_{cuts with min} k(w|I) M(w/I), memoized on
// incomplete words.
class LeftFixedPoint {
public:
    explicit LeftFixedPoint(const Functional& k) : k_(k) {}

    const Rational& operator()(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        Rational v = 0;
        if (!has_opaque(w)) {
            v = 1;
        } else {
            for (const auto& c : cuts(w)) {
                if (!c.has_min) continue;
                Rational a = k_.eval(c.left);
                if (a != 0) v += a * (*this)(c.right);
            }
        }
        return memo_.emplace(w, std::move(v)).first->second;
    }

private:
    const Functional& k_;
    Table memo_;
};

class RightFixedPoint {
public:
    explicit RightFixedPoint(const Functional& b) : b_(b) {}

    const Rational& operator()(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        Rational v = 0;
        if (!has_opaque(w)) {
            v = 1;
        } else {
            for (const auto& c : cuts(w)) {
                if (c.has_min) continue;
                Rational a = b_.eval(c.right);
                if (a != 0) v += (*this)(c.left) * a;
            }
        }
        return memo_.emplace(w, std::move(v)).first->second;
    }

private:
    const Functional& b_;
    Table memo_;
};

// P_n(w) = sum_I P_{n-1}(w|I) d(w/I) on complete words, P_1 = d.
class StarPowers {
public:
    explicit StarPowers(std::function<Rational(const Word&)> d) : d_(std::move(d)) {}

    const Rational& operator()(int n, const Word& w) {
        if (memo_.size() <= static_cast<std::size_t>(n)) memo_.resize(n + 1);
        auto it = memo_[n].find(w);
        if (it != memo_[n].end()) return it->second;
        Rational v = 0;
        if (n == 1) {
            v = d_(w);
        } else if (static_cast<int>(w.size()) >= n) {
            for (const auto& c : cuts(w)) {
                if (c.left.empty() || !has_opaque(c.right)) continue;
                Rational a = d_(c.right);
                if (a != 0) v += (*this)(n - 1, c.left) * a;
            }
        }
        return memo_[n].emplace(w, std::move(v)).first->second;
    }

private:
    std::function<Rational(const Word&)> d_;
    std::vector<Table> memo_;
};

}  // namespace

Functional exp_prec(const Functional& k, const Alphabet& A, int max_len) {
    require_kind(k, Kind::lie_interval, "exp_prec");
    LeftFixedPoint M(k);
    Table out;
    for (const auto& w : all_words(A, max_len, true))
        if (!w.empty()) out.emplace(w, M(w));
    return Functional(Kind::group_multiplicative, std::move(out));
}

Functional exp_full(const Functional& k, const Alphabet& A, int max_len) {
    require_kind(k, Kind::lie_full, "exp_full");
    LeftFixedPoint M(k);
    Table out;
    for (const auto& w : all_words(A, max_len, true))
        if (!w.empty()) out.emplace(w, M(w));
    return Functional(Kind::group_full, std::move(out));
}

Functional exp_succ(const Functional& b, const Alphabet& A, int max_len) {
    require_kind(b, Kind::lie_interval, "exp_succ");
    RightFixedPoint M(b);
    Table out;
    for (const auto& w : all_words(A, max_len, true))
        if (!w.empty()) out.emplace(w, M(w));
    return Functional(Kind::group_multiplicative, std::move(out));
}

Functional exp_star(const Functional& m, const Alphabet& A, int max_len) {
    require_kind(m, Kind::lie_interval, "exp_star");
    StarPowers P([&m](const Word& v) { return m.eval(v); });
    Table out;
    for (const auto& w : all_words(A, max_len, true)) {
        if (w.empty()) continue;
        Rational sum = 0, fact = 1;
        for (int n = 1; n <= static_cast<int>(w.size()); ++n) {
            fact *= n;
            sum += P(n, w) / fact;
        }
        out.emplace(w, sum);
    }
    return Functional(Kind::group_multiplicative, std::move(out));
}

Functional log_star(const Functional& M, const Alphabet& A, int max_len) {
    require_kind(M, Kind::group_multiplicative, "log_star");
    StarPowers P([&M](const Word& v) { return has_opaque(v) ? M.eval(v) : Rational(0); });
    Table out;
    for (const auto& w : all_words(A, max_len, true)) {
        if (w.empty()) continue;
        Rational sum = 0;
        for (int n = 1; n <= static_cast<int>(w.size()); ++n) {
            Rational term = P(n, w) / n;
            sum += n % 2 ? term : Rational(-term);
        }
        out.emplace(w, sum);
    }
    return Functional(Kind::lie_interval, std::move(out));
}

const std::vector<WeightedBlocks>& weighted_class(const TranslucentWord& t, BipartitionClass c) {
    static std::mutex mu;
    static std::map<std::pair<int, TranslucentWord>, std::vector<WeightedBlocks>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(c), t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<WeightedBlocks> list;
    if (c == BipartitionClass::monotone) {
        for (auto& pi : enumerate(t, BipartitionClass::nc)) {
            auto count = count_monotone_labelings(pi);
            if (count == 0) continue;
            Rational fact = 1;
            for (std::size_t k = 2; k <= pi.blocks.size(); ++k) fact *= static_cast<unsigned long>(k);
            list.push_back({std::move(pi.blocks), Rational(static_cast<unsigned long>(count)) / fact});
        }
    } else {
        for (auto& pi : enumerate(t, c)) list.push_back({std::move(pi.blocks), 1});
    }
    return cache.emplace(key, std::move(list)).first->second;
}

Rational oracle_sum(const Functional& k, const Word& w, BipartitionClass c) {
    Rational sum = 0;
    for (const auto& wb : weighted_class(type_of(w), c)) {
        Rational prod = wb.weight;
        for (const auto& V : wb.blocks) {
            prod *= k.eval(restrict_word(w, V));
            if (prod == 0) break;
        }
        sum += prod;
    }
    return sum;
}

Table tabulate(const std::function<Rational(const Word&)>& f, const std::vector<Word>& words) {
    Table out;
    for (const auto& w : words)
        if (has_opaque(w)) out.emplace(w, f(w));
    return out;
}

}  // namespace bifc
