#pragma once

#include "bifc/bipartition.hpp"
#include "bifc/rational.hpp"
#include "bifc/words.hpp"

#include <functional>
#include <string>
#include <unordered_map>

namespace bifc {

enum class Kind { lie_interval, group_multiplicative, lie_full, group_full, generic };

std::string kind_name(Kind k);

using Table = std::unordered_map<Word, Rational, WordHash>;

// A linear form on incomplete words, given by a table and an extension rule.
//   lie_interval          w -> table[w|[w]_1] if [w]_1 is one standard-order interval, else 0
//   group_multiplicative  w -> product of table[w|J] over the opaque intervals J
//   lie_full / group_full w -> table[w|[w]_1], value 0 / 1 on placeholder-only words
//   generic               w -> table[w] (default 0), unit_value on placeholder-only words
// Tables of the first four kinds are keyed by complete words.
class Functional {
public:
    Functional(Kind kind, Table table, Rational unit_value = 0);

    // Group kinds: every nonempty complete word over A up to max_len must
    // have an entry, otherwise std::invalid_argument.
    static Functional make(Kind kind, Table table, const Alphabet& A, int max_len);
    // The counit: 1 on placeholder-only words, 0 elsewhere.
    static Functional counit();

    Kind kind() const { return kind_; }
    const Table& table() const { return table_; }
    const Rational& unit_value() const { return unit_; }
    bool in_lie() const { return unit_ == 0; }

    // Group kinds throw std::out_of_range when a needed entry is missing.
    Rational eval(const Word& w) const;

private:
    Rational lookup(const Word& w) const;

    Kind kind_;
    Table table_;
    Rational unit_;
};

// Sum of f(w|I) g(w/I) over all admissible cuts.
Rational star_eval(const Functional& f, const Functional& g, const Word& w);
// Sums over the cuts whose I contains / omits the standard-order minimum of
// [w]_1. For f, g vanishing on placeholder-only words these are the duals
// of the reduced halves; otherwise they give l < e = l, e > l = l,
// e < l = 0, l > e = 0. Both arguments non-vanishing there is rejected.
Rational prec_eval(const Functional& f, const Functional& g, const Word& w);
Rational succ_eval(const Functional& f, const Functional& g, const Word& w);
// (f < g)(w) - (g > f)(w); both arguments must vanish on placeholders.
Rational prelie_eval(const Functional& f, const Functional& g, const Word& w);
// Interval splitting I1 < J < I2 of the single opaque interval, as the
// closed form of prelie_eval for lie_interval inputs; 0 when [w]_1 is not a
// single interval.
Rational prelie_interval_formula(const Functional& f, const Functional& g, const Word& w);

// Solutions of M = e + k < M, M = e + M > b, the exponential sum of star
// powers with 1/n!, its inverse, and the full version on lie_full inputs.
// Results are tabulated on the complete words over A up to max_len.
Functional exp_prec(const Functional& k, const Alphabet& A, int max_len);
Functional exp_succ(const Functional& b, const Alphabet& A, int max_len);
Functional exp_star(const Functional& m, const Alphabet& A, int max_len);
Functional log_star(const Functional& M, const Alphabet& A, int max_len);
Functional exp_full(const Functional& k, const Alphabet& A, int max_len);

// Brute-force sum over enumerate(type_of(w), c) of weight * prod_V k(w|V),
// with weight 1/|pi|! per labeled monotone bipartition and 1 otherwise.
Rational oracle_sum(const Functional& k, const Word& w, BipartitionClass c);

struct WeightedBlocks {
    std::vector<PosSet> blocks;
    Rational weight;
};

// enumerate(t, c) reduced to block lists with their oracle weights; monotone
// labelings are merged per base partition. Cached per (t, c).
const std::vector<WeightedBlocks>& weighted_class(const TranslucentWord& t, BipartitionClass c);

// Table of f over the given words (placeholder-only words skipped).
Table tabulate(const std::function<Rational(const Word&)>& f, const std::vector<Word>& words);

}  // namespace bifc
