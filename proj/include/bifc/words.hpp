#pragma once

#include "bifc/translucent.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bifc {

// var == 0 is the placeholder of the given side; var > 0 indexes an Alphabet.
struct Letter {
    Side side = Side::L;
    int var = 0;

    bool placeholder() const { return var == 0; }
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

// Variable names with their sides. Names are alphanumeric (underscore
// allowed), unique, and never "L" or "R".
class Alphabet {
public:
    int add(const std::string& name, Side side);
    // "a:L,b:R" (whitespace around items ignored)
    static Alphabet parse(const std::string& decl);

    int size() const { return static_cast<int>(names_.size()); }
    bool contains(const std::string& name) const { return ids_.count(name) > 0; }
    int id(const std::string& name) const;
    const std::string& name(int id) const;
    Side side(int id) const;
    Letter letter(int id) const { return {side(id), id}; }
    std::vector<int> ids() const;

private:
    std::vector<std::string> names_;
    std::vector<Side> sides_;
    std::map<std::string, int> ids_;
};

// Space separated names; "L" / "R" denote placeholders.
Word parse_word(const Alphabet& A, const std::string& text);
std::string to_string(const Alphabet& A, const Word& w);

TranslucentWord type_of(const Word& w);
bool is_complete(const Word& w);
bool has_opaque(const Word& w);
Word placeholders(const LRWord& alpha);
PosSet opaque_positions(const Word& w);

Word restrict_word(const Word& w, const PosSet& I);
Word translucidate_word(const Word& w, const PosSet& I);
// w overwrites the placeholders of w2. Requires source(type w) == target(type w2).
Word compose_words(const Word& w, const Word& w2);

// Finite formal sums of N-fold tensors of words with integer multiplicities.
template <std::size_t N>
using Tensor = std::map<std::array<Word, N>, std::int64_t>;
using WordSum = Tensor<2>;

// One admissible cut: I contains [w]_0; left = w|I, right = w/I.
struct Cut {
    PosSet I;
    Word left;
    Word right;
    bool has_min = false;  // I contains the standard-order minimum of [w]_1
};

// All 2^{|[w]_1|} admissible cuts.
std::vector<Cut> cuts(const Word& w);

WordSum coproduct(const Word& w);
// Reduced halves; both require an opaque letter and keep only terms with
// opaque letters on both sides.
WordSum coproduct_left(const Word& w);
WordSum coproduct_right(const Word& w);
WordSum reduced_coproduct(const Word& w);

// The unique v of type t with v^{<i} = w_minus, v(i) = placeholder,
// v^{>i} = w_plus.
Word horizontal_product(const Word& w_minus, const Word& w_plus, const TranslucentWord& t, int i);

// Cutting w at its translucent positions i_1 < ... < i_p (standard order).
// Reassembly: v_1 = factors[0], v_{j+1} = horizontal_product(v_j, factors[j],
// ambients[j-1], split_index[j-1]).
struct OpaqueFactorization {
    std::vector<Word> factors;
    std::vector<TranslucentWord> ambients;
    std::vector<int> split_index;
};

OpaqueFactorization opaque_factorize(const Word& w);
Word reassemble(const OpaqueFactorization& f);

// All words of length 0..max_len, by length then letter order
// (placeholders L, R first unless complete_only, then variables by id).
std::vector<Word> all_words(const Alphabet& A, int max_len, bool complete_only);

// Apply a word -> WordSum map to tensor factor k.
template <std::size_t N, class Op>
Tensor<N + 1> apply_at(const Tensor<N>& x, std::size_t k, Op op) {
    Tensor<N + 1> out;
    for (const auto& [key, mult] : x) {
        for (const auto& [pair, m2] : op(key[k])) {
            std::array<Word, N + 1> nk;
            for (std::size_t j = 0, o = 0; j < N; ++j) {
                if (j == k) {
                    nk[o++] = pair[0];
                    nk[o++] = pair[1];
                } else {
                    nk[o++] = key[j];
                }
            }
            out[nk] += mult * m2;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace bifc
