#include "bifc/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bifc {

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : w) {
        h ^= static_cast<std::size_t>(l.var) * 2 + (l.side == Side::R ? 1 : 0);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty() || s == "L" || s == "R") return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

int Alphabet::add(const std::string& name, Side side) {
    if (!valid_name(name)) throw std::invalid_argument("invalid variable name \"" + name + "\"");
    if (ids_.count(name)) throw std::invalid_argument("duplicate variable name \"" + name + "\"");
    names_.push_back(name);
    sides_.push_back(side);
    int id = static_cast<int>(names_.size());
    ids_[name] = id;
    return id;
}

Alphabet Alphabet::parse(const std::string& decl) {
    Alphabet A;
    std::stringstream ss(decl);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("alphabet item must read name:L or name:R, got \"" + item + "\"");
        std::string name = trim(item.substr(0, colon));
        std::string side = trim(item.substr(colon + 1));
        if (side != "L" && side != "R")
            throw std::invalid_argument("variable side must be L or R, got \"" + side + "\"");
        A.add(name, side == "L" ? Side::L : Side::R);
    }
    return A;
}

int Alphabet::id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw std::invalid_argument("unknown variable \"" + name + "\"");
    return it->second;
}

const std::string& Alphabet::name(int id) const {
    if (id < 1 || id > size()) throw std::out_of_range("variable id " + std::to_string(id));
    return names_[id - 1];
}

Side Alphabet::side(int id) const {
    if (id < 1 || id > size()) throw std::out_of_range("variable id " + std::to_string(id));
    return sides_[id - 1];
}

std::vector<int> Alphabet::ids() const {
    std::vector<int> out(size());
    for (int k = 0; k < size(); ++k) out[k] = k + 1;
    return out;
}

Word parse_word(const Alphabet& A, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "L")
            w.push_back({Side::L, 0});
        else if (tok == "R")
            w.push_back({Side::R, 0});
        else
            w.push_back(A.letter(A.id(tok)));
    }
    return w;
}

std::string to_string(const Alphabet& A, const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += w[k].placeholder() ? std::string(1, side_char(w[k].side)) : A.name(w[k].var);
    }
    return out;
}

TranslucentWord type_of(const Word& w) {
    std::string alpha, mask;
    for (const Letter& l : w) {
        alpha.push_back(side_char(l.side));
        mask.push_back(l.placeholder() ? '0' : '1');
    }
    return TranslucentWord(LRWord(alpha), mask);
}

bool is_complete(const Word& w) {
    return std::none_of(w.begin(), w.end(), [](const Letter& l) { return l.placeholder(); });
}

bool has_opaque(const Word& w) {
    return std::any_of(w.begin(), w.end(), [](const Letter& l) { return !l.placeholder(); });
}

Word placeholders(const LRWord& alpha) {
    Word w;
    for (int p = 1; p <= alpha.size(); ++p) w.push_back({alpha.at(p), 0});
    return w;
}

PosSet opaque_positions(const Word& w) {
    PosSet out;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (!w[k].placeholder()) out.push_back(static_cast<int>(k) + 1);
    return out;
}

Word restrict_word(const Word& w, const PosSet& I) {
    validate_positions(I, static_cast<int>(w.size()));
    Word out;
    out.reserve(I.size());
    for (int p : I) out.push_back(w[p - 1]);
    return out;
}

Word translucidate_word(const Word& w, const PosSet& I) {
    validate_positions(I, static_cast<int>(w.size()));
    Word out = w;
    for (int p : I) out[p - 1].var = 0;
    return out;
}

Word compose_words(const Word& w, const Word& w2) {
    // validates source/target compatibility
    compose(type_of(w), type_of(w2));
    Word out = w2;
    std::size_t k = 0;
    for (auto& l : out)
        if (l.placeholder()) l = w[k++];
    return out;
}

std::vector<Cut> cuts(const Word& w) {
    PosSet opaque = opaque_positions(w);
    std::vector<Cut> out;
    int n = static_cast<int>(w.size());
    int m = static_cast<int>(opaque.size());
    int min_slot = -1;
    if (m > 0) {
        StdOrder ord(type_of(w).alpha);
        int mn = ord.min_of(opaque);
        min_slot = static_cast<int>(std::find(opaque.begin(), opaque.end(), mn) - opaque.begin());
    }
    out.reserve(std::size_t{1} << m);
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
        std::vector<char> in(n + 1, 0);
        for (int p = 1; p <= n; ++p)
            if (w[p - 1].placeholder()) in[p] = 1;
        for (int k = 0; k < m; ++k)
            if (bits >> k & 1u) in[opaque[k]] = 1;
        Cut c;
        for (int p = 1; p <= n; ++p)
            if (in[p]) c.I.push_back(p);
        c.left = restrict_word(w, c.I);
        c.right = translucidate_word(w, c.I);
        c.has_min = min_slot >= 0 && (bits >> min_slot & 1u);
        out.push_back(std::move(c));
    }
    return out;
}

WordSum coproduct(const Word& w) {
    WordSum out;
    for (auto& c : cuts(w)) out[{c.left, c.right}] += 1;
    return out;
}

namespace {

void require_opaque(const Word& w, const char* what) {
    if (!has_opaque(w)) throw std::invalid_argument(std::string(what) + " needs a word with an opaque letter");
}

}  // namespace

WordSum coproduct_left(const Word& w) {
    require_opaque(w, "coproduct_left");
    WordSum out;
    for (auto& c : cuts(w))
        if (c.has_min && has_opaque(c.right)) out[{c.left, c.right}] += 1;
    return out;
}

WordSum coproduct_right(const Word& w) {
    require_opaque(w, "coproduct_right");
    WordSum out;
    for (auto& c : cuts(w))
        if (!c.has_min && has_opaque(c.left)) out[{c.left, c.right}] += 1;
    return out;
}

WordSum reduced_coproduct(const Word& w) {
    require_opaque(w, "reduced_coproduct");
    WordSum out;
    for (auto& c : cuts(w))
        if (has_opaque(c.left) && has_opaque(c.right)) out[{c.left, c.right}] += 1;
    return out;
}

Word horizontal_product(const Word& w_minus, const Word& w_plus, const TranslucentWord& t, int i) {
    auto [lo, hi] = split(t, i);
    if (type_of(w_minus) != lo)
        throw std::invalid_argument("horizontal_product: left word has type " + type_of(w_minus).str() +
                                    ", expected " + lo.str());
    if (type_of(w_plus) != hi)
        throw std::invalid_argument("horizontal_product: right word has type " + type_of(w_plus).str() +
                                    ", expected " + hi.str());
    StdOrder ord(t.alpha);
    Word v(t.size());
    PosSet before = ord.between(std::nullopt, i);
    PosSet after = ord.between(i, std::nullopt);
    for (std::size_t k = 0; k < before.size(); ++k) v[before[k] - 1] = w_minus[k];
    for (std::size_t k = 0; k < after.size(); ++k) v[after[k] - 1] = w_plus[k];
    v[i - 1] = {t.alpha.at(i), 0};
    return v;
}

OpaqueFactorization opaque_factorize(const Word& w) {
    TranslucentWord t = type_of(w);
    StdOrder ord(t.alpha);
    std::vector<int> cut = ord.sorted(t.translucent_set());
    std::vector<std::optional<int>> bounds{std::nullopt};
    for (int p : cut) bounds.push_back(p);
    bounds.push_back(std::nullopt);

    OpaqueFactorization f;
    for (std::size_t j = 0; j + 1 < bounds.size(); ++j)
        f.factors.push_back(restrict_word(w, ord.between(bounds[j], bounds[j + 1])));
    for (std::size_t j = 0; j < cut.size(); ++j) {
        PosSet span = ord.between(std::nullopt, bounds[j + 2]);
        f.ambients.push_back(restrict(t, span));
        f.split_index.push_back(reindex({cut[j]}, span)[0]);
    }
    return f;
}

Word reassemble(const OpaqueFactorization& f) {
    if (f.factors.size() != f.ambients.size() + 1 || f.ambients.size() != f.split_index.size())
        throw std::invalid_argument("reassemble: inconsistent factorization data");
    Word v = f.factors[0];
    for (std::size_t j = 0; j < f.ambients.size(); ++j)
        v = horizontal_product(v, f.factors[j + 1], f.ambients[j], f.split_index[j]);
    return v;
}

std::vector<Word> all_words(const Alphabet& A, int max_len, bool complete_only) {
    std::vector<Letter> letters;
    if (!complete_only) {
        letters.push_back({Side::L, 0});
        letters.push_back({Side::R, 0});
    }
    for (int id : A.ids()) letters.push_back(A.letter(id));
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * letters.size());
        for (const auto& w : layer)
            for (const auto& l : letters) {
                Word v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace bifc
