#include "bifc/bipartition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace bifc {

namespace {

constexpr int kTranslucent = -1;

// Block label of every position (index 1..n), kTranslucent for [t]_0.
std::vector<int> position_labels(const Bipartition& pi) {
    std::vector<int> lab(pi.type.size() + 1, kTranslucent);
    for (std::size_t b = 0; b < pi.blocks.size(); ++b)
        for (int p : pi.blocks[b]) lab[p] = static_cast<int>(b);
    return lab;
}

// Labels listed in standard order.
std::vector<int> labels_in_order(const Bipartition& pi, const StdOrder& ord) {
    auto lab = position_labels(pi);
    std::vector<int> seq;
    seq.reserve(ord.size());
    for (int p : ord.perm()) seq.push_back(lab[p]);
    return seq;
}

bool sequence_noncrossing(const std::vector<int>& x) {
    int n = static_cast<int>(x.size());
    // last occurrence per label, shifted so that kTranslucent maps to 0
    std::vector<int> last(n + 2, -1);
    for (int k = 0; k < n; ++k) last[x[k] + 1] = k;
    for (int a = 0; a < n; ++a)
        for (int c = a + 2; c < n; ++c) {
            if (x[c] != x[a]) continue;
            for (int b = a + 1; b < c; ++b)
                if (x[b] != x[a] && last[x[b] + 1] > c) return false;
        }
    return true;
}

}  // namespace

Bipartition make_bipartition(const TranslucentWord& type, std::vector<PosSet> blocks) {
    int n = type.size();
    std::vector<char> seen(n + 1, 0);
    for (auto& B : blocks) {
        if (B.empty()) throw std::invalid_argument("bipartition blocks must be nonempty");
        std::sort(B.begin(), B.end());
        for (int p : B) {
            if (p < 1 || p > n)
                throw std::out_of_range("block position " + std::to_string(p) + " outside 1.." +
                                        std::to_string(n));
            if (!type.is_opaque(p))
                throw std::invalid_argument("block contains translucent position " +
                                            std::to_string(p));
            if (seen[p]) throw std::invalid_argument("blocks are not disjoint");
            seen[p] = 1;
        }
    }
    for (int p = 1; p <= n; ++p)
        if (type.is_opaque(p) && !seen[p])
            throw std::invalid_argument("opaque position " + std::to_string(p) +
                                        " is not covered by any block");
    StdOrder ord(type.alpha);
    std::sort(blocks.begin(), blocks.end(), [&](const PosSet& a, const PosSet& b) {
        return ord.rank(ord.min_of(a)) < ord.rank(ord.min_of(b));
    });
    return Bipartition{type, std::move(blocks)};
}

BipartitionClass parse_class(const std::string& name) {
    if (name == "all") return BipartitionClass::all;
    if (name == "nc") return BipartitionClass::nc;
    if (name == "interval") return BipartitionClass::interval;
    if (name == "monotone") return BipartitionClass::monotone;
    if (name == "shaded_nc") return BipartitionClass::shaded_nc;
    throw std::invalid_argument("unknown bipartition class \"" + name + "\"");
}

std::string class_name(BipartitionClass c) {
    switch (c) {
        case BipartitionClass::all: return "all";
        case BipartitionClass::nc: return "nc";
        case BipartitionClass::interval: return "interval";
        case BipartitionClass::monotone: return "monotone";
        case BipartitionClass::shaded_nc: return "shaded_nc";
    }
    return "?";
}

bool is_noncrossing(const Bipartition& pi) {
    StdOrder ord(pi.type.alpha);
    return sequence_noncrossing(labels_in_order(pi, ord));
}

bool is_interval(const Bipartition& pi) {
    StdOrder ord(pi.type.alpha);
    // rank among opaque positions only
    std::vector<int> r(pi.type.size() + 1, -1);
    int k = 0;
    for (int p : ord.perm())
        if (pi.type.is_opaque(p)) r[p] = k++;
    for (const auto& B : pi.blocks) {
        int lo = k, hi = -1;
        for (int p : B) {
            lo = std::min(lo, r[p]);
            hi = std::max(hi, r[p]);
        }
        if (hi - lo + 1 != static_cast<int>(B.size())) return false;
    }
    return true;
}

bool is_monotone(const LabeledBipartition& lp) {
    const Bipartition& pi = lp.base;
    int nb = static_cast<int>(pi.blocks.size());
    if (static_cast<int>(lp.order.size()) != nb) return false;
    std::vector<int> label(nb, -1);
    for (int k = 0; k < nb; ++k) {
        int b = lp.order[k];
        if (b < 0 || b >= nb || label[b] != -1) return false;
        label[b] = k + 1;
    }
    StdOrder ord(pi.type.alpha);
    auto x = labels_in_order(pi, ord);
    if (!sequence_noncrossing(x)) return false;
    auto lab_of = [&](int blk) { return blk == kTranslucent ? 0 : label[blk]; };
    int n = static_cast<int>(x.size());
    for (int a = 0; a < n; ++a)
        for (int c = a + 2; c < n; ++c) {
            if (x[c] != x[a]) continue;
            for (int b = a + 1; b < c; ++b)
                if (x[b] != x[a] && lab_of(x[a]) > lab_of(x[b])) return false;
        }
    return true;
}

bool is_shaded(const Bipartition& pi) {
    if (!is_noncrossing(pi)) throw std::invalid_argument("is_shaded requires a noncrossing bipartition");
    PosSet zero = pi.type.translucent_set();
    if (zero.empty()) return true;
    int m = zero.front();
    Side side = pi.type.alpha.at(m);
    auto lab = position_labels(pi);
    for (int k = 1; k < m; ++k) {
        if (!pi.type.is_opaque(k) || pi.type.alpha.at(k) != side) continue;
        for (int j : pi.blocks[lab[k]])
            if (j >= m || pi.type.alpha.at(j) != side) return false;
    }
    return true;
}

int enumeration_limit() {
    int limit = 14;
    if (const char* env = std::getenv("BIFC_MAX_ENUM")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) limit = static_cast<int>(std::min(v, 16L));
    }
    return limit;
}

namespace {

void check_limit(const TranslucentWord& t) {
    int k = static_cast<int>(t.opaque_set().size());
    int limit = enumeration_limit();
    if (k > limit)
        throw EnumerationLimit("type " + t.str() + " has " + std::to_string(k) +
                               " opaque positions; enumeration limit is " +
                               std::to_string(limit) + " (set BIFC_MAX_ENUM, at most 16)");
}

// Restricted-growth enumeration over the positions in standard order.
// Translucent positions are pinned to the translucent block.
void generate(const TranslucentWord& t, bool nc, bool interval,
              const std::function<void(const Bipartition&)>& emit) {
    StdOrder ord(t.alpha);
    const auto& seq = ord.perm();
    int n = static_cast<int>(seq.size());
    std::vector<int> x(n, 0);
    std::vector<int> first, last;  // per opaque block, slot indices
    int first_t = -1, last_t = -1;
    int prev_opaque_block = -1;

    auto crossing_if_extends = [&](int last_slot, int p) {
        // p joins a block whose latest element sits at last_slot
        for (int c = last_slot + 1; c < p; ++c) {
            int y = x[c];
            int f = y == kTranslucent ? first_t : first[y];
            if (f < last_slot) return true;
        }
        return false;
    };

    std::function<void(int)> rec = [&](int p) {
        if (p == n) {
            std::vector<PosSet> blocks(first.size());
            for (int k = 0; k < n; ++k)
                if (x[k] != kTranslucent) blocks[x[k]].push_back(seq[k]);
            for (auto& B : blocks) std::sort(B.begin(), B.end());
            emit(Bipartition{t, std::move(blocks)});
            return;
        }
        int pos = seq[p];
        if (!t.is_opaque(pos)) {
            if (nc && last_t >= 0 && crossing_if_extends(last_t, p)) return;
            int saved_first = first_t, saved_last = last_t;
            x[p] = kTranslucent;
            if (first_t < 0) first_t = p;
            last_t = p;
            rec(p + 1);
            first_t = saved_first;
            last_t = saved_last;
            return;
        }
        int nb = static_cast<int>(first.size());
        int saved_prev = prev_opaque_block;
        for (int b = 0; b < nb; ++b) {
            if (interval && b != prev_opaque_block) continue;
            if (nc && crossing_if_extends(last[b], p)) continue;
            int saved_last = last[b];
            x[p] = b;
            last[b] = p;
            prev_opaque_block = b;
            rec(p + 1);
            last[b] = saved_last;
            prev_opaque_block = saved_prev;
        }
        x[p] = nb;
        first.push_back(p);
        last.push_back(p);
        prev_opaque_block = nb;
        rec(p + 1);
        first.pop_back();
        last.pop_back();
        prev_opaque_block = saved_prev;
    };
    rec(0);
}

}  // namespace

std::vector<Bipartition> enumerate(const TranslucentWord& t, BipartitionClass c) {
    if (c == BipartitionClass::monotone)
        throw std::invalid_argument("monotone bipartitions are labeled; use enumerate_monotone");
    check_limit(t);
    std::vector<Bipartition> out;
    bool nc = c == BipartitionClass::nc || c == BipartitionClass::shaded_nc;
    generate(t, nc, c == BipartitionClass::interval, [&](const Bipartition& pi) {
        if (c == BipartitionClass::shaded_nc && !is_shaded(pi)) return;
        out.push_back(pi);
    });
    return out;
}

namespace {

// encloses[v] bitmask of blocks that v encloses; returns false if an opaque
// block encloses a translucent point.
bool enclosure(const Bipartition& pi, std::vector<std::uint32_t>& encloses) {
    StdOrder ord(pi.type.alpha);
    auto x = labels_in_order(pi, ord);
    int nb = static_cast<int>(pi.blocks.size());
    encloses.assign(nb, 0);
    int n = static_cast<int>(x.size());
    for (int a = 0; a < n; ++a)
        for (int c = a + 2; c < n; ++c) {
            if (x[a] != x[c] || x[a] == kTranslucent) continue;
            for (int b = a + 1; b < c; ++b) {
                if (x[b] == x[a]) continue;
                if (x[b] == kTranslucent) return false;
                encloses[x[a]] |= 1u << x[b];
            }
        }
    return true;
}

}  // namespace

std::vector<std::vector<int>> monotone_labelings(const Bipartition& pi) {
    std::vector<std::vector<int>> out;
    if (!is_noncrossing(pi)) return out;
    std::vector<std::uint32_t> enc;
    if (!enclosure(pi, enc)) return out;
    int nb = static_cast<int>(pi.blocks.size());
    // below[w]: blocks that must carry a smaller label than w
    std::vector<std::uint32_t> below(nb, 0);
    for (int v = 0; v < nb; ++v)
        for (int w = 0; w < nb; ++w)
            if (enc[v] >> w & 1u) below[w] |= 1u << v;
    std::vector<int> order;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
        if (static_cast<int>(order.size()) == nb) {
            out.push_back(order);
            return;
        }
        for (int b = 0; b < nb; ++b) {
            if (used >> b & 1u) continue;
            if ((below[b] & used) != below[b]) continue;
            order.push_back(b);
            rec(used | 1u << b);
            order.pop_back();
        }
    };
    rec(0);
    return out;
}

std::uint64_t count_monotone_labelings(const Bipartition& pi) {
    if (!is_noncrossing(pi)) return 0;
    std::vector<std::uint32_t> enc;
    if (!enclosure(pi, enc)) return 0;
    int nb = static_cast<int>(pi.blocks.size());
    std::vector<std::uint32_t> below(nb, 0);
    for (int v = 0; v < nb; ++v)
        for (int w = 0; w < nb; ++w)
            if (enc[v] >> w & 1u) below[w] |= 1u << v;
    // ways[S]: number of ways to assign labels 1..|S| to the down-closed set S
    std::vector<std::uint64_t> ways(std::size_t{1} << nb, 0);
    ways[0] = 1;
    for (std::uint32_t S = 0; S < ways.size(); ++S) {
        if (!ways[S]) continue;
        for (int b = 0; b < nb; ++b)
            if (!(S >> b & 1u) && (below[b] & S) == below[b]) ways[S | 1u << b] += ways[S];
    }
    return ways.back();
}

std::vector<LabeledBipartition> enumerate_monotone(const TranslucentWord& t) {
    std::vector<LabeledBipartition> out;
    for (auto& pi : enumerate(t, BipartitionClass::nc))
        for (auto& order : monotone_labelings(pi)) out.push_back({pi, std::move(order)});
    return out;
}

Bipartition compose_bipartitions(const Bipartition& rho, const Bipartition& sigma) {
    TranslucentWord type = compose(rho.type, sigma.type);
    PosSet iota = sigma.type.translucent_set();
    std::vector<PosSet> blocks = sigma.blocks;
    for (const auto& B : rho.blocks) {
        PosSet mapped;
        for (int p : B) mapped.push_back(iota[p - 1]);
        blocks.push_back(std::move(mapped));
    }
    return make_bipartition(type, std::move(blocks));
}

Bipartition restrict_bipartition(const Bipartition& pi, const PosSet& I) {
    TranslucentWord type = restrict(pi.type, I);
    std::vector<PosSet> blocks;
    for (const auto& B : pi.blocks) {
        PosSet kept;
        std::set_intersection(B.begin(), B.end(), I.begin(), I.end(), std::back_inserter(kept));
        if (!kept.empty()) blocks.push_back(reindex(kept, I));
    }
    return make_bipartition(type, std::move(blocks));
}

Bipartition translucidate_blocks(const Bipartition& pi, const std::vector<int>& keep) {
    int nb = static_cast<int>(pi.blocks.size());
    std::vector<char> kept(nb, 0);
    for (int b : keep) {
        if (b < 0 || b >= nb) throw std::out_of_range("block index " + std::to_string(b));
        kept[b] = 1;
    }
    PosSet dropped;
    std::vector<PosSet> blocks;
    for (int b = 0; b < nb; ++b) {
        if (kept[b])
            blocks.push_back(pi.blocks[b]);
        else
            dropped.insert(dropped.end(), pi.blocks[b].begin(), pi.blocks[b].end());
    }
    std::sort(dropped.begin(), dropped.end());
    return make_bipartition(translucidate(pi.type, dropped), std::move(blocks));
}

std::string to_string(const Bipartition& pi) {
    std::string out = pi.type.str() + " ";
    for (const auto& B : pi.blocks) {
        out += "{";
        for (std::size_t k = 0; k < B.size(); ++k) out += (k ? "," : "") + std::to_string(B[k]);
        out += "}";
    }
    return out;
}

}  // namespace bifc
