#include "bifc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bifc::oracle {

std::vector<Partition> set_partitions(int n) {
    std::vector<Partition> out{Partition{}};
    for (int x = 1; x <= n; ++x) {
        std::vector<Partition> next;
        for (const auto& p : out) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                Partition q = p;
                q[b].push_back(x);
                next.push_back(std::move(q));
            }
            Partition q = p;
            q.push_back({x});
            next.push_back(std::move(q));
        }
        out = std::move(next);
    }
    return out;
}

namespace {

std::vector<int> block_of(const Partition& p) {
    int n = 0;
    for (const auto& B : p) n += static_cast<int>(B.size());
    std::vector<int> lab(n + 1, -1);
    for (std::size_t b = 0; b < p.size(); ++b)
        for (int x : p[b]) lab[x] = static_cast<int>(b);
    return lab;
}

}  // namespace

bool noncrossing(const Partition& p) {
    auto lab = block_of(p);
    int n = static_cast<int>(lab.size()) - 1;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (lab[a] == lab[c] && lab[b] == lab[d] && lab[a] != lab[b]) return false;
    return true;
}

bool interval(const Partition& p) {
    for (const auto& B : p)
        if (B.back() - B.front() + 1 != static_cast<int>(B.size())) return false;
    return true;
}

long long monotone_labelings(const Partition& p) {
    if (!noncrossing(p)) return 0;
    auto lab = block_of(p);
    int n = static_cast<int>(lab.size()) - 1;
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a)
            for (int c = a + 2; c <= n && ok; ++c)
                for (int b = a + 1; b < c && ok; ++b)
                    if (lab[a] == lab[c] && lab[b] != lab[a] && perm[lab[a]] > perm[lab[b]]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace {

struct Term {
    Partition blocks;
    Rational weight;
};

const std::vector<Term>& terms(int n, Scheme s) {
    static std::map<std::pair<int, int>, std::vector<Term>> cache;
    auto key = std::make_pair(n, static_cast<int>(s));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Term> list;
    for (auto& p : set_partitions(n)) {
        Rational w = 0;
        switch (s) {
            case Scheme::free: w = noncrossing(p) ? 1 : 0; break;
            case Scheme::boolean: w = interval(p) ? 1 : 0; break;
            case Scheme::monotone: {
                Rational fact = 1;
                for (std::size_t k = 2; k <= p.size(); ++k) fact *= static_cast<long>(k);
                w = Rational(static_cast<long>(monotone_labelings(p))) / fact;
                break;
            }
        }
        if (w != 0) list.push_back({std::move(p), w});
    }
    return cache.emplace(key, std::move(list)).first->second;
}

Word sub(const Word& w, const std::vector<int>& B) {
    Word out;
    for (int x : B) out.push_back(w[x - 1]);
    return out;
}

void check_left(const Alphabet& A) {
    for (int id : A.ids())
        if (A.side(id) != Side::L) throw std::invalid_argument("single-faced oracle needs a left-only alphabet");
}

}  // namespace

Values cumulants(const Values& moments, const Alphabet& A, Scheme s, int max_len) {
    check_left(A);
    Values c;
    for (const auto& w : all_words(A, max_len, true)) {
        if (w.empty()) continue;
        Rational v = moments.at(w);
        for (const auto& t : terms(static_cast<int>(w.size()), s)) {
            if (t.blocks.size() == 1) continue;
            Rational prod = t.weight;
            for (const auto& B : t.blocks) prod *= c.at(sub(w, B));
            v -= prod;
        }
        c.emplace(w, v);
    }
    return c;
}

Values moments(const Values& cumulants, const Alphabet& A, Scheme s, int max_len) {
    check_left(A);
    Values m;
    m.emplace(Word{}, 1);
    for (const auto& w : all_words(A, max_len, true)) {
        if (w.empty()) continue;
        Rational v = 0;
        for (const auto& t : terms(static_cast<int>(w.size()), s)) {
            Rational prod = t.weight;
            for (const auto& B : t.blocks) prod *= cumulants.at(sub(w, B));
            v += prod;
        }
        m.emplace(w, v);
    }
    return m;
}

}  // namespace bifc::oracle
