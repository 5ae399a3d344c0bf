#include "bifc/bipartition.hpp"
#include "bifc/oracle.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace bifc;

namespace {

TranslucentWord tw(const char* s) { return TranslucentWord::parse(s); }

Bipartition bp(const char* type, std::vector<PosSet> blocks) { return make_bipartition(tw(type), std::move(blocks)); }

std::vector<TranslucentWord> all_types(int max_len) {
    std::vector<TranslucentWord> out;
    for (int n = 0; n <= max_len; ++n)
        for (unsigned a = 0; a < (1u << n); ++a)
            for (unsigned m = 0; m < (1u << n); ++m) {
                std::string alpha, mask;
                for (int k = 0; k < n; ++k) {
                    alpha.push_back(a >> k & 1u ? 'R' : 'L');
                    mask.push_back(m >> k & 1u ? '1' : '0');
                }
                out.emplace_back(LRWord(alpha), mask);
            }
    return out;
}

// Every partition of [t]_1, from the independent set-partition generator.
std::vector<Bipartition> brute_all(const TranslucentWord& t) {
    PosSet one = t.opaque_set();
    std::vector<Bipartition> out;
    for (const auto& p : oracle::set_partitions(static_cast<int>(one.size()))) {
        std::vector<PosSet> blocks;
        for (const auto& B : p) {
            PosSet mapped;
            for (int x : B) mapped.push_back(one[x - 1]);
            blocks.push_back(mapped);
        }
        out.push_back(make_bipartition(t, blocks));
    }
    return out;
}

std::set<Bipartition> as_set(const std::vector<Bipartition>& v) { return {v.begin(), v.end()}; }

long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace

TEST_CASE("bipartition validation") {
    CHECK_THROWS_AS(bp("LL,11", {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(bp("LL,01", {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(bp("LL,11", {{1, 2}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(bp("LL,11", {{1, 3}, {2}}), std::out_of_range);
    // blocks come back sorted by standard-order minimum
    auto pi = bp("LRL,111", {{2}, {3, 1}});
    CHECK(pi.blocks == std::vector<PosSet>{{1, 3}, {2}});
}

TEST_CASE("noncrossing predicate") {
    CHECK(is_noncrossing(bp("LL,11", {{1, 2}})));
    CHECK_FALSE(is_noncrossing(bp("LLLL,1111", {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(bp("LR,11", {{1}, {2}})));
    // the translucent block takes part: 1~3 crosses the translucent {2,4}
    CHECK_FALSE(is_noncrossing(bp("LLLL,1010", {{1, 3}})));
    CHECK(is_noncrossing(bp("LLLL,1010", {{1}, {3}})));
    // standard order of LLRR is 1,2,4,3: {1,4} and {2,3} cross
    CHECK_FALSE(is_noncrossing(bp("LLRR,1111", {{1, 4}, {2, 3}})));
    CHECK(is_noncrossing(bp("LLRR,1111", {{1, 3}, {2, 4}})));
}

TEST_CASE("interval predicate") {
    CHECK(is_interval(bp("LLL,111", {{1, 2, 3}})));
    CHECK(is_interval(bp("LRL,101", {{1, 3}})));
    CHECK_FALSE(is_interval(bp("LLLL,1111", {{1, 3}, {2}, {4}})));
    // contiguity is measured inside [t]_1 only
    CHECK(is_interval(bp("LLL,101", {{1, 3}})));
}

TEST_CASE("monotone predicate") {
    auto pi = bp("LLL,111", {{1, 3}, {2}});
    CHECK(is_monotone({pi, {0, 1}}));
    CHECK_FALSE(is_monotone({pi, {1, 0}}));
    CHECK(is_monotone({bp("LLL,111", {{1, 2, 3}}), {0}}));
    CHECK(is_monotone({bp("LL,01", {{2}}), {0}}));
    // an opaque block may not enclose a translucent point
    CHECK_FALSE(is_monotone({bp("LLL,101", {{1, 3}}), {0}}));
    CHECK_FALSE(is_monotone({pi, {0, 0}}));
}

TEST_CASE("shaded predicate") {
    CHECK(is_shaded(bp("LL,01", {{2}})));
    // a left block reaching below the first translucent point closes the chord
    CHECK_FALSE(is_shaded(bp("LLL,101", {{1, 3}})));
    CHECK(is_shaded(bp("LLL,101", {{1}, {3}})));
    // opaque points of the other side before min [t]_0 are unconstrained
    CHECK(is_shaded(bp("RLR,101", {{1, 3}})));
    // a left block pairing with a right point
    CHECK_FALSE(is_shaded(bp("LLR,101", {{1, 3}})));
    CHECK(is_shaded(bp("LLR,101", {{1}, {3}})));
    CHECK(is_shaded(bp("LLRR,1011", {{1}, {3, 4}})));
    CHECK_FALSE(is_shaded(bp("LLRR,1011", {{1, 3}, {4}})));
    for (const auto& t : all_types(5))
        if (t.translucent_set().empty())
            for (const auto& pi : enumerate(t, BipartitionClass::nc)) CHECK(is_shaded(pi));
    CHECK_THROWS_AS(is_shaded(bp("LLLL,1111", {{1, 3}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate(tw("LLL,111"), BipartitionClass::nc).size() == 5);
    CHECK(enumerate(tw("LLLL,1111"), BipartitionClass::nc).size() == 14);
    CHECK(enumerate(tw("LLL,111"), BipartitionClass::interval).size() == 4);
    CHECK(enumerate_monotone(tw("LLL,111")).size() == 12);
    CHECK(enumerate(tw("LRLL,0101"), BipartitionClass::all).size() == 2);
    for (auto c : {BipartitionClass::all, BipartitionClass::nc, BipartitionClass::interval,
                   BipartitionClass::shaded_nc}) {
        auto list = enumerate(tw("LRL,000"), c);
        REQUIRE(list.size() == 1);
        CHECK(list[0].blocks.empty());
    }
    CHECK(enumerate_monotone(tw("LRL,000")).size() == 1);
    for (int n = 1; n <= 8; ++n) {
        auto t = TranslucentWord::opaque(LRWord(std::string(n, 'L')));
        CHECK(static_cast<long long>(enumerate(t, BipartitionClass::nc).size()) == catalan(n));
        CHECK(enumerate(t, BipartitionClass::interval).size() == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("enumeration matches brute-force filtering") {
    for (const auto& t : all_types(5)) {
        auto all = brute_all(t);
        std::vector<Bipartition> nc, iv, sh;
        for (const auto& pi : all) {
            if (is_noncrossing(pi)) nc.push_back(pi);
            if (is_interval(pi)) iv.push_back(pi);
            if (is_noncrossing(pi) && is_shaded(pi)) sh.push_back(pi);
        }
        auto e_all = enumerate(t, BipartitionClass::all);
        auto e_nc = enumerate(t, BipartitionClass::nc);
        REQUIRE(e_all.size() == all.size());
        CHECK(as_set(e_all) == as_set(all));
        CHECK(as_set(e_nc) == as_set(nc));
        CHECK(e_nc.size() == nc.size());
        CHECK(as_set(enumerate(t, BipartitionClass::interval)) == as_set(iv));
        CHECK(as_set(enumerate(t, BipartitionClass::shaded_nc)) == as_set(sh));
    }
}

TEST_CASE("monotone labelings match brute force over all orders") {
    for (const auto& t : all_types(5))
        for (const auto& pi : enumerate(t, BipartitionClass::nc)) {
            std::vector<int> order(pi.blocks.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
            std::set<std::vector<int>> brute;
            do {
                if (is_monotone({pi, order})) brute.insert(order);
            } while (std::next_permutation(order.begin(), order.end()));
            auto gen = monotone_labelings(pi);
            CHECK(std::set<std::vector<int>>(gen.begin(), gen.end()) == brute);
            CHECK(count_monotone_labelings(pi) == brute.size());
        }
}

TEST_CASE("the top label of a monotone bipartition sits on an interval block") {
    for (int n = 1; n <= 5; ++n)
        for (unsigned a = 0; a < (1u << n); ++a) {
            std::string alpha;
            for (int k = 0; k < n; ++k) alpha.push_back(a >> k & 1u ? 'R' : 'L');
            auto t = TranslucentWord::opaque(LRWord(alpha));
            StdOrder ord(t.alpha);
            auto all = enumerate_monotone(t);
            for (const auto& lp : all) CHECK(ord.is_interval(lp.base.blocks[lp.order.back()]));
            // |M(t)| = sum over nonempty intervals I of |M(t minus I)|
            std::size_t total = 0;
            for (int lo = 0; lo < n; ++lo)
                for (int hi = lo; hi < n; ++hi) {
                    PosSet rest;
                    for (int k = 0; k < n; ++k)
                        if (k < lo || k > hi) rest.push_back(ord.perm()[k]);
                    std::sort(rest.begin(), rest.end());
                    total += enumerate_monotone(restrict(t, rest)).size();
                }
            CHECK(total == all.size());
        }
}

TEST_CASE("shaded bipartitions factor over the opaque intervals") {
    for (const auto& t : all_types(6)) {
        auto J = opaque_intervals(t);
        std::size_t product = 1;
        for (const auto& I : J) product *= enumerate(restrict(t, I), BipartitionClass::shaded_nc).size();
        auto sh = enumerate(t, BipartitionClass::shaded_nc);
        CHECK(sh.size() == product);
        for (const auto& pi : sh)
            for (const auto& B : pi.blocks)
                CHECK(std::any_of(J.begin(), J.end(), [&](const PosSet& I) { return is_subset(B, I); }));
    }
}

TEST_CASE("vertical composition of bipartitions") {
    // rho fills the translucent block of sigma
    auto sigma = bp("LLRR,1010", {{1, 3}});
    auto rho = bp("LR,11", {{1, 2}});
    auto pi = compose_bipartitions(rho, sigma);
    CHECK(pi.type == tw("LLRR,1111"));
    CHECK(pi.blocks == std::vector<PosSet>{{1, 3}, {2, 4}});
    CHECK(is_noncrossing(sigma));
    CHECK(is_noncrossing(pi));

    auto sigma2 = bp("LLLRR,01011", {{2}, {4, 5}});
    auto rho2 = bp("LL,11", {{1}, {2}});
    auto pi2 = compose_bipartitions(rho2, sigma2);
    CHECK(pi2.type == tw("LLLRR,11111"));
    CHECK(pi2.blocks == std::vector<PosSet>{{1}, {2}, {3}, {4, 5}});
    CHECK(restrict_bipartition(pi2, sigma2.type.translucent_set()) == rho2);

    // units
    auto any = bp("LRL,101", {{1, 3}});
    CHECK(compose_bipartitions(any, bp("LRL,000", {})) == any);
    CHECK(compose_bipartitions(bp("R,0", {}), any) == any);
    CHECK_THROWS_AS(compose_bipartitions(bp("LL,11", {{1, 2}}), any), std::invalid_argument);
}

TEST_CASE("noncrossing bipartitions are closed under composition") {
    for (const auto& st : all_types(4))
        for (const auto& sigma : enumerate(st, BipartitionClass::nc)) {
            LRWord tgt = target(st);
            int n = tgt.size();
            for (unsigned m = 0; m < (1u << n); ++m) {
                std::string mask;
                for (int k = 0; k < n; ++k) mask.push_back(m >> k & 1u ? '1' : '0');
                for (const auto& rho : enumerate(TranslucentWord(tgt, mask), BipartitionClass::nc)) {
                    auto pi = compose_bipartitions(rho, sigma);
                    CHECK(is_noncrossing(pi));
                    CHECK(restrict_bipartition(pi, st.translucent_set()).blocks == rho.blocks);
                }
            }
        }
}

TEST_CASE("restriction and translucidation of blocks") {
    auto pi = bp("LRLR,1111", {{1, 2}, {3}, {4}});
    auto full = restrict_bipartition(pi, pi.type.opaque_set());
    CHECK(full == pi);
    auto r = restrict_bipartition(pi, {2, 3});
    CHECK(r.type == tw("RL,11"));
    CHECK(r.blocks == std::vector<PosSet>{{2}, {1}});
    CHECK(translucidate_blocks(pi, {0, 1, 2}) == pi);
    auto none = translucidate_blocks(pi, {});
    CHECK(none.type == tw("LRLR,0000"));
    CHECK(none.blocks.empty());
    auto part = translucidate_blocks(pi, {0});
    CHECK(part.type == tw("LRLR,1100"));
    CHECK(part.blocks == std::vector<PosSet>{{1, 2}});
    CHECK_THROWS_AS(translucidate_blocks(pi, {3}), std::out_of_range);
}

TEST_CASE("enumeration guardrail") {
    auto big = TranslucentWord::opaque(LRWord(std::string(15, 'L')));
    unsetenv("BIFC_MAX_ENUM");
    CHECK(enumeration_limit() == 14);
    CHECK_THROWS_AS(enumerate(big, BipartitionClass::nc), EnumerationLimit);
    setenv("BIFC_MAX_ENUM", "15", 1);
    CHECK(enumeration_limit() == 15);
    CHECK(enumerate(big, BipartitionClass::interval).size() == (std::size_t{1} << 14));
    setenv("BIFC_MAX_ENUM", "40", 1);
    CHECK(enumeration_limit() == 16);
    setenv("BIFC_MAX_ENUM", "3", 1);
    CHECK_THROWS_AS(enumerate(TranslucentWord::opaque(LRWord("LLLL")), BipartitionClass::all), EnumerationLimit);
    unsetenv("BIFC_MAX_ENUM");
}

TEST_CASE("class names round trip") {
    for (auto c : {BipartitionClass::all, BipartitionClass::nc, BipartitionClass::interval, BipartitionClass::monotone,
                   BipartitionClass::shaded_nc})
        CHECK(parse_class(class_name(c)) == c);
    CHECK_THROWS_AS(parse_class("crossing"), std::invalid_argument);
}
