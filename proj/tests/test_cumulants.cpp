#include "bifc/cumulants.hpp"
#include "bifc/oracle.hpp"
#include "bifc/verify.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

using namespace bifc;

namespace {

MomentData random_moments(const Alphabet& A, int max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MomentData m{A, random_table(all_words(A, max_len, true), rng)};
    m.moments[Word{}] = 1;
    return m;
}

int count_var(const Word& w, int id) {
    int n = 0;
    for (const auto& l : w) n += l.var == id;
    return n;
}

Rational power(const Rational& x, int n) {
    Rational r = 1;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

const Family kFamilies[] = {Family::bifree, Family::biboolean, Family::bimonotone};

}  // namespace

TEST_CASE("family names") {
    for (Family f : kFamilies) CHECK(parse_family(family_name(f)) == f);
    CHECK(family_class(Family::bifree) == BipartitionClass::nc);
    CHECK(family_class(Family::biboolean) == BipartitionClass::interval);
    CHECK(family_class(Family::bimonotone) == BipartitionClass::monotone);
    CHECK_THROWS_AS(parse_family("free"), std::invalid_argument);
}

TEST_CASE("two-letter moments") {
    Alphabet A = Alphabet::parse("a:L,b:R");
    auto w = [&](const char* s) { return parse_word(A, s); };
    CumulantData c{A, Family::bifree, {{w("a"), Rational(2)}, {w("b"), Rational(3)}, {w("a b"), Rational(5)},
                                       {w("b a"), Rational(7)}, {w("a a"), Rational(1, 2)}, {w("b b"), Rational(-1)}}};
    MomentData m = cumulants_to_moments(c, 2);
    CHECK(m.moments.at(Word{}) == 1);
    CHECK(m.moments.at(w("a")) == 2);
    CHECK(m.moments.at(w("a b")) == 5 + 2 * 3);
    c.family = Family::biboolean;
    m = cumulants_to_moments(c, 2);
    CHECK(m.moments.at(w("a a")) == Rational(1, 2) + 4);
    CHECK(m.moments.at(w("b")) == 3);
    c.family = Family::bimonotone;
    m = cumulants_to_moments(c, 2);
    CHECK(m.moments.at(w("b a")) == 7 + 6);

    MomentData mm{A, {{Word{}, Rational(1)}, {w("a"), Rational(2)}, {w("b"), Rational(3)}, {w("a b"), Rational(1)},
                      {w("b a"), Rational(1)}, {w("a a"), Rational(1)}, {w("b b"), Rational(1)}}};
    auto kf = moments_to_cumulants(mm, Family::bifree, 2);
    CHECK(kf.values.at(w("a b")) == 1 - 2 * 3);
    for (Family f : kFamilies) {
        auto k = moments_to_cumulants(mm, f, 2);
        CHECK(k.family == f);
        CHECK(k.values.at(w("a")) == 2);
        CHECK(k.values.at(w("b")) == 3);
        CHECK(k.values.count(Word{}) == 0);
    }
}

TEST_CASE("missing or malformed data") {
    Alphabet A = Alphabet::parse("a:L");
    Word a = parse_word(A, "a");
    CHECK_THROWS_AS(cumulants_to_moments(CumulantData{A, Family::bifree, {{a, Rational(1)}}}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(moments_to_cumulants(MomentData{A, {{a, Rational(1)}}}, Family::bifree, 2), std::invalid_argument);
    CHECK_THROWS_AS(moments_to_cumulants(MomentData{A, {{Word{}, Rational(2)}, {a, Rational(1)}}}, Family::bifree, 1),
                    std::invalid_argument);
    CHECK_NOTHROW(moments_to_cumulants(MomentData{A, {{a, Rational(1)}}}, Family::bifree, 1));
}

TEST_CASE("single-faced distributions") {
    Alphabet A = Alphabet::parse("a:L");
    auto an = [&](int n) { return Word(n, A.letter(1)); };
    const int N = 8;

    MomentData delta{A, {}};
    for (int n = 0; n <= N; ++n) delta.moments[an(n)] = 1;
    for (Family f : kFamilies) {
        auto c = moments_to_cumulants(delta, f, N);
        CHECK(c.values.at(an(1)) == 1);
        for (int n = 2; n <= N; ++n) CHECK(c.values.at(an(n)) == 0);
    }

    // semicircle: even moments are Catalan numbers, free cumulants 0, 1, 0, 0, ...
    MomentData semi{A, {}};
    long long cat = 1;
    for (int n = 0; n <= N; ++n) {
        if (n % 2 == 0) {
            semi.moments[an(n)] = static_cast<long>(cat);
            cat = cat * 2 * (n + 1) / (n / 2 + 2);
        } else {
            semi.moments[an(n)] = 0;
        }
    }
    auto kappa = moments_to_cumulants(semi, Family::bifree, N);
    for (int n = 1; n <= N; ++n) CHECK(kappa.values.at(an(n)) == (n == 2 ? 1 : 0));
    // Boolean cumulants of the semicircle are the Catalan numbers C_{n/2 - 1}
    auto bool_c = moments_to_cumulants(semi, Family::biboolean, N);
    CHECK(bool_c.values.at(an(2)) == 1);
    CHECK(bool_c.values.at(an(4)) == 1);
    CHECK(bool_c.values.at(an(6)) == 2);
    CHECK(bool_c.values.at(an(8)) == 5);
}

TEST_CASE("left-only inputs agree with the one-faced oracle") {
    Alphabet A = Alphabet::parse("a:L,b:L");
    MomentData m = random_moments(A, 5, 11);
    oracle::Values mv(m.moments.begin(), m.moments.end());
    const std::pair<Family, oracle::Scheme> pairs[] = {{Family::bifree, oracle::Scheme::free},
                                                       {Family::biboolean, oracle::Scheme::boolean},
                                                       {Family::bimonotone, oracle::Scheme::monotone}};
    for (auto [f, s] : pairs) {
        auto ours = moments_to_cumulants(m, f, 5);
        auto ref = oracle::cumulants(mv, A, s, 5);
        for (const auto& w : all_words(A, 5, true))
            if (!w.empty()) CHECK(ours.values.at(w) == ref.at(w));
    }
}

TEST_CASE("roundtrip and zero cumulants") {
    Alphabet A = alphabet_1l1r();
    MomentData m = random_moments(A, 5, 3);
    for (Family f : kFamilies) {
        auto back = cumulants_to_moments(moments_to_cumulants(m, f, 5), 5);
        for (const auto& w : all_words(A, 5, true)) CHECK(back.moments.at(w) == m.moments.at(w));
        CumulantData zero{A, f, {}};
        for (const auto& w : all_words(A, 4, true))
            if (!w.empty()) zero.values[w] = 0;
        auto mz = cumulants_to_moments(zero, 4);
        for (const auto& w : all_words(A, 4, true)) CHECK(mz.moments.at(w) == (w.empty() ? 1 : 0));
    }
}

TEST_CASE("cumulants scale like multilinear maps") {
    Alphabet A = alphabet_2l2r();
    MomentData m = random_moments(A, 4, 5);
    const int scaled = A.id("c");
    const Rational lambda(-3, 2);
    MomentData ms = m;
    for (auto& [w, v] : ms.moments) v *= power(lambda, count_var(w, scaled));
    for (Family f : kFamilies) {
        auto c = moments_to_cumulants(m, f, 4);
        auto cs = moments_to_cumulants(ms, f, 4);
        for (const auto& [w, v] : c.values) CHECK(cs.values.at(w) == v * power(lambda, count_var(w, scaled)));
    }
}

TEST_CASE("moments match all three exponentials") {
    auto report = check_against_exponentials(random_moments(alphabet_2l2r(), 4, 42), 4);
    CHECK(report.ok);
    CHECK(report.entries.size() == all_words(alphabet_2l2r(), 4, true).size() - 1);
    for (const auto& e : report.entries) {
        CHECK(e.ok);
        CHECK(e.via_prec == e.moment);
    }
}

TEST_CASE("mixed cumulant diagnostic") {
    Alphabet A = alphabet_2l2r();  // a:L, b:L, c:R, d:R
    std::vector<int> g1 = {A.id("a"), A.id("c")}, g2 = {A.id("b"), A.id("d")};
    auto in = [](const std::vector<int>& g, int v) { return std::find(g.begin(), g.end(), v) != g.end(); };
    std::mt19937_64 rng(9);
    for (Family f : kFamilies) {
        CumulantData c{A, f, {}};
        for (const auto& w : all_words(A, 4, true)) {
            if (w.empty()) continue;
            bool has1 = false, has2 = false;
            for (const auto& l : w) (in(g1, l.var) ? has1 : has2) = true;
            c.values[w] = has1 && has2 ? Rational(0) : random_rational(rng);
        }
        MomentData m = cumulants_to_moments(c, 4);
        auto d = mixed_cumulant_diagnostic(m, f, g1, g2, 4);
        CHECK(d.vanishing);
        CHECK_FALSE(d.witness.has_value());

        Word ab = parse_word(A, "a b");
        m.moments[ab] += 1;
        d = mixed_cumulant_diagnostic(m, f, g1, g2, 4);
        CHECK_FALSE(d.vanishing);
        REQUIRE(d.witness.has_value());
        CHECK(d.value != 0);
        CHECK(d.witness->size() == 4);
        auto direct = moments_to_cumulants(m, f, 4);
        CHECK(direct.values.at(*d.witness) == d.value);
    }
}
