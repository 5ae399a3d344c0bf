#include "bifc/verify.hpp"

#include "bifc/cumulants.hpp"
#include "bifc/oracle.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace bifc {

void SuiteResult::check(bool passed, const std::string& what) {
    ++checks;
    if (passed || !ok) {
        if (!passed) ok = false;
        return;
    }
    ok = false;
    counterexample = what;
}

std::vector<std::string> suite_names() {
    return {"codendriform", "dendriform", "exchange", "exponentials", "prelie", "roundtrip", "single_faced"};
}

SuiteResult run_suite(const std::string& name, int max_len, std::uint64_t seed) {
    if (name == "codendriform") return verify_codendriform(max_len);
    if (name == "dendriform") return verify_dendriform(max_len, seed);
    if (name == "exchange") return verify_exchange(max_len);
    if (name == "exponentials") return verify_exponentials(max_len, seed);
    if (name == "prelie") return verify_prelie(max_len, seed);
    if (name == "roundtrip") return verify_roundtrip(max_len, seed);
    if (name == "single_faced") return verify_single_faced(max_len, seed);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

Alphabet alphabet_1l1r() { return Alphabet::parse("a:L,b:R"); }
Alphabet alphabet_2l2r() { return Alphabet::parse("a:L,b:L,c:R,d:R"); }

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    long p = num(rng);
    long q = den(rng);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Table random_table(const std::vector<Word>& words, std::mt19937_64& rng) {
    Table t;
    for (const auto& w : words)
        if (has_opaque(w)) t.emplace(w, random_rational(rng));
    return t;
}

std::vector<TranslucentWord> all_translucent_words(int max_len) {
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

namespace {

std::string quote(const Alphabet& A, const Word& w) { return "\"" + to_string(A, w) + "\""; }

std::string show(const Rational& v, const Rational& expected) {
    return "got " + to_string(v) + ", expected " + to_string(expected);
}

// Applies the reduced coproduct to the last factor, keeping N-fold tensors
// as vectors.
using VTensor = std::map<std::vector<Word>, std::int64_t>;

VTensor reduce_last(const VTensor& x) {
    VTensor out;
    for (const auto& [key, mult] : x)
        for (const auto& [pair, m2] : reduced_coproduct(key.back())) {
            auto k2 = key;
            k2.back() = pair[0];
            k2.push_back(pair[1]);
            out[k2] += mult * m2;
        }
    return out;
}

// All words of the given type whose variables come from A.
std::vector<Word> words_of_type(const TranslucentWord& t, const Alphabet& A) {
    std::vector<Word> out{Word{}};
    for (int p = 1; p <= t.size(); ++p) {
        Side side = t.alpha.at(p);
        std::vector<Letter> options;
        if (!t.is_opaque(p))
            options.push_back({side, 0});
        else
            for (int id : A.ids())
                if (A.side(id) == side) options.push_back(A.letter(id));
        std::vector<Word> next;
        for (const auto& w : out)
            for (const auto& l : options) {
                Word v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<TranslucentWord> right_factors(const TranslucentWord& u) {
    std::vector<TranslucentWord> out;
    for (auto& f : factorizations(u)) out.push_back(std::move(f.s));
    return out;
}

}  // namespace

SuiteResult verify_codendriform(int max_len) {
    SuiteResult r;
    r.suite = "codendriform";
    Alphabet A = alphabet_1l1r();
    auto full = [](const Word& w) { return coproduct(w); };
    auto left = [](const Word& w) { return coproduct_left(w); };
    auto right = [](const Word& w) { return coproduct_right(w); };
    auto reduced = [](const Word& w) { return reduced_coproduct(w); };
    for (const auto& w : all_words(A, max_len, false)) {
        std::string q = quote(A, w);
        WordSum d = coproduct(w);
        r.check(apply_at(d, 0, full) == apply_at(d, 1, full), "coassociativity fails on " + q);
        if (!has_opaque(w)) {
            r.check(d.size() == 1 && d.begin()->first[0] == w && d.begin()->first[1] == w,
                    "placeholder word " + q + " is not group-like");
            continue;
        }
        WordSum dl = coproduct_left(w), dr = coproduct_right(w);
        r.check(apply_at(dl, 0, left) == apply_at(dl, 1, reduced),
                "(D< x id) D< != (id x Dbar) D< on " + q);
        r.check(apply_at(dr, 1, right) == apply_at(dr, 0, reduced),
                "(id x D>) D> != (Dbar x id) D> on " + q);
        r.check(apply_at(dl, 0, right) == apply_at(dr, 1, left),
                "(D> x id) D< != (id x D<) D> on " + q);
        WordSum sum = dl;
        for (const auto& [k, m] : dr) sum[k] += m;
        r.check(sum == reduced_coproduct(w), "D< + D> != Dbar on " + q);
        // conilpotency: |[w]_1| - 1 reductions survive, one more vanishes
        VTensor x{{{w}, 1}};
        int m = static_cast<int>(opaque_positions(w).size());
        for (int k = 1; k < m; ++k) x = reduce_last(x);
        r.check(!x.empty(), "iterated reduced coproduct vanishes too early on " + q);
        r.check(reduce_last(x).empty(), "iterated reduced coproduct does not vanish on " + q);
    }
    return r;
}

SuiteResult verify_dendriform(int max_len, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "dendriform";
    Alphabet A = alphabet_1l1r();
    std::mt19937_64 rng(seed);
    auto words = all_words(A, max_len, false);
    Functional f1(Kind::generic, random_table(words, rng));
    Functional f2(Kind::generic, random_table(words, rng));
    Functional f3(Kind::generic, random_table(words, rng));
    auto tab = [&](auto op, const Functional& a, const Functional& b) {
        return Functional(Kind::generic, tabulate([&](const Word& w) { return op(a, b, w); }, words));
    };
    auto prec = [](const Functional& a, const Functional& b, const Word& w) { return prec_eval(a, b, w); };
    auto succ = [](const Functional& a, const Functional& b, const Word& w) { return succ_eval(a, b, w); };
    auto star = [](const Functional& a, const Functional& b, const Word& w) { return star_eval(a, b, w); };
    Functional p12 = tab(prec, f1, f2), p23 = tab(prec, f2, f3);
    Functional q12 = tab(succ, f1, f2), q23 = tab(succ, f2, f3);
    Functional s12 = tab(star, f1, f2), s23 = tab(star, f2, f3);
    Functional eps = Functional::counit();
    for (const auto& w : words) {
        std::string q = quote(A, w);
        r.check(prec_eval(p12, f3, w) == prec_eval(f1, s23, w), "(l1<l2)<l3 != l1<(l2*l3) on " + q);
        r.check(succ_eval(f1, q23, w) == succ_eval(s12, f3, w), "l1>(l2>l3) != (l1*l2)>l3 on " + q);
        r.check(succ_eval(f1, p23, w) == prec_eval(q12, f3, w), "l1>(l2<l3) != (l1>l2)<l3 on " + q);
        r.check(star_eval(s12, f3, w) == star_eval(f1, s23, w), "star is not associative on " + q);
        r.check(star_eval(eps, f1, w) == f1.eval(w) && star_eval(f1, eps, w) == f1.eval(w),
                "counit law fails on " + q);
        r.check(star_eval(f1, f2, w) == prec_eval(f1, f2, w) + succ_eval(f1, f2, w),
                "star != prec + succ on " + q);
    }
    return r;
}

SuiteResult verify_exchange(int max_len) {
    SuiteResult r;
    r.suite = "exchange";
    Alphabet A = alphabet_1l1r();
    for (const auto& t : all_translucent_words(max_len)) {
        StdOrder ord(t.alpha);
        PosSet zero = t.translucent_set();
        for (int i : zero) {
            auto [lo, hi] = split(t, i);
            std::string where = " at t=" + t.str() + ", i=" + std::to_string(i);
            auto rf_lo = right_factors(lo), rf_hi = right_factors(hi);
            for (const auto& sm : rf_lo)
                for (const auto& sp : rf_hi) {
                    Exchange e = exchange(sm, sp, t, i);
                    std::string ctx = where + ", s-=" + sm.str() + ", s+=" + sp.str();
                    r.check(compose(e.r, e.s) == t, "r o s != t" + ctx);
                    r.check(split(e.s, i) == std::make_pair(sm, sp), "split of s differs from (s-, s+)" + ctx);
                    // second associativity shape
                    int ip = reindex({i}, e.s.translucent_set())[0];
                    auto [ulo, uhi] = split(e.r, ip);
                    for (const auto& rm : right_factors(ulo))
                        for (const auto& rp : right_factors(uhi)) {
                            Exchange ers = exchange(compose(rm, sm), compose(rp, sp), t, i);
                            Exchange inner = exchange(sm, sp, ers.s, i);
                            Exchange outer = exchange(rm, rp, e.r, ip);
                            std::string c2 = ctx + ", r-=" + rm.str() + ", r+=" + rp.str();
                            r.check(inner.s == e.s, "s(s-,s+,t) != s(s-,s+,s(rs-,rs+,t))" + c2);
                            r.check(outer.r == ers.r, "r(r-,r+,r(s-,s+,t)) != r(rs-,rs+,t)" + c2);
                            r.check(outer.s == inner.r, "s(r-,r+,r(s-,s+,t)) != r(s-,s+,s(rs-,rs+,t))" + c2);
                        }
                }
            // first associativity shape: two translucent points i < j
            for (int j : zero) {
                if (!ord.lt(i, j)) continue;
                PosSet before_j = ord.between(std::nullopt, j), after_i = ord.between(i, std::nullopt);
                TranslucentWord tj = restrict(t, before_j), ti = restrict(t, after_i);
                int i0 = reindex({i}, before_j)[0], j0 = reindex({j}, after_i)[0];
                TranslucentWord mid = restrict(t, ord.between(i, j));
                TranslucentWord top = restrict(t, ord.between(j, std::nullopt));
                for (const auto& sm : rf_lo)
                    for (const auto& s0 : right_factors(mid))
                        for (const auto& sp : right_factors(top)) {
                            Exchange a1 = exchange(sm, s0, tj, i0);
                            Exchange a2 = exchange(a1.s, sp, t, j);
                            Exchange b1 = exchange(s0, sp, ti, j0);
                            Exchange b2 = exchange(sm, b1.s, t, i);
                            r.check(a2.s == b2.s && a2.r == b2.r,
                                    "exchange at i then j differs from j then i at t=" + t.str() + ", i=" +
                                        std::to_string(i) + ", j=" + std::to_string(j) + ", s-=" + sm.str() +
                                        ", s0=" + s0.str() + ", s+=" + sp.str());
                        }
            }
            // compatibility with the horizontal product
            for (const auto& wm : words_of_type(lo, A))
                for (const auto& wp : words_of_type(hi, A)) {
                    Word w = horizontal_product(wm, wp, t, i);
                    std::string q = quote(A, w) + " = " + quote(A, wm) + " (-) " + quote(A, wp) + where;
                    auto cw = cuts(w), cm = cuts(wm), cp = cuts(wp);
                    auto combine = [&](auto keep_m, auto keep_p) {
                        WordSum out;
                        for (const auto& x : cm) {
                            if (!keep_m(x)) continue;
                            for (const auto& y : cp) {
                                if (!keep_p(y)) continue;
                                Exchange e = exchange(type_of(x.right), type_of(y.right), t, i);
                                int ip = reindex({i}, e.s.translucent_set())[0];
                                Word right = horizontal_product(x.right, y.right, e.s, i);
                                Word left = horizontal_product(x.left, y.left, e.r, ip);
                                out[{left, right}] += 1;
                            }
                        }
                        return out;
                    };
                    auto any = [](const Cut&) { return true; };
                    auto with_min = [](const Cut& c) { return c.has_min; };
                    auto without_min = [](const Cut& c) { return !c.has_min; };
                    auto lhs = [&](auto keep) {
                        WordSum out;
                        for (const auto& c : cw)
                            if (keep(c)) out[{c.left, c.right}] += 1;
                        return out;
                    };
                    r.check(lhs(any) == combine(any, any), "coproduct of " + q + " is not the product of coproducts");
                    if (!has_opaque(w)) continue;
                    bool minus_first = has_opaque(wm);
                    WordSum prec_rhs = minus_first ? combine(with_min, any) : combine(any, with_min);
                    WordSum succ_rhs = minus_first ? combine(without_min, any) : combine(any, without_min);
                    r.check(lhs(with_min) == prec_rhs, "left half coproduct of " + q + " does not factor");
                    r.check(lhs(without_min) == succ_rhs, "right half coproduct of " + q + " does not factor");
                }
        }
    }
    return r;
}

SuiteResult verify_exponentials(int max_len, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "exponentials";
    Alphabet A = alphabet_2l2r();
    std::mt19937_64 rng(seed);
    auto complete = all_words(A, max_len, true);
    Table tk = random_table(complete, rng);
    Functional k(Kind::lie_interval, tk);
    Functional kf(Kind::lie_full, tk);
    Functional mp = exp_prec(k, A, max_len);
    Functional ms = exp_succ(k, A, max_len);
    Functional mst = exp_star(k, A, max_len);
    Functional mf = exp_full(kf, A, max_len);
    Functional lg = log_star(mst, A, max_len);
    for (const auto& w : complete) {
        if (w.empty()) continue;
        std::string q = quote(A, w);
        Rational o;
        o = oracle_sum(k, w, BipartitionClass::shaded_nc);
        r.check(mp.eval(w) == o, "exp_prec != shaded noncrossing sum on " + q + ": " + show(mp.eval(w), o));
        o = oracle_sum(k, w, BipartitionClass::interval);
        r.check(ms.eval(w) == o, "exp_succ != interval sum on " + q + ": " + show(ms.eval(w), o));
        o = oracle_sum(k, w, BipartitionClass::monotone);
        r.check(mst.eval(w) == o, "exp_star != monotone sum on " + q + ": " + show(mst.eval(w), o));
        o = oracle_sum(kf, w, BipartitionClass::all);
        r.check(mf.eval(w) == o, "exp_full != all-partition sum on " + q + ": " + show(mf.eval(w), o));
        r.check(lg.eval(w) == k.eval(w), "log_star(exp_star(m)) != m on " + q);
    }
    MomentData m{A, random_table(complete, rng)};
    m.moments[Word{}] = 1;
    ExponentialReport rep = check_against_exponentials(m, max_len);
    for (const auto& e : rep.entries)
        r.check(e.ok, "moments differ from the exponentials of their cumulants on " + quote(A, e.word) +
                          ": moment " + to_string(e.moment) + ", prec " + to_string(e.via_prec) + ", succ " +
                          to_string(e.via_succ) + ", star " + to_string(e.via_star));
    return r;
}

SuiteResult verify_prelie(int max_len, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "prelie";
    Alphabet A = alphabet_1l1r();
    std::mt19937_64 rng(seed);
    auto words = all_words(A, max_len, false);
    auto complete = all_words(A, max_len, true);
    Functional ff(Kind::lie_full, random_table(complete, rng));
    Functional gf(Kind::lie_full, random_table(complete, rng));
    Functional fi(Kind::lie_interval, random_table(complete, rng));
    Functional gi(Kind::lie_interval, random_table(complete, rng));
    Functional hi(Kind::lie_interval, random_table(complete, rng));
    auto pl = [&](const Functional& a, const Functional& b) {
        return Functional(Kind::generic, tabulate([&](const Word& w) { return prelie_eval(a, b, w); }, words));
    };
    Functional fg = pl(fi, gi), fh = pl(fi, hi), gh = pl(gi, hi), hg = pl(hi, gi);
    for (const auto& w : words) {
        std::string q = quote(A, w);
        r.check(prelie_eval(ff, gf, w) == 0, "preLie product of lie_full functionals is nonzero on " + q);
        Rational v = prelie_eval(fi, gi, w), c = prelie_interval_formula(fi, gi, w);
        r.check(v == c, "preLie product differs from the interval formula on " + q + ": " + show(v, c));
        Rational left = prelie_eval(fg, hi, w) - prelie_eval(fi, gh, w);
        Rational right = prelie_eval(fh, gi, w) - prelie_eval(fi, hg, w);
        r.check(left == right, "preLie associator is not symmetric on " + q);
    }
    return r;
}

SuiteResult verify_roundtrip(int max_len, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "roundtrip";
    Alphabet A = alphabet_2l2r();
    std::mt19937_64 rng(seed);
    MomentData m{A, random_table(all_words(A, max_len, true), rng)};
    m.moments[Word{}] = 1;
    for (Family f : {Family::bifree, Family::biboolean, Family::bimonotone}) {
        MomentData back = cumulants_to_moments(moments_to_cumulants(m, f, max_len), max_len);
        bool same = back.moments == m.moments;
        std::string where;
        if (!same)
            for (const auto& [w, v] : m.moments)
                if (back.moments.at(w) != v) {
                    where = quote(A, w) + ": " + show(back.moments.at(w), v);
                    break;
                }
        r.check(same, family_name(f) + " roundtrip changes the moment of " + where);
    }
    return r;
}

SuiteResult verify_single_faced(int max_len, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "single_faced";
    Alphabet A = Alphabet::parse("a:L,b:L");
    std::mt19937_64 rng(seed);
    MomentData m{A, random_table(all_words(A, max_len, true), rng)};
    m.moments[Word{}] = 1;
    const std::pair<Family, oracle::Scheme> pairs[] = {{Family::bifree, oracle::Scheme::free},
                                                       {Family::biboolean, oracle::Scheme::boolean},
                                                       {Family::bimonotone, oracle::Scheme::monotone}};
    for (auto [fam, scheme] : pairs) {
        CumulantData c = moments_to_cumulants(m, fam, max_len);
        oracle::Values expected = oracle::cumulants(m.moments, A, scheme, max_len);
        for (const auto& [w, v] : expected)
            r.check(c.values.at(w) == v, family_name(fam) + " cumulant of " + quote(A, w) +
                                             " differs from the one-faced oracle: " + show(c.values.at(w), v));
        oracle::Values back = oracle::moments(expected, A, scheme, max_len);
        for (const auto& [w, v] : m.moments)
            r.check(back.at(w) == v, "one-faced oracle roundtrip fails on " + quote(A, w));
    }
    return r;
}

}  // namespace bifc
