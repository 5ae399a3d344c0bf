#include "bifc/cumulants.hpp"

#include <algorithm>
#include <stdexcept>

namespace bifc {

std::string family_name(Family f) {
    switch (f) {
        case Family::bifree: return "bifree";
        case Family::biboolean: return "biboolean";
        case Family::bimonotone: return "bimonotone";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "bifree") return Family::bifree;
    if (name == "biboolean") return Family::biboolean;
    if (name == "bimonotone") return Family::bimonotone;
    throw std::invalid_argument("unknown cumulant family \"" + name + "\"");
}

BipartitionClass family_class(Family f) {
    switch (f) {
        case Family::bifree: return BipartitionClass::nc;
        case Family::biboolean: return BipartitionClass::interval;
        case Family::bimonotone: return BipartitionClass::monotone;
    }
    return BipartitionClass::nc;
}

namespace {

const Rational& need(const Table& t, const Word& w, const Alphabet& A, const char* what) {
    auto it = t.find(w);
    if (it == t.end()) throw std::invalid_argument(std::string("missing ") + what + " entry for \"" + to_string(A, w) + "\"");
    return it->second;
}

// sum over non-trivial (skip_one_block) or all bipartitions
Rational partition_sum(const Word& w, Family family, const Table& c, const Alphabet& A, bool skip_one_block) {
    Rational sum = 0;
    for (const auto& wb : weighted_class(TranslucentWord::opaque(type_of(w).alpha), family_class(family))) {
        if (skip_one_block && wb.blocks.size() == 1) continue;
        Rational prod = wb.weight;
        for (const auto& V : wb.blocks) {
            prod *= need(c, restrict_word(w, V), A, "cumulant");
            if (prod == 0) break;
        }
        sum += prod;
    }
    return sum;
}

}  // namespace

MomentData cumulants_to_moments(const CumulantData& c, int max_len) {
    MomentData m{c.alphabet, {}};
    m.moments.emplace(Word{}, 1);
    for (const auto& w : all_words(c.alphabet, max_len, true))
        if (!w.empty()) m.moments.emplace(w, partition_sum(w, c.family, c.values, c.alphabet, false));
    return m;
}

CumulantData moments_to_cumulants(const MomentData& m, Family family, int max_len) {
    auto unit = m.moments.find(Word{});
    if (unit != m.moments.end() && unit->second != 1)
        throw std::invalid_argument("moment of the empty word must be 1");
    CumulantData c{m.alphabet, family, {}};
    // all_words lists shorter words first, so every proper subword is known
    for (const auto& w : all_words(m.alphabet, max_len, true)) {
        if (w.empty()) continue;
        Rational v = need(m.moments, w, m.alphabet, "moment") -
                     partition_sum(w, family, c.values, m.alphabet, true);
        c.values.emplace(w, std::move(v));
    }
    return c;
}

ExponentialReport check_against_exponentials(const MomentData& m, int max_len) {
    const Alphabet& A = m.alphabet;
    auto lie = [&](Family f) {
        return Functional(Kind::lie_interval, moments_to_cumulants(m, f, max_len).values);
    };
    Functional prec = exp_prec(lie(Family::bifree), A, max_len);
    Functional succ = exp_succ(lie(Family::biboolean), A, max_len);
    Functional star = exp_star(lie(Family::bimonotone), A, max_len);
    ExponentialReport report;
    for (const auto& w : all_words(A, max_len, true)) {
        if (w.empty()) continue;
        ExponentialCheck e;
        e.word = w;
        e.moment = need(m.moments, w, A, "moment");
        e.via_prec = prec.eval(w);
        e.via_succ = succ.eval(w);
        e.via_star = star.eval(w);
        e.ok = e.moment == e.via_prec && e.moment == e.via_succ && e.moment == e.via_star;
        report.ok = report.ok && e.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

MixedDiagnostic mixed_cumulant_diagnostic(const MomentData& m, Family family, const std::vector<int>& group_a,
                                          const std::vector<int>& group_b, int max_len) {
    for (int a : group_a)
        if (std::find(group_b.begin(), group_b.end(), a) != group_b.end())
            throw std::invalid_argument("variable groups must be disjoint");
    CumulantData c = moments_to_cumulants(m, family, max_len);
    auto in = [](const std::vector<int>& g, int v) { return std::find(g.begin(), g.end(), v) != g.end(); };
    MixedDiagnostic d;
    for (const auto& w : all_words(m.alphabet, max_len, true)) {
        bool has_a = false, has_b = false;
        for (const auto& l : w) {
            has_a = has_a || in(group_a, l.var);
            has_b = has_b || in(group_b, l.var);
        }
        if (!has_a || !has_b) continue;
        const Rational& v = c.values.at(w);
        if (v == 0) continue;
        if (!d.witness || w.size() > d.witness->size()) {
            d.vanishing = false;
            d.witness = w;
            d.value = v;
        }
    }
    return d;
}

}  // namespace bifc
