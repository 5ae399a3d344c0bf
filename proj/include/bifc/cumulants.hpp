#pragma once

#include "bifc/functional.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bifc {

enum class Family { bifree, biboolean, bimonotone };

std::string family_name(Family f);
Family parse_family(const std::string& name);
// nc, interval, monotone
BipartitionClass family_class(Family f);

// Moments of complete words; the empty word, if present, must map to 1.
struct MomentData {
    Alphabet alphabet;
    Table moments;
};

// Cumulants of nonempty complete words.
struct CumulantData {
    Alphabet alphabet;
    Family family = Family::bifree;
    Table values;
};

// phi(w) = sum over the family's bipartitions of (alpha_w, 1...1) of
// weight * prod_V c(w|V), for every complete word up to max_len (the empty
// word gets 1). Missing cumulants raise std::invalid_argument.
MomentData cumulants_to_moments(const CumulantData& c, int max_len);
// Triangular inverse of cumulants_to_moments.
CumulantData moments_to_cumulants(const MomentData& m, Family family, int max_len);

struct ExponentialCheck {
    Word word;
    Rational moment;
    Rational via_prec;  // exp_prec of the bifree cumulants
    Rational via_succ;  // exp_succ of the biBoolean cumulants
    Rational via_star;  // exp_star of the bimonotone cumulants
    bool ok = false;
};

struct ExponentialReport {
    std::vector<ExponentialCheck> entries;
    bool ok = true;
};

ExponentialReport check_against_exponentials(const MomentData& m, int max_len);

// Mixed cumulants: words using variables from both groups. Reports the
// longest one (first in all_words order on ties) with nonzero cumulant.
struct MixedDiagnostic {
    bool vanishing = true;
    std::optional<Word> witness;
    Rational value;
};

MixedDiagnostic mixed_cumulant_diagnostic(const MomentData& m, Family family, const std::vector<int>& group_a,
                                          const std::vector<int>& group_b, int max_len);

}  // namespace bifc
