#pragma once

#include "bifc/translucent.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bifc {

// A partition of the opaque positions [type]_1. The translucent positions
// form an implicit extra block that is never stored.
struct Bipartition {
    TranslucentWord type;
    std::vector<PosSet> blocks;  // each sorted; blocks sorted by standard-order minimum

    auto operator<=>(const Bipartition&) const = default;
};

// Validates disjointness and coverage of [type]_1 and canonicalizes order.
Bipartition make_bipartition(const TranslucentWord& type, std::vector<PosSet> blocks);

// order[k] is the index (into base.blocks) of the block carrying label k+1.
struct LabeledBipartition {
    Bipartition base;
    std::vector<int> order;

    auto operator<=>(const LabeledBipartition&) const = default;
};

enum class BipartitionClass { all, nc, interval, monotone, shaded_nc };

BipartitionClass parse_class(const std::string& name);
std::string class_name(BipartitionClass c);

bool is_noncrossing(const Bipartition& pi);
bool is_interval(const Bipartition& pi);
bool is_monotone(const LabeledBipartition& pi);
// Requires is_noncrossing(pi).
bool is_shaded(const Bipartition& pi);

// Thrown when an enumeration would exceed the opaque-size guardrail.
class EnumerationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Maximum |[t]_1| accepted by enumerate: 14, or BIFC_MAX_ENUM (at most 16).
int enumeration_limit();

// Unlabeled classes (all, nc, interval, shaded_nc), deterministic order.
std::vector<Bipartition> enumerate(const TranslucentWord& t, BipartitionClass c);
// Labeled monotone bipartitions, grouped by base partition in enumerate(nc) order.
std::vector<LabeledBipartition> enumerate_monotone(const TranslucentWord& t);
// The admissible labelings of a noncrossing pi (empty if none).
std::vector<std::vector<int>> monotone_labelings(const Bipartition& pi);
std::uint64_t count_monotone_labelings(const Bipartition& pi);

// Blocks of rho are placed on [type sigma]_0, blocks of sigma stay put.
Bipartition compose_bipartitions(const Bipartition& rho, const Bipartition& sigma);

// Bipartition of restrict(type, I): blocks intersected with I and re-indexed.
Bipartition restrict_bipartition(const Bipartition& pi, const PosSet& I);

// Keeps the blocks whose indices are listed in keep; the others become
// translucent.
Bipartition translucidate_blocks(const Bipartition& pi, const std::vector<int>& keep);

std::string to_string(const Bipartition& pi);

}  // namespace bifc
