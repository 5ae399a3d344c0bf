#pragma once

#include "bifc/bipartition.hpp"
#include "bifc/cumulants.hpp"

#include <string>
#include <vector>

namespace bifc {

// {"type": "ALPHA,MASK", "blocks": [[...], ...], "order": [...]}; "order"
// holds 0-based indices into "blocks" and is omitted when empty.
std::string bipartitions_to_json(const std::vector<Bipartition>& list);
std::string bipartitions_to_json(const std::vector<LabeledBipartition>& list);
std::vector<LabeledBipartition> bipartitions_from_json(const std::string& text);

// {"variables": {"a": "L", ...}, "moments": {"": "1", "a b": "3/2", ...}}
// Variables get ids in key order. Values are "p/q" strings or integers.
MomentData moments_from_json(const std::string& text);
std::string moments_to_json(const MomentData& m);

// Same layout with "family" and the table under "cumulants".
CumulantData cumulants_from_json(const std::string& text);
std::string cumulants_to_json(const CumulantData& c);

// Longest word length in the table (0 for an empty table).
int longest_word(const Table& t);

}  // namespace bifc
