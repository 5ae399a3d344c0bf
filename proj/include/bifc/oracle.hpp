#pragma once

// Independent brute-force reference: plain set partitions of {1..n} in
// natural order, and the one-faced moment-cumulant relations on words over
// a left-only alphabet. Shares no code with the bipartition module.

#include "bifc/rational.hpp"
#include "bifc/words.hpp"

#include <unordered_map>
#include <vector>

namespace bifc::oracle {

using Partition = std::vector<std::vector<int>>;  // blocks sorted, by minimum

// All Bell(n) set partitions of {1..n}.
std::vector<Partition> set_partitions(int n);

bool noncrossing(const Partition& p);
bool interval(const Partition& p);
// Number of labelings 1..|p| with inner (nested) blocks higher; brute force.
long long monotone_labelings(const Partition& p);

enum class Scheme { free, boolean, monotone };

using Values = std::unordered_map<Word, Rational, WordHash>;

// Cumulants from moments on all words over A up to max_len; every variable
// of A must be left-sided.
Values cumulants(const Values& moments, const Alphabet& A, Scheme s, int max_len);
Values moments(const Values& cumulants, const Alphabet& A, Scheme s, int max_len);

}  // namespace bifc::oracle
