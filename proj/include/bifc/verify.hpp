#pragma once

#include "bifc/functional.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bifc {

struct SuiteResult {
    std::string suite;
    bool ok = true;
    std::size_t checks = 0;
    std::string counterexample;  // first failure, empty when ok

    // Records one check; keeps the first failure message.
    void check(bool passed, const std::string& what);
};

std::vector<std::string> suite_names();
// Dispatches on the suite name; std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, int max_len, std::uint64_t seed);

// coDendriform relations, coassociativity, conilpotency on all incomplete
// words up to max_len over one left and one right variable.
SuiteResult verify_codendriform(int max_len);
// Dendriform relations, star associativity and counit laws for random
// generic functionals vanishing on placeholder-only words.
SuiteResult verify_dendriform(int max_len, std::uint64_t seed);
// Exchange construction (recomposition, both associativity shapes) and the
// compatibility of the coproduct and its halves with the horizontal product,
// for all translucent words of length up to max_len.
SuiteResult verify_exchange(int max_len);
// Exponentials against bipartition sums, log/exp inverse, and the moment
// check, on two left and two right variables.
SuiteResult verify_exponentials(int max_len, std::uint64_t seed);
// preLie: vanishing on lie_full pairs, interval closed form, preLie identity.
SuiteResult verify_prelie(int max_len, std::uint64_t seed);
// moments -> cumulants -> moments for every family.
SuiteResult verify_roundtrip(int max_len, std::uint64_t seed);
// Left-only inputs against the one-faced oracle.
SuiteResult verify_single_faced(int max_len, std::uint64_t seed);

// Test-data helpers.
Alphabet alphabet_1l1r();  // a:L, b:R
Alphabet alphabet_2l2r();  // a:L, b:L, c:R, d:R
Rational random_rational(std::mt19937_64& rng);  // p/q, p in [-5,5], q in [1,4]
Table random_table(const std::vector<Word>& words, std::mt19937_64& rng);
std::vector<TranslucentWord> all_translucent_words(int max_len);

}  // namespace bifc
