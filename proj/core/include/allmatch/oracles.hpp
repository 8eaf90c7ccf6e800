#pragma once

#include "allmatch/counting.hpp"
#include "allmatch/exact.hpp"
#include "allmatch/matrix.hpp"

namespace allmatch {

// Brute-force ground truths, written independently of the production
// algorithms so the two can oracle each other in tests. Exponential.

// Counts matchings of every size by enumerating partial injective
// row -> column assignments directly.
MatchingVector brute_force_matching_vector(const ZeroOneMatrix& a);

ExactCount brute_force_am(const ZeroOneMatrix& a);

// Permutation expansion of Eq. (1); n <= 10.
ExactCount brute_force_permanent(const ZeroOneMatrix& a);

// Injections of p labeled letters into n envelopes avoiding every mother
// envelope, counted by direct enumeration; small n only.
ExactCount brute_force_fit_count(unsigned n, unsigned p);

} // namespace allmatch
