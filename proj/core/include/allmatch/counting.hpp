#pragma once

#include "allmatch/exact.hpp"
#include "allmatch/matrix.hpp"

#include <vector>

namespace allmatch {

// counts[k] = #S_k, the number of k-matchings; counts[0] = 1 always.
struct MatchingVector {
    std::vector<ExactCount> counts;

    ExactCount total() const;
};

// Widest matrix the subset DP accepts (2^n states of 16 bytes each; n = 24
// is 256 MiB). Every DP cell is at most AM(A) <= (n+1)^m < 2^116 at this
// size, so unsigned 128-bit cells cannot overflow.
inline constexpr int subset_dp_max_cols = 24;

// Largest square matrix `permanent` accepts. Ryser runs in wrapping 128-bit
// arithmetic, exact because per(A) <= 30! < 2^128.
inline constexpr int permanent_max_n = 30;

// AM by the literal recursion AM(A) = AM(A_10) + sum_j a_1j AM(A_1j),
// AM(empty) = 1. Exponential; the reference oracle, sized for m <= ~12.
ExactCount am_recursive(const ZeroOneMatrix& a);

// AM by subset DP over surviving-column sets, O(m 2^n n).
ExactCount am_dp(const ZeroOneMatrix& a);

// All #S_k at once, same DP grouped by subset size.
MatchingVector matching_vector(const ZeroOneMatrix& a);

// per(A), Ryser inclusion-exclusion with Gray-code column updates.
ExactCount permanent(const ZeroOneMatrix& a);

struct Corollary3Result {
    bool ok;
    ExactCount am;        // AM(A)
    ExactCount lhs;       // n! * AM(A)
    ExactCount per_ext;   // per([[A,I],[1,1]])
};

// Checks n! * AM(A) = per(extend_transform(A)); n <= 12 keeps the 2n x 2n
// permanent cheap.
Corollary3Result verify_corollary3(const ZeroOneMatrix& a);

// F_n(p) = sum_{r=0}^{p} (-1)^r C(p,r) P(n-r, p-r): injections of p labeled
// letters into n envelopes with no letter in its mother envelope.
ExactCount fit_count(unsigned n, unsigned p);

namespace detail {
// Test hook: when set, am_dp returns a deliberately wrong value so the
// verification harness can demonstrate that it catches a corrupted build.
extern bool inject_am_dp_fault;
}

} // namespace allmatch
