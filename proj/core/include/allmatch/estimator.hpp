#pragma once

#include "allmatch/exact.hpp"
#include "allmatch/matrix.hpp"
#include "allmatch/rng.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace allmatch {

enum class Algorithm { RM, AMM };

const char* algorithm_name(Algorithm alg);
Algorithm parse_algorithm(const std::string& name); // "rm" | "amm"

// Exact accumulated sums of one sampling run. Derived statistics are the
// only place floating point appears.
struct SampleStats {
    Algorithm algorithm = Algorithm::AMM;
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 0;
    ExactCount sum;
    ExactCount sum_sq;

    ExactRational mean() const;

    // n_samples * sum_sq / sum^2; requires sum > 0.
    ExactRational empirical_critical_ratio() const;

    // Standard error of the mean from the unbiased sample variance; 0 when
    // n_samples < 2.
    double std_error() const;
};

// One RM sample: unbiased for per(A). Square matrices only; consumes one
// next_below per row, even when the choice is forced.
ExactCount rm_sample(const ZeroOneMatrix& a, SplitMix64& rng);

// One AMM sample: unbiased for AM(A). Requires m <= n; never returns 0.
ExactCount amm_sample(const ZeroOneMatrix& a, SplitMix64& rng);

// n_samples independent samples, sample i drawn from substream(seed, i).
// Exact sums, so the result is bit-identical for every worker count.
SampleStats run_batch(const ZeroOneMatrix& a, Algorithm alg,
                      std::uint64_t n_samples, std::uint64_t seed,
                      int workers = 1);

// E_sigma(X^2), exact, by the branch recursion memoized on
// (row, surviving columns). Integer-valued: each path contributes
// prob * value^2 = prod(q) over its branches.
ExactCount exact_second_moment(const ZeroOneMatrix& a, Algorithm alg);

// E_sigma(X^2) / E_sigma(X)^2 with the exact mean taken from am_dp (AMM) or
// permanent (RM). Throws UndefinedRatioError when the mean is 0 (RM on a
// matrix with zero permanent).
ExactRational critical_ratio_exact(const ZeroOneMatrix& a, Algorithm alg);

// Full coin-toss-space distribution: estimator value -> probability.
// Rational keys so that scaled distributions (Corollary 2) compare exactly.
using Distribution = std::map<ExactRational, ExactRational>;

// Enumerates every coin-toss path with exact branch probabilities. Oracle
// for the moment recursions; gated to m <= 6 rows (the Corollary 2 check
// needs the 2n x 2n extended matrix at n = 3).
inline constexpr int path_enum_max_rows = 6;
Distribution enumerate_distribution(const ZeroOneMatrix& a, Algorithm alg);

// Low-level form of the same enumeration: visit(value, probability) once
// per leaf. Same m <= 6 gate.
void for_each_path(const ZeroOneMatrix& a, Algorithm alg,
                   const std::function<void(const ExactCount&, const ExactRational&)>& visit);

// Divides every value by `divisor` (Corollary 2 uses n!).
Distribution scale_distribution(const Distribution& d, const ExactCount& divisor);

ExactRational distribution_mean(const Distribution& d);
ExactRational distribution_second_moment(const Distribution& d);

} // namespace allmatch
