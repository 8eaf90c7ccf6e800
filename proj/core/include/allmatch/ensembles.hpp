#pragma once

#include "allmatch/exact.hpp"
#include "allmatch/matrix.hpp"
#include "allmatch/rng.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace allmatch {

enum class EnsembleKind { Bernoulli, FixedOnes, Exhaustive };

// A(m,n,p): i.i.d. Bernoulli entries. B(m,n)/G(m,n): FixedOnes, uniform over
// placements of exactly `ones` one-entries. Exhaustive: the uniform space of
// all 2^{mn} matrices (same enumeration as Bernoulli(1/2)).
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Exhaustive;
    int rows = 0;
    int cols = 0;
    ExactRational p;   // Bernoulli only, in [0,1]
    long ones = 0;     // FixedOnes only, in [0, rows*cols]

    long cells() const { return static_cast<long>(rows) * cols; }

    static EnsembleSpec bernoulli(int rows, int cols, ExactRational p);
    static EnsembleSpec fixed_ones(int rows, int cols, long ones);
    static EnsembleSpec exhaustive(int rows, int cols);
};

// {"kind":"bernoulli","p":"1/2","rows":m,"cols":n} /
// {"kind":"fixed_ones","ones":k,...} / {"kind":"exhaustive",...}.
// p must be a string rational or an integer; non-integer JSON numbers are
// rejected to keep the distribution exact.
nlohmann::json ensemble_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_from_json(const nlohmann::json& j);

// One draw. Bernoulli flips need p's denominator to fit in 64 bits.
ZeroOneMatrix sample(const EnsembleSpec& spec, SplitMix64& rng);

inline constexpr long default_enumeration_cap = 10'000'000;

// Streams every matrix of the ensemble once, in lexicographic order of the
// row-major flattened bit string. Bernoulli enumerates the same 2^{mn}
// support as Exhaustive (weights differ, see exhaustive_expectation).
class EnsembleEnumerator {
public:
    explicit EnsembleEnumerator(const EnsembleSpec& spec,
                                long cap = default_enumeration_cap);

    const ExactCount& total() const { return total_; }
    std::optional<ZeroOneMatrix> next();

private:
    EnsembleSpec spec_;
    ExactCount total_;
    ExactCount emitted_ = 0;
    std::uint64_t counter_ = 0;           // full-space walk
    std::vector<char> pattern_;           // FixedOnes walk
    bool pattern_done_ = false;
};

using StatFn = std::function<ExactRational(const ZeroOneMatrix&)>;

// Exact ensemble mean of f: matrices weighted by p^ones (1-p)^{cells-ones}
// for Bernoulli, uniformly otherwise.
ExactRational exhaustive_expectation(const EnsembleSpec& spec, const StatFn& f,
                                     long cap = default_enumeration_cap);

struct SampledExpectation {
    ExactRational mean;    // exact mean of the N sampled values
    double std_error;
    std::uint64_t n_samples;
};

SampledExpectation sampled_expectation(const EnsembleSpec& spec, const StatFn& f,
                                       std::uint64_t n_samples, std::uint64_t seed);

} // namespace allmatch
