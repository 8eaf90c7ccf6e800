#pragma once

#include <string>
#include <vector>

namespace allmatch {

enum class VerifyLevel { Quick, Full };

struct VerifyFailure {
    std::string invariant;
    std::string witness;
};

struct InvariantOutcome {
    std::string name;
    long cases = 0;
    bool passed = true;
};

struct VerifyResult {
    std::vector<InvariantOutcome> invariants;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Runs every module's invariant suite. Quick keeps exhaustive sweeps at
// n <= 3 and short sampling runs; Full extends to n <= 4 exhaustive and the
// n <= 40 closed-form range. Deterministic (fixed internal seeds).
VerifyResult run_verification(VerifyLevel level);

} // namespace allmatch
