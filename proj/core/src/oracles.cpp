#include "allmatch/oracles.hpp"

#include "allmatch/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace allmatch {

namespace {

void count_assignments(const ZeroOneMatrix& a, int row, std::uint64_t used,
                       int size, std::vector<ExactCount>& counts) {
    if (row > a.rows()) {
        counts[static_cast<std::size_t>(size)] += 1;
        return;
    }
    count_assignments(a, row + 1, used, size, counts); // row left unmatched
    for (int j = 1; j <= a.cols(); ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (j - 1);
        if ((used & bit) == 0 && a.at(row, j) == 1)
            count_assignments(a, row + 1, used | bit, size + 1, counts);
    }
}

} // namespace

MatchingVector brute_force_matching_vector(const ZeroOneMatrix& a) {
    MatchingVector mv;
    mv.counts.assign(static_cast<std::size_t>(std::min(a.rows(), a.cols())) + 1,
                     ExactCount(0));
    count_assignments(a, 1, 0, 0, mv.counts);
    return mv;
}

ExactCount brute_force_am(const ZeroOneMatrix& a) {
    return brute_force_matching_vector(a).total();
}

ExactCount brute_force_permanent(const ZeroOneMatrix& a) {
    if (!a.is_square())
        throw ValidationError("brute_force_permanent requires a square matrix");
    if (a.rows() > 10)
        throw CapabilityError("brute_force_permanent limited to n <= 10");
    const int n = a.rows();
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 1);
    ExactCount total = 0;
    do {
        int prod = 1;
        for (int i = 1; i <= n && prod; ++i)
            prod *= a.at(i, cols[static_cast<std::size_t>(i - 1)]);
        total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

namespace {

void count_fits(unsigned n, unsigned p, unsigned letter, std::uint64_t used,
                ExactCount& total) {
    if (letter == p) {
        total += 1;
        return;
    }
    // letter k's mother envelope is envelope k
    for (unsigned env = 0; env < n; ++env) {
        if (env == letter) continue;
        const std::uint64_t bit = std::uint64_t{1} << env;
        if (used & bit) continue;
        count_fits(n, p, letter + 1, used | bit, total);
    }
}

} // namespace

ExactCount brute_force_fit_count(unsigned n, unsigned p) {
    if (p > n) throw ValidationError("brute_force_fit_count requires p <= n");
    if (n > 12) throw CapabilityError("brute_force_fit_count limited to n <= 12");
    ExactCount total = 0;
    count_fits(n, p, 0, 0, total);
    return total;
}

} // namespace allmatch
