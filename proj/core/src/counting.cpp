#include "allmatch/counting.hpp"

#include "allmatch/errors.hpp"

#include <string>
#include <vector>

namespace allmatch {

namespace detail {
bool inject_am_dp_fault = false;
}

namespace {

using u128 = unsigned __int128;

ExactCount u128_to_mpz(u128 v) {
    ExactCount hi(static_cast<unsigned long>(v >> 64));
    ExactCount r;
    mpz_mul_2exp(r.get_mpz_t(), hi.get_mpz_t(), 64);
    r += ExactCount(static_cast<unsigned long>(v));
    return r;
}

void require_wide_enough(const ZeroOneMatrix& a) {
    if (a.rows() > a.cols())
        throw ValidationError("AM requires m <= n, got " + std::to_string(a.rows()) +
                              "x" + std::to_string(a.cols()));
}

void require_dp_width(const ZeroOneMatrix& a) {
    if (a.cols() > subset_dp_max_cols)
        throw CapabilityError("subset DP limited to " +
                              std::to_string(subset_dp_max_cols) +
                              " columns (got " + std::to_string(a.cols()) +
                              "); use am_recursive or sampling");
}

// f[S] = matchings of the processed rows using exactly column set S. Each
// cell is bounded by AM(A) <= (n+1)^m <= 25^24 < 2^112, so u128 is exact.
std::vector<u128> run_subset_dp(const ZeroOneMatrix& a) {
    const int n = a.cols();
    const std::size_t states = std::size_t{1} << n;
    std::vector<u128> f(states, 0);
    f[0] = 1;
    for (int i = 1; i <= a.rows(); ++i) {
        const std::uint64_t row = a.row_bits(i);
        for (std::size_t s = states; s-- > 1;) {
            std::uint64_t probe = static_cast<std::uint64_t>(s) & row;
            u128 acc = 0;
            while (probe) {
                const std::uint64_t bit = probe & (0 - probe);
                acc += f[s ^ bit];
                probe ^= bit;
            }
            f[s] += acc;
        }
    }
    return f;
}

} // namespace

ExactCount MatchingVector::total() const {
    ExactCount t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

ExactCount am_recursive(const ZeroOneMatrix& a) {
    require_wide_enough(a);
    if (a.rows() == 0) return 1;
    ExactCount total = am_recursive(remove_first_row(a));
    for (int j : first_row_support(a).columns())
        total += am_recursive(remove_first_row_and_column(a, j));
    return total;
}

ExactCount am_dp(const ZeroOneMatrix& a) {
    require_wide_enough(a);
    require_dp_width(a);
    const auto f = run_subset_dp(a);
    u128 total = 0;
    for (u128 v : f) total += v; // total = AM <= (n+1)^m < 2^117, no overflow
    ExactCount r = u128_to_mpz(total);
    if (detail::inject_am_dp_fault) r += 1;
    return r;
}

MatchingVector matching_vector(const ZeroOneMatrix& a) {
    require_wide_enough(a);
    require_dp_width(a);
    const auto f = run_subset_dp(a);
    const int kmax = std::min(a.rows(), a.cols());
    std::vector<u128> by_size(static_cast<std::size_t>(kmax) + 1, 0);
    for (std::size_t s = 0; s < f.size(); ++s)
        if (f[s] != 0) by_size[static_cast<std::size_t>(__builtin_popcountll(s))] += f[s];
    MatchingVector mv;
    mv.counts.reserve(by_size.size());
    for (u128 v : by_size) mv.counts.push_back(u128_to_mpz(v));
    return mv;
}

ExactCount permanent(const ZeroOneMatrix& a) {
    if (!a.is_square())
        throw ValidationError("permanent requires a square matrix, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const int n = a.rows();
    if (n > permanent_max_n)
        throw CapabilityError("permanent limited to n <= " +
                              std::to_string(permanent_max_n) +
                              " (got " + std::to_string(n) + ")");
    if (n == 0) return 1;

    // Ryser: per(A) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i rowsum_i(S).
    // All arithmetic wraps mod 2^128; the true value satisfies
    // 0 <= per(A) <= n! < 2^128 for n <= 30, so the wrapped total is exact.
    std::vector<std::uint32_t> rowsum(static_cast<std::size_t>(n), 0);
    u128 total = 0;
    std::uint64_t gray = 0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < end; ++k) {
        const int j = __builtin_ctzll(k);
        const std::uint64_t bit = std::uint64_t{1} << j;
        gray ^= bit;
        const bool added = gray & bit;
        for (int i = 0; i < n; ++i) {
            const std::uint32_t aij = (a.row_bits(i + 1) >> j) & 1u;
            rowsum[static_cast<std::size_t>(i)] += added ? aij : -aij;
        }
        u128 prod = 1;
        for (int i = 0; i < n && prod != 0; ++i)
            prod *= rowsum[static_cast<std::size_t>(i)];
        // prod == 0 only from a genuinely zero row sum: the 2-adic valuation
        // of a nonzero product of factors <= 30 is at most 30*4 < 128.
        if ((n - __builtin_popcountll(gray)) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return u128_to_mpz(total);
}

Corollary3Result verify_corollary3(const ZeroOneMatrix& a) {
    if (!a.is_square())
        throw ValidationError("verify_corollary3 requires a square matrix");
    if (a.rows() > 12)
        throw CapabilityError("verify_corollary3 limited to n <= 12 (2n x 2n permanent)");
    Corollary3Result r;
    r.am = am_dp(a);
    r.lhs = factorial(static_cast<unsigned>(a.rows())) * r.am;
    r.per_ext = permanent(extend_transform(a));
    r.ok = (r.lhs == r.per_ext);
    return r;
}

ExactCount fit_count(unsigned n, unsigned p) {
    if (p > n)
        throw ValidationError("fit_count requires p <= n, got p = " + std::to_string(p) +
                              ", n = " + std::to_string(n));
    ExactCount total = 0;
    for (unsigned r = 0; r <= p; ++r) {
        ExactCount term = binomial(static_cast<unsigned long>(p), r) *
                          arrangements(n - r, p - r);
        if (r % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace allmatch
