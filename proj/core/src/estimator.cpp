#include "allmatch/estimator.hpp"

#include "allmatch/counting.hpp"
#include "allmatch/errors.hpp"

#include <cmath>
#include <thread>
#include <unordered_map>
#include <vector>

namespace allmatch {

namespace {

void require_rm_input(const ZeroOneMatrix& a) {
    if (!a.is_square())
        throw ValidationError("RM requires a square matrix, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_amm_input(const ZeroOneMatrix& a) {
    if (a.rows() > a.cols())
        throw ValidationError("AMM requires m <= n, got " + std::to_string(a.rows()) +
                              "x" + std::to_string(a.cols()));
}

std::uint64_t nth_bit(std::uint64_t mask, int k) {
    while (k-- > 0) mask &= mask - 1;
    return mask & (0 - mask);
}

} // namespace

const char* algorithm_name(Algorithm alg) {
    return alg == Algorithm::RM ? "rm" : "amm";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "rm" || name == "RM") return Algorithm::RM;
    if (name == "amm" || name == "AMM") return Algorithm::AMM;
    throw ValidationError("unknown algorithm '" + name + "', expected rm or amm");
}

ExactRational SampleStats::mean() const {
    if (n_samples == 0) throw ValidationError("mean of empty batch");
    return make_rational(sum, ExactCount(static_cast<unsigned long>(n_samples)));
}

ExactRational SampleStats::empirical_critical_ratio() const {
    if (sum == 0)
        throw UndefinedRatioError("empirical critical ratio undefined: sample sum is 0");
    return make_rational(ExactCount(static_cast<unsigned long>(n_samples)) * sum_sq,
                         sum * sum);
}

double SampleStats::std_error() const {
    if (n_samples < 2) return 0.0;
    const ExactCount n(static_cast<unsigned long>(n_samples));
    // s^2 = (sum_sq - sum^2/n) / (n-1); se = sqrt(s^2 / n)
    ExactRational s2 = make_rational(n * sum_sq - sum * sum, n * n * (n - 1));
    double v = to_double(s2);
    return v > 0 ? std::sqrt(v) : 0.0;
}

ExactCount rm_sample(const ZeroOneMatrix& a, SplitMix64& rng) {
    require_rm_input(a);
    const int n = a.rows();
    std::uint64_t surviving = (n == 64) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << n) - 1);
    ExactCount y = 1;
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t w = a.row_bits(i) & surviving;
        const int size = __builtin_popcountll(w);
        if (size == 0) return 0;
        const int pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size)));
        surviving ^= nth_bit(w, pick);
        y *= size;
    }
    return y;
}

ExactCount amm_sample(const ZeroOneMatrix& a, SplitMix64& rng) {
    require_amm_input(a);
    const int n = a.cols();
    std::uint64_t surviving = (n == 64) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << n) - 1);
    ExactCount y = 1;
    for (int i = 1; i <= a.rows(); ++i) {
        const std::uint64_t w = a.row_bits(i) & surviving;
        const int q = __builtin_popcountll(w) + 1; // support plus the skip option
        const int pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q)));
        if (pick < q - 1) surviving ^= nth_bit(w, pick);
        y *= q;
    }
    return y;
}

SampleStats run_batch(const ZeroOneMatrix& a, Algorithm alg,
                      std::uint64_t n_samples, std::uint64_t seed, int workers) {
    if (n_samples == 0) throw ValidationError("run_batch requires n_samples >= 1");
    if (workers < 1) throw ValidationError("run_batch requires workers >= 1");
    if (alg == Algorithm::RM) require_rm_input(a); else require_amm_input(a);

    const int w = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(workers), n_samples));
    std::vector<ExactCount> sums(static_cast<std::size_t>(w));
    std::vector<ExactCount> sumsqs(static_cast<std::size_t>(w));

    auto work = [&](int t) {
        const std::uint64_t lo = n_samples * static_cast<std::uint64_t>(t) /
                                 static_cast<std::uint64_t>(w);
        const std::uint64_t hi = n_samples * static_cast<std::uint64_t>(t + 1) /
                                 static_cast<std::uint64_t>(w);
        ExactCount sum = 0, sumsq = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            SplitMix64 rng = substream(seed, idx);
            ExactCount v = (alg == Algorithm::RM) ? rm_sample(a, rng)
                                                  : amm_sample(a, rng);
            sum += v;
            sumsq += v * v;
        }
        sums[static_cast<std::size_t>(t)] = std::move(sum);
        sumsqs[static_cast<std::size_t>(t)] = std::move(sumsq);
    };

    if (w == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(w));
        for (int t = 0; t < w; ++t) threads.emplace_back(work, t);
        for (auto& th : threads) th.join();
    }

    SampleStats stats;
    stats.algorithm = alg;
    stats.seed = seed;
    stats.n_samples = n_samples;
    stats.sum = 0;
    stats.sum_sq = 0;
    for (int t = 0; t < w; ++t) {
        stats.sum += sums[static_cast<std::size_t>(t)];
        stats.sum_sq += sumsqs[static_cast<std::size_t>(t)];
    }
    return stats;
}

namespace {

// E(X^2) restricted to rows i.. with surviving column set `mask`:
//   RM:  0 on empty W, else |W| * sum_j E(X^2 after picking j)
//   AMM: (|W|+1) * (E(X^2 after skip) + sum_j E(X^2 after picking j))
class SecondMomentDP {
public:
    SecondMomentDP(const ZeroOneMatrix& a, Algorithm alg) : a_(a), alg_(alg),
        memo_(static_cast<std::size_t>(a.rows()) + 1) {}

    ExactCount eval(int i, std::uint64_t mask) {
        if (i > a_.rows()) return 1;
        auto& row_memo = memo_[static_cast<std::size_t>(i)];
        if (auto it = row_memo.find(mask); it != row_memo.end()) return it->second;
        const std::uint64_t w = a_.row_bits(i) & mask;
        ExactCount acc = 0;
        if (alg_ == Algorithm::AMM) acc = eval(i + 1, mask);
        std::uint64_t probe = w;
        while (probe) {
            const std::uint64_t bit = probe & (0 - probe);
            acc += eval(i + 1, mask ^ bit);
            probe ^= bit;
        }
        const int q = __builtin_popcountll(w) + (alg_ == Algorithm::AMM ? 1 : 0);
        ExactCount result = ExactCount(q) * acc;
        row_memo.emplace(mask, result);
        return result;
    }

private:
    const ZeroOneMatrix& a_;
    Algorithm alg_;
    std::vector<std::unordered_map<std::uint64_t, ExactCount>> memo_;
};

} // namespace

ExactCount exact_second_moment(const ZeroOneMatrix& a, Algorithm alg) {
    if (alg == Algorithm::RM) require_rm_input(a); else require_amm_input(a);
    if (a.cols() > subset_dp_max_cols)
        throw CapabilityError("exact_second_moment limited to " +
                              std::to_string(subset_dp_max_cols) + " columns (got " +
                              std::to_string(a.cols()) + ")");
    const int n = a.cols();
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << n) - 1);
    SecondMomentDP dp(a, alg);
    return dp.eval(1, full);
}

ExactRational critical_ratio_exact(const ZeroOneMatrix& a, Algorithm alg) {
    const ExactCount mean = (alg == Algorithm::RM) ? permanent(a) : am_dp(a);
    if (mean == 0)
        throw UndefinedRatioError(
            "critical ratio undefined: permanent is 0, so E(Y) = 0");
    return make_rational(exact_second_moment(a, alg), mean * mean);
}

namespace {

using PathVisitor = std::function<void(const ExactCount&, const ExactRational&)>;

void walk_paths(const ZeroOneMatrix& a, Algorithm alg, int i, std::uint64_t mask,
                const ExactCount& value, const ExactRational& prob,
                const PathVisitor& visit) {
    if (i > a.rows()) {
        visit(value, prob);
        return;
    }
    const std::uint64_t w = a.row_bits(i) & mask;
    const int support = __builtin_popcountll(w);
    if (alg == Algorithm::RM && support == 0) {
        visit(0, prob);
        return;
    }
    const int q = support + (alg == Algorithm::AMM ? 1 : 0);
    const ExactCount next_value = value * ExactCount(q);
    const ExactRational branch_prob = prob / q;
    if (alg == Algorithm::AMM)
        walk_paths(a, alg, i + 1, mask, next_value, branch_prob, visit);
    std::uint64_t probe = w;
    while (probe) {
        const std::uint64_t bit = probe & (0 - probe);
        walk_paths(a, alg, i + 1, mask ^ bit, next_value, branch_prob, visit);
        probe ^= bit;
    }
}

} // namespace

void for_each_path(const ZeroOneMatrix& a, Algorithm alg, const PathVisitor& visit) {
    if (alg == Algorithm::RM) require_rm_input(a); else require_amm_input(a);
    if (a.rows() > path_enum_max_rows)
        throw CapabilityError("path enumeration limited to m <= " +
                              std::to_string(path_enum_max_rows) + " rows (got " +
                              std::to_string(a.rows()) + ")");
    const int n = a.cols();
    const std::uint64_t full = (n == 0) ? 0
                             : (n == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << n) - 1);
    walk_paths(a, alg, 1, full, 1, 1, visit);
}

Distribution enumerate_distribution(const ZeroOneMatrix& a, Algorithm alg) {
    Distribution out;
    for_each_path(a, alg, [&out](const ExactCount& value, const ExactRational& prob) {
        out[ExactRational(value)] += prob;
    });
    return out;
}

Distribution scale_distribution(const Distribution& d, const ExactCount& divisor) {
    if (divisor == 0) throw ValidationError("scale_distribution by zero");
    Distribution out;
    for (const auto& [value, prob] : d)
        out[value / ExactRational(divisor)] += prob;
    return out;
}

ExactRational distribution_mean(const Distribution& d) {
    ExactRational acc = 0;
    for (const auto& [value, prob] : d) acc += value * prob;
    return acc;
}

ExactRational distribution_second_moment(const Distribution& d) {
    ExactRational acc = 0;
    for (const auto& [value, prob] : d) acc += value * value * prob;
    return acc;
}

} // namespace allmatch
