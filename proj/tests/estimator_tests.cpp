#include "allmatch/counting.hpp"
#include "allmatch/errors.hpp"
#include "allmatch/estimator.hpp"
#include "allmatch/exact.hpp"
#include "allmatch/matrix.hpp"
#include "allmatch/rng.hpp"

#include "doctest.h"

using namespace allmatch;

namespace {

const ZeroOneMatrix ONE = make_matrix({{1}});
const ZeroOneMatrix K22 = make_matrix({{1, 1}, {1, 1}});

ZeroOneMatrix random_matrix(int m, int n, SplitMix64& rng) {
    std::vector<std::vector<int>> rows(m, std::vector<int>(n));
    for (auto& r : rows)
        for (auto& v : r) v = static_cast<int>(rng.next() & 1);
    return make_matrix(rows);
}

} // namespace

TEST_CASE("SplitMix64 reference stream") {
    SplitMix64 a(0);
    CHECK(a.next() == 0xE220A8397B1DCDAFull);
    CHECK(a.next() == 0x6E789E6AA1B965F4ull);
    CHECK(a.next() == 0x06C45D188009454Full);
    SplitMix64 b(0x123456789ABCDEFull);
    CHECK(b.next() == 0x157A3807A48FAA9Dull);
    CHECK(b.next() == 0xD573529B34A1D093ull);
}

TEST_CASE("next_below is in range and substreams are reproducible") {
    SplitMix64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const std::uint64_t b = 1 + rng.next_below(97);
        CHECK(rng.next_below(b) < b);
    }
    SplitMix64 s1 = substream(42, 7);
    SplitMix64 s2 = substream(42, 7);
    SplitMix64 s3 = substream(42, 8);
    const std::uint64_t v1 = s1.next();
    CHECK(v1 == s2.next());
    CHECK(v1 != s3.next()); // distinct index, distinct stream
}

TEST_CASE("deterministic samples") {
    // RM on K22: |W|=2 then the 1x1 leaf is forced, value 2 on every path
    SplitMix64 rng(123);
    for (int t = 0; t < 20; ++t) CHECK(rm_sample(K22, rng) == 2);
    // AMM on [[1]]: both branches give 2
    for (int t = 0; t < 20; ++t) CHECK(amm_sample(ONE, rng) == 2);
    // AMM never returns 0, RM does on an empty support row
    const ZeroOneMatrix z = make_matrix({{0}});
    CHECK(amm_sample(z, rng) == 1);
    CHECK(rm_sample(z, rng) == 0);
}

TEST_CASE("rm_sample rejects rectangular input") {
    SplitMix64 rng(1);
    CHECK_THROWS_AS(rm_sample(make_matrix({{1, 1}}), rng), ValidationError);
    ZeroOneMatrix tall = make_matrix({{1}, {1}});
    CHECK_THROWS_AS(amm_sample(tall, rng), ValidationError);
}

TEST_CASE("run_batch frozen sums on the deterministic estimator") {
    for (const std::uint64_t seed : {0ull, 1ull, 0xDEADBEEFull}) {
        const SampleStats s = run_batch(ONE, Algorithm::AMM, 1000, seed);
        CHECK(s.n_samples == 1000);
        CHECK(s.sum == 2000);
        CHECK(s.sum_sq == 4000);
        CHECK(s.mean() == ExactRational(2));
        CHECK(s.empirical_critical_ratio() == ExactRational(1));
        CHECK(s.std_error() == 0.0);
    }
}

TEST_CASE("run_batch is bit-identical across worker counts") {
    SplitMix64 rng(0xBA7C4);
    const ZeroOneMatrix a = random_matrix(5, 5, rng);
    const SampleStats w1 = run_batch(a, Algorithm::AMM, 4096, 31, 1);
    const SampleStats w2 = run_batch(a, Algorithm::AMM, 4096, 31, 2);
    const SampleStats w8 = run_batch(a, Algorithm::AMM, 4096, 31, 8);
    CHECK(w1.sum == w2.sum);
    CHECK(w1.sum == w8.sum);
    CHECK(w1.sum_sq == w2.sum_sq);
    CHECK(w1.sum_sq == w8.sum_sq);

    const SampleStats r1 = run_batch(a, Algorithm::RM, 4096, 31, 1);
    const SampleStats r8 = run_batch(a, Algorithm::RM, 4096, 31, 8);
    CHECK(r1.sum == r8.sum);
    CHECK(r1.sum_sq == r8.sum_sq);
}

TEST_CASE("SampleStats edge cases") {
    SampleStats s;
    s.n_samples = 1;
    s.sum = 3;
    s.sum_sq = 9;
    CHECK(s.std_error() == 0.0); // undefined variance reported as 0
    s.sum = 0;
    s.sum_sq = 0;
    CHECK_THROWS_AS(s.empirical_critical_ratio(), UndefinedRatioError);
}

TEST_CASE("exact_second_moment frozen values") {
    CHECK(exact_second_moment(ONE, Algorithm::AMM) == 4);
    CHECK(exact_second_moment(K22, Algorithm::RM) == 4);  // value 2 w.p. 1
    CHECK(exact_second_moment(K22, Algorithm::AMM) == 51);
}

TEST_CASE("exact_second_moment equals the path-enumeration oracle") {
    SplitMix64 rng(0x5EC0);
    for (int t = 0; t < 25; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(4));
        const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const ZeroOneMatrix a = random_matrix(m, n, rng);
        const Distribution d = enumerate_distribution(a, Algorithm::AMM);
        CHECK(ExactRational(exact_second_moment(a, Algorithm::AMM)) ==
              distribution_second_moment(d));
        if (m == n) {
            const Distribution dr = enumerate_distribution(a, Algorithm::RM);
            CHECK(ExactRational(exact_second_moment(a, Algorithm::RM)) ==
                  distribution_second_moment(dr));
        }
    }
}

TEST_CASE("path enumeration is unbiased (Corollary 1 and the RM analogue)") {
    SplitMix64 rng(0xC1);
    for (int t = 0; t < 25; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(4));
        const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const ZeroOneMatrix a = random_matrix(m, n, rng);
        CHECK(distribution_mean(enumerate_distribution(a, Algorithm::AMM)) ==
              ExactRational(am_dp(a)));
        if (m == n)
            CHECK(distribution_mean(enumerate_distribution(a, Algorithm::RM)) ==
                  ExactRational(permanent(a)));
    }
}

TEST_CASE("critical_ratio_exact frozen values and bound") {
    CHECK(critical_ratio_exact(ONE, Algorithm::AMM) == ExactRational(1));
    CHECK(critical_ratio_exact(K22, Algorithm::AMM) == make_rational(51, 49));
    CHECK(critical_ratio_exact(K22, Algorithm::AMM) <= ExactRational(9)); // (n+1)^m

    const ZeroOneMatrix z = make_matrix({{0, 0}, {0, 0}});
    try {
        critical_ratio_exact(z, Algorithm::RM);
        CHECK(false);
    } catch (const UndefinedRatioError& e) {
        CHECK(std::string(e.what()).find("permanent is 0") != std::string::npos);
    }
}

TEST_CASE("Corollary 2: scaled RM on the extension equals AMM") {
    SplitMix64 rng(0xC02);
    for (int t = 0; t < 10; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(3));
        const ZeroOneMatrix a = random_matrix(n, n, rng);
        const Distribution amm = enumerate_distribution(a, Algorithm::AMM);
        const Distribution rm = enumerate_distribution(extend_transform(a), Algorithm::RM);
        CHECK(scale_distribution(rm, factorial(static_cast<unsigned>(n))) == amm);
    }
}

TEST_CASE("path enumeration row gate") {
    std::vector<std::vector<int>> seven(7, std::vector<int>(7, 1));
    CHECK_THROWS_AS(enumerate_distribution(make_matrix(seven), Algorithm::AMM),
                    CapabilityError);
}
