#include "allmatch/counting.hpp"
#include "allmatch/errors.hpp"
#include "allmatch/oracles.hpp"
#include "allmatch/rng.hpp"

#include "doctest.h"

using namespace allmatch;

namespace {

const ZeroOneMatrix I2 = make_matrix({{1, 0}, {0, 1}});
const ZeroOneMatrix K22 = make_matrix({{1, 1}, {1, 1}});

ZeroOneMatrix random_matrix(int m, int n, SplitMix64& rng) {
    std::vector<std::vector<int>> rows(m, std::vector<int>(n));
    for (auto& r : rows)
        for (auto& v : r) v = static_cast<int>(rng.next() & 1);
    return make_matrix(rows);
}

} // namespace

TEST_CASE("am_recursive on the frozen examples") {
    CHECK(am_recursive(make_matrix({})) == 1);
    CHECK(am_recursive(make_matrix({{1}})) == 2);
    CHECK(am_recursive(K22) == 7);
    CHECK(am_recursive(make_matrix({{1, 1}})) == 3);
    CHECK(am_recursive(make_matrix({{0, 0}})) == 1);
    CHECK_THROWS_AS(am_recursive(make_matrix({{1}, {1}})), ValidationError);
}

TEST_CASE("am_dp matches the recursion and the brute-force oracle") {
    CHECK(am_dp(I2) == 4);
    CHECK(am_dp(K22) == 7);
    CHECK(am_dp(make_matrix({})) == 1);

    SplitMix64 rng(0xC0117);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(4));
        const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const ZeroOneMatrix a = random_matrix(m, n, rng);
        const ExactCount dp = am_dp(a);
        CHECK(dp == am_recursive(a));
        CHECK(dp == brute_force_am(a));
    }
}

TEST_CASE("am_dp column limit") {
    // 25 columns exceeds the 24-column DP limit
    std::vector<std::vector<int>> row(1, std::vector<int>(25, 1));
    CHECK_THROWS_AS(am_dp(make_matrix(row)), CapabilityError);
    try {
        am_dp(make_matrix(row));
    } catch (const CapabilityError& e) {
        CHECK(std::string(e.what()).find("24") != std::string::npos);
    }
}

TEST_CASE("matching_vector frozen examples and invariants") {
    const MatchingVector v = matching_vector(K22);
    REQUIRE(v.counts.size() == 3);
    CHECK(v.counts[0] == 1);
    CHECK(v.counts[1] == 4);
    CHECK(v.counts[2] == 2);

    const MatchingVector w = matching_vector(I2);
    REQUIRE(w.counts.size() == 3);
    CHECK(w.counts[0] == 1);
    CHECK(w.counts[1] == 2);
    CHECK(w.counts[2] == 1);

    SplitMix64 rng(0x7EC);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(4));
        const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const ZeroOneMatrix a = random_matrix(m, n, rng);
        const MatchingVector mv = matching_vector(a);
        CHECK(mv.counts[0] == 1);       // #S_0 = 1
        CHECK(mv.total() == am_dp(a));  // sum = AM
        const MatchingVector bf = brute_force_matching_vector(a);
        REQUIRE(mv.counts.size() == bf.counts.size());
        for (std::size_t k = 0; k < mv.counts.size(); ++k)
            CHECK(mv.counts[k] == bf.counts[k]);
    }
}

TEST_CASE("permanent frozen examples, oracle, and limit") {
    CHECK(permanent(K22) == 2);
    CHECK(permanent(I2) == 1);
    CHECK(permanent(make_matrix({{1, 1}, {0, 1}})) == 1);
    CHECK(permanent(make_matrix({})) == 1);
    CHECK(permanent(make_matrix({{0}})) == 0);
    CHECK_THROWS_AS(permanent(make_matrix({{1, 1}})), ValidationError);

    SplitMix64 rng(0x9E5);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(5));
        const ZeroOneMatrix a = random_matrix(n, n, rng);
        CHECK(permanent(a) == brute_force_permanent(a));
    }

    std::vector<std::vector<int>> big(31, std::vector<int>(31, 1));
    CHECK_THROWS_AS(permanent(make_matrix(big)), CapabilityError);
}

TEST_CASE("Corollary 3 identity on the frozen examples") {
    const Corollary3Result a = verify_corollary3(make_matrix({{1}}));
    CHECK(a.ok);
    CHECK(a.am == 2);
    CHECK(a.lhs == 2);
    CHECK(a.per_ext == 2);

    const Corollary3Result b = verify_corollary3(K22);
    CHECK(b.ok);
    CHECK(b.am == 7);
    CHECK(b.per_ext == 14);

    const Corollary3Result z = verify_corollary3(make_matrix({{0, 0}, {0, 0}}));
    CHECK(z.ok);
    CHECK(z.am == 1);
    CHECK(z.per_ext == 2);
}

TEST_CASE("fit_count frozen values and oracle") {
    CHECK(fit_count(3, 1) == 2);
    CHECK(fit_count(3, 2) == 3);
    CHECK(fit_count(3, 0) == 1);
    CHECK(fit_count(0, 0) == 1);
    CHECK_THROWS_AS(fit_count(3, 4), ValidationError);

    for (unsigned n = 0; n <= 7; ++n)
        for (unsigned p = 0; p <= n; ++p)
            CHECK(fit_count(n, p) == brute_force_fit_count(n, p));
}
