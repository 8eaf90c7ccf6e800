#include "allmatch/counting.hpp"
#include "allmatch/ensembles.hpp"
#include "allmatch/errors.hpp"
#include "allmatch/exact.hpp"
#include "allmatch/rng.hpp"

#include <nlohmann/json.hpp>

#include "doctest.h"

#include <cmath>
#include <set>

using namespace allmatch;

namespace {
const StatFn am_stat = [](const ZeroOneMatrix& a) { return ExactRational(am_dp(a)); };
}

TEST_CASE("EnsembleSpec validation") {
    CHECK_THROWS_AS(EnsembleSpec::bernoulli(2, 2, make_rational(3, 2)), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::bernoulli(2, 2, make_rational(-1, 2)), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::fixed_ones(2, 2, 5), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::fixed_ones(2, 2, -1), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::bernoulli(-1, 2, ExactRational(1, 2)), ValidationError);
    CHECK(EnsembleSpec::fixed_ones(2, 2, 4).cells() == 4);
}

TEST_CASE("EnsembleSpec JSON round-trip") {
    const nlohmann::json j = {{"kind", "bernoulli"}, {"p", "1/2"}, {"rows", 2}, {"cols", 3}};
    const EnsembleSpec s = ensemble_from_json(j);
    CHECK(s.kind == EnsembleKind::Bernoulli);
    CHECK(s.rows == 2);
    CHECK(s.cols == 3);
    CHECK(s.p == ExactRational(1, 2));

    const EnsembleSpec back = ensemble_from_json(ensemble_to_json(s));
    CHECK(back.kind == s.kind);
    CHECK(back.rows == s.rows);
    CHECK(back.cols == s.cols);
    CHECK(back.p == s.p);

    const EnsembleSpec f = ensemble_from_json(
        {{"kind", "fixed_ones"}, {"rows", 3}, {"cols", 3}, {"ones", 4}});
    CHECK(f.kind == EnsembleKind::FixedOnes);
    CHECK(f.ones == 4);
    CHECK(ensemble_from_json(ensemble_to_json(f)).ones == 4);

    // integer p is accepted, non-integer JSON numbers are not exact
    CHECK(ensemble_from_json({{"kind", "bernoulli"}, {"p", 1}, {"rows", 1}, {"cols", 1}})
              .p == ExactRational(1));
    try {
        ensemble_from_json({{"kind", "bernoulli"}, {"p", 0.5}, {"rows", 1}, {"cols", 1}});
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("string") != std::string::npos);
    }
    CHECK_THROWS_AS(ensemble_from_json({{"kind", "nope"}, {"rows", 1}, {"cols", 1}}),
                    ValidationError);
}

TEST_CASE("sample degenerate ensembles") {
    SplitMix64 rng(9);
    const ZeroOneMatrix ones = sample(EnsembleSpec::bernoulli(2, 2, ExactRational(1)), rng);
    CHECK(ones == make_matrix({{1, 1}, {1, 1}}));
    const ZeroOneMatrix zero = sample(EnsembleSpec::bernoulli(2, 2, ExactRational(0)), rng);
    CHECK(zero == make_matrix({{0, 0}, {0, 0}}));
    const ZeroOneMatrix forced = sample(EnsembleSpec::fixed_ones(2, 2, 4), rng);
    CHECK(forced == make_matrix({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(sample(EnsembleSpec::exhaustive(2, 2), rng), ValidationError);
}

TEST_CASE("FixedOnes samples have exactly the requested ones") {
    SplitMix64 rng(0xF1);
    for (int t = 0; t < 50; ++t) {
        const long k = static_cast<long>(rng.next_below(10));
        const ZeroOneMatrix a = sample(EnsembleSpec::fixed_ones(3, 3, k), rng);
        CHECK(a.ones() == k);
    }
}

TEST_CASE("enumeration counts, distinctness, determinism") {
    auto collect = [](const EnsembleSpec& spec) {
        EnsembleEnumerator e(spec);
        std::vector<ZeroOneMatrix> out;
        while (auto m = e.next()) out.push_back(*m);
        return out;
    };

    const auto ex12 = collect(EnsembleSpec::exhaustive(1, 2));
    CHECK(ex12.size() == 4);
    const auto f1 = collect(EnsembleSpec::fixed_ones(2, 2, 1));
    CHECK(f1.size() == 4);
    for (const auto& m : f1) CHECK(m.ones() == 1);
    const auto ex22 = collect(EnsembleSpec::exhaustive(2, 2));
    CHECK(ex22.size() == 16);

    std::set<std::string> seen;
    for (const auto& m : ex22) seen.insert(write_matrix_text(m));
    CHECK(seen.size() == 16); // all distinct
    CHECK(ex22.front() == make_matrix({{0, 0}, {0, 0}})); // fixed order, zeros first

    const auto again = collect(EnsembleSpec::exhaustive(2, 2));
    CHECK(ex22 == again);

    CHECK(EnsembleEnumerator(EnsembleSpec::exhaustive(2, 2)).total() == 16);
    CHECK(EnsembleEnumerator(EnsembleSpec::fixed_ones(3, 3, 4)).total() == 126);
}

TEST_CASE("enumeration cap is a capability error carrying the count") {
    try {
        EnsembleEnumerator e(EnsembleSpec::exhaustive(5, 5));
        CHECK(false);
    } catch (const CapabilityError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("33554432") != std::string::npos);
        CHECK(msg.find("10000000") != std::string::npos);
    }
    // a higher explicit cap admits the same ensemble
    EnsembleEnumerator ok(EnsembleSpec::exhaustive(5, 5), 1L << 26);
    CHECK(ok.total() == 33554432);
}

TEST_CASE("exhaustive_expectation frozen values") {
    CHECK(exhaustive_expectation(EnsembleSpec::exhaustive(1, 1), am_stat) ==
          make_rational(3, 2));
    CHECK(exhaustive_expectation(EnsembleSpec::exhaustive(1, 2), am_stat) ==
          ExactRational(2));
    CHECK(exhaustive_expectation(EnsembleSpec::fixed_ones(2, 2, 4), am_stat) ==
          ExactRational(7));
    // Bernoulli(1/3) on 1x1: E(AM) = (1/3)*2 + (2/3)*1 = 4/3
    CHECK(exhaustive_expectation(EnsembleSpec::bernoulli(1, 1, make_rational(1, 3)),
                                 am_stat) == make_rational(4, 3));
}

TEST_CASE("sampled_expectation converges to the exact mean") {
    const EnsembleSpec spec = EnsembleSpec::fixed_ones(2, 2, 2);
    const ExactRational exact = exhaustive_expectation(spec, am_stat); // 10/3
    CHECK(exact == make_rational(10, 3));
    const SampledExpectation got = sampled_expectation(spec, am_stat, 4000, 0xFEED);
    CHECK(got.n_samples == 4000);
    const double dev = std::abs(to_double(got.mean) - to_double(exact));
    CHECK(dev <= 6.0 * got.std_error);
    // fixed seed, fixed result
    const SampledExpectation again = sampled_expectation(spec, am_stat, 4000, 0xFEED);
    CHECK(got.mean == again.mean);
}
