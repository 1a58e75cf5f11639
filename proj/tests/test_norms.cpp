#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "spikenorm/lif.hpp"
#include "spikenorm/norms.hpp"
#include "test_util.hpp"

using namespace spikenorm;
using testutil::train;

namespace {

const Leak kSweep[] = {Leak(0.0), Leak(0.5), Leak(1.0), Leak(10.0),
                       Leak::infinity()};

}  // namespace

TEST_CASE("antisymmetric three-spike train has unit norm for every leak") {
    const double eps = 1e-3;
    const SpikeTrain nu = train({{0.0, 1.0}, {eps, -1.0}, {2 * eps, 1.0}});
    for (const Leak& alpha : kSweep) {
        CHECK(alexiewicz_norm(nu, alpha) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("norms of the empty train vanish") {
    CHECK(alexiewicz_norm(SpikeTrain(), Leak(1.0)) == 0.0);
    CHECK(alexiewicz_norm(SpikeTrain(), Leak::infinity()) == 0.0);
    CHECK(discrepancy_norm(SpikeTrain(), Leak(0.0)) == 0.0);
    CHECK(l2_norm(SpikeTrain(), Leak(0.0)) == 0.0);
}

TEST_CASE("incremental evaluation matches the direct double loop") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const SpikeTrain eta = testutil::random_train(13, s, 50);
        for (const Leak& alpha : {Leak(0.0), Leak(1.0), Leak(10.0)}) {
            CHECK(alexiewicz_norm(eta, alpha) ==
                  doctest::Approx(alexiewicz_norm_direct(eta, alpha))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("two-spike discrepancy hand case") {
    CHECK(discrepancy_norm(train({{0.0, 1.0}, {1.0, -1.0}}), Leak(0.0)) == 1.0);
}

TEST_CASE("discrepancy fast paths match the all-windows evaluation") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const SpikeTrain eta = testutil::random_train(17, s, 40);
        for (const Leak& alpha : {Leak(0.0), Leak(0.7), Leak::infinity()}) {
            CHECK(discrepancy_norm(eta, alpha) ==
                  doctest::Approx(discrepancy_norm_direct(eta, alpha))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("norm equivalence A <= D <= 2A") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const SpikeTrain eta = testutil::random_train(19, s, 30);
        for (const Leak& alpha : kSweep) {
            const double a = alexiewicz_norm(eta, alpha);
            const double d = discrepancy_norm(eta, alpha);
            CHECK(a <= d + 1e-12);
            CHECK(d <= 2.0 * a + 1e-12);
        }
    }
}

TEST_CASE("euclidean-style norm") {
    CHECK(l2_norm(train({{0.0, -3.0}}), Leak(5.0)) == 3.0);
    CHECK(l2_norm(train({{0.0, 1.0}, {1.0, 1.0}}), Leak(0.0)) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK_THROWS_AS(l2_norm(train({{0.0, 1.0}}), Leak::infinity()),
                    std::invalid_argument);
}

TEST_CASE("large leak approaches the amplitude sup") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const SpikeTrain eta = testutil::random_train(23, s, 25);
        CHECK(alexiewicz_norm(eta, Leak(1e6)) ==
              doctest::Approx(eta.max_abs_amplitude()).epsilon(1e-6));
    }
}

TEST_CASE("norm axioms: homogeneity and triangle inequality") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const SpikeTrain a = testutil::random_train(29, 2 * s, 30);
        const SpikeTrain b = testutil::random_train(29, 2 * s + 1, 30);
        for (const Leak& alpha : kSweep) {
            CHECK(alexiewicz_norm(scale(a, -2.5), alpha) ==
                  doctest::Approx(2.5 * alexiewicz_norm(a, alpha))
                      .epsilon(1e-12));
            CHECK(alexiewicz_norm(add(a, b), alpha) <=
                  alexiewicz_norm(a, alpha) + alexiewicz_norm(b, alpha) + 1e-12);
        }
    }
}

TEST_CASE("time rescaling carries one leak's response onto another's") {
    const LifConfig base{1.0, Leak(0.5), ResetMode::kToMod};
    for (std::uint64_t s = 0; s < 15; ++s) {
        const SpikeTrain eta = testutil::random_train(31, s, 25);
        for (double beta : {0.25, 1.0, 3.0}) {
            const LifConfig other{1.0, Leak(beta), ResetMode::kToMod};
            const SpikeTrain rescaled =
                testutil::scale_time(eta, base.alpha.rate() / beta);
            CHECK(alexiewicz_norm(lif(eta, base), base.alpha) ==
                  doctest::Approx(alexiewicz_norm(lif(rescaled, other),
                                                  other.alpha))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("unit ball shear matrix structure and action") {
    const Matrix t2 = unit_ball_shear(2);
    CHECK(t2 == Matrix({{1.0, 0.0}, {-1.0, 1.0}}));
    CHECK_THROWS_AS(unit_ball_shear(0), std::invalid_argument);

    // Corner y = (1, -1) maps to x = (1, -2), on the ball boundary.
    const std::vector<double> x = t2.multiply({1.0, -1.0});
    CHECK(x == std::vector<double>{1.0, -2.0});
    CHECK(alexiewicz_norm(train({{0.0, 1.0}, {4.2, -2.0}}), Leak(0.0)) == 1.0);
    CHECK(in_unit_ball_a0(x));

    CHECK(unit_ball_shear(5).multiply({0, 0, 0, 0, 0}) ==
          std::vector<double>(5, 0.0));
}

TEST_CASE("unit ball membership is the prefix sum box") {
    CHECK(in_unit_ball_a0(std::vector<double>{}));
    CHECK_FALSE(in_unit_ball_a0(std::vector<double>{1.5}));
    CHECK(in_unit_ball_a0(std::vector<double>{1.0, -2.0, 1.0}));
    CHECK_FALSE(in_unit_ball_a0(std::vector<double>{0.5, 0.6}));

    // Images of random cube points always lie in the ball, and points
    // outside the cube map outside.
    const Matrix t = unit_ball_shear(8);
    for (std::uint64_t s = 0; s < 20; ++s) {
        SplitMix64 rng = trial_rng(37, s);
        std::vector<double> y(8);
        for (double& v : y) v = rng.uniform(-1.0, 1.0);
        CHECK(in_unit_ball_a0(t.multiply(y)));
        y[rng.below(8)] = 1.5;
        CHECK_FALSE(in_unit_ball_a0(t.multiply(y)));
    }
}
