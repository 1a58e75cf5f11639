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

constexpr double kEps = 1e-3;

SpikeTrain example_eta() {
    return train({{0.0, -1.5}, {kEps, 1.0}, {2 * kEps, 1.5}});
}

SpikeTrain example_nu() {
    return train({{0.0, 1.0}, {kEps, -1.0}, {2 * kEps, 1.0}});
}

LifConfig mod_cfg(double theta, Leak alpha) {
    return LifConfig{theta, alpha, ResetMode::kToMod};
}

}  // namespace

TEST_CASE("single super-threshold spike is truncated to the quantum grid") {
    for (const Leak& alpha : {Leak(0.0), Leak(1.0), Leak::infinity()}) {
        CHECK(lif(train({{0.4, 2.5}}), mod_cfg(1.0, alpha)) ==
              train({{0.4, 2.0}}));
        CHECK(lif(train({{0.4, -2.5}}), mod_cfg(1.0, alpha)) ==
              train({{0.4, -2.0}}));
    }
}

TEST_CASE("three-spike example: zero leak") {
    CHECK(lif(example_eta(), mod_cfg(1.0, Leak(0.0))) ==
          train({{0.0, -1.0}, {2 * kEps, 2.0}}));
}

TEST_CASE("three-spike example: infinite leak fires on every event") {
    CHECK(lif(example_eta(), mod_cfg(1.0, Leak::infinity())) ==
          train({{0.0, -1.0}, {kEps, 1.0}, {2 * kEps, 1.0}}));
}

TEST_CASE("three-spike example: intermediate leak loses the carried charge") {
    for (double a : {0.25, 1.0, 4.0}) {
        CHECK(lif(example_eta(), mod_cfg(1.0, Leak(a))) ==
              train({{0.0, -1.0}, {2 * kEps, 1.0}}));
    }
}

TEST_CASE("perturbed example collapses to one double spike for any leak") {
    const SpikeTrain sum = example_eta() + example_nu();
    for (const Leak& alpha :
         {Leak(0.0), Leak(0.3), Leak(1.0), Leak(7.0), Leak::infinity()}) {
        CHECK(lif(sum, mod_cfg(1.0, alpha)) == train({{2 * kEps, 2.0}}));
    }
}

TEST_CASE("threshold comparison is exact at the firing boundary") {
    CHECK(lif(train({{0.0, 1.0}}), mod_cfg(1.0, Leak(0.0))) ==
          train({{0.0, 1.0}}));
    CHECK(lif(train({{0.0, 0.999999}}), mod_cfg(1.0, Leak(0.0))).empty());
}

TEST_CASE("reset mode determines the emitted amplitude and residue") {
    const SpikeTrain eta = train({{0.0, 2.5}, {1.0, 0.6}});
    // Modulo: emits 2, residue 0.5, second event reaches 1.1 -> emits 1.
    CHECK(lif(eta, {1.0, Leak(0.0), ResetMode::kToMod}) ==
          train({{0.0, 2.0}, {1.0, 1.0}}));
    // Subtraction: emits one quantum, residue 1.5 still above threshold,
    // next event checks again: 1.5 + 0.6 = 2.1 -> emits 1, residue 1.1.
    CHECK(lif(eta, {1.0, Leak(0.0), ResetMode::kBySubtraction}) ==
          train({{0.0, 1.0}, {1.0, 1.0}}));
    // Zero: emits the whole potential and clears it.
    CHECK(lif(eta, {1.0, Leak(0.0), ResetMode::kToZero}) ==
          train({{0.0, 2.5}}));
    CHECK_THROWS_AS(lif(eta, {0.0, Leak(0.0), ResetMode::kToMod}),
                    std::invalid_argument);
}

TEST_CASE("modulo quantization error stays below the threshold") {
    const Leak sweep[] = {Leak(0.0),  Leak(0.01), Leak(0.1),       Leak(1.0),
                          Leak(10.0), Leak(100.0), Leak::infinity()};
    for (std::uint64_t s = 0; s < 60; ++s) {
        const SpikeTrain eta = testutil::random_train(41, s, 50);
        for (const Leak& alpha : sweep) {
            const auto q = quantization_residual(eta, mod_cfg(1.0, alpha));
            CHECK(q.norm < 1.0);
        }
    }
}

TEST_CASE("modulo outputs are nonzero integer multiples of theta") {
    for (double theta : {1.0, 0.3}) {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const SpikeTrain eta = testutil::random_train(43, s, 40);
            const SpikeTrain out = lif(eta, mod_cfg(theta, Leak(0.5)));
            for (const Spike& e : out.events()) {
                const double k = e.amplitude / theta;
                CHECK(std::abs(k - std::round(k)) < 1e-9);
                CHECK(std::abs(e.amplitude) >= theta - 1e-9);
            }
        }
    }
}

TEST_CASE("modulo quantization is idempotent and annihilates its residual") {
    for (double theta : {1.0, 0.25}) {
        for (const Leak& alpha : {Leak(0.0), Leak(1.0), Leak::infinity()}) {
            for (std::uint64_t s = 0; s < 25; ++s) {
                const SpikeTrain eta = testutil::random_train(47, s, 40);
                const LifConfig cfg = mod_cfg(theta, alpha);
                const SpikeTrain psi = lif(eta, cfg);
                CHECK(lif(psi, cfg) == psi);
                CHECK(lif(psi - eta, cfg).empty());
            }
        }
    }
}

TEST_CASE("empty output happens exactly below the norm threshold") {
    for (const Leak& alpha : {Leak(0.0), Leak(1.0), Leak::infinity()}) {
        for (std::uint64_t s = 0; s < 25; ++s) {
            const SpikeTrain eta = testutil::random_train(53, s, 30);
            const double n = alexiewicz_norm(eta, alpha);
            CHECK(lif(eta, mod_cfg(n * 1.01, alpha)).empty());
            CHECK_FALSE(lif(eta, mod_cfg(n * 0.99, alpha)).empty());
            // At theta == norm the comparison is >= and the neuron fires.
            CHECK_FALSE(lif(eta, mod_cfg(n, alpha)).empty());
        }
    }
}

TEST_CASE("quasi isometry within two quanta") {
    for (double theta : {0.3, 1.0}) {
        for (const Leak& alpha : {Leak(0.0), Leak(1.0), Leak(4.0),
                                  Leak::infinity()}) {
            const LifConfig cfg = mod_cfg(theta, alpha);
            for (std::uint64_t s = 0; s < 20; ++s) {
                const SpikeTrain a = testutil::random_train(59, 2 * s, 40);
                const SpikeTrain b = testutil::random_train(59, 2 * s + 1, 40);
                const double mapped =
                    alexiewicz_norm(lif(a, cfg) - lif(b, cfg), alpha);
                const double direct = alexiewicz_norm(a - b, alpha);
                CHECK(std::abs(mapped - direct) <= 2.0 * theta + 1e-9);
            }
        }
    }
}

TEST_CASE("shrinking the threshold recovers the distance") {
    const Leak alpha(1.0);
    for (std::uint64_t s = 0; s < 8; ++s) {
        const SpikeTrain a = testutil::random_train(61, 2 * s, 30);
        const SpikeTrain b = testutil::random_train(61, 2 * s + 1, 30);
        const double direct = alexiewicz_norm(a - b, alpha);
        double theta = 1.0;
        bool converged = false;
        for (int halving = 0; halving < 40 && !converged; ++halving) {
            const LifConfig cfg = mod_cfg(theta, alpha);
            const double mapped =
                alexiewicz_norm(lif(a, cfg) - lif(b, cfg), alpha);
            converged = std::abs(mapped - direct) <= 0.05 * direct;
            theta *= 0.5;
        }
        CHECK(converged);
    }
}

TEST_CASE("threshold perturbation bound") {
    for (double eps : {0.01, 0.1, 0.5}) {
        for (const Leak& alpha : {Leak(0.0), Leak(0.5), Leak::infinity()}) {
            for (std::uint64_t s = 0; s < 20; ++s) {
                const SpikeTrain eta = testutil::random_train(67, s, 40);
                const double lhs = alexiewicz_norm(
                    lif(eta, mod_cfg(1.0 + eps, alpha)) -
                        lif(eta, mod_cfg(1.0, alpha)),
                    alpha);
                CHECK(lhs <= 2.0 + eps + 1e-9);
            }
        }
    }
}

TEST_CASE("lag bound at small delays") {
    const double dt = 0.01;  // one percent of the unit grid spacing
    for (double a : {0.2, 0.5, 0.8}) {
        const Leak alpha(a);
        const LifConfig cfg = mod_cfg(1.0, alpha);
        for (std::uint64_t s = 0; s < 25; ++s) {
            const SpikeTrain eta = testutil::random_train(71, s, 40);
            const double lhs =
                alexiewicz_norm(lif(shift(eta, dt), cfg) - lif(eta, cfg), alpha);
            const double rhs =
                eta.max_abs_amplitude() + 2.0 +
                dt * a * (alexiewicz_norm(eta, alpha) + eta.max_abs_amplitude());
            CHECK(lhs <= rhs + 1e-6);
        }
    }
}

TEST_CASE("quantization residual of the three-spike example") {
    const auto q = quantization_residual(example_eta(), mod_cfg(1.0, Leak(0.0)));
    CHECK(q.residual ==
          train({{0.0, -0.5}, {kEps, 1.0}, {2 * kEps, -0.5}}));
    CHECK(q.norm == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("empty train has zero quantization error") {
    for (const Leak& alpha : {Leak(0.0), Leak(1.0), Leak::infinity()}) {
        const auto q = quantization_residual(SpikeTrain(), mod_cfg(1.0, alpha));
        CHECK(q.residual.empty());
        CHECK(q.norm == 0.0);
    }
}

TEST_CASE("identical pairs map to identical outputs") {
    const SpikeTrain eta = testutil::random_train(109, 0, 30);
    for (const Leak& alpha : {Leak(0.0), Leak(4.0)}) {
        const LifConfig cfg = mod_cfg(0.3, alpha);
        CHECK(alexiewicz_norm(lif(eta, cfg) - lif(eta, cfg), alpha) == 0.0);
    }
}

TEST_CASE("already quantized trains are fixed points with empty residual") {
    const SpikeTrain eta = train({{0.0, 2.0}, {1.0, -3.0}, {2.5, 1.0}});
    for (const Leak& alpha : {Leak(0.0), Leak(2.0), Leak::infinity()}) {
        const auto q = quantization_residual(eta, mod_cfg(1.0, alpha));
        CHECK(q.residual.empty());
        CHECK(q.norm == 0.0);
        CHECK(lif(eta, mod_cfg(1.0, alpha)) == eta);
    }
}
