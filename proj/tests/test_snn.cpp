#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "spikenorm/norms.hpp"
#include "spikenorm/snn.hpp"
#include "test_util.hpp"

using namespace spikenorm;
using testutil::train;

namespace {

// The 2-3-1 evaluation network: layers of 2, 3 and 1 neurons fed by two
// input channels.
SnnNetwork example_network(const LifConfig& neuron) {
    return SnnNetwork(
        {Matrix({{1.0, 1.0}, {1.0, 2.0}}),
         Matrix({{0.5, 0.0}, {0.5, 0.5}, {0.0, -0.5}}),
         Matrix({{1.0, 1.0, 1.0}})},
        neuron);
}

}  // namespace

TEST_CASE("sub-threshold single neuron network stays silent") {
    const Matrix identity(std::vector<std::vector<double>>{{1.0}});
    const SnnNetwork net({identity}, {1.0, Leak(0.0), ResetMode::kToMod});
    const auto out = snn_forward({train({{0.0, 0.5}})}, net);
    REQUIRE(out.size() == 1);
    CHECK(out[0].empty());
}

TEST_CASE("zero weights silence every output") {
    const SnnNetwork net({Matrix(3, 2, 0.0), Matrix(1, 3, 0.0)},
                         {1.0, Leak(1.0), ResetMode::kToMod});
    const auto out =
        snn_forward({train({{0.0, 5.0}}), train({{1.0, -4.0}})}, net);
    REQUIRE(out.size() == 1);
    CHECK(out[0].empty());
}

TEST_CASE("the example network responds and reacts to a perturbation") {
    const SnnNetwork net = example_network({1.0, Leak(1.0), ResetMode::kToMod});
    const std::vector<SpikeTrain> inputs = {
        train({{0.5, 2.0}, {1.5, -1.0}, {2.5, 1.5}}),
        train({{1.0, 1.0}, {2.0, 0.5}})};
    const auto clean = snn_forward(inputs, net);
    REQUIRE(clean.size() == 1);
    CHECK_FALSE(clean[0].empty());

    std::vector<SpikeTrain> perturbed = inputs;
    perturbed[0] = perturbed[0] + train({{0.7, 1.0}});
    const auto noisy = snn_forward(perturbed, net);
    CHECK_FALSE(noisy[0] == clean[0]);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(SnnNetwork({Matrix(2, 2), Matrix(1, 3)},
                               {1.0, Leak(0.0), ResetMode::kToMod}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SnnNetwork({}, {1.0, Leak(0.0), ResetMode::kToMod}),
                    std::invalid_argument);
    const SnnNetwork net = example_network({1.0, Leak(0.0), ResetMode::kToMod});
    CHECK_THROWS_AS(snn_forward({train({{0.0, 1.0}})}, net),
                    std::invalid_argument);
}

TEST_CASE("gamma constants per leak regime") {
    CHECK(gamma_for(Leak(0.0), GammaPolicy::kSafe) == 1.0);
    CHECK(gamma_for(Leak::infinity(), GammaPolicy::kSafe) == 1.0);
    CHECK(gamma_for(Leak(1.0), GammaPolicy::kSafe) == 3.0);
    CHECK(gamma_for(Leak(1.0), GammaPolicy::kConjectured) == 2.0);
    CHECK(gamma_for(Leak(0.0), GammaPolicy::kConjectured) == 1.0);
}

TEST_CASE("single neuron bound forces the ceil chain") {
    const Matrix identity(std::vector<std::vector<double>>{{1.0}});
    const SnnNetwork net({identity}, {1.0, Leak(0.0), ResetMode::kToMod});
    const std::vector<double> norms = {1.2};
    CHECK(snn_error_bound(norms, net, 1.0) == std::vector<double>{2.0});
    CHECK(snn_error_bound(std::vector<double>{0.0}, net, 1.0) ==
          std::vector<double>{0.0});
    CHECK_THROWS_AS(snn_error_bound(norms, net, 0.5), std::invalid_argument);
}

TEST_CASE("example network bound for a unit perturbation on one channel") {
    const SnnNetwork net = example_network({1.0, Leak(0.0), ResetMode::kToMod});
    // By hand: ceil(1,0) = (1,0); |W1|(1,0) = (1,1); ceil -> (1,1);
    // |W2|(1,1) = (0.5,1,0.5); ceil -> (1,1,1); |W3|(1,1,1) = 3; ceil -> 3.
    CHECK(snn_error_bound(std::vector<double>{1.0, 0.0}, net, 1.0) ==
          std::vector<double>{3.0});
}

TEST_CASE("bound is monotone in every input norm") {
    const SnnNetwork net = example_network({1.0, Leak(2.0), ResetMode::kToMod});
    for (std::uint64_t s = 0; s < 20; ++s) {
        SplitMix64 rng = trial_rng(97, s);
        std::vector<double> lo = {rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0)};
        std::vector<double> hi = lo;
        hi[rng.below(2)] += rng.uniform(0.0, 2.0);
        const auto b_lo = snn_error_bound(lo, net, 3.0);
        const auto b_hi = snn_error_bound(hi, net, 3.0);
        for (std::size_t j = 0; j < b_lo.size(); ++j) {
            CHECK(b_lo[j] <= b_hi[j]);
        }
    }
}

TEST_CASE("additive bound for the leak-free and memoryless regimes") {
    for (const Leak& alpha : {Leak(0.0), Leak::infinity()}) {
        const LifConfig cfg{1.0, alpha, ResetMode::kToMod};
        for (std::uint64_t s = 0; s < 40; ++s) {
            const SpikeTrain eta = testutil::random_train(101, 2 * s, 40);
            SpikeTrain nu = testutil::random_train(101, 2 * s + 1, 15, -1.0, 1.0);
            const double raw = alexiewicz_norm(nu, alpha);
            if (raw > 0.0) {
                // Rescale so the perturbation norm sits in (0, theta].
                SplitMix64 rng = trial_rng(101, 1000 + s);
                nu = scale(nu, rng.uniform(0.1, 1.0) / raw);
            }
            const double diff =
                alexiewicz_norm(lif(eta + nu, cfg) - lif(eta, cfg), alpha);
            CHECK(diff <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("amplification stays within gamma ceil of the perturbation") {
    struct Regime {
        Leak alpha;
        double gamma;
    };
    const Regime regimes[] = {{Leak(0.0), 1.0},  {Leak::infinity(), 1.0},
                              {Leak(0.5), 3.0},  {Leak(1.0), 3.0},
                              {Leak(2.0), 3.0}};
    for (const Regime& r : regimes) {
        const LifConfig cfg{1.0, r.alpha, ResetMode::kToMod};
        for (std::uint64_t s = 0; s < 40; ++s) {
            const SpikeTrain eta = testutil::random_train(103, 2 * s, 40);
            const SpikeTrain nu =
                testutil::random_train(103, 2 * s + 1, 12, -1.5, 1.5);
            if (nu.empty()) continue;
            const double lhs =
                alexiewicz_norm(lif(eta + nu, cfg) - lif(eta, cfg), r.alpha);
            const double rhs =
                r.gamma * std::ceil(alexiewicz_norm(nu, r.alpha));
            CHECK(lhs <= rhs + 1e-9);
        }
    }
}

TEST_CASE("resonance pair approaches amplification two") {
    const double eps = 1e-4;
    const SpikeTrain eta = train({{0.0, -1.5}, {eps, 1.0}, {2 * eps, 1.5}});
    const SpikeTrain nu = train({{0.0, 1.0}, {eps, -1.0}, {2 * eps, 1.0}});
    for (double a : {0.5, 1.0, 2.0}) {
        const LifConfig cfg{1.0, Leak(a), ResetMode::kToMod};
        const double measured =
            alexiewicz_norm(lif(eta + nu, cfg) - lif(eta, cfg), Leak(a));
        CHECK(measured ==
              doctest::Approx(1.0 + std::exp(-2.0 * eps * a)).epsilon(1e-6));
        CHECK(measured > 2.0 - 1e-3);
    }
}

TEST_CASE("network perturbations respect the per-channel bound") {
    const Leak alphas[] = {Leak(0.0), Leak(0.5), Leak(1.0), Leak(2.0),
                           Leak::infinity()};
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Leak alpha = alphas[s % 5];
        const SnnNetwork net = example_network({1.0, alpha, ResetMode::kToMod});
        const std::vector<SpikeTrain> inputs = {
            testutil::random_train(107, 4 * s, 30),
            testutil::random_train(107, 4 * s + 1, 30)};
        const std::vector<SpikeTrain> nus = {
            testutil::random_train(107, 4 * s + 2, 6, -1.0, 1.0),
            testutil::random_train(107, 4 * s + 3, 6, -1.0, 1.0)};
        const auto clean = snn_forward(inputs, net);
        const auto noisy =
            snn_forward({inputs[0] + nus[0], inputs[1] + nus[1]}, net);
        const std::vector<double> norms = {alexiewicz_norm(nus[0], alpha),
                                           alexiewicz_norm(nus[1], alpha)};
        const auto bound = snn_error_bound(
            norms, net, gamma_for(alpha, GammaPolicy::kSafe));
        for (std::size_t j = 0; j < clean.size(); ++j) {
            const double measured =
                alexiewicz_norm(noisy[j] - clean[j], alpha);
            CHECK(measured <= bound[j] + 1e-9);
        }
    }
}
