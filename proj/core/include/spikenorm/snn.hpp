#pragma once

#include <span>
#include <vector>

#include "spikenorm/lif.hpp"
#include "spikenorm/matrix.hpp"
#include "spikenorm/spike_train.hpp"

namespace spikenorm {

// Feedforward network of LIF neurons: layer k+1 receives the weighted
// superposition of layer-k output trains, matrix shape N_{k+1} x N_k.
// All neurons share one LifConfig.
class SnnNetwork {
public:
    SnnNetwork(std::vector<Matrix> layers, LifConfig neuron);

    const std::vector<Matrix>& layers() const { return layers_; }
    const LifConfig& neuron() const { return neuron_; }
    std::size_t input_count() const { return layers_.front().cols(); }
    std::size_t output_count() const { return layers_.back().rows(); }

private:
    std::vector<Matrix> layers_;
    LifConfig neuron_;
};

// Layer-by-layer propagation: each neuron applies lif() to the weighted sum
// of its presynaptic trains (edge weights rescale amplitudes; coincident
// spikes merge by summation).  Returns the final layer's output trains.
std::vector<SpikeTrain> snn_forward(const std::vector<SpikeTrain>& inputs,
                                    const SnnNetwork& net);

// Amplification constant of the additive perturbation bound: 1 in the
// leak-free and memoryless regimes, and for intermediate leaks either the
// proven ceiling 3 (kSafe) or the conjectured tight value 2 (kConjectured).
enum class GammaPolicy { kSafe, kConjectured };
double gamma_for(const Leak& alpha, GammaPolicy policy);

// Per-output-channel upper bound on ||SNN(eta + nu) - SNN(eta)||_{A,alpha}
// from the per-input perturbation norms: starting from x = G(nu_norms) with
// G(x) = ceil(gamma x / theta) * theta applied coordinatewise, iterates
// x <- G(|W| x) through the layers, |W| the entrywise absolute weights.
// Monotone in every input norm.  Requires gamma >= 1.
std::vector<double> snn_error_bound(std::span<const double> nu_norms,
                                    const SnnNetwork& net, double gamma,
                                    double theta = 1.0);

}  // namespace spikenorm
