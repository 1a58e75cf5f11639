#include "spikenorm/snn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spikenorm {

SnnNetwork::SnnNetwork(std::vector<Matrix> layers, LifConfig neuron)
    : layers_(std::move(layers)), neuron_(neuron) {
    if (layers_.empty()) {
        throw std::invalid_argument("SnnNetwork: needs at least one layer");
    }
    for (std::size_t k = 0; k + 1 < layers_.size(); ++k) {
        if (layers_[k + 1].cols() != layers_[k].rows()) {
            throw std::invalid_argument(
                "SnnNetwork: layer " + std::to_string(k + 1) + " expects " +
                std::to_string(layers_[k + 1].cols()) + " inputs but layer " +
                std::to_string(k) + " outputs " + std::to_string(layers_[k].rows()));
        }
    }
}

std::vector<SpikeTrain> snn_forward(const std::vector<SpikeTrain>& inputs,
                                    const SnnNetwork& net) {
    if (inputs.size() != net.input_count()) {
        throw std::invalid_argument(
            "snn_forward: got " + std::to_string(inputs.size()) +
            " input trains, network expects " + std::to_string(net.input_count()));
    }
    std::vector<SpikeTrain> current = inputs;
    for (const Matrix& w : net.layers()) {
        std::vector<SpikeTrain> next(w.rows());
        for (std::size_t j = 0; j < w.rows(); ++j) {
            SpikeTrain drive;
            for (std::size_t i = 0; i < w.cols(); ++i) {
                if (w.at(j, i) == 0.0) continue;
                drive = add(drive, scale(current[i], w.at(j, i)));
            }
            next[j] = lif(drive, net.neuron());
        }
        current = std::move(next);
    }
    return current;
}

double gamma_for(const Leak& alpha, GammaPolicy policy) {
    if (alpha.is_infinite() || alpha.rate() == 0.0) return 1.0;
    return policy == GammaPolicy::kSafe ? 3.0 : 2.0;
}

std::vector<double> snn_error_bound(std::span<const double> nu_norms,
                                    const SnnNetwork& net, double gamma,
                                    double theta) {
    if (!(gamma >= 1.0)) {
        throw std::invalid_argument("snn_error_bound: gamma must be >= 1");
    }
    if (!(theta > 0.0)) {
        throw std::invalid_argument("snn_error_bound: theta must be positive");
    }
    if (nu_norms.size() != net.input_count()) {
        throw std::invalid_argument(
            "snn_error_bound: got " + std::to_string(nu_norms.size()) +
            " norms, network expects " + std::to_string(net.input_count()));
    }
    auto quantize_up = [gamma, theta](std::vector<double> x) {
        for (double& v : x) v = std::ceil(gamma * v / theta) * theta;
        return x;
    };
    std::vector<double> x =
        quantize_up(std::vector<double>(nu_norms.begin(), nu_norms.end()));
    for (const Matrix& w : net.layers()) {
        std::vector<double> y(w.rows(), 0.0);
        for (std::size_t j = 0; j < w.rows(); ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < w.cols(); ++i) {
                acc += std::abs(w.at(j, i)) * x[i];
            }
            y[j] = acc;
        }
        x = quantize_up(std::move(y));
    }
    return x;
}

}  // namespace spikenorm
