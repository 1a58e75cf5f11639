#include "spikenorm/lif.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "spikenorm/norms.hpp"

namespace spikenorm {

namespace {

void check_config(const LifConfig& cfg) {
    if (!(cfg.theta > 0.0) || !std::isfinite(cfg.theta)) {
        throw std::invalid_argument("LifConfig: theta must be positive and finite");
    }
}

// Emitted amplitude for a super-threshold potential u, |u| >= theta.
double discharge_amplitude(double u, double theta, ResetMode mode) {
    switch (mode) {
        case ResetMode::kToZero:
            return u;
        case ResetMode::kBySubtraction:
            return u > 0.0 ? theta : -theta;
        case ResetMode::kToMod:
            return integer_truncate(u / theta) * theta;
    }
    return 0.0;  // unreachable
}

}  // namespace

SpikeTrain lif(const SpikeTrain& input, const LifConfig& cfg) {
    check_config(cfg);
    std::vector<Spike> out;

    if (cfg.alpha.is_infinite()) {
        // Memoryless regime: each event is quantized on its own.
        for (const Spike& e : input.events()) {
            if (std::abs(e.amplitude) >= cfg.theta) {
                out.push_back(Spike{
                    e.time, discharge_amplitude(e.amplitude, cfg.theta, cfg.reset)});
            }
        }
        return SpikeTrain(std::move(out));
    }

    double u = 0.0;
    double prev_t = 0.0;
    bool first = true;
    for (const Spike& e : input.events()) {
        if (!first) {
            const double decay = cfg.alpha.decay(e.time - prev_t);
            // Leak only ever pulls the potential toward zero; sub-threshold
            // drive would invalidate the events-only firing schedule.
            assert(decay >= 0.0 && decay <= 1.0);
            u *= decay;
        }
        first = false;
        prev_t = e.time;
        u += e.amplitude;
        if (std::abs(u) >= cfg.theta) {
            const double b = discharge_amplitude(u, cfg.theta, cfg.reset);
            out.push_back(Spike{e.time, b});
            if (cfg.reset == ResetMode::kToZero) {
                u = 0.0;
            } else {
                u -= b;
            }
            // Modulo reduction leaves less than one quantum behind.
            assert(cfg.reset != ResetMode::kToMod || std::abs(u) < cfg.theta);
        }
    }
    return SpikeTrain(std::move(out));
}

std::vector<double> lif_discrete(std::span<const double> amplitudes,
                                 const DiscreteLifConfig& cfg) {
    check_config(cfg.base);
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        throw std::invalid_argument("DiscreteLifConfig: dt must be positive");
    }
    double beta;
    if (cfg.beta_mode == BetaMode::kExactExp) {
        beta = cfg.base.alpha.decay(cfg.dt);
    } else {
        if (!cfg.base.alpha.is_infinite() && !(cfg.base.alpha.rate() > cfg.dt)) {
            throw std::invalid_argument(
                "DiscreteLifConfig: beta = 1 - dt/alpha requires alpha > dt");
        }
        beta = cfg.base.alpha.is_infinite()
                   ? 1.0
                   : 1.0 - cfg.dt / cfg.base.alpha.rate();
    }

    std::vector<double> out(amplitudes.size(), 0.0);
    double u = 0.0;
    for (std::size_t n = 0; n < amplitudes.size(); ++n) {
        u = beta * u + amplitudes[n];
        if (std::abs(u) >= cfg.base.theta) {
            const double b = discharge_amplitude(u, cfg.base.theta, cfg.base.reset);
            out[n] = b;
            if (cfg.base.reset == ResetMode::kToZero) {
                u = 0.0;
            } else {
                u -= b;
            }
        }
    }
    return out;
}

std::vector<double> to_grid(const SpikeTrain& train, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("to_grid: dt must be positive");
    }
    std::vector<double> grid;
    std::int64_t prev_cell = -1;
    double prev_time = 0.0;
    for (const Spike& e : train.events()) {
        if (e.time < 0.0) {
            throw std::invalid_argument("to_grid: negative spike time " +
                                        std::to_string(e.time));
        }
        const auto cell = static_cast<std::int64_t>(std::floor(e.time / dt));
        if (cell == prev_cell) {
            throw std::invalid_argument(
                "to_grid: spikes at t=" + std::to_string(prev_time) + " and t=" +
                std::to_string(e.time) + " fall into the same cell; reduce dt");
        }
        constexpr std::int64_t kMaxGridCells = 100'000'000;
        if (cell >= kMaxGridCells) {
            throw std::invalid_argument(
                "to_grid: spike at t=" + std::to_string(e.time) +
                " needs more than " + std::to_string(kMaxGridCells) +
                " cells at dt=" + std::to_string(dt));
        }
        if (grid.size() <= static_cast<std::size_t>(cell)) {
            grid.resize(static_cast<std::size_t>(cell) + 1, 0.0);
        }
        grid[static_cast<std::size_t>(cell)] = e.amplitude;
        prev_cell = cell;
        prev_time = e.time;
    }
    return grid;
}

QuantizationResidual quantization_residual(const SpikeTrain& input,
                                           const LifConfig& cfg) {
    QuantizationResidual r;
    r.residual = input - lif(input, cfg);
    r.norm = alexiewicz_norm(r.residual, cfg.alpha);
    return r;
}

}  // namespace spikenorm
