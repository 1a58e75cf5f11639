#include "spikenorm/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spikenorm {

std::pair<SpikeTrain, SpikeTrain> quantize_split(const SpikeTrain& input,
                                                 const LifConfig& cfg) {
    if (cfg.reset != ResetMode::kToMod) {
        throw std::invalid_argument(
            "quantize_split: requires reset-to-mod re-initialization");
    }
    SpikeTrain psi = lif(input, cfg);
    SpikeTrain rho = input - psi;
    return {std::move(psi), std::move(rho)};
}

namespace {

// Amplitudes as integer multiples of theta, snapped within 1e-9.
std::vector<std::int64_t> snap_to_integers(const SpikeTrain& psi, double theta) {
    std::vector<std::int64_t> units;
    units.reserve(psi.size());
    for (const Spike& e : psi.events()) {
        const double ratio = e.amplitude / theta;
        const double snapped = std::round(ratio);
        if (std::abs(ratio - snapped) > 1e-9 || snapped == 0.0) {
            throw std::invalid_argument(
                "unit_decompose: amplitude " + std::to_string(e.amplitude) +
                " is not a nonzero integer multiple of theta");
        }
        units.push_back(static_cast<std::int64_t>(snapped));
    }
    return units;
}

std::int64_t walk_height(const std::vector<std::int64_t>& amplitudes) {
    std::int64_t s = 0, best = 0;
    for (std::int64_t a : amplitudes) {
        s += a;
        best = std::max(best, std::abs(s));
    }
    return best;
}

// One decomposition round on the walk S_k of the integer amplitudes, with
// N = max_k |S_k|.  Produces the unit profile D_k in {-1, 0, 1} that rides
// at +1 across the top peaks and at -1 across the bottom peaks, changing
// level only where the peak-shift constraint |S_k - D_k| <= N - 1 forces it.
// A forced drop straight from +1 to -1 lands a single amplitude of -2 on a
// large opposing spike; a gradual walk forces two separate -1 steps.
// Subtracting the profile therefore moves every peak one step toward zero,
// and by the triangle inequality the norm drops by exactly one.
std::vector<std::int64_t> unit_profile(const std::vector<std::int64_t>& amplitudes,
                                       std::int64_t n) {
    std::vector<std::int64_t> profile(amplitudes.size());
    std::int64_t s = 0;
    std::int64_t d = 0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        s += amplitudes[k];
        const std::int64_t lo = std::max<std::int64_t>(-1, s - (n - 1));
        const std::int64_t hi = std::min<std::int64_t>(1, s + (n - 1));
        d = std::clamp(d, lo, hi);
        profile[k] = d;
    }
    return profile;
}

}  // namespace

std::vector<SpikeTrain> unit_decompose(const SpikeTrain& psi, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("unit_decompose: theta must be positive");
    }
    std::vector<std::int64_t> amplitudes = snap_to_integers(psi, theta);
    std::vector<double> times;
    times.reserve(psi.size());
    for (const Spike& e : psi.events()) times.push_back(e.time);

    std::vector<SpikeTrain> units;
    std::int64_t n = walk_height(amplitudes);
    while (n >= 1) {
        const std::vector<std::int64_t> profile = unit_profile(amplitudes, n);
        std::vector<Spike> unit;
        std::int64_t level = 0;
        for (std::size_t k = 0; k < amplitudes.size(); ++k) {
            const std::int64_t step = profile[k] - level;
            level = profile[k];
            if (step != 0) {
                unit.push_back(Spike{times[k], static_cast<double>(step) * theta});
                amplitudes[k] -= step;
            }
        }
        units.push_back(SpikeTrain(std::move(unit)));
        --n;
        assert(walk_height(amplitudes) == n);
    }
    assert(std::all_of(amplitudes.begin(), amplitudes.end(),
                       [](std::int64_t a) { return a == 0; }));
    return units;
}

Decomposition decompose(const SpikeTrain& input, const LifConfig& cfg) {
    Decomposition d;
    auto [psi, rho] = quantize_split(input, cfg);
    d.psi = std::move(psi);
    d.rho = std::move(rho);
    d.units = unit_decompose(d.psi, cfg.theta);
    return d;
}

}  // namespace spikenorm
