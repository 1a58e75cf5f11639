#include "spikenorm/signal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spikenorm {

PiecewiseConstantSignal::PiecewiseConstantSignal(std::vector<double> breakpoints,
                                                 std::vector<double> values,
                                                 SpikeTrain impulses)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      impulses_(std::move(impulses)) {
    if (breakpoints_.empty() && !values_.empty()) {
        throw std::invalid_argument("PiecewiseConstantSignal: values without breakpoints");
    }
    if (!breakpoints_.empty() && values_.size() + 1 != breakpoints_.size()) {
        throw std::invalid_argument(
            "PiecewiseConstantSignal: need one value per interval, got " +
            std::to_string(values_.size()) + " values for " +
            std::to_string(breakpoints_.size()) + " breakpoints");
    }
    for (double u : breakpoints_) {
        if (!std::isfinite(u)) {
            throw std::invalid_argument("PiecewiseConstantSignal: non-finite breakpoint");
        }
    }
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        if (!(breakpoints_[k - 1] < breakpoints_[k])) {
            throw std::invalid_argument(
                "PiecewiseConstantSignal: breakpoints must be strictly increasing");
        }
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("PiecewiseConstantSignal: non-finite value");
        }
    }
}

SpikeTrain signal_to_spikes(const PiecewiseConstantSignal& s, const Leak& alpha) {
    if (alpha.is_infinite()) {
        throw std::invalid_argument(
            "signal_to_spikes: undefined for infinite leak");
    }
    const double a = alpha.rate();
    std::vector<Spike> spikes;
    spikes.reserve(s.values().size());
    for (std::size_t k = 0; k < s.values().size(); ++k) {
        const double lo = s.breakpoints()[k];
        const double hi = s.breakpoints()[k + 1];
        const double c = s.values()[k];
        if (c == 0.0) continue;
        const double h = hi - lo;
        double t;
        if (a == 0.0) {
            t = lo + 0.5 * h;
        } else {
            // s = lo + log((e^{a h} - 1) / (a h)) / a, written with expm1 so
            // small a*h does not cancel.
            t = lo + (std::log(std::expm1(a * h)) - std::log(a * h)) / a;
        }
        spikes.push_back(Spike{t, c * h});
    }
    return add(SpikeTrain(std::move(spikes)), s.impulses());
}

}  // namespace spikenorm
