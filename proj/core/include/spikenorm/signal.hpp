#pragma once

#include <vector>

#include "spikenorm/leak.hpp"
#include "spikenorm/spike_train.hpp"

namespace spikenorm {

// A signal that is constant on each interval (u_{k-1}, u_k) of a strictly
// increasing breakpoint grid, optionally with a spike train superimposed.
class PiecewiseConstantSignal {
public:
    // breakpoints: u_0 < u_1 < ... < u_K; values: one per interval (size K).
    PiecewiseConstantSignal(std::vector<double> breakpoints,
                            std::vector<double> values,
                            SpikeTrain impulses = SpikeTrain());

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    const SpikeTrain& impulses() const { return impulses_; }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    SpikeTrain impulses_;
};

// Replaces each constant piece of value c on an interval U of width h by a
// single impulse of amplitude c*h, placed so that the leak-weighted integral
// of the piece is preserved:
//
//   integral over U of c e^{alpha t} dt  =  h c e^{alpha s}
//
// i.e. s = midpoint of U for alpha = 0, and
// s = u_{k-1} + log((e^{alpha h} - 1) / (alpha h)) / alpha for alpha > 0.
// Superimposed impulses pass through unchanged.  As a consequence the
// alpha-weighted prefix integrals of the signal and of the returned train
// agree at every breakpoint.
//
// Throws std::invalid_argument for the infinite leak (no such construction).
SpikeTrain signal_to_spikes(const PiecewiseConstantSignal& s, const Leak& alpha);

}  // namespace spikenorm
