#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "spikenorm/leak.hpp"
#include "spikenorm/spike_train.hpp"

namespace spikenorm {

// Re-initialization of the membrane after a firing event.
//
//   kToZero        : potential cleared; emits the full potential u.
//   kBySubtraction : one threshold quantum subtracted; emits sgn(u) * theta.
//   kToMod         : the whole integer multiple of theta subtracted (modulo
//                    reduction); emits trunc(u / theta) * theta.  The mode
//                    under which the LIF map is a norm quantizer.
enum class ResetMode { kToZero, kBySubtraction, kToMod };

struct LifConfig {
    double theta = 1.0;  // firing threshold, > 0
    Leak alpha = Leak(0.0);
    ResetMode reset = ResetMode::kToMod;
};

// Choice of the per-step decay factor of the discrete model.
//
//   kExactExp : beta = e^{-alpha dt}, consistent with the continuous
//               kernel (alpha a rate); the default.
//   kLinear   : beta = 1 - dt/alpha (alpha read as a time constant);
//               requires alpha > dt.  First-order in dt, kept for
//               comparison runs (CLI token "paper").
enum class BetaMode { kExactExp, kLinear };

struct DiscreteLifConfig {
    LifConfig base;
    double dt = 1e-3;  // grid step, > 0
    BetaMode beta_mode = BetaMode::kExactExp;
};

// Integer quantization by truncation: sgn(x) * floor(|x|).
inline double integer_truncate(double x) { return std::trunc(x); }

// Event-driven LIF response to a spike train.  Between events the membrane
// potential decays by e^{-alpha gap}; each event adds its amplitude; when
// |u| >= theta immediately after an event, a spike is emitted at that event
// time and the membrane is re-initialized per cfg.reset.  With leak toward
// zero, |u| cannot grow between events, so output times are a subset of
// input times.  The infinite leak degenerates to memoryless per-event
// quantization (no carry between events).
SpikeTrain lif(const SpikeTrain& input, const LifConfig& cfg);

// Grid-based LIF: u <- beta * u + a_n each step, fire and re-initialize
// whenever |u| >= theta.  The discharge acts at the firing step, matching
// the instantaneous-reset semantics of the event-driven model; with
// kExactExp beta and grid-aligned inputs the two produce the same spikes.
// Returns one output amplitude per input cell (0 where silent).
std::vector<double> lif_discrete(std::span<const double> amplitudes,
                                 const DiscreteLifConfig& cfg);

// Places amplitude a_i at index floor(t_i / dt).  Requires non-negative
// times and at most one spike per grid cell; a collision throws with both
// offending times in the message.
std::vector<double> to_grid(const SpikeTrain& train, double dt);

struct QuantizationResidual {
    SpikeTrain residual;  // input - lif(input), merged on the union grid
    double norm = 0.0;    // its Alexiewicz norm at cfg.alpha
};

// The quantization error train and its norm.  Under kToMod the norm is
// strictly below theta for every input.
QuantizationResidual quantization_residual(const SpikeTrain& input,
                                           const LifConfig& cfg);

}  // namespace spikenorm
