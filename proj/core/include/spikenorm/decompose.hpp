#pragma once

#include <utility>
#include <vector>

#include "spikenorm/lif.hpp"
#include "spikenorm/spike_train.hpp"

namespace spikenorm {

struct Decomposition {
    SpikeTrain psi;                  // theta-quantized part, = lif(input)
    SpikeTrain rho;                  // sub-threshold residual, norm < theta
    std::vector<SpikeTrain> units;   // unit-norm components summing to psi
};

// Splits input = psi + rho with psi = lif(input, cfg) and rho the
// sub-threshold remainder.  Only kToMod reset produces a quantized psi with
// guaranteed residual norm < theta; other modes throw.
std::pair<SpikeTrain, SpikeTrain> quantize_split(const SpikeTrain& input,
                                                 const LifConfig& cfg);

// Decomposes a train whose amplitudes are integer multiples of theta
// (tolerance 1e-9, then snapped) into exactly a = ||psi/theta||_{A,0}
// components whose amplitude walks stay in [-theta, theta] (unit zero-leak
// norm in units of theta) and which sum back to psi exactly in those
// integer units.
//
// Each round subtracts a unit-norm train that moves every peak of the
// amplitude walk one step toward zero, so the norm drops by exactly one per
// round.  An empty input yields an empty list.  Non-integer amplitudes
// throw std::invalid_argument.
std::vector<SpikeTrain> unit_decompose(const SpikeTrain& psi, double theta);

// quantize_split followed by unit_decompose of the quantized part.
Decomposition decompose(const SpikeTrain& input, const LifConfig& cfg);

}  // namespace spikenorm
