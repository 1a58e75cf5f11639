#pragma once

#include <span>

#include "spikenorm/leak.hpp"
#include "spikenorm/matrix.hpp"
#include "spikenorm/spike_train.hpp"

namespace spikenorm {

// Maximum absolute leak-weighted prefix sum,
//
//   max_n | sum_{j<=n} a_j e^{-alpha (t_n - t_j)} |,
//
// evaluated in O(N) via the running recurrence S <- S * e^{-alpha gap} + a_n.
// For the infinite leak this degenerates to max_i |a_i|.  Empty train -> 0.
double alexiewicz_norm(const SpikeTrain& train, const Leak& alpha);

// Maximum absolute leak-weighted sum over any contiguous window,
//
//   max_{1<=m<=n} | sum_{j=m..n} a_j e^{-alpha (t_n - t_j)} |.
//
// O(N) for alpha in {0, inf} (running min/max of prefix sums, resp. the max
// single amplitude), O(N^2) otherwise.
double discrepancy_norm(const SpikeTrain& train, const Leak& alpha);

// Euclidean-style comparison norm: sqrt of the sum of squared leak-weighted
// prefix sums.  Undefined for the infinite leak (throws).
double l2_norm(const SpikeTrain& train, const Leak& alpha);

// Direct evaluation of the defining max/double-sum formulas, with no
// incremental shortcuts.  Quadratic; kept as independent reference
// implementations and used as oracles by the tests.
double alexiewicz_norm_direct(const SpikeTrain& train, const Leak& alpha);
double discrepancy_norm_direct(const SpikeTrain& train, const Leak& alpha);

// The bidiagonal shear T (1 on the diagonal, -1 on the subdiagonal) mapping
// the hypercube [-1,1]^N onto the zero-leak unit ball of amplitude vectors:
// x = T y has prefix sums y, so x is in the ball iff y is in the cube.
Matrix unit_ball_shear(std::size_t n);

// True iff every prefix sum of the amplitude vector lies in [-1, 1].
bool in_unit_ball_a0(std::span<const double> amplitudes);

}  // namespace spikenorm
