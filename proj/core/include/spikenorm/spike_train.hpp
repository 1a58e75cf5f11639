#pragma once

#include <cstddef>
#include <vector>

namespace spikenorm {

struct Spike {
    double time = 0.0;       // seconds
    double amplitude = 0.0;  // dimensionless weight

    friend bool operator==(const Spike&, const Spike&) = default;
};

// A finite train of weighted impulses, kept in canonical form: events sorted
// by strictly increasing time, coincident events merged by amplitude
// summation, zero amplitudes dropped.  Canonical form makes equality testing
// meaningful: two trains are the same signal iff their event lists match.
//
// Instances are immutable after construction and safe to share across
// threads.
class SpikeTrain {
public:
    SpikeTrain() = default;

    // Canonicalizes: sorts, merges coincident times, drops zero amplitudes.
    // Throws std::invalid_argument on non-finite times or amplitudes.
    explicit SpikeTrain(std::vector<Spike> events);

    const std::vector<Spike>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    // max_i |a_i|; 0 for the empty train.
    double max_abs_amplitude() const;

    friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

private:
    std::vector<Spike> events_;
};

// Canonical construction from (time, amplitude) pairs.
SpikeTrain make_train(std::vector<Spike> events);

// Pointwise superposition of two trains (merged on the union of their
// event times, sorted-merge order for deterministic float summation).
SpikeTrain add(const SpikeTrain& a, const SpikeTrain& b);

// Every amplitude multiplied by lambda (lambda must be finite).
SpikeTrain scale(const SpikeTrain& a, double lambda);

// Every time increased by dt (dt must be finite).
SpikeTrain shift(const SpikeTrain& a, double dt);

inline SpikeTrain operator+(const SpikeTrain& a, const SpikeTrain& b) {
    return add(a, b);
}
inline SpikeTrain operator-(const SpikeTrain& a, const SpikeTrain& b) {
    return add(a, scale(b, -1.0));
}

// Event-wise comparison with an absolute tolerance on both times and
// amplitudes.  Intended for tests; canonical equality is operator==.
bool approx_equal(const SpikeTrain& a, const SpikeTrain& b, double tol);

}  // namespace spikenorm
