#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spikenorm {

// Leak rate of a LIF membrane, in 1/seconds.  The value is either a finite
// non-negative rate or the distinguished infinite case, which behaves as a
// genuine regime of its own (memoryless integration) rather than as a large
// float.
class Leak {
public:
    Leak(double rate) : rate_(rate) {
        if (std::isnan(rate) || rate < 0.0) {
            throw std::invalid_argument("Leak: rate must be >= 0, got " +
                                        std::to_string(rate));
        }
        if (std::isinf(rate)) rate_ = std::numeric_limits<double>::infinity();
    }

    static Leak infinity() {
        return Leak(std::numeric_limits<double>::infinity());
    }

    bool is_infinite() const { return std::isinf(rate_); }

    // Finite rate; calling this on the infinite leak is a programming error.
    double rate() const {
        if (is_infinite()) {
            throw std::logic_error("Leak: rate() called on infinite leak");
        }
        return rate_;
    }

    // Decay factor e^{-rate * dt} of the membrane over a time gap dt >= 0.
    double decay(double dt) const {
        if (is_infinite()) return dt > 0.0 ? 0.0 : 1.0;
        return std::exp(-rate_ * dt);
    }

    friend bool operator==(const Leak& a, const Leak& b) {
        return a.rate_ == b.rate_ || (a.is_infinite() && b.is_infinite());
    }

private:
    double rate_;
};

}  // namespace spikenorm
