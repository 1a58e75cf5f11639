#include "spikenorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spikenorm {

double alexiewicz_norm(const SpikeTrain& train, const Leak& alpha) {
    const auto& ev = train.events();
    if (ev.empty()) return 0.0;
    if (alpha.is_infinite()) return train.max_abs_amplitude();
    double s = 0.0;
    double best = 0.0;
    double prev_t = ev.front().time;
    for (const Spike& e : ev) {
        s = s * alpha.decay(e.time - prev_t) + e.amplitude;
        prev_t = e.time;
        best = std::max(best, std::abs(s));
    }
    return best;
}

double discrepancy_norm(const SpikeTrain& train, const Leak& alpha) {
    const auto& ev = train.events();
    if (ev.empty()) return 0.0;
    if (alpha.is_infinite()) return train.max_abs_amplitude();
    if (alpha.rate() == 0.0) {
        // Window sums are differences of prefix sums (the empty prefix
        // counts), so the norm is the walk's range around zero.
        double s = 0.0, lo = 0.0, hi = 0.0;
        for (const Spike& e : ev) {
            s += e.amplitude;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return hi - lo;
    }
    double best = 0.0;
    for (std::size_t n = 0; n < ev.size(); ++n) {
        double s = 0.0;
        double weight = 1.0;
        for (std::size_t m = n + 1; m-- > 0;) {
            if (m + 1 <= n) weight *= alpha.decay(ev[m + 1].time - ev[m].time);
            s += ev[m].amplitude * weight;
            best = std::max(best, std::abs(s));
        }
    }
    return best;
}

double l2_norm(const SpikeTrain& train, const Leak& alpha) {
    if (alpha.is_infinite()) {
        throw std::invalid_argument("l2_norm: undefined for infinite leak");
    }
    const auto& ev = train.events();
    double s = 0.0;
    double sumsq = 0.0;
    double prev_t = ev.empty() ? 0.0 : ev.front().time;
    for (const Spike& e : ev) {
        s = s * alpha.decay(e.time - prev_t) + e.amplitude;
        prev_t = e.time;
        sumsq += s * s;
    }
    return std::sqrt(sumsq);
}

double alexiewicz_norm_direct(const SpikeTrain& train, const Leak& alpha) {
    const auto& ev = train.events();
    if (alpha.is_infinite()) return train.max_abs_amplitude();
    const double a = alpha.rate();
    double best = 0.0;
    for (std::size_t n = 0; n < ev.size(); ++n) {
        double s = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
            s += ev[j].amplitude * std::exp(-a * (ev[n].time - ev[j].time));
        }
        best = std::max(best, std::abs(s));
    }
    return best;
}

double discrepancy_norm_direct(const SpikeTrain& train, const Leak& alpha) {
    const auto& ev = train.events();
    if (alpha.is_infinite()) return train.max_abs_amplitude();
    const double a = alpha.rate();
    double best = 0.0;
    for (std::size_t n = 0; n < ev.size(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            double s = 0.0;
            for (std::size_t j = m; j <= n; ++j) {
                s += ev[j].amplitude * std::exp(-a * (ev[n].time - ev[j].time));
            }
            best = std::max(best, std::abs(s));
        }
    }
    return best;
}

Matrix unit_ball_shear(std::size_t n) {
    if (n == 0) throw std::invalid_argument("unit_ball_shear: n must be >= 1");
    Matrix t(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        t.at(i, i) = 1.0;
        if (i > 0) t.at(i, i - 1) = -1.0;
    }
    return t;
}

bool in_unit_ball_a0(std::span<const double> amplitudes) {
    double s = 0.0;
    for (double a : amplitudes) {
        s += a;
        if (s < -1.0 || s > 1.0) return false;
    }
    return true;
}

}  // namespace spikenorm
