#include "spikenorm/spike_train.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spikenorm {

namespace {

void check_finite(const Spike& s) {
    if (!std::isfinite(s.time) || !std::isfinite(s.amplitude)) {
        throw std::invalid_argument(
            "SpikeTrain: non-finite event (t=" + std::to_string(s.time) +
            ", a=" + std::to_string(s.amplitude) + ")");
    }
}

}  // namespace

SpikeTrain::SpikeTrain(std::vector<Spike> events) : events_(std::move(events)) {
    for (const Spike& s : events_) check_finite(s);
    std::stable_sort(events_.begin(), events_.end(),
                     [](const Spike& a, const Spike& b) { return a.time < b.time; });
    // Merge coincident impulses and drop exact zeros in one pass.
    std::size_t out = 0;
    for (std::size_t i = 0; i < events_.size();) {
        double t = events_[i].time;
        double a = events_[i].amplitude;
        std::size_t j = i + 1;
        while (j < events_.size() && events_[j].time == t) {
            a += events_[j].amplitude;
            ++j;
        }
        if (a != 0.0) events_[out++] = Spike{t, a};
        i = j;
    }
    events_.resize(out);
}

double SpikeTrain::max_abs_amplitude() const {
    double m = 0.0;
    for (const Spike& s : events_) m = std::max(m, std::abs(s.amplitude));
    return m;
}

SpikeTrain make_train(std::vector<Spike> events) {
    return SpikeTrain(std::move(events));
}

SpikeTrain add(const SpikeTrain& a, const SpikeTrain& b) {
    std::vector<Spike> merged;
    merged.reserve(a.size() + b.size());
    auto ia = a.events().begin(), ea = a.events().end();
    auto ib = b.events().begin(), eb = b.events().end();
    while (ia != ea && ib != eb) {
        if (ia->time < ib->time) {
            merged.push_back(*ia++);
        } else if (ib->time < ia->time) {
            merged.push_back(*ib++);
        } else {
            merged.push_back(Spike{ia->time, ia->amplitude + ib->amplitude});
            ++ia;
            ++ib;
        }
    }
    merged.insert(merged.end(), ia, ea);
    merged.insert(merged.end(), ib, eb);
    return SpikeTrain(std::move(merged));
}

SpikeTrain scale(const SpikeTrain& a, double lambda) {
    if (!std::isfinite(lambda)) {
        throw std::invalid_argument("scale: lambda must be finite");
    }
    std::vector<Spike> events = a.events();
    for (Spike& s : events) s.amplitude *= lambda;
    return SpikeTrain(std::move(events));
}

SpikeTrain shift(const SpikeTrain& a, double dt) {
    if (!std::isfinite(dt)) {
        throw std::invalid_argument("shift: dt must be finite");
    }
    std::vector<Spike> events = a.events();
    for (Spike& s : events) s.time += dt;
    return SpikeTrain(std::move(events));
}

bool approx_equal(const SpikeTrain& a, const SpikeTrain& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.events()[i].time - b.events()[i].time) > tol) return false;
        if (std::abs(a.events()[i].amplitude - b.events()[i].amplitude) > tol)
            return false;
    }
    return true;
}

}  // namespace spikenorm
