#include "spikenorm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "spikenorm/json_io.hpp"
#include "spikenorm/norms.hpp"
#include "spikenorm/rng.hpp"

namespace spikenorm {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

const char* reset_name(ResetMode mode) {
    switch (mode) {
        case ResetMode::kToZero: return "zero";
        case ResetMode::kBySubtraction: return "sub";
        case ResetMode::kToMod: return "mod";
    }
    return "?";
}

constexpr ResetMode kAllModes[] = {ResetMode::kToMod, ResetMode::kBySubtraction,
                                   ResetMode::kToZero};

std::string label(const std::string& base, const std::string& param, double v) {
    std::ostringstream os;
    os << base << "[" << param << "=" << format_double(v) << "]";
    return os.str();
}

std::string leak_label(const std::string& base, const Leak& alpha) {
    std::ostringstream os;
    os << base << "[alpha=" << leak_to_token(alpha) << "]";
    return os.str();
}

// Antisymmetric three-spike pair driving the amplification ratio toward 2
// for intermediate leaks: base (-3/2, 1, 3/2) and perturbation (1, -1, 1)
// at spacing eps, the perturbation of unit norm for every leak.
SpikeTrain resonance_base(double eps, bool flipped) {
    const double s = flipped ? -1.0 : 1.0;
    return make_train({{0.0, s * -1.5}, {eps, s * 1.0}, {2 * eps, s * 1.5}});
}

SpikeTrain resonance_perturbation(double eps, bool flipped) {
    const double s = flipped ? -1.0 : 1.0;
    return make_train({{0.0, s * 1.0}, {eps, s * -1.0}, {2 * eps, s * 1.0}});
}

}  // namespace

SummaryStats summarize(const std::vector<double>& values) {
    SummaryStats s;
    s.histogram.assign(30, 0);
    s.count = static_cast<int>(values.size());
    if (values.empty()) return s;
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.hist_lo = s.min;
    s.hist_hi = s.max;
    const double width = s.hist_hi - s.hist_lo;
    for (double v : values) {
        int b = width > 0.0
                    ? static_cast<int>((v - s.hist_lo) / width * 30.0)
                    : 0;
        b = std::clamp(b, 0, 29);
        ++s.histogram[static_cast<std::size_t>(b)];
    }
    return s;
}

bool ExperimentReport::all_asserted_pass() const {
    for (const TrialRecord& t : trials) {
        if (t.asserted && !t.pass) return false;
    }
    return true;
}

SummaryStats ExperimentReport::measured_stats() const {
    std::vector<double> values;
    values.reserve(trials.size());
    for (const TrialRecord& t : trials) values.push_back(t.measured);
    return summarize(values);
}

void ExperimentReport::write_csv(std::ostream& os) const {
    os << "experiment,reset,alpha,theta,measured,bound,pass\n";
    for (const TrialRecord& t : trials) {
        os << t.experiment << ',' << t.reset << ',' << leak_to_token(t.alpha)
           << ',' << format_double(t.theta) << ',' << format_double(t.measured)
           << ',' << (std::isnan(t.bound) ? "nan" : format_double(t.bound))
           << ',' << (t.pass ? '1' : '0') << '\n';
    }
}

void ExperimentReport::write_summary_json(std::ostream& os) const {
    const SummaryStats s = measured_stats();
    int asserted = 0, failed = 0;
    for (const TrialRecord& t : trials) {
        if (t.asserted) {
            ++asserted;
            if (!t.pass) ++failed;
        }
    }
    os << "{\n  \"name\": \"" << name << "\",\n";
    os << "  \"config\": {\"seed\": " << config.seed
       << ", \"n_trials\": " << config.n_trials
       << ", \"n_spikes\": " << config.n_spikes << ", \"amp_range\": ["
       << format_double(config.amp_lo) << ", " << format_double(config.amp_hi)
       << "], \"alphas\": [";
    for (std::size_t i = 0; i < config.alphas.size(); ++i) {
        if (i) os << ", ";
        if (config.alphas[i].is_infinite()) {
            os << "\"inf\"";
        } else {
            os << format_double(config.alphas[i].rate());
        }
    }
    os << "], \"theta\": " << format_double(config.theta)
       << ", \"grid_spacing\": " << format_double(config.grid_spacing)
       << "},\n";
    os << "  \"rows\": " << trials.size() << ",\n";
    os << "  \"asserted_rows\": " << asserted << ",\n";
    os << "  \"failed_asserted_rows\": " << failed << ",\n";
    os << "  \"all_pass\": " << (failed == 0 ? "true" : "false") << ",\n";
    os << "  \"measured\": {\"count\": " << s.count << ", \"min\": "
       << format_double(s.min) << ", \"max\": " << format_double(s.max)
       << ", \"mean\": " << format_double(s.mean)
       << ", \"histogram\": {\"lo\": " << format_double(s.hist_lo)
       << ", \"hi\": " << format_double(s.hist_hi) << ", \"counts\": [";
    for (std::size_t i = 0; i < s.histogram.size(); ++i) {
        if (i) os << ", ";
        os << s.histogram[i];
    }
    os << "]}}\n}\n";
}

SpikeTrain gen_random_train(const ExperimentConfig& cfg, std::uint64_t stream) {
    SplitMix64 rng = trial_rng(cfg.seed, stream);
    std::vector<Spike> events;
    events.reserve(static_cast<std::size_t>(cfg.n_spikes));
    for (int k = 0; k < cfg.n_spikes; ++k) {
        events.push_back(Spike{static_cast<double>(k + 1) * cfg.grid_spacing,
                               rng.uniform(cfg.amp_lo, cfg.amp_hi)});
    }
    return SpikeTrain(std::move(events));
}

ExperimentReport exp_quantization(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.name = "quantization";
    report.config = cfg;
    for (ResetMode mode : kAllModes) {
        const bool mod = mode == ResetMode::kToMod;
        for (const Leak& alpha : cfg.alphas) {
            for (int trial = 0; trial < cfg.n_trials; ++trial) {
                const SpikeTrain eta =
                    gen_random_train(cfg, static_cast<std::uint64_t>(trial));
                const LifConfig lc{cfg.theta, alpha, mode};
                const QuantizationResidual q = quantization_residual(eta, lc);
                report.trials.push_back(TrialRecord{
                    "quantization_a", reset_name(mode), alpha, cfg.theta,
                    q.norm, mod ? cfg.theta : kNan, !mod || q.norm < cfg.theta,
                    mod});
                if (!alpha.is_infinite()) {
                    report.trials.push_back(TrialRecord{
                        "quantization_l2", reset_name(mode), alpha, cfg.theta,
                        l2_norm(q.residual, alpha), kNan, true, false});
                }
            }
        }
    }
    // Spike-count sweep at alpha = 1: the Alexiewicz error stays below
    // theta while the Euclidean error grows with the count.
    const Leak sweep_alpha(1.0);
    for (int n : {100, 200, 300, 400, 500}) {
        ExperimentConfig sweep_cfg = cfg;
        sweep_cfg.n_spikes = n;
        for (int trial = 0; trial < cfg.n_trials; ++trial) {
            const std::uint64_t stream =
                static_cast<std::uint64_t>(n) * 1000003ULL +
                static_cast<std::uint64_t>(trial);
            const SpikeTrain eta = gen_random_train(sweep_cfg, stream);
            const LifConfig lc{cfg.theta, sweep_alpha, ResetMode::kToMod};
            const QuantizationResidual q = quantization_residual(eta, lc);
            report.trials.push_back(TrialRecord{
                label("quantization_sweep_a", "n", n), "mod", sweep_alpha,
                cfg.theta, q.norm, cfg.theta, q.norm < cfg.theta, true});
            report.trials.push_back(TrialRecord{
                label("quantization_sweep_l2", "n", n), "mod", sweep_alpha,
                cfg.theta, l2_norm(q.residual, sweep_alpha), kNan, true, false});
        }
    }
    return report;
}

ExperimentReport exp_lag_threshold(const ExperimentConfig& cfg,
                                   std::span<const double> dt_list,
                                   std::span<const double> eps_list) {
    ExperimentReport report;
    report.name = "lag_threshold";
    report.config = cfg;
    const double small_dt = cfg.grid_spacing / 100.0;
    for (ResetMode mode : kAllModes) {
        const bool mod = mode == ResetMode::kToMod;
        for (const Leak& alpha : cfg.alphas) {
            for (int trial = 0; trial < cfg.n_trials; ++trial) {
                const SpikeTrain eta =
                    gen_random_train(cfg, static_cast<std::uint64_t>(trial));
                const LifConfig lc{cfg.theta, alpha, mode};
                const SpikeTrain out = lif(eta, lc);
                const double norm_eta = alexiewicz_norm(eta, alpha);
                const double max_amp = eta.max_abs_amplitude();
                for (double dt : dt_list) {
                    const double lhs =
                        alexiewicz_norm(lif(shift(eta, dt), lc) - out, alpha);
                    double rhs = kNan;
                    if (!alpha.is_infinite()) {
                        rhs = max_amp + 2.0 * cfg.theta +
                              dt * alpha.rate() * (norm_eta + max_amp) + 1e-6;
                    }
                    const bool in_regime =
                        dt <= small_dt * (1.0 + 1e-12) && !alpha.is_infinite();
                    report.trials.push_back(TrialRecord{
                        label("lag", "dt", dt), reset_name(mode), alpha,
                        cfg.theta, lhs, rhs,
                        std::isnan(rhs) || lhs <= rhs, mod && in_regime});
                }
                for (double eps : eps_list) {
                    const LifConfig bumped{cfg.theta + eps, alpha, mode};
                    const double lhs =
                        alexiewicz_norm(lif(eta, bumped) - out, alpha);
                    const double rhs = 2.0 * cfg.theta + eps;
                    report.trials.push_back(TrialRecord{
                        label("threshold", "eps", eps), reset_name(mode), alpha,
                        cfg.theta, lhs, rhs, lhs <= rhs + 1e-9, mod});
                }
            }
        }
    }
    return report;
}

ExperimentReport exp_quasi_isometry(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.name = "quasi_isometry";
    report.config = cfg;
    const Leak fixed_alpha(4.0);
    const double theta_sweep[] = {1.0, 0.5, 0.25, 0.125, 0.0625};
    const Leak alpha_sweep[] = {Leak(0.0),  Leak(0.5), Leak(1.0),
                                Leak(2.0),  Leak(4.0), Leak::infinity()};
    const double fixed_theta = 0.3;
    for (ResetMode mode : kAllModes) {
        const bool mod = mode == ResetMode::kToMod;
        for (int trial = 0; trial < cfg.n_trials; ++trial) {
            const SpikeTrain eta1 =
                gen_random_train(cfg, 2 * static_cast<std::uint64_t>(trial));
            const SpikeTrain eta2 =
                gen_random_train(cfg, 2 * static_cast<std::uint64_t>(trial) + 1);
            const SpikeTrain diff = eta1 - eta2;
            const double dist4 = alexiewicz_norm(diff, fixed_alpha);
            for (double theta : theta_sweep) {
                const LifConfig lc{theta, fixed_alpha, mode};
                const double mapped =
                    alexiewicz_norm(lif(eta1, lc) - lif(eta2, lc), fixed_alpha);
                const double lhs = std::abs(mapped - dist4);
                report.trials.push_back(TrialRecord{
                    label("quasi_theta", "theta", theta), reset_name(mode),
                    fixed_alpha, theta, lhs, 2.0 * theta,
                    lhs <= 2.0 * theta + 1e-9, mod});
            }
            for (const Leak& alpha : alpha_sweep) {
                const LifConfig lc{fixed_theta, alpha, mode};
                const double dist = alexiewicz_norm(diff, alpha);
                const double mapped =
                    alexiewicz_norm(lif(eta1, lc) - lif(eta2, lc), alpha);
                const double lhs = std::abs(mapped - dist);
                report.trials.push_back(TrialRecord{
                    leak_label("quasi_alpha", alpha), reset_name(mode), alpha,
                    fixed_theta, lhs, 2.0 * fixed_theta,
                    lhs <= 2.0 * fixed_theta + 1e-9, mod});
            }
        }
    }
    return report;
}

AlphaLambdaSurface alpha_lambda_lif(const SpikeTrain& base, const SpikeTrain& nu,
                                    std::span<const double> alpha_grid,
                                    std::span<const double> lambda_grid,
                                    double theta) {
    AlphaLambdaSurface surface;
    surface.alpha_grid.assign(alpha_grid.begin(), alpha_grid.end());
    surface.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
    surface.measured = Matrix(alpha_grid.size(), lambda_grid.size());
    surface.bound = Matrix(alpha_grid.size(), lambda_grid.size());
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        const Leak alpha(alpha_grid[i]);
        const LifConfig lc{theta, alpha, ResetMode::kToMod};
        const SpikeTrain out = lif(base, lc);
        for (std::size_t j = 0; j < lambda_grid.size(); ++j) {
            const SpikeTrain scaled_nu = scale(nu, lambda_grid[j]);
            surface.measured.at(i, j) =
                alexiewicz_norm(lif(base + scaled_nu, lc) - out, alpha);
            const double gamma = gamma_for(alpha, GammaPolicy::kSafe);
            surface.bound.at(i, j) =
                gamma * std::ceil(alexiewicz_norm(scaled_nu, alpha) / theta) *
                theta;
        }
    }
    return surface;
}

std::vector<AlphaLambdaSurface> alpha_lambda_snn(
    const std::vector<SpikeTrain>& inputs,
    const std::vector<SpikeTrain>& perturbations,
    std::span<const double> alpha_grid, std::span<const double> lambda_grid,
    const SnnNetwork& net) {
    if (inputs.size() != perturbations.size()) {
        throw std::invalid_argument(
            "alpha_lambda_snn: one perturbation train per input required");
    }
    std::vector<AlphaLambdaSurface> surfaces(net.output_count());
    for (AlphaLambdaSurface& s : surfaces) {
        s.alpha_grid.assign(alpha_grid.begin(), alpha_grid.end());
        s.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
        s.measured = Matrix(alpha_grid.size(), lambda_grid.size());
    }
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        const Leak alpha(alpha_grid[i]);
        const LifConfig neuron{net.neuron().theta, alpha, net.neuron().reset};
        const SnnNetwork swept(net.layers(), neuron);
        const std::vector<SpikeTrain> clean = snn_forward(inputs, swept);
        for (std::size_t j = 0; j < lambda_grid.size(); ++j) {
            std::vector<SpikeTrain> noisy = inputs;
            for (std::size_t c = 0; c < noisy.size(); ++c) {
                noisy[c] = noisy[c] + scale(perturbations[c], lambda_grid[j]);
            }
            const std::vector<SpikeTrain> out = snn_forward(noisy, swept);
            for (std::size_t ch = 0; ch < out.size(); ++ch) {
                surfaces[ch].measured.at(i, j) =
                    alexiewicz_norm(out[ch] - clean[ch], alpha);
            }
        }
    }
    return surfaces;
}

ExperimentReport exp_alpha_lambda(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.name = "alpha_lambda";
    report.config = cfg;
    std::vector<double> alpha_grid;
    for (int i = 0; i <= 20; ++i) alpha_grid.push_back(0.5 * i);
    std::vector<double> lambda_grid;
    for (int j = 0; j <= 10; ++j) lambda_grid.push_back(0.1 * j);
    // Four illustrative variations: perturbation sign pattern x spacing.
    const struct {
        double eps;
        bool flipped;
    } variants[] = {{1e-3, false}, {1e-3, true}, {1e-2, false}, {1e-2, true}};
    int v = 0;
    for (const auto& var : variants) {
        ++v;
        const SpikeTrain base = resonance_base(var.eps, false);
        const SpikeTrain nu = resonance_perturbation(var.eps, var.flipped);
        const AlphaLambdaSurface s = alpha_lambda_lif(
            base, nu, alpha_grid, lambda_grid, cfg.theta);
        for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
            for (std::size_t j = 0; j < lambda_grid.size(); ++j) {
                std::ostringstream name;
                name << "alpha_lambda_v" << v << "[l="
                     << format_double(lambda_grid[j]) << "]";
                const double measured = s.measured.at(i, j);
                const double bound = s.bound.at(i, j);
                report.trials.push_back(TrialRecord{
                    name.str(), "mod", Leak(alpha_grid[i]), cfg.theta, measured,
                    bound, measured <= bound + 1e-9, true});
            }
        }
    }
    return report;
}

ExperimentReport exp_alpha_lambda_snn(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.name = "alpha_lambda_snn";
    report.config = cfg;
    const std::vector<Matrix> layers = {
        Matrix({{1.0, 1.0}, {1.0, 2.0}}),
        Matrix({{0.5, 0.0}, {0.5, 0.5}, {0.0, -0.5}}),
        Matrix({{1.0, 1.0, 1.0}})};
    const std::vector<SpikeTrain> inputs = {
        make_train({{0.5, 2.0}, {1.5, -1.0}, {2.5, 1.5}}),
        make_train({{1.0, 1.0}, {2.0, 0.5}})};
    // One extra spike on the first channel, at two alternative positions;
    // moving it reshapes the whole surface.
    const struct {
        const char* tag;
        double at;
    } variants[] = {{"early", 0.7}, {"late", 1.7}};
    std::vector<double> alpha_grid;
    for (int i = 0; i <= 20; ++i) alpha_grid.push_back(0.5 * i);
    std::vector<double> lambda_grid;
    for (int j = 0; j <= 10; ++j) lambda_grid.push_back(0.1 * j);
    for (const auto& var : variants) {
        const std::vector<SpikeTrain> nus = {make_train({{var.at, 1.0}}),
                                             SpikeTrain()};
        for (double a : alpha_grid) {
            const Leak alpha(a);
            const SnnNetwork net(layers,
                                 LifConfig{cfg.theta, alpha, ResetMode::kToMod});
            const std::vector<SpikeTrain> clean = snn_forward(inputs, net);
            const double gamma = gamma_for(alpha, GammaPolicy::kSafe);
            for (double l : lambda_grid) {
                const std::vector<SpikeTrain> noisy = {
                    inputs[0] + scale(nus[0], l), inputs[1]};
                const std::vector<SpikeTrain> out = snn_forward(noisy, net);
                const std::vector<double> norms = {
                    alexiewicz_norm(scale(nus[0], l), alpha), 0.0};
                const std::vector<double> bound =
                    snn_error_bound(norms, net, gamma, cfg.theta);
                const double measured =
                    alexiewicz_norm(out[0] - clean[0], alpha);
                std::ostringstream name;
                name << "alpha_lambda_snn_" << var.tag << "[l="
                     << format_double(l) << "]";
                report.trials.push_back(TrialRecord{
                    name.str(), "mod", alpha, cfg.theta, measured, bound[0],
                    measured <= bound[0] + 1e-9, true});
            }
        }
    }
    return report;
}

std::vector<GammaEstimate> estimate_gamma(std::span<const Leak> alpha_grid,
                                          int search_budget,
                                          std::uint64_t seed) {
    std::vector<GammaEstimate> estimates;
    estimates.reserve(alpha_grid.size());
    for (std::size_t ai = 0; ai < alpha_grid.size(); ++ai) {
        const Leak alpha = alpha_grid[ai];
        const LifConfig lc{1.0, alpha, ResetMode::kToMod};
        double best = 0.0;
        auto consider = [&](const SpikeTrain& eta, const SpikeTrain& nu) {
            const double denom = std::ceil(alexiewicz_norm(nu, alpha));
            if (denom == 0.0) return;
            const double measured =
                alexiewicz_norm(lif(eta + nu, lc) - lif(eta, lc), alpha);
            best = std::max(best, measured / denom);
        };
        for (double eps : {1e-3, 1e-4, 1e-5}) {
            consider(resonance_base(eps, false), resonance_perturbation(eps, false));
            consider(resonance_base(eps, true), resonance_perturbation(eps, true));
        }
        for (int b = 0; b < search_budget; ++b) {
            SplitMix64 rng = trial_rng(
                seed, ai * 1000003ULL + static_cast<std::uint64_t>(b));
            std::vector<Spike> eta_events, nu_events;
            for (int k = 0; k < 12; ++k) {
                const double t = static_cast<double>(k + 1);
                eta_events.push_back(Spike{t, rng.uniform(-2.0, 2.0)});
                nu_events.push_back(Spike{t, rng.uniform(-1.0, 1.0)});
            }
            consider(SpikeTrain(std::move(eta_events)),
                     SpikeTrain(std::move(nu_events)));
        }
        estimates.push_back(GammaEstimate{alpha, best});
    }
    return estimates;
}

ExperimentReport exp_gamma(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.name = "gamma";
    report.config = cfg;
    const Leak grid[] = {Leak(0.0), Leak(0.5), Leak(1.0), Leak(2.0),
                         Leak::infinity()};
    const std::vector<GammaEstimate> estimates =
        estimate_gamma(grid, cfg.n_trials, cfg.seed);
    for (const GammaEstimate& e : estimates) {
        report.trials.push_back(TrialRecord{
            "gamma_ratio", "mod", e.alpha, 1.0, e.ratio, 3.0,
            e.ratio <= 3.0 + 1e-6, true});
    }
    return report;
}

}  // namespace spikenorm
