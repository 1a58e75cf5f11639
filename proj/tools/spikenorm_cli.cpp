// Command line front end: norms, LIF responses, network propagation,
// decomposition, perturbation bounds and the experiment suite.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spikenorm/decompose.hpp"
#include "spikenorm/experiment.hpp"
#include "spikenorm/json_io.hpp"
#include "spikenorm/lif.hpp"
#include "spikenorm/norms.hpp"
#include "spikenorm/snn.hpp"
#include "spikenorm/svg.hpp"

namespace {

using namespace spikenorm;

struct NormArgs {
    std::string alpha;
    std::string kind = "alex";
    std::string input;
};

struct LifArgs {
    double theta = 1.0;
    std::string alpha;
    std::string reset = "mod";
    bool discrete = false;
    double dt = 1e-3;
    std::string beta = "exact";
    std::string input;
};

struct SnnArgs {
    std::string net;
    std::string inputs;
};

struct DecomposeArgs {
    double theta = 1.0;
    std::string alpha = "0";
    std::string input;
};

struct BoundArgs {
    std::string net;
    std::string gamma = "safe";
    std::string nu_norms;
};

struct ExperimentArgs {
    std::string name;
    std::uint64_t seed = 1;
    int trials = 100;
    std::string out = ".";
    bool svg = false;
};

int run_norm(const NormArgs& args) {
    const SpikeTrain train = load_train(args.input);
    const Leak alpha = leak_from_token(args.alpha);
    double value;
    if (args.kind == "alex") {
        value = alexiewicz_norm(train, alpha);
    } else if (args.kind == "disc") {
        value = discrepancy_norm(train, alpha);
    } else {
        value = l2_norm(train, alpha);
    }
    std::cout << format_double(value) << "\n";
    return 0;
}

int run_lif(const LifArgs& args) {
    const SpikeTrain train = load_train(args.input);
    LifConfig cfg{args.theta, leak_from_token(args.alpha),
                  reset_from_token(args.reset)};
    SpikeTrain out;
    if (args.discrete) {
        DiscreteLifConfig dcfg{cfg, args.dt,
                               args.beta == "paper" ? BetaMode::kLinear
                                                    : BetaMode::kExactExp};
        const std::vector<double> grid = to_grid(train, args.dt);
        const std::vector<double> fired = lif_discrete(grid, dcfg);
        std::vector<Spike> events;
        for (std::size_t k = 0; k < fired.size(); ++k) {
            if (fired[k] != 0.0) {
                events.push_back(
                    Spike{static_cast<double>(k) * args.dt, fired[k]});
            }
        }
        out = SpikeTrain(std::move(events));
    } else {
        out = lif(train, cfg);
    }
    std::cout << train_to_json(out);
    return 0;
}

int run_snn(const SnnArgs& args) {
    const SnnNetwork net = load_network(args.net);
    const std::vector<SpikeTrain> inputs = load_trains(args.inputs);
    std::cout << trains_to_json(snn_forward(inputs, net));
    return 0;
}

int run_decompose(const DecomposeArgs& args) {
    const SpikeTrain train = load_train(args.input);
    LifConfig cfg{args.theta, leak_from_token(args.alpha), ResetMode::kToMod};
    std::cout << decomposition_to_json(decompose(train, cfg));
    return 0;
}

int run_bound(const BoundArgs& args) {
    const SnnNetwork net = load_network(args.net);
    std::vector<double> norms;
    std::stringstream ss(args.nu_norms);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            norms.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid --nu-norms entry: " + item);
        }
    }
    const GammaPolicy policy = args.gamma == "conjectured"
                                   ? GammaPolicy::kConjectured
                                   : GammaPolicy::kSafe;
    const double gamma = gamma_for(net.neuron().alpha, policy);
    const std::vector<double> bound =
        snn_error_bound(norms, net, gamma, net.neuron().theta);
    std::cout << "[";
    for (std::size_t i = 0; i < bound.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << format_double(bound[i]);
    }
    std::cout << "]\n";
    return 0;
}

int run_experiment(const ExperimentArgs& args) {
    ExperimentConfig cfg;
    cfg.seed = args.seed;
    cfg.n_trials = args.trials;

    ExperimentReport report;
    if (args.name == "quantization") {
        report = exp_quantization(cfg);
    } else if (args.name == "lag_threshold") {
        cfg.alphas = {Leak(0.2), Leak(0.5), Leak(0.8)};
        const double dts[] = {0.01 * cfg.grid_spacing, 0.1, 0.5};
        const double epss[] = {0.01, 0.1, 0.5};
        report = exp_lag_threshold(cfg, dts, epss);
    } else if (args.name == "quasi_isometry") {
        report = exp_quasi_isometry(cfg);
    } else if (args.name == "alpha_lambda") {
        report = exp_alpha_lambda(cfg);
    } else if (args.name == "alpha_lambda_snn") {
        report = exp_alpha_lambda_snn(cfg);
    } else if (args.name == "gamma") {
        report = exp_gamma(cfg);
    } else {
        std::cerr << "unknown experiment: " << args.name
                  << " (expected quantization, lag_threshold, quasi_isometry, "
                     "alpha_lambda, alpha_lambda_snn or gamma)\n";
        return 2;
    }

    std::filesystem::create_directories(args.out);
    const std::string base = args.out + "/" + args.name;
    {
        std::ostringstream csv;
        report.write_csv(csv);
        write_file(base + ".csv", csv.str());
    }
    {
        std::ostringstream summary;
        report.write_summary_json(summary);
        write_file(base + "_summary.json", summary.str());
    }
    if (args.svg) {
        const SummaryStats stats = report.measured_stats();
        write_file(base + "_hist.svg",
                   svg_histogram(stats.histogram, stats.hist_lo, stats.hist_hi,
                                 args.name + ": measured values"));
        if (args.name == "alpha_lambda") {
            // Re-run the surfaces to render one heatmap per variation.
            std::vector<double> alpha_grid, lambda_grid;
            for (int i = 0; i <= 20; ++i) alpha_grid.push_back(0.5 * i);
            for (int j = 0; j <= 10; ++j) lambda_grid.push_back(0.1 * j);
            const struct {
                double eps;
                double sign;
            } variants[] = {{1e-3, 1.0}, {1e-3, -1.0}, {1e-2, 1.0}, {1e-2, -1.0}};
            int v = 0;
            for (const auto& var : variants) {
                ++v;
                const SpikeTrain base_train = make_train(
                    {{0.0, -1.5}, {var.eps, 1.0}, {2 * var.eps, 1.5}});
                const SpikeTrain nu = make_train({{0.0, var.sign},
                                                  {var.eps, -var.sign},
                                                  {2 * var.eps, var.sign}});
                const AlphaLambdaSurface s = alpha_lambda_lif(
                    base_train, nu, alpha_grid, lambda_grid, cfg.theta);
                write_file(args.out + "/alpha_lambda_v" + std::to_string(v) +
                               ".svg",
                           svg_heatmap(s.measured, alpha_grid, lambda_grid,
                                       "measured norm, variation " +
                                           std::to_string(v)));
            }
        }
    }

    if (!report.all_asserted_pass()) {
        std::cerr << args.name << ": bounded rows contain failures, see "
                  << base << ".csv\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spike train norms, LIF quantization and error-bound toolkit"};
    app.require_subcommand(1);

    NormArgs norm_args;
    CLI::App* norm = app.add_subcommand("norm", "evaluate a spike train norm");
    norm->add_option("--alpha", norm_args.alpha, "leak rate or 'inf'")
        ->required();
    norm->add_option("--kind", norm_args.kind, "alex | disc | l2")
        ->check(CLI::IsMember({"alex", "disc", "l2"}));
    norm->add_option("input", norm_args.input, "train JSON file")->required();

    LifArgs lif_args;
    CLI::App* lif_cmd = app.add_subcommand("lif", "run a LIF neuron");
    lif_cmd->add_option("--theta", lif_args.theta, "threshold")->required();
    lif_cmd->add_option("--alpha", lif_args.alpha, "leak rate or 'inf'")
        ->required();
    lif_cmd->add_option("--reset", lif_args.reset, "mod | sub | zero")
        ->required()
        ->check(CLI::IsMember({"mod", "sub", "zero"}));
    lif_cmd->add_flag("--discrete", lif_args.discrete, "use the grid model");
    lif_cmd->add_option("--dt", lif_args.dt, "grid step for --discrete");
    lif_cmd->add_option("--beta", lif_args.beta, "exact | paper")
        ->check(CLI::IsMember({"exact", "paper"}));
    lif_cmd->add_option("input", lif_args.input, "train JSON file")->required();

    SnnArgs snn_args;
    CLI::App* snn = app.add_subcommand("snn", "propagate trains through a network");
    snn->add_option("--net", snn_args.net, "network JSON file")->required();
    snn->add_option("inputs", snn_args.inputs, "input trains JSON file")
        ->required();

    DecomposeArgs dec_args;
    CLI::App* dec = app.add_subcommand(
        "decompose", "split a train into quantized part, residual and units");
    dec->add_option("--theta", dec_args.theta, "threshold")->required();
    dec->add_option("--alpha", dec_args.alpha, "leak for the quantized split");
    dec->add_option("input", dec_args.input, "train JSON file")->required();

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand(
        "bound", "per-channel perturbation bound for a network");
    bound->add_option("--net", bound_args.net, "network JSON file")->required();
    bound->add_option("--gamma", bound_args.gamma, "safe | conjectured")
        ->check(CLI::IsMember({"safe", "conjectured"}));
    bound->add_option("--nu-norms", bound_args.nu_norms,
                      "comma separated input perturbation norms")
        ->required();

    ExperimentArgs exp_args;
    CLI::App* exp = app.add_subcommand("experiment", "run an experiment suite");
    exp->add_option("name", exp_args.name,
                    "quantization | lag_threshold | quasi_isometry | "
                    "alpha_lambda | alpha_lambda_snn | gamma")
        ->required();
    exp->add_option("--seed", exp_args.seed, "RNG seed");
    exp->add_option("--trials", exp_args.trials, "trials per setting");
    exp->add_option("--out", exp_args.out, "output directory");
    exp->add_flag("--svg", exp_args.svg, "also render SVG figures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*norm) return run_norm(norm_args);
        if (*lif_cmd) return run_lif(lif_args);
        if (*snn) return run_snn(snn_args);
        if (*dec) return run_decompose(dec_args);
        if (*bound) return run_bound(bound_args);
        if (*exp) return run_experiment(exp_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
