#include "spikenorm/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spikenorm {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw std::runtime_error(origin + ": malformed JSON");
    }
    return j;
}

SpikeTrain train_from_json(const json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("events") || !j["events"].is_array()) {
        throw std::runtime_error(origin +
                                 ": expected an object with an \"events\" array");
    }
    std::vector<Spike> events;
    events.reserve(j["events"].size());
    for (const json& e : j["events"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number()) {
            throw std::runtime_error(origin +
                                     ": each event must be a [time, amplitude] pair");
        }
        events.push_back(Spike{e[0].get<double>(), e[1].get<double>()});
    }
    return SpikeTrain(std::move(events));
}

Leak leak_from_json(const json& j, const std::string& origin) {
    if (j.is_string()) return leak_from_token(j.get<std::string>());
    if (j.is_number()) return Leak(j.get<double>());
    throw std::runtime_error(origin + ": alpha must be a number or \"inf\"");
}

void append_train_json(std::string& out, const SpikeTrain& train) {
    out += "{\"events\": [";
    bool first = true;
    for (const Spike& e : train.events()) {
        if (!first) out += ", ";
        first = false;
        out += "[" + format_double(e.time) + ", " + format_double(e.amplitude) +
               "]";
    }
    out += "]}";
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string leak_to_token(const Leak& alpha) {
    return alpha.is_infinite() ? "inf" : format_double(alpha.rate());
}

Leak leak_from_token(const std::string& token) {
    if (token == "inf") return Leak::infinity();
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid alpha value: " + token);
    }
    if (pos != token.size()) {
        throw std::invalid_argument("invalid alpha value: " + token);
    }
    return Leak(v);
}

std::string reset_to_token(ResetMode mode) {
    switch (mode) {
        case ResetMode::kToZero: return "zero";
        case ResetMode::kBySubtraction: return "sub";
        case ResetMode::kToMod: return "mod";
    }
    return "?";
}

ResetMode reset_from_token(const std::string& token) {
    if (token == "zero") return ResetMode::kToZero;
    if (token == "sub") return ResetMode::kBySubtraction;
    if (token == "mod") return ResetMode::kToMod;
    throw std::invalid_argument("invalid reset mode: " + token +
                                " (expected mod, sub or zero)");
}

SpikeTrain parse_train_json(const std::string& text, const std::string& origin) {
    return train_from_json(parse_or_throw(text, origin), origin);
}

std::string train_to_json(const SpikeTrain& train) {
    std::string out;
    append_train_json(out, train);
    out += "\n";
    return out;
}

std::vector<SpikeTrain> parse_trains_json(const std::string& text,
                                          const std::string& origin) {
    const json j = parse_or_throw(text, origin);
    if (!j.is_array()) {
        throw std::runtime_error(origin + ": expected an array of trains");
    }
    std::vector<SpikeTrain> trains;
    trains.reserve(j.size());
    for (const json& t : j) trains.push_back(train_from_json(t, origin));
    return trains;
}

std::string trains_to_json(const std::vector<SpikeTrain>& trains) {
    std::string out = "[";
    for (std::size_t i = 0; i < trains.size(); ++i) {
        if (i) out += ",\n ";
        append_train_json(out, trains[i]);
    }
    out += "]\n";
    return out;
}

SnnNetwork parse_network_json(const std::string& text,
                              const std::string& origin) {
    const json j = parse_or_throw(text, origin);
    if (!j.is_object() || !j.contains("theta") || !j.contains("alpha") ||
        !j.contains("reset") || !j.contains("layers")) {
        throw std::runtime_error(
            origin + ": network needs theta, alpha, reset and layers fields");
    }
    LifConfig neuron;
    if (!j["theta"].is_number()) {
        throw std::runtime_error(origin + ": theta must be a number");
    }
    neuron.theta = j["theta"].get<double>();
    neuron.alpha = leak_from_json(j["alpha"], origin);
    if (!j["reset"].is_string()) {
        throw std::runtime_error(origin + ": reset must be a string");
    }
    neuron.reset = reset_from_token(j["reset"].get<std::string>());
    if (!j["layers"].is_array() || j["layers"].empty()) {
        throw std::runtime_error(origin + ": layers must be a non-empty array");
    }
    std::vector<Matrix> layers;
    for (const json& lj : j["layers"]) {
        if (!lj.is_array() || lj.empty()) {
            throw std::runtime_error(origin + ": each layer must be a matrix");
        }
        std::vector<std::vector<double>> rows;
        for (const json& rj : lj) {
            if (!rj.is_array()) {
                throw std::runtime_error(origin + ": matrix rows must be arrays");
            }
            std::vector<double> row;
            for (const json& v : rj) {
                if (!v.is_number()) {
                    throw std::runtime_error(origin +
                                             ": matrix entries must be numbers");
                }
                row.push_back(v.get<double>());
            }
            rows.push_back(std::move(row));
        }
        layers.emplace_back(rows);
    }
    return SnnNetwork(std::move(layers), neuron);
}

std::string network_to_json(const SnnNetwork& net) {
    std::string out = "{\"theta\": " + format_double(net.neuron().theta) +
                      ", \"alpha\": ";
    if (net.neuron().alpha.is_infinite()) {
        out += "\"inf\"";
    } else {
        out += format_double(net.neuron().alpha.rate());
    }
    out += ", \"reset\": \"" + reset_to_token(net.neuron().reset) +
           "\", \"layers\": [";
    for (std::size_t k = 0; k < net.layers().size(); ++k) {
        const Matrix& w = net.layers()[k];
        if (k) out += ", ";
        out += "[";
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i) out += ", ";
            out += "[";
            for (std::size_t j = 0; j < w.cols(); ++j) {
                if (j) out += ", ";
                out += format_double(w.at(i, j));
            }
            out += "]";
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

std::string decomposition_to_json(const Decomposition& d) {
    std::string out = "{\"psi\": ";
    append_train_json(out, d.psi);
    out += ",\n \"rho\": ";
    append_train_json(out, d.rho);
    out += ",\n \"units\": [";
    for (std::size_t i = 0; i < d.units.size(); ++i) {
        if (i) out += ",\n   ";
        append_train_json(out, d.units[i]);
    }
    out += "]}\n";
    return out;
}

SpikeTrain load_train(const std::string& path) {
    return parse_train_json(read_file(path), path);
}

std::vector<SpikeTrain> load_trains(const std::string& path) {
    return parse_trains_json(read_file(path), path);
}

SnnNetwork load_network(const std::string& path) {
    return parse_network_json(read_file(path), path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace spikenorm
