#pragma once

#include <string>
#include <vector>

#include "spikenorm/decompose.hpp"
#include "spikenorm/leak.hpp"
#include "spikenorm/lif.hpp"
#include "spikenorm/snn.hpp"
#include "spikenorm/spike_train.hpp"

namespace spikenorm {

// Shortest repr with 17 significant digits; round-trips every double.
std::string format_double(double x);

// "inf" or the numeric rate.
std::string leak_to_token(const Leak& alpha);
Leak leak_from_token(const std::string& token);

// "mod" | "sub" | "zero".
std::string reset_to_token(ResetMode mode);
ResetMode reset_from_token(const std::string& token);

// Train files: {"events": [[t, a], ...]}, canonical (sorted, merged) on
// both read and write.  Parse errors name their origin (the file path).
SpikeTrain parse_train_json(const std::string& text, const std::string& origin);
std::string train_to_json(const SpikeTrain& train);

// A plain JSON array of train objects.
std::vector<SpikeTrain> parse_trains_json(const std::string& text,
                                          const std::string& origin);
std::string trains_to_json(const std::vector<SpikeTrain>& trains);

// Network files: {"theta": .., "alpha": number|"inf", "reset": "..",
// "layers": [[[..]..]..]} with row-major matrices.
SnnNetwork parse_network_json(const std::string& text, const std::string& origin);
std::string network_to_json(const SnnNetwork& net);

std::string decomposition_to_json(const Decomposition& d);

SpikeTrain load_train(const std::string& path);
std::vector<SpikeTrain> load_trains(const std::string& path);
SnnNetwork load_network(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace spikenorm
