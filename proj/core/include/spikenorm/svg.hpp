#pragma once

#include <string>
#include <vector>

#include "spikenorm/matrix.hpp"

namespace spikenorm {

// Cell-per-entry heatmap of a value matrix with row/column axis labels.
// Values map linearly onto a blue-to-red ramp.
std::string svg_heatmap(const Matrix& values,
                        const std::vector<double>& row_ticks,
                        const std::vector<double>& col_ticks,
                        const std::string& title);

// Bar rendering of a histogram over [lo, hi].
std::string svg_histogram(const std::vector<int>& counts, double lo, double hi,
                          const std::string& title);

}  // namespace spikenorm
