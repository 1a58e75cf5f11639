#include "spikenorm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace spikenorm {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

// Linear blue (low) to red (high) ramp.
std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(40 + 215 * t);
    const int g = static_cast<int>(60 + 40 * (1.0 - std::abs(2 * t - 1.0)));
    const int b = static_cast<int>(40 + 215 * (1.0 - t));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string svg_heatmap(const Matrix& values,
                        const std::vector<double>& row_ticks,
                        const std::vector<double>& col_ticks,
                        const std::string& title) {
    const int cell = 18;
    const int left = 60, top = 40;
    const int width = left + cell * static_cast<int>(values.cols()) + 20;
    const int height = top + cell * static_cast<int>(values.rows()) + 40;
    double lo = 0.0, hi = 0.0;
    if (values.rows() > 0 && values.cols() > 0) {
        lo = hi = values.at(0, 0);
        for (double v : values.data()) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double span = hi > lo ? hi - lo : 1.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<text x=\"" << left << "\" y=\"20\" font-size=\"13\">" << title
       << " (min " << fmt(lo) << ", max " << fmt(hi) << ")</text>\n";
    for (std::size_t i = 0; i < values.rows(); ++i) {
        for (std::size_t j = 0; j < values.cols(); ++j) {
            const double t = (values.at(i, j) - lo) / span;
            os << "<rect x=\"" << left + cell * static_cast<int>(j) << "\" y=\""
               << top + cell * static_cast<int>(i) << "\" width=\"" << cell
               << "\" height=\"" << cell << "\" fill=\"" << ramp_color(t)
               << "\"/>\n";
        }
    }
    for (std::size_t i = 0; i < row_ticks.size() && i < values.rows(); ++i) {
        os << "<text x=\"4\" y=\"" << top + cell * static_cast<int>(i) + 13
           << "\" font-size=\"9\">" << fmt(row_ticks[i]) << "</text>\n";
    }
    for (std::size_t j = 0; j < col_ticks.size() && j < values.cols(); ++j) {
        if (j % 2) continue;
        os << "<text x=\"" << left + cell * static_cast<int>(j) << "\" y=\""
           << top + cell * static_cast<int>(values.rows()) + 14
           << "\" font-size=\"9\">" << fmt(col_ticks[j]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_histogram(const std::vector<int>& counts, double lo, double hi,
                          const std::string& title) {
    const int bar = 14;
    const int left = 20, top = 40, plot_h = 160;
    const int width = left + bar * static_cast<int>(counts.size()) + 20;
    const int height = top + plot_h + 40;
    int peak = 1;
    for (int c : counts) peak = std::max(peak, c);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<text x=\"" << left << "\" y=\"20\" font-size=\"13\">" << title
       << "</text>\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const int h = counts[i] * plot_h / peak;
        os << "<rect x=\"" << left + bar * static_cast<int>(i) << "\" y=\""
           << top + plot_h - h << "\" width=\"" << bar - 2 << "\" height=\""
           << h << "\" fill=\"#4472c4\"/>\n";
    }
    os << "<text x=\"" << left << "\" y=\"" << top + plot_h + 16
       << "\" font-size=\"10\">" << fmt(lo) << "</text>\n";
    os << "<text x=\"" << width - 60 << "\" y=\"" << top + plot_h + 16
       << "\" font-size=\"10\">" << fmt(hi) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace spikenorm
