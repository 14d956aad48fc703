#include "triwalk/svg.hpp"

#include "triwalk/rational.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace triwalk {

void SvgPlot::add_series(const std::string& name, std::vector<std::pair<double, double>> points) {
    series_.push_back({name, std::move(points)});
}

void SvgPlot::add_hline(const std::string& name, double y) { hlines_.push_back({name, y}); }

std::string SvgPlot::render() const {
    const double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto tx = [&](double v) { return log_log_ ? std::log10(v) : v; };
    for (const auto& s : series_) {
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, tx(x)); xmax = std::max(xmax, tx(x));
            ymin = std::min(ymin, tx(y)); ymax = std::max(ymax, tx(y));
        }
    }
    for (const auto& [name, y] : hlines_) {
        ymin = std::min(ymin, tx(y));
        ymax = std::max(ymax, tx(y));
    }
    if (xmin > xmax) { xmin = 0; xmax = 1; }
    if (ymin > ymax) { ymin = 0; ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    double padx = 0.05 * (xmax - xmin), pady = 0.05 * (ymax - ymin);
    xmin -= padx; xmax += padx; ymin -= pady; ymax += pady;

    auto px = [&](double x) { return ml + (tx(x) - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (tx(y) - ymin) / (ymax - ymin) * (H - mt - mb); };

    static const char* colors[] = {"#1f6fb4", "#c0392b", "#27824c", "#8e44ad"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << title_ << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
       << H - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (W / 2) << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
       << x_label_ << (log_log_ ? " (log10)" : "") << "</text>\n";
    os << "<text x=\"16\" y=\"" << H / 2 << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
       << H / 2 << ")\">" << y_label_ << (log_log_ ? " (log10)" : "") << "</text>\n";
    // axis extent labels
    os << "<text x=\"" << ml << "\" y=\"" << H - mb + 16 << "\" font-size=\"10\">" << to_decimal(xmin)
       << "</text>\n";
    os << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 16 << "\" text-anchor=\"end\" font-size=\"10\">"
       << to_decimal(xmax) << "</text>\n";
    os << "<text x=\"" << ml - 4 << "\" y=\"" << H - mb << "\" text-anchor=\"end\" font-size=\"10\">"
       << to_decimal(ymin) << "</text>\n";
    os << "<text x=\"" << ml - 4 << "\" y=\"" << mt + 8 << "\" text-anchor=\"end\" font-size=\"10\">"
       << to_decimal(ymax) << "</text>\n";

    for (const auto& [name, y] : hlines_) {
        os << "<line x1=\"" << ml << "\" y1=\"" << py(y) << "\" x2=\"" << W - mr << "\" y2=\""
           << py(y) << "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
        os << "<text x=\"" << W - mr - 4 << "\" y=\"" << py(y) - 4
           << "\" text-anchor=\"end\" font-size=\"10\">" << name << "</text>\n";
    }
    int ci = 0;
    for (const auto& s : series_) {
        const char* color = colors[ci % 4];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : s.points) os << px(x) << "," << py(y) << " ";
        os << "\"/>\n";
        for (auto [x, y] : s.points)
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.5\" fill=\"" << color
               << "\"/>\n";
        os << "<text x=\"" << ml + 8 << "\" y=\"" << mt + 14 * (ci + 1) << "\" font-size=\"11\" fill=\""
           << color << "\">" << s.name << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

void SvgPlot::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render();
}

}  // namespace triwalk
