#pragma once

#include <string>
#include <utility>
#include <vector>

namespace triwalk {

/// Minimal SVG line-plot writer: axes, data polylines, reference lines.
/// No dependency on any plotting library; output is deterministic.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void set_log_log(bool v) { log_log_ = v; }
    void add_series(const std::string& name, std::vector<std::pair<double, double>> points);
    void add_hline(const std::string& name, double y);

    std::string render() const;
    void write(const std::string& path) const;

  private:
    struct Series {
        std::string name;
        std::vector<std::pair<double, double>> points;
    };
    std::string title_, x_label_, y_label_;
    bool log_log_ = false;
    std::vector<Series> series_;
    std::vector<std::pair<std::string, double>> hlines_;
};

}  // namespace triwalk
