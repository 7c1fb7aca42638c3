#include "rlvqc/baseline/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlvqc::baseline {

double approximation_ratio(double estimate, double h_min, double h_max) {
    if (!(h_min < h_max)) throw std::invalid_argument("degenerate instance: h_min >= h_max");
    return (estimate - h_max) / (h_min - h_max);
}

double clamp01(double value) { return std::clamp(value, 0.0, 1.0); }

CompositionReport composition_report(const sim::Circuit& circuit) {
    CompositionReport report;
    report.census = sim::gate_census(circuit);
    report.gate_count = report.census.total();
    report.depth = sim::circuit_depth(circuit);
    if (report.gate_count > 0) {
        const double total = static_cast<double>(report.gate_count);
        report.frac_h = static_cast<double>(report.census.h) / total;
        report.frac_rx = static_cast<double>(report.census.rx) / total;
        report.frac_ry = static_cast<double>(report.census.ry) / total;
        report.frac_rz = static_cast<double>(report.census.rz) / total;
        report.frac_cx = static_cast<double>(report.census.cx) / total;
    }
    return report;
}

}  // namespace rlvqc::baseline
