#pragma once

#include "rlvqc/sim/circuit.hpp"

namespace rlvqc::baseline {

// (estimate - h_max) / (h_min - h_max): 1 at the ground energy, 0 at the
// worst attainable expectation. Raw value; clamp only when reporting.
double approximation_ratio(double estimate, double h_min, double h_max);

double clamp01(double value);

// Structural snapshot of a circuit: gate counts and fractions over the
// basis {H, Rx, Ry, Rz, CX}, depth over {H, Rx, Ry, Rz, Rzz}.
struct CompositionReport {
    sim::GateCensus census;
    std::int64_t gate_count = 0;
    int depth = 0;
    double frac_h = 0.0, frac_rx = 0.0, frac_ry = 0.0, frac_rz = 0.0, frac_cx = 0.0;
};

CompositionReport composition_report(const sim::Circuit& circuit);

}  // namespace rlvqc::baseline
