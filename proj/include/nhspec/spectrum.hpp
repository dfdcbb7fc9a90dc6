#pragma once

#include "nhspec/deformation.hpp"

#include <optional>
#include <vector>

namespace nhspec {

struct Level {
    int n = 0;
    double s = 0.0;
};

/// Disc-area spectrum at one instant: s_n = quantum * (n + 1/2).
/// The quantum is signed and every level inherits its sign.
struct SpectrumTable {
    std::optional<double> time; // empty for the time-independent canonical case
    double quantum = 0.0;
    std::vector<Level> levels;
};

double level(const DeformationModel& model, double t, int n);

SpectrumTable spectrum(const DeformationModel& model, double t, int n_max);

// Constant-theta plane: s_n = 2*pi*theta*(n + 1/2).
SpectrumTable canonical_spectrum(double theta, int n_max);

// Largest relative deviation of consecutive level gaps from the quantum.
double max_spacing_deviation(const SpectrumTable& table);

} // namespace nhspec
