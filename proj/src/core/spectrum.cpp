#include "nhspec/spectrum.hpp"

#include "nhspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nhspec {

namespace {

void require_level_index(int n, const char* name) {
    if (n < 0) {
        fail(ErrorCode::InvalidArgument, std::string(name) + " must be >= 0");
    }
}

SpectrumTable build_table(std::optional<double> time, double quantum, int n_max) {
    SpectrumTable table;
    table.time = time;
    table.quantum = quantum;
    table.levels.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        table.levels.push_back({n, quantum * (n + 0.5)});
    }
    return table;
}

} // namespace

double level(const DeformationModel& model, double t, int n) {
    require_level_index(n, "n");
    return eval_quantum(model, t) * (n + 0.5);
}

SpectrumTable spectrum(const DeformationModel& model, double t, int n_max) {
    require_level_index(n_max, "n_max");
    return build_table(t, eval_quantum(model, t), n_max);
}

SpectrumTable canonical_spectrum(double theta, int n_max) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        fail(ErrorCode::InvalidArgument, "theta must be finite and > 0");
    }
    require_level_index(n_max, "n_max");
    return build_table(std::nullopt, 2.0 * M_PI * theta, n_max);
}

double max_spacing_deviation(const SpectrumTable& table) {
    double worst = 0.0;
    const double q = table.quantum;
    for (std::size_t k = 1; k < table.levels.size(); ++k) {
        const double gap = table.levels[k].s - table.levels[k - 1].s;
        const double dev = std::abs(gap - q);
        worst = std::max(worst, q == 0.0 ? dev : dev / std::abs(q));
    }
    return worst;
}

} // namespace nhspec
