#include "nhspec/verify.hpp"

#include "nhspec/error.hpp"
#include "nhspec/limits.hpp"
#include "nhspec/matching.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nhspec {

namespace {

constexpr std::array<double, 3> kGridValues{0.5, 1.0, 2.0};
constexpr int kSymmetryGridPoints = 1000;

// Fock tolerances.
constexpr double kCommutatorTol = 1e-13;
constexpr double kCornerTol = 1e-10;
constexpr double kAreaTol = 1e-10;
constexpr double kNumberTol = 1e-12;
constexpr double kOffDiagTol = 1e-12;
constexpr double kEigenstateTol = 1e-10;

constexpr double kSymmetryTol = 1e-12;

std::string model_tag(const DeformationModel& m) {
    std::ostringstream os;
    os << to_string(m.family()) << '/' << to_string(m.variant()) << " kappa=" << m.kappa()
       << " tau=" << m.tau();
    return os.str();
}

CaseRecord record(std::string name, double deviation, double tolerance) {
    return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

// Grid over [-3 tau, 3 tau].
std::vector<double> symmetric_grid(double tau) {
    std::vector<double> ts(kSymmetryGridPoints);
    for (int i = 0; i < kSymmetryGridPoints; ++i) {
        ts[i] = -3.0 * tau + 6.0 * tau * i / (kSymmetryGridPoints - 1);
    }
    return ts;
}

template <typename Fn>
void for_each_model(Fn&& fn) {
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGridValues) {
                for (double tau : kGridValues) {
                    fn(DeformationModel(f, v, kappa, tau));
                }
            }
        }
    }
}

} // namespace

double relative_gap(double a, double b, double floor) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

void VerificationSummary::add(CaseRecord r) {
    ++run;
    if (r.passed) ++passed;
    const double ratio = r.tolerance > 0.0 ? r.deviation / r.tolerance : r.deviation;
    if (records.empty() || ratio > worst_deviation) {
        worst_deviation = ratio;
        worst_case = r.name;
    }
    records.push_back(std::move(r));
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
    for (Suite s : {Suite::Fock, Suite::Parity, Suite::Duality, Suite::Limits, Suite::Matching}) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::string_view to_string(Suite suite) noexcept {
    switch (suite) {
    case Suite::Fock: return "fock";
    case Suite::Parity: return "parity";
    case Suite::Duality: return "duality";
    case Suite::Limits: return "limits";
    case Suite::Matching: return "matching";
    }
    return "?";
}

std::vector<double> fock_sample_times(const DeformationModel& model) {
    static constexpr std::array<double, 9> kScaled{0.25, 0.6, 1.1, -0.8, 2.3, -1.7, 0.45, 2.9, -2.6};
    std::vector<double> out;
    for (double u : kScaled) {
        const double t = u * model.tau();
        if (std::abs(eval_f(model, t)) > 1e-6) out.push_back(t);
        if (out.size() == 5) break;
    }
    return out;
}

VerificationSummary verify_fock(int dim) {
    VerificationSummary summary;
    summary.suite = "fock";

    // Model independent ladder algebra.
    {
        const DefectReport comm = commutator_defect(dim);
        const std::string tag = "dim=" + std::to_string(dim);
        summary.add(record("commutator interior " + tag, comm.max_interior_deviation, kCommutatorTol));
        summary.add(record("commutator corner " + tag, relative_gap(comm.corner_value, -(dim - 1.0)),
                           kCornerTol));
        const auto [raise, lower] = number_commutators_defect(dim);
        summary.add(record("[N,a^dagger] interior " + tag, raise.max_interior_deviation, kCommutatorTol));
        summary.add(record("[N,a] interior " + tag, lower.max_interior_deviation, kCommutatorTol));
    }

    for_each_model([&](const DeformationModel& m) {
        for (double t : fock_sample_times(m)) {
            std::ostringstream os;
            os << model_tag(m) << " t=" << t;
            const std::string tag = os.str();

            const TruncatedFockRep rep = build_rep(m, t, dim);
            const AreaSpectrumCheck area = area_eigenvalues(rep);
            summary.add(record("area diagonal " + tag, area.max_interior_rel_dev, kAreaTol));
            summary.add(record("area corner " + tag, relative_gap(area.corner, area.expected_corner),
                               kCornerTol));
            summary.add(record("area off-diagonal " + tag, area.max_offdiag_ratio, kOffDiagTol));

            const Eigen::MatrixXd n_coord = number_from_coordinates(rep);
            summary.add(record("number form " + tag, interior_max_abs(n_coord - rep.N), kNumberTol));

            const double norm = rep.S.norm();
            double worst = 0.0;
            for (int n = 0; n + 1 < dim; ++n) {
                const Eigen::VectorXd v = eigenstate(n, dim);
                const double lambda = 2.0 * M_PI * rep.f_value * (n + 0.5);
                worst = std::max(worst, (rep.S * v - lambda * v).norm() / norm);
            }
            summary.add(record("eigenstates " + tag, worst, kEigenstateTol));
        }
    });
    return summary;
}

VerificationSummary verify_parity() {
    VerificationSummary summary;
    summary.suite = "parity";
    for_each_model([&](const DeformationModel& m) {
        const double sign = parity_class(m.family()) == Parity::Even ? 1.0 : -1.0;
        double worst = 0.0;
        for (double t : symmetric_grid(m.tau())) {
            worst = std::max(worst, relative_gap(eval_f(m, -t), sign * eval_f(m, t)));
        }
        summary.add(record("reflection " + model_tag(m), worst, kSymmetryTol));

        if (m.variant() == Variant::Minus) {
            // scale floor: values near a zero of f carry absolute rounding of the shift
            const double floor = m.kappa() * std::pow(m.tau(), tau_power(m.family()));
            double worst_2pi = 0.0;
            double worst_pi = 0.0;
            const bool half_period = m.family() == Family::K1 || m.family() == Family::K2 ||
                                     m.family() == Family::K3;
            for (double t : symmetric_grid(m.tau())) {
                const double f0 = eval_f(m, t);
                worst_2pi = std::max(worst_2pi,
                                     relative_gap(eval_f(m, t + 2.0 * M_PI * m.tau()), f0, floor));
                if (half_period) {
                    worst_pi = std::max(worst_pi,
                                        relative_gap(eval_f(m, t + M_PI * m.tau()), f0, floor));
                }
            }
            summary.add(record("period 2*pi*tau " + model_tag(m), worst_2pi, kSymmetryTol));
            if (half_period) {
                summary.add(record("period pi*tau " + model_tag(m), worst_pi, kSymmetryTol));
            }
        }
    });
    return summary;
}

VerificationSummary verify_duality() {
    VerificationSummary summary;
    summary.suite = "duality";
    for_each_model([&](const DeformationModel& m) {
        const auto dual = dual_of(m.family());
        if (!dual) return;
        const DeformationModel target = m.with_family(*dual);
        double worst = 0.0;
        for (double t : symmetric_grid(m.tau())) {
            worst = std::max(worst, relative_gap(apply_duality(m, t), eval_f(target, t)));
        }
        summary.add(record("duality " + model_tag(m) + " -> " + std::string(to_string(*dual)), worst,
                           kSymmetryTol));
    });
    return summary;
}

VerificationSummary verify_limits() {
    VerificationSummary summary;
    summary.suite = "limits";
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGridValues) {
                for (double t : {0.5, 1.0, -1.5}) {
                    std::ostringstream os;
                    os << to_string(f) << '/' << to_string(v) << " kappa=" << kappa << " t=" << t;
                    const auto ladder = default_tau_ladder(t);
                    const LimitReport rep = limit_report(f, v, kappa, t, ladder);
                    summary.add(record("series confirms polynomial " + os.str(),
                                       rep.polynomial_confirmed ? 0.0 : 1.0, 0.0));
                    const double order = rep.order.value_or(0.0);
                    summary.add(record("order " + os.str(), std::abs(order - 2.0), 0.2));
                    double ratio_dev = rep.ratios.size() + 1 == rep.samples.size() ? 0.0 : 1.0;
                    for (double r : rep.ratios) ratio_dev = std::max(ratio_dev, std::abs(r - 4.0));
                    summary.add(record("ratios " + os.str(), ratio_dev, 0.5));
                }
            }
        }
    }
    return summary;
}

VerificationSummary verify_matching() {
    VerificationSummary summary;
    summary.suite = "matching";
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGridValues) {
                for (double tau : kGridValues) {
                    const DeformationModel m(f, v, kappa, tau);
                    // attainable by construction: the value of f at 0.6 tau
                    const double theta = std::abs(eval_f(m, 0.6 * tau));
                    const auto rep = validate(MatchQuery::with_default_window(m, theta));
                    const std::string tag = model_tag(m);
                    const bool strict = f == Family::K2 || f == Family::K3 || f == Family::K4;

                    double worst = 0.0;
                    bool silent = rep.candidates.empty() || rep.roots.empty();
                    for (const auto& c : rep.candidates) {
                        if (c.verdict == Verdict::Accepted) {
                            worst = std::max(worst, *c.residual / theta);
                            if (!c.oracle_agrees) silent = true;
                        }
                        if (strict && c.verdict == Verdict::Rejected) silent = true;
                        if (c.verdict == Verdict::Rejected && !c.nearest_root) silent = true;
                    }
                    summary.add(record("closed form " + tag, silent ? 1.0 : worst,
                                       silent ? 0.0 : kAcceptResidual));

                    double asym = 0.0;
                    for (const auto& r : rep.roots) {
                        const double s = parity_class(f) == Parity::Even ? -r.time : r.time;
                        double best = std::numeric_limits<double>::infinity();
                        for (const auto& q : rep.roots) best = std::min(best, std::abs(q.time - s));
                        // odd families: -t must solve f = -theta instead
                        if (parity_class(f) == Parity::Odd) {
                            best = std::abs(eval_f(m, -r.time) + theta) / theta * tau;
                        }
                        asym = std::max(asym, best / tau);
                    }
                    summary.add(record("root symmetry " + tag, asym, kRootMatchDistance));
                }
            }
        }
    }
    return summary;
}

VerificationSummary run_suite(Suite suite, const VerifyOptions& options) {
    switch (suite) {
    case Suite::Fock: return verify_fock(options.dim);
    case Suite::Parity: return verify_parity();
    case Suite::Duality: return verify_duality();
    case Suite::Limits: return verify_limits();
    case Suite::Matching: return verify_matching();
    }
    fail(ErrorCode::InvalidArgument, "unknown suite");
}

} // namespace nhspec
