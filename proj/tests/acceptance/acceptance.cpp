// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "nhspec/deformation.hpp"
#include "nhspec/fock.hpp"
#include "nhspec/limits.hpp"
#include "nhspec/matching.hpp"
#include "nhspec/spectrum.hpp"
#include "nhspec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace nhspec;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    double worst = 0.0; // worst observed deviation in the criterion's own units
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
    void observe(double v) { worst = std::max(worst, v); }
};

constexpr double kGrid[] = {0.5, 1.0, 2.0};

double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

std::string label(const DeformationModel& m) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s/%s kappa=%g tau=%g", std::string(to_string(m.family())).c_str(),
                  std::string(to_string(m.variant())).c_str(), m.kappa(), m.tau());
    return buf;
}

Outcome canonical_spectrum_check() {
    Outcome o;
    SpectrumTable table;
    const auto start = Clock::now();
    table = canonical_spectrum(1.0, 9);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    o.require(table.levels.size() == 10, "expected 10 levels");
    for (const auto& lv : table.levels) {
        const double d = rel(lv.s, 2.0 * M_PI * (lv.n + 0.5));
        o.observe(d);
        o.require(d <= 1e-14, "level " + std::to_string(lv.n) + " off");
    }
    o.require(ms < 1.0, "runtime " + std::to_string(ms) + " ms");
    return o;
}

Outcome operator_algebra_check(int dim) {
    Outcome o;
    const auto start = Clock::now();

    const DefectReport comm = commutator_defect(dim);
    o.observe(comm.max_interior_deviation / 1e-13);
    o.require(comm.max_interior_deviation <= 1e-13, "commutator interior defect");
    const double corner_dev = rel(comm.corner_value, -(dim - 1.0));
    o.observe(corner_dev / 1e-10);
    o.require(corner_dev <= 1e-10, "commutator corner");

    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGrid) {
                for (double tau : kGrid) {
                    const DeformationModel m(f, v, kappa, tau);
                    const auto times = fock_sample_times(m);
                    o.require(times.size() == 5, label(m) + ": fewer than 5 sample times");
                    for (double t : times) {
                        const TruncatedFockRep rep = build_rep(m, t, dim);
                        const Eigen::MatrixXd c = rep.a * rep.a_dagger - rep.a_dagger * rep.a -
                                                  Eigen::MatrixXd::Identity(dim, dim);
                        const double interior = interior_max_abs(c);
                        o.observe(interior / 1e-13);
                        o.require(interior <= 1e-13, label(m) + ": interior commutator");
                        const double corner = rel(c(dim - 1, dim - 1) + 1.0, -(dim - 1.0));
                        o.require(corner <= 1e-10, label(m) + ": corner");

                        const AreaSpectrumCheck area = area_eigenvalues(rep);
                        for (int n = 0; n <= dim - 2; ++n) {
                            const double d = rel(area.diagonal[n], 2.0 * M_PI * rep.f_value * (n + 0.5));
                            o.observe(d / 1e-10);
                            o.require(d <= 1e-10, label(m) + ": area diagonal");
                        }

                        const Eigen::MatrixXd n_coord = number_from_coordinates(rep);
                        const double nd = interior_max_abs(n_coord - rep.a_dagger * rep.a);
                        o.observe(nd / 1e-12);
                        o.require(nd <= 1e-12, label(m) + ": coordinate number operator");
                    }
                }
            }
        }
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(s < 30.0, "runtime " + std::to_string(s) + " s");
    return o;
}

bool linked(const Candidate& c, const MatchingTimeReport& r) {
    if (!c.time) return c.verdict == Verdict::OutOfDomain;
    if (r.roots.empty()) return !c.nearest_root.has_value();
    return c.nearest_root.has_value() && *c.nearest_root < r.roots.size() && c.root_distance.has_value();
}

Outcome matching_check() {
    Outcome o;
    const auto start = Clock::now();
    for (double kappa : kGrid) {
        for (double tau : kGrid) {
            for (Variant v : kAllVariants) {
                for (Family f : kAllFamilies) {
                    const DeformationModel m(f, v, kappa, tau);
                    const double theta = std::abs(eval_f(m, 0.6 * tau));
                    const MatchingTimeReport r = validate(MatchQuery::with_default_window(m, theta));
                    const bool strict = f == Family::K2 || f == Family::K3 || f == Family::K4;
                    o.require(!r.candidates.empty(), label(m) + ": no candidates");
                    bool accepted_any = false;
                    for (const Candidate& c : r.candidates) {
                        if (c.verdict == Verdict::Accepted) {
                            accepted_any = true;
                            o.observe(*c.residual / (1e-9 * theta));
                            o.require(*c.residual <= 1e-9 * theta, label(m) + ": accepted residual");
                            o.require(c.root_distance && *c.root_distance <= 1e-8 * tau,
                                      label(m) + ": accepted time without oracle root");
                        }
                        if (strict && c.time) {
                            o.require(c.residual && *c.residual <= 1e-9 * theta,
                                      label(m) + " " + c.branch + ": in-domain candidate not sound");
                            if (c.verdict != Verdict::OutOfWindow) {
                                o.require(c.verdict == Verdict::Accepted,
                                          label(m) + " " + c.branch + ": not accepted");
                            }
                        }
                        o.require(linked(c, r), label(m) + " " + c.branch + ": verdict not cross-linked");
                    }
                    if (strict) o.require(accepted_any, label(m) + ": nothing accepted");
                }
            }
        }
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(s < 10.0, "runtime " + std::to_string(s) + " s");
    return o;
}

Outcome parity_check() {
    Outcome o;
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGrid) {
                for (double tau : kGrid) {
                    const DeformationModel m(f, v, kappa, tau);
                    const double sign = parity_class(f) == Parity::Even ? 1.0 : -1.0;
                    for (int i = 0; i < 1000; ++i) {
                        const double t = -3.0 * tau + 6.0 * tau * i / 999.0;
                        const double d = rel(eval_f(m, -t), sign * eval_f(m, t));
                        o.observe(d / 1e-12);
                        o.require(d <= 1e-12, label(m) + ": reflection");
                    }
                }
            }
        }
    }
    // the odd families really are odd: not even anywhere away from zeros
    for (Family f : {Family::K2, Family::K6}) {
        const DeformationModel m(f, Variant::Plus, 1.0, 1.0);
        o.require(eval_f(m, -1.0) == -eval_f(m, 1.0) && eval_f(m, 1.0) != 0.0,
                  "time reflection not broken for odd family");
    }
    return o;
}

Outcome duality_check() {
    Outcome o;
    for (Family f : {Family::K1, Family::K2, Family::K3}) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGrid) {
                for (double tau : kGrid) {
                    const DeformationModel m(f, v, kappa, tau);
                    const DeformationModel dual = m.with_family(*dual_of(f));
                    for (int i = 0; i < 1000; ++i) {
                        const double t = -3.0 * tau + 6.0 * tau * i / 999.0;
                        const double d = rel(apply_duality(m, t), eval_f(dual, t));
                        o.observe(d / 1e-12);
                        o.require(d <= 1e-12, label(m) + ": duality");
                    }
                }
            }
        }
    }
    return o;
}

Outcome galilei_check() {
    Outcome o;
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGrid) {
                o.require(limit_polynomial_matches_series(f, v, kappa),
                          std::string(to_string(f)) + ": limit polynomial disagrees with series");
                for (double t : {0.5, 1.0, -1.5}) {
                    const LimitReport r = limit_report(f, v, kappa, t, default_tau_ladder(t));
                    o.require(r.order.has_value(), std::string(to_string(f)) + ": no fitted order");
                    if (!r.order) continue;
                    o.observe(std::abs(*r.order - 2.0) / 0.2);
                    o.require(*r.order >= 1.8 && *r.order <= 2.2,
                              std::string(to_string(f)) + "/" + std::string(to_string(v)) +
                                  ": order " + std::to_string(*r.order));
                }
            }
        }
    }
    // the hard-coded coefficients themselves
    const double expected_coeff[] = {1.0, 1.0, 1.0, 1.0, 0.5, 0.5};
    const int expected_degree[] = {0, 1, 2, 4, 2, 3};
    for (Family f : kAllFamilies) {
        const auto p = galilei_limit_poly({f, Variant::Plus, 1.0, 1.0});
        const int i = static_cast<int>(f) - 1;
        o.require(p.terms.size() == 1 && p.terms[0].degree == expected_degree[i] &&
                      p.terms[0].coefficient == expected_coeff[i],
                  std::string(to_string(f)) + ": unexpected limit polynomial");
    }
    return o;
}

Outcome eigenstate_check(int dim) {
    Outcome o;
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            for (double kappa : kGrid) {
                for (double tau : kGrid) {
                    const DeformationModel m(f, v, kappa, tau);
                    for (double t : fock_sample_times(m)) {
                        const TruncatedFockRep rep = build_rep(m, t, dim);
                        const double norm = rep.S.norm();
                        for (int n = 0; n <= dim - 2; ++n) {
                            const Eigen::VectorXd e = eigenstate(n, dim);
                            const double lambda = 2.0 * M_PI * rep.f_value * (n + 0.5);
                            const double res = (rep.S * e - lambda * e).norm();
                            o.observe(res / (1e-10 * norm));
                            o.require(res <= 1e-10 * norm, label(m) + ": eigenstate residual");
                        }
                    }
                }
            }
        }
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const int dim = 64;
    const std::vector<Criterion> criteria{
        {"canonical spectrum", canonical_spectrum_check},
        {"operator algebra", [&] { return operator_algebra_check(dim); }},
        {"matching-time soundness", matching_check},
        {"parity", parity_check},
        {"duality", duality_check},
        {"galilei limit", galilei_check},
        {"eigenstate check", [&] { return eigenstate_check(dim); }},
    };

    bool all = true;
    int index = 1;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("[%s] %d. %-24s worst/tol=%.3g  %.3fs%s%s\n", o.ok ? "PASS" : "FAIL", index++, c.name,
                    o.worst, s, o.ok ? "" : "  ", o.detail.c_str());
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
