#include "nhspec/matching.hpp"

#include "nhspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace nhspec {

namespace {

using cplx = std::complex<double>;

enum class Inverse { Acosh, Acos, Asinh, Asin };

void require_valid(const MatchQuery& q) {
    if (!(q.theta > 0.0) || !std::isfinite(q.theta)) {
        fail(ErrorCode::InvalidArgument, "theta must be finite and > 0");
    }
    if (!(q.tol > 0.0) || !std::isfinite(q.tol)) {
        fail(ErrorCode::InvalidArgument, "tol must be finite and > 0");
    }
    if (!std::isfinite(q.t_lo) || !std::isfinite(q.t_hi)) {
        fail(ErrorCode::InvalidArgument, "window bounds must be finite");
    }
    if (q.grid_points < kDefaultGridPoints || q.grid_points > kMaxGridPoints) {
        std::ostringstream msg;
        msg << "grid_points must be in [" << kDefaultGridPoints << ", " << kMaxGridPoints
            << "], got " << q.grid_points;
        fail(ErrorCode::InvalidArgument, msg.str());
    }
}

void require_window(const MatchQuery& q) {
    if (!(q.t_lo < q.t_hi)) {
        std::ostringstream msg;
        msg << "empty window [" << q.t_lo << ", " << q.t_hi << "]";
        fail(ErrorCode::EmptyWindow, msg.str());
    }
}

std::optional<double> real_inverse(Inverse inv, cplx x) {
    if (x.imag() != 0.0 || std::isnan(x.real())) return std::nullopt;
    const double r = x.real();
    switch (inv) {
    case Inverse::Acosh: return r >= 1.0 ? std::optional(std::acosh(r)) : std::nullopt;
    case Inverse::Acos: return std::abs(r) <= 1.0 ? std::optional(std::acos(r)) : std::nullopt;
    case Inverse::Asinh: return std::asinh(r);
    case Inverse::Asin: return std::abs(r) <= 1.0 ? std::optional(std::asin(r)) : std::nullopt;
    }
    return std::nullopt;
}

struct Form {
    double prefactor;
    Inverse inverse;
    cplx argument;
    std::string branch;
    bool printed;
};

void emit(std::vector<Candidate>& out, Family family, const Form& form) {
    Candidate c;
    c.formula = family;
    c.branch = form.branch;
    c.printed = form.printed;
    c.argument = form.argument;
    const auto inv = real_inverse(form.inverse, form.argument);
    if (!inv) {
        out.push_back(std::move(c));
        return;
    }
    const double t = form.prefactor * *inv;
    c.time = t;
    out.push_back(c);
    if (parity_class(family) == Parity::Even && t != 0.0) {
        c.branch += ",mirror";
        c.time = -t;
        out.push_back(std::move(c));
    }
}

cplx csqrt(double x) { return std::sqrt(cplx(x, 0.0)); }

// Literal nested-radical expression for k6, evaluated in complex arithmetic
// with principal branches throughout.
Candidate k6_candidate(const MatchQuery& q) {
    const DeformationModel& m = q.model;
    const bool plus = m.variant() == Variant::Plus;
    const double s = plus ? 1.0 : -1.0;
    const double tau = m.tau();
    const double r = q.theta / m.kappa();
    const double r2 = r * r;
    const double r4 = r2 * r2;
    const double r6 = r4 * r2;

    const cplx inner = csqrt(s * 16.0 * r6 * std::pow(tau, 18) + 27.0 * r4 * std::pow(tau, 24));
    const cplx base = -s * 9.0 * r2 * std::pow(tau, 12) - s * std::sqrt(3.0) * inner;
    const cplx cube = std::pow(base, 1.0 / 3.0);
    const cplx A = 2.0 * std::cbrt(4.0) * r2 / (std::cbrt(3.0) * cube);
    const cplx B = std::cbrt(2.0) * cube / (std::cbrt(9.0) * std::pow(tau, 6));

    const cplx first = std::sqrt(1.0 - s * A + B);
    const cplx second = std::sqrt(2.0 + s * A - B - 2.0 / first);
    const cplx argument = 0.5 + 0.5 * first - 0.5 * second;
    const cplx t = -tau * (plus ? std::acosh(argument) : std::acos(argument));

    Candidate c;
    c.formula = Family::K6;
    c.branch = "principal";
    c.printed = true;
    c.argument = argument;
    if (std::isfinite(t.real()) && std::isfinite(t.imag()) &&
        std::abs(t.imag()) <= kImaginaryTolerance * tau) {
        c.time = t.real();
    }
    return c;
}

std::string sign_tag(double s) { return s > 0 ? "+" : "-"; }

double residual_at(const DeformationModel& m, double theta, double t) {
    return std::abs(eval_f(m, t) - theta);
}

NumericRoot bisect(const DeformationModel& m, double theta, double a, double b, double ga,
                   double tol) {
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double gm = eval_f(m, mid) - theta;
        if (gm == 0.0) {
            a = b = mid;
            break;
        }
        if ((gm < 0.0) == (ga < 0.0)) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    const double t = 0.5 * (a + b);
    return {t, a, b, residual_at(m, theta, t), false};
}

NumericRoot golden_min(const DeformationModel& m, double theta, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto h = [&](double t) { return std::abs(eval_f(m, t) - theta); };
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double hc = h(c);
    double hd = h(d);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (hc < hd) {
            b = d;
            d = c;
            hd = hc;
            c = b - inv_phi * (b - a);
            hc = h(c);
        } else {
            a = c;
            c = d;
            hc = hd;
            d = a + inv_phi * (b - a);
            hd = h(d);
        }
    }
    const double t = hc < hd ? c : d;
    return {t, a, b, std::min(hc, hd), true};
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

MatchQuery MatchQuery::with_default_window(const DeformationModel& model, double theta) {
    return {model, theta, -M_PI * model.tau(), M_PI * model.tau()};
}

std::vector<Candidate> closed_form_time(const MatchQuery& q) {
    require_valid(q);
    const DeformationModel& m = q.model;
    const bool plus = m.variant() == Variant::Plus;
    const double tau = m.tau();
    const double kappa = m.kappa();
    const double theta = q.theta;
    const Inverse c_inv = plus ? Inverse::Acosh : Inverse::Acos;
    const Inverse s_inv = plus ? Inverse::Asinh : Inverse::Asin;

    std::vector<Candidate> out;
    switch (m.family()) {
    case Family::K1: {
        const double root = std::sqrt(theta / kappa);
        emit(out, Family::K1, {-tau, c_inv, -root, "radical=-", true});
        emit(out, Family::K1, {-tau, c_inv, root, "radical=+", false});
        break;
    }
    case Family::K2:
        emit(out, Family::K2, {tau / 2.0, s_inv, 2.0 * theta / (tau * kappa), "principal", true});
        break;
    case Family::K3:
        emit(out, Family::K3,
             {-tau, s_inv, std::sqrt(theta / (tau * tau * kappa)), "principal", true});
        break;
    case Family::K4: {
        const double root = std::sqrt(theta / (4.0 * std::pow(tau, 4) * kappa));
        emit(out, Family::K4, {-tau, c_inv, 1.0 - root, "radical=-", true});
        emit(out, Family::K4, {-tau, c_inv, 1.0 + root, "radical=+", false});
        break;
    }
    case Family::K5: {
        // (1 o sqrt(1 i 4 theta / (tau^2 kappa))) / 2 for both nested signs;
        // the slash-consistent reading uses the variant's sign for both.
        const double v = plus ? 1.0 : -1.0;
        const double ratio = 4.0 * theta / (tau * tau * kappa);
        for (double outer : {v, -v}) {
            for (double inner : {v, -v}) {
                const cplx arg = (1.0 + outer * csqrt(1.0 + inner * ratio)) / 2.0;
                const std::string tag = "outer=" + sign_tag(outer) + ",inner=" + sign_tag(inner);
                emit(out, Family::K5, {-tau, c_inv, arg, tag, outer == v && inner == v});
            }
        }
        break;
    }
    case Family::K6:
        out.push_back(k6_candidate(q));
        break;
    }
    return out;
}

RootScan scan_roots(const MatchQuery& q) {
    require_valid(q);
    require_window(q);
    const DeformationModel& m = q.model;
    const double theta = q.theta;

    std::vector<double> ts;
    std::vector<double> gs;
    int n = q.grid_points;
    for (;;) {
        ts.resize(n);
        gs.resize(n);
        const double span = q.t_hi - q.t_lo;
        for (int i = 0; i < n; ++i) {
            ts[i] = (i == n - 1) ? q.t_hi : q.t_lo + span * (static_cast<double>(i) / (n - 1));
            gs[i] = eval_f(m, ts[i]) - theta;
        }
        // A root pair can only hide where g turns back towards zero: two small
        // same-sign neighbours, one of them a local minimum of |g| with no
        // sign change on either side. Small values along a monotone flank do
        // not count, otherwise every refinement near a touching extremum
        // would re-trigger all the way to the cap.
        auto turning = [&](int j) {
            if (j <= 0 || j >= n - 1) return false;
            const int s = sign_of(gs[j]);
            return s != 0 && sign_of(gs[j - 1]) == s && sign_of(gs[j + 1]) == s &&
                   std::abs(gs[j]) <= std::abs(gs[j - 1]) && std::abs(gs[j]) <= std::abs(gs[j + 1]);
        };
        bool suspicious = false;
        for (int i = 0; i + 1 < n && !suspicious; ++i) {
            suspicious = std::abs(gs[i]) < kPairSuspicion * theta &&
                         std::abs(gs[i + 1]) < kPairSuspicion * theta && gs[i] * gs[i + 1] > 0.0 &&
                         (turning(i) || turning(i + 1));
        }
        if (!suspicious || 2 * n > kMaxGridPoints) break;
        n *= 2;
    }

    std::vector<NumericRoot> found;
    for (int i = 0; i < n; ++i) {
        if (gs[i] == 0.0) found.push_back({ts[i], ts[i], ts[i], 0.0, false});
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (gs[i] * gs[i + 1] < 0.0) {
            found.push_back(bisect(m, theta, ts[i], ts[i + 1], gs[i], q.tol));
        }
    }
    // Even-multiplicity touches: local minima of |g| with no sign change.
    for (int i = 1; i + 1 < n; ++i) {
        const int s = sign_of(gs[i]);
        if (s == 0 || sign_of(gs[i - 1]) != s || sign_of(gs[i + 1]) != s) continue;
        if (std::abs(gs[i]) > std::abs(gs[i - 1]) || std::abs(gs[i]) > std::abs(gs[i + 1])) continue;
        NumericRoot r = golden_min(m, theta, ts[i - 1], ts[i + 1], q.tol);
        if (r.residual <= kTangentialResidual * theta) found.push_back(r);
    }

    std::sort(found.begin(), found.end(),
              [](const NumericRoot& x, const NumericRoot& y) { return x.time < y.time; });
    std::vector<NumericRoot> roots;
    for (const auto& r : found) {
        if (!roots.empty() && r.time - roots.back().time <= q.tol) {
            if (r.residual < roots.back().residual) roots.back() = r;
            continue;
        }
        roots.push_back(r);
    }
    return {std::move(roots), n};
}

std::vector<NumericRoot> numeric_roots(const MatchQuery& q) { return scan_roots(q).roots; }

MatchingTimeReport validate(const MatchQuery& q) {
    MatchingTimeReport report{q, {}, {}, 0, false, {}};
    RootScan scan = scan_roots(q);
    report.roots = std::move(scan.roots);
    report.grid_points_used = scan.grid_points_used;
    report.candidates = closed_form_time(q);

    const double tau = q.model.tau();
    bool any_rejected_printed = false;
    for (auto& c : report.candidates) {
        if (!c.time) {
            c.verdict = Verdict::OutOfDomain;
            continue;
        }
        const double t = *c.time;
        try {
            c.residual = residual_at(q.model, q.theta, t);
        } catch (const Error&) {
            // unreachable instant of the hyperbolic variant
        }
        if (t < q.t_lo || t > q.t_hi) {
            c.verdict = Verdict::OutOfWindow;
        } else if (c.residual && *c.residual <= kAcceptResidual * q.theta) {
            c.verdict = Verdict::Accepted;
        } else {
            c.verdict = Verdict::Rejected;
        }
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < report.roots.size(); ++k) {
            const double d = std::abs(report.roots[k].time - t);
            if (d < best) {
                best = d;
                c.nearest_root = k;
            }
        }
        if (c.nearest_root) c.root_distance = best;
        c.oracle_agrees = c.verdict == Verdict::Accepted && c.root_distance &&
                          *c.root_distance <= kRootMatchDistance * tau;
        if (c.verdict == Verdict::Rejected && c.printed) any_rejected_printed = true;
    }

    report.formula_defect = any_rejected_printed && !report.roots.empty();
    if (report.roots.empty()) {
        report.notes.push_back("theta is not attained by f in the window");
    }
    if (report.formula_defect) {
        std::ostringstream msg;
        msg << "printed " << to_string(q.model.family())
            << " closed form rejected while the oracle finds roots: suspected transcription defect";
        report.notes.push_back(msg.str());
    }
    for (const auto& c : report.candidates) {
        if (c.verdict == Verdict::Accepted && !c.oracle_agrees) {
            std::ostringstream msg;
            msg << "accepted candidate " << c.branch << " has no oracle root within "
                << kRootMatchDistance << "*tau";
            report.notes.push_back(msg.str());
        }
    }
    return report;
}

std::vector<PeriodicRoot> enumerate_periodic(const MatchQuery& q,
                                             std::span<const NumericRoot> base, int k_lo,
                                             int k_hi) {
    if (q.model.variant() != Variant::Minus) {
        fail(ErrorCode::WrongVariant, "periodic enumeration requires the minus variant");
    }
    if (k_lo > k_hi) {
        fail(ErrorCode::InvalidArgument, "k range is empty");
    }
    const double period = 2.0 * M_PI * q.model.tau();
    std::vector<PeriodicRoot> out;
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (int k = k_lo; k <= k_hi; ++k) {
            PeriodicRoot p;
            p.base_index = i;
            p.k = k;
            p.time = k == 0 ? base[i].time : base[i].time + period * k;
            p.residual = residual_at(q.model, q.theta, p.time);
            p.verified = p.residual <= kAcceptResidual * q.theta;
            out.push_back(p);
        }
    }
    return out;
}

std::vector<PeriodicRoot> enumerate_periodic(const MatchQuery& q, int k_lo, int k_hi) {
    if (q.model.variant() != Variant::Minus) {
        fail(ErrorCode::WrongVariant, "periodic enumeration requires the minus variant");
    }
    const auto base = numeric_roots(q);
    return enumerate_periodic(q, base, k_lo, k_hi);
}

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::OutOfDomain: return "out_of_domain";
    case Verdict::OutOfWindow: return "out_of_window";
    }
    return "?";
}

} // namespace nhspec
