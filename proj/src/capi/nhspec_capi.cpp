#include "nhspec/nhspec.h"

#include "nhspec/deformation.hpp"
#include "nhspec/error.hpp"
#include "nhspec/fock.hpp"
#include "nhspec/limits.hpp"
#include "nhspec/matching.hpp"
#include "nhspec/spectrum.hpp"
#include "nhspec/verify.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <string>

using namespace nhspec;

struct nhs_model {
    DeformationModel model;
};

struct nhs_spectrum {
    SpectrumTable table;
};

struct nhs_fock_rep {
    TruncatedFockRep rep;
};

struct nhs_match_report {
    MatchingTimeReport report;
};

struct nhs_summary {
    VerificationSummary summary;
};

struct nhs_limit_report {
    LimitReport report;
};

namespace {

thread_local std::string g_last_error;

nhs_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return NHS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Range: return NHS_ERR_RANGE;
    case ErrorCode::DegenerateTime: return NHS_ERR_DEGENERATE_TIME;
    case ErrorCode::EmptyWindow: return NHS_ERR_EMPTY_WINDOW;
    case ErrorCode::UnsupportedFamily: return NHS_ERR_UNSUPPORTED_FAMILY;
    case ErrorCode::WrongVariant: return NHS_ERR_WRONG_VARIANT;
    }
    return NHS_ERR_INTERNAL;
}

nhs_status set_error(nhs_status status, const char* what) {
    g_last_error = what;
    return status;
}

struct BufferTooSmall {};

template <typename Fn>
nhs_status guarded(Fn&& fn) {
    try {
        fn();
        return NHS_OK;
    } catch (const BufferTooSmall&) {
        return set_error(NHS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    } catch (const Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(NHS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(NHS_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(NHS_ERR_INTERNAL, "unknown failure");
    }
}

void require(bool cond, const char* what) {
    if (!cond) fail(ErrorCode::InvalidArgument, what);
}

Family to_family(nhs_family f) {
    require(f >= NHS_K1 && f <= NHS_K6, "family out of range");
    return static_cast<Family>(f);
}

Variant to_variant(nhs_variant v) {
    require(v == NHS_PLUS || v == NHS_MINUS, "variant out of range");
    return v == NHS_PLUS ? Variant::Plus : Variant::Minus;
}

nhs_verdict from_verdict(Verdict v) {
    switch (v) {
    case Verdict::Accepted: return NHS_ACCEPTED;
    case Verdict::Rejected: return NHS_REJECTED;
    case Verdict::OutOfDomain: return NHS_OUT_OF_DOMAIN;
    case Verdict::OutOfWindow: return NHS_OUT_OF_WINDOW;
    }
    return NHS_OUT_OF_DOMAIN;
}

void copy_matrix(const Eigen::MatrixXd& m, double* out, size_t capacity) {
    const size_t need = static_cast<size_t>(m.size());
    if (capacity < need) throw BufferTooSmall{};
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out[i * m.cols() + j] = m(i, j);
        }
    }
}

nhs_defect_report from_defect(const DefectReport& d) {
    return {d.max_interior_deviation, d.corner_value, d.dim};
}

bool buffer_ok(size_t capacity, size_t need) { return capacity >= need; }

} // namespace

extern "C" {

const char* nhs_last_error(void) { return g_last_error.c_str(); }

const char* nhs_version(void) { return "1.0.0"; }

nhs_status nhs_model_create(nhs_family family, nhs_variant variant, double kappa, double tau,
                            nhs_model** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new nhs_model{DeformationModel(to_family(family), to_variant(variant), kappa, tau)};
    });
}

void nhs_model_destroy(nhs_model* model) { delete model; }

nhs_status nhs_eval_f(const nhs_model* model, double t, double* out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = eval_f(model->model, t);
    });
}

nhs_status nhs_eval_quantum(const nhs_model* model, double t, double* out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = eval_quantum(model->model, t);
    });
}

nhs_status nhs_apply_duality(const nhs_model* model, double t, double* out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = apply_duality(model->model, t);
    });
}

nhs_status nhs_parity_class(nhs_family family, nhs_parity* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = parity_class(to_family(family)) == Parity::Even ? NHS_EVEN : NHS_ODD;
    });
}

nhs_status nhs_dual_of(nhs_family family, int* has_dual, nhs_family* out) {
    return guarded([&] {
        require(has_dual && out, "null argument");
        const auto dual = dual_of(to_family(family));
        *has_dual = dual.has_value();
        if (dual) *out = static_cast<nhs_family>(*dual);
    });
}

nhs_status nhs_galilei_limit(const nhs_model* model, int* degree, double* coefficient) {
    return guarded([&] {
        require(model && degree && coefficient, "null argument");
        const auto poly = galilei_limit_poly(model->model);
        *degree = poly.terms.front().degree;
        *coefficient = poly.terms.front().coefficient;
    });
}

nhs_status nhs_series_expand(const nhs_model* model, int order, double* coeffs, size_t capacity) {
    return guarded([&] {
        require(model && coeffs, "null argument");
        const auto series = series_expand(model->model, order);
        if (!buffer_ok(capacity, series.size())) throw BufferTooSmall{};
        std::memcpy(coeffs, series.data(), series.size() * sizeof(double));
    });
}

nhs_status nhs_level(const nhs_model* model, double t, int n, double* out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = level(model->model, t, n);
    });
}

nhs_status nhs_spectrum_create(const nhs_model* model, double t, int n_max, nhs_spectrum** out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = new nhs_spectrum{spectrum(model->model, t, n_max)};
    });
}

nhs_status nhs_canonical_spectrum_create(double theta, int n_max, nhs_spectrum** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new nhs_spectrum{canonical_spectrum(theta, n_max)};
    });
}

void nhs_spectrum_destroy(nhs_spectrum* spectrum) { delete spectrum; }

nhs_status nhs_spectrum_time(const nhs_spectrum* spectrum, int* has_time, double* time) {
    return guarded([&] {
        require(spectrum && has_time && time, "null argument");
        *has_time = spectrum->table.time.has_value();
        *time = spectrum->table.time.value_or(0.0);
    });
}

nhs_status nhs_spectrum_quantum(const nhs_spectrum* spectrum, double* out) {
    return guarded([&] {
        require(spectrum && out, "null argument");
        *out = spectrum->table.quantum;
    });
}

size_t nhs_spectrum_size(const nhs_spectrum* spectrum) {
    return spectrum ? spectrum->table.levels.size() : 0;
}

nhs_status nhs_spectrum_level(const nhs_spectrum* spectrum, size_t index, int* n, double* s) {
    return guarded([&] {
        require(spectrum && n && s, "null argument");
        require(index < spectrum->table.levels.size(), "level index out of range");
        *n = spectrum->table.levels[index].n;
        *s = spectrum->table.levels[index].s;
    });
}

nhs_status nhs_fock_rep_create(const nhs_model* model, double t, int dim, nhs_fock_rep** out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = new nhs_fock_rep{build_rep(model->model, t, dim)};
    });
}

void nhs_fock_rep_destroy(nhs_fock_rep* rep) { delete rep; }

int nhs_fock_rep_dim(const nhs_fock_rep* rep) { return rep ? rep->rep.dim : 0; }

double nhs_fock_rep_f_value(const nhs_fock_rep* rep) { return rep ? rep->rep.f_value : 0.0; }

int nhs_fock_rep_orientation(const nhs_fock_rep* rep) { return rep ? rep->rep.orientation : 0; }

nhs_status nhs_fock_rep_matrix(const nhs_fock_rep* rep, const char* which, double* out,
                               size_t capacity) {
    const size_t need = rep ? static_cast<size_t>(rep->rep.dim) * rep->rep.dim : 0;
    if (rep && out && capacity < need) {
        return set_error(NHS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    return guarded([&] {
        require(rep && which && out, "null argument");
        const TruncatedFockRep& r = rep->rep;
        const std::string name(which);
        if (name == "a") copy_matrix(r.a, out, capacity);
        else if (name == "a_dagger") copy_matrix(r.a_dagger, out, capacity);
        else if (name == "x1") copy_matrix(r.x1, out, capacity);
        else if (name == "N") copy_matrix(r.N, out, capacity);
        else if (name == "S") copy_matrix(r.S, out, capacity);
        else if (name == "N_coordinates") copy_matrix(number_from_coordinates(r), out, capacity);
        else fail(ErrorCode::InvalidArgument, "unknown matrix name: " + name);
    });
}

nhs_status nhs_fock_rep_x2(const nhs_fock_rep* rep, double* out, size_t capacity) {
    if (rep && out && capacity < 2 * static_cast<size_t>(rep->rep.dim) * rep->rep.dim) {
        return set_error(NHS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    return guarded([&] {
        require(rep && out, "null argument");
        const auto& x2 = rep->rep.x2;
        for (Eigen::Index i = 0; i < x2.rows(); ++i) {
            for (Eigen::Index j = 0; j < x2.cols(); ++j) {
                out[2 * (i * x2.cols() + j)] = x2(i, j).real();
                out[2 * (i * x2.cols() + j) + 1] = x2(i, j).imag();
            }
        }
    });
}

nhs_status nhs_fock_rep_area(const nhs_fock_rep* rep, double* eigenvalues, size_t capacity,
                             nhs_area_check* check) {
    if (rep && eigenvalues && capacity < static_cast<size_t>(rep->rep.dim)) {
        return set_error(NHS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    return guarded([&] {
        require(rep && eigenvalues && check, "null argument");
        const AreaSpectrumCheck area = area_eigenvalues(rep->rep);
        std::memcpy(eigenvalues, area.eigenvalues.data(), area.eigenvalues.size() * sizeof(double));
        *check = {area.max_offdiag_ratio, area.max_interior_rel_dev, area.corner,
                  area.expected_corner};
    });
}

nhs_status nhs_commutator_defect(int dim, nhs_defect_report* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = from_defect(commutator_defect(dim));
    });
}

nhs_status nhs_number_commutators_defect(int dim, nhs_defect_report* raise,
                                         nhs_defect_report* lower) {
    return guarded([&] {
        require(raise && lower, "null argument");
        const auto [r, l] = number_commutators_defect(dim);
        *raise = from_defect(r);
        *lower = from_defect(l);
    });
}

nhs_status nhs_eigenstate(int n, int dim, double* out, size_t capacity) {
    if (out && dim > 0 && capacity < static_cast<size_t>(dim)) {
        return set_error(NHS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    return guarded([&] {
        require(out != nullptr, "null argument");
        const Eigen::VectorXd v = eigenstate(n, dim);
        std::memcpy(out, v.data(), static_cast<size_t>(v.size()) * sizeof(double));
    });
}

nhs_status nhs_match_validate(const nhs_model* model, double theta, double t_lo, double t_hi,
                              double tol, int grid_points, nhs_match_report** out) {
    return guarded([&] {
        require(model && out, "null argument");
        MatchQuery q{model->model, theta, t_lo, t_hi};
        if (tol > 0.0) q.tol = tol;
        if (grid_points > 0) q.grid_points = grid_points;
        *out = new nhs_match_report{validate(q)};
    });
}

void nhs_match_report_destroy(nhs_match_report* report) { delete report; }

size_t nhs_match_candidate_count(const nhs_match_report* report) {
    return report ? report->report.candidates.size() : 0;
}

nhs_status nhs_match_candidate(const nhs_match_report* report, size_t index, nhs_candidate* out) {
    return guarded([&] {
        require(report && out, "null argument");
        require(index < report->report.candidates.size(), "candidate index out of range");
        const Candidate& c = report->report.candidates[index];
        out->formula = static_cast<nhs_family>(c.formula);
        out->branch = c.branch.c_str();
        out->printed = c.printed;
        out->argument_re = c.argument.real();
        out->argument_im = c.argument.imag();
        out->has_time = c.time.has_value();
        out->time = c.time.value_or(0.0);
        out->verdict = from_verdict(c.verdict);
        out->has_residual = c.residual.has_value();
        out->residual = c.residual.value_or(0.0);
        out->has_nearest_root = c.nearest_root.has_value();
        out->nearest_root = c.nearest_root.value_or(0);
        out->root_distance = c.root_distance.value_or(0.0);
        out->oracle_agrees = c.oracle_agrees;
    });
}

size_t nhs_match_root_count(const nhs_match_report* report) {
    return report ? report->report.roots.size() : 0;
}

nhs_status nhs_match_root(const nhs_match_report* report, size_t index, nhs_root* out) {
    return guarded([&] {
        require(report && out, "null argument");
        require(index < report->report.roots.size(), "root index out of range");
        const NumericRoot& r = report->report.roots[index];
        *out = {r.time, r.bracket_lo, r.bracket_hi, r.residual, r.multiple};
    });
}

int nhs_match_formula_defect(const nhs_match_report* report) {
    return report ? report->report.formula_defect : 0;
}

int nhs_match_grid_points(const nhs_match_report* report) {
    return report ? report->report.grid_points_used : 0;
}

size_t nhs_match_note_count(const nhs_match_report* report) {
    return report ? report->report.notes.size() : 0;
}

const char* nhs_match_note(const nhs_match_report* report, size_t index) {
    if (!report || index >= report->report.notes.size()) return nullptr;
    return report->report.notes[index].c_str();
}

nhs_status nhs_match_periodic(const nhs_match_report* report, int k_lo, int k_hi,
                              nhs_periodic_root* out, size_t capacity, size_t* count) {
    return guarded([&] {
        require(report && count, "null argument");
        const auto& r = report->report;
        const auto periodic = enumerate_periodic(r.query, r.roots, k_lo, k_hi);
        *count = periodic.size();
        for (size_t i = 0; i < periodic.size() && i < capacity && out; ++i) {
            const PeriodicRoot& p = periodic[i];
            out[i] = {p.base_index, p.k, p.time, p.residual, p.verified};
        }
    });
}

nhs_status nhs_verify(nhs_suite suite, int dim, nhs_summary** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        require(suite >= NHS_SUITE_FOCK && suite <= NHS_SUITE_MATCHING, "suite out of range");
        VerifyOptions options;
        if (dim > 0) options.dim = dim;
        *out = new nhs_summary{run_suite(static_cast<Suite>(suite), options)};
    });
}

void nhs_summary_destroy(nhs_summary* summary) { delete summary; }

const char* nhs_summary_suite(const nhs_summary* summary) {
    return summary ? summary->summary.suite.c_str() : nullptr;
}

int nhs_summary_run(const nhs_summary* summary) { return summary ? summary->summary.run : 0; }

int nhs_summary_passed(const nhs_summary* summary) {
    return summary ? summary->summary.passed : 0;
}

double nhs_summary_worst(const nhs_summary* summary) {
    return summary ? summary->summary.worst_deviation : 0.0;
}

const char* nhs_summary_worst_case(const nhs_summary* summary) {
    return summary ? summary->summary.worst_case.c_str() : nullptr;
}

size_t nhs_summary_record_count(const nhs_summary* summary) {
    return summary ? summary->summary.records.size() : 0;
}

nhs_status nhs_summary_record(const nhs_summary* summary, size_t index, nhs_case_record* out) {
    return guarded([&] {
        require(summary && out, "null argument");
        require(index < summary->summary.records.size(), "record index out of range");
        const CaseRecord& r = summary->summary.records[index];
        *out = {r.name.c_str(), r.passed, r.deviation, r.tolerance};
    });
}

nhs_status nhs_limit_report_create(nhs_family family, nhs_variant variant, double kappa, double t,
                                   const double* taus, size_t count, nhs_limit_report** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        require(count == 0 || taus != nullptr, "null tau ladder");
        std::vector<double> ladder =
            count == 0 ? default_tau_ladder(t) : std::vector<double>(taus, taus + count);
        *out = new nhs_limit_report{
            limit_report(to_family(family), to_variant(variant), kappa, t, ladder)};
    });
}

void nhs_limit_report_destroy(nhs_limit_report* report) { delete report; }

size_t nhs_limit_sample_count(const nhs_limit_report* report) {
    return report ? report->report.samples.size() : 0;
}

nhs_status nhs_limit_get_sample(const nhs_limit_report* report, size_t index, nhs_limit_sample* out) {
    return guarded([&] {
        require(report && out, "null argument");
        require(index < report->report.samples.size(), "sample index out of range");
        const LimitSample& s = report->report.samples[index];
        *out = {s.tau, s.value, s.limit, s.deviation};
    });
}

nhs_status nhs_limit_order(const nhs_limit_report* report, int* has_order, double* order) {
    return guarded([&] {
        require(report && has_order && order, "null argument");
        *has_order = report->report.order.has_value();
        *order = report->report.order.value_or(0.0);
    });
}

nhs_status nhs_limit_polynomial(const nhs_limit_report* report, int* degree, double* coefficient) {
    return guarded([&] {
        require(report && degree && coefficient, "null argument");
        *degree = report->report.polynomial.terms.front().degree;
        *coefficient = report->report.polynomial.terms.front().coefficient;
    });
}

int nhs_limit_exact(const nhs_limit_report* report) { return report ? report->report.exact : 0; }

int nhs_limit_polynomial_confirmed(const nhs_limit_report* report) {
    return report ? report->report.polynomial_confirmed : 0;
}

} // extern "C"
