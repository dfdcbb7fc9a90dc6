#include "nhspec/fock.hpp"

#include "nhspec/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nhspec {

namespace {

void require_dim(int dim) {
    if (dim < kMinFockDim || dim > kMaxFockDim) {
        std::ostringstream msg;
        msg << "dimension must be in [" << kMinFockDim << ", " << kMaxFockDim << "], got " << dim;
        fail(ErrorCode::InvalidArgument, msg.str());
    }
}

DefectReport make_report(const Eigen::MatrixXd& defect, double corner) {
    return {interior_max_abs(defect), corner, static_cast<int>(defect.rows())};
}

using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixCL = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

MatrixL annihilator_l(int dim) {
    MatrixL a = MatrixL::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) a(n, n + 1) = std::sqrt(static_cast<long double>(n + 1));
    return a;
}

// (x1^2 + x2^2 - |f|)/(2|f|) rebuilt from the coordinate definitions in long
// double. In double the products near the corner are O(D^2) and their
// rounding alone reaches ~1e-13; the extended evaluation keeps the check
// about the algebra rather than about the last bit.
MatrixL number_from_coordinates_l(double f_value, int orientation, int dim) {
    const long double f = f_value;
    const MatrixL a = annihilator_l(dim);
    const MatrixL ad = a.transpose();
    const long double scale = std::sqrt(f / 2.0L);
    const std::complex<long double> i_unit(0.0L, 1.0L);
    const MatrixCL x1 = (scale * (a + ad)).cast<std::complex<long double>>();
    const MatrixCL x2 = (static_cast<long double>(orientation) * scale * i_unit) *
                        (ad - a).cast<std::complex<long double>>();
    const MatrixL sq = (x1 * x1 + x2 * x2).real();
    return (sq - f * MatrixL::Identity(dim, dim)) / (2.0L * f);
}

} // namespace

Eigen::MatrixXd annihilator(int dim) {
    require_dim(dim);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        a(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
    }
    return a;
}

double interior_max_abs(const Eigen::MatrixXd& m) {
    const Eigen::Index k = m.rows() - 1;
    if (k <= 0) return 0.0;
    return m.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

TruncatedFockRep build_rep_from_f(double f, int dim) {
    require_dim(dim);
    if (!std::isfinite(f)) {
        fail(ErrorCode::Range, "deformation value is not finite");
    }
    if (std::abs(f) < kDegenerateF) {
        fail(ErrorCode::DegenerateTime, "f(t) vanishes: commutative instant, no ladder operators");
    }

    TruncatedFockRep rep;
    rep.dim = dim;
    rep.signed_f = f;
    rep.f_value = std::abs(f);
    rep.orientation = f > 0.0 ? 1 : -1;
    rep.a = annihilator(dim);
    rep.a_dagger = rep.a.transpose();

    const double scale = std::sqrt(rep.f_value / 2.0);
    const std::complex<double> i_unit(0.0, 1.0);
    rep.x1 = scale * (rep.a + rep.a_dagger);
    rep.x2 = (static_cast<double>(rep.orientation) * scale * i_unit) *
             (rep.a_dagger - rep.a).cast<std::complex<double>>();
    // a^dagger a evaluates to n only up to rounding of sqrt(n)^2; store the exact diagonal
    rep.N = Eigen::VectorXd::LinSpaced(dim, 0.0, dim - 1.0).asDiagonal();

    const Eigen::MatrixXcd x1c = rep.x1.cast<std::complex<double>>();
    const Eigen::MatrixXcd sum = x1c * x1c + rep.x2 * rep.x2;
    rep.S = M_PI * sum.real();
    return rep;
}

TruncatedFockRep build_rep(const DeformationModel& model, double t, int dim) {
    require_dim(dim);
    return build_rep_from_f(eval_f(model, t), dim);
}

Eigen::MatrixXd commutator_defect_matrix(int dim) {
    const Eigen::MatrixXd a = annihilator(dim);
    const Eigen::MatrixXd ad = a.transpose();
    return a * ad - ad * a - Eigen::MatrixXd::Identity(dim, dim);
}

DefectReport commutator_defect(int dim) {
    const Eigen::MatrixXd defect = commutator_defect_matrix(dim);
    // corner of [a, a^dagger] = defect corner + 1
    return make_report(defect, defect(dim - 1, dim - 1) + 1.0);
}

Eigen::MatrixXd number_from_coordinates(const TruncatedFockRep& rep) {
    return number_from_coordinates_l(rep.f_value, rep.orientation, rep.dim).cast<double>();
}

Eigen::MatrixXd number_from_coordinates(const DeformationModel& model, double t, int dim) {
    return number_from_coordinates(build_rep(model, t, dim));
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> number_commutator_defect_matrices(int dim) {
    require_dim(dim);
    // The coordinate form is independent of f; take f = 1.
    const MatrixL n = number_from_coordinates_l(1.0, 1, dim);
    const MatrixL a = annihilator_l(dim);
    const MatrixL ad = a.transpose();
    const MatrixL raise = n * ad - ad * n - ad;
    const MatrixL lower = n * a - a * n + a;
    return {raise.cast<double>(), lower.cast<double>()};
}

std::pair<DefectReport, DefectReport> number_commutators_defect(int dim) {
    const auto [raise, lower] = number_commutator_defect_matrices(dim);
    // report the largest-magnitude entry on the boundary row/column
    auto boundary = [dim](const Eigen::MatrixXd& m) {
        double best = 0.0;
        for (int k = 0; k < dim; ++k) {
            for (double v : {m(dim - 1, k), m(k, dim - 1)}) {
                if (std::abs(v) > std::abs(best)) best = v;
            }
        }
        return best;
    };
    return {make_report(raise, boundary(raise)), make_report(lower, boundary(lower))};
}

AreaSpectrumCheck area_eigenvalues(const TruncatedFockRep& rep) {
    AreaSpectrumCheck out;
    const int d = rep.dim;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rep.S, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());

    const double norm = rep.S.norm();
    double offdiag = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i != j) offdiag = std::max(offdiag, std::abs(rep.S(i, j)));
        }
    }
    out.max_offdiag_ratio = norm > 0.0 ? offdiag / norm : offdiag;

    out.diagonal.resize(d);
    for (int n = 0; n < d; ++n) {
        out.diagonal[n] = rep.S(n, n);
    }
    for (int n = 0; n + 1 < d; ++n) {
        const double expected = 2.0 * M_PI * rep.f_value * (n + 0.5);
        out.max_interior_rel_dev =
            std::max(out.max_interior_rel_dev, std::abs(out.diagonal[n] - expected) / expected);
    }
    out.corner = out.diagonal[d - 1];
    out.expected_corner = M_PI * rep.f_value * (d - 1);
    return out;
}

AreaSpectrumCheck area_eigenvalues(const DeformationModel& model, double t, int dim) {
    return area_eigenvalues(build_rep(model, t, dim));
}

Eigen::VectorXd eigenstate(int n, int dim) {
    require_dim(dim);
    if (n < 0 || n >= dim) {
        std::ostringstream msg;
        msg << "level " << n << " outside [0, " << dim - 1 << "]";
        fail(ErrorCode::InvalidArgument, msg.str());
    }
    const Eigen::MatrixXd ad = annihilator(dim).transpose();
    Eigen::VectorXd state = Eigen::VectorXd::Unit(dim, 0);
    for (int k = 1; k <= n; ++k) {
        state = ad * state / std::sqrt(static_cast<double>(k));
    }
    return state;
}

} // namespace nhspec
