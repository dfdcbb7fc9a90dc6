#pragma once

#include "nhspec/deformation.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace nhspec {

inline constexpr int kDefaultFockDim = 64;
inline constexpr int kMinFockDim = 2;
inline constexpr int kMaxFockDim = 1024;

// Below this |f| the ladder construction divides by ~zero.
inline constexpr double kDegenerateF = 1e-300;

/// Dense D x D representation of the ladder and coordinate operators at one
/// instant. The annihilator `a` always has a(n, n+1) = sqrt(n+1); a negative
/// f is absorbed by flipping the sign of x2 (orientation = -1), which is the
/// same as exchanging the roles of a and a^dagger in the coordinate map.
struct TruncatedFockRep {
    int dim = 0;
    double f_value = 0.0;  // |f(t)|
    double signed_f = 0.0; // f(t)
    int orientation = 1;   // sign of f(t)
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_dagger;
    Eigen::MatrixXd x1;
    Eigen::MatrixXcd x2;
    Eigen::MatrixXd N;
    Eigen::MatrixXd S;
};

/// Deviation of an operator identity from exactness. Interior deviation is
/// measured over indices 0..D-2 only; the last row and column carry the
/// unavoidable truncation artefact.
struct DefectReport {
    double max_interior_deviation = 0.0;
    double corner_value = 0.0;
    int dim = 0;
};

struct AreaSpectrumCheck {
    std::vector<double> eigenvalues; // ascending, from a symmetric eigensolver
    std::vector<double> diagonal;
    double max_offdiag_ratio = 0.0;    // max |S_ij| (i != j) / ||S||
    double max_interior_rel_dev = 0.0; // diagonal vs 2*pi*|f|*(n + 1/2), n <= D-2
    double corner = 0.0;
    double expected_corner = 0.0; // pi*|f|*(D - 1)
};

TruncatedFockRep build_rep(const DeformationModel& model, double t, int dim = kDefaultFockDim);
TruncatedFockRep build_rep_from_f(double f, int dim = kDefaultFockDim);

Eigen::MatrixXd annihilator(int dim);

// [a, a^dagger] - I, and the report whose corner_value is the corner entry of
// [a, a^dagger] itself (-(D-1)).
Eigen::MatrixXd commutator_defect_matrix(int dim);
DefectReport commutator_defect(int dim);

// [N, a^dagger] - a^dagger and [N, a] + a, with N taken from the coordinate
// form (x1^2 + x2^2 - |f|)/(2|f|) whose corner entry is truncated.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> number_commutator_defect_matrices(int dim);
std::pair<DefectReport, DefectReport> number_commutators_defect(int dim);

Eigen::MatrixXd number_from_coordinates(const TruncatedFockRep& rep);
Eigen::MatrixXd number_from_coordinates(const DeformationModel& model, double t,
                                        int dim = kDefaultFockDim);

AreaSpectrumCheck area_eigenvalues(const TruncatedFockRep& rep);
AreaSpectrumCheck area_eigenvalues(const DeformationModel& model, double t,
                                   int dim = kDefaultFockDim);

// (a^dagger)^n e_0 / sqrt(n!).
Eigen::VectorXd eigenstate(int n, int dim);

// Max |M_ij| over the leading (D-1) x (D-1) block.
double interior_max_abs(const Eigen::MatrixXd& m);

} // namespace nhspec
