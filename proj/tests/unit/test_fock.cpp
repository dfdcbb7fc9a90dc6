#include <doctest.h>

#include "nhspec/error.hpp"
#include "nhspec/fock.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace nhspec;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected nhspec::Error");
    return ErrorCode::InvalidArgument;
}

// Zero the last row and column, then take the max entry.
double masked_max(Eigen::MatrixXd m) {
    const auto d = m.rows();
    m.row(d - 1).setZero();
    m.col(d - 1).setZero();
    return m.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("smallest ladder") {
    const auto rep = build_rep_from_f(1.0, 2);
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 0, 0;
    CHECK(rep.a == a);
    CHECK(rep.N == Eigen::Vector2d(0, 1).asDiagonal().toDenseMatrix());
}

TEST_CASE("4x4 ladder products against naive long double products") {
    const auto a = oracle::ladder(4);
    const auto ad = oracle::transpose(a);
    const auto sym = oracle::add(oracle::matmul(a, ad), oracle::matmul(ad, a));
    const long double expected[4] = {1, 3, 5, 3};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(sym[i][i] - expected[i]) <= 1e-18L);

    for (double f : {1.0, 0.3, 17.0}) {
        const auto rep = build_rep_from_f(f, 4);
        const Eigen::MatrixXd prod = rep.a * rep.a_dagger + rep.a_dagger * rep.a;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) CHECK(prod(i, j) == doctest::Approx(static_cast<double>(sym[i][j])));
        }
        const auto check = area_eigenvalues(rep);
        for (int i = 0; i < 4; ++i) {
            CHECK(check.diagonal[i] / (M_PI * f) == doctest::Approx(static_cast<double>(expected[i])).epsilon(1e-14));
        }
    }
}

TEST_CASE("representation structure") {
    const auto rep = build_rep({Family::K2, Variant::Plus, 1.2, 0.7}, 0.4, 16);
    CHECK(rep.a_dagger == rep.a.transpose());
    CHECK((rep.x1 - rep.x1.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((rep.x2 - rep.x2.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(rep.x2.real().cwiseAbs().maxCoeff() == 0.0);
    CHECK((rep.S - rep.S.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * rep.S.norm());
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) CHECK(rep.N(i, j) == (i == j ? i : 0));
    }
    CHECK((rep.a_dagger * rep.a - rep.N).cwiseAbs().maxCoeff() <= 16 * 1e-15);
}

TEST_CASE("negative f flips orientation and keeps the spectrum positive") {
    const DeformationModel m(Family::K2, Variant::Minus, 1.0, 1.0);
    const auto rep = build_rep(m, 2.5, 8);
    CHECK(rep.signed_f < 0.0);
    CHECK(rep.orientation == -1);
    CHECK(rep.f_value == -rep.signed_f);
    // [x1, x2] = i f on the interior
    const Eigen::MatrixXcd x1 = rep.x1.cast<std::complex<double>>();
    const Eigen::MatrixXcd comm = x1 * rep.x2 - rep.x2 * x1;
    for (int n = 0; n + 1 < 8; ++n) {
        CHECK(comm(n, n).imag() == doctest::Approx(rep.signed_f).epsilon(1e-13));
        CHECK(std::abs(comm(n, n).real()) <= 1e-15);
    }
    const auto check = area_eigenvalues(rep);
    CHECK(check.max_interior_rel_dev <= 1e-12);
    CHECK(check.diagonal[0] > 0.0);
}

TEST_CASE("degenerate instant and bad dimensions") {
    CHECK(code_of([] { build_rep({Family::K3, Variant::Plus, 1.0, 1.0}, 0.0); }) == ErrorCode::DegenerateTime);
    CHECK(code_of([] { build_rep_from_f(0.0, 4); }) == ErrorCode::DegenerateTime);
    CHECK(code_of([] { build_rep_from_f(1.0, 1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { build_rep_from_f(1.0, 1025); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { commutator_defect(1); }) == ErrorCode::InvalidArgument);
    CHECK_NOTHROW(build_rep_from_f(1.0, 1024));
}

TEST_CASE("commutator defect examples") {
    const auto d4 = commutator_defect(4);
    // exact in rational arithmetic; sqrt(n)^2 rounding leaves a few ulp
    CHECK(d4.max_interior_deviation <= 1e-13);
    CHECK(std::abs(d4.corner_value + 3.0) <= 1e-10 * 3.0);
    CHECK(d4.dim == 4);
    CHECK(std::abs(commutator_defect(2).corner_value + 1.0) <= 1e-10);
    const auto d64 = commutator_defect(64);
    CHECK(d64.max_interior_deviation <= 1e-13);
    CHECK(std::abs(d64.corner_value + 63.0) <= 1e-10 * 63.0);
}

TEST_CASE("commutator defect matches the naive product") {
    for (int d : {2, 3, 5, 9}) {
        const auto a = oracle::ladder(d);
        const auto ad = oracle::transpose(a);
        const auto comm = oracle::add(oracle::matmul(a, ad), oracle::matmul(ad, a), -1.0L);
        const Eigen::MatrixXd defect = commutator_defect_matrix(d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const double expect = static_cast<double>(comm[i][j]) - (i == j ? 1.0 : 0.0);
                CHECK(std::abs(defect(i, j) - expect) <= 1e-14);
            }
        }
        CHECK(commutator_defect(d).corner_value == doctest::Approx(static_cast<double>(comm[d - 1][d - 1])));
    }
}

TEST_CASE("number commutators: 3x3 defect sits at (2,1) only") {
    const auto [raise, lower] = number_commutator_defect_matrices(3);
    // N_coord = diag(0, 1, 1/2): ([N, a^dagger] - a^dagger)(2,1) = (1/2 - 1 - 1) sqrt 2
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == 2 && j == 1) {
                CHECK(raise(i, j) == doctest::Approx(-1.5 * std::sqrt(2.0)).epsilon(1e-14));
            } else {
                CHECK(std::abs(raise(i, j)) <= 1e-14);
            }
        }
    }
    CHECK(lower(1, 2) == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-14));

    const auto [r3, l3] = number_commutators_defect(3);
    CHECK(r3.max_interior_deviation <= 1e-13);
    CHECK(r3.corner_value == doctest::Approx(-1.5 * std::sqrt(2.0)));
    CHECK(l3.corner_value == doctest::Approx(1.5 * std::sqrt(2.0)));

    const auto [r2, l2] = number_commutators_defect(2);
    CHECK(l2.max_interior_deviation <= 1e-13);
    CHECK(r2.max_interior_deviation <= 1e-13);
}

TEST_CASE("all defects are localized on the boundary") {
    for (int d : {2, 3, 8, 64, 200}) {
        CHECK(masked_max(commutator_defect_matrix(d)) <= 1e-13);
        const auto [raise, lower] = number_commutator_defect_matrices(d);
        CHECK(masked_max(raise) <= 1e-13);
        CHECK(masked_max(lower) <= 1e-13);
        if (d > 2) {
            CHECK(std::abs(number_commutators_defect(d).first.corner_value) > 0.1);
        }
    }
}

TEST_CASE("number operator from coordinates") {
    const auto rep = build_rep_from_f(1.0, 4);
    const Eigen::MatrixXd n = number_from_coordinates(rep);
    const double expected[4] = {0, 1, 2, 1};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) CHECK(std::abs(n(i, j) - (i == j ? expected[i] : 0.0)) <= 1e-14);
    }
    CHECK(std::abs(number_from_coordinates(build_rep_from_f(2.0, 2))(0, 0)) <= 1e-15);

    // f cancels on the interior
    const Eigen::MatrixXd base = number_from_coordinates(build_rep_from_f(1.0, 32));
    for (double f : {1e-4, 0.37, -2.2, 815.0}) {
        const Eigen::MatrixXd other = number_from_coordinates(build_rep_from_f(f, 32));
        CHECK(interior_max_abs(other - base) <= 1e-12);
        CHECK(interior_max_abs(other - build_rep_from_f(f, 32).N) <= 1e-12);
    }
}

TEST_CASE("area operator equals 2 pi f (N + 1/2) on the interior") {
    for (double f : {0.5, 1.0, 3.25}) {
        const auto rep = build_rep_from_f(f, 24);
        const Eigen::MatrixXd expect =
            2.0 * M_PI * f * (rep.N + 0.5 * Eigen::MatrixXd::Identity(24, 24));
        CHECK(interior_max_abs(rep.S - expect) / (2.0 * M_PI * f) <= 1e-12);
    }
}

TEST_CASE("area eigenvalue examples") {
    const auto check = area_eigenvalues(build_rep_from_f(0.5, 8));
    for (int n = 0; n <= 6; ++n) {
        CHECK(oracle::rel(check.diagonal[n], M_PI * 0.5 * (2 * n + 1)) <= 1e-12);
    }
    CHECK(oracle::rel(check.corner, check.expected_corner) <= 1e-12);
    CHECK(check.expected_corner == doctest::Approx(M_PI * 0.5 * 7));
    CHECK(check.max_offdiag_ratio <= 1e-12);
    // the eigensolver sees the same values as the diagonal
    std::vector<double> diag = check.diagonal;
    std::sort(diag.begin(), diag.end());
    for (std::size_t k = 0; k < diag.size(); ++k) CHECK(check.eigenvalues[k] == doctest::Approx(diag[k]).epsilon(1e-12));

    // canonical: f = theta reproduces 2 pi theta (n + 1/2)
    const double theta = 0.8;
    const auto canon = area_eigenvalues({Family::K1, Variant::Minus, theta, 1.0}, 0.0, 16);
    for (int n = 0; n < 15; ++n) CHECK(oracle::rel(canon.diagonal[n], 2 * M_PI * theta * (n + 0.5)) <= 1e-12);
}

TEST_CASE("eigenstates") {
    const Eigen::VectorXd vac = eigenstate(0, 6);
    CHECK(vac == Eigen::VectorXd::Unit(6, 0));
    CHECK((annihilator(6) * vac).cwiseAbs().maxCoeff() == 0.0);
    CHECK((eigenstate(2, 4) - Eigen::VectorXd::Unit(4, 2)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((eigenstate(63, 64) - Eigen::VectorXd::Unit(64, 63)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(code_of([] { eigenstate(4, 4); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { eigenstate(-1, 4); }) == ErrorCode::InvalidArgument);

    const auto rep = build_rep({Family::K5, Variant::Plus, 0.5, 2.0}, 1.3, 64);
    const double norm = rep.S.norm();
    for (int n = 0; n <= 62; ++n) {
        const Eigen::VectorXd v = eigenstate(n, 64);
        const double lambda = 2 * M_PI * rep.f_value * (n + 0.5);
        CHECK((rep.S * v - lambda * v).norm() <= 1e-10 * norm);
    }
}
