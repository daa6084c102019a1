#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "spin7/clifford.hpp"

using namespace spin7;

namespace {
Matrix blade_matrix(Blade b, int sign_at_ij = -1) {
    static const auto g = [] {
        std::array<std::vector<Matrix>, 2> v;
        for (int i = 1; i <= 8; ++i) v[0].push_back(gamma(i, -1)), v[1].push_back(gamma(i, +1));
        return v;
    }();
    Matrix m = Matrix::identity(kSpinorDim);
    for (int i : oracle::indices(b)) m = m * g[sign_at_ij > 0][static_cast<std::size_t>(i - 1)];
    return m;
}

// sum of coefficient * product of gammas, no use of the signed-permutation tables
Matrix naive_matrix(const MultiVector& a, int sign_at_ij = -1) {
    Matrix m(kSpinorDim, kSpinorDim);
    for (const auto& [b, c] : a.terms()) m = m + scale(blade_matrix(b, sign_at_ij), c);
    return m;
}

std::size_t eigenspace_dim(const Matrix& m, long lambda) {
    return kSpinorDim - rank(m - scale(Matrix::identity(kSpinorDim), Scalar(lambda)));
}
}  // namespace

TEST_CASE("Clifford relations e_i e_j + e_j e_i = -2 delta_ij") {
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            Matrix ac = gamma(i) * gamma(j) + gamma(j) * gamma(i);
            CHECK(ac == scale(Matrix::identity(kSpinorDim), Scalar(i == j ? -2 : 0)));
        }
}

TEST_CASE("M_k are skew with the chosen sign and square to -1") {
    for (int k = 1; k <= 7; ++k) {
        Matrix m = rep_matrix(k);
        CHECK(m.transpose() == scale(m, -1));
        CHECK(m * m == scale(Matrix::identity(8), -1));
    }
    Matrix e = skew_unit(1, 2);
    CHECK(e(0, 1) == Scalar(-1));
    CHECK(e(1, 0) == Scalar(1));
}

TEST_CASE("blade action tables agree with gamma products") {
    std::mt19937_64 rng(12);
    for (int k = 0; k <= 8; ++k)
        for (Blade b : blades_of_grade(k)) {
            Matrix m = blade_matrix(b);
            const SignedPerm& sp = blade_action(b);
            for (int r = 0; r < kSpinorDim; ++r)
                for (int c = 0; c < kSpinorDim; ++c) {
                    Scalar want = c == sp.src[r] ? Scalar(sp.sign[r]) : Scalar(0);
                    CHECK(m(r, c) == want);
                }
        }
    for (int n = 0; n < 10; ++n) {
        MultiVector a = oracle::random_form(rng, static_cast<int>(rng() % 9));
        CHECK(clifford_matrix(a) == naive_matrix(a));
    }
}

TEST_CASE("Phi . Psi_0 = -14 Psi_0 and the sign convention matters") {
    Spinor want = scaled(psi0(), -14);
    CHECK(psi0() == sub(spinor_basis(9), spinor_basis(10)));
    CHECK(naive_matrix(forms::Phi()) * psi0() == want);
    CHECK(clifford_apply(forms::Phi(), psi0()) == want);
    CHECK_FALSE(naive_matrix(forms::Phi(), +1) * psi0() == want);
}

TEST_CASE("spectrum of Phi on Delta_8") {
    Matrix m = clifford_matrix(forms::Phi());
    CHECK(eigenspace_dim(m, -14) == 1);
    CHECK(eigenspace_dim(m, 2) == 7);
    CHECK(eigenspace_dim(m, 0) == 8);
}

TEST_CASE("X . w = X ^ w - X _| w") {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 20; ++n) {
        int k = static_cast<int>(rng() % 8);
        MultiVector w = oracle::random_form(rng, k);
        MultiVector x = oracle::random_form(rng, 1);
        MultiVector rhs = oracle::wedge(x, w);
        for (int i = 1; i <= 8; ++i) rhs -= x.coeff(make_blade({i})) * oracle::contract(i, w);
        CHECK(clifford_matrix(x) * clifford_matrix(w) == clifford_matrix(rhs));
    }
}

TEST_CASE("T^2 is the square of the action") {
    std::mt19937_64 rng(6);
    MultiVector t = oracle::random_form(rng, 3);
    for (int k = 1; k <= 16; ++k) {
        Spinor psi = spinor_basis(k);
        CHECK(t_squared(t, psi) == clifford_apply(t, clifford_apply(t, psi)));
    }
}
