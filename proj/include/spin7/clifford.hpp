#pragma once
// Real 16-dimensional spinor module Delta_8 and the Clifford action of forms.
//
// Convention (checked by the test suite): the skew matrix E_ij inside M_1..M_7 carries
// -1 at (i,j) and +1 at (j,i).  With it e_i e_j + e_j e_i = -2 delta_ij and
// Phi . Psi_0 = -14 Psi_0.  The opposite sign gives Phi . Psi_0 = 0.

#include <array>

#include "spin7/exterior.hpp"
#include "spin7/linalg.hpp"

namespace spin7 {

inline constexpr int kSpinorDim = 16;
using Spinor = Vec;

// Psi_k, k = 1..16
Spinor spinor_basis(int k);
// Psi_0 = Psi_9 - Psi_10
const Spinor& psi0();

// 8x8 matrices M_1..M_7 written with the E_ij convention above; E(i,j, s) lets the
// tests build the alternative (s = +1) for comparison.
Matrix skew_unit(int i, int j, int sign_at_ij = -1);
Matrix rep_matrix(int k, int sign_at_ij = -1);
// gamma_1..gamma_8 as 16x16 matrices
Matrix gamma(int i, int sign_at_ij = -1);

// Each basis blade acts as a signed permutation of the Psi basis.
struct SignedPerm {
    std::array<std::uint8_t, kSpinorDim> src{};
    std::array<std::int8_t, kSpinorDim> sign{};
};
const SignedPerm& blade_action(Blade b);

// e_{i1..ik} acts as gamma_{i1} ... gamma_{ik} (ascending), no 1/k!
Spinor clifford_apply(const MultiVector& a, const Spinor& psi);
Matrix clifford_matrix(const MultiVector& a);
Spinor t_squared(const MultiVector& t, const Spinor& psi);

Spinor add(const Spinor& a, const Spinor& b);
Spinor sub(const Spinor& a, const Spinor& b);
Spinor scaled(const Spinor& a, const Scalar& s);

}  // namespace spin7
