#pragma once
// Spin(7)-structure algebra on R^8: the Lambda^3 = Lambda^3_8 + Lambda^3_48 split, Lee
// form, Fernandez classes, scalar curvatures, the torsion families and the Ricci
// system  -4 Ric(X).Psi = (T^2 - 7|T_8|^2) X.Psi  over invariant spinors.
//
// Norms are orthonormal-basis norms (|e_123|^2 = 1, no 1/k!).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spin7/clifford.hpp"
#include "spin7/exterior.hpp"
#include "spin7/liealg.hpp"
#include "spin7/linalg.hpp"

namespace spin7 {

struct Split {
    MultiVector t8, t48;
};
Split project_8_48(const MultiVector& t);
Scalar norm2_t8(const MultiVector& t);
// polarization of |T_8|^2
Scalar inner_t8(const MultiVector& a, const MultiVector& b);

MultiVector lee_form(const MultiVector& t);  // (6/7) *(Phi ^ T)

enum class WClass { W0, W1, W2, W };
WClass w_class(const MultiVector& t);
std::string to_string(WClass w);

struct ScalPair {
    Scalar g, c;
};
ScalPair scal_pair(const MultiVector& t);

// Linear sign/zero condition on a parameter vector.
struct LinearCondition {
    enum class Rel { Zero, NonZero, Positive };
    Vec coeffs;
    Rel rel;
    bool holds(const std::vector<Scalar>& p) const;
};

struct TorsionFamily {
    std::string id;
    std::string iso;  // isotropy algebra of a generic member
    std::vector<std::string> params;
    std::vector<MultiVector> generators;
    std::vector<LinearCondition> constraints;
    std::vector<std::vector<Vec>> exclusions;  // each locus: list of linear equations

    MultiVector torsion(const std::vector<Scalar>& p) const;
    // missing names read as 0; unknown names throw
    std::vector<Scalar> values(const std::map<std::string, Scalar>& named) const;
    bool in_exclusion(const std::vector<Scalar>& p) const;
    bool admissible(const std::vector<Scalar>& p) const;
};
const std::vector<TorsionFamily>& torsion_families();
const TorsionFamily& torsion_family(const std::string& id);

// T^2 - 7|T_8|^2 as a 16x16 matrix, and its polarization
// op(a, b) = ab + ba - 14 <a_8, b_8>, so op(T) = sum p_i^2 op(G_i) + sum_{i<j} p_i p_j op(G_i, G_j).
Matrix torsion_operator(const MultiVector& t);
Matrix torsion_operator(const MultiVector& a, const MultiVector& b);

// Unknowns of a symmetric 8x8 matrix: (i, j), i <= j, lexicographic.
inline constexpr std::size_t kSymUnknowns = 36;
std::size_t sym_index(std::size_t i, std::size_t j);
Matrix sym_from_vec(const Vec& v);

// The Ricci system for a list of spinors.  Row blocks: spinor, then X = e_1..e_8,
// then the 16 spinor components.  The right-hand side of an operator `op` is
// (op X Psi) in the same order; the precheck rows are (op Psi).
struct RicciSystem {
    std::vector<Spinor> spinors;
    Matrix lhs;  // rows x 36
    Vec rhs(const Matrix& op) const;
    Vec precheck(const Matrix& op) const;
};
RicciSystem ricci_system(const std::vector<Spinor>& spinors);

struct RicciResult {
    bool consistent = false;
    std::string reason;  // empty when consistent
    Matrix ric;          // 8x8, valid when consistent
    std::size_t free_dims = 0;
    bool is_diagonal() const;
};
RicciResult ricci_solver(const MultiVector& t, const Subalgebra& h);
RicciResult ricci_solver(const MultiVector& t, const std::vector<Spinor>& spinors);

// T_imn T_jmn summed over all m, n
Matrix torsion_contraction(const MultiVector& t);
Matrix ricci_g_relation(const MultiVector& t, const Matrix& ric_c);

struct SigmaReport {
    bool holds_psi0 = false;
    std::vector<int> failing_x;             // basis vectors e_k where the Psi_0 identity fails
    std::vector<int> holding_basis_spinors; // k in 1..16 where it holds for every X
};
// -4 (X _| sigma^T).Psi = (T^2 - 7|T_8|^2).X.Psi
SigmaReport sigma_identity_check(const MultiVector& t);

}  // namespace spin7
