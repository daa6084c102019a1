#pragma once
// Algebraic curvature tensors with values in a subalgebra h < spin(7).
//
// R(X,Y,Z,V) = sum_ab c_ab h_a(X,Y) h_b(Z,V), where a 2-form w is read as the bilinear
// form w(e_i, e_j) = w_ij (i < j), antisymmetric.  Ric(X,Y) = sum_i R(e_i, X, Y, e_i).
// The characteristic curvature satisfies the Bianchi identity with torsion,
//   cyclic_{X,Y,Z} R(X,Y,Z,V) = sigma^T(X,Y,Z,V),
// which reduces to the ordinary one when sigma^T = 0.

#include <optional>
#include <string>
#include <vector>

#include "spin7/liealg.hpp"
#include "spin7/structure.hpp"

namespace spin7 {

Scalar form_value(const LieElement& w, int x, int y);  // 1-based
// 8x8 antisymmetric matrix of values w(e_i, e_j)
Matrix form_values(const LieElement& w);

struct CurvatureTensor {
    Subalgebra h;
    Matrix coeff;  // dim h x dim h

    // M[p][q] over blades_of_grade(2): R = sum M_pq e_p (x) e_q
    Matrix lambda2() const;
    Scalar value(int x, int y, int z, int v) const;
    bool is_zero() const { return coeff.is_zero(); }
};
CurvatureTensor zero_tensor(const Subalgebra& h);

// Triples x < y < z with every v: 56 * 8 rows.
inline constexpr std::size_t kBianchiRows = 448;
Vec cyclic_sums(const CurvatureTensor& r);
Vec four_form_values(const MultiVector& s);  // s(x,y,z,v) in the same row order

bool is_symmetric(const CurvatureTensor& r);
bool satisfies_bianchi(const CurvatureTensor& r);
bool satisfies_torsion_bianchi(const CurvatureTensor& r, const MultiVector& t);
bool range_in(const CurvatureTensor& r, const Subalgebra& g);
bool invariance_check(const CurvatureTensor& r, const Subalgebra& g);
Matrix ricci_of(const CurvatureTensor& r);

// Unknowns of a symmetric d x d coefficient matrix: (a, b), a <= b, lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> sym_pairs(std::size_t d);
Matrix coeff_from_sym(const Vec& v, std::size_t d);
// 448 x sym_pairs(dim h): column (a,b) is the cyclic sum of the tensor c_ab = c_ba = 1
Matrix bianchi_matrix_sym(const Subalgebra& h);
// 448 x (28 dim h): R = sum_a w_a (x) h_a with arbitrary 2-forms w_a
Matrix bianchi_matrix_full(const Subalgebra& h);

struct BianchiSpace {
    std::size_t dim = 0;              // Lambda^2 (x) h with the Bianchi identity
    std::size_t dim_symmetric = 0;    // additionally symmetric on Lambda^2
    std::vector<CurvatureTensor> symmetric_basis;
};
BianchiSpace bianchi_space(const Subalgebra& h);

// Symmetric R with values in h and b(R) = sigma^T; nullopt if none, throws if not unique.
std::optional<CurvatureTensor> solve_torsion_bianchi(const Subalgebra& h, const MultiVector& t);

// Closed-form Ricci constants of the torsion families.
struct RicciShape {
    Scalar lambda, kappa;
    Matrix diag;
};
RicciShape closed_form_ricci(const std::string& family, const std::vector<Scalar>& p);

// case ids 5.1.1 5.1.2 5.2.1 5.2.2 5.3.1
struct RcCase {
    std::string id;
    std::vector<std::string> families;
    std::string hol;
};
const std::vector<RcCase>& rc_cases();
CurvatureTensor build_rc(const std::string& case_id, const std::string& family, const std::vector<Scalar>& p);

// Linear conditions on r for sum_k r_k parts_k to take values in g and be g-invariant.
std::vector<Vec> curvature_constraints(const std::vector<Matrix>& parts_lambda2, const Subalgebra& g);

struct InvariantRicciFamily {
    std::size_t operators = 0;  // dim of h-invariant symmetric operators Lambda^2 -> h
    std::vector<Matrix> ricci;  // spanning set of their Ricci tensors, reduced
};
InvariantRicciFamily invariant_ricci_family(const Subalgebra& h);

}  // namespace spin7
