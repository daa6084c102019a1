#pragma once
// spin(7) inside so(8) = Lambda^2, its subalgebra catalog and invariant theory.
//
// A 2-form x = sum x_ij e_ij acts on vectors through 2*E(x), where E(e_ij) has -1 at
// (i,j) and +1 at (j,i) (same convention as the spinor module).  With this scaling
//   x.(v.psi) - v.(x.psi) = (rho(x) v).psi
// holds exactly for the unscaled Clifford action of x on spinors.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spin7/clifford.hpp"
#include "spin7/exterior.hpp"
#include "spin7/linalg.hpp"

namespace spin7 {

using LieElement = MultiVector;  // homogeneous of grade 2

struct Subalgebra {
    std::string name;
    std::vector<LieElement> basis;
    // normalization weights: sum w_i b_i (x) b_i is the invariant projection tensor
    std::vector<Scalar> weights;
    std::map<std::string, Scalar> params;

    std::size_t dim() const { return basis.size(); }
    Scalar weight(std::size_t i) const { return weights.empty() ? Scalar(1) : weights[i]; }
};

Matrix skew_of(const LieElement& x);        // E(x), 8x8
LieElement form_of_skew(const Matrix& m);   // inverse of skew_of on skew matrices
Matrix rho(const LieElement& x);            // 2 E(x)
LieElement bracket(const LieElement& x, const LieElement& y);

MultiVector act_on_form(const LieElement& x, const MultiVector& a);
Spinor act_on_spinor(const LieElement& x, const Spinor& psi);
// matrix of a -> act_on_form(x, a) on blades_of_grade(k)
Matrix action_matrix(const LieElement& x, int k);

bool in_spin7_equations(const LieElement& x);
bool in_spin7_clifford(const LieElement& x);

namespace gens {
LieElement P(int i);  // 1..8
LieElement Q(int i);  // 1..6
LieElement S(int i);  // 1..7
}  // namespace gens

// P1..P8, Q1..Q6, S1..S7
const std::vector<LieElement>& spin7_basis();

// names: g2 su3 su2+su2c u2 R+su2c so3 su2 su2c so3ir R+su2 t2 t2tilde zero spin7
//        so3diag (the diagonal so(3) inside su2+su2c)
//        t1 and t1tilde with params {"k","l"}
Subalgebra catalog(const std::string& name, const std::map<std::string, Scalar>& params = {});
const std::vector<std::string>& nonabelian_catalog_names();  // the ten non-Abelian entries
std::string pretty_name(const std::string& name);

bool bracket_closed(const Subalgebra& g);
bool contained_in(const Subalgebra& h, const Subalgebra& g);
bool same_span(const Subalgebra& a, const Subalgebra& b);

enum class Space { Forms, Spinors };
// exact kernel of the stacked action maps; forms basis as MultiVectors of grade k
std::vector<MultiVector> invariant_forms(const Subalgebra& g, int k);
std::vector<Spinor> invariant_spinors(const Subalgebra& g);

Subalgebra iso_algebra(const MultiVector& t);
Subalgebra normalizer(const Subalgebra& g);

struct StructureConstants {
    std::size_t n = 0;
    std::vector<Scalar> c;  // c[(i*n + j)*n + k] : [b_i, b_j] = sum_k c_ijk b_k
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};
std::optional<StructureConstants> structure_constants(const Subalgebra& g);
// max violation-free check: true iff antisymmetric and Jacobi holds exactly
bool is_antisymmetric(const StructureConstants& sc);
bool satisfies_jacobi(const StructureConstants& sc);

struct KillingForm {
    Matrix k;
    bool degenerate = true;
    int positive = 0, negative = 0;  // signature counts
};
KillingForm killing_form(const StructureConstants& sc);
KillingForm killing_form(const Subalgebra& g);  // throws if not bracket-closed

// Catalog name whose span equals g's span, or a fingerprint match, or "unnamed".
struct Identification {
    std::string name;
    std::string matched_by;  // "span", "invariants", "none"
};
Identification identify(const Subalgebra& g);

}  // namespace spin7
