#pragma once
// The classification recipe: for iso(T) = g and hol = h <= g, collect every polynomial
// condition the torsion parameters must satisfy and decide exactly whether a nonzero
// admissible torsion survives.  Also the algebraic reconstructions (Lie brackets on
// h + R^8, product splittings, the Hermitian description of Phi).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spin7/curvature.hpp"
#include "spin7/quadric.hpp"
#include "spin7/structure.hpp"

namespace spin7 {

// A torsion family restricted to the parameters where its isotropy is `iso`.
struct IsotropyCase {
    std::string family;
    std::string iso;
    std::string label;
    std::vector<Vec> equations;
    std::vector<Vec> nonzero;
    std::vector<Vec> positive;
    std::vector<std::vector<Vec>> exclusions;
};
const std::vector<IsotropyCase>& isotropy_cases();
std::vector<IsotropyCase> isotropy_cases_for(const std::string& iso);

struct HolCandidate {
    std::string key;         // "t1[k=0]", "so3diag", ...
    std::string table_name;  // name used in the table: tori collapse to t1 / t1tilde
    Subalgebra h;
};
HolCandidate hol_candidate(const std::string& key);
const std::vector<std::string>& table_isotropies();
std::vector<std::string> hol_candidate_keys(const std::string& iso);

struct CaseAttempt {
    std::string family;
    std::string case_label;
    std::vector<std::string> params;
    std::vector<Vec> conditions;  // monomial coefficients, reduced
    Feasibility feasibility;
    bool verified = false;        // witness re-checked through the full pipeline
    std::string iso_at_witness;
    Matrix ricci_at_witness;
    std::vector<std::string> condition_strings() const;
};

struct ClassificationRow {
    std::string iso;
    std::string hol;         // candidate key
    std::string table_name;
    std::size_t k_dim = 0;   // dim K(hol)
    bool k_nontrivial() const { return k_dim > 0; }
    std::vector<CaseAttempt> attempts;
    bool admissible = false;
};

CaseAttempt run_case(const IsotropyCase& c, const HolCandidate& h);
ClassificationRow run_recipe(const std::string& iso, const std::string& hol_key);
std::vector<ClassificationRow> admissibility_table(Exec exec = Exec::Parallel);

// iso -> (hol with K != 0, hol with K = 0), admissible table names only
struct TableEntry {
    std::vector<std::string> k_nonzero, k_zero;
    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};
std::map<std::string, TableEntry> summarize(const std::vector<ClassificationRow>& rows);

// dim of span(generators) meeting the tangent space of the inv(Lambda^3)_g orbit at T
struct NormalizerCheck {
    std::size_t normalizer_dim = 0;
    std::size_t orbit_dim = 0;
    std::size_t overlap = 0;
};
NormalizerCheck normalizer_transversality(const TorsionFamily& f, const std::vector<Scalar>& p);

// h + R^k (k = vectors.size()) with
//   [A + X, B + Y] = ([A,B] - R(X,Y)) + (A.Y - B.X - T(X,Y)).
struct ReconstructedAlgebra {
    std::vector<std::string> labels;
    StructureConstants sc;
    bool antisymmetric = false;
    bool jacobi = false;
    KillingForm killing;
};
ReconstructedAlgebra reconstruct_lie_algebra(const MultiVector& t, const CurvatureTensor& r,
                                             const std::vector<int>& vectors = {1, 2, 3, 4, 5, 6, 7, 8});

// alpha_+- = (Z1 - 2 Z2) ^ e7 + D +- sqrt3 Z3 ^ e8 and the su(3) basis printed with it
MultiVector example2_alpha(int sign);
std::vector<LieElement> example2_su3_basis(int sign);
// c in {1, -1} such that e_i -> c b_i is a Lie algebra homomorphism, if any.  With our
// sign for E the reconstructed bracket comes out as the opposite algebra, so expect -1.
std::optional<int> basis_match(const StructureConstants& sc, const std::vector<LieElement>& b);

struct SplitResult {
    bool holds = false;
    MultiVector t_plus, t_minus;
};
// plus/minus: 1-forms spanning orthogonal complementary subspaces
SplitResult splitting_check(const MultiVector& t, const std::vector<MultiVector>& plus,
                            const std::vector<MultiVector>& minus);

// Which (r1, r2) survive when the printed curvature families are forced to take values
// in, and be invariant under, a smaller holonomy algebra.  case_id: 5.1.1 or 5.3.1.
struct RcConstraintRow {
    std::string hol;          // candidate key
    std::vector<Vec> conditions;  // linear in (r1, r2), reduced
    std::string text() const;
};
std::vector<RcConstraintRow> rc_constraint_table(const std::string& case_id);

// r1 = r2 = 0 on family 5.3-I, by elimination: 5 lambda - 3 kappa = 7 b1 (a2 + b1)
struct NoGo {
    Vec r1, r2;              // quadratic forms in (a1, a2, b1)
    Vec combination;         // 5 lambda - 3 kappa
    Feasibility with_exclusions, without_exclusions;
};
NoGo no_go_531();

struct HermitianPieces {
    MultiVector half_omega2, re_f, phi;
};
HermitianPieces phi_from_hermitian();

}  // namespace spin7
