#pragma once
// Homogeneous quadratic conditions in a handful of real parameters, and an exact decider
// for "is there a real p with q_k(p) = 0 for all k that avoids these linear subspaces?".
//
// Quadratic forms are symmetric n x n matrices, q(p) = p^T Q p.  In coefficient form a
// vector indexed by monomials p_i p_j (i <= j) is used; the two are converted here.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spin7/linalg.hpp"

namespace spin7 {

std::vector<std::pair<std::size_t, std::size_t>> monomials(std::size_t n);
Matrix quad_from_coeffs(const Vec& c, std::size_t n);
Vec coeffs_from_quad(const Matrix& q);
Scalar eval_quad(const Matrix& q, const std::vector<Scalar>& p);
// monomial coefficients of a function known to be a quadratic form, by polarization
Vec quad_coeffs_of(const std::function<Scalar(const std::vector<Scalar>&)>& f, std::size_t n);
Scalar eval_linear(const Vec& l, const std::vector<Scalar>& p);
// "3*a1^2 - 2*a1*b1"; "0" for the zero form
std::string quad_str(const Vec& c, const std::vector<std::string>& names);
std::string linear_str(const Vec& l, const std::vector<std::string>& names);

struct FeasibilityProblem {
    std::size_t n = 0;
    std::vector<Matrix> forms;               // q(p) = 0
    std::vector<Vec> equations;              // l(p) = 0
    std::vector<std::vector<Vec>> avoid;     // p outside {l = 0 for all l in the list}
    std::vector<Vec> positive;               // l(p) > 0
};

struct Feasibility {
    enum class Status { Feasible, Infeasible, Undecided };
    Status status = Status::Undecided;
    std::optional<std::vector<Scalar>> witness;  // may be absent for Feasible (existence only)
    std::string note;
};
std::string to_string(Feasibility::Status s);

// p = 0 is always excluded.  The problem is homogeneous, so one positivity condition
// is handled by a sign flip of the witness; more than one is only checked on the witness.
Feasibility decide(const FeasibilityProblem& prob);

}  // namespace spin7
