#include "doctest.h"
#include "spin7/quadric.hpp"

using namespace spin7;
using S = Feasibility::Status;

namespace {
Matrix q2(long xx, long xy, long yy) { return quad_from_coeffs({Scalar(xx), Scalar(xy), Scalar(yy)}, 2); }

bool satisfies(const FeasibilityProblem& p, const std::vector<Scalar>& w) {
    bool nonzero = false;
    for (const auto& x : w) nonzero = nonzero || !x.is_zero();
    if (!nonzero) return false;
    for (const auto& q : p.forms)
        if (!eval_quad(q, w).is_zero()) return false;
    for (const auto& l : p.equations)
        if (!eval_linear(l, w).is_zero()) return false;
    for (const auto& l : p.positive)
        if (eval_linear(l, w).sign() <= 0) return false;
    for (const auto& locus : p.avoid) {
        bool inside = true;
        for (const auto& l : locus) inside = inside && eval_linear(l, w).is_zero();
        if (inside) return false;
    }
    return true;
}

void check_witness(const FeasibilityProblem& p, const Feasibility& f) {
    if (f.witness) CHECK(satisfies(p, *f.witness));
}
}  // namespace

TEST_CASE("monomial coefficients and symmetric matrices") {
    CHECK(monomials(3).size() == 6);
    Vec c = {1, -2, 3, 4, 0, -1};  // x^2 - 2xy + 3xz + 4y^2 - z^2
    Matrix q = quad_from_coeffs(c, 3);
    CHECK(q == q.transpose());
    CHECK(coeffs_from_quad(q) == c);
    std::vector<Scalar> p = {2, -1, Scalar(1, 2)};
    Scalar direct = Scalar(4) + Scalar(4) + Scalar(3) + Scalar(4) - Scalar(1, 4);
    CHECK(eval_quad(q, p) == direct);
    auto f = [&](const std::vector<Scalar>& x) { return eval_quad(q, x); };
    CHECK(quad_coeffs_of(f, 3) == c);
    CHECK(quad_str(c, {"a", "b", "c"}) == "a^2 - 2*a*b + 3*a*c + 4*b^2 - c^2");
    CHECK(quad_str(Vec(6), {"a", "b", "c"}) == "0");
    CHECK(linear_str({Scalar(1), Scalar(0), Scalar(-3, 2)}, {"a", "b", "c"}) == "a - 3/2*c");
}

TEST_CASE("definite forms have no nonzero zero") {
    FeasibilityProblem p{2, {q2(1, 0, 1)}, {}, {}, {}};
    CHECK(decide(p).status == S::Infeasible);
    FeasibilityProblem p3{3, {quad_from_coeffs({1, 1, 0, 1, 0, 2}, 3)}, {}, {}, {}};
    CHECK(decide(p3).status == S::Infeasible);
}

TEST_CASE("indefinite forms: rational witnesses and avoided loci") {
    FeasibilityProblem p{2, {q2(1, 0, -1)}, {}, {}, {}};
    Feasibility f = decide(p);
    CHECK(f.status == S::Feasible);
    check_witness(p, f);
    // x = y excluded leaves x = -y
    p.avoid = {{{Scalar(1), Scalar(-1)}}};
    f = decide(p);
    CHECK(f.status == S::Feasible);
    REQUIRE(f.witness.has_value());
    CHECK((*f.witness)[0] == -(*f.witness)[1]);
    // excluding both lines kills it
    p.avoid.push_back({{Scalar(1), Scalar(1)}});
    CHECK(decide(p).status == S::Infeasible);
}

TEST_CASE("xy = 0 away from both axes is impossible") {
    FeasibilityProblem p{2, {q2(0, 1, 0)}, {}, {{{Scalar(1), Scalar(0)}}, {{Scalar(0), Scalar(1)}}}, {}};
    CHECK(decide(p).status == S::Infeasible);
}

TEST_CASE("irrational zeros are still found in the field or reported") {
    FeasibilityProblem p{2, {q2(1, 0, -3)}, {}, {}, {}};  // x = sqrt3 y
    Feasibility f = decide(p);
    CHECK(f.status == S::Feasible);
    check_witness(p, f);
    FeasibilityProblem p2{2, {q2(1, 0, -2)}, {}, {}, {}};  // sqrt2 is not in the field
    Feasibility f2 = decide(p2);
    CHECK(f2.status != S::Infeasible);
    check_witness(p2, f2);
}

TEST_CASE("linear equations and a positivity condition") {
    // x^2 - yz = 0, x - y = 0, z > 0  ->  (1, 1, 1)
    FeasibilityProblem p{3, {quad_from_coeffs({1, 0, 0, 0, -1, 0}, 3)}, {{Scalar(1), Scalar(-1), Scalar(0)}}, {}, {{Scalar(0), Scalar(0), Scalar(1)}}};
    Feasibility f = decide(p);
    CHECK(f.status == S::Feasible);
    REQUIRE(f.witness.has_value());
    CHECK(satisfies(p, *f.witness));
    // forcing z = 0 too leaves only x = y = z = 0 ... plus y free: x = y = 0 forces y = 0
    p.equations.push_back({Scalar(0), Scalar(0), Scalar(1)});
    CHECK(decide(p).status == S::Infeasible);
}

TEST_CASE("several simultaneous forms") {
    // a^2 = b^2, b^2 = c^2, a != b locus avoided... solutions (1, -1, 1) etc.
    FeasibilityProblem p{3, {quad_from_coeffs({1, 0, 0, -1, 0, 0}, 3), quad_from_coeffs({0, 0, 0, 1, 0, -1}, 3)}, {}, {}, {}};
    Feasibility f = decide(p);
    CHECK(f.status == S::Feasible);
    check_witness(p, f);
    CHECK(to_string(S::Infeasible) == "infeasible");
}
