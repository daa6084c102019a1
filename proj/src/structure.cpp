#include "spin7/structure.hpp"

#include <stdexcept>

namespace spin7 {

namespace {

// *(e_i ^ Phi), i = 1..8: a basis of Lambda^3_8
const std::vector<MultiVector>& lambda38_basis() {
    static const auto b = [] {
        std::vector<MultiVector> v;
        for (int i = 1; i <= 8; ++i) v.push_back(hodge(wedge(forms::e(i), forms::Phi())));
        return v;
    }();
    return b;
}

const Matrix& lambda38_gram() {
    static const auto g = [] {
        const auto& b = lambda38_basis();
        Matrix m(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) = inner(b[i], b[j]);
        return m;
    }();
    return g;
}

}  // namespace

Split project_8_48(const MultiVector& t) {
    require_grade(t, 3, "project_8_48");
    const auto& b = lambda38_basis();
    Matrix rhs(8, 1);
    for (std::size_t i = 0; i < 8; ++i) rhs(i, 0) = inner(b[i], t);
    AugmentedSolve s = solve_augmented(lambda38_gram(), rhs, Exec::Serial);
    Split out;
    for (std::size_t i = 0; i < 8; ++i)
        if (!s.particular(i, 0).is_zero()) out.t8 += s.particular(i, 0) * b[i];
    out.t48 = t - out.t8;
    return out;
}

Scalar norm2_t8(const MultiVector& t) { return norm2(project_8_48(t).t8); }

Scalar inner_t8(const MultiVector& a, const MultiVector& b) {
    return inner(project_8_48(a).t8, project_8_48(b).t8);
}

MultiVector lee_form(const MultiVector& t) {
    require_grade(t, 3, "lee_form");
    return Scalar(6, 7) * hodge(wedge(forms::Phi(), t));
}

WClass w_class(const MultiVector& t) {
    if (t.is_zero()) return WClass::W0;
    Split s = project_8_48(t);
    if (s.t48.is_zero()) return WClass::W2;
    if (s.t8.is_zero()) return WClass::W1;
    return WClass::W;
}

std::string to_string(WClass w) {
    switch (w) {
        case WClass::W0: return "W0";
        case WClass::W1: return "W1";
        case WClass::W2: return "W2";
        default: return "W";
    }
}

ScalPair scal_pair(const MultiVector& t) {
    Split s = project_8_48(t);
    Scalar n8 = norm2(s.t8), n48 = norm2(s.t48);
    ScalPair p{Scalar(27, 2) * n8 - Scalar(1, 2) * n48, Scalar(12) * n8 - Scalar(2) * n48};
    if (!(p.c == p.g - Scalar(3, 2) * norm2(t)))
        throw std::logic_error("scal_pair: Scal^c != Scal^g - 3/2 |T|^2");
    return p;
}

bool LinearCondition::holds(const std::vector<Scalar>& p) const {
    Scalar v = dot(coeffs, p);
    switch (rel) {
        case Rel::Zero: return v.is_zero();
        case Rel::NonZero: return !v.is_zero();
        default: return v.sign() > 0;
    }
}

MultiVector TorsionFamily::torsion(const std::vector<Scalar>& p) const {
    if (p.size() != generators.size()) throw std::invalid_argument("family " + id + ": wrong parameter count");
    MultiVector t;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) t += p[i] * generators[i];
    return t;
}

std::vector<Scalar> TorsionFamily::values(const std::map<std::string, Scalar>& named) const {
    std::vector<Scalar> p(params.size());
    for (const auto& [k, v] : named) {
        std::size_t i = 0;
        while (i < params.size() && params[i] != k) ++i;
        if (i == params.size()) throw std::invalid_argument("family " + id + " has no parameter '" + k + "'");
        p[i] = v;
    }
    return p;
}

bool TorsionFamily::in_exclusion(const std::vector<Scalar>& p) const {
    for (const auto& locus : exclusions) {
        bool inside = true;
        for (const auto& eq : locus) inside = inside && dot(eq, p).is_zero();
        if (inside) return true;
    }
    return false;
}

bool TorsionFamily::admissible(const std::vector<Scalar>& p) const {
    for (const auto& c : constraints)
        if (!c.holds(p)) return false;
    return !in_exclusion(p);
}

namespace {
Vec v3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
using Rel = LinearCondition::Rel;
}  // namespace

const std::vector<TorsionFamily>& torsion_families() {
    using namespace forms;
    static const std::vector<TorsionFamily> fams = [] {
        std::vector<TorsionFamily> f;
        const MultiVector Z12 = Z1() - Scalar(2) * Z2();
        f.push_back({"5.1",
                     "R+su2c",
                     {"a1", "b1", "b2"},
                     {wedge(Z(), e(7)) + D(), wedge(Z1() - Scalar(6) * Z2(), e(7)) + D(), wedge(Z3(), e(8))},
                     {},
                     {}});
        f.push_back({"5.2-I", "su3", {"a1"}, {wedge(Z(), e(7))}, {{Vec{Scalar(1)}, Rel::Positive}}, {}});
        f.push_back({"5.2-II",
                     "so3",
                     {"a1", "a2", "b1"},
                     {Dbar(), Scalar(2) * D1() + Scalar(5) * D2() + Scalar(3) * D5(), D1() - D2() - Scalar(2) * D5()},
                     {{v3(0, 0, 1), Rel::Positive}},
                     {}});
        // the su2+su2c and su3 loci: b1 = -a2 and 3 b1 = 4 a2 (with a1 = 0)
        f.push_back({"5.3-I",
                     "u2",
                     {"a1", "a2", "b1"},
                     {wedge(Z1() + Scalar(5) * Z2(), e(8)), wedge(Z1() + Scalar(5) * Z2(), e(7)), wedge(Z12, e(7))},
                     {{v3(0, 0, 1), Rel::Positive}},
                     {{v3(1, 0, 0), v3(0, 1, 1)}, {v3(1, 0, 0), v3(0, -4, 3)}}});
        f.push_back({"5.3-II",
                     "u2",
                     {"a1", "a2", "b1"},
                     {wedge(Z12, e(8)) + Scalar(7, 4) * Dbar(), wedge(Z12, e(7)) + Scalar(7, 4) * D(), wedge(Z12, e(7))},
                     {{v3(0, 0, 1), Rel::Positive}},
                     {{v3(1, 0, 0), v3(0, -3, 4)}, {v3(1, 0, 0), v3(0, 1, 1)}}});
        f.push_back({"5.4", "R+su2", {"b1"}, {D3() - D4()}, {{Vec{Scalar(1)}, Rel::Positive}}, {}});
        return f;
    }();
    return fams;
}

const TorsionFamily& torsion_family(const std::string& id) {
    for (const auto& f : torsion_families())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown torsion family '" + id + "'");
}

Matrix torsion_operator(const MultiVector& t) {
    Matrix m = clifford_matrix(t);
    return m * m - scale(Matrix::identity(16), Scalar(7) * norm2_t8(t));
}

Matrix torsion_operator(const MultiVector& a, const MultiVector& b) {
    Matrix ma = clifford_matrix(a), mb = clifford_matrix(b);
    return ma * mb + mb * ma - scale(Matrix::identity(16), Scalar(14) * inner_t8(a, b));
}

std::size_t sym_index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * 8 - i * (i - 1) / 2 + (j - i);
}

Matrix sym_from_vec(const Vec& v) {
    Matrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) = v[sym_index(i, j)];
    return m;
}

RicciSystem ricci_system(const std::vector<Spinor>& spinors) {
    RicciSystem s;
    s.spinors = spinors;
    s.lhs = Matrix(spinors.size() * 8 * 16, kSymUnknowns);
    std::size_t row = 0;
    for (const auto& psi : spinors) {
        std::vector<Spinor> gpsi;
        for (int j = 1; j <= 8; ++j) gpsi.push_back(clifford_apply(forms::e(j), psi));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t c = 0; c < 16; ++c, ++row)
                for (std::size_t j = 0; j < 8; ++j)
                    if (!gpsi[j][c].is_zero()) s.lhs(row, sym_index(i, j)).submul(Scalar(4), gpsi[j][c]);
    }
    return s;
}

Vec RicciSystem::rhs(const Matrix& op) const {
    Vec out;
    out.reserve(spinors.size() * 128);
    for (const auto& psi : spinors)
        for (int i = 1; i <= 8; ++i) {
            Vec v = op * clifford_apply(forms::e(i), psi);
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

Vec RicciSystem::precheck(const Matrix& op) const {
    Vec out;
    for (const auto& psi : spinors) {
        Vec v = op * psi;
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

bool RicciResult::is_diagonal() const {
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (i != j && !ric(i, j).is_zero()) return false;
    return true;
}

RicciResult ricci_solver(const MultiVector& t, const Subalgebra& h) {
    return ricci_solver(t, invariant_spinors(h));
}

RicciResult ricci_solver(const MultiVector& t, const std::vector<Spinor>& spinors) {
    require_grade(t, 3, "ricci_solver");
    RicciResult r;
    if (spinors.empty()) {
        r.reason = "no invariant spinors";
        return r;
    }
    Matrix op = torsion_operator(t);
    if (!is_zero(RicciSystem{spinors, {}}.precheck(op))) {
        r.reason = "T^2 Psi != 7|T_8|^2 Psi for an invariant spinor";
        return r;
    }
    RicciSystem sys = ricci_system(spinors);
    Vec b = sys.rhs(op);
    Matrix bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    AugmentedSolve s = solve_augmented(sys.lhs, bm);
    if (!s.obstruction.is_zero()) {
        r.reason = "linear system for Ric has no solution";
        return r;
    }
    r.consistent = true;
    r.free_dims = s.kernel.size();
    r.ric = sym_from_vec(s.particular.col(0));
    return r;
}

Matrix torsion_contraction(const MultiVector& t) {
    Matrix m(8, 8);
    std::vector<MultiVector> ci;
    for (int i = 1; i <= 8; ++i) ci.push_back(contract(i, t));
    // sum_{m,n} T_imn T_jmn = 2 <e_i _| T, e_j _| T>
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) = Scalar(2) * inner(ci[i], ci[j]);
    return m;
}

Matrix ricci_g_relation(const MultiVector& t, const Matrix& ric_c) {
    return ric_c + scale(torsion_contraction(t), Scalar(1, 4));
}

SigmaReport sigma_identity_check(const MultiVector& t) {
    require_grade(t, 3, "sigma_identity_check");
    SigmaReport rep;
    MultiVector sigma = sigma_t(t);
    Matrix op = torsion_operator(t);
    std::vector<Matrix> lhs, rhs;
    for (int k = 1; k <= 8; ++k) {
        lhs.push_back(scale(clifford_matrix(contract(k, sigma)), Scalar(-4)));
        rhs.push_back(op * clifford_matrix(forms::e(k)));
    }
    auto holds = [&](int k, const Spinor& psi) { return lhs[static_cast<std::size_t>(k - 1)] * psi == rhs[static_cast<std::size_t>(k - 1)] * psi; };
    for (int k = 1; k <= 8; ++k)
        if (!holds(k, psi0())) rep.failing_x.push_back(k);
    rep.holds_psi0 = rep.failing_x.empty();
    for (int s = 1; s <= 16; ++s) {
        bool all = true;
        for (int k = 1; k <= 8 && all; ++k) all = holds(k, spinor_basis(s));
        if (all) rep.holding_basis_spinors.push_back(s);
    }
    return rep;
}

}  // namespace spin7
