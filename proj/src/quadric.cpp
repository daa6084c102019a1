#include "spin7/quadric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace spin7 {

std::vector<std::pair<std::size_t, std::size_t>> monomials(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
    return out;
}

Matrix quad_from_coeffs(const Vec& c, std::size_t n) {
    Matrix q(n, n);
    auto mons = monomials(n);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        auto [i, j] = mons[k];
        if (i == j) {
            q(i, i) = c[k];
        } else {
            Scalar h = c[k] * Scalar(1, 2);
            q(i, j) = h;
            q(j, i) = h;
        }
    }
    return q;
}

Vec coeffs_from_quad(const Matrix& q) {
    Vec c;
    for (auto [i, j] : monomials(q.rows())) c.push_back(i == j ? q(i, i) : q(i, j) + q(j, i));
    return c;
}

Scalar eval_quad(const Matrix& q, const std::vector<Scalar>& p) { return dot(p, q * p); }
Vec quad_coeffs_of(const std::function<Scalar(const std::vector<Scalar>&)>& f, std::size_t n) {
    auto unit = [n](std::size_t i) {
        std::vector<Scalar> p(n);
        p[i] = 1;
        return p;
    };
    Vec diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = f(unit(i));
    Vec c;
    for (auto [i, j] : monomials(n)) {
        if (i == j) {
            c.push_back(diag[i]);
            continue;
        }
        auto p = unit(i);
        p[j] = 1;
        c.push_back(f(p) - diag[i] - diag[j]);
    }
    return c;
}

Scalar eval_linear(const Vec& l, const std::vector<Scalar>& p) { return dot(l, p); }

namespace {
void append_term(std::string& out, const Scalar& c, const std::string& mono) {
    if (c.is_zero()) return;
    bool neg = c.sign() < 0;
    Scalar a = neg ? -c : c;
    std::string coef;
    if (!a.is_one()) coef = a.is_monomial() ? a.str() : "(" + a.str() + ")";
    if (out.empty())
        out = neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    out += coef.empty() ? mono : coef + "*" + mono;
}
}  // namespace

std::string quad_str(const Vec& c, const std::vector<std::string>& names) {
    std::string out;
    auto mons = monomials(names.size());
    for (std::size_t k = 0; k < mons.size(); ++k) {
        auto [i, j] = mons[k];
        append_term(out, c[k], i == j ? names[i] + "^2" : names[i] + "*" + names[j]);
    }
    return out.empty() ? "0" : out;
}

std::string linear_str(const Vec& l, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < l.size(); ++i) append_term(out, l[i], names[i]);
    return out.empty() ? "0" : out;
}

std::string to_string(Feasibility::Status s) {
    switch (s) {
        case Feasibility::Status::Feasible: return "feasible";
        case Feasibility::Status::Infeasible: return "infeasible";
        default: return "undecided";
    }
}

namespace {

using Status = Feasibility::Status;

// Problem in coordinates y with p = N y.
struct Sub {
    Matrix n;                             // original dim x m
    std::vector<Matrix> forms;            // m x m
    std::vector<std::vector<Vec>> avoid;  // functionals on y
    std::size_t m() const { return n.cols(); }
};

struct Outcome {
    Status status;
    std::optional<Vec> y;  // already mapped back to the original coordinates
    std::string note;
};

Vec apply_t(const Matrix& k, const Vec& l) { return k.transpose() * l; }

Sub restrict_to(const Sub& s, const std::vector<Vec>& kernel_basis) {
    Sub r;
    Matrix k = Matrix::from_columns(kernel_basis, s.m());
    r.n = s.n * k;
    for (const auto& q : s.forms) r.forms.push_back(k.transpose() * q * k);
    for (const auto& sub : s.avoid) {
        std::vector<Vec> eqs;
        for (const auto& l : sub) eqs.push_back(apply_t(k, l));
        r.avoid.push_back(eqs);
    }
    return r;
}

// keep a reduced basis of the span of the forms
void normalize_forms(Sub& s) {
    std::vector<Vec> flat;
    for (const auto& q : s.forms) flat.push_back(coeffs_from_quad(q));
    std::size_t len = monomials(s.m()).size();
    s.forms.clear();
    if (len == 0) return;
    for (const auto& v : span_basis(flat, len)) s.forms.push_back(quad_from_coeffs(v, s.m()));
}

bool avoids(const Sub& s, const Vec& y) {
    for (const auto& sub : s.avoid) {
        bool inside = true;
        for (const auto& l : sub) inside = inside && dot(l, y).is_zero();
        if (inside) return false;
    }
    return true;
}

bool some_subspace_is_everything(const Sub& s) {
    for (const auto& sub : s.avoid) {
        bool all_zero = true;
        for (const auto& l : sub) all_zero = all_zero && is_zero(l);
        if (all_zero) return true;
    }
    return false;
}

// small integer vectors, ordered by max-norm, then the moment curve
std::optional<Vec> free_witness(const Sub& s) {
    const std::size_t m = s.m();
    for (long r = 1; r <= 2; ++r) {
        std::vector<long> c(m, -r);
        while (true) {
            Vec y(m);
            long mx = 0;
            for (std::size_t i = 0; i < m; ++i) {
                y[i] = Scalar(c[i]);
                mx = std::max(mx, std::labs(c[i]));
            }
            if (mx == r && avoids(s, y)) {
                // prefer a vector whose first nonzero entry is positive
                return y;
            }
            std::size_t i = m;
            while (i > 0 && c[i - 1] == r) c[--i] = -r;
            if (i == 0) break;
            ++c[i - 1];
        }
    }
    for (long t = 1; t < 1000; ++t) {
        Vec y(m);
        Scalar pw(1);
        for (std::size_t i = 0; i < m; ++i, pw *= Scalar(t)) y[i] = pw;
        if (avoids(s, y)) return y;
    }
    return std::nullopt;
}

enum class Kind { None, Semidefinite, Factor };
struct Reduction {
    Kind kind = Kind::None;
    std::vector<Vec> kernel;                 // Semidefinite: zero set
    std::vector<std::vector<Vec>> branches;  // Factor: each branch is a kernel basis
};

Reduction try_reduce(const Matrix& q) {
    Reduction r;
    Diagonalization d = diagonalize_symmetric(q);
    int pos = d.positive(), neg = d.negative();
    if (pos + neg == 0) return r;
    const std::size_t m = q.rows();
    if (pos == 0 || neg == 0) {
        r.kind = Kind::Semidefinite;
        r.kernel = d.forms.empty() ? std::vector<Vec>{} : nullspace(Matrix::from_rows(d.forms, m));
        return r;
    }
    if (pos + neg == 2) {
        // a1 u^2 + a2 w^2 = 0  <=>  u = +-s w
        auto s = sqrt_exact(-d.alpha[1] / d.alpha[0]);
        if (!s) return r;
        r.kind = Kind::Factor;
        for (int sg : {1, -1}) {
            Vec l(m);
            for (std::size_t i = 0; i < m; ++i) l[i] = d.forms[0][i] - Scalar(sg) * (*s) * d.forms[1][i];
            r.branches.push_back(nullspace(Matrix::from_rows({l}, m)));
        }
    }
    return r;
}

// det(a + t b) as polynomial coefficients (ascending), by interpolation at t = 0..m
Vec det_polynomial(const Matrix& a, const Matrix& b) {
    const std::size_t m = a.rows();
    auto det = [&](const Matrix& x) {
        Echelon e = rref(x, Exec::Serial);
        if (e.rank() < m) return Scalar();
        // determinant via elimination with pivot tracking
        Matrix w = x;
        Scalar d(1);
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t p = c;
            while (w(p, c).is_zero()) ++p;
            if (p != c) {
                w.swap_rows(p, c);
                d = -d;
            }
            d *= w(c, c);
            Scalar inv = w(c, c).inverse();
            for (std::size_t r = c + 1; r < m; ++r) {
                if (w(r, c).is_zero()) continue;
                Scalar f = w(r, c) * inv;
                for (std::size_t k = c; k < m; ++k) w(r, k) -= f * w(c, k);
            }
        }
        return d;
    };
    Matrix v(m + 1, m + 1);
    Matrix vals(m + 1, 1);
    for (std::size_t i = 0; i <= m; ++i) {
        Scalar t(static_cast<long>(i)), pw(1);
        for (std::size_t j = 0; j <= m; ++j, pw *= t) v(i, j) = pw;
        vals(i, 0) = det(a + scale(b, t));
    }
    return solve_augmented(v, vals, Exec::Serial).particular.col(0);
}

std::vector<Scalar> rational_roots(const Vec& poly) {
    std::vector<Scalar> roots;
    for (const auto& c : poly)
        if (!c.is_rational()) return roots;
    // clear denominators
    mpz_class l = 1;
    for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.coord(0).get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : poly) ic.push_back(mpz_class(c.coord(0) * l));
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    if (ic.size() <= 1) return roots;
    std::size_t lo = 0;
    while (ic[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Scalar());
    auto divisors = [](mpz_class x) {
        std::vector<long> d;
        x = abs(x);
        if (x > 100000) return d;
        long v = x.get_si();
        for (long k = 1; k <= v; ++k)
            if (v % k == 0) d.push_back(k);
        return d;
    };
    auto num = divisors(ic[lo]), den = divisors(ic.back());
    for (long p : num)
        for (long q : den)
            for (long s : {1L, -1L}) {
                Scalar t(s * p, q);
                Scalar val;
                Scalar pw(1);
                for (const auto& c : poly) {
                    val += c * pw;
                    pw *= t;
                }
                if (val.is_zero() && std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
            }
    return roots;
}

std::optional<Vec> isotropic_witness(const Sub& s, const Matrix& q) {
    const std::size_t m = s.m();
    std::vector<Vec> grid;
    std::vector<long> c(m, -2);
    while (true) {
        Vec y(m);
        for (std::size_t i = 0; i < m; ++i) y[i] = Scalar(c[i]);
        if (!is_zero(y)) grid.push_back(y);
        std::size_t i = m;
        while (i > 0 && c[i - 1] == 2) c[--i] = -2;
        if (i == 0) break;
        ++c[i - 1];
    }
    for (const auto& y : grid)
        if (eval_quad(q, y).is_zero() && avoids(s, y)) return y;
    // lines a + t b through the grid
    for (const auto& a : grid) {
        Scalar qa = eval_quad(q, a);
        if (qa.is_zero()) continue;
        for (const auto& b : grid) {
            Scalar qb = eval_quad(q, b);
            if (qb.is_zero()) continue;
            Scalar bab = dot(a, q * b);
            auto r = sqrt_exact(bab * bab - qa * qb);
            if (!r) continue;
            for (int sg : {1, -1}) {
                Scalar t = (-bab + Scalar(sg) * (*r)) / qb;
                Vec y(m);
                for (std::size_t i = 0; i < m; ++i) y[i] = a[i] + t * b[i];
                if (!is_zero(y) && avoids(s, y)) return y;
            }
        }
    }
    return std::nullopt;
}

Outcome solve(Sub s, int depth) {
    if (depth > 32) return {Status::Undecided, std::nullopt, "recursion limit"};
    if (s.m() == 0 || some_subspace_is_everything(s)) return {Status::Infeasible, std::nullopt, ""};
    normalize_forms(s);
    if (s.forms.empty()) {
        auto y = free_witness(s);
        if (y) return {Status::Feasible, s.n * *y, ""};
        return {Status::Undecided, std::nullopt, "no witness avoiding the excluded subspaces"};
    }
    auto act = [&](const Reduction& r) -> std::optional<Outcome> {
        if (r.kind == Kind::Semidefinite) return solve(restrict_to(s, r.kernel), depth + 1);
        if (r.kind == Kind::Factor) {
            Outcome best{Status::Infeasible, std::nullopt, ""};
            for (const auto& br : r.branches) {
                Outcome o = solve(restrict_to(s, br), depth + 1);
                if (o.status == Status::Feasible) return o;
                if (o.status == Status::Undecided) best = o;
            }
            return best;
        }
        return std::nullopt;
    };
    for (const auto& q : s.forms)
        if (auto o = act(try_reduce(q))) return *o;
    for (std::size_t i = 0; i < s.forms.size(); ++i)
        for (std::size_t j = 0; j < s.forms.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : rational_roots(det_polynomial(s.forms[i], s.forms[j]))) {
                Matrix member = s.forms[i] + scale(s.forms[j], t);
                if (auto o = act(try_reduce(member))) return *o;
            }
        }
    if (s.forms.size() == 1) {
        Diagonalization d = diagonalize_symmetric(s.forms[0]);
        int rank = d.positive() + d.negative();
        auto y = isotropic_witness(s, s.forms[0]);
        if (y) y = s.n * *y;
        std::ostringstream note;
        note << "indefinite form of rank " << rank << " >= 3: its real zero cone is Zariski dense in an irreducible quadric";
        return {Status::Feasible, y, y ? "" : note.str()};
    }
    return {Status::Undecided, std::nullopt, "no semidefinite or split member in the pencil"};
}

}  // namespace

Feasibility decide(const FeasibilityProblem& prob) {
    const std::size_t n = prob.n;
    Sub s;
    std::vector<Vec> ker;
    if (prob.equations.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n);
            e[i] = 1;
            ker.push_back(e);
        }
    } else {
        ker = nullspace(Matrix::from_rows(prob.equations, n));
    }
    Sub full;
    full.n = Matrix::identity(n);
    full.forms = prob.forms;
    full.avoid = prob.avoid;
    std::vector<Vec> origin;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        origin.push_back(e);
    }
    full.avoid.push_back(origin);
    for (const auto& l : prob.positive) full.avoid.push_back({l});
    if (ker.empty()) return {Feasibility::Status::Infeasible, std::nullopt, ""};
    s = restrict_to(full, ker);

    Outcome o = solve(s, 0);
    Feasibility f{o.status, std::nullopt, o.note};
    if (o.y) {
        std::vector<Scalar> p = *o.y;
        if (!prob.positive.empty() && eval_linear(prob.positive[0], p).sign() < 0)
            for (auto& x : p) x = -x;
        for (const auto& l : prob.positive)
            if (eval_linear(l, p).sign() <= 0) {
                return {Feasibility::Status::Undecided, std::nullopt, "witness violates a sign condition"};
            }
        f.witness = p;
    }
    return f;
}

}  // namespace spin7
