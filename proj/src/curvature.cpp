#include "spin7/curvature.hpp"
#include <bit>

#include <stdexcept>

namespace spin7 {

Scalar form_value(const LieElement& w, int x, int y) {
    if (x == y) return Scalar();
    return x < y ? w.coeff(make_blade({x, y})) : -w.coeff(make_blade({y, x}));
}

Matrix form_values(const LieElement& w) {
    Matrix m(8, 8);
    for (const auto& [b, c] : w.terms()) {
        auto idx = blade_indices(b);
        auto i = static_cast<std::size_t>(idx[0] - 1), j = static_cast<std::size_t>(idx[1] - 1);
        m(i, j) += c;
        m(j, i) -= c;
    }
    return m;
}

namespace {

std::vector<Vec> h_coords(const Subalgebra& h) {
    std::vector<Vec> out;
    for (const auto& x : h.basis) out.push_back(to_vec(x, 2));
    return out;
}

// cyclic sums of A(X,Y) B(Z,V) in row order
Vec cyclic_simple(const Matrix& a, const Matrix& b) {
    Vec out(kBianchiRows);
    std::size_t row = 0;
    for (Blade t : blades_of_grade(3)) {
        auto idx = blade_indices(t);
        auto x = static_cast<std::size_t>(idx[0] - 1), y = static_cast<std::size_t>(idx[1] - 1),
             z = static_cast<std::size_t>(idx[2] - 1);
        for (std::size_t v = 0; v < 8; ++v, ++row) {
            Scalar s;
            if (!a(x, y).is_zero() && !b(z, v).is_zero()) s.addmul(a(x, y), b(z, v));
            if (!a(y, z).is_zero() && !b(x, v).is_zero()) s.addmul(a(y, z), b(x, v));
            if (!a(z, x).is_zero() && !b(y, v).is_zero()) s.addmul(a(z, x), b(y, v));
            out[row] = s;
        }
    }
    return out;
}

void accumulate(Vec& acc, const Vec& v, const Scalar& c) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!v[i].is_zero()) acc[i].addmul(c, v[i]);
}

}  // namespace

Matrix CurvatureTensor::lambda2() const {
    auto hv = h_coords(h);
    Matrix m(28, 28);
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b) {
            if (coeff(a, b).is_zero()) continue;
            for (std::size_t p = 0; p < 28; ++p) {
                if (hv[a][p].is_zero()) continue;
                Scalar cp = coeff(a, b) * hv[a][p];
                for (std::size_t q = 0; q < 28; ++q)
                    if (!hv[b][q].is_zero()) m(p, q).addmul(cp, hv[b][q]);
            }
        }
    return m;
}

Scalar CurvatureTensor::value(int x, int y, int z, int v) const {
    Scalar s;
    for (std::size_t a = 0; a < h.dim(); ++a) {
        Scalar ha = form_value(h.basis[a], x, y);
        if (ha.is_zero()) continue;
        for (std::size_t b = 0; b < h.dim(); ++b)
            if (!coeff(a, b).is_zero()) s += coeff(a, b) * ha * form_value(h.basis[b], z, v);
    }
    return s;
}

CurvatureTensor zero_tensor(const Subalgebra& h) { return {h, Matrix(h.dim(), h.dim())}; }

Vec cyclic_sums(const CurvatureTensor& r) {
    Vec acc(kBianchiRows);
    std::vector<Matrix> fv;
    for (const auto& x : r.h.basis) fv.push_back(form_values(x));
    for (std::size_t a = 0; a < r.h.dim(); ++a)
        for (std::size_t b = 0; b < r.h.dim(); ++b)
            if (!r.coeff(a, b).is_zero()) accumulate(acc, cyclic_simple(fv[a], fv[b]), r.coeff(a, b));
    return acc;
}

Vec four_form_values(const MultiVector& s) {
    Vec out(kBianchiRows);
    std::size_t row = 0;
    for (Blade t : blades_of_grade(3))
        for (int v = 1; v <= 8; ++v, ++row) {
            unsigned vb = 1u << (v - 1);
            if (t & vb) continue;
            // moving e_v from the back into sorted position
            int swaps = std::popcount(static_cast<unsigned>(t) & ~((vb << 1) - 1));
            Scalar c = s.coeff(static_cast<Blade>(t | vb));
            out[row] = (swaps & 1) ? -c : c;
        }
    return out;
}

bool is_symmetric(const CurvatureTensor& r) { return r.coeff == r.coeff.transpose(); }

bool satisfies_bianchi(const CurvatureTensor& r) { return is_zero(cyclic_sums(r)); }

bool satisfies_torsion_bianchi(const CurvatureTensor& r, const MultiVector& t) {
    return cyclic_sums(r) == four_form_values(sigma_t(t));
}

bool range_in(const CurvatureTensor& r, const Subalgebra& g) {
    Matrix m = r.lambda2();
    auto gb = span_basis(h_coords(g), 28);
    for (std::size_t p = 0; p < 28; ++p)
        if (!in_span(gb, m.row(p))) return false;
    return true;
}

namespace {
Matrix act_on_lambda2(const LieElement& x, const Matrix& m) {
    Matrix a = action_matrix(x, 2);
    return a * m + m * a.transpose();
}
}  // namespace

bool invariance_check(const CurvatureTensor& r, const Subalgebra& g) {
    Matrix m = r.lambda2();
    for (const auto& x : g.basis)
        if (!act_on_lambda2(x, m).is_zero()) return false;
    return true;
}

Matrix ricci_of(const CurvatureTensor& r) {
    Matrix ric(8, 8);
    std::vector<Matrix> fv;
    for (const auto& x : r.h.basis) fv.push_back(form_values(x));
    for (std::size_t a = 0; a < r.h.dim(); ++a)
        for (std::size_t b = 0; b < r.h.dim(); ++b) {
            const Scalar& c = r.coeff(a, b);
            if (c.is_zero()) continue;
            // sum_i h_a(e_i, X) h_b(Y, e_i)
            for (std::size_t x = 0; x < 8; ++x)
                for (std::size_t y = 0; y < 8; ++y)
                    for (std::size_t i = 0; i < 8; ++i)
                        if (!fv[a](i, x).is_zero() && !fv[b](y, i).is_zero()) ric(x, y) += c * fv[a](i, x) * fv[b](y, i);
        }
    return ric;
}

std::vector<std::pair<std::size_t, std::size_t>> sym_pairs(std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) out.emplace_back(a, b);
    return out;
}

Matrix coeff_from_sym(const Vec& v, std::size_t d) {
    Matrix c(d, d);
    auto pairs = sym_pairs(d);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        c(pairs[k].first, pairs[k].second) = v[k];
        c(pairs[k].second, pairs[k].first) = v[k];
    }
    return c;
}

Matrix bianchi_matrix_sym(const Subalgebra& h) {
    auto pairs = sym_pairs(h.dim());
    std::vector<Matrix> fv;
    for (const auto& x : h.basis) fv.push_back(form_values(x));
    std::vector<Vec> cols(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [a, b] = pairs[k];
        Vec v = cyclic_simple(fv[a], fv[b]);
        if (a != b) accumulate(v, cyclic_simple(fv[b], fv[a]), Scalar(1));
        cols[k] = std::move(v);
    }
    return Matrix::from_columns(cols, kBianchiRows);
}

Matrix bianchi_matrix_full(const Subalgebra& h) {
    std::vector<Matrix> fv;
    for (const auto& x : h.basis) fv.push_back(form_values(x));
    const auto& b2 = blades_of_grade(2);
    std::vector<Vec> cols(h.dim() * 28);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < cols.size(); ++k)
        cols[k] = cyclic_simple(form_values(MultiVector::blade(b2[k % 28])), fv[k / 28]);
    return Matrix::from_columns(cols, kBianchiRows);
}

BianchiSpace bianchi_space(const Subalgebra& h) {
    BianchiSpace s;
    if (h.dim() == 0) return s;
    s.dim = nullspace(bianchi_matrix_full(h)).size();
    auto ker = nullspace(bianchi_matrix_sym(h));
    s.dim_symmetric = ker.size();
    for (const auto& v : ker) s.symmetric_basis.push_back({h, coeff_from_sym(v, h.dim())});
    return s;
}

std::optional<CurvatureTensor> solve_torsion_bianchi(const Subalgebra& h, const MultiVector& t) {
    Vec rhs = four_form_values(sigma_t(t));
    if (h.dim() == 0) {
        if (is_zero(rhs)) return zero_tensor(h);
        return std::nullopt;
    }
    Matrix b(kBianchiRows, 1);
    for (std::size_t i = 0; i < kBianchiRows; ++i) b(i, 0) = rhs[i];
    AugmentedSolve s = solve_augmented(bianchi_matrix_sym(h), b);
    if (!s.obstruction.is_zero()) return std::nullopt;
    if (!s.kernel.empty()) throw std::logic_error("solve_torsion_bianchi: K(" + h.name + ") is not trivial");
    return CurvatureTensor{h, coeff_from_sym(s.particular.col(0), h.dim())};
}

RicciShape closed_form_ricci(const std::string& family, const std::vector<Scalar>& p) {
    RicciShape r;
    auto diag = [](std::initializer_list<Scalar> d) {
        Matrix m(8, 8);
        std::size_t i = 0;
        for (const auto& x : d) m(i, i) = x, ++i;
        return m;
    };
    const Scalar& a1 = p.at(0);
    if (family == "5.1") {
        const Scalar &b1 = p.at(1), &b2 = p.at(2);
        r.lambda = Scalar(3) * (a1 + b1) * (Scalar(4) * a1 - Scalar(3) * b1) - b2 * b2;
        r.kappa = Scalar(4) * (a1 + b1) * (Scalar(3) * a1 - Scalar(4) * b1);
        r.diag = diag({r.lambda, r.lambda, r.lambda, r.lambda, r.kappa, r.kappa, r.kappa, 0});
    } else if (family == "5.2-I" || family == "5.2-II") {
        if (family == "5.2-I") {
            r.lambda = Scalar(2) * a1 * a1;
        } else {
            const Scalar &a2 = p.at(1), &b1 = p.at(2);
            r.lambda = Scalar(4) * a1 * a1 + Scalar(4) * (Scalar(2) * a2 + b1) * (Scalar(5) * a2 - b1);
        }
        r.kappa = r.lambda;
        r.diag = diag({r.lambda, r.lambda, r.lambda, r.lambda, r.lambda, r.lambda, 0, 0});
    } else if (family == "5.3-I" || family == "5.3-II") {
        const Scalar &a2 = p.at(1), &b1 = p.at(2);
        if (family == "5.3-I") {
            r.lambda = Scalar(6) * a1 * a1 + (a2 + b1) * (Scalar(6) * a2 - b1);
            r.kappa = Scalar(10) * a1 * a1 + Scalar(2) * (a2 + b1) * (Scalar(5) * a2 - Scalar(2) * b1);
        } else {
            Scalar s = a1 * a1 + a2 * a2;
            r.lambda = Scalar(45, 4) * s - Scalar(2) * a2 * b1 - b1 * b1;
            r.kappa = Scalar(33, 4) * s - Scalar(8) * a2 * b1 - Scalar(4) * b1 * b1;
        }
        r.diag = diag({r.lambda, r.lambda, r.lambda, r.lambda, r.kappa, r.kappa, 0, 0});
    } else if (family == "5.4") {
        r.kappa = Scalar(-4) * a1 * a1;
        r.diag = diag({0, 0, 0, 0, r.kappa, r.kappa, 0, 0});
    } else {
        throw std::invalid_argument("unknown torsion family '" + family + "'");
    }
    return r;
}

const std::vector<RcCase>& rc_cases() {
    static const std::vector<RcCase> c = {{"5.1.1", {"5.1"}, "R+su2c"},
                                          {"5.1.2", {"5.1"}, "so3ir"},
                                          {"5.2.1", {"5.2-I", "5.2-II"}, "so3"},
                                          {"5.2.2", {"5.2-I", "5.2-II"}, "t2"},
                                          {"5.3.1", {"5.3-I", "5.3-II"}, "t2"}};
    return c;
}

CurvatureTensor build_rc(const std::string& case_id, const std::string& family, const std::vector<Scalar>& p) {
    const RcCase* rc = nullptr;
    for (const auto& c : rc_cases())
        if (c.id == case_id) rc = &c;
    if (!rc) throw std::invalid_argument("unknown curvature case '" + case_id + "'");
    bool ok = false;
    for (const auto& f : rc->families) ok = ok || f == family;
    if (!ok) throw std::invalid_argument("case " + case_id + " does not take family " + family);
    if (p.size() != torsion_family(family).params.size())
        throw std::invalid_argument("family " + family + ": wrong parameter count");

    CurvatureTensor r{catalog(rc->hol), {}};
    const std::size_t d = r.h.dim();
    r.coeff = Matrix(d, d);
    RicciShape s = closed_form_ricci(family, p);
    if (case_id == "5.1.1") {
        Scalar r1 = Scalar(3, 8) * s.kappa - s.lambda, r2 = Scalar(-1, 8) * s.kappa;
        r.coeff(0, 0) = r1;
        for (std::size_t i = 1; i < 4; ++i) r.coeff(i, i) = r2;
    } else if (case_id == "5.1.2") {
        if (!p[1].is_zero() || !p[2].is_zero()) throw std::invalid_argument("case 5.1.2 needs b1 = b2 = 0");
        for (std::size_t i = 0; i < d; ++i) r.coeff(i, i) = -(p[0] * p[0]) * r.h.weight(i);
    } else if (case_id == "5.2.1") {
        for (std::size_t i = 0; i < d; ++i) r.coeff(i, i) = Scalar(-1, 2) * s.lambda * r.h.weight(i);
    } else if (case_id == "5.2.2") {
        r.coeff(0, 0) = Scalar(-3, 4) * s.lambda;
        r.coeff(1, 1) = Scalar(-1, 4) * s.lambda;
    } else {
        r.coeff(0, 0) = Scalar(1, 4) * s.kappa - s.lambda;
        r.coeff(1, 1) = Scalar(-1, 4) * s.kappa;
    }
    return r;
}

std::vector<Vec> curvature_constraints(const std::vector<Matrix>& parts, const Subalgebra& g) {
    const std::size_t k = parts.size();
    std::vector<Vec> rows;
    auto gv = h_coords(g);
    std::vector<Vec> ann = gv.empty() ? nullspace(Matrix(1, 28)) : nullspace(Matrix::from_rows(gv, 28));
    for (const auto& y : ann)
        for (std::size_t p = 0; p < 28; ++p) {
            Vec row(k);
            for (std::size_t i = 0; i < k; ++i) row[i] = dot(parts[i].row(p), y);
            if (!is_zero(row)) rows.push_back(row);
        }
    for (const auto& x : g.basis) {
        std::vector<Matrix> acted;
        for (const auto& m : parts) acted.push_back(act_on_lambda2(x, m));
        for (std::size_t p = 0; p < 28; ++p)
            for (std::size_t q = 0; q < 28; ++q) {
                Vec row(k);
                for (std::size_t i = 0; i < k; ++i) row[i] = acted[i](p, q);
                if (!is_zero(row)) rows.push_back(row);
            }
    }
    return span_basis(rows, k);
}

InvariantRicciFamily invariant_ricci_family(const Subalgebra& h) {
    InvariantRicciFamily fam;
    const std::size_t d = h.dim();
    if (d == 0) return fam;
    auto pairs = sym_pairs(d);
    std::vector<Matrix> parts;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        Vec e(pairs.size());
        e[k] = 1;
        parts.push_back(CurvatureTensor{h, coeff_from_sym(e, d)}.lambda2());
    }
    std::vector<Vec> rows;
    for (const auto& x : h.basis) {
        std::vector<Matrix> acted;
        for (const auto& m : parts) acted.push_back(act_on_lambda2(x, m));
        for (std::size_t p = 0; p < 28; ++p)
            for (std::size_t q = 0; q < 28; ++q) {
                Vec row(parts.size());
                for (std::size_t i = 0; i < parts.size(); ++i) row[i] = acted[i](p, q);
                if (!is_zero(row)) rows.push_back(row);
            }
    }
    std::vector<Vec> ker;
    if (rows.empty()) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            Vec e(pairs.size());
            e[k] = 1;
            ker.push_back(e);
        }
    } else {
        ker = nullspace(Matrix::from_rows(rows, pairs.size()));
    }
    fam.operators = ker.size();
    std::vector<Vec> flat;
    for (const auto& v : ker) {
        Matrix ric = ricci_of({h, coeff_from_sym(v, d)});
        Vec f;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) f.push_back(ric(i, j));
        flat.push_back(f);
    }
    for (const auto& f : span_basis(flat, 64)) {
        Matrix m(8, 8);
        for (std::size_t i = 0; i < 64; ++i) m(i / 8, i % 8) = f[i];
        fam.ricci.push_back(m);
    }
    return fam;
}

}  // namespace spin7
