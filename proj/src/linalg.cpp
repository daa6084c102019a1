#include "spin7/linalg.hpp"

#include <stdexcept>

namespace spin7 {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
}

void Matrix::append_rows(const Matrix& o) {
    if (r_ == 0 && c_ == 0) {
        *this = o;
        return;
    }
    if (o.c_ != c_) throw std::invalid_argument("append_rows: column mismatch");
    a_.insert(a_.end(), o.a_.begin(), o.a_.end());
    r_ += o.r_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j).addmul(x, b(k, j));
        }
    return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("matrix-vector size mismatch");
    Vec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!x[k].is_zero() && !a(i, k).is_zero()) y[i].addmul(a(i, k), x[k]);
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

Matrix scale(const Matrix& a, const Scalar& s) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

namespace {

// Shared driver; `parallel` only changes how the elimination of one pivot column is
// spread over rows.  Each row update touches that row alone, so results are identical.
Echelon reduce(Matrix m, std::size_t pivot_cols, bool parallel) {
    Echelon e;
    const std::size_t R = m.rows(), C = m.cols();
    pivot_cols = std::min(pivot_cols, C);
    std::size_t r = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < pivot_cols && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c).is_zero()) ++p;
        if (p == R) continue;
        m.swap_rows(r, p);
        Scalar inv = m(r, c).inverse();
        nz.clear();
        for (std::size_t j = c; j < C; ++j) {
            if (m(r, j).is_zero()) continue;
            m(r, j) *= inv;
            nz.push_back(j);
        }
        const long rows = static_cast<long>(R);
        auto eliminate = [&](long i) {
            auto ii = static_cast<std::size_t>(i);
            if (ii == r || m(ii, c).is_zero()) return;
            Scalar f = m(ii, c);
            for (std::size_t j : nz) m(ii, j).submul(f, m(r, j));
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (long i = 0; i < rows; ++i) eliminate(i);
        } else {
            for (long i = 0; i < rows; ++i) eliminate(i);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

Echelon rref_serial(Matrix m, std::size_t pivot_cols) { return reduce(std::move(m), pivot_cols, false); }
Echelon rref_parallel(Matrix m, std::size_t pivot_cols) { return reduce(std::move(m), pivot_cols, true); }

Echelon rref(Matrix m, Exec exec, std::size_t pivot_cols) {
    return exec == Exec::Serial ? rref_serial(std::move(m), pivot_cols)
                                : rref_parallel(std::move(m), pivot_cols);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

namespace {
std::vector<Vec> kernel_from(const Echelon& e, std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(ncols);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.m(k, f);
        out.push_back(std::move(v));
    }
    return out;
}
}  // namespace

std::vector<Vec> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    return kernel_from(e, m.cols());
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t dim) {
    if (vs.empty()) return {};
    Echelon e = rref(Matrix::from_rows(vs, dim));
    std::vector<Vec> out;
    for (std::size_t k = 0; k < e.rank(); ++k) out.push_back(e.m.row(k));
    return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) { return coordinates(basis, v).has_value(); }

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Matrix a = Matrix::from_columns(basis, v.size());
    Matrix b(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) b(i, 0) = v[i];
    AugmentedSolve s = solve_augmented(a, b);
    if (!s.obstruction.is_zero()) return std::nullopt;
    if (!s.kernel.empty()) throw std::invalid_argument("coordinates: basis is dependent");
    return s.particular.col(0);
}

AugmentedSolve solve_augmented(const Matrix& a, const Matrix& b, Exec exec) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_augmented: row mismatch");
    const std::size_t n = a.cols(), k = b.cols();
    Matrix aug(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    Echelon e = rref(std::move(aug), exec, n);
    AugmentedSolve s;
    s.rank = e.rank();
    s.particular = Matrix(n, k);
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t j = 0; j < k; ++j) s.particular(e.pivots[r], j) = e.m(r, n + j);
    s.obstruction = Matrix(a.rows() - e.rank(), k);
    for (std::size_t r = e.rank(); r < a.rows(); ++r)
        for (std::size_t j = 0; j < k; ++j) s.obstruction(r - e.rank(), j) = e.m(r, n + j);
    // kernel from the left block only
    Matrix left(e.rank(), n);
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t j = 0; j < n; ++j) left(r, j) = e.m(r, j);
    Echelon le{left, e.pivots};
    s.kernel = kernel_from(le, n);
    return s;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s.addmul(a[i], b[i]);
    return s;
}

}  // namespace spin7

namespace spin7 {

int Diagonalization::positive() const {
    int n = 0;
    for (const auto& a : alpha) n += a.sign() > 0;
    return n;
}

int Diagonalization::negative() const {
    int n = 0;
    for (const auto& a : alpha) n += a.sign() < 0;
    return n;
}

Diagonalization diagonalize_symmetric(const Matrix& sym) {
    const std::size_t n = sym.rows();
    Matrix a = sym;
    Diagonalization d;
    // subtract alpha * l l^T, where l is a row of a scaled appropriately
    auto peel = [&](const Vec& l, const Scalar& alpha) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!l[i].is_zero() && !l[j].is_zero()) a(i, j) -= alpha * l[i] * l[j];
        d.alpha.push_back(alpha);
        d.forms.push_back(l);
    };
    while (true) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (!a(i, i).is_zero()) piv = i;
        if (piv < n) {
            // f = (row_i . x)^2 / a_ii + rest
            peel(a.row(piv), a(piv, piv).inverse());
            continue;
        }
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!a(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;
        // zero diagonal: 2 u w / a_ij = ((u + w)^2 - (u - w)^2) / (2 a_ij)
        Vec u = a.row(pi), w = a.row(pj);
        Scalar c = (Scalar(2) * a(pi, pj)).inverse();
        Vec s(n), t(n);
        for (std::size_t k = 0; k < n; ++k) {
            s[k] = u[k] + w[k];
            t[k] = u[k] - w[k];
        }
        peel(s, c);
        peel(t, -c);
    }
    return d;
}

}  // namespace spin7
