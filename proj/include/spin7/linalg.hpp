#pragma once
// Dense exact matrices and row reduction.  Every kernel/rank/solve in the library goes
// through rref(); the OpenMP variant must produce the same matrix as the serial one.

#include <cstddef>
#include <optional>
#include <vector>

#include "spin7/scalar.hpp"

namespace spin7 {

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;
    void swap_rows(std::size_t i, std::size_t j);
    // append rows of another matrix with the same column count
    void append_rows(const Matrix& o);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& s);

enum class Exec { Serial, Parallel };

struct Echelon {
    Matrix m;                          // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form with first-nonzero pivoting.  Only the first `pivot_cols`
// columns are eligible as pivots (the rest ride along, e.g. right-hand sides).
Echelon rref(Matrix m, Exec exec = Exec::Parallel, std::size_t pivot_cols = SIZE_MAX);
Echelon rref_serial(Matrix m, std::size_t pivot_cols = SIZE_MAX);
Echelon rref_parallel(Matrix m, std::size_t pivot_cols = SIZE_MAX);

std::size_t rank(const Matrix& m);
// basis of {x : m x = 0}, one vector per free column (the standard echelon basis)
std::vector<Vec> nullspace(const Matrix& m);
// row-reduced basis of the span of the given vectors
std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t dim);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
// coordinates of v in a linearly independent list, or empty if v is not in the span
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v);

// A X = B for several right-hand sides at once.  Consistency is a set of linear
// conditions on the columns of B: `obstruction` rows o satisfy o . B = 0 iff solvable.
struct AugmentedSolve {
    std::size_t rank = 0;
    Matrix particular;                 // cols(A) x cols(B), free variables set to zero
    Matrix obstruction;                // (#zero rows) x cols(B), reduced right-hand sides
    std::vector<Vec> kernel;           // nullspace of A
};
AugmentedSolve solve_augmented(const Matrix& a, const Matrix& b, Exec exec = Exec::Parallel);

bool is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

}  // namespace spin7

namespace spin7 {

// f(x) = sum_k alpha_k * (forms_k . x)^2 for a symmetric matrix f (Lagrange reduction).
struct Diagonalization {
    std::vector<Scalar> alpha;
    std::vector<Vec> forms;
    int positive() const;
    int negative() const;
};
Diagonalization diagonalize_symmetric(const Matrix& sym);

}  // namespace spin7
