#include <random>

#include "doctest.h"
#include "spin7/linalg.hpp"
#include "spin7/scalar.hpp"

using namespace spin7;

namespace {
Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t rank_cap) {
    // product of r x k and k x c keeps rank <= k
    Matrix a(r, rank_cap), b(rank_cap, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < rank_cap; ++j) a(i, j) = random_scalar(rng, 3, 2, false);
    for (std::size_t i = 0; i < rank_cap; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = random_scalar(rng, 3, 2, j % 3 == 0);
    return a * b;
}
}  // namespace

TEST_CASE("serial and parallel elimination agree exactly") {
    std::mt19937_64 rng(21);
    for (int n = 0; n < 10; ++n) {
        Matrix m = random_matrix(rng, 12, 15, 1 + n % 9);
        Echelon s = rref_serial(m), p = rref_parallel(m);
        CHECK(s.m == p.m);
        CHECK(s.pivots == p.pivots);
        CHECK(s.rank() <= static_cast<std::size_t>(1 + n % 9));
    }
}

TEST_CASE("nullspace vectors are annihilated and have the right count") {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 10; ++n) {
        Matrix m = random_matrix(rng, 7, 10, 1 + n % 6);
        auto ker = nullspace(m);
        CHECK(ker.size() + rank(m) == 10);
        for (const auto& v : ker) CHECK(is_zero(m * v));
    }
}

TEST_CASE("augmented solve: consistency and particular solution") {
    Matrix a = Matrix::from_rows({{1, 2}, {2, 4}, {0, 1}}, 2);
    Matrix b = Matrix::from_rows({{3, 1}, {6, 0}, {1, 0}}, 2);
    auto s = solve_augmented(a, b, Exec::Serial);
    CHECK(s.rank == 2);
    REQUIRE(s.obstruction.rows() == 1);
    // column 0 is consistent, column 1 is not
    CHECK(s.obstruction(0, 0).is_zero());
    CHECK_FALSE(s.obstruction(0, 1).is_zero());
    Vec x = s.particular.col(0);
    CHECK(a * x == b.col(0));
}

TEST_CASE("span, membership and coordinates") {
    std::vector<Vec> vs = {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
    auto basis = span_basis(vs, 3);
    CHECK(basis.size() == 2);
    CHECK(in_span(basis, {2, 3, 5}));
    CHECK_FALSE(in_span(basis, {0, 0, 1}));
    auto c = coordinates({{1, 0, 1}, {0, 1, 1}}, {2, 3, 5});
    REQUIRE(c.has_value());
    CHECK(*c == Vec{2, 3});
    CHECK_FALSE(coordinates({{1, 0, 1}}, {0, 1, 0}).has_value());
}

TEST_CASE("matrix-vector size mismatch throws") {
    CHECK_THROWS_AS((void)(Matrix(2, 3) * Vec(2)), std::invalid_argument);
}

TEST_CASE("Lagrange diagonalization reproduces the form and its signature") {
    Matrix q = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -3}}, 3);  // 2xy - 3z^2
    auto d = diagonalize_symmetric(q);
    CHECK(d.positive() == 1);
    CHECK(d.negative() == 2);
    std::mt19937_64 rng(2);
    for (int n = 0; n < 20; ++n) {
        Vec x = {random_scalar(rng, 4, 2, false), random_scalar(rng, 4, 2, false), random_scalar(rng, 4, 2, false)};
        Scalar direct = dot(x, q * x), sum;
        for (std::size_t k = 0; k < d.alpha.size(); ++k) {
            Scalar f = dot(d.forms[k], x);
            sum += d.alpha[k] * f * f;
        }
        CHECK(direct == sum);
    }
}

TEST_CASE("parallel elimination matches the serial reference") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {5u, 12u, 30u}) {
        Matrix m(n, n + 3);
        // rank-deficient on purpose: last rows are combinations of the first ones
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n + 3; ++c)
                m(r, c) = r < n - 2 ? random_scalar(rng, 3, 2, n < 10) : m(r - 1, c) + m(r - 3, c);
        auto s = rref(m, Exec::Serial), p = rref(m, Exec::Parallel);
        CHECK(s.pivots == p.pivots);
        CHECK(s.m == p.m);
        Matrix b(n, 2);
        for (std::size_t r = 0; r < n; ++r) b(r, 0) = m(r, 0), b(r, 1) = Scalar(static_cast<long>(r));
        auto as = solve_augmented(m, b, Exec::Serial), ap = solve_augmented(m, b, Exec::Parallel);
        CHECK(as.rank == ap.rank);
        CHECK(as.particular == ap.particular);
        CHECK(as.obstruction == ap.obstruction);
    }
}
