#include "spin7/clifford.hpp"

#include <stdexcept>

namespace spin7 {

Spinor spinor_basis(int k) {
    if (k < 1 || k > kSpinorDim) throw std::out_of_range("spinor index 1..16");
    Spinor s(kSpinorDim);
    s[static_cast<std::size_t>(k - 1)] = 1;
    return s;
}

const Spinor& psi0() {
    static const Spinor s = sub(spinor_basis(9), spinor_basis(10));
    return s;
}

Matrix skew_unit(int i, int j, int sign_at_ij) {
    Matrix m(8, 8);
    m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = sign_at_ij;
    m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = -sign_at_ij;
    return m;
}

Matrix rep_matrix(int k, int s) {
    auto E = [s](int i, int j) { return skew_unit(i, j, s); };
    switch (k) {
        case 1: return E(1, 8) + E(2, 7) - E(3, 6) - E(4, 5);
        case 2: return scale(E(1, 7), -1) + E(2, 8) + E(3, 5) - E(4, 6);
        case 3: return scale(E(1, 6), -1) + E(2, 5) - E(3, 8) + E(4, 7);
        case 4: return scale(E(1, 5), -1) - E(2, 6) - E(3, 7) - E(4, 8);
        case 5: return scale(E(1, 3), -1) - E(2, 4) + E(5, 7) + E(6, 8);
        case 6: return E(1, 4) - E(2, 3) - E(5, 8) + E(6, 7);
        case 7: return E(1, 2) - E(3, 4) - E(5, 6) + E(7, 8);
        default: throw std::out_of_range("M_k defined for k = 1..7");
    }
}

Matrix gamma(int i, int s) {
    Matrix g(16, 16);
    if (i < 1 || i > 8) throw std::out_of_range("gamma index 1..8");
    const Matrix m = i <= 7 ? rep_matrix(i, s) : Matrix(8, 8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            if (i <= 7) {
                g(r, c + 8) = m(r, c);
                g(r + 8, c) = m(r, c);
            } else if (r == c) {
                g(r, c + 8) = 1;
                g(r + 8, c) = -1;
            }
        }
    return g;
}

namespace {

SignedPerm from_matrix(const Matrix& g) {
    SignedPerm p;
    for (std::size_t r = 0; r < 16; ++r) {
        int found = 0;
        for (std::size_t c = 0; c < 16; ++c) {
            if (g(r, c).is_zero()) continue;
            if (++found > 1) throw std::logic_error("gamma matrix is not a signed permutation");
            p.src[r] = static_cast<std::uint8_t>(c);
            p.sign[r] = static_cast<std::int8_t>(g(r, c).sign());
        }
        if (found != 1) throw std::logic_error("gamma matrix is singular");
    }
    return p;
}

// (a*b)(psi)[r] = a.sign[r] * (b psi)[a.src[r]]
SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm c;
    for (std::size_t r = 0; r < 16; ++r) {
        c.src[r] = b.src[a.src[r]];
        c.sign[r] = static_cast<std::int8_t>(a.sign[r] * b.sign[a.src[r]]);
    }
    return c;
}

std::array<SignedPerm, 256> build_actions() {
    std::array<SignedPerm, 8> g;
    for (int i = 1; i <= 8; ++i) g[static_cast<std::size_t>(i - 1)] = from_matrix(gamma(i));
    std::array<SignedPerm, 256> out;
    for (unsigned b = 0; b < 256; ++b) {
        SignedPerm p;
        for (std::size_t r = 0; r < 16; ++r) {
            p.src[r] = static_cast<std::uint8_t>(r);
            p.sign[r] = 1;
        }
        for (int i : blade_indices(static_cast<Blade>(b))) p = compose(p, g[static_cast<std::size_t>(i - 1)]);
        out[b] = p;
    }
    return out;
}

}  // namespace

const SignedPerm& blade_action(Blade b) {
    static const auto table = build_actions();
    return table[b];
}

Spinor clifford_apply(const MultiVector& a, const Spinor& psi) {
    Spinor out(kSpinorDim);
    for (const auto& [b, c] : a.terms()) {
        const SignedPerm& p = blade_action(b);
        for (std::size_t r = 0; r < 16; ++r) {
            const Scalar& x = psi[p.src[r]];
            if (x.is_zero()) continue;
            if (p.sign[r] > 0)
                out[r].addmul(c, x);
            else
                out[r].submul(c, x);
        }
    }
    return out;
}

Matrix clifford_matrix(const MultiVector& a) {
    Matrix m(16, 16);
    for (const auto& [b, c] : a.terms()) {
        const SignedPerm& p = blade_action(b);
        for (std::size_t r = 0; r < 16; ++r) {
            if (p.sign[r] > 0)
                m(r, p.src[r]) += c;
            else
                m(r, p.src[r]) -= c;
        }
    }
    return m;
}

Spinor t_squared(const MultiVector& t, const Spinor& psi) {
    return clifford_apply(t, clifford_apply(t, psi));
}

Spinor add(const Spinor& a, const Spinor& b) {
    Spinor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Spinor sub(const Spinor& a, const Spinor& b) {
    Spinor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Spinor scaled(const Spinor& a, const Scalar& s) {
    Spinor r = a;
    for (auto& x : r) x *= s;
    return r;
}

}  // namespace spin7
