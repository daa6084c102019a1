#pragma once
// Test-side oracles: slow, obvious re-implementations that share no code paths with the
// library beyond reading coefficients out of a MultiVector.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "spin7/exterior.hpp"

namespace oracle {

using spin7::Blade;
using spin7::MultiVector;
using spin7::Scalar;

// sign of the permutation sorting idx (0 if an index repeats)
inline int perm_sign(std::vector<int> idx) {
    int s = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) s = -s;
        }
    return s;
}

inline std::vector<int> indices(Blade b) {
    std::vector<int> v;
    for (int i = 1; i <= 8; ++i)
        if (b & (1u << (i - 1))) v.push_back(i);
    return v;
}

inline Blade blade_of(const std::vector<int>& idx) {
    Blade b = 0;
    for (int i : idx) b = static_cast<Blade>(b | (1u << (i - 1)));
    return b;
}

// component a(i1, ..., ik) of the antisymmetric tensor
inline Scalar value(const MultiVector& a, const std::vector<int>& idx) {
    int s = perm_sign(idx);
    if (s == 0) return Scalar();
    Scalar c = a.coeff(blade_of(idx));
    return s > 0 ? c : -c;
}

inline MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    MultiVector out;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            if (ba & bb) continue;
            auto ia = indices(ba), ib = indices(bb);
            std::vector<int> all = ia;
            all.insert(all.end(), ib.begin(), ib.end());
            Scalar c = ca * cb;
            out.add(blade_of(all), perm_sign(all) > 0 ? c : -c);
        }
    return out;
}

// e_I ^ *e_I = vol
inline MultiVector hodge(const MultiVector& a) {
    MultiVector out;
    for (const auto& [b, c] : a.terms()) {
        auto i = indices(b);
        std::vector<int> j;
        for (int k = 1; k <= 8; ++k)
            if (!(b & (1u << (k - 1)))) j.push_back(k);
        std::vector<int> all = i;
        all.insert(all.end(), j.begin(), j.end());
        out.add(blade_of(j), perm_sign(all) > 0 ? c : -c);
    }
    return out;
}

// e_i contracted into a: (e_i _| a)(x...) = a(e_i, x...)
inline MultiVector contract(int i, const MultiVector& a) {
    MultiVector out;
    for (const auto& [b, c] : a.terms()) {
        if (!(b & (1u << (i - 1)))) continue;
        auto idx = indices(b);
        std::vector<int> rest;
        for (int k : idx)
            if (k != i) rest.push_back(k);
        std::vector<int> all = {i};
        all.insert(all.end(), rest.begin(), rest.end());
        out.add(blade_of(rest), perm_sign(all) > 0 ? c : -c);
    }
    return out;
}

inline Scalar inner(const MultiVector& a, const MultiVector& b) {
    Scalar s;
    for (const auto& [bl, c] : a.terms()) s += c * b.coeff(bl);
    return s;
}

inline MultiVector random_form(std::mt19937_64& rng, int k, int range = 3) {
    MultiVector a;
    std::uniform_int_distribution<int> d(-range, range);
    for (Blade b = 0; b < 256; ++b)
        if (static_cast<int>(indices(b).size()) == k) a.add(b, Scalar(d(rng)));
    return a;
}

// floating-point 16x16 matrices for cross-checks
using DMat = std::vector<std::vector<double>>;
inline DMat dmul(const DMat& a, const DMat& b) {
    std::size_t n = a.size();
    DMat c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace oracle
