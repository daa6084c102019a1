#include "spin7/liealg.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace spin7 {

Matrix skew_of(const LieElement& x) {
    Matrix m(8, 8);
    for (const auto& [b, c] : x.terms()) {
        if (blade_grade(b) != 2) throw std::invalid_argument("skew_of: expected a 2-form");
        auto idx = blade_indices(b);
        auto i = static_cast<std::size_t>(idx[0] - 1), j = static_cast<std::size_t>(idx[1] - 1);
        m(i, j) -= c;
        m(j, i) += c;
    }
    return m;
}

LieElement form_of_skew(const Matrix& m) {
    LieElement x;
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
            x.add(make_blade({i, j}), m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)));
    return x;
}

Matrix rho(const LieElement& x) { return scale(skew_of(x), 2); }

LieElement bracket(const LieElement& x, const LieElement& y) {
    Matrix a = skew_of(x), b = skew_of(y);
    return form_of_skew(a * b - b * a);
}

MultiVector act_on_form(const LieElement& x, const MultiVector& a) {
    Matrix r = rho(x);
    MultiVector out;
    for (const auto& [b, c] : a.terms()) {
        for (int k : blade_indices(b)) {
            unsigned kbit = 1u << (k - 1);
            for (int m = 1; m <= 8; ++m) {
                const Scalar& rmk = r(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(k - 1));
                if (rmk.is_zero() || m == k) continue;
                unsigned mbit = 1u << (m - 1);
                if (b & mbit) continue;
                unsigned before = b & (kbit - 1);
                unsigned after = b & ~((kbit << 1) - 1);
                int swaps = std::popcount(before & ~((mbit << 1) - 1)) + std::popcount(after & (mbit - 1));
                Scalar v = c * rmk;
                out.add(static_cast<Blade>((b & ~kbit) | mbit), (swaps & 1) ? -v : v);
            }
        }
    }
    return out;
}

Spinor act_on_spinor(const LieElement& x, const Spinor& psi) { return clifford_apply(x, psi); }

Matrix action_matrix(const LieElement& x, int k) {
    const auto& bl = blades_of_grade(k);
    Matrix m(bl.size(), bl.size());
    for (std::size_t j = 0; j < bl.size(); ++j) {
        MultiVector img = act_on_form(x, MultiVector::blade(bl[j]));
        for (const auto& [b, c] : img.terms()) m(blade_position(b), j) = c;
    }
    return m;
}

bool in_spin7_equations(const LieElement& x) {
    auto w = [&](int i, int j) { return x.coeff(make_blade({i, j})); };
    return w(1, 8) == -w(2, 7) + w(3, 6) + w(4, 5) &&
           w(2, 8) == w(1, 7) + w(3, 5) - w(4, 6) &&
           w(3, 8) == -w(1, 6) - w(2, 5) - w(4, 7) &&
           w(4, 8) == -w(1, 5) + w(2, 6) + w(3, 7) &&
           w(5, 8) == w(1, 4) + w(2, 3) - w(6, 7) &&
           w(6, 8) == w(1, 3) - w(2, 4) + w(5, 7) &&
           w(7, 8) == -w(1, 2) - w(3, 4) - w(5, 6);
}

bool in_spin7_clifford(const LieElement& x) { return is_zero(act_on_spinor(x, psi0())); }

namespace gens {
namespace {
MultiVector E(int i, int j, long c = 1) { return MultiVector::e({i, j}, Scalar(c)); }
}  // namespace

LieElement P(int i) {
    switch (i) {
        case 1: return E(3, 5) + E(4, 6);
        case 2: return E(3, 6) - E(4, 5);
        case 3: return E(1, 5) + E(2, 6);
        case 4: return E(1, 6) - E(2, 5);
        case 5: return E(1, 3) + E(2, 4);
        case 6: return E(1, 4) - E(2, 3);
        case 7: return E(1, 2) - E(3, 4);
        case 8: return E(3, 4) - E(5, 6);
        default: throw std::out_of_range("P_i, i = 1..8");
    }
}

LieElement Q(int i) {
    switch (i) {
        case 1: return E(1, 7, 2) - E(3, 5) + E(4, 6);
        case 2: return E(2, 7, 2) + E(3, 6) + E(4, 5);
        case 3: return E(3, 7, 2) + E(1, 5) - E(2, 6);
        case 4: return E(4, 7, 2) - E(1, 6) - E(2, 5);
        case 5: return E(5, 7, 2) - E(1, 3) + E(2, 4);
        case 6: return E(6, 7, 2) + E(1, 4) + E(2, 3);
        default: throw std::out_of_range("Q_i, i = 1..6");
    }
}

LieElement S(int i) {
    switch (i) {
        case 1: return E(1, 8) - E(2, 7);
        case 2: return E(2, 8) + E(1, 7);
        case 3: return E(3, 8) - E(4, 7);
        case 4: return E(4, 8) + E(3, 7);
        case 5: return E(5, 8) - E(6, 7);
        case 6: return E(6, 8) + E(5, 7);
        case 7: return E(7, 8) - E(5, 6);
        default: throw std::out_of_range("S_i, i = 1..7");
    }
}
}  // namespace gens

const std::vector<LieElement>& spin7_basis() {
    static const auto b = [] {
        std::vector<LieElement> v;
        for (int i = 1; i <= 8; ++i) v.push_back(gens::P(i));
        for (int i = 1; i <= 6; ++i) v.push_back(gens::Q(i));
        for (int i = 1; i <= 7; ++i) v.push_back(gens::S(i));
        return v;
    }();
    return b;
}

const std::vector<std::string>& nonabelian_catalog_names() {
    static const std::vector<std::string> n = {"g2",  "su3",  "su2+su2c", "u2",    "R+su2c",
                                               "so3", "su2",  "su2c",     "so3ir", "R+su2"};
    return n;
}

std::string pretty_name(const std::string& name) {
    static const std::map<std::string, std::string> m = {
        {"g2", "g₂"},          {"su3", "su(3)"},         {"su2+su2c", "su(2)⊕su_c(2)"},
        {"u2", "u(2)"},        {"R+su2c", "ℝ⊕su_c(2)"},  {"so3", "so(3)"},
        {"su2", "su(2)"},      {"su2c", "su_c(2)"},      {"so3ir", "so_ir(3)"},
        {"R+su2", "ℝ⊕su(2)"},  {"t2", "t²"},             {"t2tilde", "t̃²"},
        {"t1", "t¹"},          {"t1tilde", "t̃¹"},        {"zero", "0"},
        {"spin7", "spin(7)"},  {"so3diag", "so(3)"}};
    auto it = m.find(name);
    return it == m.end() ? name : it->second;
}

namespace {

using gens::P;
using gens::Q;
using gens::S;

Scalar param(const std::map<std::string, Scalar>& p, const char* key, long dflt) {
    auto it = p.find(key);
    return it == p.end() ? Scalar(dflt) : it->second;
}

}  // namespace

Subalgebra catalog(const std::string& name, const std::map<std::string, Scalar>& params) {
    Subalgebra g;
    g.name = name;
    const LieElement P78 = P(7) + Scalar(2) * P(8);
    const LieElement P78S = P78 - Scalar(4) * S(7);
    const Scalar r = Scalar::sqrt15() * Scalar(1, 5);  // sqrt(3/5)
    if (name == "g2") {
        for (int i = 1; i <= 8; ++i) g.basis.push_back(P(i));
        for (int i = 1; i <= 6; ++i) g.basis.push_back(Q(i));
    } else if (name == "su3") {
        for (int i = 1; i <= 8; ++i) g.basis.push_back(P(i));
    } else if (name == "su2+su2c") {
        g.basis = {P(5), P(6), P(7), P78, Q(5), Q(6)};
    } else if (name == "u2") {
        g.basis = {P78, P(5), P(6), P(7)};
    } else if (name == "R+su2c") {
        g.basis = {P(7), P78, Q(5), Q(6)};
    } else if (name == "so3") {
        g.basis = {P(1) + P(5), P(2) + P(6), P(7) + P(8)};
        g.weights = {Scalar(1, 2), Scalar(1, 2), Scalar(1)};
    } else if (name == "su2") {
        g.basis = {P(5), P(6), P(7)};
    } else if (name == "su2c") {
        g.basis = {P78, Q(5), Q(6)};
    } else if (name == "so3ir") {
        g.basis = {P(5) - r * Q(2), P(6) + r * Q(1), P(7) + Scalar(3) * P(8)};
        g.weights = {Scalar(5, 2), Scalar(5, 2), Scalar(1)};
    } else if (name == "R+su2") {
        g.basis = {P78S, P(5), P(6), P(7)};
    } else if (name == "t2") {
        g.basis = {P(7), P78};
    } else if (name == "t2tilde") {
        g.basis = {P(7), P78S};
    } else if (name == "t1" || name == "t1tilde") {
        Scalar k = param(params, "k", 1), l = param(params, "l", 2);
        if (k.is_zero() && l.is_zero()) throw std::invalid_argument("torus parameters k = l = 0");
        g.params = {{"k", k}, {"l", l}};
        g.basis = {k * P(7) + l * (name == "t1" ? P78 : P78S)};
    } else if (name == "zero") {
    } else if (name == "spin7") {
        g.basis = spin7_basis();
    } else if (name == "so3diag") {
        g.basis = {P(5) + P78, P(6) + Q(5), P(7) + Q(6)};
    } else {
        throw std::invalid_argument("unknown algebra '" + name + "'");
    }
    return g;
}

namespace {
std::vector<Vec> coords2(const std::vector<LieElement>& v) {
    std::vector<Vec> out;
    for (const auto& x : v) out.push_back(to_vec(x, 2));
    return out;
}
}  // namespace

bool bracket_closed(const Subalgebra& g) { return structure_constants(g).has_value(); }

bool contained_in(const Subalgebra& h, const Subalgebra& g) {
    auto gb = span_basis(coords2(g.basis), 28);
    for (const auto& x : h.basis)
        if (!in_span(gb, to_vec(x, 2))) return false;
    return true;
}

bool same_span(const Subalgebra& a, const Subalgebra& b) {
    return span_basis(coords2(a.basis), 28) == span_basis(coords2(b.basis), 28);
}

std::vector<MultiVector> invariant_forms(const Subalgebra& g, int k) {
    const std::size_t n = blades_of_grade(k).size();
    std::vector<Vec> basis;
    if (g.basis.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec v(n);
            v[i] = 1;
            basis.push_back(v);
        }
    } else {
        Matrix stacked;
        for (const auto& x : g.basis) stacked.append_rows(action_matrix(x, k));
        basis = nullspace(stacked);
    }
    basis = span_basis(basis, n);
    std::vector<MultiVector> out;
    for (const auto& v : basis) out.push_back(from_vec(v, k));
    return out;
}

std::vector<Spinor> invariant_spinors(const Subalgebra& g) {
    if (g.basis.empty()) {
        std::vector<Spinor> all;
        for (int i = 1; i <= 16; ++i) all.push_back(spinor_basis(i));
        return all;
    }
    Matrix stacked;
    for (const auto& x : g.basis) stacked.append_rows(clifford_matrix(x));
    return span_basis(nullspace(stacked), 16);
}

namespace {
Subalgebra from_coefficients(const std::vector<Vec>& coeffs, const std::string& name) {
    std::vector<Vec> forms;
    for (const auto& c : coeffs) {
        LieElement x;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) x += c[i] * spin7_basis()[i];
        forms.push_back(to_vec(x, 2));
    }
    Subalgebra g;
    g.name = name;
    for (const auto& v : span_basis(forms, 28)) g.basis.push_back(from_vec(v, 2));
    return g;
}
}  // namespace

Subalgebra iso_algebra(const MultiVector& t) {
    require_grade(t, 3, "iso_algebra");
    std::vector<Vec> cols;
    for (const auto& x : spin7_basis()) cols.push_back(to_vec(act_on_form(x, t), 3));
    Subalgebra g = from_coefficients(nullspace(Matrix::from_columns(cols, 56)), "iso");
    g.name = identify(g).name;
    return g;
}

Subalgebra normalizer(const Subalgebra& g) {
    auto inv = invariant_forms(g, 3);
    std::vector<Vec> w;
    for (const auto& f : inv) w.push_back(to_vec(f, 3));
    // annihilator of span(w)
    std::vector<Vec> ann;
    if (w.empty()) {
        Subalgebra all = catalog("spin7");
        all.name = "normalizer(" + g.name + ")";
        return all;
    }
    ann = nullspace(Matrix::from_rows(w, 56));
    Matrix cond(0, 0);
    std::vector<Vec> rows;
    for (const auto& v : inv) {
        std::vector<Vec> images;
        for (const auto& x : spin7_basis()) images.push_back(to_vec(act_on_form(x, v), 3));
        for (const auto& y : ann) {
            Vec row(spin7_basis().size());
            for (std::size_t i = 0; i < images.size(); ++i) row[i] = dot(y, images[i]);
            rows.push_back(row);
        }
    }
    auto coeffs = nullspace(Matrix::from_rows(rows, spin7_basis().size()));
    return from_coefficients(coeffs, "normalizer(" + g.name + ")");
}

std::optional<StructureConstants> structure_constants(const Subalgebra& g) {
    StructureConstants sc;
    sc.n = g.dim();
    sc.c.assign(sc.n * sc.n * sc.n, Scalar());
    auto b = coords2(g.basis);
    for (std::size_t i = 0; i < sc.n; ++i)
        for (std::size_t j = i + 1; j < sc.n; ++j) {
            auto c = coordinates(b, to_vec(bracket(g.basis[i], g.basis[j]), 2));
            if (!c) return std::nullopt;
            for (std::size_t k = 0; k < sc.n; ++k) {
                sc.at(i, j, k) = (*c)[k];
                sc.at(j, i, k) = -(*c)[k];
            }
        }
    return sc;
}

bool is_antisymmetric(const StructureConstants& sc) {
    for (std::size_t i = 0; i < sc.n; ++i)
        for (std::size_t j = 0; j < sc.n; ++j)
            for (std::size_t k = 0; k < sc.n; ++k)
                if (!(sc.at(i, j, k) == -sc.at(j, i, k))) return false;
    return true;
}

bool satisfies_jacobi(const StructureConstants& sc) {
    const std::size_t n = sc.n;
    // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e) {
                    Scalar s;
                    for (std::size_t d = 0; d < n; ++d) {
                        if (!sc.at(a, b, d).is_zero() && !sc.at(d, c, e).is_zero()) s.addmul(sc.at(a, b, d), sc.at(d, c, e));
                        if (!sc.at(b, c, d).is_zero() && !sc.at(d, a, e).is_zero()) s.addmul(sc.at(b, c, d), sc.at(d, a, e));
                        if (!sc.at(c, a, d).is_zero() && !sc.at(d, b, e).is_zero()) s.addmul(sc.at(c, a, d), sc.at(d, b, e));
                    }
                    if (!s.is_zero()) return false;
                }
    return true;
}

KillingForm killing_form(const StructureConstants& sc) {
    const std::size_t n = sc.n;
    KillingForm kf;
    kf.k = Matrix(n, n);
    // (ad_a)_{kb} = c_abk ; K_ab = sum_{k,m} c_a m k c_b k m
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Scalar s;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m)
                    if (!sc.at(a, m, k).is_zero() && !sc.at(b, k, m).is_zero()) s.addmul(sc.at(a, m, k), sc.at(b, k, m));
            kf.k(a, b) = s;
            kf.k(b, a) = s;
        }
    Diagonalization d = diagonalize_symmetric(kf.k);
    kf.positive = d.positive();
    kf.negative = d.negative();
    kf.degenerate = static_cast<std::size_t>(kf.positive + kf.negative) < n;
    return kf;
}

KillingForm killing_form(const Subalgebra& g) {
    auto sc = structure_constants(g);
    if (!sc) throw std::invalid_argument("killing_form: '" + g.name + "' is not bracket-closed");
    return killing_form(*sc);
}

namespace {
struct Fingerprint {
    std::size_t dim, inv3, spinors;
    int pos, neg;
    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Subalgebra& g) {
    KillingForm kf = killing_form(g);
    return {g.dim(), invariant_forms(g, 3).size(), invariant_spinors(g).size(), kf.positive, kf.negative};
}

const std::vector<std::string>& named_pool() {
    static const std::vector<std::string> pool = {"spin7", "g2",  "su3",  "su2+su2c", "u2",    "R+su2c", "so3",
                                                  "su2",   "su2c", "so3ir", "R+su2", "t2", "t2tilde", "zero"};
    return pool;
}
}  // namespace

Identification identify(const Subalgebra& g) {
    for (const auto& n : named_pool()) {
        Subalgebra c = catalog(n);
        if (c.dim() == g.dim() && same_span(c, g)) return {n, "span"};
    }
    if (!bracket_closed(g)) return {"unnamed", "none"};
    static std::mutex mu;
    static std::vector<std::pair<std::string, Fingerprint>> prints;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (prints.empty())
            for (const auto& n : named_pool()) prints.emplace_back(n, fingerprint(catalog(n)));
    }
    Fingerprint f = fingerprint(g);
    std::string hit;
    int hits = 0;
    for (const auto& [n, p] : prints)
        if (p == f) {
            hit = n;
            ++hits;
        }
    if (hits == 1) return {hit, "invariants"};
    return {"unnamed", "none"};
}

}  // namespace spin7
