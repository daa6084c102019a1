#include "spin7/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "spin7/detail/lexer.hpp"

namespace spin7 {

int blade_grade(Blade b) { return std::popcount(static_cast<unsigned>(b)); }

std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    for (int i = 0; i < kDim; ++i)
        if (b & (1u << i)) out.push_back(i + 1);
    return out;
}

Blade make_blade(const std::vector<int>& idx) {
    Blade b = 0;
    for (int i : idx) {
        if (i < 1 || i > kDim) throw std::invalid_argument("index out of range 1..8");
        if (b & (1u << (i - 1))) throw std::invalid_argument("repeated index in blade");
        b = static_cast<Blade>(b | (1u << (i - 1)));
    }
    return b;
}

Blade make_blade(std::initializer_list<int> idx) { return make_blade(std::vector<int>(idx)); }

std::string blade_name(Blade b) {
    if (b == 0) return "1";
    std::string s = "e_";
    for (int i : blade_indices(b)) s += static_cast<char>('0' + i);
    return s;
}

namespace {

std::vector<std::vector<Blade>> build_grades() {
    std::vector<std::vector<Blade>> g(kDim + 1);
    for (unsigned m = 0; m < (1u << kDim); ++m) g[static_cast<std::size_t>(std::popcount(m))].push_back(static_cast<Blade>(m));
    for (auto& v : g)
        std::sort(v.begin(), v.end(), [](Blade a, Blade b) { return blade_indices(a) < blade_indices(b); });
    return g;
}

const std::vector<std::vector<Blade>>& grades() {
    static const auto g = build_grades();
    return g;
}

// sign of e_A ^ e_B for disjoint A, B: (-1)^{#(a in A, b in B, a > b)}
int wedge_sign(Blade a, Blade b) {
    int swaps = 0;
    for (int i = 0; i < kDim; ++i)
        if (b & (1u << i)) swaps += std::popcount(static_cast<unsigned>(a) >> (i + 1));
    return (swaps & 1) ? -1 : 1;
}

}  // namespace

const std::vector<Blade>& blades_of_grade(int k) { return grades().at(static_cast<std::size_t>(k)); }

std::size_t blade_position(Blade b) {
    static const auto pos = [] {
        std::vector<std::size_t> p(1u << kDim);
        for (int k = 0; k <= kDim; ++k) {
            const auto& v = blades_of_grade(k);
            for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = i;
        }
        return p;
    }();
    return pos[b];
}

MultiVector::MultiVector(const Scalar& s) {
    if (!s.is_zero()) terms_.emplace(0, s);
}

MultiVector MultiVector::blade(Blade b, const Scalar& c) {
    MultiVector m;
    m.add(b, c);
    return m;
}

MultiVector MultiVector::e(std::initializer_list<int> idx, const Scalar& c) {
    // allow unsorted indices: reorder with sign
    std::vector<int> v(idx);
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) sign = -sign;
    return blade(make_blade(v), sign > 0 ? c : -c);
}

Scalar MultiVector::coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar() : it->second;
}

void MultiVector::add(Blade b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiVector::grade() const {
    if (terms_.empty()) return -1;
    int g = blade_grade(terms_.begin()->first);
    for (const auto& [b, c] : terms_)
        if (blade_grade(b) != g) return -1;
    return g;
}

bool MultiVector::is_homogeneous(int k) const {
    for (const auto& [b, c] : terms_)
        if (blade_grade(b) != k) return false;
    return true;
}

MultiVector MultiVector::grade_part(int k) const {
    MultiVector r;
    for (const auto& [b, c] : terms_)
        if (blade_grade(b) == k) r.terms_.emplace(b, c);
    return r;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

MultiVector& MultiVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
}

MultiVector MultiVector::operator-() const {
    MultiVector r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
}

std::string MultiVector::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Blade, Scalar>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int ga = blade_grade(a.first), gb = blade_grade(b.first);
        if (ga != gb) return ga < gb;
        return blade_indices(a.first) < blade_indices(b.first);
    });
    std::string out;
    for (const auto& [b, c] : v) {
        bool neg = c.is_monomial() && c.sign() < 0;
        Scalar mag = neg ? -c : c;
        std::string body;
        if (b == 0) {
            body = mag.is_monomial() ? mag.str() : "(" + mag.str() + ")";
        } else if (mag.is_one()) {
            body = blade_name(b);
        } else {
            body = (mag.is_monomial() ? mag.str() : "(" + mag.str() + ")") + "*" + blade_name(b);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    MultiVector r;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            if (ba & bb) continue;
            Scalar c = ca * cb;
            r.add(static_cast<Blade>(ba | bb), wedge_sign(ba, bb) > 0 ? c : -c);
        }
    return r;
}

MultiVector contract(int i, const MultiVector& a) {
    MultiVector r;
    const unsigned bit = 1u << (i - 1);
    for (const auto& [b, c] : a.terms()) {
        if (!(b & bit)) continue;
        int before = std::popcount(static_cast<unsigned>(b) & (bit - 1));
        r.add(static_cast<Blade>(b & ~bit), (before & 1) ? -c : c);
    }
    return r;
}

MultiVector contract(const MultiVector& x, const MultiVector& a) {
    if (!x.is_homogeneous(1)) throw std::invalid_argument("contract: first argument must be a 1-form");
    MultiVector r;
    for (const auto& [b, c] : x.terms()) {
        int i = blade_indices(b).front();
        r += c * contract(i, a);
    }
    return r;
}

MultiVector hodge(const MultiVector& a) {
    MultiVector r;
    constexpr Blade all = (1u << kDim) - 1;
    for (const auto& [b, c] : a.terms()) {
        Blade comp = static_cast<Blade>(all & ~b);
        r.add(comp, wedge_sign(b, comp) > 0 ? c : -c);
    }
    return r;
}

Scalar inner(const MultiVector& a, const MultiVector& b) {
    Scalar s;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& big = a.size() <= b.size() ? b : a;
    for (const auto& [bl, c] : small.terms()) {
        auto it = big.terms().find(bl);
        if (it != big.terms().end()) s.addmul(c, it->second);
    }
    return s;
}

MultiVector sigma_pair(const MultiVector& a, const MultiVector& b) {
    MultiVector r;
    for (int i = 1; i <= kDim; ++i) r += wedge(contract(i, a), contract(i, b));
    return Scalar(1, 2) * r;
}

MultiVector sigma_t(const MultiVector& t) { return sigma_pair(t, t); }

Vec to_vec(const MultiVector& a, int k) {
    Vec v(blades_of_grade(k).size());
    for (const auto& [b, c] : a.terms()) {
        if (blade_grade(b) != k) throw std::invalid_argument("to_vec: form is not homogeneous of the requested grade");
        v[blade_position(b)] = c;
    }
    return v;
}

MultiVector from_vec(const Vec& v, int k) {
    const auto& bl = blades_of_grade(k);
    MultiVector r;
    for (std::size_t i = 0; i < v.size(); ++i) r.add(bl[i], v[i]);
    return r;
}

MultiVector parse_form(std::string_view text) {
    // the parser has already rejected bad indices, with their offsets
    detail::Parser p(text, true);
    MultiVector r;
    p.parse_sum([&](const Scalar& c, const std::string& blade) {
        if (blade.empty()) {
            r.add(0, c);
            return;
        }
        std::vector<int> idx;
        for (char ch : blade) idx.push_back(ch - '0');
        int sign = 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) sign = -sign;
        r.add(make_blade(idx), sign > 0 ? c : -c);
    });
    p.expect_end();
    return r;
}

MultiVector require_grade(const MultiVector& a, int k, const char* what) {
    if (!a.is_homogeneous(k))
        throw std::invalid_argument(std::string(what) + ": expected a homogeneous " + std::to_string(k) + "-form");
    return a;
}

MultiVector random_form(std::mt19937_64& rng, int k, int range, bool irrational) {
    MultiVector r;
    for (Blade b : blades_of_grade(k)) r.add(b, random_scalar(rng, range, 1, irrational));
    return r;
}

namespace forms {

MultiVector e(int i) { return MultiVector::e({i}); }

namespace {
MultiVector E(std::initializer_list<int> idx, long c = 1) { return MultiVector::e(idx, Scalar(c)); }
}  // namespace

const MultiVector& Z1() { static const auto v = E({1, 2}) + E({3, 4}); return v; }
const MultiVector& Z2() { static const auto v = E({5, 6}); return v; }
const MultiVector& Z3() { static const auto v = E({1, 2}) - E({3, 4}); return v; }
const MultiVector& Z() { static const auto v = Z1() + Z2(); return v; }
const MultiVector& D1() { static const auto v = E({2, 4, 6}) - E({1, 4, 5}); return v; }
const MultiVector& D2() { static const auto v = -E({2, 3, 5}) - E({1, 3, 6}); return v; }
const MultiVector& D3() { static const auto v = -E({1, 3, 5}) + E({2, 4, 5}); return v; }
const MultiVector& D4() { static const auto v = E({1, 4, 6}) + E({2, 3, 6}); return v; }
const MultiVector& D5() { static const auto v = E({1, 2, 3}) - E({3, 5, 6}); return v; }
const MultiVector& D() { static const auto v = D1() + D2(); return v; }
const MultiVector& Dbar() { static const auto v = D3() + D4(); return v; }
const MultiVector& phi() {
    static const auto v = wedge(wedge(Z(), e(7)) + D(), e(8));
    return v;
}
const MultiVector& Phi() { static const auto v = phi() + hodge(phi()); return v; }
const MultiVector& vol() { static const auto v = MultiVector::blade(0xFF); return v; }

}  // namespace forms

}  // namespace spin7
