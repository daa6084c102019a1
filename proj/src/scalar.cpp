#include "spin7/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "spin7/detail/lexer.hpp"

namespace spin7 {

namespace {

// a + b*sqrt3
struct Q3 {
    mpq_class a, b;
};

int sign_q3(const Q3& x) {
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    mpq_class n = x.a * x.a - 3 * x.b * x.b;
    return sa * sgn(n);
}

Q3 mul_q3(const Q3& x, const Q3& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}

Q3 inv_q3(const Q3& x) {
    mpq_class n = x.a * x.a - 3 * x.b * x.b;
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(sqrt3,sqrt5)");
    return {x.a / n, -x.b / n};
}

std::optional<mpq_class> sqrt_q(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn = sqrt(n), rd = sqrt(d);
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<Q3> sqrt_q3(const Q3& x) {
    if (sgn(x.b) == 0) {
        if (auto r = sqrt_q(x.a)) return Q3{*r, 0};
        if (auto r = sqrt_q(x.a / 3)) return Q3{0, *r};
        return std::nullopt;
    }
    // (c + d sqrt3)^2 = x  =>  c^2 = (a +- sqrt(a^2 - 3 b^2)) / 2, d = b / 2c
    auto r = sqrt_q(x.a * x.a - 3 * x.b * x.b);
    if (!r) return std::nullopt;
    for (int s : {1, -1}) {
        auto c = sqrt_q((x.a + s * *r) / 2);
        if (!c || sgn(*c) == 0) continue;
        Q3 cand{*c, x.b / (2 * *c)};
        Q3 sq = mul_q3(cand, cand);
        if (sq.a == x.a && sq.b == x.b) return cand;
    }
    return std::nullopt;
}

std::string q_str(const mpq_class& q) {
    return q.get_str();
}

}  // namespace

Scalar::Scalar(long num, long den) {
    c_[0] = mpq_class(num, den);
    c_[0].canonicalize();
}

Scalar Scalar::from_coords(mpq_class a, mpq_class b, mpq_class c, mpq_class d) {
    Scalar s;
    s.c_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
    for (auto& x : s.c_) x.canonicalize();
    return s;
}

Scalar Scalar::sqrt3() { return from_coords(0, 1, 0, 0); }
Scalar Scalar::sqrt5() { return from_coords(0, 0, 1, 0); }
Scalar Scalar::sqrt15() { return from_coords(0, 0, 0, 1); }

int Scalar::sign() const {
    // x = u + v sqrt5 with u, v in Q(sqrt3)
    Q3 u{c_[0], c_[1]}, v{c_[2], c_[3]};
    int su = sign_q3(u), sv = sign_q3(v);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    Q3 uu = mul_q3(u, u), vv = mul_q3(v, v);
    Q3 n{uu.a - 5 * vv.a, uu.b - 5 * vv.b};
    return su * sign_q3(n);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt3,sqrt5)");
    if (is_rational()) return Scalar(mpq_class(1 / c_[0]));
    Q3 u{c_[0], c_[1]}, v{c_[2], c_[3]};
    Q3 uu = mul_q3(u, u), vv = mul_q3(v, v);
    Q3 ni = inv_q3(Q3{uu.a - 5 * vv.a, uu.b - 5 * vv.b});
    Q3 p = mul_q3(u, ni), q = mul_q3(v, ni);
    return from_coords(p.a, p.b, -q.a, -q.b);
}

double Scalar::approx() const {
    return c_[0].get_d() + c_[1].get_d() * std::sqrt(3.0) + c_[2].get_d() * std::sqrt(5.0) +
           c_[3].get_d() * std::sqrt(15.0);
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (std::size_t i = 0; i < 4; ++i)
        if (sgn(c_[i]) != 0) r.c_[i] = -c_[i];
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (std::size_t i = 0; i < 4; ++i)
        if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (std::size_t i = 0; i < 4; ++i)
        if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.is_rational()) {
        for (auto& x : c_)
            if (sgn(x) != 0) x *= o.c_[0];
        return *this;
    }
    Scalar r;
    r.addmul(*this, o);
    return *this = std::move(r);
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    if (a.is_rational() && b.is_rational()) {
        if (sgn(x[0]) != 0 && sgn(y[0]) != 0) c_[0] += x[0] * y[0];
        return;
    }
    // basis products: s3*s3=3, s5*s5=5, s15*s15=15, s3*s5=s15, s3*s15=3 s5, s5*s15=5 s3
    static constexpr int target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int factor[4][4] = {{1, 1, 1, 1}, {1, 3, 1, 3}, {1, 1, 5, 5}, {1, 3, 5, 15}};
    mpq_class t;
    for (int i = 0; i < 4; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (sgn(y[j]) == 0) continue;
            t = x[i] * y[j];
            if (factor[i][j] != 1) t *= factor[i][j];
            c_[target[i][j]] += t;
        }
    }
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) {
        if (sgn(a.c_[0]) != 0 && sgn(b.c_[0]) != 0) c_[0] -= a.c_[0] * b.c_[0];
        return;
    }
    addmul(-a, b);
}

bool Scalar::is_monomial() const {
    int nz = 0;
    for (const auto& x : c_) nz += sgn(x) != 0;
    return nz <= 1;
}

std::string Scalar::str() const {
    static const char* names[4] = {"", "sqrt3", "sqrt5", "sqrt15"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const mpq_class& q = c_[static_cast<std::size_t>(i)];
        if (sgn(q) == 0) continue;
        mpq_class a = ::abs(q);
        std::string mag;
        if (i == 0)
            mag = q_str(a);
        else if (a == 1)
            mag = names[i];
        else
            mag = q_str(a) + "*" + names[i];
        if (out.empty())
            out = (sgn(q) < 0 ? "-" : "") + mag;
        else
            out += (sgn(q) < 0 ? " - " : " + ") + mag;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar parse_scalar(std::string_view text) {
    detail::Parser p(text, false);
    Scalar v = p.parse_scalar_expr();
    p.expect_end();
    return v;
}

std::optional<Scalar> sqrt_exact(const Scalar& x) {
    int s = x.sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return Scalar(0);
    Q3 u{x.coord(0), x.coord(1)}, v{x.coord(2), x.coord(3)};
    std::optional<Scalar> root;
    if (sgn(v.a) == 0 && sgn(v.b) == 0) {
        if (auto r = sqrt_q3(u)) {
            root = Scalar::from_coords(r->a, r->b, 0, 0);
        } else if (auto t = sqrt_q3(Q3{u.a / 5, u.b / 5})) {
            root = Scalar::from_coords(0, 0, t->a, t->b);
        }
    } else {
        // (s + t sqrt5)^2 = u + v sqrt5: s^2 = (u +- sqrt(u^2 - 5 v^2)) / 2, t = v / 2s
        Q3 uu = mul_q3(u, u), vv = mul_q3(v, v);
        auto n = sqrt_q3(Q3{uu.a - 5 * vv.a, uu.b - 5 * vv.b});
        if (n) {
            for (int sg : {1, -1}) {
                auto sr = sqrt_q3(Q3{(u.a + sg * n->a) / 2, (u.b + sg * n->b) / 2});
                if (!sr || (sgn(sr->a) == 0 && sgn(sr->b) == 0)) continue;
                Q3 t = mul_q3(v, inv_q3(Q3{2 * sr->a, 2 * sr->b}));
                Scalar cand = Scalar::from_coords(sr->a, sr->b, t.a, t.b);
                if (cand * cand == x) {
                    root = cand;
                    break;
                }
            }
        }
    }
    if (root && root->sign() < 0) root = -*root;
    if (root && !(*root * *root == x)) return std::nullopt;
    return root;
}

Scalar random_scalar(std::mt19937_64& rng, int range, int den, bool irrational) {
    std::uniform_int_distribution<int> num(-range, range), dd(1, den);
    auto q = [&] {
        mpq_class r(num(rng), dd(rng));
        r.canonicalize();
        return r;
    };
    if (!irrational) return Scalar(q());
    return Scalar::from_coords(q(), q(), q(), q());
}

}  // namespace spin7
