#pragma once
// Exact arithmetic in Q(sqrt3, sqrt5), coordinates over {1, sqrt3, sqrt5, sqrt15}.

#include <array>
#include <compare>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spin7 {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error("at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long n) { c_[0] = n; }  // NOLINT: implicit on purpose, integer literals everywhere
    Scalar(const mpq_class& q) { c_[0] = q; }  // NOLINT
    Scalar(long num, long den);

    static Scalar from_coords(mpq_class a, mpq_class b, mpq_class c, mpq_class d);
    static Scalar sqrt3();
    static Scalar sqrt5();
    static Scalar sqrt15();

    const mpq_class& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
    }
    bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    // exact sign of the real number (the embedding with all roots positive)
    int sign() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    Scalar inverse() const;
    double approx() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    // this += a*b without temporaries for the rational case
    void addmul(const Scalar& a, const Scalar& b);
    void submul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
    }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    // "p/q + r/s*sqrt3 + t/u*sqrt5 + v/w*sqrt15", zero terms dropped, "0" for zero
    std::string str() const;
    // true when str() is a single signed monomial (safe to juxtapose with '*')
    bool is_monomial() const;

private:
    std::array<mpq_class, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar parse_scalar(std::string_view text);

// Square root inside the field if one exists; returns the non-negative root.
std::optional<Scalar> sqrt_exact(const Scalar& x);

// Small random element: rational coordinates with numerators in [-range, range] and
// denominators in [1, den]; irrational coordinates only when `irrational` is set.
Scalar random_scalar(std::mt19937_64& rng, int range = 5, int den = 3, bool irrational = true);

}  // namespace spin7
