#pragma once
// Exterior algebra of R^8 with the standard orthonormal basis e_1..e_8.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spin7/linalg.hpp"
#include "spin7/scalar.hpp"

namespace spin7 {

inline constexpr int kDim = 8;

// bit i-1 set <=> e_i present
using Blade = std::uint16_t;

int blade_grade(Blade b);
std::vector<int> blade_indices(Blade b);  // 1-based, increasing
Blade make_blade(std::initializer_list<int> idx);
Blade make_blade(const std::vector<int>& idx);
std::string blade_name(Blade b);  // "e_127"; "1" for the empty blade

// All blades of grade k in lexicographic order of their index tuples.
const std::vector<Blade>& blades_of_grade(int k);
// position of a grade-k blade inside blades_of_grade(k)
std::size_t blade_position(Blade b);

class MultiVector {
public:
    MultiVector() = default;
    MultiVector(const Scalar& s);  // NOLINT: grade-0 embedding
    static MultiVector blade(Blade b, const Scalar& c = 1);
    static MultiVector e(std::initializer_list<int> idx, const Scalar& c = 1);

    const std::map<Blade, Scalar>& terms() const { return terms_; }
    Scalar coeff(Blade b) const;
    void add(Blade b, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // grade if homogeneous and nonzero, -1 otherwise
    int grade() const;
    // zero counts as homogeneous of every grade
    bool is_homogeneous(int k) const;
    MultiVector grade_part(int k) const;

    MultiVector& operator+=(const MultiVector& o);
    MultiVector& operator-=(const MultiVector& o);
    MultiVector& operator*=(const Scalar& s);
    MultiVector operator-() const;
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    friend MultiVector operator*(const Scalar& s, MultiVector a) { return a *= s; }
    friend MultiVector operator*(MultiVector a, const Scalar& s) { return a *= s; }
    friend bool operator==(const MultiVector&, const MultiVector&) = default;

    // "3*e_127 - e_345 + (1 + sqrt3)*e_8", ordered by grade then index tuple
    std::string str() const;

private:
    std::map<Blade, Scalar> terms_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);
// interior product with a 1-form; throws std::invalid_argument otherwise
MultiVector contract(const MultiVector& x, const MultiVector& a);
MultiVector contract(int i, const MultiVector& a);  // e_i contracted into a
MultiVector hodge(const MultiVector& a);
Scalar inner(const MultiVector& a, const MultiVector& b);
inline Scalar norm2(const MultiVector& a) { return inner(a, a); }

// (1/2) sum_i (e_i _| a) ^ (e_i _| b); sigma_t(T) = sigma_pair(T, T)
MultiVector sigma_pair(const MultiVector& a, const MultiVector& b);
MultiVector sigma_t(const MultiVector& t);

// coordinates in blades_of_grade(k)
Vec to_vec(const MultiVector& a, int k);
MultiVector from_vec(const Vec& v, int k);

MultiVector parse_form(std::string_view text);
MultiVector require_grade(const MultiVector& a, int k, const char* what);

MultiVector random_form(std::mt19937_64& rng, int k, int range = 3, bool irrational = false);

namespace forms {
const MultiVector& Z();
const MultiVector& Z1();
const MultiVector& Z2();
const MultiVector& Z3();
const MultiVector& D();
const MultiVector& D1();
const MultiVector& D2();
const MultiVector& D3();
const MultiVector& D4();
const MultiVector& D5();
const MultiVector& Dbar();
const MultiVector& phi();
const MultiVector& Phi();
const MultiVector& vol();
MultiVector e(int i);  // basis 1-form
}  // namespace forms

}  // namespace spin7
