#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spin7/exterior.hpp"

using namespace spin7;
using oracle::blade_of;

namespace {
MultiVector e(std::vector<int> idx, long c = 1) {
    MultiVector m;
    int s = oracle::perm_sign(idx);
    m.add(blade_of(idx), Scalar(s * c));
    return m;
}

// the fundamental 4-form typed out by hand: phi = (Z ^ e7 + D) ^ e8 plus its dual
MultiVector phi_by_hand() {
    return e({1, 2, 7, 8}) + e({3, 4, 7, 8}) + e({5, 6, 7, 8}) + e({2, 4, 6, 8}) - e({2, 3, 5, 8}) -
           e({1, 4, 5, 8}) - e({1, 3, 6, 8});
}

int random_grade(std::mt19937_64& rng) { return static_cast<int>(rng() % 9); }
}  // namespace

TEST_CASE("blade tables") {
    const int binom[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    for (int k = 0; k <= 8; ++k) {
        const auto& bl = blades_of_grade(k);
        CHECK(static_cast<int>(bl.size()) == binom[k]);
        for (std::size_t i = 0; i < bl.size(); ++i) {
            CHECK(blade_grade(bl[i]) == k);
            CHECK(blade_position(bl[i]) == i);
        }
    }
    CHECK(blade_name(make_blade({1, 2, 7})) == "e_127");
    CHECK_THROWS_AS((void)make_blade({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)make_blade({9}), std::invalid_argument);
}

TEST_CASE("wedge, Hodge and contraction agree with the permutation-sign oracle") {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 40; ++n) {
        int k = random_grade(rng), l = random_grade(rng);
        MultiVector a = oracle::random_form(rng, k), b = oracle::random_form(rng, l);
        CHECK(wedge(a, b) == oracle::wedge(a, b));
        CHECK(hodge(a) == oracle::hodge(a));
        int i = 1 + static_cast<int>(rng() % 8);
        CHECK(contract(i, a) == oracle::contract(i, a));
        CHECK(inner(a, b) == oracle::inner(a, b));
    }
}

TEST_CASE("algebraic identities on random forms") {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 30; ++n) {
        int k = random_grade(rng), l = random_grade(rng);
        MultiVector a = random_form(rng, k), b = random_form(rng, l);
        // graded commutativity
        CHECK(wedge(a, b) == ((k * l) % 2 ? -wedge(b, a) : wedge(b, a)));
        // ** = (-1)^(k(8-k)) = (-1)^k
        CHECK(hodge(hodge(a)) == (k % 2 ? -a : a));
        // contraction is an anti-derivation
        for (int i = 1; i <= 8; ++i) {
            MultiVector lhs = contract(i, wedge(a, b));
            MultiVector rhs = wedge(contract(i, a), b) + (k % 2 ? -wedge(a, contract(i, b)) : wedge(a, contract(i, b)));
            CHECK(lhs == rhs);
        }
        // a ^ *b = <a, b> vol for equal degree
        MultiVector c = random_form(rng, k);
        CHECK(wedge(a, hodge(c)) == inner(a, c) * forms::vol());
    }
}

TEST_CASE("contraction with a general 1-form is linear in the vector") {
    std::mt19937_64 rng(2);
    MultiVector t = random_form(rng, 3);
    MultiVector x = Scalar(2) * forms::e(1) - forms::e(5);
    CHECK(contract(x, t) == Scalar(2) * contract(1, t) - contract(5, t));
    CHECK_THROWS_AS((void)contract(t, t), std::invalid_argument);
}

TEST_CASE("named forms") {
    CHECK(forms::Z() == e({1, 2}) + e({3, 4}) + e({5, 6}));
    CHECK(forms::D() == e({2, 4, 6}) - e({2, 3, 5}) - e({1, 4, 5}) - e({1, 3, 6}));
    CHECK(forms::phi() == phi_by_hand());
    MultiVector Phi = phi_by_hand() + oracle::hodge(phi_by_hand());
    CHECK(forms::Phi() == Phi);
    CHECK(Phi.size() == 14);
    CHECK(oracle::hodge(Phi) == Phi);
    CHECK(oracle::wedge(Phi, Phi) == Scalar(14) * e({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(norm2(wedge(forms::Z(), forms::e(7)) + forms::D()) == Scalar(7));
    CHECK(norm2(Phi) == Scalar(14));
}

TEST_CASE("D3 - D4 has no Lambda^3_8 part") {
    MultiVector t = forms::D3() - forms::D4();
    CHECK(oracle::wedge(forms::Phi(), t).is_zero());
    CHECK_FALSE(oracle::wedge(forms::Phi(), forms::D()).is_zero());
}

TEST_CASE("sum_i (e_i _| T) ^ (e_i _| (Phi ^ T)) = 0") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 10; ++n) {
        MultiVector t = oracle::random_form(rng, 3);
        MultiVector pt = oracle::wedge(forms::Phi(), t), s;
        for (int i = 1; i <= 8; ++i) s += oracle::wedge(oracle::contract(i, t), oracle::contract(i, pt));
        CHECK(s.is_zero());
    }
}

TEST_CASE("sigma_T = (1/2) sum_i (e_i _| T) ^ (e_i _| T)") {
    std::mt19937_64 rng(8);
    for (int n = 0; n < 10; ++n) {
        MultiVector t = oracle::random_form(rng, 3);
        MultiVector s;
        for (int i = 1; i <= 8; ++i) s += oracle::wedge(oracle::contract(i, t), oracle::contract(i, t));
        CHECK(sigma_t(t) == Scalar(1, 2) * s);
    }
    // a 3-form supported on three indices has sigma = 0
    CHECK(sigma_t(e({5, 6, 7})).is_zero());
}

TEST_CASE("coordinate vectors round trip") {
    std::mt19937_64 rng(9);
    for (int k = 0; k <= 8; ++k) {
        MultiVector a = random_form(rng, k, 3, true);
        CHECK(from_vec(to_vec(a, k), k) == a);
    }
}

TEST_CASE("form parser") {
    CHECK(parse_form("e_135 - e_245 + e_146 + e_236") == -(forms::D3() - forms::D4()));
    CHECK(parse_form("e_21") == -e({1, 2}));
    CHECK(parse_form("2*e_12 + sqrt3/2*e_34") == Scalar(2) * e({1, 2}) + (Scalar::sqrt3() / Scalar(2)) * e({3, 4}));
    CHECK(parse_form("e_12 - e_12").is_zero());
    auto offset_of = [](const char* s) -> long {
        try {
            (void)parse_form(s);
        } catch (const ParseError& err) {
            return static_cast<long>(err.offset);
        }
        return -1;
    };
    CHECK(offset_of("e_12 + e_19") == 7);
    CHECK(offset_of("e_12 + e_33") == 7);
    CHECK(offset_of("e_12 * e_34") == 5);
    CHECK(offset_of("e_12 + ") == 7);
    CHECK(offset_of("e_12 $") == 5);
    CHECK_THROWS_AS((void)require_grade(parse_form("e_12 + e_3"), 2, "x"), std::invalid_argument);
}
