// Suites behind `verify-all`.  Random sampling is driven by the seed only, so two runs with
// the same seed print the same bytes.
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "spin7/clifford.hpp"

namespace spin7::cli {

namespace {

Check check(std::string name, bool pass, std::string detail = {}) { return {std::move(name), pass, std::move(detail)}; }

Suite clifford_suite() {
    Suite s{"clifford", {}, {}};
    bool rel = true;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            Matrix a = clifford_matrix(forms::e(i)), b = clifford_matrix(forms::e(j));
            Matrix ac = a * b + b * a;
            Matrix want = scale(Matrix::identity(16), Scalar(i == j ? -2 : 0));
            rel = rel && ac == want;
        }
    s.checks.push_back(check("e_i e_j + e_j e_i = -2 delta_ij", rel));
    s.checks.push_back(check("Phi . Psi_0 = -14 Psi_0", clifford_apply(forms::Phi(), psi0()) == scaled(psi0(), Scalar(-14))));
    return s;
}

Suite exterior_suite(std::mt19937_64& rng) {
    Suite s{"exterior", {}, {}};
    s.checks.push_back(check("*Phi = Phi", hodge(forms::Phi()) == forms::Phi()));
    s.checks.push_back(check("Phi ^ Phi = 14 vol", wedge(forms::Phi(), forms::Phi()) == Scalar(14) * forms::vol()));
    bool ss = true;
    for (int n = 0; n < 20; ++n) {
        int k = static_cast<int>(rng() % 9);
        MultiVector a = random_form(rng, k);
        ss = ss && hodge(hodge(a)) == (k % 2 ? -a : a);
    }
    s.checks.push_back(check("** = (-1)^k on 20 random forms", ss));
    return s;
}

Suite liealg_suite(std::mt19937_64& rng) {
    Suite s{"liealg", {}, {}};
    s.checks.push_back(check("dim spin(7) = 21", catalog("spin7").dim() == 21));
    bool agree = true;
    for (int n = 0; n < 200; ++n) {
        MultiVector w = random_form(rng, 2, 2);
        if (n % 2 == 0) {  // half the samples inside spin(7)
            w = MultiVector();
            for (const auto& b : spin7_basis()) w = w + Scalar(static_cast<long>(rng() % 5) - 2) * b;
        }
        agree = agree && in_spin7_equations(w) == in_spin7_clifford(w);
    }
    s.checks.push_back(check("seven equations = Clifford kernel on 200 random 2-forms", agree));
    bool closed = true;
    std::string bad;
    for (const auto& n : nonabelian_catalog_names()) {
        Subalgebra g = catalog(n);
        if (!bracket_closed(g) || !contained_in(g, catalog("spin7"))) closed = false, bad += n + " ";
    }
    s.checks.push_back(check("catalog closed and inside spin(7)", closed, bad));
    return s;
}

Suite spin7_suite(std::mt19937_64& rng) {
    Suite s{"spin7", {}, {}};
    bool fam = true;
    std::string bad;
    for (const auto& smp : report::family_samples()) {
        const TorsionFamily& f = torsion_family(smp.family);
        RicciResult rr = ricci_solver(f.torsion(smp.params), catalog(f.iso));
        if (!rr.consistent || !(rr.ric == closed_form_ricci(f.id, smp.params).diag)) fam = false, bad += f.id + " ";
    }
    s.checks.push_back(check("Ricci of every family sample = closed form", fam, bad));
    {
        MultiVector t = torsion_family("5.1").torsion({1, 0, 0});
        bool split = ricci_solver(t, catalog("su2+su2c")).consistent && ricci_solver(t, catalog("g2")).consistent;
        for (const char* h : {"su2", "u2", "su3"}) split = split && !ricci_solver(t, catalog(h)).consistent;
        s.checks.push_back(check("g2 point: su2, u2, su3 inconsistent; su2+su2c, g2 consistent", split));
    }
    bool lee = true, sc = true;
    int sigma_holds = 0;
    const int n = 20;
    for (int k = 0; k < n; ++k) {
        MultiVector t = random_form(rng, 3, 2);
        lee = lee && norm2(lee_form(t)) == Scalar(36, 7) * norm2_t8(t);
        try {
            (void)scal_pair(t);
        } catch (const std::logic_error&) {
            sc = false;
        }
        sigma_holds += sigma_identity_check(t).holds_psi0;
    }
    s.checks.push_back(check("|theta|^2 = 36/7 |T_8|^2 on random T", lee));
    s.checks.push_back(check("scalar curvature pair consistent on random T", sc));
    bool fam_sigma = true;
    for (const auto& smp : report::family_samples())
        fam_sigma = fam_sigma && sigma_identity_check(torsion_family(smp.family).torsion(smp.params)).holds_psi0;
    s.checks.push_back(check("sigma identity with Psi_0 on every family sample", fam_sigma));
    s.info["sigma_identity_psi0_random"] = {{"holds", sigma_holds}, {"of", n}};
    return s;
}

Suite curvature_suite() {
    Suite s{"curvature", {}, {}};
    for (const auto& smp : report::curvature_samples()) {
        report::Json j = report::curvature_sample(smp);
        bool ok = true;
        std::string failed;
        for (const auto& [k, v] : j["checks"].items())
            if (k != "plain_bianchi" && !v.get<bool>()) ok = false, failed += k + " ";
        std::ostringstream name;
        name << smp.case_id << " / " << smp.family << " " << j["params"].dump();
        s.checks.push_back(check(name.str(), ok, failed));
    }
    bool k0 = true;
    for (const char* h : {"R+su2c", "su2c", "so3", "so3ir", "t2", "t1[k,l!=0]", "zero"})
        k0 = k0 && bianchi_space(hol_candidate(h).h).dim == 0;
    bool kp = true;
    for (const char* h : {"g2", "su3", "su2+su2c", "u2", "su2", "R+su2"}) kp = kp && bianchi_space(catalog(h)).dim > 0;
    s.checks.push_back(check("K(h) = 0 exactly for the torus-like list", k0));
    s.checks.push_back(check("K(h) > 0 for the algebras containing su(2)", kp));
    return s;
}

Suite classify_suite() {
    Suite s{"classify", {}, {}};
    auto zero = zero_tensor(catalog("zero"));
    auto ex1 = reconstruct_lie_algebra(torsion_family("5.1").torsion({-1, 1, 0}), zero);
    s.checks.push_back(check("example 1 Jacobi", ex1.jacobi && ex1.antisymmetric));
    for (int sg : {1, -1}) {
        auto ex2 = reconstruct_lie_algebra(example2_alpha(sg), zero);
        bool ok = ex2.jacobi && !ex2.killing.degenerate && basis_match(ex2.sc, example2_su3_basis(sg)).has_value();
        s.checks.push_back(check(sg > 0 ? "example 2 (+) su(3)" : "example 2 (-) su(3)", ok));
    }
    auto t2 = reconstruct_lie_algebra(torsion_family("5.2-I").torsion({1}), build_rc("5.2.2", "5.2-I", {1}),
                                      {1, 2, 3, 4, 5, 6, 7});
    s.checks.push_back(check("t2 example Jacobi, Killing non-degenerate", t2.jacobi && !t2.killing.degenerate));
    s.checks.push_back(check("(1/2) w^w + Re F = Phi", phi_from_hermitian().phi == forms::Phi()));
    using namespace forms;
    MultiVector vp = e(7) + e(8), vm = -e(7) + e(8);
    auto sp = splitting_check(torsion_family("5.3-I").torsion({1, Scalar(-3, 7), Scalar(10, 7)}),
                              {e(1), e(2), e(3), e(4), vp}, {e(5), e(6), vm});
    s.checks.push_back(check("type I splitting with the printed T+-",
                             sp.holds && sp.t_plus == wedge(Z1(), vp) && sp.t_minus == Scalar(5) * wedge(Z2(), vm)));
    return s;
}

Suite golden_suite(const std::string& dir) {
    Suite s{"golden", {}, {}};
    for (const auto& [name, content] : golden_files()) {
        std::ifstream in(dir + "/" + name, std::ios::binary);
        if (!in) {
            s.checks.push_back(check(name + " byte-identical", false, "missing"));
            continue;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        s.checks.push_back(check(name + " byte-identical", ss.str() == content));
    }
    return s;
}

}  // namespace

std::vector<Suite> verify_all(unsigned long seed, const std::string& golden) {
    std::mt19937_64 rng(seed);
    // fixed order, alphabetical by suite name
    std::vector<Suite> out;
    out.push_back(classify_suite());
    out.push_back(clifford_suite());
    out.push_back(curvature_suite());
    out.push_back(exterior_suite(rng));
    if (!golden.empty()) out.push_back(golden_suite(golden));
    out.push_back(liealg_suite(rng));
    out.push_back(spin7_suite(rng));
    return out;
}

}  // namespace spin7::cli
