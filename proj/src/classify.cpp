#include "spin7/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace spin7 {

namespace {
Vec v3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
Vec v1(long a) { return {Scalar(a)}; }
}  // namespace

const std::vector<IsotropyCase>& isotropy_cases() {
    static const std::vector<IsotropyCase> cases = {
        {"5.1", "g2", "b1 = b2 = 0", {v3(0, 1, 0), v3(0, 0, 1)}, {}, {}, {}},
        {"5.1", "so3ir", "b1 = b2 = 0", {v3(0, 1, 0), v3(0, 0, 1)}, {}, {}, {}},
        {"5.1", "su2+su2c", "b1 != 0, b2 = 0", {v3(0, 0, 1)}, {v3(0, 1, 0)}, {}, {}},
        {"5.1", "R+su2c", "b2 != 0", {}, {v3(0, 0, 1)}, {}, {}},
        {"5.2-I", "su3", "a1 > 0", {}, {}, {v1(1)}, {}},
        // on b1 = 3/2 a2 the torsion is a1 Dbar + 7/2 a2 D, a normalizer rotation of D: iso is su(3)
        // for every a1, not only the normal form a1 = 0
        {"5.2-II", "su3", "b1 = 3/2 a2, b1 > 0", {v3(0, -3, 2)}, {}, {v3(0, 0, 1)}, {}},
        {"5.2-II", "so3", "b1 > 0, b1 != 3/2 a2", {}, {v3(0, -3, 2)}, {v3(0, 0, 1)}, {}},
        {"5.3-I", "u2", "b1 > 0, excluded loci removed", {}, {}, {v3(0, 0, 1)}, {}},
        {"5.3-II", "u2", "b1 > 0, excluded loci removed", {}, {}, {v3(0, 0, 1)}, {}},
        {"5.4", "R+su2", "b1 > 0", {}, {}, {v1(1)}, {}},
    };
    return cases;
}

std::vector<IsotropyCase> isotropy_cases_for(const std::string& iso) {
    std::vector<IsotropyCase> out;
    for (const auto& c : isotropy_cases())
        if (c.iso == iso) out.push_back(c);
    return out;
}

const std::vector<std::string>& table_isotropies() {
    static const std::vector<std::string> v = {"g2", "su3", "su2+su2c", "u2", "R+su2c", "so3", "so3ir", "R+su2"};
    return v;
}

std::vector<std::string> hol_candidate_keys(const std::string& iso) {
    static const std::vector<std::string> tori = {"t1[l=0]", "t1[k=0]", "t1[k,l!=0]"};
    std::vector<std::string> v;
    if (iso == "g2") v = {"g2", "su3", "su2+su2c", "u2", "R+su2c", "so3", "su2", "su2c", "so3ir", "t2"};
    else if (iso == "su3") v = {"su3", "u2", "so3", "su2", "t2"};
    else if (iso == "su2+su2c") v = {"su2+su2c", "u2", "su2", "R+su2c", "su2c", "so3diag", "t2"};
    else if (iso == "u2") v = {"u2", "su2", "t2"};
    else if (iso == "R+su2c") v = {"R+su2c", "su2c", "t2"};
    else if (iso == "so3") return {"so3", "t1[so3]", "zero"};
    else if (iso == "so3ir") return {"so3ir", "t1[so3ir]", "zero"};
    else if (iso == "R+su2") return {"R+su2", "su2", "t2tilde", "t1tilde[l=0]", "t1tilde[k=0]", "t1tilde[k,l!=0]", "zero"};
    else throw std::invalid_argument("no table row for '" + iso + "'");
    v.insert(v.end(), tori.begin(), tori.end());
    v.push_back("zero");
    return v;
}

HolCandidate hol_candidate(const std::string& key) {
    auto torus = [&](const char* name, Scalar k, Scalar l, const char* table) {
        Subalgebra h = catalog(name, {{"k", k}, {"l", l}});
        h.name = key;
        return HolCandidate{key, table, h};
    };
    if (key == "t1[l=0]") return torus("t1", 1, 0, "t1");
    if (key == "t1[k=0]") return torus("t1", 0, 1, "t1");
    if (key == "t1[k,l!=0]") return torus("t1", 1, 2, "t1");
    if (key == "t1[so3]") return torus("t1", Scalar(1, 2), Scalar(1, 2), "t1");  // P7 + P8
    if (key == "t1[so3ir]") return torus("t1", Scalar(-1, 2), Scalar(3, 2), "t1");  // P7 + 3 P8
    if (key == "t1tilde[l=0]") return torus("t1tilde", 1, 0, "t1tilde");
    if (key == "t1tilde[k=0]") return torus("t1tilde", 0, 1, "t1tilde");
    if (key == "t1tilde[k,l!=0]") return torus("t1tilde", 1, 2, "t1tilde");
    if (key == "so3diag") return {key, "so3", catalog(key)};
    return {key, key, catalog(key)};
}

std::vector<std::string> CaseAttempt::condition_strings() const {
    std::vector<std::string> out;
    for (const auto& c : conditions) out.push_back(quad_str(c, params) + " = 0");
    return out;
}

namespace {

using Mono = std::pair<std::size_t, std::size_t>;

// rows r of the stacked column vectors cols[m] become conditions sum_m cols[m][r] mono_m = 0
void collect_rows(std::vector<Vec>& out, const std::vector<Vec>& cols) {
    if (cols.empty()) return;
    for (std::size_t r = 0; r < cols[0].size(); ++r) {
        Vec row(cols.size());
        bool any = false;
        for (std::size_t m = 0; m < cols.size(); ++m) {
            row[m] = cols[m][r];
            any = any || !row[m].is_zero();
        }
        if (any) out.push_back(std::move(row));
    }
}

void collect_matrix_rows(std::vector<Vec>& out, const Matrix& obstruction) {
    for (std::size_t r = 0; r < obstruction.rows(); ++r) {
        Vec row = obstruction.row(r);
        if (!is_zero(row)) out.push_back(std::move(row));
    }
}

Vec flatten(const Matrix& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

bool verify_witness(const TorsionFamily& fam, const HolCandidate& h, bool k_zero, const std::vector<Scalar>& w,
                    CaseAttempt& att) {
    MultiVector t = fam.torsion(w);
    RicciResult rr = ricci_solver(t, h.h);
    if (!rr.consistent) return false;
    att.ricci_at_witness = rr.ric;
    att.iso_at_witness = iso_algebra(t).name;
    if (!contained_in(h.h, iso_algebra(t))) return false;
    if (k_zero) {
        auto r = solve_torsion_bianchi(h.h, t);
        if (!r || !invariance_check(*r, h.h) || !(ricci_of(*r) == rr.ric)) return false;
    }
    return true;
}

}  // namespace

CaseAttempt run_case(const IsotropyCase& c, const HolCandidate& h) {
    const TorsionFamily& fam = torsion_family(c.family);
    const std::size_t n = fam.generators.size();
    const auto mons = monomials(n);
    const std::size_t nm = mons.size();

    CaseAttempt att;
    att.family = c.family;
    att.case_label = c.label;
    att.params = fam.params;

    std::vector<Vec> rows;

    // (bullet): precheck and the Ricci system, with right-hand sides per monomial
    std::vector<Matrix> ops;
    for (auto [i, j] : mons)
        ops.push_back(i == j ? torsion_operator(fam.generators[i])
                             : torsion_operator(fam.generators[i], fam.generators[j]));
    RicciSystem sys = ricci_system(invariant_spinors(h.h));
    std::vector<Vec> pre, rhs;
    for (const auto& op : ops) {
        pre.push_back(sys.precheck(op));
        rhs.push_back(sys.rhs(op));
    }
    collect_rows(rows, pre);
    AugmentedSolve ric = solve_augmented(sys.lhs, Matrix::from_columns(rhs, sys.lhs.rows()));
    collect_matrix_rows(rows, ric.obstruction);
    std::vector<Matrix> ric_m;
    for (std::size_t m = 0; m < nm; ++m) ric_m.push_back(sym_from_vec(ric.particular.col(m)));

    // curvature: when K(h) = 0 the curvature is parallel, hence h-invariant, and it is
    // fixed by the Bianchi identity with torsion
    const std::size_t k_dim = bianchi_space(h.h).dim;
    if (k_dim == 0) {
        std::vector<Vec> sig;
        for (auto [i, j] : mons) {
            MultiVector s = i == j ? sigma_t(fam.generators[i])
                                   : sigma_pair(fam.generators[i], fam.generators[j]) +
                                         sigma_pair(fam.generators[j], fam.generators[i]);
            sig.push_back(four_form_values(s));
        }
        std::vector<CurvatureTensor> r_m;
        if (h.h.dim() == 0) {
            collect_rows(rows, sig);
            for (std::size_t m = 0; m < nm; ++m) r_m.push_back(zero_tensor(h.h));
        } else {
            AugmentedSolve b = solve_augmented(bianchi_matrix_sym(h.h), Matrix::from_columns(sig, kBianchiRows));
            collect_matrix_rows(rows, b.obstruction);
            for (std::size_t m = 0; m < nm; ++m)
                r_m.push_back({h.h, coeff_from_sym(b.particular.col(m), h.h.dim())});
        }
        std::vector<Matrix> l2;
        for (const auto& r : r_m) l2.push_back(r.lambda2());
        for (const auto& x : h.h.basis) {
            Matrix a = action_matrix(x, 2);
            std::vector<Vec> acted;
            for (const auto& m : l2) acted.push_back(flatten(a * m + m * a.transpose()));
            collect_rows(rows, acted);
        }
        std::vector<Vec> diff;
        for (std::size_t m = 0; m < nm; ++m) diff.push_back(flatten(ricci_of(r_m[m]) - ric_m[m]));
        collect_rows(rows, diff);
    }

    att.conditions = span_basis(rows, nm);

    FeasibilityProblem prob;
    prob.n = n;
    for (const auto& cnd : att.conditions) prob.forms.push_back(quad_from_coeffs(cnd, n));
    prob.equations = c.equations;
    for (const auto& l : c.nonzero) prob.avoid.push_back({l});
    prob.avoid.insert(prob.avoid.end(), c.exclusions.begin(), c.exclusions.end());
    prob.avoid.insert(prob.avoid.end(), fam.exclusions.begin(), fam.exclusions.end());
    prob.positive = c.positive;
    for (const auto& fc : fam.constraints) {
        if (fc.rel == LinearCondition::Rel::Zero) prob.equations.push_back(fc.coeffs);
        if (fc.rel == LinearCondition::Rel::NonZero) prob.avoid.push_back({fc.coeffs});
        if (fc.rel == LinearCondition::Rel::Positive &&
            std::find(prob.positive.begin(), prob.positive.end(), fc.coeffs) == prob.positive.end())
            prob.positive.push_back(fc.coeffs);
    }
    att.feasibility = decide(prob);
    if (att.feasibility.witness) att.verified = verify_witness(fam, h, k_dim == 0, *att.feasibility.witness, att);
    return att;
}

ClassificationRow run_recipe(const std::string& iso, const std::string& hol_key) {
    HolCandidate h = hol_candidate(hol_key);
    if (!contained_in(h.h, catalog(iso))) throw std::invalid_argument(hol_key + " is not contained in " + iso);
    auto cases = isotropy_cases_for(iso);
    if (cases.empty()) throw std::invalid_argument("no torsion family with isotropy " + iso);
    ClassificationRow row;
    row.iso = iso;
    row.hol = hol_key;
    row.table_name = h.table_name;
    row.k_dim = bianchi_space(h.h).dim;
    for (const auto& c : cases) {
        row.attempts.push_back(run_case(c, h));
        const auto& a = row.attempts.back();
        bool ok = a.feasibility.status == Feasibility::Status::Feasible && (!a.feasibility.witness || a.verified);
        row.admissible = row.admissible || ok;
    }
    return row;
}

std::vector<ClassificationRow> admissibility_table(Exec exec) {
    std::vector<std::pair<std::string, std::string>> jobs;
    for (const auto& iso : table_isotropies())
        for (const auto& k : hol_candidate_keys(iso)) jobs.emplace_back(iso, k);
    std::vector<ClassificationRow> rows(jobs.size());
    // warm shared caches before fanning out
    (void)identify(catalog("zero"));
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < jobs.size(); ++i) rows[i] = run_recipe(jobs[i].first, jobs[i].second);
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i) rows[i] = run_recipe(jobs[i].first, jobs[i].second);
    }
    return rows;
}

std::map<std::string, TableEntry> summarize(const std::vector<ClassificationRow>& rows) {
    std::map<std::string, TableEntry> out;
    for (const auto& r : rows) {
        auto& e = out[r.iso];
        if (!r.admissible) continue;
        auto& list = r.k_nontrivial() ? e.k_nonzero : e.k_zero;
        if (std::find(list.begin(), list.end(), r.table_name) == list.end()) list.push_back(r.table_name);
    }
    return out;
}

NormalizerCheck normalizer_transversality(const TorsionFamily& f, const std::vector<Scalar>& p) {
    NormalizerCheck nc;
    Subalgebra n = normalizer(catalog(f.iso));
    nc.normalizer_dim = n.dim();
    MultiVector t = f.torsion(p);
    std::vector<Vec> orbit, gens, both;
    for (const auto& x : n.basis) orbit.push_back(to_vec(act_on_form(x, t), 3));
    for (const auto& g : f.generators) gens.push_back(to_vec(g, 3));
    orbit = span_basis(orbit, 56);
    gens = span_basis(gens, 56);
    both = orbit;
    both.insert(both.end(), gens.begin(), gens.end());
    nc.orbit_dim = orbit.size();
    nc.overlap = orbit.size() + gens.size() - span_basis(both, 56).size();
    return nc;
}

namespace {

Scalar form3_value(const MultiVector& t, int i, int j, int k) {
    if (i == j || j == k || i == k) return Scalar();
    int a[3] = {i, j, k};
    int sign = 1;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y + 1 < 3 - x; ++y)
            if (a[y] > a[y + 1]) {
                std::swap(a[y], a[y + 1]);
                sign = -sign;
            }
    Scalar c = t.coeff(make_blade({a[0], a[1], a[2]}));
    return sign > 0 ? c : -c;
}

Scalar eval3(const MultiVector& t, const Vec& u, const Vec& v, const Vec& w) {
    Scalar s;
    for (const auto& [b, c] : t.terms()) {
        auto id = blade_indices(b);
        auto at = [&](const Vec& x, int k) -> const Scalar& { return x[static_cast<std::size_t>(id[static_cast<std::size_t>(k)] - 1)]; };
        Scalar det = at(u, 0) * (at(v, 1) * at(w, 2) - at(v, 2) * at(w, 1)) -
                     at(u, 1) * (at(v, 0) * at(w, 2) - at(v, 2) * at(w, 0)) +
                     at(u, 2) * (at(v, 0) * at(w, 1) - at(v, 1) * at(w, 0));
        if (!det.is_zero()) s += c * det;
    }
    return s;
}

Matrix projector(const std::vector<Vec>& b) {
    if (b.empty()) return Matrix(8, 8);
    Matrix bm = Matrix::from_columns(b, 8);
    Matrix bt = bm.transpose();
    AugmentedSolve s = solve_augmented(bt * bm, bt, Exec::Serial);
    return bm * s.particular;
}

}  // namespace

ReconstructedAlgebra reconstruct_lie_algebra(const MultiVector& t, const CurvatureTensor& r, const std::vector<int>& vectors) {
    const Subalgebra& h = r.h;
    const std::size_t dh = h.dim(), k = vectors.size(), n = dh + k;
    ReconstructedAlgebra out;
    for (const auto& x : h.basis) out.labels.push_back(x.str());
    for (int v : vectors) out.labels.push_back("e_" + std::to_string(v));
    out.sc.n = n;
    out.sc.c.assign(n * n * n, Scalar());

    auto vec_slot = [&](int idx) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < k; ++i)
            if (vectors[i] == idx) return dh + i;
        return std::nullopt;
    };
    std::vector<Vec> hv;
    for (const auto& x : h.basis) hv.push_back(to_vec(x, 2));
    std::vector<Matrix> ev, fv;
    for (const auto& x : h.basis) {
        ev.push_back(skew_of(x));
        fv.push_back(form_values(x));
    }

    for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t b = 0; b < dh; ++b) {
            auto c = coordinates(hv, to_vec(bracket(h.basis[a], h.basis[b]), 2));
            if (!c) throw std::invalid_argument("reconstruct: h is not bracket-closed");
            for (std::size_t m = 0; m < dh; ++m) out.sc.at(a, b, m) = (*c)[m];
        }
    for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t i = 0; i < k; ++i) {
            auto col = static_cast<std::size_t>(vectors[i] - 1);
            for (std::size_t j = 0; j < 8; ++j) {
                const Scalar& v = ev[a](j, col);
                if (v.is_zero()) continue;
                auto slot = vec_slot(static_cast<int>(j) + 1);
                if (!slot) throw std::invalid_argument("reconstruct: h does not preserve the chosen vectors");
                out.sc.at(a, dh + i, *slot) = v;
                out.sc.at(dh + i, a, *slot) = -v;
            }
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto x = static_cast<std::size_t>(vectors[i] - 1), y = static_cast<std::size_t>(vectors[j] - 1);
            for (std::size_t b = 0; b < dh; ++b) {
                Scalar s;
                for (std::size_t a = 0; a < dh; ++a)
                    if (!r.coeff(a, b).is_zero()) s += r.coeff(a, b) * fv[a](x, y);
                out.sc.at(dh + i, dh + j, b) = -s;
            }
            for (int m = 1; m <= 8; ++m) {
                Scalar v = form3_value(t, vectors[i], vectors[j], m);
                if (v.is_zero()) continue;
                auto slot = vec_slot(m);
                if (!slot) throw std::invalid_argument("reconstruct: T leaves the chosen vectors");
                out.sc.at(dh + i, dh + j, *slot) = -v;
            }
        }
    out.antisymmetric = is_antisymmetric(out.sc);
    out.jacobi = satisfies_jacobi(out.sc);
    out.killing = killing_form(out.sc);
    return out;
}

SplitResult splitting_check(const MultiVector& t, const std::vector<MultiVector>& plus,
                            const std::vector<MultiVector>& minus) {
    std::vector<Vec> p, m, all;
    for (const auto& x : plus) p.push_back(to_vec(require_grade(x, 1, "splitting_check"), 1));
    for (const auto& x : minus) m.push_back(to_vec(require_grade(x, 1, "splitting_check"), 1));
    all = p;
    all.insert(all.end(), m.begin(), m.end());
    if (span_basis(all, 8).size() != 8 || all.size() != 8)
        throw std::invalid_argument("splitting_check: the two lists must form a basis of R^8");
    for (const auto& x : p)
        for (const auto& y : m)
            if (!dot(x, y).is_zero()) throw std::invalid_argument("splitting_check: the subspaces are not orthogonal");

    Matrix pp = projector(p), pm = projector(m);
    std::vector<Vec> basis;
    for (int i = 1; i <= 8; ++i) basis.push_back(to_vec(forms::e(i), 1));
    auto tvec = [&](const Vec& x, const Vec& y) {
        Vec v(8);
        for (std::size_t k = 0; k < 8; ++k) v[k] = eval3(t, x, y, basis[k]);
        return v;
    };
    SplitResult res;
    res.holds = true;
    for (const auto& x : p)
        for (const auto& y : m) res.holds = res.holds && is_zero(tvec(x, y));
    auto closed = [&](const std::vector<Vec>& side, const Matrix& proj) {
        for (const auto& x : side)
            for (const auto& y : side) {
                Vec v = tvec(x, y);
                if (!(proj * v == v)) return false;
            }
        return true;
    };
    res.holds = res.holds && closed(p, pp) && closed(m, pm);
    for (Blade b : blades_of_grade(3)) {
        auto id = blade_indices(b);
        auto col = [&](const Matrix& pr, int i) { return pr.col(static_cast<std::size_t>(i - 1)); };
        Scalar cp = eval3(t, col(pp, id[0]), col(pp, id[1]), col(pp, id[2]));
        Scalar cm = eval3(t, col(pm, id[0]), col(pm, id[1]), col(pm, id[2]));
        if (!cp.is_zero()) res.t_plus.add(b, cp);
        if (!cm.is_zero()) res.t_minus.add(b, cm);
    }
    return res;
}

HermitianPieces phi_from_hermitian() {
    using namespace forms;
    MultiVector omega = Z() + wedge(e(7), e(8));
    // F = f1 ^ f2 ^ f3 ^ f4 with f_k = e_{2k-1} + i e_{2k}, tracked as (re, im)
    MultiVector re = e(1), im = e(2);
    for (int k = 2; k <= 4; ++k) {
        MultiVector a = e(2 * k - 1), b = e(2 * k);
        MultiVector nre = wedge(re, a) - wedge(im, b);
        MultiVector nim = wedge(re, b) + wedge(im, a);
        re = nre;
        im = nim;
    }
    HermitianPieces h;
    h.half_omega2 = Scalar(1, 2) * wedge(omega, omega);
    h.re_f = re;
    h.phi = h.half_omega2 + h.re_f;
    return h;
}

}  // namespace spin7

namespace spin7 {

std::string RcConstraintRow::text() const {
    if (conditions.empty()) return "none";
    std::string out;
    for (const auto& c : conditions) out += (out.empty() ? "" : ", ") + linear_str(c, {"r1", "r2"}) + " = 0";
    return out;
}

std::vector<RcConstraintRow> rc_constraint_table(const std::string& case_id) {
    using namespace gens;
    Subalgebra carrier;
    std::vector<Matrix> coeffs;
    std::vector<std::string> hols;
    const LieElement p78 = P(7) + Scalar(2) * P(8);
    if (case_id == "5.1.1") {
        carrier.basis = {P(7), p78, Q(5), Q(6)};
        Matrix a(4, 4), b(4, 4);
        a(0, 0) = 1;
        b(1, 1) = b(2, 2) = b(3, 3) = 1;
        coeffs = {a, b};
        hols = {"R+su2c", "su2c", "t2", "t1[l=0]", "so3diag", "t1[k=0]", "t1[k,l!=0]", "zero"};
    } else if (case_id == "5.3.1") {
        carrier.basis = {P(7), p78};
        Matrix a(2, 2), b(2, 2);
        a(0, 0) = 1;
        b(1, 1) = 1;
        coeffs = {a, b};
        hols = {"t2", "t1[k=0]", "t1[l=0]", "t1[k,l!=0]", "zero"};
    } else {
        throw std::invalid_argument("no constraint table for case '" + case_id + "'");
    }
    std::vector<Matrix> parts;
    for (const auto& c : coeffs) parts.push_back(CurvatureTensor{carrier, c}.lambda2());
    std::vector<RcConstraintRow> out;
    for (const auto& k : hols) out.push_back({k, curvature_constraints(parts, hol_candidate(k).h)});
    return out;
}

NoGo no_go_531() {
    NoGo g;
    auto lam = [](const std::vector<Scalar>& p) { return closed_form_ricci("5.3-I", p).lambda; };
    auto kap = [](const std::vector<Scalar>& p) { return closed_form_ricci("5.3-I", p).kappa; };
    Vec l = quad_coeffs_of(lam, 3), k = quad_coeffs_of(kap, 3);
    for (std::size_t i = 0; i < l.size(); ++i) {
        g.r1.push_back(Scalar(1, 4) * k[i] - l[i]);
        g.r2.push_back(Scalar(-1, 4) * k[i]);
        g.combination.push_back(Scalar(5) * l[i] - Scalar(3) * k[i]);
    }
    const TorsionFamily& fam = torsion_family("5.3-I");
    FeasibilityProblem prob;
    prob.n = 3;
    prob.forms = {quad_from_coeffs(g.r1, 3), quad_from_coeffs(g.r2, 3)};
    prob.positive = {Vec{Scalar(0), Scalar(0), Scalar(1)}};
    g.without_exclusions = decide(prob);
    prob.avoid = fam.exclusions;
    g.with_exclusions = decide(prob);
    return g;
}

}  // namespace spin7

namespace spin7 {

MultiVector example2_alpha(int sign) {
    using namespace forms;
    return wedge(Z1() - Scalar(2) * Z2(), e(7)) + D() + Scalar(sign) * Scalar::sqrt3() * wedge(Z3(), e(8));
}

std::vector<LieElement> example2_su3_basis(int sign) {
    using namespace gens;
    return {P(4), P(3), P(1), P(2), -P(5), -P(6), P(7),
            Scalar(sign) * Scalar(1, 3) * Scalar::sqrt3() * (P(7) + Scalar(2) * P(8))};
}

std::optional<int> basis_match(const StructureConstants& sc, const std::vector<LieElement>& b) {
    if (b.size() != sc.n) return std::nullopt;
    for (int c : {1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < sc.n; ++i)
            for (std::size_t j = i + 1; ok && j < sc.n; ++j) {
                LieElement rhs;
                for (std::size_t k = 0; k < sc.n; ++k)
                    if (!sc.at(i, j, k).is_zero()) rhs = rhs + sc.at(i, j, k) * b[k];
                // [c b_i, c b_j] = c sum_k c_ijk b_k  <=>  c [b_i, b_j] = sum_k c_ijk b_k
                ok = Scalar(c) * bracket(b[i], b[j]) == rhs;
            }
        if (ok) return c;
    }
    return std::nullopt;
}

}  // namespace spin7
