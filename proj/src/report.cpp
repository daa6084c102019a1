#include "spin7/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spin7/clifford.hpp"

namespace spin7::report {

Json scalar(const Scalar& s) { return s.str(); }

Json matrix(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        rows.push_back(r);
    }
    return rows;
}

namespace {
bool is_diagonal(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}
std::vector<Scalar> S(std::initializer_list<Scalar> v) { return v; }
}  // namespace

Json ricci(const Matrix& m) {
    Json j = Json::object();
    if (is_diagonal(m)) {
        Json d = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i).str());
        j["diag"] = d;
    } else {
        j["matrix"] = matrix(m);
    }
    return j;
}

std::string diag_str(const Matrix& m) {
    if (!is_diagonal(m)) return "(not diagonal)";
    std::string s = "diag(";
    for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? ", " : "") + m(i, i).str();
    return s + ")";
}

// values from {+-1, +-2, 1/2, 3}; zeros only where a worked example or the case forces them
const std::vector<Sample>& family_samples() {
    static const std::vector<Sample> v = {
        {"5.1", S({1, 0, 0})},         {"5.1", S({-1, 1, 0})},         {"5.1", S({1, 2, 3})},
        {"5.1", S({2, -1, Scalar(1, 2)})},
        {"5.2-I", S({1})},             {"5.2-I", S({2})},              {"5.2-I", S({Scalar(1, 2)})},
        {"5.2-II", S({1, 1, 1})},      {"5.2-II", S({-1, 2, 3})},      {"5.2-II", S({2, -1, Scalar(1, 2)})},
        {"5.3-I", S({1, 1, 1})},       {"5.3-I", S({2, -1, 3})},       {"5.3-I", S({Scalar(1, 2), 2, 1})},
        {"5.3-II", S({1, 1, 1})},      {"5.3-II", S({-2, 1, 2})},      {"5.3-II", S({2, -1, 3})},
        {"5.4", S({1})},               {"5.4", S({2})},                {"5.4", S({Scalar(1, 2)})},
    };
    return v;
}

const std::vector<CurvatureSample>& curvature_samples() {
    static const std::vector<CurvatureSample> v = {
        {"5.1.1", "5.1", S({1, 0, 0})},         {"5.1.1", "5.1", S({1, 2, 3})},
        {"5.1.1", "5.1", S({2, -1, Scalar(1, 2)})},
        {"5.1.2", "5.1", S({1, 0, 0})},         {"5.1.2", "5.1", S({2, 0, 0})},
        {"5.1.2", "5.1", S({-1, 0, 0})},
        {"5.2.1", "5.2-I", S({1})},             {"5.2.1", "5.2-I", S({2})},
        {"5.2.1", "5.2-II", S({1, 1, 1})},
        {"5.2.2", "5.2-I", S({1})},             {"5.2.2", "5.2-I", S({3})},
        {"5.2.2", "5.2-II", S({-1, 2, 3})},
        {"5.3.1", "5.3-I", S({1, 1, 1})},       {"5.3.1", "5.3-I", S({Scalar(1, 2), 2, 1})},
        {"5.3.1", "5.3-II", S({1, 1, 1})},
    };
    return v;
}

std::vector<Scalar> params_from_assignments(const TorsionFamily& f, const std::string& text) {
    std::vector<Scalar> p(f.params.size());
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + item + "'");
        std::string name = item.substr(0, eq);
        std::size_t k = 0;
        while (k < f.params.size() && f.params[k] != name) ++k;
        if (k == f.params.size())
            throw std::invalid_argument("family " + f.id + " has no parameter '" + name + "'");
        p[k] = parse_scalar(item.substr(eq + 1));
    }
    return p;
}

Json params_json(const TorsionFamily& f, const std::vector<Scalar>& p) {
    Json j = Json::object();
    for (std::size_t i = 0; i < p.size(); ++i) j[f.params[i]] = p[i].str();
    return j;
}

Json family_sample(const TorsionFamily& f, const std::vector<Scalar>& p) {
    MultiVector t = f.torsion(p);
    RicciResult rr = ricci_solver(t, catalog(f.iso));
    ScalPair sp = scal_pair(t);
    RicciShape cf = closed_form_ricci(f.id, p);
    Json j;
    j["family_id"] = f.id;
    j["iso"] = f.iso;
    j["params"] = params_json(f, p);
    j["torsion"] = t.str();
    j["iso_at_sample"] = iso_algebra(t).name;
    j["w_class"] = to_string(w_class(t));
    j["scal_g"] = sp.g.str();
    j["scal_c"] = sp.c.str();
    j["consistent"] = rr.consistent;
    if (rr.consistent) {
        j["ricci"] = ricci(rr.ric);
        j["matches_closed_form"] = rr.ric == cf.diag;
    } else {
        j["ricci"] = nullptr;
        j["reason"] = rr.reason;
    }
    j["closed_form"] = {{"lambda", cf.lambda.str()}, {"kappa", cf.kappa.str()}};
    return j;
}

Json curvature_tensor(const CurvatureTensor& r) {
    Json j;
    j["h"] = r.h.name;
    Json basis = Json::array();
    for (Blade b : blades_of_grade(2)) basis.push_back(blade_name(b));
    j["basis"] = basis;
    j["matrix"] = matrix(r.lambda2());
    return j;
}

Json curvature_sample(const CurvatureSample& s) {
    const TorsionFamily& f = torsion_family(s.family);
    MultiVector t = f.torsion(s.params);
    CurvatureTensor r = build_rc(s.case_id, s.family, s.params);
    RicciResult rr = ricci_solver(t, r.h);
    Matrix ric = ricci_of(r);
    Json j;
    j["case"] = s.case_id;
    j["family"] = s.family;
    j["params"] = params_json(f, s.params);
    j["hol"] = r.h.name;
    j["ricci"] = ricci(ric);
    j["checks"] = {{"symmetric", is_symmetric(r)},
                   {"torsion_bianchi", satisfies_torsion_bianchi(r, t)},
                   {"plain_bianchi", satisfies_bianchi(r)},
                   {"range", range_in(r, r.h)},
                   {"invariant", invariance_check(r, r.h)},
                   {"ricci_matches_solver", rr.consistent && rr.ric == ric}};
    j["tensor"] = curvature_tensor(r);
    return j;
}

namespace {
Json attempt_json(const CaseAttempt& a) {
    Json j;
    j["family"] = a.family;
    j["case"] = a.case_label;
    j["conditions"] = a.condition_strings();
    j["status"] = to_string(a.feasibility.status);
    if (a.feasibility.witness) {
        Json w = Json::object();
        for (std::size_t i = 0; i < a.params.size(); ++i) w[a.params[i]] = (*a.feasibility.witness)[i].str();
        j["witness"] = w;
        j["verified"] = a.verified;
        j["iso_at_witness"] = a.iso_at_witness;
        j["ricci_at_witness"] = ricci(a.ricci_at_witness);
    }
    if (!a.feasibility.note.empty()) j["note"] = a.feasibility.note;
    return j;
}
}  // namespace

Json table(const std::vector<ClassificationRow>& rows) {
    Json j;
    Json summary = Json::array();
    auto sum = summarize(rows);
    for (const auto& iso : table_isotropies()) {
        const auto& e = sum[iso];
        summary.push_back({{"iso", iso}, {"k_nonzero", e.k_nonzero}, {"k_zero", e.k_zero}});
    }
    j["table"] = summary;
    Json cand = Json::array();
    for (const auto& r : rows) {
        Json c;
        c["iso"] = r.iso;
        c["hol"] = r.hol;
        c["table_name"] = r.table_name;
        c["k_dim"] = r.k_dim;
        c["admissible"] = r.admissible;
        Json att = Json::array();
        for (const auto& a : r.attempts) att.push_back(attempt_json(a));
        c["attempts"] = att;
        cand.push_back(c);
    }
    j["candidates"] = cand;
    return j;
}

std::string table_markdown(const std::vector<ClassificationRow>& rows) {
    auto sum = summarize(rows);
    auto join = [](const std::vector<std::string>& v) {
        if (v.empty()) return std::string("—");
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + pretty_name(x);
        return s;
    };
    std::ostringstream o;
    o << "| iso(T^c) | hol(∇^c), K(hol) ≠ 0 | hol(∇^c), K(hol) = 0 |\n";
    o << "|---|---|---|\n";
    for (const auto& iso : table_isotropies())
        o << "| " << pretty_name(iso) << " | " << join(sum[iso].k_nonzero) << " | " << join(sum[iso].k_zero) << " |\n";
    return o.str();
}

Json families_golden() {
    Json j;
    Json fams = Json::array();
    for (const auto& f : torsion_families()) {
        Json fj;
        fj["family_id"] = f.id;
        fj["iso"] = f.iso;
        fj["params"] = f.params;
        Json g = Json::array();
        for (const auto& x : f.generators) g.push_back(x.str());
        fj["generators"] = g;
        Json cons = Json::array();
        for (const auto& c : f.constraints) {
            const char* rel = c.rel == LinearCondition::Rel::Zero      ? " = 0"
                              : c.rel == LinearCondition::Rel::NonZero ? " != 0"
                                                                       : " > 0";
            cons.push_back(linear_str(c.coeffs, f.params) + rel);
        }
        fj["constraints"] = cons;
        Json ex = Json::array();
        for (const auto& sub : f.exclusions) {
            Json one = Json::array();
            for (const auto& l : sub) one.push_back(linear_str(l, f.params) + " = 0");
            ex.push_back(one);
        }
        fj["exclusions"] = ex;
        Json samples = Json::array();
        for (const auto& s : family_samples())
            if (s.family == f.id) samples.push_back(family_sample(f, s.params));
        fj["samples"] = samples;
        fams.push_back(fj);
    }
    j["families"] = fams;
    return j;
}

Json curvature_golden() {
    Json j;
    Json dims = Json::array();
    for (const char* h : {"g2", "su3", "su2+su2c", "u2", "su2", "R+su2", "R+su2c", "su2c", "so3", "so3diag", "so3ir",
                          "t2", "t2tilde", "t1[k,l!=0]", "zero"}) {
        BianchiSpace b = bianchi_space(hol_candidate(h).h);
        dims.push_back({{"h", h}, {"dim", b.dim}, {"dim_symmetric", b.dim_symmetric}});
    }
    j["bianchi_dims"] = dims;
    Json tables = Json::object();
    for (const char* c : {"5.1.1", "5.3.1"}) {
        Json rows = Json::array();
        for (const auto& r : rc_constraint_table(c)) rows.push_back({{"hol", r.hol}, {"constraints", r.text()}});
        tables[c] = rows;
    }
    j["constraint_tables"] = tables;
    NoGo g = no_go_531();
    std::vector<std::string> names = {"a1", "a2", "b1"};
    j["no_go_5.3.1"] = {{"r1", quad_str(g.r1, names)},
                        {"r2", quad_str(g.r2, names)},
                        {"5*lambda - 3*kappa", quad_str(g.combination, names)},
                        {"with_exclusions", to_string(g.with_exclusions.status)},
                        {"without_exclusions", to_string(g.without_exclusions.status)}};
    Json cases = Json::array();
    for (const auto& s : curvature_samples()) cases.push_back(curvature_sample(s));
    j["cases"] = cases;
    return j;
}

Json constants_golden() {
    Json j;
    MultiVector pp = wedge(forms::Phi(), forms::Phi());
    j["phi_wedge_phi_over_vol"] = pp.coeff(0xFF).str();
    Spinor s = clifford_apply(forms::Phi(), psi0());
    std::string eig = "none";
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!psi0()[i].is_zero()) {
            eig = (s[i] / psi0()[i]).str();
            break;
        }
    j["phi_on_psi0"] = eig;
    Matrix g1 = clifford_matrix(forms::e(1));
    j["e_1_squared"] = (g1 * g1)(0, 0).str();
    return j;
}

namespace {
void md(const Json& j, std::ostringstream& o, int depth, const std::string& key) {
    std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    std::string label = key.empty() ? "" : "**" + key + "**: ";
    if (j.is_object()) {
        if (!key.empty()) o << indent << "- " << label << "\n";
        for (const auto& [k, v] : j.items()) md(v, o, key.empty() ? depth : depth + 1, k);
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
        std::string s;
        for (const auto& x : j) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
        o << indent << "- " << label << "[" << s << "]\n";
    } else if (j.is_array()) {
        o << indent << "- " << label << "\n";
        for (const auto& x : j) md(x, o, depth + 1, "");
    } else {
        o << indent << "- " << label << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}
}  // namespace

std::string markdown(const Json& j) {
    std::ostringstream o;
    md(j, o, 0, "");
    return o.str();
}

}  // namespace spin7::report
