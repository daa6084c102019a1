#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "spin7/clifford.hpp"

#ifndef SPIN7_SOURCE_GOLDEN_DIR
#define SPIN7_SOURCE_GOLDEN_DIR "golden"
#endif

namespace spin7::cli {

using report::Json;

std::string golden_dir() {
    if (const char* d = std::getenv("SPIN7_GOLDEN_DIR"); d && *d) return d;
    return SPIN7_SOURCE_GOLDEN_DIR;
}

std::map<std::string, std::string> golden_files() {
    std::map<std::string, std::string> f;
    f["admissibility_table.json"] = report::table(admissibility_table()).dump(2) + "\n";
    f["families.json"] = report::families_golden().dump(2) + "\n";
    f["curvature_cases.json"] = report::curvature_golden().dump(2) + "\n";
    f["constants.json"] = report::constants_golden().dump(2) + "\n";
    return f;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string spinor_str(const Spinor& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k].is_zero()) continue;
        bool neg = s[k].is_monomial() && s[k].sign() < 0;
        Scalar m = neg ? -s[k] : s[k];
        std::string body = "Psi_" + std::to_string(k + 1);
        if (!m.is_one()) body = (m.is_monomial() ? m.str() : "(" + m.str() + ")") + "*" + body;
        out += out.empty() ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

Subalgebra algebra(const std::string& name) {
    try {
        return hol_candidate(name).h;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

const TorsionFamily& family(const std::string& id) {
    try {
        return torsion_family(id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Scalar> params(const TorsionFamily& f, const std::string& set) {
    try {
        return report::params_from_assignments(f, set);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--set: ") + e.what());
    }
}

Json invariants_cmd(const std::string& name, const std::string& space) {
    Subalgebra g = algebra(name);
    Json j;
    j["algebra"] = name;
    j["space"] = space;
    Json basis = Json::array();
    if (space == "spinors") {
        for (const auto& s : invariant_spinors(g)) basis.push_back(spinor_str(s));
    } else if (space.rfind("forms", 0) == 0 && space.size() == 6 && space[5] >= '0' && space[5] <= '8') {
        for (const auto& f : invariant_forms(g, space[5] - '0')) basis.push_back(f.str());
    } else {
        throw UsageError("--space must be forms0..forms8 or spinors");
    }
    j["dim"] = basis.size();
    j["basis"] = basis;
    return j;
}

Json ricci_cmd(const std::string& fid, const std::string& set, const std::string& hol, bool& ok) {
    const TorsionFamily& f = family(fid);
    auto p = params(f, set);
    Subalgebra h = algebra(hol.empty() ? f.iso : hol);
    MultiVector t = f.torsion(p);
    RicciResult rr = ricci_solver(t, h);
    Json j;
    j["family"] = f.id;
    j["params"] = report::params_json(f, p);
    j["hol"] = hol.empty() ? f.iso : hol;
    j["torsion"] = t.str();
    j["consistent"] = rr.consistent;
    if (rr.consistent) {
        j["ricci"] = report::ricci(rr.ric);
        j["ricci_g"] = report::ricci(ricci_g_relation(t, rr.ric));
        j["free_dims"] = rr.free_dims;
    } else {
        j["reason"] = rr.reason;
    }
    ScalPair sp = scal_pair(t);
    j["w_class"] = to_string(w_class(t));
    j["scal_g"] = sp.g.str();
    j["scal_c"] = sp.c.str();
    ok = rr.consistent;
    return j;
}

Json curvature_cmd(const std::string& cid, const std::string& fid, const std::string& set, bool& ok) {
    const RcCase* rc = nullptr;
    for (const auto& c : rc_cases())
        if (c.id == cid) rc = &c;
    if (!rc) throw UsageError("unknown curvature case '" + cid + "'");
    std::string famid = fid.empty() ? rc->families.front() : fid;
    if (std::find(rc->families.begin(), rc->families.end(), famid) == rc->families.end())
        throw UsageError("case " + cid + " does not take family " + famid);
    report::CurvatureSample s{cid, famid, params(family(famid), set)};
    Json j;
    try {
        j = report::curvature_sample(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ok = true;
    for (const auto& [k, v] : j["checks"].items())
        if (k != "plain_bianchi") ok = ok && v.get<bool>();
    return j;
}

Json reconstruct_cmd(const std::string& ex, int sign, bool& ok) {
    ReconstructedAlgebra a;
    Json j;
    j["example"] = ex;
    std::optional<int> match;
    if (ex == "1") {
        MultiVector t = torsion_family("5.1").torsion({Scalar(-1), Scalar(1), Scalar(0)});
        j["torsion"] = t.str();
        a = reconstruct_lie_algebra(t, zero_tensor(catalog("zero")));
    } else if (ex == "2") {
        MultiVector t = example2_alpha(sign);
        j["torsion"] = t.str();
        a = reconstruct_lie_algebra(t, zero_tensor(catalog("zero")));
        match = basis_match(a.sc, example2_su3_basis(sign));
    } else if (ex == "t2") {
        std::vector<Scalar> p = {Scalar(1)};
        MultiVector t = torsion_family("5.2-I").torsion(p);
        j["torsion"] = t.str();
        a = reconstruct_lie_algebra(t, build_rc("5.2.2", "5.2-I", p), {1, 2, 3, 4, 5, 6, 7});
    } else {
        throw UsageError("--example must be 1, 2 or t2");
    }
    j["dim"] = a.sc.n;
    j["labels"] = a.labels;
    Json br = Json::array();
    for (std::size_t i = 0; i < a.sc.n; ++i)
        for (std::size_t k = i + 1; k < a.sc.n; ++k) {
            std::string v;
            for (std::size_t m = 0; m < a.sc.n; ++m) {
                const Scalar& c = a.sc.at(i, k, m);
                if (c.is_zero()) continue;
                std::string coef = c.is_one() ? "" : (c.is_monomial() ? c.str() : "(" + c.str() + ")") + "*";
                v += (v.empty() ? "" : " + ") + coef + "[" + a.labels[m] + "]";
            }
            if (!v.empty()) br.push_back({{"x", a.labels[i]}, {"y", a.labels[k]}, {"bracket", v}});
        }
    j["brackets"] = br;
    j["antisymmetric"] = a.antisymmetric;
    j["jacobi"] = a.jacobi;
    j["killing"] = {{"degenerate", a.killing.degenerate},
                    {"positive", a.killing.positive},
                    {"negative", a.killing.negative}};
    if (ex == "2") j["su3_basis_match"] = match ? Json(*match) : Json(nullptr);
    ok = a.antisymmetric && a.jacobi && (ex != "2" || match.has_value());
    return j;
}

Json iso_cmd(const std::string& text) {
    MultiVector f;
    try {
        f = parse_form(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--form: ") + e.what());
    }
    Subalgebra g = iso_algebra(f);
    Json j;
    j["form"] = f.str();
    j["dim"] = g.dim();
    j["name"] = g.name;
    Json b = Json::array();
    for (const auto& x : g.basis) b.push_back(x.str());
    j["basis"] = b;
    return j;
}

int golden_cmd(bool write, const std::string& dir, std::ostream& out, std::ostream& err, Json& payload) {
    auto files = golden_files();
    payload = Json::object();
    payload["dir"] = dir;
    bool ok = true;
    Json res = Json::array();
    for (const auto& [name, content] : files) {
        std::string path = dir + "/" + name;
        if (write) {
            std::ofstream o(path, std::ios::binary);
            o << content;
            if (!o) {
                err << "cannot write " << path << "\n";
                return 1;
            }
            res.push_back({{"file", name}, {"written", true}});
            continue;
        }
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string have = ss.str();
        Json r = {{"file", name}, {"match", have == content}};
        if (have != content) {
            ok = false;
            // first differing line
            std::istringstream a(have), b(content);
            std::string la, lb;
            std::size_t line = 0;
            while (true) {
                ++line;
                bool ga = static_cast<bool>(std::getline(a, la)), gb = static_cast<bool>(std::getline(b, lb));
                if (!ga && !gb) break;
                if (!ga || !gb || la != lb) {
                    r["line"] = line;
                    r["expected"] = ga ? la : "<eof>";
                    r["actual"] = gb ? lb : "<eof>";
                    break;
                }
            }
        }
        res.push_back(r);
    }
    payload["files"] = res;
    (void)out;
    return ok ? 0 : 1;
}

Json suites_json(const std::vector<Suite>& suites, unsigned long seed, bool& ok) {
    Json j;
    j["seed"] = seed;
    Json arr = Json::array();
    ok = true;
    for (const auto& s : suites) {
        Json sj;
        sj["suite"] = s.name;
        Json cs = Json::array();
        for (const auto& c : s.checks) {
            Json cj = {{"check", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            cs.push_back(cj);
            ok = ok && c.pass;
        }
        sj["checks"] = cs;
        if (!s.info.empty()) sj["measured"] = s.info;
        arr.push_back(sj);
    }
    j["suites"] = arr;
    j["passed"] = ok;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Spin(7)-structures with parallel characteristic torsion", "spin7"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    unsigned long seed = 7;
    app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    app.add_option("--seed", seed, "seed for random-identity sampling");

    auto* verify = app.add_subcommand("verify-all", "identity suites and golden comparison");
    std::string vdir;
    verify->add_option("--golden-dir", vdir, "golden directory (default: SPIN7_GOLDEN_DIR or the source tree)");
    bool no_golden = false;
    verify->add_flag("--no-golden", no_golden, "skip the golden comparison (the slow part)");

    auto* table = app.add_subcommand("table", "classification tables");
    std::string which;
    table->add_option("which", which, "table name")->required()->check(CLI::IsMember({"admissibility"}));

    auto* inv = app.add_subcommand("invariants", "invariant forms or spinors of an algebra");
    std::string alg, space;
    inv->add_option("--algebra", alg)->required();
    inv->add_option("--space", space, "forms0..forms8 or spinors")->required();

    auto* ric = app.add_subcommand("ricci", "solve the Ricci system for a family sample");
    std::string fid, set, hol;
    ric->add_option("--family", fid)->required();
    ric->add_option("--set", set, "a1=..,b1=..; omitted parameters are 0");
    ric->add_option("--hol", hol, "holonomy algebra (default: the family's isotropy)");

    auto* curv = app.add_subcommand("curvature", "build and check a printed curvature tensor");
    std::string cid, cfam, cset;
    curv->add_option("--case", cid)->required();
    curv->add_option("--family", cfam, "default: the case's first family");
    curv->add_option("--set", cset);

    auto* rec = app.add_subcommand("reconstruct", "Lie algebra on h + R^k");
    std::string ex;
    int sign = 1;
    rec->add_option("--example", ex)->required()->check(CLI::IsMember({"1", "2", "t2"}));
    rec->add_option("--sign", sign, "example 2: +1 or -1")->check(CLI::IsMember({1, -1}));

    auto* iso = app.add_subcommand("iso", "isotropy algebra of a 3-form");
    std::string ftext;
    iso->add_option("--form", ftext)->required();

    auto* gold = app.add_subcommand("golden", "regenerate or compare the golden files");
    bool gwrite = false, gcheck = false;
    std::string gdir;
    gold->add_flag("--write", gwrite);
    gold->add_flag("--check", gcheck);
    gold->add_option("--dir", gdir);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    auto emit = [&](const Json& j) {
        if (format == "markdown")
            out << report::markdown(j);
        else
            out << j.dump(2) << "\n";
    };
    try {
        bool ok = true;
        if (*verify) {
            std::string dir = no_golden ? std::string() : vdir.empty() ? golden_dir() : vdir;
            Json j = suites_json(verify_all(seed, dir), seed, ok);
            emit(j);
            if (!ok) err << "verify-all: some checks failed\n";
        } else if (*table) {
            auto rows = admissibility_table();
            if (format == "markdown")
                out << report::table_markdown(rows);
            else
                out << report::table(rows).dump(2) << "\n";
            for (const auto& r : rows)
                for (const auto& a : r.attempts) {
                    if (a.feasibility.status == Feasibility::Status::Undecided) ok = false;
                    if (a.feasibility.witness && !a.verified) ok = false;
                }
        } else if (*inv) {
            emit(invariants_cmd(alg, space));
        } else if (*ric) {
            emit(ricci_cmd(fid, set, hol, ok));
        } else if (*curv) {
            emit(curvature_cmd(cid, cfam, cset, ok));
        } else if (*rec) {
            emit(reconstruct_cmd(ex, sign, ok));
        } else if (*iso) {
            emit(iso_cmd(ftext));
        } else if (*gold) {
            if (gwrite == gcheck) throw UsageError("golden: pass exactly one of --write / --check");
            Json j;
            int rc = golden_cmd(gwrite, gdir.empty() ? golden_dir() : gdir, out, err, j);
            emit(j);
            ok = rc == 0;
        }
        return ok ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {  // arguments the library rejected
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace spin7::cli
