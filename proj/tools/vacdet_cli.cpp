// vacdet: determinants, simplicity verdicts, KL polynomials, identities, M_b.
#include "vacdet/determinants.hpp"
#include "vacdet/kl.hpp"
#include "vacdet/oracle.hpp"
#include "vacdet/simplicity.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace vacdet;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitMismatch = 2;
constexpr int kExitUnsupported = 3;

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    json query = json::object();
    json result = json::object();
    json cutoffs = json::object();
    json provenance = json::object();
    std::vector<std::string> tsv_header;
    std::vector<std::vector<std::string>> tsv_rows;
    std::vector<std::string> human;
    int exit_code = 0;

    void emit(const std::string& format) const {
        if (format == "json") {
            json j{{"query", query}, {"result", result}, {"cutoffs", cutoffs}, {"provenance", provenance}};
            std::cout << j.dump(2) << "\n";
        } else if (format == "tsv") {
            auto row = [](const std::vector<std::string>& r) {
                for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "\t" : "") << r[i];
                std::cout << "\n";
            };
            row(tsv_header);
            for (const auto& r : tsv_rows) row(r);
        } else {
            for (const auto& l : human) std::cout << l << "\n";
        }
    }
};

Coords parse_coords(const std::string& s) {
    Coords out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos)
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Unsupported("bad coordinate list '" + s + "'");
        }
    }
    return out;
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw Unsupported("not an exact rational: '" + s + "'");
    }
}

std::string strip_hat(std::string a) {
    if (!a.empty() && a.back() == '^') a.pop_back();
    return a;
}

RootSystem lookup(const std::string& id) {
    try {
        return catalog(strip_hat(id));
    } catch (const std::exception& e) {
        throw Unsupported("unsupported algebra '" + id + "': " + e.what());
    }
}

// brute-force model of the same finite algebra, where one exists
std::optional<FiniteAlgebra> oracle_algebra(const std::string& id) {
    std::string a = strip_hat(id);
    if (a == "sl2" || a == "A1") return finite_sl(2);
    if (a == "sl3" || a == "A2") return finite_sl(3);
    if (a == "osp(1|2)") return finite_osp12();
    return std::nullopt;
}

VacuumRoute parse_route(const std::string& s, const RootSystem& fin) {
    if (s.empty() || s == "default") return default_mb_route(fin);
    if (s == "cordet" || s == "vacuum") return VacuumRoute::Cordet;
    if (s == "isotropic" || s == "vacuum-isotropic") return VacuumRoute::Isotropic;
    if (s == "osp" || s == "vacuum-osp") return VacuumRoute::OddSymplectic;
    throw Unsupported("unknown route '" + s + "' (cordet, isotropic, osp)");
}

json factors_json(const FactoredDeterminant& d) {
    json arr = json::array();
    for (const Factor& f : d.factors()) arr.push_back({{"factor", f.poly.str()}, {"exponent", f.exp}});
    return arr;
}

// compare zeros of the product with the brute-force polynomial in one variable
json zero_diff(const FactoredDeterminant& d, const ExactPoly& brute, const std::string& var) {
    json out = json::object();
    auto want = d.zero_multiset(var);
    std::vector<Rational> roots;
    for (const auto& [z, m] : want) roots.push_back(z);
    auto split = divide_linear_factors(brute, var, roots);
    json diff = json::array();
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (split.exponents[i] != want[roots[i]])
            diff.push_back({{"zero", roots[i].str()}, {"formula", want[roots[i]]}, {"oracle", split.exponents[i]}});
    out["differences"] = diff;
    if (!split.remainder.is_constant()) out["oracle_extra"] = split.remainder.str();
    return out;
}

struct DetRow {
    std::string label;   // N or nu
    FactoredDeterminant det;
    std::optional<ExactPoly> brute;
    std::string var;     // univariate variable, empty for multivariate
};

void finish_det(Report& rep, std::vector<DetRow>& rows, bool oracle) {
    json arr = json::array();
    bool all_ok = true;
    rep.tsv_header = {"nu", "factor", "exponent"};
    for (DetRow& r : rows) {
        json j{{"nu", r.label}, {"factors", factors_json(r.det)}, {"degree", r.det.total_degree()},
               {"product", r.det.str()}};
        std::string line = r.label + ": " + r.det.str();
        if (oracle && r.brute) {
            bool ok = r.det.matches(*r.brute);
            all_ok = all_ok && ok;
            json o{{"agree", ok}};
            if (!r.var.empty()) o["zeros"] = zero_diff(r.det, *r.brute, r.var);
            if (!ok) o["oracle_det"] = r.brute->str();
            j["oracle"] = o;
            line += ok ? "   [oracle agrees]" : "   [ORACLE MISMATCH: " + r.brute->str() + "]";
        }
        for (const Factor& f : r.det.factors()) rep.tsv_rows.push_back({r.label, f.poly.str(), std::to_string(f.exp)});
        arr.push_back(j);
        rep.human.push_back(line);
    }
    rep.result["determinants"] = arr;
    if (oracle) {
        rep.result["oracle_agrees"] = all_ok;
        rep.human.push_back(all_ok ? "oracle: agreement" : "oracle: MISMATCH");
        if (!all_ok) rep.exit_code = kExitMismatch;
    }
}

// ---------------------------------------------------------------- det

struct DetArgs {
    std::string kind, algebra, N, nu, I, route;
    int depth = 1, height = 0;
    bool oracle = false;
};

Report cmd_det(const DetArgs& a) {
    Report rep;
    rep.query = {{"command", "det"}, {"kind", a.kind}, {"oracle", a.oracle}};
    std::vector<DetRow> rows;
    if (a.kind == "virasoro" || a.kind == "verma" || a.kind == "ns") {
        if (a.N.empty()) throw Unsupported("--N is required for " + a.kind);
        Rational n = parse_rational(a.N);
        rep.query["N"] = n.str();
        std::string alg = a.kind == "ns" ? "NS" : (a.algebra.empty() ? "Vir" : a.algebra);
        if (a.kind == "verma" && alg != "Vir") throw Unsupported("verma determinants: only --algebra Vir is implemented");
        if (a.kind == "ns") {
            Rational two = n * Rational(2);
            if (!two.is_integer() || two.sign() < 0) throw Unsupported("NS grade must be a non-negative half-integer");
            int twoN = static_cast<int>(two.to_long());
            rep.cutoffs["twoN"] = twoN;
            DetRow r{n.str(), ns_vacuum_det(twoN), std::nullopt, "c"};
            if (a.oracle) r.brute = ns_vacuum(twoN).det({twoN});
            rows.push_back(std::move(r));
            rep.provenance["formula"] = "NS vacuum product over superpartitions";
        } else {
            if (!n.is_integer() || n.sign() < 0) throw Unsupported("--N must be a non-negative integer");
            int N = static_cast<int>(n.to_long());
            if (a.kind == "verma" && N < 1) throw Unsupported("cutoff too small: Verma determinants start at N = 1");
            rep.cutoffs["N"] = N;
            if (a.kind == "virasoro") {
                DetRow r{std::to_string(N), virasoro_vacuum_det(N), std::nullopt, "c"};
                if (a.oracle) r.brute = virasoro_vacuum(N).det({N});
                rows.push_back(std::move(r));
                rep.provenance["formula"] = "Virasoro vacuum product over c_{p,q}";
            } else {
                DetRow r{std::to_string(N), virasoro_verma_det(N), std::nullopt, ""};
                if (a.oracle) r.brute = virasoro_verma(N).det({N});
                rows.push_back(std::move(r));
                rep.provenance["formula"] = "Kac determinant";
            }
        }
        rep.query["algebra"] = alg;
    } else if (a.kind == "vacuum") {
        if (a.algebra.empty()) throw Unsupported("--algebra is required (e.g. sl2^)");
        RootSystem fin = lookup(a.algebra);
        VacuumRoute route = parse_route(a.route, fin);
        AffineSystem aff(fin);
        rep.query["algebra"] = fin.id + "^";
        rep.provenance["route"] = route_name(route);
        std::vector<Coords> nus;
        if (!a.nu.empty()) {
            Coords nu = parse_coords(a.nu);
            if (static_cast<int>(nu.size()) != aff.rank())
                throw Unsupported("--nu needs " + std::to_string(aff.rank()) + " affine coordinates (alpha_0 first)");
            nus.push_back(nu);
            rep.cutoffs["depth"] = nu[0];
        } else {
            if (a.depth < 1) throw Unsupported("cutoff too small: --depth must be >= 1");
            int ht = height(fin.theta_coords());
            for (const Coords& nu : enumerate_cone(aff.rank(), a.depth * (1 + 2 * ht)))
                if (nu[0] <= a.depth && height(nu) > 0) nus.push_back(nu);
            rep.cutoffs["depth"] = a.depth;
        }
        std::optional<PBWModule> mod;
        if (a.oracle) {
            auto F = oracle_algebra(fin.id);
            if (!F) throw Unsupported("no brute-force oracle for " + fin.id + "^ (sl2, sl3, osp(1|2) only)");
            int dmax = 0;
            for (const Coords& nu : nus) dmax = std::max(dmax, nu[0]);
            mod.emplace(affine_vacuum(*F, dmax));
        }
        for (const Coords& nu : nus) {
            FactoredDeterminant d = vacuum_det(fin, nu, route);
            if (a.nu.empty() && d.total_degree() == 0) continue;
            DetRow r{coords_str(nu), d, std::nullopt, "k"};
            if (mod) r.brute = mod->det(nu);
            rows.push_back(std::move(r));
        }
    } else if (a.kind == "genverma") {
        if (a.algebra.empty()) throw Unsupported("--algebra is required (e.g. sl3)");
        RootSystem fin = lookup(a.algebra);
        std::vector<int> I = a.I.empty() ? std::vector<int>{} : parse_coords(a.I);
        rep.query["algebra"] = fin.id;
        rep.query["I"] = I;
        std::vector<Coords> nus;
        if (!a.nu.empty()) {
            nus.push_back(parse_coords(a.nu));
            if (static_cast<int>(nus[0].size()) != fin.rank()) throw Unsupported("--nu has the wrong length");
        } else {
            if (a.height < 1) throw Unsupported("cutoff too small: give --nu or --height >= 1");
            for (const Coords& nu : enumerate_cone(fin.rank(), a.height))
                if (height(nu) > 0) nus.push_back(nu);
            rep.cutoffs["height"] = a.height;
        }
        std::optional<PBWModule> mod;
        if (a.oracle) {
            auto F = oracle_algebra(fin.id);
            if (!F) throw Unsupported("no brute-force oracle for " + fin.id);
            mod.emplace(finite_verma(*F, I));
        }
        for (const Coords& nu : nus) {
            DetRow r{coords_str(nu), gen_verma_det(fin, I, nu), std::nullopt, ""};
            if (mod) r.brute = mod->det(nu);
            rows.push_back(std::move(r));
        }
        rep.provenance["formula"] = "generalized Verma product";
    } else {
        throw Unsupported("unknown determinant kind '" + a.kind + "'");
    }
    finish_det(rep, rows, a.oracle);
    return rep;
}

// ---------------------------------------------------------------- simplicity

json verdict_json(const Verdict& v) {
    json j{{"subject", v.subject}, {"value", v.value}, {"status", status_name(v.status)},
           {"witness", v.witness}, {"criterion", v.criterion}};
    if (v.vanishing_b) j["vanishing_b"] = v.vanishing_b->str();
    return j;
}

std::string verdict_line(const Verdict& v) {
    std::string s = v.subject + " at " + v.value + ": " + status_name(v.status);
    if (!v.witness.empty()) s += " (" + v.witness + ")";
    if (!v.criterion.empty()) s += " [" + v.criterion + "]";
    return s;
}

RootSystem normalized(const RootSystem& r, const std::string& norm) {
    if (norm.empty() || norm == "catalog") return r;
    if (norm == "standard") return r.standard();
    if (norm == "odd1") {
        for (const auto& p : r.positive())
            if (p.parity == 1 && !p.norm.is_zero()) return r.scaled(p.norm.inverse());
        throw Unsupported(r.id + " has no odd root of nonzero norm");
    }
    Rational g = parse_rational(norm);
    if (g.sign() == 0) throw Unsupported("--norm scale must be nonzero");
    return r.scaled(g);
}

Scalar parse_scalar(const std::string& s) {
    try {
        return Scalar::parse(s);
    } catch (const std::exception& e) {
        throw Unsupported(std::string("bad value: ") + e.what());
    }
}

Report cmd_simplicity(const std::string& algebra, const std::string& family, const std::string& k,
                      const std::string& c, const std::string& norm) {
    Report rep;
    rep.query = {{"command", "simplicity"}};
    rep.tsv_header = {"subject", "value", "status", "witness", "criterion"};
    auto add = [&](const std::string& key, const Verdict& v) {
        rep.result[key] = verdict_json(v);
        rep.human.push_back(verdict_line(v));
        rep.tsv_rows.push_back({v.subject, v.value, status_name(v.status), v.witness, v.criterion});
        rep.provenance[key] = v.criterion;
    };
    if (!family.empty()) {
        if (c.empty()) throw Unsupported("--family needs --c");
        rep.query["family"] = family;
        rep.query["c"] = c;
        try {
            add("superconformal", superconformal_simple(family, parse_scalar(c)));
        } catch (const std::invalid_argument& e) {
            throw Unsupported(e.what());
        }
        return rep;
    }
    if (algebra.empty()) throw Unsupported("give --algebra or --family");
    rep.query["algebra"] = algebra;
    if (algebra == "Vir" || algebra == "NS") {
        if (c.empty()) throw Unsupported(algebra + " needs --c");
        rep.query["c"] = c;
        Scalar cs = parse_scalar(c);
        add("vacuum", algebra == "Vir" ? virasoro_simple(cs) : ns_simple(cs));
        rep.result["c2_condition"] = c2_condition(algebra, cs);
        rep.human.push_back(std::string("C2 condition: ") + (c2_condition(algebra, cs) ? "holds" : "fails"));
        return rep;
    }
    if (k.empty()) throw Unsupported("--algebra needs --k");
    rep.query["k"] = k;
    rep.query["norm"] = norm.empty() ? "catalog" : norm;
    Scalar ks = parse_scalar(k);
    if (strip_hat(algebra) == "D(2,1,a)") {
        if (!norm.empty() && norm != "catalog") throw Unsupported("D(2,1,a) with irrational a uses the catalog form only");
        add("vacuum", vacuum_irreducible_d21a(ks));
        return rep;
    }
    RootSystem r = normalized(lookup(algebra), norm);
    add("vacuum", vacuum_irreducible(r, ks));
    try {
        add("w_algebra", w_algebra_simple(r, ks));
    } catch (const std::exception& e) {
        rep.result["w_algebra"] = {{"error", e.what()}};
    }
    return rep;
}

// ---------------------------------------------------------------- kl

// cached polynomial values keyed "<kind>|<x>|<z>", stored as coefficient lists
class KLCache {
public:
    explicit KLCache(const std::string& diagram) {
        const char* dir = std::getenv("VACDET_CACHE_DIR");
        if (!dir || !*dir) return;
        path_ = fs::path(dir) / ("kl-" + diagram + ".json");
        std::ifstream in(path_);
        if (in) {
            try {
                in >> data_;
            } catch (const std::exception&) {
                data_ = json::object();   // unreadable cache is rebuilt
            }
        }
    }
    std::optional<ExactPoly> get(const std::string& key) const {
        if (path_.empty() || !data_.contains(key)) return std::nullopt;
        return coeffs_to_poly(data_[key].get<KLTable::Coeffs>());
    }
    void put(const std::string& key, const ExactPoly& p) {
        if (path_.empty()) return;
        KLTable::Coeffs c(p.degree_in("q") + 1, 0);
        for (const auto& [e, v] : p.terms()) c[p.vars().empty() ? 0 : e[0]] = v.to_long();
        data_[key] = c;
        dirty_ = true;
    }
    ~KLCache() {
        if (!dirty_) return;
        std::error_code ec;
        fs::create_directories(path_.parent_path(), ec);
        std::ofstream(path_) << data_.dump();
    }

private:
    fs::path path_;
    json data_ = json::object();
    bool dirty_ = false;
};

Report cmd_kl(const std::string& diagram, const std::vector<std::string>& q, const std::vector<std::string>& p,
              const std::vector<std::string>& r, const std::vector<std::string>& m, const std::string& theta,
              int bound) {
    Report rep;
    rep.query = {{"command", "kl"}, {"diagram", diagram}};
    std::shared_ptr<CoxeterGroup> g;
    try {
        g = CoxeterGroup::diagram(diagram);
    } catch (const std::invalid_argument& e) {
        throw Unsupported(e.what());
    }
    KLTable t(g);
    KLCache cache(diagram);
    rep.tsv_header = {"kind", "x", "z", "poly"};
    auto elem = [&](const std::string& w) {
        try {
            return g->parse(w);
        } catch (const std::invalid_argument& e) {
            throw Unsupported(e.what());
        }
    };
    auto cached = [&](const std::string& kind, CoxElem x, CoxElem z, auto compute) {
        std::string key = kind + "|" + g->str(x) + "|" + g->str(z);
        if (auto hit = cache.get(key)) return *hit;
        ExactPoly v = compute();
        cache.put(key, v);
        return v;
    };
    auto pair_query = [&](const std::string& kind, const std::vector<std::string>& w) {
        if (w.empty()) return;
        CoxElem x = elem(w[0]), z = elem(w[1]);
        json j{{"x", g->str(x)}, {"z", g->str(z)}, {"bruhat_leq", g->bruhat_leq(x, z)},
               {"l_x", g->length(x)}, {"l_z", g->length(z)}};
        ExactPoly v;
        if (kind == "Q") {
            v = cached("Q", x, z, [&] { return t.q_poly(x, z); });
            ExactPoly viaR = cached("QR", x, z, [&] { return t.q_poly_via_r(x, z); });
            j["routes_agree"] = (v == viaR);
            if (!(v == viaR)) {
                j["via_r"] = viaR.str();
                rep.exit_code = kExitMismatch;
            }
        } else if (kind == "P") {
            v = cached("P", x, z, [&] { return t.p_poly(x, z); });
        } else if (kind == "R") {
            v = cached("R", x, z, [&] { return t.r_poly(x, z); });
        } else {
            v = cached("M", x, z, [&] { return t.m_statistic(x, z); });
        }
        j["poly"] = v.is_zero() ? "0" : v.str();
        rep.result[kind] = j;
        rep.human.push_back(kind + "_{" + g->str(x) + "," + g->str(z) + "} = " + j["poly"].get<std::string>());
        rep.tsv_rows.push_back({kind, g->str(x), g->str(z), j["poly"].get<std::string>()});
    };
    try {
        pair_query("Q", q);
        pair_query("P", p);
        pair_query("R", r);
        pair_query("M", m);
        if (!theta.empty()) {
            ThetaResult th = theta_member(theta, diagram, bound);
            rep.cutoffs["length_bound"] = bound;
            json j{{"node", theta}, {"member", th.member}, {"searched", th.searched}};
            if (th.member) {
                j["witness"] = th.witness;
                j["Q"] = th.q.str();
                j["routes_agree"] = th.routes_agree;
                if (!th.routes_agree) rep.exit_code = kExitMismatch;
                rep.human.push_back("(" + theta + ", " + diagram + ") member: Q_{" + theta + "," + th.witness +
                                    "} = " + th.q.str());
            } else {
                j["status"] = "non-member up to length " + std::to_string(bound);
                rep.human.push_back("(" + theta + ", " + diagram + ") non-member up to length " + std::to_string(bound));
            }
            rep.result["theta"] = j;
            rep.tsv_rows.push_back({"theta", theta, th.witness, th.member ? th.q.str() : "1"});
        }
    } catch (const std::length_error& e) {
        throw Unsupported(e.what());
    }
    if (rep.human.empty()) throw Unsupported("nothing to compute: give --q, --p, --r, --m or --theta");
    return rep;
}

// ---------------------------------------------------------------- identity, mb

Report cmd_identity(const std::string& name, int cutoff, bool perturb) {
    Report rep;
    rep.query = {{"command", "identity"}, {"name", name}, {"perturb", perturb}};
    IdentityResult r;
    try {
        r = identity_check(name, cutoff, perturb);
    } catch (const std::invalid_argument& e) {
        throw Unsupported(e.what());
    }
    rep.cutoffs["cutoff"] = r.cutoff;
    rep.result = {{"name", r.name}, {"ok", r.ok}};
    if (!r.ok) rep.result["first_mismatch"] = r.first_mismatch;
    rep.human.push_back(r.name + " to " + std::to_string(r.cutoff) + ": " + (r.ok ? "PASS" : "FAIL " + r.first_mismatch));
    rep.tsv_header = {"name", "cutoff", "result"};
    rep.tsv_rows.push_back({r.name, std::to_string(r.cutoff), r.ok ? "PASS" : "FAIL"});
    if (!r.ok) rep.exit_code = kExitMismatch;
    return rep;
}

Report cmd_mb(const std::string& algebra, const std::string& b, int cutoff, const std::string& route) {
    Report rep;
    RootSystem fin = lookup(algebra);
    VacuumRoute vr = parse_route(route, fin);
    Rational bv = parse_rational(b);
    if (cutoff < 1) throw Unsupported("cutoff too small: --cutoff must be >= 1");
    MbSeries s = mb_series(fin, bv, cutoff, vr);
    rep.query = {{"command", "mb"}, {"algebra", fin.id + "^"}, {"b", bv.str()}};
    rep.cutoffs["delta_depth"] = cutoff;
    rep.provenance["route"] = route_name(vr);
    rep.result = {{"verdict", s.verdict()}, {"nonzero", s.nonzero()}};
    rep.tsv_header = {"nu", "coefficient"};
    json terms = json::array();
    int shown = 0;
    for (const auto& [nu, c] : s.series.support()) {
        if (c == 0) continue;
        rep.tsv_rows.push_back({coords_str(nu), std::to_string(c)});
        if (shown++ < 8) terms.push_back({{"nu", coords_str(nu)}, {"coefficient", c}});
    }
    rep.result["leading_terms"] = terms;
    rep.human.push_back("M_" + bv.str() + " for " + fin.id + "^: " + s.verdict());
    if (!s.nonzero()) rep.human.push_back("(a zero result says nothing past delta-depth " + std::to_string(cutoff) + ")");
    return rep;
}

const char* kFooter = R"(Output formats: --format json|tsv|human (default human).
Exit codes: 0 success, 2 oracle/route mismatch or failed identity, 3 unsupported input.
Values are exact: rationals as p/q, sums like -3/2+1/3, "irrational", or c0+ca*a (e.g. 1/2+3/4a)
for D(2,1,a) with a irrational.
Config: --config FILE (or VACDET_CONFIG) reads key=value lines; subcommand defaults go under
a [section], e.g.
    format=json
    [mb]
    cutoff=12
    [kl]
    bound=10
Cache: if VACDET_CACHE_DIR is set, KL polynomials are memoized in <dir>/kl-<diagram>.json.)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinant formulas for vacuum modules, simplicity criteria and KL polynomials"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.set_config("--config", "", "key=value file with default options")->envname("VACDET_CONFIG");
    std::string format = "human";
    app.add_option("--format", format, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}))
        ->capture_default_str();

    DetArgs da;
    auto* det = app.add_subcommand("det", "factored determinants, optionally checked against the Gram-matrix oracle");
    det->add_option("kind", da.kind, "virasoro | verma | ns | vacuum | genverma")->required();
    det->add_option("--algebra", da.algebra, "Vir, sl2^, osp(1|2)^, sl(1|2)^, sl3, ... (catalog ids)");
    det->add_option("--N", da.N, "level (half-integers allowed for ns)");
    det->add_option("--depth", da.depth, "delta-depth for vacuum tables")->capture_default_str();
    det->add_option("--height", da.height, "height for genverma tables");
    det->add_option("--nu", da.nu, "single weight, comma-separated simple-root coordinates (alpha_0 first if affine)");
    det->add_option("--I", da.I, "parabolic subset for genverma, comma-separated simple-root indices");
    det->add_option("--route", da.route, "vacuum route: cordet, isotropic, osp");
    det->add_flag("--oracle", da.oracle, "compare with the brute-force Gram determinant");

    std::string s_alg, s_fam, s_k, s_c, s_norm;
    auto* simp = app.add_subcommand("simplicity", "irreducibility and simplicity verdicts");
    simp->add_option("--algebra", s_alg, "catalog id, D(2,1,a) for irrational a, Vir or NS");
    simp->add_option("--family", s_fam, "N1, N2, N3, N4, bigN4");
    simp->add_option("--k", s_k, "level");
    simp->add_option("--c", s_c, "central charge");
    simp->add_option("--norm", s_norm, "catalog (default), standard, odd1, or a rational scale of the catalog form");

    std::string kl_diag = "A3", kl_theta;
    std::vector<std::string> kl_q, kl_p, kl_r, kl_m;
    int kl_bound = 10;
    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig R, P, inverse Q polynomials and theta membership");
    kl->add_option("--diagram", kl_diag, "A3, C3, G2, affine-A2, affine-C2, affine-G2, ...")->capture_default_str();
    kl->add_option("--q", kl_q, "x z: inverse polynomial Q_{x,z} by both routes")->expected(2);
    kl->add_option("--p", kl_p, "x z: P_{x,z}")->expected(2);
    kl->add_option("--r", kl_r, "x z: R_{x,z}")->expected(2);
    kl->add_option("--m", kl_m, "x z: M(x,z)")->expected(2);
    kl->add_option("--theta", kl_theta, "node label, e.g. s0: search w with Q_{s,w} != 1");
    kl->add_option("--bound", kl_bound, "length bound for --theta")->capture_default_str();

    std::string id_name;
    int id_cut = 60;
    bool id_perturb = false;
    auto* ident = app.add_subcommand("identity", "series identities checked coefficientwise");
    ident->add_option("--name", id_name, "virasoro-degree (vircon1), ns-degree, leading-term, isotropic-denominator")
        ->required();
    ident->add_option("--cutoff", id_cut)->capture_default_str();
    ident->add_flag("--perturb", id_perturb, "negative control: check a deliberately damaged copy");

    std::string mb_alg, mb_b, mb_route;
    int mb_cut = 12;
    auto* mb = app.add_subcommand("mb", "the series M_b up to a delta-depth");
    mb->add_option("--algebra", mb_alg, "finite catalog id, with or without ^")->required();
    mb->add_option("--b", mb_b, "exact rational b")->required();
    mb->add_option("--cutoff", mb_cut, "delta-depth")->capture_default_str();
    mb->add_option("--route", mb_route, "cordet, isotropic, osp (default by algebra)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUnsupported;
    }

    try {
        Report rep;
        if (*det) rep = cmd_det(da);
        else if (*simp) rep = cmd_simplicity(s_alg, s_fam, s_k, s_c, s_norm);
        else if (*kl) rep = cmd_kl(kl_diag, kl_q, kl_p, kl_r, kl_m, kl_theta, kl_bound);
        else if (*ident) rep = cmd_identity(id_name, id_cut, id_perturb);
        else rep = cmd_mb(mb_alg, mb_b, mb_cut, mb_route);
        rep.emit(format);
        return rep.exit_code;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
}
