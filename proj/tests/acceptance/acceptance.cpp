// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "vacdet/determinants.hpp"
#include "vacdet/kl.hpp"
#include "vacdet/oracle.hpp"
#include "vacdet/partitions.hpp"
#include "vacdet/properties.hpp"
#include "vacdet/simplicity.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace vacdet;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void fail(const std::string& why) {
        if (pass) note << "first failure: " << why << "; ";
        pass = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1
void virasoro_vacuum_crit(Outcome& o) {
    auto t0 = Clock::now();
    auto vac = virasoro_vacuum(7);
    for (int N = 0; N <= 7; ++N) {
        ExactPoly b = vac.det({N});
        auto f = virasoro_vacuum_det(N);
        o.expect(f.matches(b), "N=" + std::to_string(N) + " product differs from Gram determinant");
        o.expect(f.total_degree() == b.total_degree(), "degree at N=" + std::to_string(N));
        // zeros of the Gram determinant itself, with multiplicity
        auto zf = f.zero_multiset("c");
        std::vector<Rational> roots;
        for (const auto& [z, m] : zf) roots.push_back(z);
        auto split = divide_linear_factors(b, "c", roots);
        bool same = split.remainder.is_constant();
        for (std::size_t i = 0; i < roots.size(); ++i) same = same && split.exponents[i] == zf[roots[i]];
        o.expect(same, "zero multiset at N=" + std::to_string(N));
    }
    o.expect(virasoro_vacuum_det(2).str() == "(c)", "N=2 is not c");
    o.expect(virasoro_vacuum_det(4).str() == "(c)^2 (c + 22/5)", "N=4 is not c^2(c+22/5)");
    double s = seconds_since(t0);
    o.expect(s < 60, "runtime");
    o.note << "N=0..7, " << s << " s";
}

// 2
void kac_crit(Outcome& o) {
    auto t0 = Clock::now();
    auto ver = virasoro_verma(5);
    for (int N = 1; N <= 5; ++N)
        o.expect(virasoro_verma_det(N).matches(ver.det({N})), "N=" + std::to_string(N));
    double s = seconds_since(t0);
    o.expect(s < 120, "runtime");
    o.note << "N=1..5, " << s << " s";
}

// 3
void ns_crit(Outcome& o) {
    auto t0 = Clock::now();
    auto ns = ns_vacuum(15);
    for (int N = 0; N <= 15; ++N) {
        ExactPoly b = ns.det({N});
        auto f = ns_vacuum_det(N);
        o.expect(f.matches(b), "2N=" + std::to_string(N));
        o.expect(f.total_degree() == b.total_degree(), "degree at 2N=" + std::to_string(N));
    }
    o.expect(ns_vacuum_det(3).str() == "(c)", "2N=3 is not c");
    o.expect(in_Y(4, 2) && cS_pq(4, 2) == Rational(0), "(4,2) does not give c = 0");
    double s = seconds_since(t0);
    o.expect(s < 120, "runtime");
    o.note << "2N=0..15, " << s << " s";
}

// 4
void affine_crit(Outcome& o) {
    auto t0 = Clock::now();
    int checked = 0;
    struct Case {
        FiniteAlgebra F;
        VacuumRoute route;
    };
    for (const Case& c : {Case{finite_sl(2), VacuumRoute::Cordet}, Case{finite_osp12(), VacuumRoute::OddSymplectic}}) {
        RootSystem fin = catalog(c.F.catalog_id);
        PBWModule mod = affine_vacuum(c.F, 2);
        for (const Coords& nu : enumerate_cone(2, 6)) {
            if (nu[0] > 2) continue;
            o.expect(vacuum_det(fin, nu, c.route).matches(mod.det(nu)), c.F.catalog_id + " at " + coords_str(nu));
            ++checked;
        }
    }
    o.expect(vacuum_det(catalog("sl2"), {1, 0}).str() == "(k)", "delta - alpha is not k");
    double s = seconds_since(t0);
    o.expect(s < 300, "runtime");
    o.note << checked << " weights, " << s << " s";
}

// 5
void identity_crit(Outcome& o) {
    struct Case {
        const char* name;
        int cutoff;
    };
    for (const Case& c : {Case{"virasoro-degree", 60}, Case{"ns-degree", 60}, Case{"isotropic-denominator", 8},
                          Case{"leading-term", 4}}) {
        auto r = identity_check(c.name, c.cutoff);
        o.expect(r.ok, std::string(c.name) + " " + r.first_mismatch);
        auto bad = identity_check(c.name, c.cutoff, true);
        o.expect(!bad.ok, std::string(c.name) + " perturbed copy passed");
        o.note << c.name << "@" << r.cutoff << " ";
    }
}

// 6
void mb_crit(Outcome& o) {
    const int H = 12;
    std::vector<Rational> inv, neg, big, pos;
    for (int q = 1; q <= 4; ++q) inv.emplace_back(1, q);
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 3; ++q)
            if (gcd_l(p, q) == 1) {
                neg.emplace_back(-p, q);
                pos.emplace_back(p, q);
                if (p >= 2) big.emplace_back(p, q);
            }
    auto sl2 = VacuumEngine::for_depth(catalog("sl2"), H, VacuumRoute::Cordet);
    for (const auto& b : inv) o.expect(sl2.mb(b).is_zero(), "sl2^ M_" + b.str() + " nonzero");
    for (const auto& b : neg) o.expect(sl2.mb(b).is_zero(), "sl2^ M_" + b.str() + " nonzero");
    for (const auto& b : big) o.expect(!sl2.mb(b).is_zero(), "sl2^ M_" + b.str() + " zero");

    auto osp = VacuumEngine::for_depth(catalog("osp(1|2)"), H, VacuumRoute::OddSymplectic);
    std::vector<std::string> missed;
    for (const auto* grid : {&inv, &neg, &big})
        for (const auto& b : *grid) {
            bool want = b.num() >= 0 && b.num() != 2;
            bool got = !osp.mb(b).is_zero();
            if (want != got) missed.push_back(b.str());
            o.expect(want == got, "osp(1|2)^ M_" + b.str() + (got ? " nonzero" : " zero"));
        }

    auto s12 = VacuumEngine::for_depth(catalog("sl(1|2)"), H, default_mb_route(catalog("sl(1|2)")));
    for (const auto& b : pos) {
        o.expect(!s12.mb(b).is_zero(), "sl(1|2)^ M_" + b.str() + " zero");
        o.expect(s12.mb(-b).is_zero(), "sl(1|2)^ M_-" + b.str() + " nonzero");
    }
    o.note << "depth " << H;
    if (!missed.empty()) {
        o.note << "; osp(1|2)^ cells off pattern:";
        for (const auto& m : missed) o.note << " " << m;
    }
}

// 7
void kl_crit(Outcome& o) {
    struct Case {
        const char* d;
        const char* x;
        const char* z;
        std::vector<long long> want;
    };
    for (const Case& c : {Case{"A3", "s2", "s2s1s3s2", {1, 1}},
                          Case{"C3", "s1", "s1s2s1s3s2s1", {1, 0, 1}},
                          Case{"affine-A2", "s0", "s0s1s2s0", {1, 1}},
                          Case{"affine-C2", "s0", "s0s1s0s2s1s0", {1, 0, 1}},
                          Case{"affine-G2", "s0", "s0s1s2s1s2s0s1s2s1s0", {1, 0, 0, 0, 1}}}) {
        auto g = CoxeterGroup::diagram(c.d);
        KLTable t(g);
        CoxElem x = g->parse(c.x), z = g->parse(c.z);
        ExactPoly want = coeffs_to_poly(c.want);
        ExactPoly q = t.q_poly(x, z);
        o.expect(q == want, std::string(c.d) + " Q = " + q.str());
        o.expect(t.q_poly_via_r(x, z) == want, std::string(c.d) + " R-route");
    }
    for (const char* d : {"A1xA1", "A2", "B2", "G2"}) {
        auto g = CoxeterGroup::diagram(d);
        KLTable t(g);
        for (int s = 0; s < g->rank(); ++s)
            for (CoxElem w : g->elements_up_to(100))
                if (g->bruhat_leq(g->gen(s), w))
                    o.expect(t.q_poly(g->gen(s), w) == ExactPoly(1), std::string(d) + " Q_{s," + g->str(w) + "} != 1");
    }
    // both Q routes on every pair of a bounded ball
    std::size_t pairs = 0;
    for (auto [d, len] : {std::pair{"A3", 6}, std::pair{"C3", 9}, std::pair{"affine-A2", 7},
                          std::pair{"affine-C2", 7}, std::pair{"affine-G2", 10}, std::pair{"G2", 6}}) {
        auto g = CoxeterGroup::diagram(d);
        KLTable t(g);
        auto ball = g->elements_up_to(len);
        for (CoxElem x : ball)
            for (CoxElem z : ball) {
                if (!g->bruhat_leq(x, z)) continue;
                ++pairs;
                o.expect(t.q_poly(x, z) == t.q_poly_via_r(x, z), std::string(d) + " routes differ");
            }
    }
    o.note << pairs << " comparable pairs on both routes";
}

// 8
void singular_crit(Outcome& o) {
    const std::map<std::string, Rational> c0{{"c", Rational(0)}};
    auto vir = virasoro_vacuum(7);
    auto sv = vir.singular_vectors({2}, c0);
    o.expect(sv.size() == 1 && sv[0].size() == 1 && vir.mono_str(sv[0].begin()->first) == "L_{-2}",
             "Vir c=0 level 2 singular vector");
    if (sv.size() == 1) {
        auto rep = verify_minimal_monomial(vir, sv[0], c0, "Vir");
        o.expect(rep.matches, "Vir minimal monomial shape");
    }
    auto ns = ns_vacuum(7);
    auto nsv = ns.singular_vectors({3}, c0);
    o.expect(nsv.size() == 1 && ns.vec_str(nsv[0]) == "(1)L_{-3/2}", "NS c=0 level 3/2 singular vector");
    if (nsv.size() == 1) {
        auto w = ns.act(ns.algebra().find("L_{-1/2}"), nsv[0]);
        o.expect(c2_singular_form(ns, w, "NS"), "L_{-1/2} applied is not of C2 form");
    }
    for (auto [p, q] : {std::pair{3L, 2L}, std::pair{5L, 2L}, std::pair{4L, 3L}}) {
        Rational c = c_pq(p, q);
        for (int N = 1; N <= 7; ++N) {
            ExactPoly b = vir.det({N});
            auto ord = divide_linear_factors(b, "c", {c}).exponents[0];
            int64_t want = dim_Lpq(p, q, N);
            o.expect(ord == want, "order at c_{" + std::to_string(p) + "," + std::to_string(q) + "}, N=" +
                                      std::to_string(N) + ": " + std::to_string(ord) + " vs " + std::to_string(want));
        }
    }
    o.note << "vanishing orders for (3,2),(5,2),(4,3) at N<=7";
}

// 9
void crosscheck_crit(Outcome& o) {
    const int H = 12;
    int irr = 0, red = 0, beyond = 0, other = 0;
    for (const char* id : {"sl2", "osp(1|2)", "sl(1|2)"}) {
        RootSystem fin = catalog(id);
        auto eng = VacuumEngine::for_depth(fin, H, default_mb_route(fin));
        for (int d = 1; d <= 4; ++d)
            for (int n = -12; n <= 12; ++n) {
                if (gcd_l(std::abs(n), d) != 1) continue;
                Rational k(n, d);
                Verdict v = vacuum_irreducible(fin, Scalar::rational(k));
                Rational b = k + fin.hvee();
                bool vanishes = !eng.mb(b).is_zero();
                std::string tag = std::string(id) + " k=" + k.str();
                if (v.status == Status::Irreducible) {
                    ++irr;
                    o.expect(!vanishes, tag + " Irreducible but k+h-" + b.str() + " vanishes");
                } else if (v.status == Status::Reducible) {
                    ++red;
                    o.expect(v.vanishing_b && *v.vanishing_b == b, tag + " witness factor is not k+h-" + b.str());
                    if (!vanishes) ++beyond;
                } else {
                    ++other;
                }
            }
    }
    o.expect(other == 0, "verdicts other than Irreducible/Reducible");
    o.note << irr << " irreducible, " << red << " reducible (" << beyond << " beyond depth " << H << ")";
}

// 10
void property_crit(Outcome& o) {
    for (const char* id : {"A2", "B2", "G2"}) {
        auto r = small_norm_singular_check(catalog(id), 6);
        o.expect(r.ok(), std::string(id) + " small-norm weight " + r.first_failure);
    }
    for (const char* id : {"A2", "B2"}) {
        auto r = root_multiple_preimages(catalog(id), 40, 160);
        o.expect(r.ok(), std::string(id) + " dot preimages do not settle");
    }
    for (const char* id : {"sl(1|2)", "osp(3|2)", "gl(2|2)"}) {
        RootSystem r = catalog(id);
        Coords box(r.rank(), 8);
        DenseSeries R = denominator_R(positive_roots(r), box, 8);
        for (const Coords& a : enumerate_cone(r.rank(), 8))
            o.expect(R.at(a) == k_I_via_orbit(a, r), std::string(id) + " k_I at " + coords_str(a));
    }
    int verdicts = 0;
    for (const char* id : {"sl2", "sl3", "B2", "G2", "osp(1|2)", "osp(1|4)", "sl(1|2)", "osp(3|2)", "gl(2|2)", "F(4)"}) {
        RootSystem r = catalog(id);
        for (const Rational& g : {Rational(1, 2), Rational(2), Rational(3)}) {
            RootSystem s = r.scaled(g);
            for (int d = 1; d <= 4; ++d)
                for (int n = -12; n <= 12; ++n) {
                    if (gcd_l(std::abs(n), d) != 1) continue;
                    Rational k(n, d);
                    Verdict a = vacuum_irreducible(r, Scalar::rational(k));
                    Verdict b = vacuum_irreducible(s, Scalar::rational(k * g));
                    std::string tag = std::string(id) + " x" + g.str() + " k=" + k.str();
                    o.expect(a.status == b.status, tag);
                    o.expect(a.vanishing_b.has_value() == b.vanishing_b.has_value() &&
                                 (!a.vanishing_b || *a.vanishing_b * g == *b.vanishing_b),
                             tag + " vanishing b");
                    o.expect(w_algebra_simple(r, Scalar::rational(k)).status ==
                                 w_algebra_simple(s, Scalar::rational(k)).status,
                             tag + " W-algebra");
                    verdicts += 3;
                }
        }
    }
    o.note << verdicts << " scaled verdicts compared";
}

}  // namespace

int main() {
    std::cout << std::unitbuf;
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> crits = {
        {"Virasoro vacuum determinant", virasoro_vacuum_crit},
        {"Kac determinant", kac_crit},
        {"NS vacuum determinant", ns_crit},
        {"affine vacuum determinants", affine_crit},
        {"series identities", identity_crit},
        {"M_b patterns", mb_crit},
        {"KL values", kl_crit},
        {"singular vectors", singular_crit},
        {"verdicts vs determinant", crosscheck_crit},
        {"property suites", property_crit},
    };
    int failed = 0;
    for (std::size_t i = 0; i < crits.size(); ++i) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            crits[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " [" << crits[i].first
                  << "] " << o.note.str() << " (" << seconds_since(t0) << " s)\n";
    }
    std::cout << (crits.size() - failed) << "/" << crits.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
