#include "doctest.h"
#include "vacdet/determinants.hpp"
#include "vacdet/simplicity.hpp"

using namespace vacdet;

namespace {

Status vac(const std::string& id, const std::string& k) {
    return vacuum_irreducible(catalog(id), Scalar::parse(k)).status;
}

std::vector<Rational> grid(int maxden, int maxnum) {
    std::vector<Rational> out;
    for (int d = 1; d <= maxden; ++d)
        for (int n = -maxnum; n <= maxnum; ++n)
            if (gcd_l(std::abs(n), d) == 1) out.emplace_back(n, d);
    return out;
}

}  // namespace

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse("-3/2+1/3").q == Rational(-7, 6));
    CHECK(Scalar::parse("1/2-3").q == Rational(-5, 2));
    CHECK(Scalar::parse("irrational").kind == Scalar::Irrational);
    auto a = Scalar::parse("-1-a");
    CHECK(a.kind == Scalar::ALin);
    CHECK(a.c0 == Rational(-1));
    CHECK(a.ca == Rational(-1));
    CHECK(Scalar::parse("2a-2a+1").kind == Scalar::Rat);
    CHECK_THROWS_AS(Scalar::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
}

TEST_CASE("vacuum modules: examples") {
    CHECK(vac("sl2", "-1/2") == Status::Reducible);
    CHECK(vac("sl2", "-3/2") == Status::Irreducible);
    CHECK(vac("sl2", "-2") == Status::Reducible);
    CHECK(vac("sl2", "irrational") == Status::Irreducible);
    // k + 3 = 1/3 with odd roots of norm 1
    RootSystem osp = catalog("osp(1|2)").scaled(Rational(1, 2));
    CHECK(osp.hvee() == Rational(3));
    CHECK(vacuum_irreducible(osp, Scalar::parse("-3+1/3")).status == Status::Irreducible);
    CHECK(vacuum_irreducible(osp, Scalar::parse("-3+1/2")).status == Status::Reducible);
    CHECK(vacuum_irreducible(osp, Scalar::parse("-3+1")).status == Status::Irreducible);
    // sl(1|n): k + n - 1 a non-negative rational
    CHECK(vac("sl(1|2)", "-1") == Status::Reducible);
    CHECK(vac("sl(1|2)", "-1/2") == Status::Reducible);
    CHECK(vac("sl(1|2)", "-3/2") == Status::Irreducible);
    CHECK(vac("sl(1|3)", "-2") == Status::Reducible);
    CHECK(vac("sl(1|3)", "-5/2") == Status::Irreducible);
    // both signs of even norms: every rational level is reducible
    for (const char* id : {"osp(3|2)", "F(4)", "G(3)", "D(2,1,a=1/2)", "gl(2|2)"})
        for (const char* k : {"-7/3", "5", "1/11"}) {
            CAPTURE(id);
            CHECK(vac(id, k) == Status::Reducible);
        }
    CHECK(vac("sl(2|3)", "1/7") == Status::ConjecturalReducible);
    auto w = vacuum_irreducible(catalog("sl2"), Scalar::parse("0"));
    CHECK_FALSE(w.witness.empty());
    REQUIRE(w.vanishing_b);
    CHECK(*w.vanishing_b == Rational(2));
}

TEST_CASE("Lie criterion in the lacety form") {
    // l(k + h) non-negative rational, not the inverse of an integer
    for (const char* id : {"sl2", "sl3", "B2", "C3", "G2"}) {
        RootSystem r = catalog(id).standard();
        Rational lmax, lmin;
        for (const auto& p : r.positive()) {
            if (lmax.is_zero() || p.norm > lmax) lmax = p.norm;
            if (lmin.is_zero() || p.norm < lmin) lmin = p.norm;
        }
        Rational l = lmax / lmin;
        for (const Rational& k : grid(6, 20)) {
            Rational x = l * (k + r.hvee());
            bool red = x.sign() >= 0 && !(x.sign() > 0 && x.num() == 1);
            CAPTURE(id);
            CAPTURE(k.str());
            CHECK((vacuum_irreducible(r, Scalar::rational(k)).status == Status::Reducible) == red);
        }
    }
}

TEST_CASE("D(2,1,a) with irrational a") {
    auto st = [](const char* k) { return vacuum_irreducible_d21a(Scalar::parse(k)).status; };
    CHECK(st("0") == Status::Reducible);
    CHECK(st("3/5") == Status::Reducible);
    CHECK(st("-3/5") == Status::Irreducible);
    CHECK(st("2a") == Status::Reducible);
    CHECK(st("-2a") == Status::Irreducible);
    CHECK(st("-1/2-1/2a") == Status::Reducible);
    CHECK(st("1/2+1/2a") == Status::Irreducible);
    CHECK(st("1+a") == Status::Irreducible);
    CHECK(st("irrational") == Status::Irreducible);
}

TEST_CASE("normalization does not change verdicts") {
    for (const char* id : {"sl2", "B2", "G2", "osp(1|2)", "osp(1|4)", "sl(1|2)", "osp(3|2)", "gl(2|2)"}) {
        RootSystem r = catalog(id);
        for (const Rational& g : {Rational(1, 2), Rational(2), Rational(3)}) {
            RootSystem s = r.scaled(g);
            for (const Rational& k : grid(4, 12)) {
                CAPTURE(id);
                CAPTURE(g.str());
                CAPTURE(k.str());
                CHECK(vacuum_irreducible(r, Scalar::rational(k)).status ==
                      vacuum_irreducible(s, Scalar::rational(k * g)).status);
            }
        }
    }
}

TEST_CASE("Virasoro and NS simplicity") {
    CHECK(virasoro_simple(Scalar::parse("0")).witness == "(p,q) = (3,2)");
    CHECK(virasoro_simple(Scalar::parse("1/2")).witness == "(p,q) = (4,3)");
    CHECK(virasoro_simple(Scalar::parse("irrational")).status == Status::Simple);
    CHECK(virasoro_simple(Scalar::parse("1")).status == Status::Simple);
    CHECK(virasoro_simple(Scalar::parse("-2")).status == Status::Simple);   // c_{2,1}
    for (long p = 3; p <= 12; ++p)
        for (long q = 2; q < p; ++q) {
            if (gcd_l(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto v = virasoro_simple(Scalar::rational(c_pq(p, q)));
            CHECK(v.status == Status::NotSimple);
            CHECK(v.witness == "(p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    CHECK(ns_simple(Scalar::parse("0")).witness == "(p,q) = (4,2)");
    for (long p = 3; p <= 16; ++p)
        for (long q = 2; q < p; ++q)
            if (in_Y(p, q)) CHECK(ns_simple(Scalar::rational(cS_pq(p, q))).status == Status::NotSimple);
    CHECK(ns_simple(Scalar::parse("3/2")).status == Status::Simple);
    CHECK(c2_condition("Vir", Scalar::parse("0")));
    CHECK_FALSE(c2_condition("Vir", Scalar::parse("irrational")));
    CHECK(c2_condition("NS", Scalar::parse("0")));
    CHECK_THROWS_AS(c2_condition("N2", Scalar::parse("0")), std::invalid_argument);
}

TEST_CASE("N1 clause agrees with the NS rule") {
    std::vector<Rational> cs = grid(12, 40);
    for (long p = 2; p <= 20; ++p)
        for (long q = 1; q < p; ++q) cs.push_back(cS_pq(p, q));
    for (const Rational& c : cs) {
        CAPTURE(c.str());
        CHECK(superconformal_simple("N1", Scalar::rational(c)).status ==
              ns_simple(Scalar::rational(c)).status);
    }
}

TEST_CASE("superconformal clauses") {
    CHECK(superconformal_simple("N2", Scalar::parse("0")).status == Status::NotSimple);
    CHECK(superconformal_simple("N2", Scalar::parse("-3")).status == Status::Simple);   // p/q = 1
    CHECK(superconformal_simple("N2", Scalar::parse("irrational")).status == Status::Simple);
    CHECK(superconformal_simple("N3", Scalar::parse("-3")).status == Status::Unknown);
    CHECK(superconformal_simple("N3", Scalar::parse("-6")).status == Status::NotSimple);
    CHECK(superconformal_simple("N3", Scalar::parse("irrational")).status == Status::Simple);
    CHECK(superconformal_simple("N4", Scalar::parse("-6")).status == Status::Unknown);
    CHECK(superconformal_simple("N4", Scalar::parse("-12")).status == Status::Unknown);
    CHECK(superconformal_simple("N4", Scalar::parse("-3")).status == Status::NotSimple);
    CHECK(superconformal_simple("bigN4", Scalar::parse("2")).status == Status::NotSimple);
    CHECK(superconformal_simple("bigN4", Scalar::parse("2a")).status == Status::NotSimple);
    CHECK(superconformal_simple("bigN4", Scalar::parse("-2-2a")).status == Status::NotSimple);
    CHECK(superconformal_simple("bigN4", Scalar::parse("1-a")).status == Status::Simple);
    CHECK(superconformal_simple("N1", Scalar::parse("irrational")).status == Status::Simple);
    CHECK_THROWS_AS(superconformal_simple("N5", Scalar::parse("0")), std::invalid_argument);
}

TEST_CASE("minimal W-algebras") {
    RootSystem sl3 = catalog("sl3");
    CHECK(w_algebra_simple(sl3, Scalar::parse("1/2-3")).status == Status::Simple);
    CHECK(w_algebra_simple(sl3, Scalar::parse("0")).status == Status::NotSimple);
    CHECK(w_algebra_simple(sl3, Scalar::parse("-3")).status == Status::NotSimple);
    RootSystem sl2 = catalog("sl2");
    for (int k = 0; k <= 6; ++k) CHECK(w_algebra_simple(sl2, Scalar::rational(k)).status == Status::Simple);
    CHECK(w_central_charge(sl2, Rational(0)) == Rational(-2));

    // N = 2 is W^k(sl(2|1)) with c = -3 - 6k; N = 1 is W^k(osp(1|2))
    RootSystem s12 = catalog("sl(1|2)"), o12 = catalog("osp(1|2)");
    for (const Rational& k : grid(6, 24)) {
        CAPTURE(k.str());
        if (k != Rational(-1)) {
            Rational c = w_central_charge(s12, k);
            CHECK(c == Rational(-3) - Rational(6) * k);
            CHECK(w_algebra_simple(s12, Scalar::rational(k)).status ==
                  superconformal_simple("N2", Scalar::rational(c)).status);
        }
        if (k != Rational(-3, 2)) {
            Rational c = w_central_charge(o12, k);
            CHECK(w_algebra_simple(o12, Scalar::rational(k)).status ==
                  superconformal_simple("N1", Scalar::rational(c)).status);
        }
        if (k != Rational(-2)) {
            CHECK(w_algebra_simple(sl2, Scalar::rational(k)).status ==
                  virasoro_simple(Scalar::rational(w_central_charge(sl2, k))).status);
        }
    }
    // length of V^k open for the other superalgebras
    CHECK(w_algebra_simple(catalog("osp(3|2)"), Scalar::parse("1")).status == Status::Unknown);
    CHECK(w_algebra_simple(catalog("osp(3|2)"), Scalar::parse("1/2")).status == Status::NotSimple);
}
