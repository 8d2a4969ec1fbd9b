#include "doctest.h"
#include "vacdet/roots.hpp"

using namespace vacdet;

TEST_CASE("catalog entries build and validate") {
    for (const auto& id : catalog_examples()) {
        CAPTURE(id);
        RootSystem r = catalog(id);
        CHECK_NOTHROW(r.validate());
    }
    CHECK_THROWS(catalog("E6"));
    CHECK_THROWS(catalog("D(2,1,a=-1)"));
    CHECK_THROWS(catalog("A0"));
}

TEST_CASE("Lie root counts") {
    CHECK(catalog("A3").pos.size() == 6);
    CHECK(catalog("B3").pos.size() == 9);
    CHECK(catalog("C3").pos.size() == 9);
    CHECK(catalog("D4").pos.size() == 12);
    CHECK(catalog("G2").pos.size() == 6);
    CHECK(catalog("F4").pos.size() == 24);
}

TEST_CASE("dual Coxeter numbers in standard normalization") {
    auto hv = [](const std::string& id) { return catalog(id).standard().hvee(); };
    CHECK(hv("A1") == Rational(2));
    CHECK(hv("A3") == Rational(4));
    CHECK(hv("B3") == Rational(5));
    CHECK(hv("C3") == Rational(4));
    CHECK(hv("D4") == Rational(6));
    CHECK(hv("G2") == Rational(4));
    CHECK(hv("F4") == Rational(9));
    CHECK(hv("F(4)") == Rational(3));
    CHECK(hv("G(3)") == Rational(2));
    CHECK(hv("D(2,1,a=1/2)") == Rational(0));
    CHECK(hv("gl(2|2)") == Rational(0));
    CHECK(hv("sl(1|3)") == Rational(2));
    CHECK(hv("osp(2|4)") == Rational(2));   // C(3)
    CHECK(hv("osp(3|2)") == Rational(1, 2));
    CHECK(hv("osp(5|2)") == Rational(1));
    CHECK(hv("osp(6|2)") == Rational(2));
}

TEST_CASE("catalog rho and theta as listed") {
    RootSystem s = catalog("sl(1|3)");
    CHECK(s.rho == QVec{Rational(-3, 2), Rational(3, 2), Rational(1, 2), Rational(-1, 2)});
    CHECK(*s.theta == QVec{1, 0, 0, -1});
    RootSystem d = catalog("osp(6|2)");
    CHECK(*d.theta == QVec{2, 0, 0, 0});
    CHECK(d.rho == QVec{-2, 2, 1, 0});
    RootSystem x = catalog("D(2,1,a=3)");
    CHECK(x.bil(x.simple[0], x.simple[0]).is_zero());
    CHECK(x.bil(QVec{1, 0, 0}, QVec{1, 0, 0}) == Rational(-2));
}

TEST_CASE("affinization") {
    AffineSystem a(catalog("A1"));
    // alpha_0 = delta - theta : depth 1, finite part -alpha
    Coords a0{1, 0};
    CHECK(a.finite_part(a0) == Coords{-1});
    CHECK(a.rho_pair({1, 1}) == Rational(2));
    CHECK(a.form(a0, a0) == Rational(2));
    CHECK(a.phi(a0).str() == "k");
    CHECK(a.phi({1, 1}) == ExactPoly::var("k") + ExactPoly(2));
    AffineSystem g(catalog("gl(2|2)"));
    bool found = false;
    for (const auto& r : g.roots_of_depth(1))
        if (r.imaginary) {
            CHECK(r.mult == 3);
            found = true;
        }
    CHECK(found);
    Weight l0{QVec(1), Rational(1), Rational(0)};
    Weight k = {QVec(1), Rational(5), Rational(0)};
    CHECK(a.casimir(k).is_zero());
    CHECK(a.bil(l0, a.weight_of({1, 1})) == Rational(1));
}

TEST_CASE("Weyl groups") {
    auto A2 = catalog("A2").weyl_group();
    CHECK(A2.size() == 6);
    int s = 0;
    for (auto& w : A2) s += w.sign();
    CHECK(s == 0);
    CHECK(catalog("D(2,1,a=1/2)").weyl_group().size() == 4);
    CHECK(catalog("osp(7|2)").weyl_group().size() == 48);
    CHECK(catalog("osp(5|2)").weyl_group().size() == 8);
    CHECK(catalog("G2").weyl_group().size() == 12);
    // orthogonality of every element
    for (const auto& id : {"A2", "B2", "G2", "osp(3|4)", "F(4)", "G(3)"}) {
        RootSystem r = catalog(id);
        for (const auto& w : r.weyl_group())
            for (int i = 0; i < r.amb; ++i)
                for (int j = 0; j < r.amb; ++j) {
                    QVec ei(r.amb), ej(r.amb);
                    ei[i] = 1;
                    ej[j] = 1;
                    CHECK(r.bil(matvec(w.act, ei), matvec(w.act, ej)) == r.bil(ei, ej));
                }
    }
    // A1: s.0 = -alpha.  In A2, s1 dot-fixes lambda iff (lambda+rho|alpha1) = 0, so -alpha1 is not fixed
    RootSystem a1 = catalog("A1");
    auto W1 = a1.weyl_group();
    CHECK(a1.dot_coords(W1[1], {0}) == Coords{-1});
    RootSystem a2 = catalog("A2");
    for (auto& w : a2.weyl_group())
        if (w.word == std::vector<int>{0}) {
            CHECK(a2.dot_coords(w, {-1, 0}) == Coords{0, 0});
            CHECK(a2.dot_coords(w, {0, 0}) == Coords{-1, 0});
            // -rho + omega2 pairs to zero with alpha1 after the shift
            QVec lam = qadd(qscale(a2.rho, -1), QVec{Rational(1, 3), Rational(2, 3)});
            CHECK(a2.bil(qadd(lam, a2.rho), a2.simple[0]).is_zero());
            CHECK(a2.dot(w, lam) == lam);
        }
}
