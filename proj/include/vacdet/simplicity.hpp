#pragma once

#include "vacdet/rational.hpp"
#include "vacdet/roots.hpp"

#include <optional>
#include <string>

namespace vacdet {

// A scalar that is either an exact rational, an unspecified irrational number,
// or c0 + ca*a for the D(2,1,a) parameter a taken irrational.
struct Scalar {
    enum Kind { Rat, Irrational, ALin };
    Kind kind = Rat;
    Rational q;         // Rat
    Rational c0, ca;    // ALin

    static Scalar rational(const Rational& r) { return {Rat, r, {}, {}}; }
    static Scalar irrational() { return {Irrational, {}, {}, {}}; }
    static Scalar a_linear(const Rational& c0, const Rational& ca);   // collapses to Rat if ca = 0
    // "irrational", sums of rationals ("-3/2+1/3", "1/2-3"), terms with an a
    // suffix ("2a", "-1-a", "1/2+3/4a"); throws std::invalid_argument
    static Scalar parse(const std::string& s);
    bool is_rational() const { return kind == Rat; }
    std::string str() const;
};

enum class Status { Irreducible, Reducible, ConjecturalReducible, Unknown, Simple, NotSimple };
std::string status_name(Status s);

struct Verdict {
    std::string subject;     // algebra or family
    std::string value;       // k or c as given
    Status status = Status::Unknown;
    std::string witness;     // k_alpha and root, (p,q), "critical level", ...
    std::string criterion;   // short tag naming the rule that decided
    // b with (k + h - b) the factor that vanishes, in the form k was given in;
    // set for Reducible vacuum verdicts at rational k
    std::optional<Rational> vanishing_b;
};

// V^k over the affinization of r, k measured in r's own form.
Verdict vacuum_irreducible(const RootSystem& r, const Scalar& k);
// D(2,1,a) with a irrational; the form is the catalog one, k = c0 + ca a
Verdict vacuum_irreducible_d21a(const Scalar& k);

Verdict virasoro_simple(const Scalar& c);
Verdict ns_simple(const Scalar& c);
// Zhu's C2 condition for the simple quotient: holds iff V^c is not simple
bool c2_condition(const std::string& algebra, const Scalar& c);   // "Vir" or "NS"

// Minimal W-algebra W^k(g, f_theta); k is measured in the form with
// (theta|theta) = 2 for the highest even root theta of positive norm.
Verdict w_algebra_simple(const RootSystem& g, const Scalar& k);
// the rescaled system used above
RootSystem theta_normalized(const RootSystem& g);

// families N1, N2, N3, N4, bigN4
Verdict superconformal_simple(const std::string& family, const Scalar& c);

// central charges of the minimal W-algebras built on sl2, osp(1|2), sl(1|2)
// (k in the theta-normalized form)
Rational w_central_charge(const RootSystem& g, const Rational& k);

}  // namespace vacdet
