#include "vacdet/simplicity.hpp"
#include "vacdet/determinants.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vacdet {

// ------------------------------------------------------------ Scalar

Scalar Scalar::a_linear(const Rational& c0, const Rational& ca) {
    if (ca.is_zero()) return rational(c0);
    return {ALin, {}, c0, ca};
}

Scalar Scalar::parse(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "irrational" || s == "irr") return irrational();
    if (s.empty()) throw std::invalid_argument("empty value");
    Rational c0, ca;
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("bad value: " + raw);
        }
        size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        std::string num = s.substr(i, j - i);
        bool is_a = j < s.size() && s[j] == 'a';
        if (num.empty() && !is_a) throw std::invalid_argument("bad value: " + raw);
        Rational v = num.empty() ? Rational(1) : Rational::parse(num);
        if (sign < 0) v = -v;
        if (is_a) {
            ca += v;
            ++j;
        } else {
            c0 += v;
        }
        i = j;
        any = true;
    }
    return a_linear(c0, ca);
}

std::string Scalar::str() const {
    switch (kind) {
        case Rat: return q.str();
        case Irrational: return "irrational";
        case ALin: {
            std::ostringstream os;
            if (!c0.is_zero()) os << c0.str() << (ca.sign() < 0 ? "-" : "+");
            else if (ca.sign() < 0) os << "-";
            os << ca.abs().str() << "a";
            return os.str();
        }
    }
    return "?";
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Irreducible: return "Irreducible";
        case Status::Reducible: return "Reducible";
        case Status::ConjecturalReducible: return "ConjecturalReducible";
        case Status::Unknown: return "Unknown";
        case Status::Simple: return "Simple";
        case Status::NotSimple: return "NotSimple";
    }
    return "?";
}

// ------------------------------------------------------------ vacuum modules

namespace {

bool inverse_integer(const Rational& x, bool odd_only) {
    if (x.sign() <= 0 || x.num() != 1) return false;
    return !odd_only || x.den() % 2 == 1;
}

Verdict base(const RootSystem& r, const Scalar& k) { return {r.id, k.str(), Status::Unknown, "", "", {}}; }

std::string root_str(const PosRoot& p) { return coords_str(p.c); }

}  // namespace

Verdict vacuum_irreducible(const RootSystem& r, const Scalar& k) {
    Verdict v = base(r, k);
    if (k.kind == Scalar::ALin) throw std::invalid_argument("a-linear level needs D(2,1,a) with irrational a");
    if (k.kind == Scalar::Irrational) {
        v.status = Status::Irreducible;
        v.criterion = "irrational level";
        return v;
    }
    Rational h = r.hvee();
    Rational kh = k.q + h;
    if (kh.is_zero()) {
        v.status = Status::Reducible;
        v.witness = "critical level k = " + (-h).str();
        v.criterion = "critical level";
        v.vanishing_b = Rational(0);
        return v;
    }

    if (r.family == "lie" || r.family == "osp1") {
        bool lie = r.family == "lie";
        // short root for Lie algebras, an odd root for osp(1|2n)
        const PosRoot* a = nullptr;
        for (const auto& p : r.positive()) {
            if (lie && (!a || p.norm < a->norm)) a = &p;
            if (!lie && p.parity == 1 && (!a || p.norm < a->norm)) a = &p;
        }
        if (!a) throw std::logic_error(r.id + ": no suitable root");
        Rational ka = kh / a->norm;
        std::ostringstream w;
        w << "k_alpha = " << ka.str() << " for alpha = " << root_str(*a);
        v.witness = w.str();
        v.criterion = lie ? "short root, excluded set 1/(2m)" : "odd root, excluded set 1/(2m+1)";
        if (ka.sign() >= 0 && !inverse_integer(ka * (lie ? Rational(2) : Rational(1)), !lie)) {
            v.status = Status::Reducible;
            v.vanishing_b = kh;
        } else {
            v.status = Status::Irreducible;
        }
        return v;
    }

    // super with positive defect: some even root with (k+h)/(alpha|alpha) >= 0
    const PosRoot* hit = nullptr;
    for (const auto& p : r.positive())
        if (p.parity == 0 && !p.norm.is_zero() && (kh / p.norm).sign() >= 0) {
            hit = &p;
            break;
        }
    bool proven = r.family == "defect1" || r.family == "gl22";
    v.criterion = proven ? "even root with k_alpha >= 0 (defect one)" : "even root with k_alpha >= 0 (conjectural, defect >= 2)";
    if (hit) {
        std::ostringstream w;
        w << "k_alpha = " << (kh / hit->norm).str() << " for even alpha = " << root_str(*hit);
        v.witness = w.str();
        v.status = proven ? Status::Reducible : Status::ConjecturalReducible;
        v.vanishing_b = kh;
    } else {
        v.witness = "no even root with k_alpha >= 0";
        v.status = proven ? Status::Irreducible : Status::Unknown;
    }
    return v;
}

Verdict vacuum_irreducible_d21a(const Scalar& k) {
    Verdict v{"D(2,1,a), a irrational", k.str(), Status::Unknown, "", "", {}};
    if (k.kind == Scalar::Irrational) {
        v.status = Status::Irreducible;
        v.criterion = "level outside Q + Q a";
        return v;
    }
    Rational c0 = k.kind == Scalar::Rat ? k.q : k.c0;
    Rational ca = k.kind == Scalar::Rat ? Rational(0) : k.ca;
    // h = 0 here; even root norms are linear in a, read off the catalog at a = 1, 2
    RootSystem r1 = catalog("D(2,1,a=1)"), r2 = catalog("D(2,1,a=2)");
    if (!r1.hvee().is_zero() || !r2.hvee().is_zero()) throw std::logic_error("D(2,1,a): h is not 0");
    v.criterion = "k in Q>=0 alpha-norm cone (a irrational)";
    if (c0.is_zero() && ca.is_zero()) {
        v.status = Status::Reducible;
        v.witness = "critical level k = 0";
        return v;
    }
    for (size_t i = 0; i < r1.pos.size(); ++i) {
        if (r1.pos[i].parity) continue;
        if (r1.pos[i].c != r2.pos[i].c) throw std::logic_error("D(2,1,a): root order depends on a");
        Rational n1 = r1.pos[i].norm, n2 = r2.pos[i].norm;
        Rational na = n2 - n1, n0 = n1 - na;
        // k = t (n0 + na a) with t rational > 0
        Rational t;
        if (n0.is_zero()) {
            if (!c0.is_zero()) continue;
            t = ca / na;
        } else {
            t = c0 / n0;
            if (ca != t * na) continue;
        }
        if (t.sign() > 0) {
            v.status = Status::Reducible;
            v.witness = "k = " + t.str() + " * (alpha|alpha) for even alpha = " + coords_str(r1.pos[i].c);
            return v;
        }
    }
    v.status = Status::Irreducible;
    v.witness = "k outside Q>=0 u Q>0 a u Q>0 (-1-a)";
    return v;
}

// ------------------------------------------------------------ Virasoro / NS

namespace {

// t = m/n reduced, m = d^2, n = y (y + d); returns y
std::optional<BigInt> solve_pair(const Rational& t) {
    if (t.sign() <= 0) return std::nullopt;
    BigInt d;
    if (!is_perfect_square(t.num(), &d)) return std::nullopt;
    BigInt disc = d * d + 4 * t.den();
    BigInt s;
    if (!is_perfect_square(disc, &s)) return std::nullopt;
    BigInt twice = s - d;
    if (twice <= 0 || twice % 2 != 0) return std::nullopt;
    return BigInt(twice / 2);
}

std::string pq_str(const BigInt& p, const BigInt& q) { return "(p,q) = (" + p.get_str() + "," + q.get_str() + ")"; }

}  // namespace

Verdict virasoro_simple(const Scalar& c) {
    Verdict v{"Vir", c.str(), Status::Simple, "", "c = 1 - 6(p-q)^2/pq, coprime p,q >= 2", {}};
    if (!c.is_rational()) return v;
    Rational t = (Rational(1) - c.q) / 6;
    auto y = solve_pair(t);
    if (!y) return v;
    BigInt d;
    is_perfect_square(t.num(), &d);
    BigInt q = *y, p = q + d;
    if (q >= 2 && gcd(p, q) == 1) {
        v.status = Status::NotSimple;
        v.witness = pq_str(p, q);
    }
    return v;
}

Verdict ns_simple(const Scalar& c) {
    Verdict v{"NS", c.str(), Status::Simple, "", "c = c^S_{p,q}, (p,q) in Y, p > q >= 2", {}};
    if (!c.is_rational()) return v;
    Rational t = (Rational(1) - Rational(2, 3) * c.q) / 2;
    auto y = solve_pair(t);
    if (!y) return v;
    BigInt e;
    is_perfect_square(t.num(), &e);
    BigInt Y = *y, X = Y + e;
    BigInt p, q;
    if (e % 2 != 0) {
        p = 2 * X;
        q = 2 * Y;
    } else {
        p = X;
        q = Y;
    }
    if (q < 2 || !p.fits_slong_p()) return v;
    if (in_Y(p.get_si(), q.get_si())) {
        v.status = Status::NotSimple;
        v.witness = pq_str(p, q);
    }
    return v;
}

bool c2_condition(const std::string& algebra, const Scalar& c) {
    if (algebra == "Vir") return virasoro_simple(c).status == Status::NotSimple;
    if (algebra == "NS") return ns_simple(c).status == Status::NotSimple;
    throw std::invalid_argument("C2 condition is only implemented for Vir and NS: " + algebra);
}

// ------------------------------------------------------------ W-algebras

namespace {

const PosRoot* even_theta(const RootSystem& g) {
    if (g.theta) {
        auto c = g.coords(*g.theta);
        if (c) {
            int i = g.root_index(*c);
            if (i >= 0 && g.pos[i].parity == 0 && g.pos[i].norm.sign() > 0) return &g.pos[i];
        }
    }
    const PosRoot* best = nullptr;
    for (const auto& p : g.positive())
        if (p.parity == 0 && p.norm.sign() > 0 && (!best || height(p.c) > height(best->c))) best = &p;
    return best;
}

}  // namespace

RootSystem theta_normalized(const RootSystem& g) {
    const PosRoot* t = even_theta(g);
    if (!t) throw std::invalid_argument(g.id + ": no even root of positive norm");
    return g.scaled(Rational(2) / t->norm);
}

Rational w_central_charge(const RootSystem& g0, const Rational& k) {
    RootSystem g = theta_normalized(g0);
    Rational h = g.hvee();
    if ((k + h).is_zero()) throw std::domain_error("critical level");
    long sdim = g.datum().cartan_dim;
    for (const auto& p : g.positive()) sdim += (p.parity ? -2 : 2) * p.mult;
    return k * Rational(sdim) / (k + h) - Rational(6) * k + h - Rational(4);
}

Verdict w_algebra_simple(const RootSystem& g0, const Scalar& k) {
    RootSystem g = theta_normalized(g0);
    Verdict v{"W^k(" + g0.id + ", f_theta)", k.str(), Status::Unknown, "", "", {}};
    if (k.kind == Scalar::ALin) throw std::invalid_argument("a-linear level not supported here");
    if (k.is_rational() && (k.q + g.hvee()).is_zero()) {
        v.status = Status::NotSimple;
        v.criterion = "critical level";
        v.witness = "k = " + k.q.str();
        return v;
    }
    if (g.family == "lie" && g.rank() == 1) {
        v.criterion = "Virasoro via central charge";
        if (!k.is_rational()) {
            v.status = Status::Simple;
            return v;
        }
        Rational c = w_central_charge(g, k.q);
        Verdict vir = virasoro_simple(Scalar::rational(c));
        v.status = vir.status;
        v.witness = "c = " + c.str() + (vir.witness.empty() ? "" : ", " + vir.witness);
        return v;
    }
    Verdict vac = vacuum_irreducible(g, k);
    v.witness = vac.witness;
    if (vac.status == Status::Irreducible) {
        v.status = Status::Simple;
        v.criterion = "V^k irreducible";
        return v;
    }
    if (g.family == "lie") {
        v.status = Status::NotSimple;
        v.criterion = "V^k reducible (rank > 1 Lie algebra)";
        return v;
    }
    if (vac.status != Status::Reducible) {
        v.criterion = "V^k irreducibility undecided";
        return v;
    }
    bool nonneg_int = k.q.is_integer() && k.q.sign() >= 0;
    if (!nonneg_int) {
        v.status = Status::NotSimple;
        v.criterion = "V^k reducible, k not in Z>=0";
        return v;
    }
    if (g.family == "defect1" && g.id == "sl(1|2)") {
        v.status = Status::Simple;
        v.criterion = "V^k of length two (sl(2|1), k in Z>=0)";
        return v;
    }
    if (g.family == "osp1" && g.rank() == 1) {
        // NS algebra is fixed by c and c(a) = c(1/a), a = 2k + 3
        v.status = ns_simple(Scalar::rational(w_central_charge(g, k.q))).status;
        v.criterion = "NS central charge, a <-> 1/a";
        return v;
    }
    v.criterion = "length of V^k unknown for k in Z>=0";
    return v;
}

// ------------------------------------------------------------ superconformal

Verdict superconformal_simple(const std::string& family, const Scalar& c) {
    Verdict v{family, c.str(), Status::Simple, "", "", {}};
    auto odd_multiple = [&](int m) {
        // c = -m b with b a positive odd integer (m = 3) or positive integer (m = 6)
        if (!c.is_rational()) return false;
        Rational b = -c.q / m;
        if (!b.is_integer() || b.sign() <= 0) return false;
        return m == 6 || b.num() % 2 != 0;
    };
    if (family == "N1") {
        v.criterion = "c = 3/2(1 - 2(p-q)^2/pq), coprime p > q >= 1, p/q not an odd integer";
        if (!c.is_rational()) return v;
        Rational t = (Rational(1) - Rational(2, 3) * c.q) / 2;
        auto y = solve_pair(t);
        if (!y) return v;
        BigInt d;
        is_perfect_square(t.num(), &d);
        BigInt q = *y, p = q + d;
        if (q >= 1 && gcd(p, q) == 1 && !(q == 1 && p % 2 != 0)) {
            v.status = Status::NotSimple;
            v.witness = pq_str(p, q);
        }
        return v;
    }
    if (family == "N2") {
        v.criterion = "c = 3 - 6p/q, coprime p, q > 0, q >= 2";
        if (!c.is_rational()) return v;
        Rational x = (Rational(3) - c.q) / 6;
        if (x.sign() > 0 && x.den() >= 2) {
            v.status = Status::NotSimple;
            v.witness = "p/q = " + x.str();
        }
        return v;
    }
    if (family == "N3" || family == "N4") {
        int m = family == "N3" ? 3 : 6;
        v.criterion = family == "N3" ? "rational c, except c = -3b (b odd)" : "rational c, except c = -6b";
        if (!c.is_rational()) return v;
        if (odd_multiple(m)) {
            v.status = Status::Unknown;
            v.witness = "c = " + c.q.str() + " is an open case";
            return v;
        }
        v.status = Status::NotSimple;
        v.witness = "c = " + c.q.str() + " rational";
        return v;
    }
    if (family == "bigN4") {
        v.criterion = "c in Q>=0 u Q>0 a u Q>0 (-1-a), except c = -3b (b odd)";
        if (c.kind == Scalar::Irrational) return v;
        bool in_set;
        if (c.kind == Scalar::Rat) {
            in_set = c.q.sign() >= 0;
        } else {
            in_set = (c.c0.is_zero() && c.ca.sign() > 0) || (c.c0 == c.ca && c.c0.sign() < 0);
        }
        if (!in_set) return v;
        if (odd_multiple(3)) {
            v.status = Status::Unknown;
            v.witness = "c = " + c.q.str() + " is an open case";
            return v;
        }
        v.status = Status::NotSimple;
        v.witness = "c = " + c.str();
        return v;
    }
    throw std::invalid_argument("unknown superconformal family: " + family);
}

}  // namespace vacdet
