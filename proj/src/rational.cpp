#include "vacdet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vacdet {

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s0) {
    std::string s;
    for (char ch : s0)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto ok_int = [](const std::string& t) {
        size_t i = (t.size() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto to_z = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return BigInt(t);
    };
    if (slash == std::string::npos) {
        if (!ok_int(s)) throw std::invalid_argument("bad rational: " + s0);
        return Rational(to_z(s));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!ok_int(a) || !ok_int(b)) throw std::invalid_argument("bad rational: " + s0);
    return Rational(to_z(a), to_z(b));
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + str());
    const BigInt& n = v_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("integer too large: " + str());
    return n.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

long gcd_l(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace vacdet
