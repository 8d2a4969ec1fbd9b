#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace vacdet {

using BigInt = mpz_class;

// Always canonical (gmp keeps mpq results reduced; we canonicalize on
// construction from a raw pair).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d);
    Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // accepts "7", "-3/4", "+2/6" (reduced on the way in)
    static Rational parse(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    long to_long() const;   // throws unless integral and in range
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const { return Rational(1) / *this; }
    Rational pow(int e) const;

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt gcd(const BigInt& a, const BigInt& b);
long gcd_l(long a, long b);

// n >= 0 ? exact integer square root : throws
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

}  // namespace vacdet

template <>
struct std::hash<vacdet::Rational> {
    size_t operator()(const vacdet::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
