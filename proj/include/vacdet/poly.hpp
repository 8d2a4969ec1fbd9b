#pragma once

#include "vacdet/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace vacdet {

// Sparse polynomial in at most two named variables over Q.
// Monomials are kept in graded-lex order (total degree first, then the
// exponent of the first variable).
class ExactPoly {
public:
    using Exp = std::array<int, 2>;
    struct GrLex {
        bool operator()(const Exp& a, const Exp& b) const {
            int da = a[0] + a[1], db = b[0] + b[1];
            if (da != db) return da < db;
            return a[0] < b[0];
        }
    };
    using Terms = std::map<Exp, Rational, GrLex>;

    ExactPoly() = default;
    ExactPoly(const Rational& c);
    ExactPoly(long c) : ExactPoly(Rational(c)) {}
    ExactPoly(int c) : ExactPoly(Rational(c)) {}

    static ExactPoly var(const std::string& name);
    static ExactPoly constant(const Rational& c) { return ExactPoly(c); }
    // a*name + b
    static ExactPoly linear(const std::string& name, const Rational& a, const Rational& b);
    static ExactPoly monomial(const std::vector<std::string>& vars, Exp e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Exp& e) const;
    int total_degree() const;
    int degree_in(const std::string& name) const;
    Exp leading_exp() const;              // grlex max
    Rational leading_coeff() const;

    ExactPoly operator-() const;
    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    ExactPoly& operator*=(const ExactPoly& o);
    ExactPoly& operator*=(const Rational& c);

    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
    friend ExactPoly operator*(ExactPoly a, const Rational& c) { return a *= c; }
    friend ExactPoly operator*(const Rational& c, ExactPoly a) { return a *= c; }
    friend bool operator==(const ExactPoly& a, const ExactPoly& b);

    ExactPoly pow(int e) const;

    // exact division; throws std::domain_error when b does not divide *this
    ExactPoly exact_div(const ExactPoly& b) const;
    // returns false if not divisible
    bool try_div(const ExactPoly& b, ExactPoly* q) const;

    // substitute a value for one variable
    ExactPoly subst(const std::string& name, const Rational& value) const;
    // substitute a polynomial for one variable (result variables merged)
    ExactPoly subst(const std::string& name, const ExactPoly& value) const;
    Rational eval(const std::map<std::string, Rational>& values) const;

    // q -> 1/q times q^shift, for KL bar involution on polys in one variable.
    ExactPoly bar(const std::string& name, int shift) const;
    // keep only monomials with degree in `name` <= d
    ExactPoly truncate_degree(const std::string& name, int d) const;

    // homogeneous top-degree part
    ExactPoly leading_form() const;

    // scale so the grlex-leading coefficient is 1
    ExactPoly monic() const;

    std::string str() const;

    // rename/reorder support (used when merging variable sets)
    ExactPoly with_vars(const std::vector<std::string>& vs) const;

private:
    std::vector<std::string> vars_;
    Terms terms_;
    void clean();
    int index_of(const std::string& name) const;
};

std::ostream& operator<<(std::ostream& os, const ExactPoly& p);

// Fraction-free (Bareiss) determinant.  Empty matrix -> 1.
ExactPoly poly_det(std::vector<std::vector<ExactPoly>> m);

struct LinearFactorResult {
    std::vector<int> exponents;
    ExactPoly remainder;
};
// p univariate in `name`; divides out (name - root) as often as possible.
LinearFactorResult divide_linear_factors(const ExactPoly& p, const std::string& name,
                                         const std::vector<Rational>& roots);

}  // namespace vacdet
