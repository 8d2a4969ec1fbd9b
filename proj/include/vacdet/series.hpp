#pragma once

#include "vacdet/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vacdet {

using Coords = std::vector<int>;

// Integer vector over a named basis (simple roots of some system).
struct LatticeVector {
    std::string basis;
    Coords c;

    int height() const;
    bool nonneg() const;
    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator*(int k) const;
    bool operator==(const LatticeVector& o) const = default;
};

int height(const Coords& c);
Coords add(const Coords& a, const Coords& b);
Coords sub(const Coords& a, const Coords& b);
Coords scale(const Coords& a, int k);
bool nonneg(const Coords& a);
bool leq(const Coords& a, const Coords& b);   // componentwise
std::string coords_str(const Coords& c);

// checked int64 arithmetic
int64_t add_ck(int64_t a, int64_t b);
int64_t mul_ck(int64_t a, int64_t b);

// Finitely supported integer series sum a_nu e^{-nu}, truncated at
// height(nu) <= cutoff.  An optional componentwise box further restricts
// the truncation (both are order ideals of Q^+, so products stay exact).
class FormalCharacter {
public:
    FormalCharacter(std::string basis, int rank, int cutoff);

    static FormalCharacter one(std::string basis, int rank, int cutoff);
    // the monomial s*e^{-nu}
    static FormalCharacter term(std::string basis, int rank, int cutoff, const Coords& nu, int64_t s);

    const std::string& basis() const { return basis_; }
    int rank() const { return rank_; }
    int cutoff() const { return cutoff_; }
    const std::map<Coords, int64_t>& support() const { return s_; }
    const Coords* box() const { return box_.empty() ? nullptr : &box_; }
    void set_box(const Coords& b);

    bool in_range(const Coords& nu) const;
    int64_t coeff(const Coords& nu) const;
    void add(const Coords& nu, int64_t v);
    bool is_zero() const { return s_.empty(); }

    FormalCharacter operator-() const;
    FormalCharacter& operator+=(const FormalCharacter& o);
    bool operator==(const FormalCharacter& o) const;

    std::string str() const;

private:
    std::string basis_;
    int rank_;
    int cutoff_;
    Coords box_;
    std::map<Coords, int64_t> s_;
};

FormalCharacter series_multiply(const FormalCharacter& a, const FormalCharacter& b);
// constant term must be +-1
FormalCharacter series_invert(const FormalCharacter& a);

// All nonnegative vectors of given rank within height <= h (and box if given),
// ordered by height then lexicographically.
std::vector<Coords> enumerate_cone(int rank, int h, const Coords* box = nullptr);

// Dense product expansion prod (1 - s e^{-g})^{e} over a box, where each
// factor is given by (g >= 0, sign s = +-1, integer exponent e).
// Used for R, R^{-1}, R_I, K on order ideals.
class DenseSeries {
public:
    DenseSeries(Coords box, int hcut);
    // multiply by (1 - s e^{-g})^{e}
    void mul_factor(const Coords& g, int s, int e);
    int64_t at(const Coords& nu) const;
    const Coords& box() const { return box_; }
    int hcut() const { return hcut_; }
    FormalCharacter to_character(const std::string& basis) const;

private:
    Coords box_;
    int hcut_;
    std::vector<int64_t> stride_;
    std::vector<int64_t> v_;
    std::vector<int> ht_;
    size_t index(const Coords& nu) const;
    void mul_linear(const Coords& g, int64_t coef, bool ascending);
};

}  // namespace vacdet
