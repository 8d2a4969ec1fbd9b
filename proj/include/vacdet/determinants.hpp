#pragma once

#include "vacdet/partitions.hpp"
#include "vacdet/poly.hpp"
#include "vacdet/roots.hpp"
#include "vacdet/series.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vacdet {

struct Factor {
    ExactPoly poly;   // monic
    int64_t exp = 0;
};

// Product of monic polynomial factors with integer exponents.  Proportional
// factors merge; zero exponents are dropped.
class FactoredDeterminant {
public:
    FactoredDeterminant() = default;
    FactoredDeterminant(std::string provenance, Coords nu)
        : provenance_(std::move(provenance)), nu_(std::move(nu)) {}

    const std::string& provenance() const { return provenance_; }
    const Coords& nu() const { return nu_; }
    void set_nu(Coords nu) { nu_ = std::move(nu); }

    void multiply(const ExactPoly& f, int64_t e);
    void multiply(const FactoredDeterminant& o);
    std::vector<Factor> factors() const;   // sorted by coefficient vector

    bool has_negative() const;
    ExactPoly expand() const;              // throws std::domain_error on negative exponents
    int64_t total_degree() const;
    // zeros of univariate linear factors with multiplicity; throws otherwise
    std::map<Rational, int64_t> zero_multiset(const std::string& var) const;
    // brute is a nonzero constant times expand()
    bool matches(const ExactPoly& brute) const;
    std::string str() const;

private:
    struct Cmp {
        bool operator()(const ExactPoly& a, const ExactPoly& b) const;
    };
    std::string provenance_;
    Coords nu_;
    std::map<ExactPoly, int64_t, Cmp> f_;
};

bool poly_less(const ExactPoly& a, const ExactPoly& b);

// ------------------------------------------------------------ finite

// (lambda|alpha_i) in terms of the symbols l1, l2 = lambda(h_i); l_i = 0 for i in I.
// For odd non-isotropic simple roots h_i is the coroot of 2 alpha_i.
std::vector<ExactPoly> lambda_pairings(const RootSystem& r, const std::vector<int>& I);
// phi_xi(lambda) as a polynomial in l1, l2
ExactPoly phi_lambda(const RootSystem& r, const std::vector<ExactPoly>& lam, const Coords& xi);

// generalized Verma module M_I(lambda), lambda in h_I^perp
FactoredDeterminant gen_verma_det(const RootSystem& r, const std::vector<int>& I, const Coords& nu);
// leading form: product of h_alpha^{dim sum_r (-1)^{(r-1)p} K_I(nu - r alpha)}
FactoredDeterminant gen_verma_leading(const RootSystem& r, const std::vector<int>& I,
                                      const Coords& nu);

// ------------------------------------------------------------ affine vacuum

enum class VacuumRoute {
    Cordet,     // finite denominator times affine partition function
    Isotropic,  // W#-alternating sums over alpha in NS (needs W# S inside Delta^+)
    OddSymplectic   // osp(1|2n): odd r on odd roots, even roots with gamma/2 not odd
};
std::string route_name(VacuumRoute r);

// The factor (k + h - b) has exponent m_b(nu); M_b = R sum_nu m_b(nu) e^{-nu}.
// All series live on the box {n <= box, height <= hcut} in affine coordinates.
class VacuumEngine {
public:
    VacuumEngine(const RootSystem& fin, const Coords& box, int hcut, VacuumRoute route);
    // box {n0 <= depth, height <= depth (1 + 2 ht theta)}
    static VacuumEngine for_depth(const RootSystem& fin, int depth, VacuumRoute route);

    const AffineSystem& affine() const { return aff_; }
    VacuumRoute route() const { return route_; }
    const Coords& box() const { return box_; }
    int hcut() const { return hcut_; }

    const std::map<Rational, FormalCharacter>& mb() const { return mb_; }
    FormalCharacter mb(const Rational& b) const;   // zero series if absent
    int64_t exponent(const Rational& b, const Coords& nu) const;
    // factors k + h - b, monic in "k"
    FactoredDeterminant det(const Coords& nu) const;

private:
    AffineSystem aff_;
    VacuumRoute route_;
    Coords box_;
    int hcut_;
    std::map<Rational, FormalCharacter> mb_;
    mutable std::unique_ptr<DenseSeries> khat_;

    FormalCharacter empty() const;
    Rational b_of(const Coords& xi) const;
    void build_cordet();
    void build_orbit(bool isotropic);
    const DenseSeries& khat() const;
};

FactoredDeterminant vacuum_det(const RootSystem& fin, const Coords& nu,
                               VacuumRoute route = VacuumRoute::Cordet);

struct MbSeries {
    Rational b;
    int cutoff = 0;          // delta-depth
    FormalCharacter series;
    bool nonzero() const { return !series.is_zero(); }
    std::string verdict() const;   // "nonzero at this cutoff" / "zero up to cutoff H"
};
// route: Cordet for Lie algebras, OddSymplectic for osp(1|2n), Isotropic when W#S in Delta^+
VacuumRoute default_mb_route(const RootSystem& fin);
MbSeries mb_series(const RootSystem& fin, const Rational& b, int depth);
MbSeries mb_series(const RootSystem& fin, const Rational& b, int depth, VacuumRoute route);

// b-value of the factor phi_{r gamma + s beta} for D(2,1,a), gamma = l delta + gamma',
// as c0 + ca * a.  Obtained from the catalog at a = 1, 2 and checked at a = 1/2.
struct ALinear {
    Rational c0, ca;
    bool operator==(const ALinear&) const = default;
    std::string str() const;
};
ALinear d21a_b(int r, int l, const Coords& gamma_fin, int s);

// ------------------------------------------------------------ Virasoro / NS

Rational c_pq(long p, long q);     // 1 - 6(p-q)^2/(pq)
Rational cS_pq(long p, long q);    // 3/2 (1 - 2(p-q)^2/(pq))
bool in_Y(long p, long q);         // p = q mod 2, gcd((p-q)/2, q) = 1

// level-N piece of L((p-1)(q-1); c_{p,q}); throws std::invalid_argument on bad (p,q)
int64_t dim_Lpq(long p, long q, int N);
// NS: grade twoN/2 of L((p-1)(q-1)/2; c^S_{p,q}); (p,q) in Y, p > q >= 2
int64_t dim_Lpq_ns(long p, long q, int twoN);
// sum of lengths of partitions of N without parts equal to 1
int64_t vacuum_degree(int N);
// same for superpartitions of twoN/2 with all parts >= 3/2
int64_t ns_vacuum_degree(int twoN);

FactoredDeterminant virasoro_vacuum_det(int N);
FactoredDeterminant ns_vacuum_det(int twoN);
// Kac determinant in (h, c): quadratic factors for r < s, linear for r = s
ExactPoly kac_factor(int r, int s);
FactoredDeterminant virasoro_verma_det(int N);

// ------------------------------------------------------------ identities

struct IdentityResult {
    std::string name;
    int cutoff = 0;
    bool ok = true;
    std::string first_mismatch;
};
// names: virasoro-degree, ns-degree, leading-term, isotropic-denominator
// (aliases vircon1, ns_degree, leading_term).  perturb adds a
// deliberate error to the left-hand side.  leading-term compares against
// brute-force determinants and caps the height at 8; `cutoff` in the result
// is the one actually used.
IdentityResult identity_check(const std::string& name, int cutoff, bool perturb = false);
std::vector<std::string> identity_names();

}  // namespace vacdet
