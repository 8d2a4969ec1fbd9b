#pragma once

#include "vacdet/poly.hpp"
#include "vacdet/roots.hpp"
#include "vacdet/series.hpp"

#include <map>
#include <vector>

namespace vacdet {

// One positive root (or imaginary root) with parity and multiplicity,
// in the coordinates of whatever system it came from.
struct RootEntry {
    Coords c;
    int parity = 0;
    int mult = 1;
};

std::vector<RootEntry> positive_roots(const RootSystem& r);
// roots of the given simple-index subset only (Delta_I^+)
std::vector<RootEntry> positive_roots(const RootSystem& r, const std::vector<int>& I);
// affine positive roots fitting in the box
std::vector<RootEntry> positive_roots(const AffineSystem& a, const Coords& box);

// R = prod (1-e^-a)^mult / prod (1+e^-a)^mult   (even / odd roots)
DenseSeries denominator_R(const std::vector<RootEntry>& roots, const Coords& box, int hcut);
// R^{-1}: generating function of the super Kostant partition function
DenseSeries partition_K(const std::vector<RootEntry>& roots, const Coords& box, int hcut);

int64_t kostant_K(const Coords& nu, const RootSystem& r);
int64_t kostant_K(const Coords& nu, const AffineSystem& a);

// coefficient of e^{-alpha} in R_I
int64_t k_I(const Coords& alpha, const RootSystem& r, const std::vector<int>& I);
inline int64_t k_I(const Coords& alpha, const RootSystem& r) {
    std::vector<int> all(r.rank());
    for (int i = 0; i < r.rank(); ++i) all[i] = i;
    return k_I(alpha, r, all);
}
// signed W#-orbit value; throws std::logic_error if W#S is not in Delta^+
int64_t k_I_via_orbit(const Coords& alpha, const RootSystem& r);
bool sharp_S_positive(const RootSystem& r);   // W# S inside Delta^+

// K_I = R^{-1} R_I as a series
FormalCharacter K_I_series(const RootSystem& r, const std::vector<int>& I, int cutoff);

// Classical partitions and superpartitions, memoized per instance.
class PartitionTable {
public:
    int64_t p_cl(int n);
    // number of superpartitions of N = twoN/2, optionally of given length (-1: any)
    int64_t superpartitions(int twoN, int length = -1);

private:
    std::vector<int64_t> p_;
    std::map<std::pair<int, int>, int64_t> sp_;
};

int64_t p_cl(int n);   // uses a process-wide table guarded by a mutex

// psi(x,t) = prod_{n>=0}(1+t x^{n+1/2})^{-1} prod_{n>=1}(1-t x^n), and its inverse.
// Variables are "y" (y = x^{1/2}, so exponents are doubled) and "t"; truncated at y-degree 2*cutoff.
ExactPoly psi_series(int cutoff);
ExactPoly psi_inverse_series(int cutoff);

// E(lambda) = sum_{w} (-1)^{l(w)} e^{w.lambda} over W# (== W for Lie algebras and osp(1|2n)).
// lambda in the root lattice; entries stored at nu = -(w.lambda).
FormalCharacter alternating_sum_E(const RootSystem& r, const Coords& lambda,
                                  const std::vector<WeylElement>& W);
FormalCharacter alternating_sum_E(const RootSystem& r, const Coords& lambda);
// weight-lattice version in ambient coordinates
std::map<QVec, int64_t> alternating_sum_E_weight(const RootSystem& r, const QVec& lambda,
                                                 const std::vector<WeylElement>& W);
bool is_W_singular(const RootSystem& r, const QVec& v, const std::vector<WeylElement>& W);

// e^rho R = sum_{W#} (-1)^l w(e^rho / prod_S (1+e^{-beta})), compared to height `cutoff`
struct IdentityReport {
    bool ok = true;
    std::string first_mismatch;   // empty if ok
};
// perturb: add a spurious term to the left-hand side (negative control)
IdentityReport kwn_identity_check(const RootSystem& r, int cutoff, bool perturb = false);

// fundamental weights in ambient coordinates (Lie algebras)
std::vector<QVec> fundamental_weights(const RootSystem& r);

}  // namespace vacdet
