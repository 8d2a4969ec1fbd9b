#pragma once

#include "vacdet/roots.hpp"

#include <map>
#include <string>

namespace vacdet {

// Weights nu = sum m_i omega_i with |m_i| <= radius.  Every nu with
// (nu|nu) < (rho|rho) must have a nontrivial stabilizer, and the dot
// alternating sum at nu - rho must cancel.
struct SmallNormReport {
    int checked = 0;
    int small = 0;               // weights with (nu|nu) < (rho|rho)
    int failures = 0;
    bool box_covers_ball = true; // no small-norm weight on the box boundary
    std::string first_failure;
    bool ok() const { return failures == 0 && box_covers_ball; }
};
SmallNormReport small_norm_singular_check(const RootSystem& r, int radius);

// For each positive root alpha: the r >= 1 with r alpha = w.(r' alpha') for
// some alpha' in Delta u {0}, 1 <= r' <= rprime_max and w not in {id, s_alpha}.
// bound[alpha] is the largest such r seen in [1, rmax]; ok() demands
// rmax >= 2 bound + 4 for every alpha, so the tail is clean.
struct DotPreimageReport {
    int rmax = 0;
    std::map<std::string, int> bound;   // keyed by coords_str(alpha)
    int hits = 0;                       // (alpha, r, w, alpha', r') with w not in {id, s_alpha}
    bool ok() const;
};
DotPreimageReport root_multiple_preimages(const RootSystem& r, int rmax, int rprime_max);

}  // namespace vacdet
