#include "vacdet/properties.hpp"
#include "vacdet/partitions.hpp"

#include <algorithm>
#include <functional>

namespace vacdet {

SmallNormReport small_norm_singular_check(const RootSystem& r, int radius) {
    SmallNormReport rep;
    auto W = r.weyl_group();
    auto omega = fundamental_weights(r);
    Rational rr = r.bil(r.rho, r.rho);
    int n = r.rank();
    std::vector<int> m(n, -radius);
    while (true) {
        QVec nu(r.amb);
        for (int i = 0; i < n; ++i) nu = qadd(nu, qscale(omega[i], Rational(m[i])));
        ++rep.checked;
        if (r.bil(nu, nu) < rr) {
            ++rep.small;
            bool edge = std::any_of(m.begin(), m.end(), [&](int x) { return std::abs(x) == radius; });
            if (edge) rep.box_covers_ball = false;
            bool sing = is_W_singular(r, nu, W);
            bool cancels = alternating_sum_E_weight(r, qsub(nu, r.rho), W).empty();
            if (!sing || !cancels) {
                if (rep.failures++ == 0) rep.first_failure = qvec_str(nu);
            }
        }
        int i = 0;
        while (i < n && m[i] == radius) m[i++] = -radius;
        if (i == n) break;
        ++m[i];
    }
    return rep;
}

bool DotPreimageReport::ok() const {
    for (const auto& [a, b] : bound)
        if (rmax < 2 * b + 4) return false;
    return !bound.empty();
}

DotPreimageReport root_multiple_preimages(const RootSystem& r, int rmax, int rprime_max) {
    DotPreimageReport rep;
    rep.rmax = rmax;
    auto W = r.weyl_group();
    int n = r.rank();
    std::vector<Coords> targets;   // Delta u {0}
    targets.push_back(Coords(n, 0));
    for (const auto& p : r.positive()) {
        targets.push_back(p.c);
        targets.push_back(scale(p.c, -1));
    }
    for (const auto& a : r.positive()) {
        int worst = 0;
        auto is_trivial = [&](const WeylElement& w) {
            if (w.length == 0) return true;
            // column j of coord_act is the image of alpha_j
            for (int j = 0; j < n; ++j) {
                Coords ej(n, 0);
                ej[j] = 1;
                Rational c = Rational(2) * r.form(ej, a.c) / a.norm;
                if (!c.is_integer()) return false;
                long ci = c.to_long();
                for (int i = 0; i < n; ++i)
                    if (w.coord_act[i][j] != ej[i] - ci * a.c[i]) return false;
            }
            return true;
        };
        for (const auto& w : W) {
            if (is_trivial(w)) continue;
            for (const Coords& t : targets)
                for (int rp = 1; rp <= rprime_max; ++rp) {
                    Coords y = r.dot_coords(w, scale(t, rp));
                    // y = k alpha with 1 <= k <= rmax ?
                    int k = 0;
                    bool set = false, multiple = true;
                    for (int i = 0; i < n && multiple; ++i) {
                        if (a.c[i] == 0) {
                            multiple = y[i] == 0;
                        } else if (y[i] % a.c[i] != 0) {
                            multiple = false;
                        } else {
                            int q = y[i] / a.c[i];
                            if (!set) k = q;
                            set = true;
                            multiple = q == k;
                        }
                    }
                    if (!multiple || k < 1 || k > rmax) continue;
                    ++rep.hits;
                    worst = std::max(worst, k);
                }
        }
        rep.bound[coords_str(a.c)] = worst;
    }
    return rep;
}

}  // namespace vacdet
