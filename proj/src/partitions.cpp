#include "vacdet/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace vacdet {

std::vector<RootEntry> positive_roots(const RootSystem& r) {
    std::vector<RootEntry> out;
    for (const auto& p : r.positive()) out.push_back({p.c, p.parity, p.mult});
    return out;
}

std::vector<RootEntry> positive_roots(const RootSystem& r, const std::vector<int>& I) {
    std::vector<RootEntry> out;
    for (const auto& p : r.positive()) {
        bool inside = true;
        for (int i = 0; i < r.rank(); ++i)
            if (p.c[i] && std::find(I.begin(), I.end(), i) == I.end()) inside = false;
        if (inside) out.push_back({p.c, p.parity, p.mult});
    }
    return out;
}

std::vector<RootEntry> positive_roots(const AffineSystem& a, const Coords& box) {
    std::vector<RootEntry> out;
    for (const auto& x : a.positive_roots_in_box(box)) out.push_back({x.c, x.parity, x.mult});
    return out;
}

DenseSeries denominator_R(const std::vector<RootEntry>& roots, const Coords& box, int hcut) {
    DenseSeries d(box, hcut);
    for (const auto& e : roots) {
        if (!leq(e.c, box) || height(e.c) > hcut) continue;
        if (e.parity)
            d.mul_factor(e.c, -1, -e.mult);
        else
            d.mul_factor(e.c, 1, e.mult);
    }
    return d;
}

DenseSeries partition_K(const std::vector<RootEntry>& roots, const Coords& box, int hcut) {
    DenseSeries d(box, hcut);
    for (const auto& e : roots) {
        if (!leq(e.c, box) || height(e.c) > hcut) continue;
        if (e.parity)
            d.mul_factor(e.c, -1, e.mult);
        else
            d.mul_factor(e.c, 1, -e.mult);
    }
    return d;
}

int64_t kostant_K(const Coords& nu, const RootSystem& r) {
    if (!nonneg(nu)) return 0;
    return partition_K(positive_roots(r), nu, height(nu)).at(nu);
}

int64_t kostant_K(const Coords& nu, const AffineSystem& a) {
    if (!nonneg(nu)) return 0;
    return partition_K(positive_roots(a, nu), nu, height(nu)).at(nu);
}

int64_t k_I(const Coords& alpha, const RootSystem& r, const std::vector<int>& I) {
    if (!nonneg(alpha)) return 0;
    for (int i = 0; i < r.rank(); ++i)
        if (alpha[i] && std::find(I.begin(), I.end(), i) == I.end()) return 0;
    return denominator_R(positive_roots(r, I), alpha, height(alpha)).at(alpha);
}

bool sharp_S_positive(const RootSystem& r) {
    auto W = r.weyl_group();
    for (const auto& w : W)
        for (int b : r.S) {
            Coords e(r.rank(), 0);
            e[b] = 1;
            Coords img(r.rank(), 0);
            for (int i = 0; i < r.rank(); ++i) img[i] = w.coord_act[i][b];
            if (r.root_index(img) < 0) return false;
        }
    return true;
}

int64_t k_I_via_orbit(const Coords& alpha, const RootSystem& r) {
    if (!sharp_S_positive(r)) throw std::logic_error(r.id + ": W# S is not inside Delta^+");
    Coords neg = scale(alpha, -1);
    for (const auto& w : r.weyl_group()) {
        Coords x = scale(r.dot_coords(w, neg), -1);
        if (r.in_NS(x)) return ((w.length + height(x)) % 2) ? -1 : 1;
    }
    return 0;
}

FormalCharacter K_I_series(const RootSystem& r, const std::vector<int>& I, int cutoff) {
    Coords box(r.rank(), cutoff);
    auto inI = positive_roots(r, I);
    std::vector<RootEntry> rest;
    for (const auto& e : positive_roots(r)) {
        bool found = false;
        for (const auto& f : inI)
            if (f.c == e.c) found = true;
        if (!found) rest.push_back(e);
    }
    return partition_K(rest, box, cutoff).to_character(r.id);
}

int64_t PartitionTable::p_cl(int n) {
    if (n < 0) return 0;
    if (p_.empty()) p_.push_back(1);
    while (static_cast<int>(p_.size()) <= n) {
        int m = static_cast<int>(p_.size());
        int64_t s = 0;
        // Euler pentagonal recurrence
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            int64_t sign = (k % 2) ? 1 : -1;
            s = add_ck(s, sign * p_[m - g1]);
            if (g2 <= m) s = add_ck(s, sign * p_[m - g2]);
        }
        p_.push_back(s);
    }
    return p_[n];
}

int64_t PartitionTable::superpartitions(int twoN, int length) {
    if (twoN < 0) return 0;
    auto key = std::make_pair(twoN, length);
    if (auto it = sp_.find(key); it != sp_.end()) return it->second;
    // dp[n][l]: parts in doubled units; odd parts distinct, even parts free
    std::vector<std::vector<int64_t>> dp(twoN + 1, std::vector<int64_t>(twoN + 1, 0));
    dp[0][0] = 1;
    for (int m = 1; m <= twoN; ++m) {
        if (m % 2) {
            for (int n = twoN; n >= m; --n)
                for (int l = twoN; l >= 1; --l) dp[n][l] = add_ck(dp[n][l], dp[n - m][l - 1]);
        } else {
            for (int n = m; n <= twoN; ++n)
                for (int l = 1; l <= twoN; ++l) dp[n][l] = add_ck(dp[n][l], dp[n - m][l - 1]);
        }
    }
    int64_t total = 0;
    for (int l = 0; l <= twoN; ++l) {
        sp_[{twoN, l}] = dp[twoN][l];
        total = add_ck(total, dp[twoN][l]);
    }
    sp_[{twoN, -1}] = total;
    return sp_[key];
}

int64_t p_cl(int n) {
    static PartitionTable table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return table.p_cl(n);
}

namespace {

// dense coefficients c[y][t]
using Grid = std::vector<std::vector<int64_t>>;

ExactPoly grid_to_poly(const Grid& g) {
    ExactPoly out;
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = 0; b < g[a].size(); ++b)
            if (g[a][b])
                out += ExactPoly::monomial({"y", "t"}, {static_cast<int>(a), static_cast<int>(b)},
                                           Rational(static_cast<long>(g[a][b])));
    return out;
}

// multiply by (1 + s t y^m)^e, truncated at y-degree D
void mul_binom(Grid& g, int m, int s, int e, int D) {
    int T = static_cast<int>(g[0].size()) - 1;
    if (e > 0) {
        for (int rep = 0; rep < e; ++rep)
            for (int a = D; a >= m; --a)
                for (int b = T; b >= 1; --b) g[a][b] = add_ck(g[a][b], s * g[a - m][b - 1]);
    } else {
        // (1 + s t y^m)^{-1} = sum (-s t y^m)^j
        for (int rep = 0; rep < -e; ++rep)
            for (int a = m; a <= D; ++a)
                for (int b = 1; b <= T; ++b) g[a][b] = add_ck(g[a][b], -s * g[a - m][b - 1]);
    }
}

Grid psi_grid(int cutoff, bool inverse) {
    int D = 2 * cutoff;
    Grid g(D + 1, std::vector<int64_t>(D + 1, 0));
    g[0][0] = 1;
    int sgn = inverse ? -1 : 1;
    for (int m = 1; m <= D; ++m) {
        if (m % 2)
            mul_binom(g, m, 1, -sgn, D);    // (1 + t y^m)^{-1}
        else
            mul_binom(g, m, -1, sgn, D);    // (1 - t y^m)
    }
    return g;
}

}  // namespace

ExactPoly psi_series(int cutoff) { return grid_to_poly(psi_grid(cutoff, false)); }
ExactPoly psi_inverse_series(int cutoff) { return grid_to_poly(psi_grid(cutoff, true)); }

FormalCharacter alternating_sum_E(const RootSystem& r, const Coords& lambda,
                                  const std::vector<WeylElement>& W) {
    std::vector<std::pair<Coords, int>> terms;
    int hmax = 0;
    for (const auto& w : W) {
        Coords nu = scale(r.dot_coords(w, lambda), -1);
        hmax = std::max(hmax, height(nu));
        terms.push_back({nu, w.sign()});
    }
    FormalCharacter f(r.id, r.rank(), hmax);
    for (const auto& [nu, s] : terms) f.add(nu, s);
    return f;
}

FormalCharacter alternating_sum_E(const RootSystem& r, const Coords& lambda) {
    return alternating_sum_E(r, lambda, r.weyl_group());
}

std::map<QVec, int64_t> alternating_sum_E_weight(const RootSystem& r, const QVec& lambda,
                                                 const std::vector<WeylElement>& W) {
    std::map<QVec, int64_t> out;
    for (const auto& w : W) {
        QVec mu = r.dot(w, lambda);
        auto& x = out[mu];
        x += w.sign();
        if (x == 0) out.erase(mu);
    }
    return out;
}

bool is_W_singular(const RootSystem& r, const QVec& v, const std::vector<WeylElement>& W) {
    for (const auto& w : W)
        if (w.length > 0 && matvec(w.act, v) == v) return true;
    (void)r;
    return false;
}

IdentityReport kwn_identity_check(const RootSystem& r, int cutoff, bool perturb) {
    if (!sharp_S_positive(r)) throw std::logic_error(r.id + ": W# S is not inside Delta^+");
    Coords box(r.rank(), cutoff);
    FormalCharacter lhs = denominator_R(positive_roots(r), box, cutoff).to_character(r.id);
    if (perturb) {
        Coords top(r.rank(), 0);
        top[0] = cutoff;
        lhs.add(top, 1);
    }
    FormalCharacter rhs(r.id, r.rank(), cutoff);
    rhs.set_box(box);
    auto W = r.weyl_group();
    int ns = static_cast<int>(r.S.size());
    for (const Coords& m : enumerate_cone(ns, cutoff)) {
        Coords alpha(r.rank(), 0);
        for (int i = 0; i < ns; ++i) alpha[r.S[i]] = m[i];
        int ht = height(m);
        for (const auto& w : W) {
            Coords nu = scale(r.dot_coords(w, scale(alpha, -1)), -1);
            if (!nonneg(nu)) throw std::logic_error("orbit term outside Q^+");
            rhs.add(nu, ((w.length + ht) % 2) ? -1 : 1);
        }
    }
    IdentityReport rep;
    if (lhs == rhs) return rep;
    rep.ok = false;
    for (const Coords& nu : enumerate_cone(r.rank(), cutoff)) {
        if (lhs.coeff(nu) != rhs.coeff(nu)) {
            std::ostringstream os;
            os << "at " << coords_str(nu) << ": " << lhs.coeff(nu) << " vs " << rhs.coeff(nu);
            rep.first_mismatch = os.str();
            break;
        }
    }
    return rep;
}

std::vector<QVec> fundamental_weights(const RootSystem& r) {
    int n = r.rank();
    // solve (omega_i | alpha_j) = delta_ij (alpha_j|alpha_j)/2 with omega_i in span of simple roots
    QMat B(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B[i][j] = r.bil(r.simple[i], r.simple[j]);
    std::vector<QVec> out;
    for (int i = 0; i < n; ++i) {
        QMat a = B;
        QVec rhs(n);
        rhs[i] = r.bil(r.simple[i], r.simple[i]) / 2;
        // Gauss-Jordan on [a | rhs]; B is symmetric, solving B c = rhs
        for (int c = 0; c < n; ++c) {
            int p = c;
            while (p < n && a[p][c].is_zero()) ++p;
            if (p == n) throw std::domain_error("degenerate form");
            std::swap(a[p], a[c]);
            std::swap(rhs[p], rhs[c]);
            Rational f = a[c][c].inverse();
            for (int j = 0; j < n; ++j) a[c][j] *= f;
            rhs[c] *= f;
            for (int q = 0; q < n; ++q) {
                if (q == c || a[q][c].is_zero()) continue;
                Rational g = a[q][c];
                for (int j = 0; j < n; ++j) a[q][j] -= g * a[c][j];
                rhs[q] -= g * rhs[c];
            }
        }
        QVec w(r.amb);
        for (int k = 0; k < n; ++k) w = qadd(w, qscale(r.simple[k], rhs[k]));
        out.push_back(w);
    }
    return out;
}

}  // namespace vacdet
