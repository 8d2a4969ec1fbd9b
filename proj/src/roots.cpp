#include "vacdet/roots.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vacdet {

Rational dot(const QVec& a, const QVec& b) {
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec qadd(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qsub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec qscale(const QVec& a, const Rational& k) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

QVec matvec(const QMat& m, const QVec& v) {
    QVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

QMat matmul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

std::string qvec_str(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

namespace {

QMat identity(int n) {
    QMat m(n, QVec(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// inverse of a square rational matrix by Gauss-Jordan
QMat invert(QMat a) {
    int n = static_cast<int>(a.size());
    QMat inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational f = a[c][c].inverse();
        for (int j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational g = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= g * a[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

QVec unit(int n, int i, const Rational& x = 1) {
    QVec v(n);
    v[i] = x;
    return v;
}

}  // namespace

bool ContragredientDatum::symmetric_check() const {
    for (size_t i = 0; i < A.size(); ++i) {
        if (d[i].is_zero()) return false;
        for (size_t j = 0; j < A.size(); ++j)
            if (d[i] * A[i][j] != d[j] * A[j][i]) return false;
    }
    return true;
}

Rational RootSystem::bil(const QVec& a, const QVec& b) const {
    Rational s;
    for (int i = 0; i < amb; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < amb; ++j)
            if (!gram[i][j].is_zero() && !b[j].is_zero()) s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

QVec RootSystem::vec(const Coords& c) const {
    QVec v(amb);
    for (int i = 0; i < rank(); ++i)
        if (c[i]) v = qadd(v, qscale(simple[i], Rational(c[i])));
    return v;
}

QVec RootSystem::coords_q(const QVec& v) const {
    QVec c = matvec(pinv_, v);
    QVec back(amb);
    for (int i = 0; i < rank(); ++i) back = qadd(back, qscale(simple[i], c[i]));
    if (back != v) throw std::invalid_argument("vector not in the span of the simple roots: " + qvec_str(v));
    return c;
}

std::optional<Coords> RootSystem::coords(const QVec& v) const {
    QVec c = coords_q(v);
    Coords out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_integer()) return std::nullopt;
        out[i] = static_cast<int>(c[i].to_long());
    }
    return out;
}

Rational RootSystem::form(const Coords& a, const Coords& b) const {
    Rational s;
    for (int i = 0; i < rank(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rank(); ++j)
            if (b[j]) s += bs_[i][j] * Rational(a[i] * b[j]);
    }
    return s;
}

Rational RootSystem::rho_pair(const Coords& a) const {
    Rational s;
    for (int i = 0; i < rank(); ++i)
        if (a[i]) s += rho_s_[i] * Rational(a[i]);
    return s;
}

Coords RootSystem::theta_coords() const {
    if (!theta) throw std::logic_error(id + ": no highest root");
    auto c = coords(*theta);
    if (!c) throw std::logic_error(id + ": theta not integral");
    return *c;
}

Rational RootSystem::hvee() const {
    if (!theta) throw std::logic_error(id + ": no highest root");
    return bil(rho, *theta) + bil(*theta, *theta) / 2;
}

int RootSystem::root_index(const Coords& c) const {
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i].c == c) return static_cast<int>(i);
    return -1;
}

bool RootSystem::is_root(const Coords& c) const {
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(c, -1));
    return it != lookup_.end() && it->first == c;
}

int RootSystem::parity_of_root(const Coords& c) const {
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(c, -1));
    if (it == lookup_.end() || it->first != c) throw std::invalid_argument("not a root: " + coords_str(c));
    return it->second;
}

bool RootSystem::in_NS(const Coords& c) const {
    // S consists of simple roots, so membership is a coordinate test
    for (int i = 0; i < rank(); ++i) {
        bool inS = std::find(S.begin(), S.end(), i) != S.end();
        if (c[i] < 0) return false;
        if (!inS && c[i] != 0) return false;
    }
    return true;
}

RootSystem RootSystem::scaled(const Rational& g) const {
    if (g.sign() == 0) throw std::invalid_argument("zero scale");
    RootSystem r = *this;
    for (auto& row : r.gram)
        for (auto& x : row) x *= g;
    r.to_standard = to_standard / g;
    r.finalize();
    return r;
}

ContragredientDatum RootSystem::datum() const {
    ContragredientDatum d;
    int n = rank();
    d.A.assign(n, QVec(n));
    d.d.assign(n, Rational(1));
    d.parity = simple_parity;
    d.cartan_dim = imag_mult;
    for (int i = 0; i < n; ++i) {
        Rational ni = bil(simple[i], simple[i]);
        for (int j = 0; j < n; ++j) {
            Rational x = bil(simple[i], simple[j]);
            d.A[i][j] = ni.is_zero() ? x : Rational(2) * x / ni;
        }
        d.d[i] = ni.is_zero() ? Rational(1) : ni / 2;
    }
    return d;
}

Rational RootSystem::casimir(const QVec& lambda) const {
    return bil(qadd(lambda, qscale(rho, 2)), lambda);
}

Rational RootSystem::phi(const Coords& xi, const QVec& lambda) const {
    QVec x = vec(xi);
    return bil(qadd(lambda, rho), x) - bil(x, x) / 2;
}

void RootSystem::finalize() {
    int r = rank();
    // pseudo-inverse (S^T S)^{-1} S^T with the plain dot product
    QMat sts(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sts[i][j] = vacdet::dot(simple[i], simple[j]);
    QMat inv = invert(sts);
    pinv_.assign(r, QVec(amb));
    for (int i = 0; i < r; ++i)
        for (int a = 0; a < amb; ++a)
            for (int j = 0; j < r; ++j) pinv_[i][a] += inv[i][j] * simple[j][a];
    bs_.assign(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) bs_[i][j] = bil(simple[i], simple[j]);
    for (auto& p : pos) {
        if (p.v.empty()) p.v = vec(p.c);
        auto c = coords(p.v);
        if (!c) throw std::logic_error(id + ": root not integral " + qvec_str(p.v));
        p.c = *c;
        p.norm = bil(p.v, p.v);
    }
    if (rho.empty()) {
        rho.assign(amb, Rational(0));
        for (const auto& p : pos)
            rho = qadd(rho, qscale(p.v, Rational(p.parity ? -p.mult : p.mult, 2)));
    }
    rho_s_.assign(r, Rational(0));
    for (int i = 0; i < r; ++i) rho_s_[i] = bil(rho, simple[i]);
    lookup_.clear();
    for (const auto& p : pos) {
        lookup_.push_back({p.c, p.parity});
        lookup_.push_back({scale(p.c, -1), p.parity});
    }
    std::sort(lookup_.begin(), lookup_.end());
}

void RootSystem::validate() const {
    for (int i = 0; i < rank(); ++i) {
        Rational n = bil(simple[i], simple[i]);
        if (bil(rho, simple[i]) != n / 2)
            throw std::logic_error(id + ": (rho|alpha_" + std::to_string(i) + ") != norm/2");
    }
    for (const auto& p : pos) {
        if (!nonneg(p.c) || height(p.c) == 0) throw std::logic_error(id + ": root not positive");
    }
    for (int i : S) {
        if (!bil(simple[i], simple[i]).is_zero()) throw std::logic_error(id + ": S not isotropic");
        for (int j : S)
            if (!bil(simple[i], simple[j]).is_zero()) throw std::logic_error(id + ": S not orthogonal");
    }
    if (theta && !coords(*theta)) throw std::logic_error(id + ": theta not in lattice");
    if (theta && root_index(theta_coords()) < 0) throw std::logic_error(id + ": theta not a root");
    auto computed = [&] {
        QVec r(amb);
        for (const auto& p : pos) r = qadd(r, qscale(p.v, Rational(p.parity ? -p.mult : p.mult, 2)));
        return r;
    }();
    if (computed != rho) throw std::logic_error(id + ": rho differs from rho_0 - rho_1");
}

std::vector<WeylElement> RootSystem::weyl_group(size_t max_size) const {
    int n = amb, r = rank();
    std::vector<QMat> gens;
    for (const auto& a : sharp_gens) {
        Rational na = bil(a, a);
        if (na.is_zero()) throw std::logic_error("reflection in an isotropic root");
        QVec ga(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ga[i] += gram[i][j] * a[j];
        QMat m = identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] -= Rational(2) * a[i] * ga[j] / na;
        gens.push_back(m);
    }
    auto make = [&](const QMat& act, std::vector<int> word) {
        WeylElement w;
        w.act = act;
        w.word = std::move(word);
        w.length = static_cast<int>(w.word.size());
        w.coord_act.assign(r, std::vector<int>(r));
        for (int j = 0; j < r; ++j) {
            auto c = coords(matvec(act, simple[j]));
            if (!c) throw std::logic_error(id + ": W does not preserve the root lattice");
            for (int i = 0; i < r; ++i) w.coord_act[i][j] = (*c)[i];
        }
        auto sh = coords(qsub(matvec(act, rho), rho));
        if (!sh) throw std::logic_error(id + ": w(rho)-rho not in the root lattice");
        w.rho_shift = *sh;
        return w;
    };
    std::vector<WeylElement> out;
    std::set<IMat> seen;
    out.push_back(make(identity(n), {}));
    seen.insert(out[0].coord_act);
    for (size_t head = 0; head < out.size(); ++head) {
        for (size_t g = 0; g < gens.size(); ++g) {
            QMat act = matmul(out[head].act, gens[g]);
            auto word = out[head].word;
            word.push_back(static_cast<int>(g));
            WeylElement w = make(act, word);
            if (seen.insert(w.coord_act).second) {
                out.push_back(std::move(w));
                if (out.size() > max_size) throw std::length_error("Weyl group larger than bound");
            }
        }
    }
    return out;
}

QVec RootSystem::dot(const WeylElement& w, const QVec& lambda) const {
    return qsub(matvec(w.act, qadd(lambda, rho)), rho);
}

Coords RootSystem::dot_coords(const WeylElement& w, const Coords& x) const {
    int r = rank();
    Coords y(r, 0);
    for (int i = 0; i < r; ++i) {
        int s = w.rho_shift[i];
        for (int j = 0; j < r; ++j) s += w.coord_act[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

// ------------------------------------------------------------------ catalog

namespace {

// Lie algebra from a symmetrized Cartan matrix B (Gram of simple roots)
RootSystem from_gram(const std::string& id, const QMat& B) {
    RootSystem rs;
    rs.id = id;
    rs.family = "lie";
    int r = static_cast<int>(B.size());
    rs.amb = r;
    rs.gram = B;
    for (int i = 0; i < r; ++i) {
        rs.simple.push_back(unit(r, i));
        rs.simple_parity.push_back(0);
        rs.sharp_gens.push_back(unit(r, i));
    }
    auto pair = [&](const Coords& a, int i) {
        Rational s;
        for (int j = 0; j < r; ++j) s += B[j][i] * Rational(a[j]);
        return s;
    };
    std::set<Coords> roots;
    std::vector<Coords> layer;
    for (int i = 0; i < r; ++i) {
        Coords c(r, 0);
        c[i] = 1;
        roots.insert(c);
        layer.push_back(c);
    }
    while (!layer.empty()) {
        std::vector<Coords> next;
        for (const auto& b : layer) {
            for (int i = 0; i < r; ++i) {
                int p = 0;
                Coords d = b;
                while (true) {
                    d[i] -= 1;
                    if (!roots.count(d)) break;
                    ++p;
                }
                Rational cart = Rational(2) * pair(b, i) / B[i][i];
                int q = p - static_cast<int>(cart.to_long());
                if (q > 0) {
                    Coords up = b;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    std::vector<Coords> sorted(roots.begin(), roots.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Coords& a, const Coords& b) { return height(a) < height(b); });
    for (const auto& c : sorted) {
        PosRoot p;
        p.c = c;
        p.v = QVec(c.begin(), c.end());
        rs.pos.push_back(p);
    }
    rs.finalize();
    rs.theta = rs.pos.back().v;
    rs.imag_mult = r;
    return rs;
}

QMat cartan_gram(char type, int n) {
    // symmetrized, short roots of norm 2
    QMat B(n, QVec(n));
    auto set = [&](int i, int j, Rational x) { B[i][j] = x; B[j][i] = x; };
    switch (type) {
        case 'A':
            for (int i = 0; i < n; ++i) B[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i < n; ++i) B[i][i] = (i == n - 1) ? 2 : 4;
            for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -2);
            if (n == 1) B[0][0] = 2;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i < n; ++i) B[i][i] = (i == n - 1) ? 4 : 2;
            for (int i = 0; i + 1 < n; ++i) set(i, i + 1, (i + 1 == n - 1) ? -2 : -1);
            if (n == 1) B[0][0] = 2;
            break;
        case 'D':
            for (int i = 0; i < n; ++i) B[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
            if (n >= 3) set(n - 3, n - 1, -1);
            if (n == 2) B[0][1] = B[1][0] = 0;
            else set(n - 3, n - 2, -1);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            B = {{2, -3}, {-3, 6}};
            break;
        case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            B = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
            break;
        default:
            throw std::invalid_argument("unknown Cartan type");
    }
    return B;
}

// Superalgebra from explicit ambient data.  eps-coordinates, 0-based.
struct SuperBuilder {
    RootSystem rs;
    explicit SuperBuilder(std::string id, QMat gram) {
        rs.id = std::move(id);
        rs.amb = static_cast<int>(gram.size());
        rs.gram = std::move(gram);
        rs.is_super = true;
    }
    QVec e(int i, Rational x = 1) const { return unit(rs.amb, i, x); }
    void simple(const QVec& v, int parity) {
        rs.simple.push_back(v);
        rs.simple_parity.push_back(parity);
    }
    void root(const QVec& v, int parity, int mult = 1) {
        PosRoot p;
        p.v = v;
        p.parity = parity;
        p.mult = mult;
        rs.pos.push_back(p);
    }
    RootSystem done() {
        std::vector<QVec> given_rho;
        rs.finalize();
        std::stable_sort(rs.pos.begin(), rs.pos.end(),
                         [](const PosRoot& a, const PosRoot& b) { return height(a.c) < height(b.c); });
        rs.imag_mult = rs.rank();
        rs.validate();
        return rs;
    }
};

QMat diag(const std::vector<Rational>& d) {
    QMat m(d.size(), QVec(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

QVec operator+(const QVec& a, const QVec& b) { return qadd(a, b); }
QVec operator-(const QVec& a, const QVec& b) { return qsub(a, b); }
QVec operator*(const Rational& k, const QVec& a) { return qscale(a, k); }

// sl(1|n): eps_0 .. eps_n, (eps_0|eps_0) = -1
RootSystem sl1n(int n) {
    std::vector<Rational> d(n + 1, Rational(1));
    d[0] = -1;
    SuperBuilder b("sl(1|" + std::to_string(n) + ")", diag(d));
    b.simple(b.e(0) - b.e(1), 1);
    for (int i = 1; i < n; ++i) b.simple(b.e(i) - b.e(i + 1), 0);
    for (int i = 1; i <= n; ++i) b.root(b.e(0) - b.e(i), 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.root(b.e(i) - b.e(j), 0);
    b.rs.theta = b.e(0) - b.e(n);
    b.rs.S = {0};
    for (int i = 1; i < n; ++i) b.rs.sharp_gens.push_back(b.e(i) - b.e(i + 1));
    b.rs.family = "defect1";
    b.rs.defect = 1;
    QVec rho(n + 1);
    rho[0] = Rational(-n, 2);
    for (int i = 1; i <= n; ++i) rho[i] = Rational(n, 2) + 1 - i;
    b.rs.rho = rho;
    return b.done();
}

// osp(2|2n) = C(n+1)
RootSystem osp22n(int n) {
    std::vector<Rational> d(n + 1, Rational(1));
    d[0] = -1;
    SuperBuilder b("osp(2|" + std::to_string(2 * n) + ")", diag(d));
    b.simple(b.e(0) - b.e(1), 1);
    for (int i = 1; i < n; ++i) b.simple(b.e(i) - b.e(i + 1), 0);
    b.simple(b.e(n, 2), 0);
    for (int i = 1; i <= n; ++i) {
        b.root(b.e(0) - b.e(i), 1);
        b.root(b.e(0) + b.e(i), 1);
        b.root(b.e(i, 2), 0);
        for (int j = i + 1; j <= n; ++j) {
            b.root(b.e(i) - b.e(j), 0);
            b.root(b.e(i) + b.e(j), 0);
        }
    }
    b.rs.theta = b.e(0) + b.e(1);
    b.rs.S = {0};
    for (int i = 1; i < n; ++i) b.rs.sharp_gens.push_back(b.e(i) - b.e(i + 1));
    b.rs.sharp_gens.push_back(b.e(n, 2));
    b.rs.family = "defect1";
    b.rs.defect = 1;
    b.rs.to_standard = Rational(1, 2);
    QVec rho(n + 1);
    rho[0] = -n;
    for (int i = 1; i <= n; ++i) rho[i] = n + 1 - i;
    b.rs.rho = rho;
    return b.done();
}

// osp(3|2n) = B(1,n) and osp(2n+1|2) = B(n,1)
RootSystem ospB(int n, bool big_orth) {
    std::vector<Rational> d(n + 1, Rational(1));
    d[0] = -1;
    std::string id = big_orth ? "osp(" + std::to_string(2 * n + 1) + "|2)"
                              : "osp(3|" + std::to_string(2 * n) + ")";
    SuperBuilder b(id, diag(d));
    b.simple(b.e(0) - b.e(1), 1);
    for (int i = 1; i < n; ++i) b.simple(b.e(i) - b.e(i + 1), 0);
    b.simple(b.e(n), big_orth ? 0 : 1);
    for (int i = 1; i <= n; ++i) {
        b.root(b.e(0) - b.e(i), 1);
        b.root(b.e(0) + b.e(i), 1);
        b.root(b.e(i), big_orth ? 0 : 1);
        if (!big_orth) b.root(b.e(i, 2), 0);
        for (int j = i + 1; j <= n; ++j) {
            b.root(b.e(i) - b.e(j), 0);
            b.root(b.e(i) + b.e(j), 0);
        }
    }
    if (big_orth) {
        b.root(b.e(0), 1);
        b.root(b.e(0, 2), 0);
        b.rs.theta = b.e(0, 2);
    } else {
        b.root(b.e(0), 0);
        b.rs.theta = b.e(0) + b.e(1);
        b.rs.to_standard = Rational(1, 2);
    }
    b.rs.S = {0};
    for (int i = 1; i < n; ++i) b.rs.sharp_gens.push_back(b.e(i) - b.e(i + 1));
    b.rs.sharp_gens.push_back(b.e(n));
    b.rs.family = "defect1";
    b.rs.defect = 1;
    QVec rho(n + 1);
    rho[0] = -(Rational(n) - Rational(1, 2));
    for (int i = 1; i <= n; ++i) rho[i] = Rational(n - i) + Rational(1, 2);
    b.rs.rho = rho;
    return b.done();
}

// osp(2n|2) = D(n,1), n >= 2
RootSystem ospD(int n) {
    std::vector<Rational> d(n + 1, Rational(1));
    d[0] = -1;
    SuperBuilder b("osp(" + std::to_string(2 * n) + "|2)", diag(d));
    b.simple(b.e(0) - b.e(1), 1);
    for (int i = 1; i < n; ++i) b.simple(b.e(i) - b.e(i + 1), 0);
    b.simple(b.e(n - 1) + b.e(n), 0);
    for (int i = 1; i <= n; ++i) {
        b.root(b.e(0) - b.e(i), 1);
        b.root(b.e(0) + b.e(i), 1);
        for (int j = i + 1; j <= n; ++j) {
            b.root(b.e(i) - b.e(j), 0);
            b.root(b.e(i) + b.e(j), 0);
        }
    }
    b.root(b.e(0, 2), 0);
    b.rs.theta = b.e(0, 2);
    b.rs.S = {0};
    for (int i = 1; i < n; ++i) b.rs.sharp_gens.push_back(b.e(i) - b.e(i + 1));
    b.rs.sharp_gens.push_back(b.e(n - 1) + b.e(n));
    b.rs.family = "defect1";
    b.rs.defect = 1;
    QVec rho(n + 1);
    rho[0] = -(n - 1);
    for (int i = 1; i <= n; ++i) rho[i] = n - i;
    b.rs.rho = rho;
    return b.done();
}

RootSystem F4super() {
    SuperBuilder b("F(4)", diag({-6, 2, 2, 2}));
    Rational h(1, 2);
    QVec beta = h * (b.e(0) + b.e(1) + b.e(2) + b.e(3));
    b.simple(beta, 1);
    b.simple(b.e(1, -1), 0);
    b.simple(b.e(1) - b.e(2), 0);
    b.simple(b.e(2) - b.e(3), 0);
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                b.root(h * (b.e(0) + b.e(1, s1) + b.e(2, s2) + b.e(3, s3)), 1);
    b.root(b.e(0), 0);
    for (int i = 1; i <= 3; ++i) {
        b.root(b.e(i, -1), 0);
        for (int j = 1; j < i; ++j) {
            b.root(b.e(i, -1) + b.e(j), 0);
            b.root(b.e(i, -1) - b.e(j), 0);
        }
    }
    b.rs.theta = b.e(0);
    b.rs.S = {0};
    b.rs.sharp_gens = {b.e(1, -1), b.e(1) - b.e(2), b.e(2) - b.e(3)};
    b.rs.family = "defect1";
    b.rs.defect = 1;
    b.rs.to_standard = Rational(1, 2);
    b.rs.rho = QVec{Rational(-3, 2), Rational(-1, 2), Rational(-3, 2), Rational(-5, 2)};
    return b.done();
}

// G(3): basis eps0, eps1, eps2 with eps3 = -eps1-eps2
RootSystem G3super() {
    QMat g = {{-2, 0, 0}, {0, 2, -1}, {0, -1, 2}};
    SuperBuilder b("G(3)", g);
    QVec e0 = b.e(0), e1 = b.e(1), e2 = b.e(2), e3 = Rational(-1) * (e1 + e2);
    b.simple(e0 + e1, 1);
    b.simple(e2, 0);
    b.simple(e3 - e2, 0);
    b.root(e0, 1);
    for (const QVec& ei : {e1, e2, e3}) {
        b.root(e0 + ei, 1);
        b.root(e0 - ei, 1);
    }
    b.root(Rational(2) * e0, 0);
    for (const QVec& r : {Rational(-1) * e1, e2, e3, e3 - e2, e2 - e1, e3 - e1}) b.root(r, 0);
    b.rs.theta = Rational(2) * e0;
    b.rs.S = {0};
    b.rs.sharp_gens = {e2, e3 - e2};
    b.rs.family = "defect1";
    b.rs.defect = 1;
    b.rs.to_standard = Rational(1, 3);
    b.rs.rho = Rational(1, 2) * (Rational(-5) * e0 + Rational(-3) * e1 + e2 + Rational(3) * e3);
    return b.done();
}

RootSystem D21a(const Rational& a) {
    if (a.is_zero() || a == Rational(-1)) throw std::invalid_argument("D(2,1,a) needs a != 0, -1");
    SuperBuilder b("D(2,1,a=" + a.str() + ")",
                   diag({(Rational(-1) - a) / 2, a / 2, Rational(1, 2)}));
    QVec e0 = b.e(0), e1 = b.e(1), e2 = b.e(2);
    QVec beta = e0 - e1 - e2;
    b.simple(beta, 1);
    b.simple(Rational(2) * e1, 0);
    b.simple(Rational(2) * e2, 0);
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) b.root(e0 + Rational(s1) * e1 + Rational(s2) * e2, 1);
    for (const QVec& r : {e0, e1, e2}) b.root(Rational(2) * r, 0);
    b.rs.theta = Rational(2) * e0;
    b.rs.S = {0};
    b.rs.sharp_gens = {Rational(2) * e1, Rational(2) * e2};
    b.rs.family = "defect1";
    b.rs.defect = 1;
    b.rs.rho = Rational(-1) * beta;
    return b.done();
}

RootSystem gl22() {
    SuperBuilder b("gl(2|2)", diag({1, 1, -1, -1}));
    QVec e1 = b.e(0), e2 = b.e(1), e3 = b.e(2), e4 = b.e(3);
    QVec b1 = e3 - e1, al = e1 - e2, b2 = e2 - e4;
    b.simple(b1, 1);
    b.simple(al, 0);
    b.simple(b2, 1);
    b.root(al, 0);
    b.root(al + b1 + b2, 0);
    for (const QVec& r : {b1, b2, al + b1, al + b2}) b.root(r, 1);
    b.rs.theta = al + b1 + b2;
    b.rs.S = {0, 2};
    b.rs.sharp_gens = {al};
    b.rs.family = "gl22";
    b.rs.defect = 2;
    b.rs.rho = Rational(-1, 2) * (b1 + b2);
    RootSystem r = b.done();
    r.imag_mult = 3;
    return r;
}

// osp(1|2n) with odd roots of norm 2
RootSystem osp12n(int n) {
    SuperBuilder b("osp(1|" + std::to_string(2 * n) + ")", diag(std::vector<Rational>(n, Rational(2))));
    for (int i = 0; i + 1 < n; ++i) b.simple(b.e(i) - b.e(i + 1), 0);
    b.simple(b.e(n - 1), 1);
    for (int i = 0; i < n; ++i) {
        b.root(b.e(i), 1);
        b.root(b.e(i, 2), 0);
        for (int j = i + 1; j < n; ++j) {
            b.root(b.e(i) - b.e(j), 0);
            b.root(b.e(i) + b.e(j), 0);
        }
    }
    b.rs.theta = b.e(0, 2);
    for (int i = 0; i + 1 < n; ++i) b.rs.sharp_gens.push_back(b.e(i) - b.e(i + 1));
    b.rs.sharp_gens.push_back(b.e(n - 1));
    b.rs.family = "osp1";
    b.rs.defect = 0;
    b.rs.to_standard = Rational(1, 4);
    return b.done();
}

// generic sl(m|n), distinguished Borel: eps (norm 1), delta (norm -1)
RootSystem slmn(int m, int n) {
    std::vector<Rational> d;
    for (int i = 0; i < m; ++i) d.push_back(1);
    for (int j = 0; j < n; ++j) d.push_back(-1);
    SuperBuilder b("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")", diag(d));
    int t = m + n;
    for (int i = 0; i + 1 < t; ++i) b.simple(b.e(i) - b.e(i + 1), (i == m - 1) ? 1 : 0);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) b.root(b.e(i) - b.e(j), (i < m && j >= m) ? 1 : 0);
    b.rs.theta = b.e(0) - b.e(t - 1);
    b.rs.S = {m - 1};
    b.rs.family = "super";
    b.rs.defect = std::min(m, n);
    return b.done();
}

// generic osp(m|2n), m >= 2, distinguished Borel
RootSystem ospmn(int m, int n) {
    int r = m / 2;
    bool odd_m = m % 2;
    std::vector<Rational> d;
    for (int j = 0; j < n; ++j) d.push_back(-1);  // delta_j
    for (int i = 0; i < r; ++i) d.push_back(1);   // eps_i
    SuperBuilder b("osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")", diag(d));
    auto dl = [&](int j, Rational x = 1) { return b.e(j, x); };
    auto ep = [&](int i, Rational x = 1) { return b.e(n + i, x); };
    // delta_1 - delta_2, ..., delta_n - eps_1, eps_1 - eps_2, ..., then the orthogonal tail
    for (int j = 0; j + 1 < n; ++j) b.simple(dl(j) - dl(j + 1), 0);
    b.simple(dl(n - 1) - ep(0), 1);
    for (int i = 0; i + 1 < r; ++i) b.simple(ep(i) - ep(i + 1), 0);
    if (odd_m)
        b.simple(ep(r - 1), 0);
    else
        b.simple(ep(r - 2) + ep(r - 1), 0);
    for (int j = 0; j < n; ++j) {
        b.root(dl(j, 2), 0);
        for (int k = j + 1; k < n; ++k) {
            b.root(dl(j) - dl(k), 0);
            b.root(dl(j) + dl(k), 0);
        }
        for (int i = 0; i < r; ++i) {
            b.root(dl(j) - ep(i), 1);
            b.root(dl(j) + ep(i), 1);
        }
        if (odd_m) b.root(dl(j), 1);
    }
    for (int i = 0; i < r; ++i) {
        for (int k = i + 1; k < r; ++k) {
            b.root(ep(i) - ep(k), 0);
            b.root(ep(i) + ep(k), 0);
        }
        if (odd_m) b.root(ep(i), 0);
    }
    b.rs.theta = dl(0, 2);
    b.rs.S = {n - 1};
    b.rs.family = "super";
    b.rs.defect = std::min(r, n);
    return b.done();
}

std::string strip(const std::string& s) {
    std::string o;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) o += (c == ',' ? '|' : c);
    return o;
}

}  // namespace

RootSystem catalog(const std::string& raw) {
    std::string id = strip(raw);
    std::smatch m;
    static const std::regex lie(R"(([ABCDGF])(\d+))");
    static const std::regex sl(R"(sl(\d+))");
    static const std::regex super2(R"((sl|osp|gl)\((\d+)\|(\d+)\))");
    static const std::regex d21(R"(D\(2\|1\|a=([-+]?\d+(?:/\d+)?)\))");
    if (std::regex_match(id, m, sl)) {
        int n = std::stoi(m[1]) - 1;
        if (n < 1 || n > 8) throw std::invalid_argument("unsupported rank: " + raw);
        RootSystem r = from_gram("sl" + m[1].str(), cartan_gram('A', n));
        r.validate();
        return r;
    }
    if (std::regex_match(id, m, lie)) {
        char t = m[1].str()[0];
        int n = std::stoi(m[2]);
        bool ok = (t == 'A' && n >= 1 && n <= 8) || (t == 'B' && n >= 2 && n <= 6) ||
                  (t == 'C' && n >= 2 && n <= 6) || (t == 'D' && n >= 3 && n <= 6) ||
                  (t == 'G' && n == 2) || (t == 'F' && n == 4);
        if (!ok) throw std::invalid_argument("unsupported Lie type or rank: " + raw);
        RootSystem r = from_gram(id, cartan_gram(t, n));
        // standard normalization has long roots of norm 2
        Rational longest = 0;
        for (const auto& p : r.pos) longest = std::max(longest, p.norm);
        r.to_standard = Rational(2) / longest;
        r.validate();
        return r;
    }
    if (id == "F(4)") return F4super();
    if (id == "G(3)") return G3super();
    if (std::regex_match(id, m, d21)) return D21a(Rational::parse(m[1]));
    if (std::regex_match(id, m, super2)) {
        std::string f = m[1];
        int a = std::stoi(m[2]), b = std::stoi(m[3]);
        if (f == "gl") {
            if (a == 2 && b == 2) return gl22();
            throw std::invalid_argument("only gl(2|2) is supported: " + raw);
        }
        if (f == "sl") {
            if (a == 1 && b >= 2 && b <= 6) return sl1n(b);
            if (a >= 2 && b >= 2 && a != b && a + b <= 7) return slmn(a, b);
            throw std::invalid_argument("unsupported sl(m|n): " + raw);
        }
        // osp(a|b)
        if (b % 2) throw std::invalid_argument("osp(m|2n) needs even 2n: " + raw);
        int n = b / 2;
        if (n < 1) throw std::invalid_argument("unsupported: " + raw);
        if (a == 1 && n <= 4) return osp12n(n);
        if (a == 2 && n <= 5) return osp22n(n);
        if (a == 3 && n <= 5) return ospB(n, false);
        if (n == 1 && a % 2 == 1 && a >= 5 && a <= 13) return ospB((a - 1) / 2, true);
        if (n == 1 && a % 2 == 0 && a >= 4 && a <= 12) return ospD(a / 2);
        if (a >= 4 && n >= 2 && a + 2 * n <= 10) return ospmn(a, n);
        throw std::invalid_argument("unsupported osp: " + raw);
    }
    throw std::invalid_argument("unknown algebra: " + raw);
}

std::vector<std::string> catalog_examples() {
    return {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "sl2", "sl3",
            "sl(1|2)", "sl(1|3)", "osp(2|2)", "osp(2|4)", "osp(3|2)", "osp(3|4)", "osp(5|2)",
            "osp(4|2)", "osp(6|2)", "F(4)", "G(3)", "D(2,1,a=1/2)", "gl(2|2)", "osp(1|2)",
            "osp(1|4)", "sl(2|3)", "osp(4|4)"};
}

// ------------------------------------------------------------------ affine

AffineSystem::AffineSystem(RootSystem fin) : fin_(std::move(fin)) {
    hvee_ = fin_.hvee();
    theta_ = fin_.theta_coords();
}

Coords AffineSystem::to_affine(int d, const Coords& finite) const {
    Coords n(rank());
    n[0] = d;
    for (int i = 0; i < fin_.rank(); ++i) n[i + 1] = finite[i] + d * theta_[i];
    return n;
}

Coords AffineSystem::finite_part(const Coords& n) const {
    Coords f(fin_.rank());
    for (int i = 0; i < fin_.rank(); ++i) f[i] = n[i + 1] - n[0] * theta_[i];
    return f;
}

std::vector<AffineSystem::ARoot> AffineSystem::roots_of_depth(int u) const {
    std::vector<ARoot> out;
    int r = fin_.rank();
    if (u == 0) {
        for (const auto& p : fin_.positive())
            out.push_back({to_affine(0, p.c), 0, p.c, p.parity, p.mult, false});
        return out;
    }
    for (const auto& p : fin_.positive()) {
        out.push_back({to_affine(u, p.c), u, p.c, p.parity, p.mult, false});
        Coords neg = scale(p.c, -1);
        out.push_back({to_affine(u, neg), u, neg, p.parity, p.mult, false});
    }
    out.push_back({to_affine(u, Coords(r, 0)), u, Coords(r, 0), 0, fin_.imag_mult, true});
    return out;
}

std::vector<AffineSystem::ARoot> AffineSystem::positive_roots_in_box(const Coords& box) const {
    std::vector<ARoot> out;
    for (int u = 0; u <= box[0]; ++u)
        for (auto& a : roots_of_depth(u))
            if (leq(a.c, box)) out.push_back(std::move(a));
    return out;
}

Rational AffineSystem::form(const Coords& a, const Coords& b) const {
    return fin_.form(finite_part(a), finite_part(b));
}

Rational AffineSystem::rho_pair(const Coords& a) const {
    return hvee_ * Rational(a[0]) + fin_.rho_pair(finite_part(a));
}

Weight AffineSystem::rho_hat() const { return {fin_.rho, hvee_, Rational(0)}; }

Rational AffineSystem::bil(const Weight& a, const Weight& b) const {
    return fin_.bil(a.fin, b.fin) + a.lambda0 * b.delta + a.delta * b.lambda0;
}

Rational AffineSystem::casimir(const Weight& l) const {
    Weight r = rho_hat();
    Weight s{qadd(l.fin, qscale(r.fin, 2)), l.lambda0 + 2 * r.lambda0, l.delta + 2 * r.delta};
    return bil(s, l);
}

ExactPoly AffineSystem::phi(const Coords& xi, const std::string& var) const {
    Coords f = finite_part(xi);
    Rational d(xi[0]);
    return ExactPoly::linear(var, d, hvee_ * d + fin_.rho_pair(f) - fin_.form(f, f) / 2);
}

Weight AffineSystem::weight_of(const Coords& n) const {
    return {fin_.vec(finite_part(n)), Rational(0), Rational(n[0])};
}

}  // namespace vacdet
