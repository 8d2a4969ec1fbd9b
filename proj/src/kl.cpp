#include "vacdet/kl.hpp"

#include <algorithm>
#include <atomic>
#include <regex>
#include <set>
#include <stdexcept>

namespace vacdet {

namespace {

std::atomic<std::uint64_t> g_serial{1};

std::uint64_t key(int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

using Coeffs = KLTable::Coeffs;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long add_ck(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
    return r;
}

long long mul_ck(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
    return r;
}

// a += sign * b * q^shift
void axpy(Coeffs& a, const Coeffs& b, int sign, int shift = 0) {
    if (b.empty()) return;
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = add_ck(a[i + shift], sign * b[i]);
    trim(a);
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_ck(r[i + j], mul_ck(a[i], b[j]));
    trim(r);
    return r;
}

// q^d * a(1/q), deg a <= d required
Coeffs bar_shift(const Coeffs& a, int d) {
    if (a.empty()) return {};
    if (static_cast<int>(a.size()) - 1 > d) throw std::logic_error("bar_shift: degree exceeds shift");
    Coeffs r(d + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[d - i] = a[i];
    trim(r);
    return r;
}

Coeffs truncated(Coeffs a, int deg) {
    if (deg < 0) return {};
    if (static_cast<int>(a.size()) > deg + 1) a.resize(deg + 1);
    trim(a);
    return a;
}

const Coeffs kOne{1};
const Coeffs kZero{};

struct Edge {
    int i, j, m;   // m = 0 for infinity
};

std::vector<std::vector<int>> cartan_from(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (const Edge& e : edges) {
        int x = -1, y = -1;
        switch (e.m) {
            case 3: x = -1; y = -1; break;
            case 4: x = -1; y = -2; break;
            case 6: x = -1; y = -3; break;
            case 0: x = -2; y = -2; break;
            default: throw std::invalid_argument("non-crystallographic bond");
        }
        a[e.i][e.j] = x;
        a[e.j][e.i] = y;
    }
    return a;
}

}  // namespace

ExactPoly coeffs_to_poly(const Coeffs& c) {
    ExactPoly out;
    ExactPoly q = ExactPoly::var("q");
    ExactPoly qi(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) out += qi * Rational(static_cast<long>(c[i]));
        qi *= q;
    }
    return out;
}

// ---------------------------------------------------------------- group

CoxeterGroup::CoxeterGroup(std::string name, std::vector<std::vector<int>> cartan, std::vector<std::string> labels)
    : name_(std::move(name)), cartan_(std::move(cartan)), labels_(std::move(labels)), serial_(g_serial++) {
    int n = rank();
    if (n == 0 || static_cast<int>(labels_.size()) != n) throw std::invalid_argument("cartan/labels size mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(cartan_[i].size()) != n || cartan_[i][i] != 2)
            throw std::invalid_argument("not a Cartan matrix");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0 || (cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                throw std::invalid_argument("not a Cartan matrix");
        }
    }
    intern(std::vector<long>(n, 1));
    elems_[0].len = 0;
}

int CoxeterGroup::intern(std::vector<long> v) {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    Node nd;
    nd.v = v;
    for (int i = 0; i < rank(); ++i)
        if (v[i] < 0) {
            nd.first_desc = i;
            break;
        }
    nd.left.assign(rank(), -1);
    int id = static_cast<int>(elems_.size());
    elems_.push_back(std::move(nd));
    index_.emplace(std::move(v), id);
    return id;
}

int CoxeterGroup::lmul_id(int s, int w) {
    if (elems_[w].left[s] >= 0) return elems_[w].left[s];
    std::vector<long> v = elems_[w].v;
    long c = v[s];
    for (int j = 0; j < rank(); ++j) v[j] -= c * cartan_[s][j];
    bool down = elems_[w].v[s] < 0;
    int len = elems_[w].len + (down ? -1 : 1);
    int id = intern(std::move(v));
    elems_[id].len = len;
    elems_[w].left[s] = id;
    elems_[id].left[s] = w;
    return id;
}

void CoxeterGroup::check(CoxElem w) const {
    if (w.group != serial_) throw std::invalid_argument("element belongs to a different group");
    if (w.id < 0 || w.id >= static_cast<int>(elems_.size())) throw std::invalid_argument("bad element id");
}

int CoxeterGroup::label_index(const std::string& l) const {
    for (int i = 0; i < rank(); ++i)
        if (labels_[i] == l) return i;
    throw std::invalid_argument("unknown generator '" + l + "' in " + name_);
}

int CoxeterGroup::coxeter_m(int i, int j) const {
    if (i == j) return 1;
    int p = cartan_[i][j] * cartan_[j][i];
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return 0;
    }
}

CoxElem CoxeterGroup::gen(int i) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
    return {serial_, lmul_id(i, 0)};
}

CoxElem CoxeterGroup::lmul(int s, CoxElem w) {
    check(w);
    if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
    return {serial_, lmul_id(s, w.id)};
}

CoxElem CoxeterGroup::parse(const std::string& text) {
    std::vector<int> letters;
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '*' && ch != '.') t += ch;
    if (!(t.empty() || t == "e" || t == "1")) {
        std::size_t pos = 0;
        while (pos < t.size()) {
            int best = -1;
            std::size_t blen = 0;
            for (int i = 0; i < rank(); ++i) {
                const std::string& l = labels_[i];
                if (l.size() > blen && t.compare(pos, l.size(), l) == 0) {
                    best = i;
                    blen = l.size();
                }
            }
            if (best < 0) throw std::invalid_argument("cannot parse word '" + text + "' in " + name_);
            letters.push_back(best);
            pos += blen;
        }
    }
    int w = 0;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = lmul_id(*it, w);
    return {serial_, w};
}

CoxElem CoxeterGroup::inverse(CoxElem w) {
    check(w);
    std::vector<int> wd = word(w);
    int r = 0;
    for (int s : wd) r = lmul_id(s, r);
    return {serial_, r};
}

int CoxeterGroup::length(CoxElem w) const {
    check(w);
    return elems_[w.id].len;
}

bool CoxeterGroup::left_descent(int s, CoxElem w) const {
    check(w);
    return elems_[w.id].v[s] < 0;
}

std::vector<int> CoxeterGroup::word(CoxElem w) const {
    check(w);
    std::vector<int> out;
    auto* self = const_cast<CoxeterGroup*>(this);   // memo tables only
    int cur = w.id;
    while (cur != 0) {
        int s = elems_[cur].first_desc;
        out.push_back(s);
        cur = self->lmul_id(s, cur);
    }
    return out;
}

std::string CoxeterGroup::str(CoxElem w) const {
    std::vector<int> wd = word(w);
    if (wd.empty()) return "e";
    std::string s;
    for (int i : wd) s += labels_[i];
    return s;
}

bool CoxeterGroup::leq_id(int x, int y) {
    if (x == y || x == 0) return true;
    if (elems_[x].len >= elems_[y].len) return false;
    std::uint64_t k = key(x, y);
    auto it = leq_.find(k);
    if (it != leq_.end()) return it->second;
    int s = elems_[y].first_desc;
    int sy = lmul_id(s, y);
    bool r = elems_[x].v[s] < 0 ? leq_id(lmul_id(s, x), sy) : leq_id(x, sy);
    leq_.emplace(k, r);
    return r;
}

bool CoxeterGroup::bruhat_leq(CoxElem x, CoxElem y) {
    check(x);
    check(y);
    return leq_id(x.id, y.id);
}

const std::vector<int>& CoxeterGroup::lower_ideal(CoxElem y) {
    check(y);
    auto it = ideal_.find(y.id);
    if (it != ideal_.end()) return it->second;
    std::vector<int> out;
    if (y.id == 0) {
        out = {0};
    } else {
        int s = elems_[y.id].first_desc;
        int sy = lmul_id(s, y.id);
        const std::vector<int>& below = lower_ideal({serial_, sy});
        std::set<int> acc(below.begin(), below.end());
        std::vector<int> copy = below;
        for (int w : copy) acc.insert(lmul_id(s, w));
        out.assign(acc.begin(), acc.end());
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            return elems_[a].len != elems_[b].len ? elems_[a].len < elems_[b].len : a < b;
        });
    }
    return ideal_.emplace(y.id, std::move(out)).first->second;
}

std::vector<CoxElem> CoxeterGroup::interval(CoxElem x, CoxElem y) {
    check(x);
    std::vector<CoxElem> out;
    std::vector<int> ideal = lower_ideal(y);
    for (int w : ideal)
        if (leq_id(x.id, w)) out.push_back({serial_, w});
    return out;
}

std::vector<CoxElem> CoxeterGroup::elements_up_to(int len) {
    std::vector<CoxElem> out{identity()};
    std::vector<int> layer{0};
    for (int l = 1; l <= len; ++l) {
        std::set<int> next;
        for (int w : layer)
            for (int s = 0; s < rank(); ++s)
                if (elems_[w].v[s] > 0) next.insert(lmul_id(s, w));
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int w : next) keyed.push_back({word({serial_, w}), w});
        std::sort(keyed.begin(), keyed.end());
        layer.clear();
        for (auto& [wd, w] : keyed) {
            layer.push_back(w);
            out.push_back({serial_, w});
        }
        if (layer.empty()) break;   // finite group exhausted
    }
    return out;
}

std::shared_ptr<CoxeterGroup> CoxeterGroup::diagram(const std::string& name) {
    auto labels = [](int n, int from) {
        std::vector<std::string> l;
        for (int i = 0; i < n; ++i) l.push_back("s" + std::to_string(i + from));
        return l;
    };
    auto make = [&](int n, int from, const std::vector<Edge>& edges) {
        return std::make_shared<CoxeterGroup>(name, cartan_from(n, edges), labels(n, from));
    };
    if (name == "A1xA1") return make(2, 1, {});
    static const std::regex fin("([A-G])([0-9]+)"), aff("affine-([A-G])([0-9]+)");
    std::smatch m;
    if (std::regex_match(name, m, fin)) {
        char t = m[1].str()[0];
        int n = std::stoi(m[2]);
        std::vector<Edge> e;
        switch (t) {
            case 'A':
                if (n < 1) break;
                for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 3});
                return make(n, 1, e);
            case 'B':
                if (n < 2) break;
                for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1, 3});
                e.push_back({n - 2, n - 1, 4});
                return make(n, 1, e);
            case 'C':
                if (n < 2) break;
                e.push_back({0, 1, 4});
                for (int i = 1; i + 1 < n; ++i) e.push_back({i, i + 1, 3});
                return make(n, 1, e);
            case 'D':
                if (n < 4) break;
                e.push_back({1, 2, 3});
                e.push_back({0, 2, 3});
                for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1, 3});
                return make(n, 1, e);
            case 'F':
                if (n != 4) break;
                return make(4, 1, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
            case 'G':
                if (n != 2) break;
                return make(2, 1, {{0, 1, 6}});
            default: break;
        }
    } else if (std::regex_match(name, m, aff)) {
        char t = m[1].str()[0];
        int n = std::stoi(m[2]);
        std::vector<Edge> e;
        if (t == 'A' && n == 1) return make(2, 0, {{0, 1, 0}});
        if (t == 'A' && n >= 2) {
            for (int i = 0; i < n; ++i) e.push_back({i, i + 1, 3});
            e.push_back({n, 0, 3});
            return make(n + 1, 0, e);
        }
        if (t == 'C' && n >= 2) {
            e.push_back({0, 1, 4});
            for (int i = 1; i + 1 < n; ++i) e.push_back({i, i + 1, 3});
            e.push_back({n, n - 1, 4});
            return make(n + 1, 0, e);
        }
        // the affine node hangs off s1, which carries the triple bond to s2
        if (t == 'G' && n == 2) return make(3, 0, {{0, 1, 3}, {1, 2, 6}});
    }
    throw std::invalid_argument("unsupported diagram '" + name + "'");
}

// ---------------------------------------------------------------- KL table

KLTable::KLTable(std::shared_ptr<CoxeterGroup> g, std::size_t max_interval) : g_(std::move(g)), max_interval_(max_interval) {}

std::vector<int> KLTable::interval_ids(int x, int y) {
    const std::vector<int>& ideal = g_->lower_ideal({g_->serial_, y});
    if (ideal.size() > max_interval_)
        throw std::length_error("interval too large (" + std::to_string(ideal.size()) + " elements below " +
                                g_->str({g_->serial_, y}) + ")");
    std::vector<int> copy = ideal;
    std::vector<int> out;
    for (int w : copy)
        if (g_->leq_id(x, w)) out.push_back(w);
    return out;
}

const Coeffs& KLTable::R(int x, int y) {
    if (x == y) return kOne;
    if (!g_->leq_id(x, y)) return kZero;
    std::uint64_t k = key(x, y);
    if (auto it = r_.find(k); it != r_.end()) return it->second;
    int s = g_->elems_[y].first_desc;
    int sy = g_->lmul_id(s, y), sx = g_->lmul_id(s, x);
    Coeffs r;
    if (g_->elems_[x].v[s] < 0) {
        r = R(sx, sy);
    } else {
        r = mul({-1, 1}, R(sx, y));
        axpy(r, R(sx, sy), 1, 1);
    }
    return r_.emplace(k, std::move(r)).first->second;
}

const Coeffs& KLTable::P(int x, int y) {
    if (x == y) return kOne;
    if (!g_->leq_id(x, y)) return kZero;
    int lx = g_->elems_[x].len, ly = g_->elems_[y].len, d = ly - lx;
    if (d <= 2) return kOne;
    std::uint64_t k = key(x, y);
    if (auto it = p_.find(k); it != p_.end()) return it->second;
    Coeffs s;
    for (int w : interval_ids(x, y)) {
        if (w == x) continue;
        int lw = g_->elems_[w].len;
        Coeffs pb = bar_shift(P(w, y), ly - lw);
        axpy(s, mul(R(x, w), pb), ((lw - lx) % 2) ? -1 : 1);
    }
    return p_.emplace(k, truncated(s, (d - 1) / 2)).first->second;
}

const Coeffs& KLTable::Q(int x, int z) {
    if (x == z) return kOne;
    if (!g_->leq_id(x, z)) return kZero;
    std::uint64_t k = key(x, z);
    if (auto it = q_.find(k); it != q_.end()) return it->second;
    int lx = g_->elems_[x].len, lz = g_->elems_[z].len;
    Coeffs s;
    for (int w : interval_ids(x, z)) {
        if (w == z) continue;
        int lw = g_->elems_[w].len;
        axpy(s, mul(Q(x, w), P(w, z)), ((lw - lx) % 2) ? -1 : 1);
    }
    // (-1)^{l(z)-l(x)} Q_{x,z} = -s
    Coeffs q;
    axpy(q, s, ((lz - lx) % 2) ? 1 : -1);
    return q_.emplace(k, std::move(q)).first->second;
}

const Coeffs& KLTable::QR(int x, int z) {
    if (x == z) return kOne;
    if (!g_->leq_id(x, z)) return kZero;
    std::uint64_t k = key(x, z);
    if (auto it = qr_.find(k); it != qr_.end()) return it->second;
    int lx = g_->elems_[x].len, lz = g_->elems_[z].len, d = lz - lx;
    Coeffs s;
    for (int w : interval_ids(x, z)) {
        if (w == z) continue;
        int lw = g_->elems_[w].len;
        Coeffs qb = bar_shift(QR(x, w), lw - lx);
        axpy(s, mul(qb, R(w, z)), ((lz - lw) % 2) ? -1 : 1);
    }
    return qr_.emplace(k, truncated(s, (d - 1) / 2)).first->second;
}

ExactPoly KLTable::r_poly(CoxElem x, CoxElem y) {
    std::lock_guard<std::mutex> lk(mu_);
    g_->check(x);
    g_->check(y);
    return coeffs_to_poly(R(x.id, y.id));
}

ExactPoly KLTable::p_poly(CoxElem x, CoxElem y) {
    std::lock_guard<std::mutex> lk(mu_);
    g_->check(x);
    g_->check(y);
    return coeffs_to_poly(P(x.id, y.id));
}

ExactPoly KLTable::q_poly(CoxElem x, CoxElem z) {
    std::lock_guard<std::mutex> lk(mu_);
    g_->check(x);
    g_->check(z);
    return coeffs_to_poly(Q(x.id, z.id));
}

ExactPoly KLTable::q_poly_via_r(CoxElem x, CoxElem z) {
    std::lock_guard<std::mutex> lk(mu_);
    g_->check(x);
    g_->check(z);
    return coeffs_to_poly(QR(x.id, z.id));
}

ExactPoly KLTable::m_statistic(CoxElem x, CoxElem z) {
    std::lock_guard<std::mutex> lk(mu_);
    g_->check(x);
    g_->check(z);
    if (!g_->leq_id(x.id, z.id)) return ExactPoly();
    int lx = g_->elems_[x.id].len, lz = g_->elems_[z.id].len;
    Coeffs s;
    for (int w : interval_ids(x.id, z.id)) {
        int lw = g_->elems_[w].len;
        axpy(s, R(w, z.id), ((lz - lw) % 2) ? -1 : 1, lw - lx);
    }
    return coeffs_to_poly(s);
}

ThetaResult theta_member(const std::string& node, const std::string& diagram, int length_bound) {
    auto g = CoxeterGroup::diagram(diagram);
    KLTable t(g);
    CoxElem s = g->gen(g->label_index(node));
    ThetaResult res;
    res.bound = length_bound;
    for (CoxElem w : g->elements_up_to(length_bound)) {
        if (!g->bruhat_leq(s, w)) continue;
        ++res.searched;
        ExactPoly q = t.q_poly_via_r(s, w);
        if (q != ExactPoly(1)) {
            res.member = true;
            res.witness = g->str(w);
            res.q = q;
            res.routes_agree = (t.q_poly(s, w) == q);
            return res;
        }
    }
    return res;
}

}  // namespace vacdet
