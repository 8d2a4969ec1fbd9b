#include "vacdet/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace vacdet {

namespace {

LieElt normalized(LieElt v) {
    std::map<int, Rational> acc;
    for (const auto& t : v) acc[t.g] += t.c;
    LieElt out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.push_back({g, c});
    return out;
}

LieElt scaled(const LieElt& v, const Rational& k) {
    LieElt out;
    if (k.is_zero()) return out;
    for (const auto& t : v) out.push_back({t.g, t.c * k});
    return out;
}

std::string half_str(int j) {
    if (j % 2 == 0) return std::to_string(j / 2);
    return std::to_string(j) + "/2";
}

bool is_zero_coords(const Coords& c) {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

}  // namespace

// ---------------------------------------------------------------- algebra

int StructuredAlgebra::add_gen(const std::string& name, Coords weight, int parity, bool cartan) {
    if (by_name_.count(name)) throw std::logic_error("duplicate generator " + name);
    int i = size();
    gens_.push_back({name, std::move(weight), parity, cartan});
    by_name_[name] = i;
    for (auto& row : br_) row.emplace_back();
    br_.emplace_back(gens_.size());
    sigma_.push_back({i, Rational(1)});
    return i;
}

int StructuredAlgebra::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

void StructuredAlgebra::set_bracket(int a, int b, LieElt v) {
    v = normalized(std::move(v));
    int s = (gens_[a].parity && gens_[b].parity) ? 1 : -1;   // [b,a] = s [a,b]
    if (a == b && s == -1 && !v.empty())
        throw std::logic_error("nonzero self-bracket of even element " + gens_[a].name);
    br_[a][b] = v;
    br_[b][a] = scaled(v, Rational(s));
}

void StructuredAlgebra::set_sigma(int a, int b, const Rational& c) { sigma_[a] = {b, c}; }

const LieElt* StructuredAlgebra::bracket(int a, int b) const {
    const auto& o = br_[a][b];
    return o ? &*o : nullptr;
}

namespace {

// [x, y] for combinations; false if some bracket is missing
bool bracket_elt(const StructuredAlgebra& A, const LieElt& x, const LieElt& y, LieElt* out) {
    LieElt acc;
    for (const auto& s : x)
        for (const auto& t : y) {
            const LieElt* b = A.bracket(s.g, t.g);
            if (!b) return false;
            for (const auto& u : *b) acc.push_back({u.g, u.c * s.c * t.c});
        }
    *out = normalized(acc);
    return true;
}

bool same_elt(const LieElt& a, const LieElt& b) {
    LieElt d = a;
    for (const auto& t : b) d.push_back({t.g, -t.c});
    return normalized(d).empty();
}

}  // namespace

void StructuredAlgebra::check() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const LieElt* v = bracket(a, b);
            if (!v) continue;
            int s = (gens_[a].parity && gens_[b].parity) ? 1 : -1;
            const LieElt* w = bracket(b, a);
            if (!w || !same_elt(*w, scaled(*v, Rational(s))))
                throw std::logic_error("antisymmetry fails at " + gens_[a].name + "," + gens_[b].name);
            Coords wt = add(gens_[a].weight, gens_[b].weight);
            int par = (gens_[a].parity + gens_[b].parity) % 2;
            for (const auto& t : *v)
                if (gens_[t.g].weight != wt || gens_[t.g].parity != par)
                    throw std::logic_error("grading fails at " + gens_[a].name + "," + gens_[b].name);
        }
    // super-Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const LieElt *bc = bracket(b, c), *ab = bracket(a, b), *ac = bracket(a, c);
                if (!bc || !ab || !ac) continue;
                LieElt l, r1, r2;
                if (!bracket_elt(*this, {{a, Rational(1)}}, *bc, &l)) continue;
                if (!bracket_elt(*this, *ab, {{c, Rational(1)}}, &r1)) continue;
                if (!bracket_elt(*this, {{b, Rational(1)}}, *ac, &r2)) continue;
                int s = (gens_[a].parity && gens_[b].parity) ? -1 : 1;
                LieElt r = r1;
                for (const auto& t : r2) r.push_back({t.g, t.c * s});
                if (!same_elt(l, r))
                    throw std::logic_error("Jacobi fails at " + gens_[a].name + "," + gens_[b].name +
                                           "," + gens_[c].name);
            }
    for (int a = 0; a < n; ++a) {
        const Term& t = sigma_[a];
        const Term& u = sigma_[t.g];
        if (u.g != a || !(t.c * u.c == Rational(1)))
            throw std::logic_error("sigma is not an involution at " + gens_[a].name);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const LieElt* v = bracket(a, b);
            const LieElt* w = bracket(sigma_[b].g, sigma_[a].g);
            if (!v || !w) continue;
            LieElt lhs;
            for (const auto& t : *v) lhs.push_back({sigma_[t.g].g, t.c * sigma_[t.g].c});
            if (!same_elt(lhs, scaled(*w, sigma_[a].c * sigma_[b].c)))
                throw std::logic_error("sigma is not an anti-homomorphism at " + gens_[a].name + "," +
                                       gens_[b].name);
        }
}

namespace {

std::tuple<int, int, int> uorder_key(const StructuredAlgebra& A, int g) {
    const auto& w = A.gen(g).weight;
    int h = height(w);
    if (is_zero_coords(w)) return {1, 0, g};
    if (nonneg(w)) return {2, h, g};
    return {0, h, g};   // most negative height first
}

}  // namespace

std::map<UWord, Rational> normal_order(const StructuredAlgebra& A, const UWord& word) {
    std::map<UWord, Rational> done;
    std::vector<std::pair<UWord, Rational>> todo{{word, Rational(1)}};
    size_t steps = 0;
    while (!todo.empty()) {
        if (++steps > 2000000) throw std::out_of_range("normal ordering did not terminate");
        auto [w, c] = todo.back();
        todo.pop_back();
        size_t i = 0;
        for (; i + 1 < w.size(); ++i) {
            auto ka = uorder_key(A, w[i]), kb = uorder_key(A, w[i + 1]);
            if (ka > kb || (w[i] == w[i + 1] && A.gen(w[i]).parity == 1)) break;
        }
        if (i + 1 >= w.size()) {
            done[w] += c;
            continue;
        }
        const int a = w[i], b = w[i + 1];
        const LieElt* br = A.bracket(a, b);
        if (!br) throw std::out_of_range("truncation exceeded");
        UWord head(w.begin(), w.begin() + i), tail(w.begin() + i + 2, w.end());
        const bool square = a == b;   // odd square: a a = [a,a]/2
        for (const auto& t : *br) {
            UWord nw = head;
            nw.push_back(t.g);
            nw.insert(nw.end(), tail.begin(), tail.end());
            todo.push_back({nw, c * t.c * (square ? Rational(1, 2) : Rational(1))});
        }
        if (!square) {
            UWord sw = w;
            std::swap(sw[i], sw[i + 1]);
            int s = (A.gen(a).parity && A.gen(b).parity) ? -1 : 1;
            todo.push_back({sw, c * s});
        }
    }
    for (auto it = done.begin(); it != done.end();)
        it = it->second.is_zero() ? done.erase(it) : std::next(it);
    return done;
}

std::string uword_str(const StructuredAlgebra& A, const std::map<UWord, Rational>& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int g : w) os << " " << A.gen(g).name;
    }
    return os.str();
}

// ---------------------------------------------------------------- builders

StructuredAlgebra virasoro_algebra(int N) {
    StructuredAlgebra A;
    for (int n = -N; n <= N; ++n) A.add_gen("L_{" + std::to_string(n) + "}", {n}, 0, n == 0);
    int C = A.add_gen("C", {0}, 0, true);
    auto L = [N](int n) { return n + N; };
    for (int m = -N; m <= N; ++m) {
        A.set_bracket(L(m), C, {});
        for (int n = m; n <= N; ++n) {
            if (std::abs(m + n) > N) continue;
            LieElt v{{L(m + n), Rational(m - n)}};
            if (m + n == 0) v.push_back({C, Rational(m * m * m - m, 12)});
            A.set_bracket(L(m), L(n), v);
        }
        A.set_sigma(L(m), L(-m), Rational(1));
    }
    A.set_bracket(C, C, {});
    return A;
}

StructuredAlgebra ns_algebra(int twoN) {
    StructuredAlgebra A;
    for (int j = -twoN; j <= twoN; ++j)
        A.add_gen("L_{" + half_str(j) + "}", {j}, std::abs(j) % 2, j == 0);
    int C = A.add_gen("C", {0}, 0, true);
    auto L = [twoN](int j) { return j + twoN; };
    for (int a = -twoN; a <= twoN; ++a) {
        A.set_bracket(L(a), C, {});
        for (int b = a; b <= twoN; ++b) {
            if (std::abs(a + b) > twoN) continue;
            bool oa = std::abs(a) % 2, ob = std::abs(b) % 2;
            if (!oa && !ob) {
                long m = a / 2, n = b / 2;
                LieElt v{{L(a + b), Rational(m - n)}};
                if (a + b == 0) v.push_back({C, Rational(m * m * m - m, 12)});
                A.set_bracket(L(a), L(b), v);
            } else if (oa && ob) {
                LieElt v{{L(a + b), Rational(2)}};
                if (a + b == 0) v.push_back({C, Rational(long(a) * a - 1, 12)});
                A.set_bracket(L(a), L(b), v);
            } else {
                // [L_m, G_r] = (m/2 - r) G_{m+r}, doubled indices
                int e = oa ? b : a, o = oa ? a : b;
                A.set_bracket(L(e), L(o), {{L(a + b), Rational(e - 2 * o, 4)}});
            }
        }
        A.set_sigma(L(a), L(-a), Rational(1));
    }
    A.set_bracket(C, C, {});
    return A;
}

FiniteAlgebra finite_sl(int n) {
    using Mat = std::vector<std::vector<Rational>>;
    FiniteAlgebra F;
    F.catalog_id = "sl" + std::to_string(n);
    std::vector<Mat> mats;
    std::map<std::pair<int, int>, int> Eidx;
    auto zero = [n]() { return Mat(n, std::vector<Rational>(n)); };
    // positive roots, Cartan, negative roots
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Coords w(n - 1, 0);
            for (int k = i; k < j; ++k) w[k] = 1;
            Eidx[{i, j}] = F.alg.add_gen("E" + std::to_string(i + 1) + std::to_string(j + 1), w, 0);
            Mat m = zero();
            m[i][j] = 1;
            mats.push_back(m);
        }
    std::vector<int> H;
    for (int i = 0; i + 1 < n; ++i) {
        H.push_back(F.alg.add_gen("H" + std::to_string(i + 1), Coords(n - 1, 0), 0, true));
        Mat m = zero();
        m[i][i] = 1;
        m[i + 1][i + 1] = -1;
        mats.push_back(m);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Coords w(n - 1, 0);
            for (int k = i; k < j; ++k) w[k] = -1;
            Eidx[{j, i}] = F.alg.add_gen("E" + std::to_string(j + 1) + std::to_string(i + 1), w, 0);
            Mat m = zero();
            m[j][i] = 1;
            mats.push_back(m);
        }
    const int d = F.alg.size();
    auto mul = [n](const Mat& a, const Mat& b) {
        Mat c(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (!a[i][k].is_zero())
                    for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    auto decompose = [&](const Mat& m) {
        LieElt v;
        Rational partial(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !m[i][j].is_zero()) v.push_back({Eidx[{i, j}], m[i][j]});
        for (int i = 0; i + 1 < n; ++i) {
            partial += m[i][i];
            if (!partial.is_zero()) v.push_back({H[i], partial});
        }
        return v;
    };
    F.B.assign(d, std::vector<Rational>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat ab = mul(mats[a], mats[b]), ba = mul(mats[b], mats[a]);
            Mat c = zero();
            Rational tr(0);
            for (int i = 0; i < n; ++i) {
                tr += ab[i][i];
                for (int j = 0; j < n; ++j) c[i][j] = ab[i][j] - ba[i][j];
            }
            F.B[a][b] = tr;
            if (a <= b) F.alg.set_bracket(a, b, decompose(c));
        }
    for (auto& [ij, g] : Eidx) F.alg.set_sigma(g, Eidx[{ij.second, ij.first}], Rational(1));
    F.theta = Coords(n - 1, 1);
    return F;
}

FiniteAlgebra finite_osp12() {
    FiniteAlgebra F;
    F.catalog_id = "osp(1|2)";
    auto& A = F.alg;
    int e = A.add_gen("e", {2}, 0), x = A.add_gen("x", {1}, 1);
    int h = A.add_gen("h", {0}, 0, true);
    int y = A.add_gen("y", {-1}, 1), f = A.add_gen("f", {-2}, 0);
    auto R = [](long v) { return Rational(v); };
    A.set_bracket(h, e, {{e, R(2)}});
    A.set_bracket(h, f, {{f, R(-2)}});
    A.set_bracket(e, f, {{h, R(1)}});
    A.set_bracket(h, x, {{x, R(1)}});
    A.set_bracket(h, y, {{y, R(-1)}});
    A.set_bracket(e, x, {});
    A.set_bracket(e, y, {{x, R(-1)}});
    A.set_bracket(f, x, {{y, R(-1)}});
    A.set_bracket(f, y, {});
    A.set_bracket(x, x, {{e, R(2)}});
    A.set_bracket(y, y, {{f, R(-2)}});
    A.set_bracket(x, y, {{h, R(1)}});
    A.set_bracket(e, e, {});
    A.set_bracket(f, f, {});
    A.set_bracket(h, h, {});
    A.set_sigma(x, y, R(1));
    A.set_sigma(y, x, R(1));
    A.set_sigma(e, f, R(-1));
    A.set_sigma(f, e, R(-1));
    // B(h,h) = 1/2 makes the odd root norm 2
    F.B.assign(5, std::vector<Rational>(5));
    F.B[h][h] = Rational(1, 2);
    F.B[e][f] = F.B[f][e] = Rational(1, 4);
    F.B[x][y] = Rational(1, 2);
    F.B[y][x] = Rational(-1, 2);
    F.theta = {2};
    return F;
}

StructuredAlgebra loop_algebra(const FiniteAlgebra& F, int D) {
    const auto& f = F.alg;
    const int d = f.size();
    StructuredAlgebra A;
    auto idx = [d, D](int m, int i) { return (m + D) * d + i; };
    for (int m = -D; m <= D; ++m)
        for (int i = 0; i < d; ++i) {
            Coords w{m};
            for (size_t j = 0; j < F.theta.size(); ++j) w.push_back(m * F.theta[j] + f.gen(i).weight[j]);
            A.add_gen(f.gen(i).name + "(" + std::to_string(m) + ")", w, f.gen(i).parity,
                      m == 0 && f.gen(i).cartan);
        }
    int K = A.add_gen("K", Coords(F.theta.size() + 1, 0), 0, true);
    for (int a = -D; a <= D; ++a)
        for (int i = 0; i < d; ++i) {
            A.set_bracket(idx(a, i), K, {});
            const Term& s = f.sigma(i);
            A.set_sigma(idx(a, i), idx(-a, s.g), s.c);
            for (int b = -D; b <= D; ++b) {
                if (std::abs(a + b) > D) continue;
                for (int j = 0; j < d; ++j) {
                    if (idx(b, j) < idx(a, i)) continue;
                    const LieElt* fb = f.bracket(i, j);
                    if (!fb) throw std::logic_error("finite bracket table incomplete");
                    LieElt v;
                    for (const auto& t : *fb) v.push_back({idx(a + b, t.g), t.c});
                    if (a + b == 0 && !F.B[i][j].is_zero()) v.push_back({K, Rational(a) * F.B[i][j]});
                    A.set_bracket(idx(a, i), idx(b, j), v);
                }
            }
        }
    A.set_bracket(K, K, {});
    return A;
}

// ---------------------------------------------------------------- module

void vec_add(PBWModule::Vec& acc, const PBWModule::Vec& v, const ExactPoly& c) {
    if (c.is_zero()) return;
    for (const auto& [m, p] : v) {
        auto it = acc.find(m);
        if (it == acc.end()) {
            ExactPoly q = p * c;
            if (!q.is_zero()) acc.emplace(m, q);
        } else {
            it->second += p * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

PBWModule::PBWModule(StructuredAlgebra alg, std::vector<int> lowering, std::map<int, ExactPoly> values,
                     std::string label)
    : alg_(std::move(alg)), low_(std::move(lowering)), label_(std::move(label)) {
    pos_.assign(alg_.size(), -1);
    for (size_t i = 0; i < low_.size(); ++i) {
        const auto& w = alg_.gen(low_[i]).weight;
        if (is_zero_coords(w) || std::any_of(w.begin(), w.end(), [](int x) { return x > 0; }))
            throw std::logic_error("lowering generator with non-negative grade: " + alg_.gen(low_[i]).name);
        pos_[low_[i]] = static_cast<int>(i);
    }
    value_.assign(alg_.size(), ExactPoly());
    for (auto& [g, v] : values) {
        if (pos_[g] >= 0) throw std::logic_error("lowering generator given a value");
        if (!v.is_zero() && !is_zero_coords(alg_.gen(g).weight))
            throw std::logic_error("graded generator given a nonzero value");
        value_[g] = v;
    }
}

PBWModule::Vec PBWModule::act(int g, const Mono& m) {
    auto key = std::make_pair(g, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Vec res;
    const int p = pos_[g];
    if (m.empty()) {
        if (p >= 0)
            res[{p}] = ExactPoly(1);
        else if (!value_[g].is_zero())
            res[{}] = value_[g];
    } else {
        const int x1 = m[0];
        const bool odd = alg_.gen(g).parity == 1;
        if (p >= 0 && (p < x1 || (p == x1 && !odd))) {
            Mono mm{p};
            mm.insert(mm.end(), m.begin(), m.end());
            res[mm] = ExactPoly(1);
        } else {
            Mono rest(m.begin() + 1, m.end());
            const int gx = low_[x1];
            if (p == x1) {   // odd square: g g = [g,g]/2
                const LieElt* b = alg_.bracket(g, g);
                if (!b) throw std::out_of_range("truncation exceeded");
                for (const auto& t : *b) vec_add(res, act(t.g, rest), ExactPoly(t.c * Rational(1, 2)));
            } else {
                int s = (odd && alg_.gen(gx).parity == 1) ? -1 : 1;
                Vec inner = act(g, rest);
                vec_add(res, act(gx, inner), ExactPoly(s));
                const LieElt* b = alg_.bracket(g, gx);
                if (!b) throw std::out_of_range("truncation exceeded");
                for (const auto& t : *b) vec_add(res, act(t.g, rest), ExactPoly(t.c));
            }
        }
    }
    memo_.emplace(key, res);
    return res;
}

PBWModule::Vec PBWModule::act(int g, const Vec& v) {
    Vec res;
    for (const auto& [m, c] : v) vec_add(res, act(g, m), c);
    return res;
}

PBWModule::Vec PBWModule::apply_word(const std::vector<int>& word) {
    Vec v{{Mono{}, ExactPoly(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
    return v;
}

Coords PBWModule::grade(const Mono& m) const {
    Coords c(rank(), 0);
    for (int i : m) c = sub(c, alg_.gen(low_[i]).weight);
    return c;
}

std::vector<PBWModule::Mono> PBWModule::basis(const Coords& nu) const {
    std::vector<Mono> out;
    Mono cur;
    const int L = static_cast<int>(low_.size());
    std::function<void(int, const Coords&)> rec = [&](int i, const Coords& left) {
        if (i == L) {
            if (is_zero_coords(left)) out.push_back(cur);
            return;
        }
        rec(i + 1, left);
        const auto& gen = alg_.gen(low_[i]);
        Coords l = left;
        int pushed = 0;
        while (true) {
            l = add(l, gen.weight);   // subtract the grade
            if (!nonneg(l)) break;
            cur.push_back(i);
            ++pushed;
            rec(i + 1, l);
            if (gen.parity) break;
        }
        cur.resize(cur.size() - pushed);
    };
    if (!nonneg(nu)) return out;
    rec(0, nu);
    std::sort(out.begin(), out.end());
    return out;
}

std::string PBWModule::mono_str(const Mono& m) const {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < m.size();) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (i) os << ' ';
        os << alg_.gen(low_[m[i]]).name;
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::string PBWModule::vec_str(const Vec& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")" << mono_str(m);
    }
    return os.str();
}

std::vector<std::vector<ExactPoly>> PBWModule::gram(const Coords& nu) {
    auto B = basis(nu);
    const size_t n = B.size();
    std::vector<std::vector<ExactPoly>> G(n, std::vector<ExactPoly>(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            Vec v{{B[j], ExactPoly(1)}};
            for (int f : B[i]) {
                const Term& t = alg_.sigma(low_[f]);
                Vec w = act(t.g, v);
                v.clear();
                vec_add(v, w, ExactPoly(t.c));
                if (v.empty()) break;
            }
            auto it = v.find(Mono{});
            if (it != v.end()) G[i][j] = it->second;
        }
    return G;
}

ExactPoly PBWModule::det(const Coords& nu) { return poly_det(gram(nu)); }

std::vector<int> PBWModule::raising() const {
    std::vector<int> r;
    for (int g = 0; g < alg_.size(); ++g) {
        const auto& w = alg_.gen(g).weight;
        if (!is_zero_coords(w) && nonneg(w)) r.push_back(g);
    }
    return r;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int ncols) {
    std::vector<int> pivcol;
    size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Rational inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            Rational f = rows[q][c];
            for (int k = 0; k < ncols; ++k) rows[q][k] -= f * rows[r][k];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> out;
    std::vector<bool> is_piv(ncols, false);
    for (int c : pivcol) is_piv[c] = true;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Rational> v(ncols);
        v[fc] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -rows[i][fc];
        out.push_back(v);
    }
    return out;
}

std::vector<PBWModule::Vec> PBWModule::singular_vectors(const Coords& nu,
                                                        const std::map<std::string, Rational>& at) {
    std::vector<Vec> out;
    if (is_zero_coords(nu)) return out;
    auto B = basis(nu);
    if (B.empty()) return out;
    std::map<std::pair<int, Mono>, int> rowid;
    std::vector<std::map<int, Rational>> cols(B.size());
    for (int g : raising()) {
        if (!leq(alg_.gen(g).weight, nu)) continue;
        for (size_t j = 0; j < B.size(); ++j)
            for (const auto& [m, c] : act(g, B[j])) {
                Rational v = c.eval(at);
                if (v.is_zero()) continue;
                auto key = std::make_pair(g, m);
                auto it = rowid.find(key);
                int id = it == rowid.end() ? (rowid[key] = static_cast<int>(rowid.size())) : it->second;
                cols[j][id] = v;
            }
    }
    std::vector<std::vector<Rational>> rows(rowid.size(), std::vector<Rational>(B.size()));
    for (size_t j = 0; j < B.size(); ++j)
        for (auto& [i, v] : cols[j]) rows[i][j] = v;
    for (const auto& k : nullspace(rows, static_cast<int>(B.size()))) {
        Vec v;
        for (size_t j = 0; j < B.size(); ++j)
            if (!k[j].is_zero()) v[B[j]] = ExactPoly(k[j]);
        out.push_back(v);
    }
    return out;
}

bool PBWModule::is_singular(const Vec& v, const std::map<std::string, Rational>& at) {
    if (v.empty()) return false;
    Coords nu = grade(v.begin()->first);
    for (int g : raising()) {
        if (!leq(alg_.gen(g).weight, nu)) continue;
        for (const auto& [m, c] : act(g, v))
            if (!c.eval(at).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------- modules

PBWModule virasoro_vacuum(int N) {
    auto A = virasoro_algebra(std::max(N, 2));
    const int M = std::max(N, 2);
    std::vector<int> low;
    for (int n = M; n >= 2; --n) low.push_back(A.find("L_{-" + std::to_string(n) + "}"));
    return PBWModule(A, low, {{A.find("C"), ExactPoly::var("c")}}, "Vir vacuum");
}

PBWModule virasoro_verma(int N) {
    const int M = std::max(N, 1);
    auto A = virasoro_algebra(M);
    std::vector<int> low;
    for (int n = M; n >= 1; --n) low.push_back(A.find("L_{-" + std::to_string(n) + "}"));
    return PBWModule(A, low, {{A.find("C"), ExactPoly::var("c")}, {A.find("L_{0}"), ExactPoly::var("h")}},
                     "Vir Verma");
}

PBWModule ns_vacuum(int twoN) {
    const int M = std::max(twoN, 3);
    auto A = ns_algebra(M);
    std::vector<int> low;
    for (int j = M; j >= 3; --j) low.push_back(A.find("L_{-" + half_str(j) + "}"));
    return PBWModule(A, low, {{A.find("C"), ExactPoly::var("c")}}, "NS vacuum");
}

PBWModule ns_verma(int twoN) {
    const int M = std::max(twoN, 1);
    auto A = ns_algebra(M);
    std::vector<int> low;
    for (int j = M; j >= 1; --j) low.push_back(A.find("L_{-" + half_str(j) + "}"));
    return PBWModule(A, low, {{A.find("C"), ExactPoly::var("c")}, {A.find("L_{0}"), ExactPoly::var("h")}},
                     "NS Verma");
}

namespace {

std::vector<int> order_by_height(const StructuredAlgebra& A, std::vector<int> gens) {
    std::stable_sort(gens.begin(), gens.end(), [&](int a, int b) {
        return height(A.gen(a).weight) > height(A.gen(b).weight);   // weights are negative
    });
    return gens;
}

}  // namespace

PBWModule finite_verma(const FiniteAlgebra& F, const std::vector<int>& I) {
    const auto& A = F.alg;
    std::vector<int> low;
    for (int g = 0; g < A.size(); ++g) {
        const auto& w = A.gen(g).weight;
        if (is_zero_coords(w) || !nonneg(scale(w, -1))) continue;
        bool in_I = true;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0 && std::find(I.begin(), I.end(), static_cast<int>(i)) == I.end()) in_I = false;
        if (!in_I) low.push_back(g);
    }
    std::map<int, ExactPoly> vals;
    int ci = 0;
    for (int g = 0; g < A.size(); ++g) {
        if (!A.gen(g).cartan) continue;
        if (std::find(I.begin(), I.end(), ci) == I.end())
            vals[g] = ExactPoly::var("l" + std::to_string(ci + 1));
        ++ci;
    }
    if (ci > 2) throw std::invalid_argument("finite_verma supports Cartan rank <= 2");
    return PBWModule(A, order_by_height(A, low), vals, F.catalog_id + " Verma");
}

PBWModule affine_vacuum(const FiniteAlgebra& F, int depth) {
    auto A = loop_algebra(F, depth);
    std::vector<int> low;
    for (int g = 0; g < A.size(); ++g)
        if (A.gen(g).weight[0] < 0) low.push_back(g);
    return PBWModule(A, order_by_height(A, low), {{A.find("K"), ExactPoly::var("k")}},
                     F.catalog_id + "^ vacuum");
}

PBWModule make_module(const ModuleSpec& s) {
    const int t = s.truncation;
    if (s.algebra == "Vir" || s.algebra == "Virasoro")
        return s.kind == ModuleSpec::Vacuum ? virasoro_vacuum(t) : virasoro_verma(t);
    if (s.algebra == "NS")
        return s.kind == ModuleSpec::Vacuum ? ns_vacuum(t) : ns_verma(t);
    auto fin = [](const std::string& a) -> std::optional<FiniteAlgebra> {
        if (a == "sl2") return finite_sl(2);
        if (a == "sl3") return finite_sl(3);
        if (a == "osp(1|2)") return finite_osp12();
        return std::nullopt;
    };
    if (!s.algebra.empty() && s.algebra.back() == '^') {
        auto f = fin(s.algebra.substr(0, s.algebra.size() - 1));
        if (!f || s.kind != ModuleSpec::Vacuum) throw std::invalid_argument("unsupported module " + s.algebra);
        return affine_vacuum(*f, t);
    }
    auto f = fin(s.algebra);
    if (!f || s.kind == ModuleSpec::Vacuum) throw std::invalid_argument("unsupported module " + s.algebra);
    return finite_verma(*f, s.kind == ModuleSpec::Verma ? std::vector<int>{} : s.I);
}

std::vector<std::vector<ExactPoly>> gram_matrix(const ModuleSpec& s, const Coords& nu) {
    auto m = make_module(s);
    return m.gram(nu);
}

ExactPoly brute_det(const ModuleSpec& s, const Coords& nu) {
    auto m = make_module(s);
    return m.det(nu);
}

// ---------------------------------------------------------------- monomials

MonomialReport verify_minimal_monomial(PBWModule& mod, const PBWModule::Vec& v,
                                       const std::map<std::string, Rational>& at, const std::string& kind) {
    if (kind != "Vir" && kind != "NS") throw std::invalid_argument("kind must be Vir or NS");
    if (v.empty() || v.count(PBWModule::Mono{}) || !mod.is_singular(v, at))
        throw std::invalid_argument("vector is not a singular vector");
    const bool ns = kind == "NS";
    std::vector<int> best;
    PBWModule::Mono best_m;
    bool have = false;
    for (const auto& [m, c] : v) {
        if (c.eval(at).is_zero()) continue;
        std::vector<int> parts;
        for (int i : m) parts.push_back(-mod.algebra().gen(mod.lowering()[i]).weight[0]);
        std::sort(parts.begin(), parts.end());
        if (!have || parts < best) {
            best = parts;
            best_m = m;
            have = true;
        }
    }
    MonomialReport r;
    r.parts = best;
    r.monomial = mod.mono_str(best_m);
    const int two = ns ? 4 : 2;
    if (!ns) {
        r.matches = std::all_of(best.begin(), best.end(), [](int p) { return p == 2; });
        r.m = static_cast<int>(best.size());
    } else {
        // L_{-2}^m L_{-3/2}, or L_{-5/2} L_{-2}^m L_{-3/2}
        if (!best.empty() && best.front() == 3) {
            size_t i = 1;
            while (i < best.size() && best[i] == two) ++i;
            r.m = static_cast<int>(i - 1);
            r.matches = i == best.size() || (i + 1 == best.size() && best[i] == 5);
        }
    }
    return r;
}

bool c2_singular_form(const PBWModule& mod, const PBWModule::Vec& v, const std::string& kind) {
    if (kind != "Vir" && kind != "NS") throw std::invalid_argument("kind must be Vir or NS");
    if (v.empty()) return false;
    const int two = kind == "NS" ? 4 : 2;
    const int g = mod.grade(v.begin()->first)[0];
    if (kind == "NS" && g % 2) throw std::invalid_argument("non-integer grade");
    if (g % two) return false;
    bool lead = false;
    for (const auto& [m, c] : v) {
        if (c.is_zero()) continue;
        int maxpart = 0;
        for (int i : m) maxpart = std::max(maxpart, -mod.algebra().gen(mod.lowering()[i]).weight[0]);
        if (maxpart > two) continue;   // lies in the right ideal of L_{-i}, i > 2
        bool pure = static_cast<int>(m.size()) * two == g;
        if (!pure) return false;
        lead = true;
    }
    return lead;
}

}  // namespace vacdet
