#include "vacdet/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vacdet {

int height(const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); }

Coords add(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Coords sub(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Coords scale(const Coords& a, int k) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

bool nonneg(const Coords& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

bool leq(const Coords& a, const Coords& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string coords_str(const Coords& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

int64_t add_ck(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
    return r;
}

int64_t mul_ck(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
    return r;
}

int LatticeVector::height() const { return vacdet::height(c); }
bool LatticeVector::nonneg() const { return vacdet::nonneg(c); }

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    if (basis != o.basis) throw std::invalid_argument("basis mismatch: " + basis + " vs " + o.basis);
    return {basis, add(c, o.c)};
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    if (basis != o.basis) throw std::invalid_argument("basis mismatch: " + basis + " vs " + o.basis);
    return {basis, sub(c, o.c)};
}

LatticeVector LatticeVector::operator*(int k) const { return {basis, scale(c, k)}; }

FormalCharacter::FormalCharacter(std::string basis, int rank, int cutoff)
    : basis_(std::move(basis)), rank_(rank), cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("negative cutoff");
}

FormalCharacter FormalCharacter::one(std::string basis, int rank, int cutoff) {
    FormalCharacter f(std::move(basis), rank, cutoff);
    f.add(Coords(rank, 0), 1);
    return f;
}

FormalCharacter FormalCharacter::term(std::string basis, int rank, int cutoff, const Coords& nu,
                                      int64_t s) {
    FormalCharacter f(std::move(basis), rank, cutoff);
    f.add(nu, s);
    return f;
}

void FormalCharacter::set_box(const Coords& b) {
    if (static_cast<int>(b.size()) != rank_) throw std::invalid_argument("box rank mismatch");
    box_ = b;
    for (auto it = s_.begin(); it != s_.end();)
        it = in_range(it->first) ? std::next(it) : s_.erase(it);
}

bool FormalCharacter::in_range(const Coords& nu) const {
    if (vacdet::height(nu) > cutoff_) return false;
    if (!box_.empty() && !leq(nu, box_)) return false;
    return true;
}

int64_t FormalCharacter::coeff(const Coords& nu) const {
    if (static_cast<int>(nu.size()) != rank_) throw std::invalid_argument("rank mismatch");
    if (!in_range(nu)) throw std::out_of_range("coefficient beyond cutoff: " + coords_str(nu));
    auto it = s_.find(nu);
    return it == s_.end() ? 0 : it->second;
}

void FormalCharacter::add(const Coords& nu, int64_t v) {
    if (static_cast<int>(nu.size()) != rank_) throw std::invalid_argument("rank mismatch");
    if (!in_range(nu) || v == 0) return;
    auto& x = s_[nu];
    x = add_ck(x, v);
    if (x == 0) s_.erase(nu);
}

FormalCharacter FormalCharacter::operator-() const {
    FormalCharacter r = *this;
    for (auto& [k, v] : r.s_) v = -v;
    return r;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch");
    if (o.cutoff_ < cutoff_) cutoff_ = o.cutoff_;
    for (auto it = s_.begin(); it != s_.end();)
        it = in_range(it->first) ? std::next(it) : s_.erase(it);
    for (const auto& [k, v] : o.s_) add(k, v);
    return *this;
}

bool FormalCharacter::operator==(const FormalCharacter& o) const {
    if (basis_ != o.basis_) return false;
    int h = std::min(cutoff_, o.cutoff_);
    auto visible = [h](const std::map<Coords, int64_t>& m) {
        std::map<Coords, int64_t> r;
        for (const auto& [k, v] : m)
            if (vacdet::height(k) <= h) r[k] = v;
        return r;
    };
    return visible(s_) == visible(o.s_);
}

std::string FormalCharacter::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : s_) {
        os << (first ? "" : " + ") << v << "*e^-" << coords_str(k);
        first = false;
    }
    if (first) os << "0";
    os << "  [cutoff " << cutoff_ << "]";
    return os.str();
}

FormalCharacter series_multiply(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.basis() != b.basis() || a.rank() != b.rank()) throw std::invalid_argument("basis mismatch");
    FormalCharacter r(a.basis(), a.rank(), std::min(a.cutoff(), b.cutoff()));
    if (a.box()) r.set_box(*a.box());
    if (b.box()) {
        Coords bx = *b.box();
        if (r.box())
            for (size_t i = 0; i < bx.size(); ++i) bx[i] = std::min(bx[i], (*r.box())[i]);
        r.set_box(bx);
    }
    for (const auto& [ka, va] : a.support()) {
        if (!nonneg(ka)) throw std::invalid_argument("series_multiply needs support in Q^+");
        for (const auto& [kb, vb] : b.support()) {
            Coords k = add(ka, kb);
            if (r.in_range(k)) r.add(k, mul_ck(va, vb));
        }
    }
    return r;
}

std::vector<Coords> enumerate_cone(int rank, int h, const Coords* box) {
    std::vector<Coords> out;
    Coords cur(rank, 0);
    for (int total = 0; total <= h; ++total) {
        // all compositions of `total` into `rank` nonnegative parts
        std::vector<Coords> level;
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == rank - 1) {
                cur[i] = left;
                if (!box || cur[i] <= (*box)[i]) level.push_back(cur);
                return;
            }
            int lim = box ? std::min(left, (*box)[i]) : left;
            for (int x = 0; x <= lim; ++x) {
                cur[i] = x;
                self(self, i + 1, left - x);
            }
        };
        if (rank == 0) {
            if (total == 0) out.push_back({});
            continue;
        }
        rec(rec, 0, total);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

FormalCharacter series_invert(const FormalCharacter& a) {
    Coords zero(a.rank(), 0);
    int64_t c0 = a.coeff(zero);
    if (c0 != 1 && c0 != -1) throw std::domain_error("series_invert: constant term must be +-1");
    for (const auto& [k, v] : a.support())
        if (!nonneg(k)) throw std::invalid_argument("series_invert needs support in Q^+");
    FormalCharacter r(a.basis(), a.rank(), a.cutoff());
    if (a.box()) r.set_box(*a.box());
    std::map<Coords, int64_t> b;
    for (const Coords& mu : enumerate_cone(a.rank(), a.cutoff(), a.box())) {
        int64_t s = (mu == zero) ? 1 : 0;
        for (const auto& [k, v] : a.support()) {
            if (k == zero || !leq(k, mu)) continue;
            auto it = b.find(sub(mu, k));
            if (it != b.end()) s = add_ck(s, -mul_ck(v, it->second));
        }
        s = mul_ck(s, c0);  // c0 = +-1 is its own inverse
        if (s) {
            b[mu] = s;
            r.add(mu, s);
        }
    }
    return r;
}

DenseSeries::DenseSeries(Coords box, int hcut) : box_(std::move(box)), hcut_(hcut) {
    size_t n = box_.size();
    stride_.assign(n, 1);
    int64_t total = 1;
    for (size_t i = n; i-- > 0;) {
        if (box_[i] < 0) throw std::invalid_argument("negative box");
        stride_[i] = total;
        total *= (box_[i] + 1);
        if (total > 50'000'000) throw std::length_error("dense series box too large");
    }
    v_.assign(total, 0);
    ht_.assign(total, 0);
    for (int64_t idx = 0; idx < total; ++idx) {
        int64_t r = idx;
        int h = 0;
        for (size_t i = 0; i < n; ++i) {
            h += static_cast<int>(r / stride_[i]);
            r %= stride_[i];
        }
        ht_[idx] = h;
    }
    v_[0] = 1;
}

size_t DenseSeries::index(const Coords& nu) const {
    size_t idx = 0;
    for (size_t i = 0; i < nu.size(); ++i) idx += nu[i] * stride_[i];
    return idx;
}

int64_t DenseSeries::at(const Coords& nu) const {
    if (!nonneg(nu)) return 0;
    if (!leq(nu, box_)) throw std::out_of_range("dense series: outside box " + coords_str(nu));
    if (height(nu) > hcut_) throw std::out_of_range("dense series: beyond height cutoff");
    return v_[index(nu)];
}

void DenseSeries::mul_linear(const Coords& g, int64_t coef, bool ascending) {
    // v[mu] += coef * v[mu - g]
    if (!leq(g, box_)) return;
    int64_t off = index(g);
    const size_t n = box_.size();
    int64_t total = static_cast<int64_t>(v_.size());
    auto body = [&](int64_t idx) {
        if (ht_[idx] > hcut_) return;
        // check mu - g >= 0 componentwise
        int64_t r = idx;
        for (size_t i = 0; i < n; ++i) {
            int64_t ci = r / stride_[i];
            r %= stride_[i];
            if (ci < g[i]) return;
        }
        int64_t src = v_[idx - off];
        if (src) v_[idx] = add_ck(v_[idx], mul_ck(coef, src));
    };
    if (ascending)
        for (int64_t idx = 0; idx < total; ++idx) body(idx);
    else
        for (int64_t idx = total - 1; idx >= 0; --idx) body(idx);
}

void DenseSeries::mul_factor(const Coords& g, int s, int e) {
    if (g.size() != box_.size()) throw std::invalid_argument("rank mismatch");
    if (!nonneg(g) || height(g) == 0) throw std::invalid_argument("factor root must be positive");
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be +-1");
    for (int i = 0; i < e; ++i) mul_linear(g, -s, false);
    for (int i = 0; i < -e; ++i) mul_linear(g, s, true);
}

FormalCharacter DenseSeries::to_character(const std::string& basis) const {
    FormalCharacter f(basis, static_cast<int>(box_.size()), hcut_);
    f.set_box(box_);
    const size_t n = box_.size();
    for (size_t idx = 0; idx < v_.size(); ++idx) {
        if (!v_[idx] || ht_[idx] > hcut_) continue;
        Coords c(n);
        int64_t r = idx;
        for (size_t i = 0; i < n; ++i) {
            c[i] = static_cast<int>(r / stride_[i]);
            r %= stride_[i];
        }
        f.add(c, v_[idx]);
    }
    return f;
}

}  // namespace vacdet
