#include "vacdet/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vacdet {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    if (out.size() > 2) throw std::invalid_argument("ExactPoly supports at most two variables");
    return out;
}

}  // namespace

ExactPoly::ExactPoly(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
}

ExactPoly ExactPoly::var(const std::string& name) {
    ExactPoly p;
    p.vars_ = {name};
    p.terms_[{1, 0}] = Rational(1);
    return p;
}

ExactPoly ExactPoly::linear(const std::string& name, const Rational& a, const Rational& b) {
    return var(name) * a + ExactPoly(b);
}

ExactPoly ExactPoly::monomial(const std::vector<std::string>& vars, Exp e, const Rational& c) {
    if (vars.size() > 2) throw std::invalid_argument("too many variables");
    ExactPoly p;
    p.vars_ = vars;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

int ExactPoly::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

void ExactPoly::clean() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

ExactPoly ExactPoly::with_vars(const std::vector<std::string>& vs) const {
    if (vs == vars_) return *this;
    ExactPoly out;
    out.vars_ = vs;
    for (const auto& [e, c] : terms_) {
        Exp ne{0, 0};
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = std::find(vs.begin(), vs.end(), vars_[i]);
            if (it == vs.end()) throw std::invalid_argument("variable dropped: " + vars_[i]);
            ne[it - vs.begin()] = e[i];
        }
        out.terms_[ne] += c;
    }
    out.clean();
    return out;
}

bool ExactPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Rational ExactPoly::constant_term() const { return coeff({0, 0}); }

Rational ExactPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ExactPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return e[0] + e[1];
}

int ExactPoly::degree_in(const std::string& name) const {
    int i = index_of(name);
    if (terms_.empty()) return -1;
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

ExactPoly::Exp ExactPoly::leading_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

Rational ExactPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    if (o.terms_.empty()) return *this;
    auto vs = merge_vars(vars_, o.vars_);
    if (vs != vars_) *this = with_vars(vs);
    if (o.vars_ == vs) {
        for (const auto& [e, c] : o.terms_) terms_[e] += c;
    } else {
        ExactPoly b = o.with_vars(vs);
        for (const auto& [e, c] : b.terms_) terms_[e] += c;
    }
    clean();
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) { return *this += -o; }

ExactPoly& ExactPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    auto vs = merge_vars(vars_, o.vars_);
    ExactPoly a = with_vars(vs), b = o.with_vars(vs);
    Terms out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out[{ea[0] + eb[0], ea[1] + eb[1]}] += ca * cb;
    vars_ = vs;
    terms_ = std::move(out);
    clean();
    return *this;
}

bool operator==(const ExactPoly& a, const ExactPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    auto vs = merge_vars(a.vars_, b.vars_);
    return a.with_vars(vs).terms_ == b.with_vars(vs).terms_;
}

ExactPoly ExactPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of polynomial");
    ExactPoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool ExactPoly::try_div(const ExactPoly& d, ExactPoly* q) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    auto vs = merge_vars(vars_, d.vars_);
    ExactPoly r = with_vars(vs), b = d.with_vars(vs);
    ExactPoly quo;
    quo.vars_ = vs;
    Exp lb = b.leading_exp();
    Rational cb = b.leading_coeff();
    while (!r.is_zero()) {
        Exp lr = r.leading_exp();
        if (lr[0] < lb[0] || lr[1] < lb[1]) return false;
        Exp m{lr[0] - lb[0], lr[1] - lb[1]};
        Rational c = r.leading_coeff() / cb;
        quo.terms_[m] += c;
        for (const auto& [e, v] : b.terms_) r.terms_[{e[0] + m[0], e[1] + m[1]}] -= v * c;
        r.clean();
    }
    quo.clean();
    if (q) *q = std::move(quo);
    return true;
}

ExactPoly ExactPoly::exact_div(const ExactPoly& b) const {
    ExactPoly q;
    if (!try_div(b, &q)) throw std::domain_error("inexact polynomial division: (" + str() + ")/(" + b.str() + ")");
    return q;
}

ExactPoly ExactPoly::subst(const std::string& name, const Rational& value) const {
    int i = index_of(name);
    if (i < 0) return *this;
    ExactPoly out;
    std::vector<std::string> vs;
    for (int j = 0; j < static_cast<int>(vars_.size()); ++j)
        if (j != i) vs.push_back(vars_[j]);
    out.vars_ = vs;
    for (const auto& [e, c] : terms_) {
        Exp ne{0, 0};
        if (vars_.size() == 2) ne[0] = e[1 - i];
        out.terms_[ne] += c * value.pow(e[i]);
    }
    out.clean();
    return out;
}

ExactPoly ExactPoly::subst(const std::string& name, const ExactPoly& value) const {
    int i = index_of(name);
    if (i < 0) return *this;
    ExactPoly out;
    for (const auto& [e, c] : terms_) {
        ExactPoly t(c);
        if (vars_.size() == 2) {
            int o = 1 - i;
            if (e[o]) t *= ExactPoly::var(vars_[o]).pow(e[o]);
        }
        t *= value.pow(e[i]);
        out += t;
    }
    return out;
}

Rational ExactPoly::eval(const std::map<std::string, Rational>& values) const {
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (!e[i]) continue;
            auto it = values.find(vars_[i]);
            if (it == values.end()) throw std::invalid_argument("no value for " + vars_[i]);
            t *= it->second.pow(e[i]);
        }
        s += t;
    }
    return s;
}

ExactPoly ExactPoly::bar(const std::string& name, int shift) const {
    int i = index_of(name);
    if (vars_.size() > 1) throw std::invalid_argument("bar expects a univariate polynomial");
    ExactPoly out;
    out.vars_ = {name};
    for (const auto& [e, c] : terms_) {
        int d = (i < 0 ? 0 : e[0]);
        int nd = shift - d;
        if (nd < 0) throw std::domain_error("bar: shift too small");
        out.terms_[{nd, 0}] += c;
    }
    out.clean();
    return out;
}

ExactPoly ExactPoly::truncate_degree(const std::string& name, int d) const {
    int i = index_of(name);
    ExactPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_)
        if ((i < 0 ? 0 : e[i]) <= d) out.terms_[e] = c;
    return out;
}

ExactPoly ExactPoly::leading_form() const {
    ExactPoly out;
    out.vars_ = vars_;
    int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (e[0] + e[1] == d) out.terms_[e] = c;
    return out;
}

ExactPoly ExactPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

std::string ExactPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        bool neg = a.sign() < 0;
        if (neg) a = -a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = (a == Rational(1)) && (e[0] + e[1] > 0);
        if (!unit) os << a.str();
        bool need_star = !unit;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactPoly& p) { return os << p.str(); }

ExactPoly poly_det(std::vector<std::vector<ExactPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det: matrix not square");
    if (n == 0) return ExactPoly(1);
    int sign = 1;
    ExactPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return ExactPoly(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                ExactPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = t.exact_div(prev);
            }
            m[i][k] = ExactPoly(0);
        }
        prev = m[k][k];
    }
    ExactPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

LinearFactorResult divide_linear_factors(const ExactPoly& p, const std::string& name,
                                         const std::vector<Rational>& roots) {
    for (const auto& v : p.vars())
        if (v != name && p.degree_in(v) > 0)
            throw std::invalid_argument("divide_linear_factors: not univariate in " + name);
    LinearFactorResult res;
    res.remainder = p;
    for (const auto& r : roots) {
        int e = 0;
        if (!res.remainder.is_zero()) {
            ExactPoly lin = ExactPoly::linear(name, Rational(1), -r);
            ExactPoly q;
            while (res.remainder.degree_in(name) > 0 && res.remainder.try_div(lin, &q)) {
                res.remainder = q;
                ++e;
            }
        }
        res.exponents.push_back(e);
    }
    return res;
}

}  // namespace vacdet
