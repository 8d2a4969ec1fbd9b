#pragma once

#include "vacdet/poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vacdet {

class CoxeterGroup;

// Element handle.  Ids are only meaningful inside the group that issued them.
struct CoxElem {
    std::uint64_t group = 0;
    int id = 0;
    friend bool operator==(const CoxElem& a, const CoxElem& b) { return a.group == b.group && a.id == b.id; }
};

// Crystallographic Coxeter group acting on integral weight vectors.
// w is stored as w(rho) in fundamental-weight coordinates; s_i is a left
// descent of w iff the i-th coordinate is negative.  The normal form is the
// ShortLex-least reduced word.
class CoxeterGroup {
public:
    // cartan[i][j] = <alpha_i, alpha_j^vee>; labels name the generators
    CoxeterGroup(std::string name, std::vector<std::vector<int>> cartan, std::vector<std::string> labels);

    // "A3", "B2", "C3", "D4", "G2", "F4", "A1xA1", "affine-A1", "affine-A2",
    // "affine-C2", "affine-G2", ...  Finite nodes are s1..sn, the affine node s0.
    // C_n is numbered 1=2-3-...-n, D_n has node 2 attached to node 3.
    static std::shared_ptr<CoxeterGroup> diagram(const std::string& name);

    const std::string& name() const { return name_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    int label_index(const std::string& l) const;   // throws std::invalid_argument
    int coxeter_m(int i, int j) const;              // 0 means infinity
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    CoxElem identity() const { return {serial_, 0}; }
    CoxElem gen(int i);
    // words like "s0 s1 s2", "s0s1s2", "e"; need not be reduced
    CoxElem parse(const std::string& word);
    CoxElem lmul(int s, CoxElem w);
    CoxElem inverse(CoxElem w);

    int length(CoxElem w) const;
    bool left_descent(int s, CoxElem w) const;
    std::vector<int> word(CoxElem w) const;
    std::string str(CoxElem w) const;     // "e" or "s0s1s2"

    bool bruhat_leq(CoxElem x, CoxElem y);
    // elements below y, sorted by (length, id)
    const std::vector<int>& lower_ideal(CoxElem y);
    std::vector<CoxElem> interval(CoxElem x, CoxElem y);
    std::vector<CoxElem> elements_up_to(int len);

    std::size_t size() const { return elems_.size(); }

private:
    struct Node {
        std::vector<long> v;
        int len = 0;
        int first_desc = -1;     // smallest left descent, -1 for e
        std::vector<int> left;   // left[s], -1 unknown
    };
    std::string name_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::string> labels_;
    std::uint64_t serial_;
    std::vector<Node> elems_;
    std::map<std::vector<long>, int> index_;
    std::unordered_map<std::uint64_t, bool> leq_;
    std::unordered_map<int, std::vector<int>> ideal_;

    int intern(std::vector<long> v);
    int lmul_id(int s, int w);
    bool leq_id(int x, int y);
    void check(CoxElem w) const;
    friend class KLTable;
};

// Memoized R, P and inverse Q polynomials in the variable q for one group.
// Access is serialized by an internal mutex.
class KLTable {
public:
    explicit KLTable(std::shared_ptr<CoxeterGroup> g, std::size_t max_interval = 50000);

    CoxeterGroup& group() { return *g_; }

    ExactPoly r_poly(CoxElem x, CoxElem y);
    ExactPoly p_poly(CoxElem x, CoxElem y);
    // inversion of the P-matrix
    ExactPoly q_poly(CoxElem x, CoxElem z);
    // the R-based sum with the bar-invariant tail cut off
    ExactPoly q_poly_via_r(CoxElem x, CoxElem z);
    ExactPoly m_statistic(CoxElem x, CoxElem z);

    // internal coefficient vectors, index = power of q
    using Coeffs = std::vector<long long>;

private:
    std::shared_ptr<CoxeterGroup> g_;
    std::size_t max_interval_;
    std::mutex mu_;
    std::unordered_map<std::uint64_t, Coeffs> r_, p_, q_, qr_;

    const Coeffs& R(int x, int y);
    const Coeffs& P(int x, int y);
    const Coeffs& Q(int x, int z);
    const Coeffs& QR(int x, int z);
    std::vector<int> interval_ids(int x, int y);
};

ExactPoly coeffs_to_poly(const KLTable::Coeffs& c);

struct ThetaResult {
    bool member = false;
    int bound = 0;               // lengths searched
    std::string witness;         // shortest w (ShortLex-first) with Q_{s,w} != 1
    ExactPoly q;                 // that Q
    bool routes_agree = true;    // both Q routes on the witness
    std::size_t searched = 0;    // elements examined
};

// Is there w with l(w) <= length_bound and Q_{s_node, w} != 1?
ThetaResult theta_member(const std::string& node, const std::string& diagram, int length_bound);

}  // namespace vacdet
