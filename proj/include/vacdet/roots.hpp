#pragma once

#include "vacdet/poly.hpp"
#include "vacdet/rational.hpp"
#include "vacdet/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vacdet {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IMat = std::vector<std::vector<int>>;

Rational dot(const QVec& a, const QVec& b);
QVec qadd(const QVec& a, const QVec& b);
QVec qsub(const QVec& a, const QVec& b);
QVec qscale(const QVec& a, const Rational& k);
QVec matvec(const QMat& m, const QVec& v);
QMat matmul(const QMat& a, const QMat& b);
std::string qvec_str(const QVec& v);

struct ContragredientDatum {
    QMat A;                  // a_ij = 2(a_i|a_j)/(a_i|a_i), or (a_i|a_j) for isotropic a_i
    std::vector<int> parity;
    QVec d;                  // symmetrizing diagonal: D*A symmetric
    int cartan_dim;
    bool symmetric_check() const;
};

struct PosRoot {
    Coords c;        // simple-root coordinates
    QVec v;          // ambient coordinates
    int parity = 0;  // 0 even, 1 odd
    int mult = 1;
    Rational norm;   // (v|v)
};

class WeylElement {
public:
    std::vector<int> word;  // generator indices, leftmost first
    int length = 0;
    QMat act;               // ambient action
    IMat coord_act;         // action on simple-root coordinates
    Coords rho_shift;       // w(rho) - rho in simple-root coordinates
    int sign() const { return (length % 2) ? -1 : 1; }
};

class RootSystem {
public:
    std::string id;
    std::string family;     // "lie", "osp1", "defect1", "gl22", "super"
    int amb = 0;            // ambient dimension
    QMat gram;              // form on the ambient space
    std::vector<QVec> simple;
    std::vector<int> simple_parity;
    std::vector<PosRoot> pos;
    QVec rho;
    std::optional<QVec> theta;
    std::vector<int> S;                 // indices into `simple`
    std::vector<QVec> sharp_gens;       // reflections generating W^#
    Rational to_standard{1};            // standard form = to_standard * this form
    int defect = 0;
    bool is_super = false;
    int imag_mult = 0;                  // multiplicity of n*delta after affinization

    int rank() const { return static_cast<int>(simple.size()); }
    std::string basis() const { return id; }

    Rational bil(const QVec& a, const QVec& b) const;
    QVec vec(const Coords& c) const;                  // coordinates -> ambient
    std::optional<Coords> coords(const QVec& v) const;  // ambient -> integer coords if in lattice
    QVec coords_q(const QVec& v) const;               // ambient -> rational coords (in span)

    // pairing on simple-root coordinates
    Rational form(const Coords& a, const Coords& b) const;
    Rational rho_pair(const Coords& a) const;          // (rho|a)
    Rational hvee() const;                             // (rho|theta)+(theta|theta)/2
    Coords theta_coords() const;

    const std::vector<PosRoot>& positive() const { return pos; }
    int root_index(const Coords& c) const;             // index in pos, or -1
    bool is_root(const Coords& c) const;               // +-pos
    int parity_of_root(const Coords& c) const;

    // NS = nonnegative integer combinations of S, as coordinates
    bool in_NS(const Coords& c) const;

    RootSystem scaled(const Rational& g) const;         // form multiplied by g
    RootSystem standard() const { return scaled(to_standard); }

    ContragredientDatum datum() const;
    Rational casimir(const QVec& lambda) const;        // (lambda+2rho|lambda)
    // phi_xi(lambda) = (lambda+rho|xi) - (xi|xi)/2
    Rational phi(const Coords& xi, const QVec& lambda) const;

    // W^# (the full Weyl group for Lie algebras and osp(1|2n))
    std::vector<WeylElement> weyl_group(size_t max_size = 100000) const;
    QVec dot(const WeylElement& w, const QVec& lambda) const;
    Coords dot_coords(const WeylElement& w, const Coords& x) const;

    void validate() const;  // throws std::logic_error on inconsistent data

    void finalize();        // derive coords, rho (if empty), norms; internal

private:
    QMat bs_;       // Gram in simple-root coordinates
    QVec rho_s_;    // (rho|alpha_i)
    QMat pinv_;     // ambient -> coords left inverse (on span)
    std::vector<std::pair<Coords, int>> lookup_;  // sorted root coords -> parity (all roots)
};

// Catalog identifiers: A<n>, B<n>, C<n>, D<n>, G2, F4, sl2, sl3, ...,
// sl(1|n), osp(2|2n), osp(3|2n), osp(2n+1|2), osp(2n|2), F(4), G(3),
// D(2,1,a=p/q), gl(2|2), osp(1|2n), sl(m|n), osp(m|2n).
RootSystem catalog(const std::string& id);
std::vector<std::string> catalog_examples();

// Weight on the affine space: finite ambient part + Lambda_0 + delta.
struct Weight {
    QVec fin;
    Rational lambda0;
    Rational delta;
};

// Affinization; coordinates are over (alpha_0, alpha_1, ..., alpha_r),
// alpha_0 = delta - theta.  delta-depth of a vector = its alpha_0 coordinate.
class AffineSystem {
public:
    explicit AffineSystem(RootSystem fin);

    const RootSystem& fin() const { return fin_; }
    int rank() const { return fin_.rank() + 1; }
    std::string basis() const { return fin_.id + "^"; }
    Rational hvee() const { return hvee_; }

    Coords to_affine(int depth, const Coords& finite) const;
    int depth(const Coords& n) const { return n[0]; }
    Coords finite_part(const Coords& n) const;

    struct ARoot {
        Coords c;
        int depth;
        Coords fin;   // finite part
        int parity;
        int mult;
        bool imaginary;
    };
    // positive roots c with c <= box componentwise
    std::vector<ARoot> positive_roots_in_box(const Coords& box) const;
    // all real/imaginary positive roots with depth in [1, D], finite part any root or 0
    std::vector<ARoot> roots_of_depth(int u) const;

    Rational form(const Coords& a, const Coords& b) const;
    Rational rho_pair(const Coords& a) const;   // (rho_hat|a)
    Weight rho_hat() const;
    Rational bil(const Weight& a, const Weight& b) const;
    Rational casimir(const Weight& lambda) const;   // (lambda+2rho_hat|lambda)
    // phi_xi(k Lambda_0) as a polynomial in k
    ExactPoly phi(const Coords& xi, const std::string& var = "k") const;
    Weight weight_of(const Coords& n) const;

private:
    RootSystem fin_;
    Rational hvee_;
    Coords theta_;
};

}  // namespace vacdet
