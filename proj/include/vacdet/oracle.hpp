#pragma once

#include "vacdet/poly.hpp"
#include "vacdet/roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vacdet {

struct Term {
    int g;
    Rational c;
};
using LieElt = std::vector<Term>;

// Finite slice of a graded Lie superalgebra given by structure constants.
// Brackets whose value would leave the slice are simply absent.
class StructuredAlgebra {
public:
    struct Gen {
        std::string name;
        Coords weight;   // root of the element; lowering elements have weight <= 0
        int parity = 0;
        bool cartan = false;
    };

    int add_gen(const std::string& name, Coords weight, int parity, bool cartan = false);
    // sets [a,b] and the super-antisymmetric partner [b,a]
    void set_bracket(int a, int b, LieElt v);
    void set_sigma(int a, int b, const Rational& c);   // sigma(a) = c * b

    int size() const { return static_cast<int>(gens_.size()); }
    const Gen& gen(int i) const { return gens_[i]; }
    int find(const std::string& name) const;           // -1 if absent
    // nullptr when [a,b] lies outside the slice
    const LieElt* bracket(int a, int b) const;
    const Term& sigma(int a) const { return sigma_[a]; }

    // super-antisymmetry, super-Jacobi, weight additivity and the sigma rules,
    // on every triple/pair whose brackets are all defined; throws std::logic_error
    void check() const;

private:
    std::vector<Gen> gens_;
    std::vector<std::vector<std::optional<LieElt>>> br_;
    std::vector<Term> sigma_;
    std::map<std::string, int> by_name_;
};

// Normal ordering in the enveloping algebra: words sorted as n_- . Cartan . n_+
// (lowering by decreasing height first, then weight-zero, then raising).
using UWord = std::vector<int>;
std::map<UWord, Rational> normal_order(const StructuredAlgebra& A, const UWord& word);
std::string uword_str(const StructuredAlgebra& A, const std::map<UWord, Rational>& v);

// finite (super)algebra plus invariant form, used to build loop algebras
struct FiniteAlgebra {
    StructuredAlgebra alg;
    std::vector<std::vector<Rational>> B;   // invariant form on the basis
    Coords theta;                           // highest even root, simple-root coordinates
    std::string catalog_id;                 // matching RootSystem id
};

FiniteAlgebra finite_sl(int n);     // sl(n), trace form, transpose as sigma
FiniteAlgebra finite_osp12();       // osp(1|2), odd roots of norm 2

StructuredAlgebra virasoro_algebra(int N);      // L_{-N..N}, C
StructuredAlgebra ns_algebra(int twoN);         // L_{j/2}, |j| <= twoN, C
StructuredAlgebra loop_algebra(const FiniteAlgebra& f, int depth);   // x t^m, |m|<=depth, K

// Induced module with a PBW basis over the chosen lowering generators.
// Every other generator acts on the highest-weight vector by a scalar.
class PBWModule {
public:
    using Mono = std::vector<int>;   // positions in lowering(), nondecreasing
    using Vec = std::map<Mono, ExactPoly>;

    PBWModule(StructuredAlgebra alg, std::vector<int> lowering,
              std::map<int, ExactPoly> values, std::string label);

    const StructuredAlgebra& algebra() const { return alg_; }
    const std::vector<int>& lowering() const { return low_; }
    const std::string& label() const { return label_; }
    int rank() const { return static_cast<int>(alg_.gen(0).weight.size()); }

    Vec act(int g, const Mono& m);
    Vec act(int g, const Vec& v);
    // product of generators applied to the highest-weight vector
    Vec apply_word(const std::vector<int>& word);

    Coords grade(const Mono& m) const;
    std::vector<Mono> basis(const Coords& nu) const;
    std::string mono_str(const Mono& m) const;
    std::string vec_str(const Vec& v) const;

    std::vector<std::vector<ExactPoly>> gram(const Coords& nu);
    ExactPoly det(const Coords& nu);

    // generators with weight >= 0, weight != 0
    std::vector<int> raising() const;
    // kernel of all raising generators at grade nu after substituting values
    std::vector<Vec> singular_vectors(const Coords& nu, const std::map<std::string, Rational>& at);
    bool is_singular(const Vec& v, const std::map<std::string, Rational>& at);

private:
    StructuredAlgebra alg_;
    std::vector<int> low_;
    std::vector<int> pos_;   // generator -> position in lowering, or -1
    std::vector<ExactPoly> value_;
    std::string label_;
    std::map<std::pair<int, Mono>, Vec> memo_;
};

void vec_add(PBWModule::Vec& acc, const PBWModule::Vec& v, const ExactPoly& c);

// Convenience modules.  Virasoro/NS grades are L_0 eigenvalues (doubled for NS).
PBWModule virasoro_vacuum(int N);
PBWModule virasoro_verma(int N);
PBWModule ns_vacuum(int twoN);
PBWModule ns_verma(int twoN);
// finite Verma / generalized Verma; free symbols "l1", "l2" for lambda(h_i),
// with lambda(h_i) = 0 for i in I
PBWModule finite_verma(const FiniteAlgebra& f, const std::vector<int>& I);
// vacuum module over the loop algebra, grades in affine coordinates (alpha_0 first)
PBWModule affine_vacuum(const FiniteAlgebra& f, int depth);

struct ModuleSpec {
    enum Kind { Verma, GeneralizedVerma, Vacuum };
    std::string algebra;   // "Vir", "NS", "sl2", "sl3", "osp(1|2)", "sl2^", "osp(1|2)^"
    Kind kind = Vacuum;
    std::vector<int> I;
    int truncation = 4;    // level (doubled for NS), height, or delta-depth
};
PBWModule make_module(const ModuleSpec& s);

// all-grade drivers
std::vector<std::vector<ExactPoly>> gram_matrix(const ModuleSpec& s, const Coords& nu);
ExactPoly brute_det(const ModuleSpec& s, const Coords& nu);

// Lexicographic order on vacuum monomials: compare ascending part lists.
struct MonomialReport {
    std::vector<int> parts;   // doubled parts for NS, ascending
    std::string monomial;
    bool matches = false;     // predicted shape
    int m = 0;                // exponent of L_{-2}
};
// kind: "Vir" or "NS".  Throws std::invalid_argument if v is not singular at `at`.
MonomialReport verify_minimal_monomial(PBWModule& mod, const PBWModule::Vec& v,
                                       const std::map<std::string, Rational>& at,
                                       const std::string& kind);
// (L_{-2}^k + a)|0> with a in the right ideal of L_{-i}, i > 2; for NS even
// case pass L_{-1/2} v.  Throws std::invalid_argument on non-integer grade.
bool c2_singular_form(const PBWModule& mod, const PBWModule::Vec& v, const std::string& kind);

// nullspace over Q (columns), rows given densely
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int ncols);

}  // namespace vacdet
