#ifndef PSALG_PSEUDO_HPP
#define PSALG_PSEUDO_HPP

#include <string>
#include <tuple>
#include <vector>

#include "psalg/tensor.hpp"

namespace psalg {

// Pseudoalgebra structure on a free H-module with basis e_0, ..., e_{rank-1}:
// e_i * e_j = sum_k alpha[i][j][k] (x)_H e_k with alpha[i][j][k] in H (x) H.
// The H-bilinear extension to arbitrary module elements is pseudo_product().
struct ProductTable {
    LiePtr lie;
    int rank = 0;
    std::vector<T2> alpha;  // rank^3 entries, index (i*rank + j)*rank + k

    ProductTable() = default;
    ProductTable(LiePtr l, int r);
    const T2& entry(int i, int j, int k) const { return alpha[(static_cast<size_t>(i) * rank + j) * rank + k]; }
    T2& entry(int i, int j, int k) { return alpha[(static_cast<size_t>(i) * rank + j) * rank + k]; }
    bool operator==(const ProductTable& o) const;
};

// Element of the free module H^rank: sum_i coords[i] e_i.
struct ModuleElement {
    LiePtr lie;
    int rank = 0;
    std::vector<UEl> coords;

    ModuleElement() = default;
    ModuleElement(LiePtr l, int r);
    static ModuleElement generator(LiePtr l, int rank, int i);  // e_i
    bool is_zero() const;
};

// Canonical form of an element of (H (x) H) (x)_H M: every term is
// (d^(I) (x) 1) (x)_H d^(J) e_k. Key = (I, J, k).
struct PseudoEl2 {
    using Key = std::tuple<MultiIndex, MultiIndex, int>;
    LiePtr lie;
    int rank = 0;
    std::map<Key, Rat> terms;

    PseudoEl2() = default;
    PseudoEl2(LiePtr l, int r) : lie(std::move(l)), rank(r) {}
    bool is_zero() const { return terms.empty(); }
    void add_term(const MultiIndex& I, const MultiIndex& J, int k, const Rat& c);
    PseudoEl2 operator-(const PseudoEl2& o) const;
    bool operator==(const PseudoEl2& o) const;
};

// Canonical form at arity 3: (d^(I1) (x) d^(I2) (x) 1) (x)_H d^(J) e_k.
struct PseudoEl3 {
    using Key = std::tuple<MultiIndex, MultiIndex, MultiIndex, int>;
    LiePtr lie;
    int rank = 0;
    std::map<Key, Rat> terms;

    PseudoEl3() = default;
    PseudoEl3(LiePtr l, int r) : lie(std::move(l)), rank(r) {}
    bool is_zero() const { return terms.empty(); }
    void add_term(const MultiIndex& I1, const MultiIndex& I2, const MultiIndex& J, int k, const Rat& c);
    PseudoEl3 operator+(const PseudoEl3& o) const;
    PseudoEl3 operator-(const PseudoEl3& o) const;
    bool operator==(const PseudoEl3& o) const;
};

// Reduction to canonical form. Correctness rests on the cocommutative
// identity f (x) g = (f S(g_(1)) (x) 1) Delta(g_(2)) applied in the last
// H slot, which moves it through (x)_H into the module coefficient.
PseudoEl2 normalize2(const std::vector<std::pair<T2, ModuleElement>>& raw);
PseudoEl3 normalize3(const std::vector<std::pair<T3, ModuleElement>>& raw);

// x * y for arbitrary module elements, H-bilinearly from the table.
PseudoEl2 pseudo_product(const ModuleElement& x, const ModuleElement& y, const ProductTable& T);

enum class CompositionSide { Left, Right };

// (x*y)*z (Left) or x*(y*z) (Right), in canonical arity-3 form. Uses the
// composition rules
//   (beta (x)_H c) * z = sum (beta (x) 1)(Delta (x) id)(alpha_i) (x)_H c_i
//   x * (beta (x)_H c) = sum (1 (x) beta)(id (x) Delta)(alpha_i) (x)_H c_i
// where the inner product expands as sum alpha_i (x)_H c_i.
PseudoEl3 compose(const ModuleElement& x, const ModuleElement& y, const ModuleElement& z,
                  const ProductTable& T, CompositionSide side);

enum class Axiom { Assoc, LeftPreLie, RightPreLie };
std::string axiom_name(Axiom a);

// Defect of the axiom on a triple; the axiom holds on (x,y,z) iff this is 0.
//   Assoc:       A(x,y,z)
//   LeftPreLie:  A(x,y,z) - (12) A(y,x,z)
//   RightPreLie: A(x,y,z) - (23) A(x,z,y)
// with A = compose(Left) - compose(Right); permuted terms are re-normalized.
PseudoEl3 defect(const ModuleElement& x, const ModuleElement& y, const ModuleElement& z,
                 const ProductTable& T, Axiom axiom);

struct TripleFailure {
    int i, j, k;
    PseudoEl3 defect;
};

struct AxiomReport {
    Axiom axiom = Axiom::Assoc;
    bool pass = false;
    std::vector<TripleFailure> failures;  // empty iff pass
};

// Checks the axiom on all rank^3 generator triples. By H-bilinearity of both
// sides this is sufficient for the axiom on the whole module; tests spot-check
// that sufficiency on random non-generator triples.
AxiomReport check_axiom(const ProductTable& T, Axiom axiom);

}  // namespace psalg

#endif
