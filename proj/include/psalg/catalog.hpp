#ifndef PSALG_CATALOG_HPP
#define PSALG_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psalg/pseudo.hpp"

namespace psalg {

// Parameter bundle an entry template is instantiated with. Scalars are
// t, t1, t2, l, k, c; vectors are s, s1, s2 (coordinates in delta);
// elements are g, h (arbitrary H elements); choices select one member of a
// finite family (e.g. which of the listed alpha values a type allows).
struct Params {
    std::map<std::string, Rat> scalars;
    std::map<std::string, DeltaVector> vectors;
    std::map<std::string, UEl> elements;
    std::map<std::string, std::string> choices;
};

// One pure-tensor summand of a table entry: c * [scale] * (left (x) right),
// where each factor is 1, a vector parameter (as a degree-1 element), or an
// H-element parameter. `gate` restricts the term to one choice value.
struct FactorSpec {
    enum class Kind { One, Vector, Element } kind = Kind::One;
    std::string name;  // parameter name for Vector/Element
};

struct TermSpec {
    Rat c = Rat(1);
    std::string scale;  // optional scalar parameter multiplier ("" = none)
    FactorSpec left, right;
    std::string gate_param, gate_value;  // active iff choices[gate_param] == gate_value
};

using T2Spec = std::vector<TermSpec>;

// Machine-checkable side condition attached to an entry.
struct SideCondition {
    enum class Kind {
        ScalarVecEq,    // a*lscalar*lvec == b*rscalar*rvec as delta vectors
        ScalarVecNonzero,  // lscalar*lvec != 0
        BracketZero,    // [lvec, rvec] == 0 in delta
        VecProportional,   // lvec == c * rvec with scalar parameter `scale`
        VecNonzero,     // lvec != 0
        ScalarNonzero,  // lscalar != 0
    };
    Kind kind;
    Rat a = Rat(1), b = Rat(1);
    std::string lscalar, rscalar;
    std::string lvec, rvec;
    std::string scale;

    std::string describe() const;
    bool holds(const Params& p, const LiePtr& lie) const;
};

struct CatalogEntry {
    std::string id;     // e.g. "thm3.6/3", "prop2.2", "cor3.12/ii"
    int rank = 1;
    std::string note;   // one-line description of the family
    std::vector<std::string> scalar_params, vector_params, element_params;
    std::vector<std::pair<std::string, std::vector<std::string>>> choice_params;
    std::vector<SideCondition> conditions;
    std::map<std::tuple<int, int, int>, T2Spec> table;  // (i,j,k) -> entry spec
    std::vector<Axiom> axioms;  // the axioms this family is classified under
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& find_entry(const std::string& id);  // UnknownId if absent

struct SideConditionResult {
    std::string description;
    bool holds;
};

struct Instantiated {
    ProductTable table;
    std::vector<SideConditionResult> conditions;
    bool all_conditions_hold = true;
};

// Builds the table for the given parameters. Side conditions are evaluated
// and reported but never block instantiation: a violating table is exactly
// what the necessity tests need.
Instantiated instantiate(const CatalogEntry& entry, const Params& p, const LiePtr& lie);

// Current pseudoalgebra of a finite-dimensional pre-Lie algebra with
// multiplication constants m[i][j][k] (a_i o a_j = sum_k m[i][j][k] a_k):
// e_i * e_j = m[i][j][k] (1 (x) 1) (x)_H e_k. Throws NotPreLie if the
// constants fail left-symmetry.
ProductTable current_table(const LiePtr& lie, int d, const std::vector<std::vector<std::vector<Rat>>>& m);

// Basis change e'_i = sum_j P[i][j] e_j with entries in H. Pinv must be the
// exact two-sided inverse over H; this is verified. transform() returns the
// table of the same structure written in the new basis:
//   alpha'[i][j][k] = sum (P[i](x)P[j]) alpha[a][b][m] Delta(Pinv[m][k]).
struct BasisChange {
    LiePtr lie;
    int rank = 0;
    std::vector<std::vector<UEl>> P, Pinv;
};

ProductTable transform(const ProductTable& T, const BasisChange& B);

// Exact termwise equality of all alpha[i][j][k].
bool equivalent(const ProductTable& a, const ProductTable& b);

// One reduction step from a classification corollary: source type, the basis
// change as a function of the source parameters, the target type with its
// parameter substitution, and whether the result additionally needs the two
// module generators exchanged to match the listed target.
struct CorollaryMap {
    std::string id;          // e.g. "cor3.7/2->ii"
    std::string source_id;   // catalog id of the source family
    std::string target_id;   // catalog id of the target family
    bool swap_generators = false;
    bool stated = true;      // false: change of basis reconstructed, not listed
    std::string label_note;  // nonempty when the listed label disagrees
    BasisChange (*basis)(const Params& p, const LiePtr& lie);
    Params (*target_params)(const Params& p, const LiePtr& lie);
};

const std::vector<CorollaryMap>& corollary_maps();

// Exchanges e_0 and e_1 in a rank-2 table (relabelling, not a new structure).
ProductTable exchange_generators(const ProductTable& T);

}  // namespace psalg

#endif
