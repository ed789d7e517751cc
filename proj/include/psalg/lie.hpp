#ifndef PSALG_LIE_HPP
#define PSALG_LIE_HPP

#include <memory>
#include <string>
#include <vector>

#include "psalg/rational.hpp"

namespace psalg {

// Element of the underlying Lie algebra, as coordinates in the fixed basis
// d_1, ..., d_N. Kept separate from UEl so that "a vector of delta" stays a
// first-class notion in parameter lists and side conditions.
using DeltaVector = std::vector<Rat>;

struct BracketTerm {
    int i, j, k;
    Rat c;  // coefficient of d_k in [d_i, d_j]
};

// Finite-dimensional Lie algebra over the rationals given by structure
// constants. Construction validates antisymmetry and the Jacobi identity,
// so a LieAlgebra that exists is always a genuine Lie algebra.
class LieAlgebra {
  public:
    LieAlgebra(int dim, const std::vector<BracketTerm>& bracket, std::string name);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    // c(i,j,k): coefficient of d_k in [d_i, d_j].
    const Rat& c(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

    DeltaVector bracket(const DeltaVector& u, const DeltaVector& v) const;
    DeltaVector zero_vector() const { return DeltaVector(dim_, Rat(0)); }

    bool structurally_equal(const LieAlgebra& other) const;

    // Sparse list of the nonzero c(i,j,k) with i < j, for serialization.
    std::vector<BracketTerm> bracket_terms() const;

    static std::shared_ptr<const LieAlgebra> abelian(int n);
    static std::shared_ptr<const LieAlgebra> heisenberg();  // [d1,d2] = d3
    static std::shared_ptr<const LieAlgebra> sl2like();     // [h,e]=2e, [h,f]=-2f, [e,f]=h

  private:
    int dim_;
    std::string name_;
    std::vector<Rat> c_;  // dim^3, fully antisymmetrized

    void validate() const;
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

// Ambient compatibility: same object, or structurally identical constants.
bool same_ambient(const LiePtr& a, const LiePtr& b);

bool is_zero(const DeltaVector& v);
DeltaVector scale(const Rat& c, const DeltaVector& v);
DeltaVector sub(const DeltaVector& a, const DeltaVector& b);

}  // namespace psalg

#endif
