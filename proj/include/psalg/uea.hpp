#ifndef PSALG_UEA_HPP
#define PSALG_UEA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "psalg/lie.hpp"
#include "psalg/rational.hpp"

namespace psalg {

// Exponent vector of a divided-power PBW monomial d^(I) = d_1^{i_1} ... d_N^{i_N} / I!.
// Always has length dim(lie). std::vector's operator< is the lexicographic
// order we use as the canonical monomial order throughout.
using MultiIndex = std::vector<uint32_t>;

uint32_t weight(const MultiIndex& I);                 // |I| = i_1 + ... + i_N
Int multi_factorial(const MultiIndex& I);             // I! = i_1! ... i_N!
MultiIndex add(const MultiIndex& I, const MultiIndex& J);
MultiIndex zero_index(int dim);
MultiIndex unit_index(int dim, int k);                // d_k

// Degree cap for all products; reads PSEUDOALG_MAX_DEGREE once (default 64).
uint32_t max_degree_cap();

// Element of U(delta) as a sparse rational combination of divided-power PBW
// monomials. Invariant: no stored zero coefficients, keys all of length dim.
class UEl {
  public:
    UEl() = default;
    explicit UEl(LiePtr lie) : lie_(std::move(lie)) {}
    UEl(LiePtr lie, const MultiIndex& I, const Rat& c);

    static UEl one(LiePtr lie);
    static UEl generator(LiePtr lie, int k);
    static UEl from_delta(LiePtr lie, const DeltaVector& v);

    const LiePtr& lie() const { return lie_; }
    const std::map<MultiIndex, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint32_t degree() const;  // max |I| over stored terms; 0 for the zero element

    void add_term(const MultiIndex& I, const Rat& c);  // accumulating, drops zeros
    Rat coefficient(const MultiIndex& I) const;

    UEl operator+(const UEl& o) const;
    UEl operator-(const UEl& o) const;
    UEl operator-() const;
    UEl operator*(const Rat& c) const;
    UEl operator*(const UEl& o) const;  // PBW straightening product
    bool operator==(const UEl& o) const;

    // Counit: coefficient of d^(0).
    Rat counit() const;

    // Antipode: the algebra anti-homomorphism with S(d_k) = -d_k.
    UEl antipode() const;

  private:
    LiePtr lie_;
    std::map<MultiIndex, Rat> terms_;
};

// d^(I) * d^(J) expanded in the divided-power basis (the straightening core).
// Exposed for the tensor layer, which multiplies slotwise on monomial keys.
std::map<MultiIndex, Rat> mul_monomials(const LiePtr& lie, const MultiIndex& I, const MultiIndex& J);

// Antipode of a single monomial: reversed word with sign (-1)^|I|, restraightened.
std::map<MultiIndex, Rat> antipode_monomial(const LiePtr& lie, const MultiIndex& I);

// All splits J + K = I, each with coefficient 1 (the divided-power coproduct
// is multiplicity-free). Visits pairs in lexicographic order of J.
std::vector<std::pair<MultiIndex, MultiIndex>> coproduct_splits(const MultiIndex& I);

// All splits A + B + C = I (iterated coproduct), same convention.
std::vector<std::array<MultiIndex, 3>> coproduct_splits3(const MultiIndex& I);

}  // namespace psalg

#endif
