#ifndef PSALG_TENSOR_HPP
#define PSALG_TENSOR_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "psalg/uea.hpp"

namespace psalg {

// Sparse elements of H (x) H and H (x) H (x) H over the divided-power basis.
// Keys are tuples of monomial exponent vectors; no zero coefficients stored.
struct T2 {
    using Key = std::pair<MultiIndex, MultiIndex>;
    LiePtr lie;
    std::map<Key, Rat> terms;

    explicit T2(LiePtr l = nullptr) : lie(std::move(l)) {}
    bool is_zero() const { return terms.empty(); }
    void add_term(const MultiIndex& I, const MultiIndex& J, const Rat& c);
    T2 operator+(const T2& o) const;
    T2 operator-(const T2& o) const;
    T2 operator*(const Rat& c) const;
    bool operator==(const T2& o) const;
    uint32_t degree() const;  // max |I| + |J|
};

struct T3 {
    using Key = std::array<MultiIndex, 3>;
    LiePtr lie;
    std::map<Key, Rat> terms;

    explicit T3(LiePtr l = nullptr) : lie(std::move(l)) {}
    bool is_zero() const { return terms.empty(); }
    void add_term(const MultiIndex& I, const MultiIndex& J, const MultiIndex& K, const Rat& c);
    T3 operator+(const T3& o) const;
    T3 operator-(const T3& o) const;
    T3 operator*(const Rat& c) const;
    bool operator==(const T3& o) const;
};

// Constructors for the tensors that appear in displayed formulas.
T2 t2_zero(LiePtr lie);
T2 t2_unit(LiePtr lie);                          // 1 (x) 1
T2 t2_outer(const UEl& f, const UEl& g);         // f (x) g, no straightening involved
T2 one_tensor(const UEl& g);                     // 1 (x) g
T2 tensor_one(const UEl& f);                     // f (x) 1
T3 t3_zero(LiePtr lie);
T3 t3_unit(LiePtr lie);                          // 1 (x) 1 (x) 1
T3 t3_outer(const UEl& f, const UEl& g, const UEl& h);

// Slotwise product, expanding each slot through the straightening core.
T2 t_mul(const T2& a, const T2& b);
T3 t_mul(const T3& a, const T3& b);

// Coproduct Delta(d^(I)) = sum over J+K=I of d^(J) (x) d^(K).
T2 coproduct(const UEl& u);

enum class LiftMode {
    DeltaLeft,   // (Delta (x) id): (I,J) -> sum (A,B,J), A+B=I
    DeltaRight,  // (id (x) Delta): (I,J) -> sum (I,A,B), A+B=J
    PadRight,    // beta -> beta (x) 1
    PadLeft,     // beta -> 1 (x) beta
};
T3 lift(const T2& a, LiftMode mode);

T2 swap_slots(const T2& a);  // sigma: f (x) g -> g (x) f
enum class Perm3 { Swap12, Swap23 };
T3 swap_slots(const T3& a, Perm3 p);

// Fourier transform F(f (x) g) = f S(g_(1)) (x) g_(2) and its inverse
// F^{-1}(f (x) g) = f g_(1) (x) g_(2); mutually inverse bijections of H (x) H.
T2 fourier(const T2& a);
T2 fourier_inverse(const T2& a);

// Unique presentation of beta in (H (x) k) Delta(H): beta = sum_i (h_i (x) 1) Delta(l_i)
// with the h_i distinct monomials and every l_i nonzero.
struct GaloisForm {
    LiePtr lie;
    std::vector<std::pair<MultiIndex, UEl>> pairs;
};
GaloisForm galois_decompose(const T2& beta);
T2 galois_recompose(const GaloisForm& gf);  // inverse, for round-trips

}  // namespace psalg

#endif
