#ifndef PSALG_SOLVER_HPP
#define PSALG_SOLVER_HPP

#include <string>
#include <vector>

#include "psalg/tensor.hpp"

namespace psalg {

// Labels of the displayed rank-1 coefficient equations. eq2.1/eq2.2 are the
// left/right pre-Lie conditions on alpha, eq4.1 the associativity condition,
// eq3.1/eq3.2/eq3.7/eq3.8/eq3.9 the residual equations behind the rank-2 case
// analysis, and eq3.10 the reduced scalar-case condition in the single
// unknown g (T2-valued; embedded into T3 by padding a unit slot).
enum class EquationId {
    Eq2_1,
    Eq2_2,
    Eq3_1,
    Eq3_2,
    Eq3_7,
    Eq3_8,
    Eq3_9,
    Eq3_10,
    Eq4_1,
};

EquationId parse_equation_id(const std::string& s);  // "eq3.8" etc.
std::string equation_id_name(EquationId id);
const std::vector<std::string>& equation_id_names();

// Parameters appearing in the equations; each label uses a subset.
struct EqParams {
    DeltaVector s;  // empty = zero vector
    Rat t = Rat(0);
    Rat l = Rat(0);
    Rat k = Rat(0);
};

// Left side minus right side of the displayed equation, as an element of
// H (x) H (x) H; identically zero iff alpha satisfies the equation. For
// eq3.10, alpha must have the form g (x) 1; the unknown is g.
T3 residual(EquationId id, const T2& alpha, const EqParams& p);

// The reduced condition behind eq3.10 in its native form:
//   g (x) g - (1 (x) s + t) Delta(g) + 1 (x) g s.
T2 residual_reduced_g(const UEl& g, const EqParams& p);

struct NullspaceResult {
    EquationId id;
    int max_degree = 0;
    std::vector<T2> basis;  // reduced-echelon representatives, deduplicated
    size_t unknowns = 0;    // number of monomial pairs with |I|+|J| <= D
    size_t dimension() const { return basis.size(); }
};

// Exact basis of { alpha : residual(alpha) = 0, deg alpha <= D } for labels
// whose residual is linear and homogeneous in the unknown. Linearity is
// probed on random inputs (residual(a+b) - residual(a) - residual(b) +
// residual(0) must vanish, and residual(0) itself must be zero); a failed
// probe throws NotLinear. Assembly of the coefficient matrix is parallel
// over columns when `parallel` is set; elimination is always serial.
NullspaceResult linear_nullspace(EquationId id, const EqParams& p, const LiePtr& lie, int max_degree,
                                 bool parallel = false);

// Exact kernel basis of an m x n rational matrix (rows of length n), by
// Gauss-Jordan elimination over the rationals. Returned vectors are in
// reduced form: leading one at each free column, deterministic order.
std::vector<std::vector<Rat>> rational_kernel(std::vector<std::vector<Rat>> rows, size_t cols);

}  // namespace psalg

#endif
