#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psalg/errors.hpp"
#include "psalg/pseudo.hpp"
#include "psalg/solver.hpp"

using namespace psalg;

namespace {

DeltaVector basis_vec(const LiePtr& lie, int k) {
    DeltaVector v = lie->zero_vector();
    v[static_cast<size_t>(k)] = Rat(1);
    return v;
}

ProductTable rank1_table(const T2& alpha) {
    ProductTable T(alpha.lie, 1);
    T.entry(0, 0, 0) = alpha;
    return T;
}

T2 random_alpha(const LiePtr& lie, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<uint32_t> expo(0, 2);
    T2 out(lie);
    for (int n = 0; n < 2; ++n) {
        MultiIndex I(lie->dim(), 0), J(lie->dim(), 0);
        I[0] = expo(rng);
        J[0] = expo(rng) > 1 ? 1 : 0;
        int c = coef(rng);
        if (c != 0) out.add_term(I, J, Rat(c));
    }
    return out;
}

}  // namespace

TEST_CASE("equation names round-trip") {
    const auto& names = equation_id_names();
    CHECK(names.size() == 9);
    std::set<std::string> seen;
    for (const auto& name : names) {
        CHECK(seen.insert(name).second);
        CHECK(equation_id_name(parse_equation_id(name)) == name);
    }
    CHECK(parse_equation_id("eq3.8") == EquationId::Eq3_8);
    CHECK_THROWS_AS(parse_equation_id("eq9.9"), UnknownId);
}

TEST_CASE("pre-lie squares solve their residual equations") {
    for (const LiePtr& lie : {LieAlgebra::abelian(1), LieAlgebra::heisenberg()}) {
        CAPTURE(lie->name());
        const UEl d1 = UEl::generator(lie, 0);
        const UEl s = UEl::from_delta(lie, basis_vec(lie, 0));

        CHECK(residual(EquationId::Eq2_1, t2_zero(lie), {}).is_zero());
        for (const Rat& t : {Rat(0), Rat(1), rat(-1, 2)}) {
            CHECK(residual(EquationId::Eq2_1, one_tensor(s) + t2_unit(lie) * t, {}).is_zero());
            CHECK(residual(EquationId::Eq2_2, tensor_one(s) + t2_unit(lie) * t, {}).is_zero());
            CHECK(residual(EquationId::Eq4_1, t2_unit(lie) * t, {}).is_zero());
        }
        CHECK_FALSE(residual(EquationId::Eq2_1, tensor_one(d1), {}).is_zero());
        CHECK_FALSE(residual(EquationId::Eq2_2, one_tensor(d1), {}).is_zero());
        CHECK_FALSE(residual(EquationId::Eq4_1, one_tensor(d1), {}).is_zero());
    }
}

TEST_CASE("mixed-product equations accept their families and reject others") {
    const LiePtr lie = LieAlgebra::abelian(1);
    const UEl one = UEl::one(lie);
    const UEl d1 = UEl::generator(lie, 0);
    const UEl s = UEl::from_delta(lie, basis_vec(lie, 0));

    EqParams p;
    p.s = basis_vec(lie, 0);
    p.t = Rat(1);

    SUBCASE("symmetrized right composition is solved by h(x)1") {
        for (const UEl& h : {UEl(lie), one, d1, d1 * d1, one + d1})
            CHECK(residual(EquationId::Eq3_1, tensor_one(h), {}).is_zero());
        CHECK_FALSE(residual(EquationId::Eq3_1, one_tensor(d1), {}).is_zero());
    }
    SUBCASE("the (l,k) family solves its mixed equation") {
        for (const Rat& l : {Rat(0), Rat(2)})
            for (const Rat& k : {Rat(0), rat(1, 2)}) {
                EqParams q = p;
                q.l = l;
                q.k = k;
                T2 alpha = one_tensor(s) + tensor_one(s) * l + t2_unit(lie) * k;
                CHECK(residual(EquationId::Eq3_2, alpha, q).is_zero());
            }
        CHECK_FALSE(residual(EquationId::Eq3_2, tensor_one(d1 * d1), p).is_zero());
    }
    SUBCASE("the associativity-style equation admits only zero") {
        CHECK(residual(EquationId::Eq3_7, t2_zero(lie), p).is_zero());
        CHECK_FALSE(residual(EquationId::Eq3_7, one_tensor(d1) + t2_unit(lie), p).is_zero());
    }
    SUBCASE("the linear equation is solved by 1(x)h") {
        for (const UEl& h : {one, d1, d1 * d1, one + d1})
            CHECK(residual(EquationId::Eq3_8, one_tensor(h), p).is_zero());
        CHECK_FALSE(residual(EquationId::Eq3_8, tensor_one(d1), p).is_zero());
    }
    SUBCASE("the two-sided mixed equation keeps 0, t, and 1(x)s+t") {
        EqParams q = p;
        q.l = Rat(1);
        q.k = Rat(1);
        CHECK(residual(EquationId::Eq3_9, t2_zero(lie), q).is_zero());
        CHECK(residual(EquationId::Eq3_9, t2_unit(lie) * q.t, q).is_zero());
        CHECK(residual(EquationId::Eq3_9, one_tensor(s) + t2_unit(lie) * q.t, q).is_zero());
        CHECK_FALSE(residual(EquationId::Eq3_9, tensor_one(d1), q).is_zero());
    }
}

TEST_CASE("rank-1 residuals agree with the axiom checker") {
    const LiePtr lie = LieAlgebra::abelian(1);
    const UEl d1 = UEl::generator(lie, 0);
    std::mt19937 rng(7u);

    std::vector<T2> candidates = {
        t2_zero(lie),
        t2_unit(lie) * Rat(-3),
        one_tensor(d1) + t2_unit(lie),
        tensor_one(d1) + t2_unit(lie) * rat(1, 2),
        one_tensor(d1) + one_tensor(d1 * d1),
    };
    for (int n = 0; n < 20; ++n) candidates.push_back(random_alpha(lie, rng));

    for (const T2& alpha : candidates) {
        ProductTable T = rank1_table(alpha);
        CHECK(residual(EquationId::Eq2_1, alpha, {}).is_zero() ==
              check_axiom(T, Axiom::LeftPreLie).pass);
        CHECK(residual(EquationId::Eq2_2, alpha, {}).is_zero() ==
              check_axiom(T, Axiom::RightPreLie).pass);
        CHECK(residual(EquationId::Eq4_1, alpha, {}).is_zero() ==
              check_axiom(T, Axiom::Assoc).pass);
    }
}

TEST_CASE("reduced diagonal equation in g") {
    const LiePtr lie = LieAlgebra::abelian(1);
    const UEl one = UEl::one(lie);
    const UEl d1 = UEl::generator(lie, 0);

    EqParams p;
    p.s = basis_vec(lie, 0);
    p.t = Rat(2);

    CHECK(residual_reduced_g(UEl(lie), p).is_zero());
    CHECK(residual_reduced_g(one * p.t, p).is_zero());
    CHECK(residual_reduced_g(d1 + one * p.t, p).is_zero());
    CHECK_FALSE(residual_reduced_g(d1, p).is_zero());

    CHECK(residual(EquationId::Eq3_10, tensor_one(one * p.t), p).is_zero());
    CHECK_FALSE(residual(EquationId::Eq3_10, tensor_one(d1), p).is_zero());
    CHECK_THROWS_AS(residual(EquationId::Eq3_10, one_tensor(d1), p), MalformedInput);
}

TEST_CASE("nullspace of the linear equation over k[d]") {
    const LiePtr lie = LieAlgebra::abelian(1);
    for (const Rat& t : {Rat(0), Rat(1), Rat(-2)}) {
        EqParams p;
        p.s = basis_vec(lie, 0);
        p.t = t;
        for (int D = 0; D <= 4; ++D) {
            CAPTURE(t);
            CAPTURE(D);
            NullspaceResult r = linear_nullspace(EquationId::Eq3_8, p, lie, D);
            CHECK(r.max_degree == D);
            CHECK(r.unknowns == static_cast<size_t>((D + 1) * (D + 2) / 2));
            REQUIRE(r.dimension() == static_cast<size_t>(D + 1));

            for (uint32_t j = 0; j <= static_cast<uint32_t>(D); ++j) {
                T2 b(lie);
                b.add_term(MultiIndex{0}, MultiIndex{j}, Rat(1));
                CHECK(std::count(r.basis.begin(), r.basis.end(), b) == 1);
            }
        }
    }
}

TEST_CASE("nullspace dimensions on larger algebras") {
    EqParams p2;
    const LiePtr ab2 = LieAlgebra::abelian(2);
    p2.s = basis_vec(ab2, 0);
    p2.t = Rat(1);
    NullspaceResult r2 = linear_nullspace(EquationId::Eq3_8, p2, ab2, 2);
    CHECK(r2.unknowns == 15);
    CHECK(r2.dimension() == 6);

    EqParams ph;
    const LiePtr heis = LieAlgebra::heisenberg();
    ph.s = basis_vec(heis, 0);
    ph.t = Rat(1);
    NullspaceResult rh = linear_nullspace(EquationId::Eq3_8, ph, heis, 1);
    CHECK(rh.unknowns == 7);
    CHECK(rh.dimension() == 4);

    NullspaceResult rp = linear_nullspace(EquationId::Eq3_8, ph, heis, 1, true);
    CHECK(rp.unknowns == rh.unknowns);
    REQUIRE(rp.dimension() == rh.dimension());
    for (size_t i = 0; i < rh.basis.size(); ++i) CHECK(rp.basis[i] == rh.basis[i]);
}

TEST_CASE("nullspace guards") {
    const LiePtr lie = LieAlgebra::abelian(1);
    EqParams p;
    p.s = basis_vec(lie, 0);
    p.t = Rat(1);
    CHECK_THROWS_AS(linear_nullspace(EquationId::Eq2_1, {}, lie, 2), NotLinear);
    CHECK_THROWS_AS(linear_nullspace(EquationId::Eq3_10, p, lie, 2), NotLinear);
    CHECK_THROWS_AS(linear_nullspace(EquationId::Eq3_8, p, lie, -1), EmptyBasisDomain);
}

TEST_CASE("rational kernel") {
    SUBCASE("single relation") {
        auto basis = rational_kernel({{Rat(1), Rat(2)}}, 2);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<Rat>{Rat(-2), Rat(1)});
    }
    SUBCASE("identity has trivial kernel") {
        auto basis = rational_kernel({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
        CHECK(basis.empty());
    }
    SUBCASE("zero matrix has full kernel") {
        auto basis = rational_kernel({{Rat(0), Rat(0)}}, 2);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == std::vector<Rat>{Rat(1), Rat(0)});
        CHECK(basis[1] == std::vector<Rat>{Rat(0), Rat(1)});
    }
    SUBCASE("fractions stay exact") {
        auto basis = rational_kernel({{rat(1, 2), rat(1, 3)}}, 2);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<Rat>{rat(-2, 3), Rat(1)});
    }
    SUBCASE("ragged input is rejected") {
        CHECK_THROWS_AS(rational_kernel({{Rat(1)}, {Rat(1), Rat(2)}}, 2), MalformedInput);
    }
}
