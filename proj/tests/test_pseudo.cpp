#include <doctest.h>

#include <algorithm>
#include <random>

#include "psalg/catalog.hpp"
#include "psalg/errors.hpp"

using namespace psalg;

namespace {

UEl random_element(const LiePtr& lie, std::mt19937& rng, uint32_t max_deg) {
    std::uniform_int_distribution<int> nterms(1, 2);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<uint32_t> expo(0, max_deg);
    UEl out(lie);
    for (int t = nterms(rng); t > 0; --t) {
        MultiIndex I(lie->dim(), 0);
        uint32_t budget = max_deg;
        for (auto& e : I) {
            e = std::min(expo(rng), budget);
            budget -= e;
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        out.add_term(I, Rat(c));
    }
    if (out.is_zero()) out.add_term(zero_index(lie->dim()), Rat(1));
    return out;
}

ModuleElement random_module_element(const LiePtr& lie, int rank, std::mt19937& rng) {
    ModuleElement x(lie, rank);
    for (auto& c : x.coords) c = random_element(lie, rng, 1);
    return x;
}

ModuleElement act(const UEl& h, const ModuleElement& a) {
    ModuleElement out = a;
    for (auto& c : out.coords) c = h * c;
    return out;
}

}  // namespace

TEST_CASE("axiom names") {
    CHECK(axiom_name(Axiom::Assoc) == "assoc");
    CHECK(axiom_name(Axiom::LeftPreLie) == "left-prelie");
    CHECK(axiom_name(Axiom::RightPreLie) == "right-prelie");
}

TEST_CASE("normalize2 canonical form literals") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);
    ModuleElement e0 = ModuleElement::generator(lie, 1, 0);

    PseudoEl2 left = normalize2({{tensor_one(d), e0}});
    PseudoEl2 expect_left(lie, 1);
    expect_left.add_term({1}, {0}, 0, Rat(1));
    CHECK(left == expect_left);

    // 1 (x) d = (-d (x) 1) Delta(1) + (1 (x) 1) Delta(d), so the d moves into
    // the module coefficient and leaves a -d (x) 1 behind.
    PseudoEl2 right = normalize2({{one_tensor(d), e0}});
    PseudoEl2 expect_right(lie, 1);
    expect_right.add_term({1}, {0}, 0, Rat(-1));
    expect_right.add_term({0}, {1}, 0, Rat(1));
    CHECK(right == expect_right);
}

TEST_CASE("normalize2 is independent of the representative") {
    for (LiePtr lie : {LieAlgebra::abelian(2), LieAlgebra::heisenberg(),
                       LieAlgebra::sl2like()}) {
        std::mt19937 rng(5100);
        for (int i = 0; i < 15; ++i) {
            UEl f = random_element(lie, rng, 2);
            UEl g = random_element(lie, rng, 2);
            UEl h = random_element(lie, rng, 2);
            ModuleElement a = random_module_element(lie, 2, rng);
            T2 beta = t2_outer(f, g);
            CHECK(normalize2({{t_mul(beta, coproduct(h)), a}}) ==
                  normalize2({{beta, act(h, a)}}));
        }
    }
}

TEST_CASE("pseudo product of generators reads off the table") {
    LiePtr lie = LieAlgebra::abelian(1);
    ProductTable T(lie, 1);
    T.entry(0, 0, 0) = t2_unit(lie);
    ModuleElement e0 = ModuleElement::generator(lie, 1, 0);

    PseudoEl2 p = pseudo_product(e0, e0, T);
    PseudoEl2 expect(lie, 1);
    expect.add_term({0}, {0}, 0, Rat(1));
    CHECK(p == expect);

    CHECK(pseudo_product(ModuleElement(lie, 1), e0, T).is_zero());
}

TEST_CASE("compose agrees on both sides for an associative table") {
    LiePtr lie = LieAlgebra::heisenberg();
    ProductTable T(lie, 1);
    T.entry(0, 0, 0) = t2_unit(lie) * Rat(3);
    ModuleElement e0 = ModuleElement::generator(lie, 1, 0);
    PseudoEl3 l = compose(e0, e0, e0, T, CompositionSide::Left);
    PseudoEl3 r = compose(e0, e0, e0, T, CompositionSide::Right);
    CHECK_FALSE(l.is_zero());
    CHECK(l == r);
    CHECK((l - r).is_zero());
}

TEST_CASE("check_axiom separates the left and right pre-Lie families") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);

    ProductTable left(lie, 1);
    left.entry(0, 0, 0) = one_tensor(d) + t2_unit(lie);
    CHECK(check_axiom(left, Axiom::LeftPreLie).pass);
    AxiomReport r = check_axiom(left, Axiom::RightPreLie);
    CHECK_FALSE(r.pass);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].i == 0);
    CHECK(r.failures[0].j == 0);
    CHECK(r.failures[0].k == 0);
    CHECK_FALSE(r.failures[0].defect.is_zero());

    ProductTable right(lie, 1);
    right.entry(0, 0, 0) = tensor_one(d) + t2_unit(lie);
    CHECK(check_axiom(right, Axiom::RightPreLie).pass);
    CHECK_FALSE(check_axiom(right, Axiom::LeftPreLie).pass);

    ProductTable both(lie, 1);
    both.entry(0, 0, 0) = t2_unit(lie) * rat(-1, 2);
    for (Axiom ax : {Axiom::Assoc, Axiom::LeftPreLie, Axiom::RightPreLie})
        CHECK(check_axiom(both, ax).pass);
}

TEST_CASE("defect matches what check_axiom reports") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);
    ProductTable T(lie, 1);
    T.entry(0, 0, 0) = tensor_one(d);
    ModuleElement e0 = ModuleElement::generator(lie, 1, 0);

    AxiomReport r = check_axiom(T, Axiom::LeftPreLie);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].defect == defect(e0, e0, e0, T, Axiom::LeftPreLie));
}

TEST_CASE("generator triples decide the axiom on the whole module") {
    LiePtr lie = LieAlgebra::abelian(2);
    const CatalogEntry& e = find_entry("thm3.6/3");
    Params p;
    p.scalars = {{"t1", Rat(1)}, {"t2", Rat(2)}};
    p.vectors = {{"s1", DeltaVector{Rat(1), Rat(0)}}, {"s2", DeltaVector{Rat(0), Rat(1)}}};
    Instantiated inst = instantiate(e, p, lie);
    REQUIRE(inst.all_conditions_hold);
    REQUIRE(check_axiom(inst.table, Axiom::LeftPreLie).pass);

    std::mt19937 rng(5200);
    for (int i = 0; i < 6; ++i) {
        ModuleElement x = random_module_element(lie, 2, rng);
        ModuleElement y = random_module_element(lie, 2, rng);
        ModuleElement z = random_module_element(lie, 2, rng);
        CHECK(defect(x, y, z, inst.table, Axiom::LeftPreLie).is_zero());
    }
}

TEST_CASE("pseudo element arithmetic tracks cancellation") {
    LiePtr lie = LieAlgebra::abelian(1);
    PseudoEl3 a(lie, 1);
    a.add_term({1}, {0}, {0}, 0, Rat(2));
    PseudoEl3 b(lie, 1);
    b.add_term({1}, {0}, {0}, 0, Rat(-2));
    CHECK((a + b).is_zero());
    CHECK((a - a).is_zero());
    CHECK_FALSE((a - b).is_zero());

    PseudoEl2 c(lie, 1);
    c.add_term({0}, {1}, 0, Rat(1));
    c.add_term({0}, {1}, 0, Rat(-1));
    CHECK(c.is_zero());
}

TEST_CASE("module elements") {
    LiePtr lie = LieAlgebra::abelian(2);
    ModuleElement e1 = ModuleElement::generator(lie, 2, 1);
    CHECK(e1.rank == 2);
    CHECK(e1.coords[0].is_zero());
    CHECK(e1.coords[1] == UEl::one(lie));
    CHECK_FALSE(e1.is_zero());
    CHECK(ModuleElement(lie, 2).is_zero());
}
