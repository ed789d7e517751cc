#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "psalg/tensor.hpp"

using namespace psalg;

namespace {

UEl random_element(const LiePtr& lie, std::mt19937& rng, uint32_t max_deg) {
    std::uniform_int_distribution<int> nterms(1, 2);
    std::uniform_int_distribution<int> coef(-3, 3);
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

T2 random_t2(const LiePtr& lie, std::mt19937& rng, uint32_t max_deg) {
    T2 out(lie);
    std::uniform_int_distribution<int> nterms(1, 2);
    for (int t = nterms(rng); t > 0; --t) {
        UEl f = random_element(lie, rng, max_deg);
        UEl g = random_element(lie, rng, max_deg);
        out = out + t2_outer(f, g);
    }
    if (out.is_zero()) out = t2_unit(lie);
    return out;
}

// (counit (x) id) applied to a T2, as an element of H.
UEl eps_left(const T2& a) {
    UEl out(a.lie);
    for (const auto& [key, c] : a.terms)
        if (weight(key.first) == 0) out.add_term(key.second, c);
    return out;
}

UEl eps_right(const T2& a) {
    UEl out(a.lie);
    for (const auto& [key, c] : a.terms)
        if (weight(key.second) == 0) out.add_term(key.first, c);
    return out;
}

// Convolution m(S (x) id) Delta, which must equal counit(u) * 1.
UEl antipode_convolution(const UEl& u) {
    UEl out(u.lie());
    for (const auto& [key, c] : coproduct(u).terms) {
        UEl s(u.lie());
        for (const auto& [I, d] : antipode_monomial(u.lie(), key.first)) s.add_term(I, d);
        out = out + (s * UEl(u.lie(), key.second, Rat(1))) * c;
    }
    return out;
}

const std::vector<LiePtr>& presets() {
    static const std::vector<LiePtr> all = {LieAlgebra::abelian(1), LieAlgebra::abelian(2),
                                            LieAlgebra::heisenberg(), LieAlgebra::sl2like()};
    return all;
}

}  // namespace

TEST_CASE("tensor constructors") {
    LiePtr lie = LieAlgebra::abelian(2);
    UEl d1 = UEl::generator(lie, 0);
    UEl d2 = UEl::generator(lie, 1);

    CHECK(t2_zero(lie).is_zero());
    T2 unit = t2_unit(lie);
    CHECK(unit.terms.size() == 1);
    CHECK(unit.terms.at({zero_index(2), zero_index(2)}) == 1);

    T2 outer = t2_outer(d1 + d2, d1);
    CHECK(outer.terms.size() == 2);
    CHECK(outer.terms.at({unit_index(2, 0), unit_index(2, 0)}) == 1);
    CHECK(outer.terms.at({unit_index(2, 1), unit_index(2, 0)}) == 1);

    CHECK(one_tensor(d1) == t2_outer(UEl::one(lie), d1));
    CHECK(tensor_one(d1) == t2_outer(d1, UEl::one(lie)));
    CHECK(t2_outer(d1, UEl(lie)).is_zero());

    T3 u3 = t3_unit(lie);
    CHECK(u3.terms.size() == 1);
    CHECK(t3_outer(d1, d2, d1).terms.size() == 1);
    CHECK(t3_zero(lie).is_zero());
}

TEST_CASE("tensor arithmetic and degree") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);
    T2 a = t2_outer(UEl(lie, {2}, Rat(1)), d);
    CHECK(a.degree() == 3);
    T2 b = one_tensor(d) * rat(1, 2);
    CHECK(((a + b) - b) == a);
    CHECK((a * Rat(0)).is_zero());
    CHECK((a - a).is_zero());
}

TEST_CASE("slotwise product straightens inside each slot") {
    LiePtr lie = LieAlgebra::heisenberg();
    UEl d1 = UEl::generator(lie, 0);
    UEl d2 = UEl::generator(lie, 1);

    T2 p = t_mul(one_tensor(d2), one_tensor(d1));
    CHECK(p.terms.size() == 2);
    CHECK(p.terms.at({zero_index(3), MultiIndex{1, 1, 0}}) == 1);
    CHECK(p.terms.at({zero_index(3), MultiIndex{0, 0, 1}}) == -1);

    CHECK(t_mul(tensor_one(d1), one_tensor(d2)) == t2_outer(d1, d2));

    T3 q = t_mul(t3_outer(d2, UEl::one(lie), d2), t3_outer(d1, d1, d1));
    CHECK(q == t3_outer(d2 * d1, d1, d2 * d1));
}

TEST_CASE("coproduct of a divided power is the full split sum") {
    LiePtr lie = LieAlgebra::abelian(1);
    T2 c = coproduct(UEl(lie, {2}, Rat(1)));
    CHECK(c.terms.size() == 3);
    CHECK(c.terms.at({MultiIndex{0}, MultiIndex{2}}) == 1);
    CHECK(c.terms.at({MultiIndex{1}, MultiIndex{1}}) == 1);
    CHECK(c.terms.at({MultiIndex{2}, MultiIndex{0}}) == 1);
}

TEST_CASE("coproduct is an algebra map") {
    for (const LiePtr& lie : presets()) {
        std::mt19937 rng(4100);
        for (int i = 0; i < 15; ++i) {
            UEl u = random_element(lie, rng, 2);
            UEl v = random_element(lie, rng, 2);
            CHECK(coproduct(u * v) == t_mul(coproduct(u), coproduct(v)));
        }
    }
}

TEST_CASE("coproduct is coassociative and cocommutative") {
    for (const LiePtr& lie : presets()) {
        std::mt19937 rng(4200);
        for (int i = 0; i < 15; ++i) {
            UEl u = random_element(lie, rng, 3);
            T2 c = coproduct(u);
            CHECK(lift(c, LiftMode::DeltaLeft) == lift(c, LiftMode::DeltaRight));
            CHECK(swap_slots(c) == c);
        }
    }
}

TEST_CASE("counit is a two-sided counit for the coproduct") {
    for (const LiePtr& lie : presets()) {
        std::mt19937 rng(4300);
        for (int i = 0; i < 15; ++i) {
            UEl u = random_element(lie, rng, 3);
            CHECK(eps_left(coproduct(u)) == u);
            CHECK(eps_right(coproduct(u)) == u);
        }
    }
}

TEST_CASE("antipode convolution collapses to the counit") {
    for (const LiePtr& lie : presets()) {
        std::mt19937 rng(4400);
        for (int i = 0; i < 15; ++i) {
            UEl u = random_element(lie, rng, 3);
            CHECK(antipode_convolution(u) == UEl::one(lie) * u.counit());
        }
    }
}

TEST_CASE("lift pads and splits slots as labelled") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);
    T2 a = t2_outer(d, UEl(lie, {2}, Rat(1)));

    T3 pr = lift(a, LiftMode::PadRight);
    CHECK(pr == t3_outer(d, UEl(lie, {2}, Rat(1)), UEl::one(lie)));
    T3 pl = lift(a, LiftMode::PadLeft);
    CHECK(pl == t3_outer(UEl::one(lie), d, UEl(lie, {2}, Rat(1))));

    T3 dl = lift(a, LiftMode::DeltaLeft);
    CHECK(dl.terms.size() == 2);
    CHECK(dl.terms.at({MultiIndex{0}, MultiIndex{1}, MultiIndex{2}}) == 1);
    CHECK(dl.terms.at({MultiIndex{1}, MultiIndex{0}, MultiIndex{2}}) == 1);

    T3 dr = lift(a, LiftMode::DeltaRight);
    CHECK(dr.terms.size() == 3);
    CHECK(dr.terms.at({MultiIndex{1}, MultiIndex{0}, MultiIndex{2}}) == 1);
    CHECK(dr.terms.at({MultiIndex{1}, MultiIndex{1}, MultiIndex{1}}) == 1);
    CHECK(dr.terms.at({MultiIndex{1}, MultiIndex{2}, MultiIndex{0}}) == 1);
}

TEST_CASE("slot swaps are involutions") {
    LiePtr lie = LieAlgebra::heisenberg();
    std::mt19937 rng(4500);
    T2 a = random_t2(lie, rng, 2);
    CHECK(swap_slots(swap_slots(a)) == a);

    UEl f = random_element(lie, rng, 2);
    UEl g = random_element(lie, rng, 2);
    UEl h = random_element(lie, rng, 2);
    T3 t = t3_outer(f, g, h);
    CHECK(swap_slots(t, Perm3::Swap12) == t3_outer(g, f, h));
    CHECK(swap_slots(t, Perm3::Swap23) == t3_outer(f, h, g));
    CHECK(swap_slots(swap_slots(t, Perm3::Swap12), Perm3::Swap12) == t);
}

TEST_CASE("fourier transform literal over k[d]") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);
    T2 f = fourier(t2_outer(d, d));
    CHECK(f.terms.size() == 2);
    CHECK(f.terms.at({MultiIndex{2}, MultiIndex{0}}) == -2);
    CHECK(f.terms.at({MultiIndex{1}, MultiIndex{1}}) == 1);

    T2 fi = fourier_inverse(t2_outer(d, d));
    CHECK(fi.terms.at({MultiIndex{2}, MultiIndex{0}}) == 2);
    CHECK(fi.terms.at({MultiIndex{1}, MultiIndex{1}}) == 1);
}

TEST_CASE("fourier transform and its inverse cancel") {
    for (const LiePtr& lie : presets()) {
        std::mt19937 rng(4600);
        for (int i = 0; i < 20; ++i) {
            T2 a = random_t2(lie, rng, 2);
            CHECK(fourier_inverse(fourier(a)) == a);
            CHECK(fourier(fourier_inverse(a)) == a);
        }
    }
}

TEST_CASE("galois decomposition literals over k[d]") {
    LiePtr lie = LieAlgebra::abelian(1);
    UEl d = UEl::generator(lie, 0);

    GaloisForm gf = galois_decompose(tensor_one(d) + one_tensor(d));
    REQUIRE(gf.pairs.size() == 1);
    CHECK(gf.pairs[0].first == MultiIndex{0});
    CHECK(gf.pairs[0].second == d);

    std::map<MultiIndex, UEl> got;
    for (const auto& [I, l] : galois_decompose(one_tensor(d)).pairs) got.emplace(I, l);
    REQUIRE(got.size() == 2);
    CHECK(got.at({0}) == d);
    CHECK(got.at({1}) == -UEl::one(lie));
}

TEST_CASE("galois decomposition is a normal form") {
    for (const LiePtr& lie : presets()) {
        std::mt19937 rng(4700);
        for (int i = 0; i < 20; ++i) {
            T2 a = random_t2(lie, rng, 2);
            GaloisForm gf = galois_decompose(a);
            CHECK(galois_recompose(gf) == a);
            std::map<MultiIndex, UEl> seen;
            for (const auto& [I, l] : gf.pairs) {
                CHECK_FALSE(l.is_zero());
                CHECK(seen.emplace(I, l).second);
            }
        }
    }
}
