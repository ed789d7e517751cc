#include "psalg/catalog.hpp"

#include "psalg/errors.hpp"

// The classification catalog. Each entry is a template over named parameters;
// instantiate() in catalog.cpp turns it into a concrete ProductTable. Table
// keys are 0-based: (i, j, k) holds the H(x)H coefficient of e_k in e_i * e_j,
// and omitted keys are zero. A term "t (x) 1" with scalar t means t * (1 (x) 1).

namespace psalg {

namespace {

FactorSpec f_vec(const char* name) { return {FactorSpec::Kind::Vector, name}; }
FactorSpec f_elem(const char* name) { return {FactorSpec::Kind::Element, name}; }

// c * (1 (x) 1)
TermSpec t_const(Rat c) {
    TermSpec t;
    t.c = std::move(c);
    return t;
}

// c * scalar * (1 (x) 1)
TermSpec t_scalar(const char* scalar, Rat c = Rat(1)) {
    TermSpec t;
    t.c = std::move(c);
    t.scale = scalar;
    return t;
}

// 1 (x) v
TermSpec t_right_vec(const char* v) {
    TermSpec t;
    t.right = f_vec(v);
    return t;
}

// v (x) 1
TermSpec t_left_vec(const char* v) {
    TermSpec t;
    t.left = f_vec(v);
    return t;
}

// scalar * (v (x) 1)
TermSpec t_left_vec_scaled(const char* scalar, const char* v) {
    TermSpec t;
    t.scale = scalar;
    t.left = f_vec(v);
    return t;
}

// el (x) 1
TermSpec t_left_elem(const char* el) {
    TermSpec t;
    t.left = f_elem(el);
    return t;
}

TermSpec gated(TermSpec t, const char* param, const char* value) {
    t.gate_param = param;
    t.gate_value = value;
    return t;
}

SideCondition c_vec_nonzero(const char* v) {
    SideCondition c;
    c.kind = SideCondition::Kind::VecNonzero;
    c.lvec = v;
    return c;
}

SideCondition c_scalar_nonzero(const char* s) {
    SideCondition c;
    c.kind = SideCondition::Kind::ScalarNonzero;
    c.lscalar = s;
    return c;
}

SideCondition c_bracket_zero(const char* a, const char* b) {
    SideCondition c;
    c.kind = SideCondition::Kind::BracketZero;
    c.lvec = a;
    c.rvec = b;
    return c;
}

// a * lscalar * lvec == b * rscalar * rvec as delta vectors
SideCondition c_cross_eq(Rat a, const char* lscalar, const char* lvec,
                         Rat b, const char* rscalar, const char* rvec) {
    SideCondition c;
    c.kind = SideCondition::Kind::ScalarVecEq;
    c.a = std::move(a);
    c.b = std::move(b);
    c.lscalar = lscalar;
    c.lvec = lvec;
    c.rscalar = rscalar;
    c.rvec = rvec;
    return c;
}

SideCondition c_cross_nonzero(const char* scalar, const char* vec) {
    SideCondition c;
    c.kind = SideCondition::Kind::ScalarVecNonzero;
    c.lscalar = scalar;
    c.lvec = vec;
    return c;
}

// lvec == scale * rvec with the proportionality constant a scalar parameter
SideCondition c_proportional(const char* lvec, const char* scale, const char* rvec) {
    SideCondition c;
    c.kind = SideCondition::Kind::VecProportional;
    c.lvec = lvec;
    c.rvec = rvec;
    c.scale = scale;
    return c;
}

using Key = std::tuple<int, int, int>;

// ---------------------------------------------------------------------------
// Rank 1
// ---------------------------------------------------------------------------

CatalogEntry prop2_2() {
    CatalogEntry e;
    e.id = "prop2.2";
    e.rank = 1;
    e.note = "rank-1 left pre-Lie family e*e = (1(x)s + t)(x)_H e";
    e.scalar_params = {"t"};
    e.vector_params = {"s"};
    e.table[Key{0, 0, 0}] = {t_right_vec("s"), t_scalar("t")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

CatalogEntry prop2_3() {
    CatalogEntry e;
    e.id = "prop2.3";
    e.rank = 1;
    e.note = "rank-1 right pre-Lie family e*e = (s(x)1 + t)(x)_H e";
    e.scalar_params = {"t"};
    e.vector_params = {"s"};
    e.table[Key{0, 0, 0}] = {t_left_vec("s"), t_scalar("t")};
    e.axioms = {Axiom::RightPreLie};
    return e;
}

CatalogEntry cor2_4() {
    CatalogEntry e;
    e.id = "cor2.4";
    e.rank = 1;
    e.note = "rank-1 two-sided pre-Lie family e*e = t(1(x)1)(x)_H e";
    e.scalar_params = {"t"};
    e.table[Key{0, 0, 0}] = {t_scalar("t")};
    e.axioms = {Axiom::LeftPreLie, Axiom::RightPreLie};
    return e;
}

CatalogEntry thm4_1() {
    CatalogEntry e;
    e.id = "thm4.1";
    e.rank = 1;
    e.note = "rank-1 associative family e*e = t(1(x)1)(x)_H e";
    e.scalar_params = {"t"};
    e.table[Key{0, 0, 0}] = {t_scalar("t")};
    e.axioms = {Axiom::Assoc, Axiom::LeftPreLie, Axiom::RightPreLie};
    return e;
}

// ---------------------------------------------------------------------------
// Rank 2, both diagonal coefficients 1(x)s_i + t_i with everything nonzero
// ---------------------------------------------------------------------------

CatalogEntry thm3_6_base(int type) {
    CatalogEntry e;
    e.id = "thm3.6/" + std::to_string(type);
    e.rank = 2;
    e.scalar_params = {"t1", "t2"};
    e.vector_params = {"s1", "s2"};
    e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"),
                    c_scalar_nonzero("t1"), c_scalar_nonzero("t2")};
    e.table[Key{0, 0, 0}] = {t_right_vec("s1"), t_scalar("t1")};
    e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_scalar("t2")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

void add_cross_condition(CatalogEntry& e, Rat a) {
    e.conditions.push_back(c_cross_eq(std::move(a), "t1", "s2", Rat(1), "t2", "s1"));
    e.conditions.push_back(c_cross_nonzero("t2", "s1"));
}

std::vector<CatalogEntry> thm3_6_entries() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e = thm3_6_base(1);
        e.note = "both mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(2);
        e.note = "both mixed products are (1(x)s1 + t1) on e2; t1 s2 = t2 s1 != 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_scalar("t1")};
        e.table[Key{1, 0, 1}] = {t_right_vec("s1"), t_scalar("t1")};
        add_cross_condition(e, Rat(1));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(3);
        e.note = "mixed products 1(x)s1 on e2 and 1(x)s2 on e1; [s1,s2] = 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.conditions.push_back(c_bracket_zero("s1", "s2"));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(4);
        e.note = "mixed products carry the opposite diagonal coefficients; t1 s2 = t2 s1 != 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_scalar("t1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t2")};
        add_cross_condition(e, Rat(1));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(5);
        e.note = "e1*e2 = (1(x)s1 + t1) on e2; e2*e1 splits 1(x)s2 on e1 plus t1 on e2; [s1,s2] = 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_scalar("t1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        e.conditions.push_back(c_bracket_zero("s1", "s2"));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(6);
        e.note = "doubled/halved scalar parts on the mixed products; 2 t1 s2 = t2 s1 != 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_scalar("t1", Rat(2))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t2", rat(1, 2))};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        add_cross_condition(e, Rat(2));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(7);
        e.note = "mixed products split across both generators with bare vector parts; t1 s2 = t2 s1 != 0";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        add_cross_condition(e, Rat(1));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(8);
        e.note = "mixed products split with doubled scalar parts; t1 s2 = t2 s1 != 0";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_scalar("t1", Rat(2))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t2", Rat(2))};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        add_cross_condition(e, Rat(1));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(9);
        e.note = "e1*e2 splits t2 on e1 plus 1(x)s1 on e2; e2*e1 = (1(x)s2 + t2) on e1; [s1,s2] = 0";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t2")};
        e.conditions.push_back(c_bracket_zero("s1", "s2"));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(10);
        e.note = "halved/doubled scalar parts, no e2 component in e2*e1; t1 s2 / 2 = t2 s1 != 0";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_scalar("t1", rat(1, 2))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t2", Rat(2))};
        add_cross_condition(e, rat(1, 2));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_6_base(11);
        e.note = "both mixed products are (1(x)s2 + t2) on e1; t1 s2 = t2 s1 != 0";
        e.table[Key{0, 1, 0}] = {t_right_vec("s2"), t_scalar("t2")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t2")};
        add_cross_condition(e, Rat(1));
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank 2, degenerate diagonals
// ---------------------------------------------------------------------------

std::vector<CatalogEntry> thm3_8_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "thm3.8/1";
        e.rank = 2;
        e.note = "everything vanishes";
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "thm3.8/2";
        e.rank = 2;
        e.note = "only e2*e1 = (g(x)1) on e1 for an arbitrary nonzero g in H";
        e.element_params = {"g"};
        e.table[Key{1, 0, 0}] = {t_left_elem("g")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "thm3.8/3";
        e.rank = 2;
        e.note = "only e1*e2 = (h(x)1) on e2 for an arbitrary nonzero h in H";
        e.element_params = {"h"};
        e.table[Key{0, 1, 1}] = {t_left_elem("h")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> thm3_9_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "thm3.9/1";
        e.rank = 2;
        e.note = "e2*e2 = (1(x)s + t) on e2, mixed products vanish";
        e.scalar_params = {"t"};
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_scalar("t")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        // The theorem statement prints the e2*e1 family against e2, but its
        // proof pins beta2 = 0 and puts the (l, k) family in the e1 slot; the
        // axiom checker confirms only the proof's version. See the suite flag.
        CatalogEntry e;
        e.id = "thm3.9/2";
        e.rank = 2;
        e.note = "e1*e2 = alpha on e1 with alpha in {0, t, 1(x)s + t}; "
                 "e2*e1 = (1(x)s + l s(x)1 + k) on e1";
        e.scalar_params = {"t", "l", "k"};
        e.vector_params = {"s"};
        e.choice_params = {{"alpha", {"zero", "t", "st"}}};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_scalar("t")};
        e.table[Key{0, 1, 0}] = {gated(t_scalar("t"), "alpha", "t"),
                                 gated(t_right_vec("s"), "alpha", "st"),
                                 gated(t_scalar("t"), "alpha", "st")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s"), t_left_vec_scaled("l", "s"),
                                 t_scalar("k")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

CatalogEntry thm3_10() {
    CatalogEntry e;
    e.id = "thm3.10";
    e.rank = 2;
    e.note = "e2*e2 = t on e2; e1*e2 = alpha on e1 with alpha in {0, t}; "
             "e2*e1 = (g(x)1) on e1 for arbitrary g in H";
    e.scalar_params = {"t"};
    e.element_params = {"g"};
    e.choice_params = {{"alpha", {"zero", "t"}}};
    e.conditions = {c_scalar_nonzero("t")};
    e.table[Key{1, 1, 1}] = {t_scalar("t")};
    e.table[Key{0, 1, 0}] = {gated(t_scalar("t"), "alpha", "t")};
    e.table[Key{1, 0, 0}] = {t_left_elem("g")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

CatalogEntry thm3_11_base(int type) {
    CatalogEntry e;
    e.id = "thm3.11/" + std::to_string(type);
    e.rank = 2;
    e.scalar_params = {"t1", "t2"};
    e.conditions = {c_scalar_nonzero("t1"), c_scalar_nonzero("t2")};
    e.table[Key{0, 0, 0}] = {t_scalar("t1")};
    e.table[Key{1, 1, 1}] = {t_scalar("t2")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

std::vector<CatalogEntry> thm3_11_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e = thm3_11_base(1);
        e.note = "mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(2);
        e.note = "e1*e2 = t1 on e2, e2*e1 = t2 on e1";
        e.table[Key{0, 1, 1}] = {t_scalar("t1")};
        e.table[Key{1, 0, 0}] = {t_scalar("t2")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(3);
        e.note = "both mixed products equal t1 on e2";
        e.table[Key{0, 1, 1}] = {t_scalar("t1")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(4);
        e.note = "e1*e2 = 2t1 on e2, e2*e1 = t2/2 on e1 plus t1 on e2";
        e.table[Key{0, 1, 1}] = {t_scalar("t1", Rat(2))};
        e.table[Key{1, 0, 0}] = {t_scalar("t2", rat(1, 2))};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(5);
        e.note = "both mixed products equal t2 on e1";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{1, 0, 0}] = {t_scalar("t2")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(6);
        e.note = "e1*e2 = t2 on e1, e2*e1 = t1 on e2";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(7);
        e.note = "e1*e2 = t2 on e1 plus t1/2 on e2, e2*e1 = 2t2 on e1";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{0, 1, 1}] = {t_scalar("t1", rat(1, 2))};
        e.table[Key{1, 0, 0}] = {t_scalar("t2", Rat(2))};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_11_base(8);
        e.note = "e1*e2 = t2 on e1 plus 2t1 on e2, e2*e1 = 2t2 on e1 plus t1 on e2";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{0, 1, 1}] = {t_scalar("t1", Rat(2))};
        e.table[Key{1, 0, 0}] = {t_scalar("t2", Rat(2))};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }
    return out;
}

CatalogEntry thm3_13_base(int type) {
    CatalogEntry e;
    e.id = "thm3.13/" + std::to_string(type);
    e.rank = 2;
    e.vector_params = {"s1", "s2"};
    e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2")};
    e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
    e.table[Key{1, 1, 1}] = {t_right_vec("s2")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

std::vector<CatalogEntry> thm3_13_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e = thm3_13_base(1);
        e.note = "mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_13_base(2);
        e.note = "both mixed products equal 1(x)s1 on e2; s1 = c s2 with c != 0";
        e.scalar_params = {"c"};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 1}] = {t_right_vec("s1")};
        e.conditions.push_back(c_proportional("s1", "c", "s2"));
        e.conditions.push_back(c_scalar_nonzero("c"));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_13_base(3);
        e.note = "e1*e2 = 1(x)s1 on e2, e2*e1 = 1(x)s2 on e1; [s1,s2] = 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.conditions.push_back(c_bracket_zero("s1", "s2"));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_13_base(4);
        e.note = "both mixed products equal 1(x)s2 on e1; s1 = c s2 with c != 0";
        e.scalar_params = {"c"};
        e.table[Key{0, 1, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.conditions.push_back(c_proportional("s1", "c", "s2"));
        e.conditions.push_back(c_scalar_nonzero("c"));
        out.push_back(e);
    }
    return out;
}

CatalogEntry thm3_15_base(int type) {
    CatalogEntry e;
    e.id = "thm3.15/" + std::to_string(type);
    e.rank = 2;
    e.scalar_params = {"t"};
    e.vector_params = {"s"};
    e.conditions = {c_scalar_nonzero("t"), c_vec_nonzero("s")};
    e.table[Key{0, 0, 0}] = {t_scalar("t")};
    e.table[Key{1, 1, 1}] = {t_right_vec("s")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

std::vector<CatalogEntry> thm3_15_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e = thm3_15_base(1);
        e.note = "mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_15_base(2);
        e.note = "only e2*e1 = 1(x)s on e1";
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_15_base(3);
        e.note = "e1*e2 = t on e2; e2*e1 = 1(x)s on e1 plus t on e2";
        e.table[Key{0, 1, 1}] = {t_scalar("t")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 0, 1}] = {t_scalar("t")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_15_base(4);
        e.note = "e1*e2 = 1(x)s on e1; e2*e1 = (1(x)s + s(x)1) on e1";
        e.table[Key{0, 1, 0}] = {t_right_vec("s")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s"), t_left_vec("s")};
        out.push_back(e);
    }
    return out;
}

CatalogEntry thm3_17_base(int type) {
    CatalogEntry e;
    e.id = "thm3.17/" + std::to_string(type);
    e.rank = 2;
    e.scalar_params = {"t"};
    e.vector_params = {"s1", "s2"};
    e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"), c_scalar_nonzero("t")};
    e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
    e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_scalar("t")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

std::vector<CatalogEntry> thm3_17_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e = thm3_17_base(1);
        e.note = "mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_17_base(2);
        e.note = "e1*e2 = 1(x)s1 on e2, e2*e1 = 1(x)s2 on e1; [s1,s2] = 0";
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.conditions.push_back(c_bracket_zero("s1", "s2"));
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_17_base(3);
        e.note = "e1*e2 = t on e1 plus 1(x)s1 on e2, e2*e1 = (1(x)s2 + t) on e1; [s1,s2] = 0";
        e.table[Key{0, 1, 0}] = {t_scalar("t")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_scalar("t")};
        e.conditions.push_back(c_bracket_zero("s1", "s2"));
        out.push_back(e);
    }
    return out;
}

CatalogEntry thm3_19_base(int type) {
    CatalogEntry e;
    e.id = "thm3.19/" + std::to_string(type);
    e.rank = 2;
    e.scalar_params = {"t1", "t2"};
    e.vector_params = {"s"};
    e.conditions = {c_scalar_nonzero("t1"), c_scalar_nonzero("t2"), c_vec_nonzero("s")};
    e.table[Key{0, 0, 0}] = {t_scalar("t1")};
    e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_scalar("t2")};
    e.axioms = {Axiom::LeftPreLie};
    return e;
}

std::vector<CatalogEntry> thm3_19_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e = thm3_19_base(1);
        e.note = "mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_19_base(2);
        e.note = "only e2*e1 = 1(x)s on e1";
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_19_base(3);
        e.note = "e1*e2 = t1 on e2; e2*e1 = 1(x)s on e1 plus t1 on e2";
        e.table[Key{0, 1, 1}] = {t_scalar("t1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_19_base(4);
        e.note = "e1*e2 = t2 on e1; e2*e1 = (1(x)s + t2) on e1";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s"), t_scalar("t2")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm3_19_base(5);
        e.note = "e1*e2 = (1(x)s + t2) on e1; e2*e1 = (1(x)s + s(x)1 + t2) on e1";
        e.table[Key{0, 1, 0}] = {t_right_vec("s"), t_scalar("t2")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s"), t_left_vec("s"), t_scalar("t2")};
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank 2, reduced (normal-form) types the corollaries map onto
// ---------------------------------------------------------------------------

std::vector<CatalogEntry> cor3_7_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "cor3.7/i";
        e.rank = 2;
        e.note = "split: diagonal (1(x)s_i + 1), mixed products vanish";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1"), t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.7/ii";
        e.rank = 2;
        e.note = "split with a shared vector: both diagonals (1(x)s + 1)";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s"), t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.7/iii";
        e.rank = 2;
        e.note = "diagonal (1(x)s_i + 1), mixed products 1(x)s1 on e2 and 1(x)s2 on e1";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"),
                        c_bracket_zero("s1", "s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1"), t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.7/iv";
        e.rank = 2;
        e.note = "e1 acts by (1(x)s + 1) on both generators, e2 annihilates";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s"), t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_right_vec("s"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.7/v";
        e.rank = 2;
        e.note = "e1 acts by (1(x)s1 + 1); e2*e1 = 1(x)s2 on e1 plus 1 on e2";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"),
                        c_bracket_zero("s1", "s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1"), t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1"), t_const(Rat(1))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 0, 1}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.7/vi";
        e.rank = 2;
        e.note = "e1*e1 = -1 on e2; e2 acts by (1(x)s + 1) on e1 and (1(x)s + 2) on itself";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 1}] = {t_const(Rat(-1))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s"), t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_const(Rat(2))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.7/vii";
        e.rank = 2;
        e.note = "e1 acts by (1(x)s + 1) on itself and 1(x)s on e2; e2*e1 = 1 on e2";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s"), t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_right_vec("s")};
        e.table[Key{1, 0, 1}] = {t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> cor3_12_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "cor3.12/i";
        e.rank = 2;
        e.note = "two orthogonal idempotent generators";
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.12/ii";
        e.rank = 2;
        e.note = "e2 idempotent and acting as identity on e1 from the left";
        e.table[Key{1, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.12/iii";
        e.rank = 2;
        e.note = "e1*e1 = 2e1, e1*e2 = e2, e2*e2 = -e1";
        e.table[Key{0, 0, 0}] = {t_const(Rat(2))};
        e.table[Key{0, 1, 1}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 0}] = {t_const(Rat(-1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.12/iv";
        e.rank = 2;
        e.note = "e2 idempotent and acting as identity on e1 from the right";
        e.table[Key{0, 1, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> cor3_14_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "cor3.14/i";
        e.rank = 2;
        e.note = "split: diagonal 1(x)s_i, mixed products vanish";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.14/ii";
        e.rank = 2;
        e.note = "split with a shared vector on both diagonals";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.14/iii";
        e.rank = 2;
        e.note = "e_i acts by 1(x)s_i on everything; [s1,s2] = 0";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"),
                        c_bracket_zero("s1", "s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> cor3_16_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "cor3.16/i";
        e.rank = 2;
        e.note = "e1 idempotent, e2 with 1(x)s square, mixed products vanish";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.16/ii";
        e.rank = 2;
        e.note = "e1 idempotent; e2 acts by 1(x)s on e1 and itself";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.16/iii";
        e.rank = 2;
        e.note = "e1 acts as identity; e2*e1 adds 1(x)s on e1 to the identity on e2";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_const(Rat(1))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 0, 1}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s")};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> cor3_18_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "cor3.18/i";
        e.rank = 2;
        e.note = "split: 1(x)s1 and (1(x)s2 + 1) diagonals";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.18/ii";
        e.rank = 2;
        e.note = "e1 acts by 1(x)s1, e2 by 1(x)s2 with idempotent shift; [s1,s2] = 0";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"),
                        c_bracket_zero("s1", "s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.18/iii";
        e.rank = 2;
        e.note = "e1*e2 adds 1 on e1 to 1(x)s1 on e2; e2 acts by (1(x)s2 + 1); [s1,s2] = 0";
        e.vector_params = {"s1", "s2"};
        e.conditions = {c_vec_nonzero("s1"), c_vec_nonzero("s2"),
                        c_bracket_zero("s1", "s2")};
        e.table[Key{0, 0, 0}] = {t_right_vec("s1")};
        e.table[Key{0, 1, 0}] = {t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_right_vec("s1")};
        e.table[Key{1, 0, 0}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s2"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> cor3_20_entries() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.id = "cor3.20/i";
        e.rank = 2;
        e.note = "e1 idempotent, e2 with (1(x)s + 1) square, mixed products vanish";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.20/ii";
        e.rank = 2;
        e.note = "e1 idempotent; e2*e1 = 1(x)s on e1; e2 square (1(x)s + 1)";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor3.20/iii";
        e.rank = 2;
        e.note = "e1 acts as identity; e2*e1 adds 1(x)s on e1; e2 square (1(x)s + 1)";
        e.vector_params = {"s"};
        e.conditions = {c_vec_nonzero("s")};
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{0, 1, 1}] = {t_const(Rat(1))};
        e.table[Key{1, 0, 0}] = {t_right_vec("s")};
        e.table[Key{1, 0, 1}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_right_vec("s"), t_const(Rat(1))};
        e.axioms = {Axiom::LeftPreLie};
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank 2, associative
// ---------------------------------------------------------------------------

std::vector<CatalogEntry> sec4_entries() {
    std::vector<CatalogEntry> out;
    const std::vector<Axiom> all3 = {Axiom::Assoc, Axiom::LeftPreLie,
                                     Axiom::RightPreLie};
    {
        CatalogEntry e;
        e.id = "thm4.2";
        e.rank = 2;
        e.note = "both squares zero forces everything to vanish";
        e.axioms = all3;
        out.push_back(e);
    }

    // e1*e1 = 0, e2*e2 = 1(x)1 on e2; the four mixed-product patterns.
    for (int type = 1; type <= 4; ++type) {
        CatalogEntry e;
        e.id = "thm4.3/" + std::to_string(type);
        e.rank = 2;
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        if (type == 2 || type == 4) e.table[Key{1, 0, 0}] = {t_const(Rat(1))};
        if (type == 3 || type == 4) e.table[Key{0, 1, 0}] = {t_const(Rat(1))};
        switch (type) {
            case 1: e.note = "idempotent e2, mixed products vanish"; break;
            case 2: e.note = "idempotent e2 acting as left identity on e1"; break;
            case 3: e.note = "idempotent e2 acting as right identity on e1"; break;
            case 4: e.note = "idempotent e2 acting as two-sided identity on e1"; break;
        }
        e.axioms = all3;
        out.push_back(e);
    }

    auto thm4_4_base = [&](int type) {
        CatalogEntry e;
        e.id = "thm4.4/" + std::to_string(type);
        e.rank = 2;
        e.scalar_params = {"t1", "t2"};
        e.conditions = {c_scalar_nonzero("t1"), c_scalar_nonzero("t2")};
        e.table[Key{0, 0, 0}] = {t_scalar("t1")};
        e.table[Key{1, 1, 1}] = {t_scalar("t2")};
        e.axioms = all3;
        return e;
    };
    {
        CatalogEntry e = thm4_4_base(1);
        e.note = "mixed products vanish";
        out.push_back(e);
    }
    {
        CatalogEntry e = thm4_4_base(2);
        e.note = "both mixed products equal t2 on e1";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{1, 0, 0}] = {t_scalar("t2")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm4_4_base(3);
        e.note = "e1*e2 = t1 on e2, e2*e1 = t2 on e1";
        e.table[Key{0, 1, 1}] = {t_scalar("t1")};
        e.table[Key{1, 0, 0}] = {t_scalar("t2")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm4_4_base(4);
        e.note = "e1*e2 = t2 on e1, e2*e1 = t1 on e2";
        e.table[Key{0, 1, 0}] = {t_scalar("t2")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }
    {
        CatalogEntry e = thm4_4_base(5);
        e.note = "both mixed products equal t1 on e2";
        e.table[Key{0, 1, 1}] = {t_scalar("t1")};
        e.table[Key{1, 0, 1}] = {t_scalar("t1")};
        out.push_back(e);
    }

    {
        CatalogEntry e;
        e.id = "cor4.5/i";
        e.rank = 2;
        e.note = "two orthogonal idempotent generators";
        e.table[Key{0, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        e.axioms = all3;
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor4.5/ii";
        e.rank = 2;
        e.note = "idempotent e2 acting as left identity on e1";
        e.table[Key{1, 0, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        e.axioms = all3;
        out.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "cor4.5/iii";
        e.rank = 2;
        e.note = "idempotent e2 acting as right identity on e1";
        e.table[Key{0, 1, 0}] = {t_const(Rat(1))};
        e.table[Key{1, 1, 1}] = {t_const(Rat(1))};
        e.axioms = all3;
        out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> all;
    auto append = [&](std::vector<CatalogEntry> v) {
        for (auto& e : v) all.push_back(std::move(e));
    };
    all.push_back(prop2_2());
    all.push_back(prop2_3());
    all.push_back(cor2_4());
    append(thm3_6_entries());
    append(cor3_7_entries());
    append(thm3_8_entries());
    append(thm3_9_entries());
    all.push_back(thm3_10());
    append(thm3_11_entries());
    append(cor3_12_entries());
    append(thm3_13_entries());
    append(cor3_14_entries());
    append(thm3_15_entries());
    append(cor3_16_entries());
    append(thm3_17_entries());
    append(cor3_18_entries());
    append(thm3_19_entries());
    append(cor3_20_entries());
    all.push_back(thm4_1());
    append(sec4_entries());
    return all;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw UnknownId("no catalog entry named '" + id + "'");
}

}  // namespace psalg
