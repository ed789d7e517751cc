#include "psalg/tensor.hpp"

#include <algorithm>

#include "psalg/errors.hpp"

namespace psalg {

namespace {

LiePtr merge_ambient(const LiePtr& a, const LiePtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_ambient(a, b)) throw AmbientMismatch("tensor operands live over different Lie algebras");
    return a;
}

}  // namespace

void T2::add_term(const MultiIndex& I, const MultiIndex& J, const Rat& c) {
    if (psalg::is_zero(c)) return;
    auto [it, fresh] = terms.try_emplace(Key{I, J}, c);
    if (!fresh) {
        it->second += c;
        if (psalg::is_zero(it->second)) terms.erase(it);
    }
}

T2 T2::operator+(const T2& o) const {
    T2 r(merge_ambient(lie, o.lie));
    r.terms = terms;
    for (const auto& [k, c] : o.terms) r.add_term(k.first, k.second, c);
    return r;
}

T2 T2::operator-(const T2& o) const {
    T2 r(merge_ambient(lie, o.lie));
    r.terms = terms;
    for (const auto& [k, c] : o.terms) r.add_term(k.first, k.second, -c);
    return r;
}

T2 T2::operator*(const Rat& c) const {
    T2 r(lie);
    if (psalg::is_zero(c)) return r;
    for (const auto& [k, v] : terms) r.terms.emplace(k, v * c);
    return r;
}

bool T2::operator==(const T2& o) const { return terms == o.terms; }

uint32_t T2::degree() const {
    uint32_t d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, weight(k.first) + weight(k.second));
    return d;
}

void T3::add_term(const MultiIndex& I, const MultiIndex& J, const MultiIndex& K, const Rat& c) {
    if (psalg::is_zero(c)) return;
    auto [it, fresh] = terms.try_emplace(Key{I, J, K}, c);
    if (!fresh) {
        it->second += c;
        if (psalg::is_zero(it->second)) terms.erase(it);
    }
}

T3 T3::operator+(const T3& o) const {
    T3 r(merge_ambient(lie, o.lie));
    r.terms = terms;
    for (const auto& [k, c] : o.terms) r.add_term(k[0], k[1], k[2], c);
    return r;
}

T3 T3::operator-(const T3& o) const {
    T3 r(merge_ambient(lie, o.lie));
    r.terms = terms;
    for (const auto& [k, c] : o.terms) r.add_term(k[0], k[1], k[2], -c);
    return r;
}

T3 T3::operator*(const Rat& c) const {
    T3 r(lie);
    if (psalg::is_zero(c)) return r;
    for (const auto& [k, v] : terms) r.terms.emplace(k, v * c);
    return r;
}

bool T3::operator==(const T3& o) const { return terms == o.terms; }

T2 t2_zero(LiePtr lie) { return T2(std::move(lie)); }

T2 t2_unit(LiePtr lie) {
    T2 r(lie);
    r.add_term(zero_index(lie->dim()), zero_index(lie->dim()), Rat(1));
    return r;
}

T2 t2_outer(const UEl& f, const UEl& g) {
    T2 r(merge_ambient(f.lie(), g.lie()));
    for (const auto& [I, a] : f.terms())
        for (const auto& [J, b] : g.terms()) r.add_term(I, J, a * b);
    return r;
}

T2 one_tensor(const UEl& g) { return t2_outer(UEl::one(g.lie()), g); }

T2 tensor_one(const UEl& f) { return t2_outer(f, UEl::one(f.lie())); }

T3 t3_zero(LiePtr lie) { return T3(std::move(lie)); }

T3 t3_unit(LiePtr lie) {
    T3 r(lie);
    MultiIndex z = zero_index(lie->dim());
    r.add_term(z, z, z, Rat(1));
    return r;
}

T3 t3_outer(const UEl& f, const UEl& g, const UEl& h) {
    T3 r(merge_ambient(merge_ambient(f.lie(), g.lie()), h.lie()));
    for (const auto& [I, a] : f.terms())
        for (const auto& [J, b] : g.terms())
            for (const auto& [K, c] : h.terms()) r.add_term(I, J, K, a * b * c);
    return r;
}

T2 t_mul(const T2& a, const T2& b) {
    T2 r(merge_ambient(a.lie, b.lie));
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            auto left = mul_monomials(r.lie, ka.first, kb.first);
            auto right = mul_monomials(r.lie, ka.second, kb.second);
            Rat c = ca * cb;
            for (const auto& [I, x] : left)
                for (const auto& [J, y] : right) r.add_term(I, J, c * x * y);
        }
    return r;
}

T3 t_mul(const T3& a, const T3& b) {
    T3 r(merge_ambient(a.lie, b.lie));
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            auto s0 = mul_monomials(r.lie, ka[0], kb[0]);
            auto s1 = mul_monomials(r.lie, ka[1], kb[1]);
            auto s2 = mul_monomials(r.lie, ka[2], kb[2]);
            Rat c = ca * cb;
            for (const auto& [I, x] : s0)
                for (const auto& [J, y] : s1)
                    for (const auto& [K, z] : s2) r.add_term(I, J, K, c * x * y * z);
        }
    return r;
}

T2 coproduct(const UEl& u) {
    T2 r(u.lie());
    for (const auto& [I, c] : u.terms())
        for (const auto& [J, K] : coproduct_splits(I)) r.add_term(J, K, c);
    return r;
}

T3 lift(const T2& a, LiftMode mode) {
    T3 r(a.lie);
    for (const auto& [k, c] : a.terms) {
        MultiIndex z(k.first.size(), 0);
        switch (mode) {
            case LiftMode::DeltaLeft:
                for (const auto& [A, B] : coproduct_splits(k.first)) r.add_term(A, B, k.second, c);
                break;
            case LiftMode::DeltaRight:
                for (const auto& [A, B] : coproduct_splits(k.second)) r.add_term(k.first, A, B, c);
                break;
            case LiftMode::PadRight:
                r.add_term(k.first, k.second, z, c);
                break;
            case LiftMode::PadLeft:
                r.add_term(z, k.first, k.second, c);
                break;
        }
    }
    return r;
}

T2 swap_slots(const T2& a) {
    T2 r(a.lie);
    for (const auto& [k, c] : a.terms) r.add_term(k.second, k.first, c);
    return r;
}

T3 swap_slots(const T3& a, Perm3 p) {
    T3 r(a.lie);
    for (const auto& [k, c] : a.terms) {
        if (p == Perm3::Swap12)
            r.add_term(k[1], k[0], k[2], c);
        else
            r.add_term(k[0], k[2], k[1], c);
    }
    return r;
}

T2 fourier(const T2& a) {
    T2 r(a.lie);
    for (const auto& [k, c] : a.terms)
        for (const auto& [J1, J2] : coproduct_splits(k.second)) {
            // f S(g_(1)) (x) g_(2)
            for (const auto& [S1, sc] : antipode_monomial(r.lie, J1))
                for (const auto& [I, mc] : mul_monomials(r.lie, k.first, S1)) r.add_term(I, J2, c * sc * mc);
        }
    return r;
}

T2 fourier_inverse(const T2& a) {
    T2 r(a.lie);
    for (const auto& [k, c] : a.terms)
        for (const auto& [J1, J2] : coproduct_splits(k.second))
            for (const auto& [I, mc] : mul_monomials(r.lie, k.first, J1)) r.add_term(I, J2, c * mc);
    return r;
}

GaloisForm galois_decompose(const T2& beta) {
    // f (x) g = sum over splits of g: (f S(g_(1)) (x) 1) Delta(g_(2)); collect
    // the H (x) k part by monomial and merge the Delta arguments.
    std::map<MultiIndex, UEl> acc;
    for (const auto& [k, c] : beta.terms)
        for (const auto& [J1, J2] : coproduct_splits(k.second))
            for (const auto& [S1, sc] : antipode_monomial(beta.lie, J1))
                for (const auto& [I, mc] : mul_monomials(beta.lie, k.first, S1))
                    acc.try_emplace(I, UEl(beta.lie)).first->second.add_term(J2, c * sc * mc);
    GaloisForm gf{beta.lie, {}};
    for (auto& [h, l] : acc)
        if (!l.is_zero()) gf.pairs.emplace_back(h, std::move(l));
    return gf;
}

T2 galois_recompose(const GaloisForm& gf) {
    T2 r(gf.lie);
    for (const auto& [h, l] : gf.pairs) {
        T2 part = t_mul(tensor_one(UEl(gf.lie, h, Rat(1))), coproduct(l));
        r = r + part;
    }
    return r;
}

}  // namespace psalg
