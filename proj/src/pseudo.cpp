#include "psalg/pseudo.hpp"

#include <algorithm>

#include "psalg/errors.hpp"

namespace psalg {

ProductTable::ProductTable(LiePtr l, int r) : lie(std::move(l)), rank(r) {
    if (r <= 0) throw MalformedInput("product table rank must be positive");
    alpha.assign(static_cast<size_t>(r) * r * r, T2(lie));
}

bool ProductTable::operator==(const ProductTable& o) const {
    if (rank != o.rank) return false;
    for (size_t i = 0; i < alpha.size(); ++i)
        if (!(alpha[i] == o.alpha[i])) return false;
    return true;
}

ModuleElement::ModuleElement(LiePtr l, int r) : lie(std::move(l)), rank(r), coords(static_cast<size_t>(r), UEl(lie)) {}

ModuleElement ModuleElement::generator(LiePtr l, int rank, int i) {
    ModuleElement e(l, rank);
    e.coords[static_cast<size_t>(i)] = UEl::one(l);
    return e;
}

bool ModuleElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const UEl& u) { return u.is_zero(); });
}

void PseudoEl2::add_term(const MultiIndex& I, const MultiIndex& J, int k, const Rat& c) {
    if (psalg::is_zero(c)) return;
    auto [it, fresh] = terms.try_emplace(Key{I, J, k}, c);
    if (!fresh) {
        it->second += c;
        if (psalg::is_zero(it->second)) terms.erase(it);
    }
}

PseudoEl2 PseudoEl2::operator-(const PseudoEl2& o) const {
    PseudoEl2 r(*this);
    for (const auto& [k, c] : o.terms) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return r;
}

bool PseudoEl2::operator==(const PseudoEl2& o) const { return terms == o.terms; }

void PseudoEl3::add_term(const MultiIndex& I1, const MultiIndex& I2, const MultiIndex& J, int k, const Rat& c) {
    if (psalg::is_zero(c)) return;
    auto [it, fresh] = terms.try_emplace(Key{I1, I2, J, k}, c);
    if (!fresh) {
        it->second += c;
        if (psalg::is_zero(it->second)) terms.erase(it);
    }
}

PseudoEl3 PseudoEl3::operator+(const PseudoEl3& o) const {
    PseudoEl3 r(*this);
    if (r.rank == 0) {
        r.lie = o.lie;
        r.rank = o.rank;
    }
    for (const auto& [k, c] : o.terms) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), c);
    return r;
}

PseudoEl3 PseudoEl3::operator-(const PseudoEl3& o) const {
    PseudoEl3 r(*this);
    if (r.rank == 0) {
        r.lie = o.lie;
        r.rank = o.rank;
    }
    for (const auto& [k, c] : o.terms) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), -c);
    return r;
}

bool PseudoEl3::operator==(const PseudoEl3& o) const { return terms == o.terms; }

PseudoEl2 normalize2(const std::vector<std::pair<T2, ModuleElement>>& raw) {
    PseudoEl2 out;
    for (const auto& [beta, a] : raw) {
        if (out.rank == 0) {
            out.lie = a.lie;
            out.rank = a.rank;
        }
        // (f (x) g) (x)_H a = sum over splits of g:
        //   (f S(g_(1)) (x) 1) (x)_H g_(2) a
        for (const auto& [key, c] : beta.terms)
            for (const auto& [J1, J2] : coproduct_splits(key.second))
                for (const auto& [S1, sc] : antipode_monomial(beta.lie, J1))
                    for (const auto& [I, mc] : mul_monomials(beta.lie, key.first, S1)) {
                        Rat c1 = c * sc * mc;
                        for (int k = 0; k < a.rank; ++k) {
                            const UEl& u = a.coords[static_cast<size_t>(k)];
                            if (u.is_zero()) continue;
                            for (const auto& [Ju, cu] : u.terms())
                                for (const auto& [J, mj] : mul_monomials(beta.lie, J2, Ju))
                                    out.add_term(I, J, k, c1 * cu * mj);
                        }
                    }
    }
    return out;
}

PseudoEl3 normalize3(const std::vector<std::pair<T3, ModuleElement>>& raw) {
    PseudoEl3 out;
    for (const auto& [gamma, a] : raw) {
        if (out.rank == 0) {
            out.lie = a.lie;
            out.rank = a.rank;
        }
        // (f (x) g (x) z) (x)_H a = sum over 3-splits of z:
        //   (f S(z_(1)) (x) g S(z_(2)) (x) 1) (x)_H z_(3) a
        for (const auto& [key, c] : gamma.terms)
            for (const auto& [A, B, C] : coproduct_splits3(key[2]))
                for (const auto& [SA, sa] : antipode_monomial(gamma.lie, A))
                    for (const auto& [I1, m1] : mul_monomials(gamma.lie, key[0], SA))
                        for (const auto& [SB, sb] : antipode_monomial(gamma.lie, B))
                            for (const auto& [I2, m2] : mul_monomials(gamma.lie, key[1], SB)) {
                                Rat c1 = c * sa * m1 * sb * m2;
                                for (int k = 0; k < a.rank; ++k) {
                                    const UEl& u = a.coords[static_cast<size_t>(k)];
                                    if (u.is_zero()) continue;
                                    for (const auto& [Ju, cu] : u.terms())
                                        for (const auto& [J, mj] : mul_monomials(gamma.lie, C, Ju))
                                            out.add_term(I1, I2, J, k, c1 * cu * mj);
                                }
                            }
    }
    return out;
}

PseudoEl2 pseudo_product(const ModuleElement& x, const ModuleElement& y, const ProductTable& T) {
    if (x.rank != T.rank || y.rank != T.rank) throw MalformedInput("module element rank does not match table");
    if (!same_ambient(x.lie, T.lie) || !same_ambient(y.lie, T.lie))
        throw AmbientMismatch("module elements and table live over different Lie algebras");
    std::vector<std::pair<T2, ModuleElement>> raw;
    for (int i = 0; i < T.rank; ++i) {
        const UEl& f = x.coords[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        for (int j = 0; j < T.rank; ++j) {
            const UEl& g = y.coords[static_cast<size_t>(j)];
            if (g.is_zero()) continue;
            T2 fg = t2_outer(f, g);
            for (int k = 0; k < T.rank; ++k) {
                const T2& a = T.entry(i, j, k);
                if (a.is_zero()) continue;
                ModuleElement ek = ModuleElement::generator(T.lie, T.rank, k);
                raw.emplace_back(t_mul(fg, a), std::move(ek));
            }
        }
    }
    PseudoEl2 out = normalize2(raw);
    if (out.rank == 0) {
        out.lie = T.lie;
        out.rank = T.rank;
    }
    return out;
}

namespace {

// x * (d^(J) e_k) and (d^(J) e_k) * z appear once per distinct (J, k) during
// composition; a small local cache keeps the inner products shared.
struct InnerCache {
    const ProductTable& T;
    std::map<std::pair<MultiIndex, int>, PseudoEl2> left_by, right_by;

    const PseudoEl2& left(const ModuleElement& x, const MultiIndex& J, int k) {
        auto it = left_by.find({J, k});
        if (it != left_by.end()) return it->second;
        ModuleElement c(T.lie, T.rank);
        c.coords[static_cast<size_t>(k)] = UEl(T.lie, J, Rat(1));
        return left_by.emplace(std::pair{J, k}, pseudo_product(x, c, T)).first->second;
    }
    const PseudoEl2& right(const ModuleElement& z, const MultiIndex& J, int k) {
        auto it = right_by.find({J, k});
        if (it != right_by.end()) return it->second;
        ModuleElement c(T.lie, T.rank);
        c.coords[static_cast<size_t>(k)] = UEl(T.lie, J, Rat(1));
        return right_by.emplace(std::pair{J, k}, pseudo_product(c, z, T)).first->second;
    }
};

}  // namespace

PseudoEl3 compose(const ModuleElement& x, const ModuleElement& y, const ModuleElement& z,
                  const ProductTable& T, CompositionSide side) {
    PseudoEl3 out(T.lie, T.rank);
    InnerCache cache{T, {}, {}};
    if (side == CompositionSide::Left) {
        // (x*y)*z: x*y = sum (d^(I) (x) 1) (x)_H d^(J) e_k, then
        // ((d^(I) (x) 1) (x)_H c) * z = (d^(I) (x) 1 (x) 1)(Delta (x) id)(c*z).
        PseudoEl2 xy = pseudo_product(x, y, T);
        for (const auto& [key, q] : xy.terms) {
            const auto& [I, J, k] = key;
            const PseudoEl2& cz = cache.right(z, J, k);
            for (const auto& [key2, p] : cz.terms) {
                const auto& [A, B, m] = key2;
                for (const auto& [A1, A2] : coproduct_splits(A))
                    for (const auto& [U, mu] : mul_monomials(T.lie, I, A1))
                        out.add_term(U, A2, B, m, q * p * mu);
            }
        }
    } else {
        // x*(y*z): y*z = sum (d^(A) (x) 1) (x)_H d^(B) e_m, then
        // x * ((d^(A) (x) 1) (x)_H c) = (1 (x) d^(A) (x) 1)(id (x) Delta)(x*c),
        // and (id (x) Delta) leaves the canonical form's unit slot alone.
        PseudoEl2 yz = pseudo_product(y, z, T);
        for (const auto& [key, q] : yz.terms) {
            const auto& [A, B, m] = key;
            const PseudoEl2& xc = cache.left(x, B, m);
            for (const auto& [key2, p] : xc.terms) {
                const auto& [C, D, r] = key2;
                out.add_term(C, A, D, r, q * p);
            }
        }
    }
    return out;
}

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Assoc: return "assoc";
        case Axiom::LeftPreLie: return "left-prelie";
        case Axiom::RightPreLie: return "right-prelie";
    }
    return "?";
}

namespace {

PseudoEl3 assoc_defect(const ModuleElement& x, const ModuleElement& y, const ModuleElement& z,
                       const ProductTable& T) {
    return compose(x, y, z, T, CompositionSide::Left) - compose(x, y, z, T, CompositionSide::Right);
}

// Applies the permutation to the H^(x)3 part of each canonical term and
// brings the result back to canonical form. (12) preserves the unit in the
// last slot; (23) moves it, so renormalization does real work there.
PseudoEl3 permute_and_normalize(const PseudoEl3& v, Perm3 p) {
    std::vector<std::pair<T3, ModuleElement>> raw;
    raw.reserve(v.terms.size());
    for (const auto& [key, c] : v.terms) {
        const auto& [I1, I2, J, k] = key;
        MultiIndex z(I1.size(), 0);
        T3 gamma(v.lie);
        if (p == Perm3::Swap12)
            gamma.add_term(I2, I1, z, c);
        else
            gamma.add_term(I1, z, I2, c);
        ModuleElement a(v.lie, v.rank);
        a.coords[static_cast<size_t>(k)] = UEl(v.lie, J, Rat(1));
        raw.emplace_back(std::move(gamma), std::move(a));
    }
    PseudoEl3 out = normalize3(raw);
    if (out.rank == 0) {
        out.lie = v.lie;
        out.rank = v.rank;
    }
    return out;
}

}  // namespace

PseudoEl3 defect(const ModuleElement& x, const ModuleElement& y, const ModuleElement& z,
                 const ProductTable& T, Axiom axiom) {
    PseudoEl3 A = assoc_defect(x, y, z, T);
    switch (axiom) {
        case Axiom::Assoc:
            return A;
        case Axiom::LeftPreLie:
            return A - permute_and_normalize(assoc_defect(y, x, z, T), Perm3::Swap12);
        case Axiom::RightPreLie:
            return A - permute_and_normalize(assoc_defect(x, z, y, T), Perm3::Swap23);
    }
    return A;
}

AxiomReport check_axiom(const ProductTable& T, Axiom axiom) {
    AxiomReport rep;
    rep.axiom = axiom;
    rep.pass = true;
    for (int i = 0; i < T.rank; ++i)
        for (int j = 0; j < T.rank; ++j)
            for (int k = 0; k < T.rank; ++k) {
                ModuleElement x = ModuleElement::generator(T.lie, T.rank, i);
                ModuleElement y = ModuleElement::generator(T.lie, T.rank, j);
                ModuleElement z = ModuleElement::generator(T.lie, T.rank, k);
                PseudoEl3 d = defect(x, y, z, T, axiom);
                if (!d.is_zero()) {
                    rep.pass = false;
                    rep.failures.push_back({i, j, k, std::move(d)});
                }
            }
    return rep;
}

}  // namespace psalg
