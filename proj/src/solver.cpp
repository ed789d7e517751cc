#include "psalg/solver.hpp"

#include <cstdint>
#include <random>

#include "psalg/errors.hpp"

namespace psalg {

namespace {

const std::vector<std::pair<std::string, EquationId>>& id_table() {
    static const std::vector<std::pair<std::string, EquationId>> table = {
        {"eq2.1", EquationId::Eq2_1},   {"eq2.2", EquationId::Eq2_2},
        {"eq3.1", EquationId::Eq3_1},   {"eq3.2", EquationId::Eq3_2},
        {"eq3.7", EquationId::Eq3_7},   {"eq3.8", EquationId::Eq3_8},
        {"eq3.9", EquationId::Eq3_9},   {"eq3.10", EquationId::Eq3_10},
        {"eq4.1", EquationId::Eq4_1},
    };
    return table;
}

UEl s_of(const LiePtr& lie, const EqParams& p) {
    if (p.s.empty()) return UEl(lie);
    return UEl::from_delta(lie, p.s);
}

// (a (x) 1) (Delta (x) id) b
T3 compose_left(const T2& a, const T2& b) {
    return t_mul(lift(a, LiftMode::PadRight), lift(b, LiftMode::DeltaLeft));
}

// (1 (x) a) (id (x) Delta) b
T3 compose_right(const T2& a, const T2& b) {
    return t_mul(lift(a, LiftMode::PadLeft), lift(b, LiftMode::DeltaRight));
}

// alpha of the form g (x) 1; anything else is outside eq3.10's unknown space.
UEl extract_g(const T2& alpha) {
    UEl g(alpha.lie);
    const MultiIndex zero = zero_index(static_cast<int>(alpha.lie->dim()));
    for (const auto& [key, c] : alpha.terms) {
        if (key.second != zero)
            throw MalformedInput("eq3.10 takes an unknown of the form g (x) 1");
        g.add_term(key.first, c);
    }
    return g;
}

}  // namespace

EquationId parse_equation_id(const std::string& s) {
    for (const auto& [name, id] : id_table())
        if (name == s) return id;
    throw UnknownId("no equation named '" + s + "'");
}

std::string equation_id_name(EquationId id) {
    for (const auto& [name, tid] : id_table())
        if (tid == id) return name;
    throw UnknownId("unmapped equation id");
}

const std::vector<std::string>& equation_id_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, id] : id_table()) v.push_back(name);
        return v;
    }();
    return names;
}

T2 residual_reduced_g(const UEl& g, const EqParams& p) {
    const LiePtr& lie = g.lie();
    if (!lie) throw MalformedInput("residual needs an ambient Lie algebra");
    UEl s = s_of(lie, p);
    T2 action = one_tensor(s) + t2_unit(lie) * p.t;  // 1 (x) s + t
    return t2_outer(g, g) - t_mul(action, coproduct(g)) + one_tensor(g * s);
}

T3 residual(EquationId id, const T2& alpha, const EqParams& p) {
    const LiePtr& lie = alpha.lie;
    if (!lie) throw MalformedInput("residual needs an ambient Lie algebra");
    const UEl one = UEl::one(lie);
    const UEl s = s_of(lie, p);

    switch (id) {
        case EquationId::Eq2_1: {
            T3 x = compose_left(alpha, alpha) - compose_right(alpha, alpha);
            return x - swap_slots(x, Perm3::Swap12);
        }
        case EquationId::Eq2_2: {
            T3 x = compose_left(alpha, alpha) - compose_right(alpha, alpha);
            return x - swap_slots(x, Perm3::Swap23);
        }
        case EquationId::Eq3_1: {
            T3 y = compose_right(alpha, alpha);
            return y - swap_slots(y, Perm3::Swap12);
        }
        case EquationId::Eq3_2: {
            // (1 (x) s (x) 1 + t)
            T3 c = t3_outer(one, s, one) + t3_unit(lie) * p.t;
            T3 z = t_mul(c, lift(alpha, LiftMode::DeltaLeft)) - compose_right(alpha, alpha);
            return z - swap_slots(z, Perm3::Swap12);
        }
        case EquationId::Eq3_7: {
            // (1 (x) 1 (x) s + t)
            T3 d = t3_outer(one, one, s) + t3_unit(lie) * p.t;
            return compose_left(alpha, alpha) - t_mul(d, lift(alpha, LiftMode::DeltaRight));
        }
        case EquationId::Eq3_8: {
            T3 c = t3_outer(one, s, one) + t3_unit(lie) * p.t;
            T2 rhs = one_tensor(s) + t2_unit(lie) * p.t;  // 1 (x) s + t
            T3 w = t_mul(c, lift(alpha, LiftMode::DeltaLeft)) -
                   t_mul(lift(alpha, LiftMode::PadLeft), lift(rhs, LiftMode::DeltaRight));
            return w - swap_slots(w, Perm3::Swap12);
        }
        case EquationId::Eq3_9: {
            T3 d = t3_outer(one, one, s) + t3_unit(lie) * p.t;
            T3 f1 = compose_left(alpha, alpha) - t_mul(d, lift(alpha, LiftMode::DeltaRight));
            // (1 (x) s (x) 1 + l s (x) 1 (x) 1 + k)
            T3 e = t3_outer(one, s, one) + t3_outer(s, one, one) * p.l + t3_unit(lie) * p.k;
            T2 rhs = one_tensor(s) + tensor_one(s) * p.l + t2_unit(lie) * p.k;
            T3 f2 = t_mul(e, lift(alpha, LiftMode::DeltaLeft)) -
                    t_mul(lift(alpha, LiftMode::PadLeft), lift(rhs, LiftMode::DeltaRight));
            return f1 - swap_slots(f2, Perm3::Swap12);
        }
        case EquationId::Eq3_10:
            return lift(residual_reduced_g(extract_g(alpha), p), LiftMode::PadRight);
        case EquationId::Eq4_1:
            return compose_left(alpha, alpha) - compose_right(alpha, alpha);
    }
    throw UnknownId("unmapped equation id");
}

namespace {

// All multi-indices of weight <= budget in lexicographic order.
void enumerate_rec(int dim, uint32_t budget, size_t pos, MultiIndex& cur,
                   std::vector<MultiIndex>& out) {
    if (pos == static_cast<size_t>(dim)) {
        out.push_back(cur);
        return;
    }
    for (uint32_t v = 0; v <= budget; ++v) {
        cur[pos] = v;
        enumerate_rec(dim, budget - v, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

std::vector<MultiIndex> indices_up_to(int dim, uint32_t budget) {
    std::vector<MultiIndex> out;
    MultiIndex cur(dim, 0);
    enumerate_rec(dim, budget, 0, cur, out);
    return out;
}

T2 random_probe(EquationId id, const LiePtr& lie, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(1, 4);
    const int dim = static_cast<int>(lie->dim());
    const MultiIndex zero = zero_index(dim);

    std::vector<MultiIndex> pool = {zero};
    for (int k = 0; k < dim; ++k) pool.push_back(unit_index(dim, k));
    if (dim > 0) {
        std::uniform_int_distribution<int> pick(0, dim - 1);
        MultiIndex sq = zero;
        sq[pick(rng)] += 2;
        pool.push_back(sq);
        if (dim > 1) pool.push_back(add(unit_index(dim, 0), unit_index(dim, 1)));
    }

    std::uniform_int_distribution<size_t> slot(0, pool.size() - 1);
    T2 probe(lie);
    for (int n = 0; n < 3; ++n) {
        const MultiIndex& left = pool[slot(rng)];
        // eq3.10 unknowns live in the g (x) 1 slice
        const MultiIndex& right = (id == EquationId::Eq3_10) ? zero : pool[slot(rng)];
        probe.add_term(left, right, Rat(coef(rng)));
    }
    return probe;
}

}  // namespace

NullspaceResult linear_nullspace(EquationId id, const EqParams& p, const LiePtr& lie,
                                 int max_degree, bool parallel) {
    if (!lie) throw MalformedInput("nullspace needs an ambient Lie algebra");
    if (max_degree < 0)
        throw EmptyBasisDomain("degree bound " + std::to_string(max_degree) +
                               " admits no basis monomials");

    // Probe for linearity: the residual must vanish at 0 and be additive.
    std::mt19937 rng(20240815u);
    if (!residual(id, t2_zero(lie), p).is_zero())
        throw NotLinear(equation_id_name(id) + ": residual at 0 is nonzero");
    for (int round = 0; round < 3; ++round) {
        T2 a = random_probe(id, lie, rng);
        T2 b = random_probe(id, lie, rng);
        T3 cross = residual(id, a + b, p) - residual(id, a, p) - residual(id, b, p) +
                   residual(id, t2_zero(lie), p);
        if (!cross.is_zero())
            throw NotLinear(equation_id_name(id) + ": residual is not additive in the unknown");
    }

    // Unknowns: monomial pairs (I, J) with |I| + |J| <= D, lexicographic.
    const int dim = static_cast<int>(lie->dim());
    const uint32_t budget = static_cast<uint32_t>(max_degree);
    std::vector<std::pair<MultiIndex, MultiIndex>> unknowns;
    for (const MultiIndex& I : indices_up_to(dim, budget)) {
        const uint32_t left = budget - weight(I);
        if (id == EquationId::Eq3_10) {
            unknowns.emplace_back(I, zero_index(dim));
            continue;
        }
        for (const MultiIndex& J : indices_up_to(dim, left)) unknowns.emplace_back(I, J);
    }

    const size_t n = unknowns.size();
    std::vector<T3> columns(n, T3(lie));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
        T2 unit(lie);
        unit.add_term(unknowns[j].first, unknowns[j].second, Rat(1));
        columns[j] = residual(id, unit, p);
    }
    (void)parallel;

    std::map<T3::Key, size_t> row_of;
    for (const T3& col : columns)
        for (const auto& [key, c] : col.terms) row_of.emplace(key, 0);
    size_t m = 0;
    for (auto& [key, r] : row_of) r = m++;

    std::vector<std::vector<Rat>> matrix(m, std::vector<Rat>(n, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (const auto& [key, c] : columns[j].terms) matrix[row_of.at(key)][j] = c;

    NullspaceResult result;
    result.id = id;
    result.max_degree = max_degree;
    result.unknowns = n;
    for (const std::vector<Rat>& v : rational_kernel(std::move(matrix), n)) {
        T2 elem(lie);
        for (size_t j = 0; j < n; ++j)
            if (v[j] != 0) elem.add_term(unknowns[j].first, unknowns[j].second, v[j]);
        result.basis.push_back(std::move(elem));
    }
    return result;
}

std::vector<std::vector<Rat>> rational_kernel(std::vector<std::vector<Rat>> rows, size_t cols) {
    for (const auto& r : rows)
        if (r.size() != cols) throw MalformedInput("kernel of a ragged matrix");

    const size_t m = rows.size();
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < m; ++c) {
        size_t sel = rank;
        while (sel < m && rows[sel][c] == 0) ++sel;
        if (sel == m) continue;
        std::swap(rows[rank], rows[sel]);
        const Rat inv = Rat(1) / rows[rank][c];
        for (size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rat f = rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = Rat(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace psalg
