#include "psalg/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "psalg/errors.hpp"

namespace psalg {

namespace {

const Rat& find_scalar(const Params& p, const std::string& name) {
    auto it = p.scalars.find(name);
    if (it == p.scalars.end()) throw MalformedInput("missing scalar parameter '" + name + "'");
    return it->second;
}

const DeltaVector& find_vector(const Params& p, const std::string& name) {
    auto it = p.vectors.find(name);
    if (it == p.vectors.end()) throw MalformedInput("missing vector parameter '" + name + "'");
    return it->second;
}

const UEl& find_element(const Params& p, const std::string& name) {
    auto it = p.elements.find(name);
    if (it == p.elements.end()) throw MalformedInput("missing element parameter '" + name + "'");
    return it->second;
}

UEl resolve_factor(const FactorSpec& f, const Params& p, const LiePtr& lie) {
    switch (f.kind) {
        case FactorSpec::Kind::One: return UEl::one(lie);
        case FactorSpec::Kind::Vector: return UEl::from_delta(lie, find_vector(p, f.name));
        case FactorSpec::Kind::Element: return find_element(p, f.name);
    }
    throw MalformedInput("bad factor spec");
}

std::string scaled_vec(const Rat& a, const std::string& scalar, const std::string& vec) {
    std::string out;
    if (a != 1) out += rat_to_string(a) + "*";
    out += scalar + "*" + vec;
    return out;
}

}  // namespace

std::string SideCondition::describe() const {
    switch (kind) {
        case Kind::ScalarVecEq:
            return scaled_vec(a, lscalar, lvec) + " == " + scaled_vec(b, rscalar, rvec);
        case Kind::ScalarVecNonzero:
            return lscalar + "*" + lvec + " != 0";
        case Kind::BracketZero:
            return "[" + lvec + "," + rvec + "] == 0";
        case Kind::VecProportional:
            return lvec + " == " + scale + "*" + rvec;
        case Kind::VecNonzero:
            return lvec + " != 0";
        case Kind::ScalarNonzero:
            return lscalar + " != 0";
    }
    return "?";
}

bool SideCondition::holds(const Params& p, const LiePtr& lie) const {
    switch (kind) {
        case Kind::ScalarVecEq: {
            DeltaVector l = psalg::scale(a * find_scalar(p, lscalar), find_vector(p, lvec));
            DeltaVector r = psalg::scale(b * find_scalar(p, rscalar), find_vector(p, rvec));
            return psalg::is_zero(sub(l, r));
        }
        case Kind::ScalarVecNonzero:
            return !psalg::is_zero(psalg::scale(find_scalar(p, lscalar), find_vector(p, lvec)));
        case Kind::BracketZero:
            return psalg::is_zero(lie->bracket(find_vector(p, lvec), find_vector(p, rvec)));
        case Kind::VecProportional:
            return psalg::is_zero(sub(find_vector(p, lvec), psalg::scale(find_scalar(p, scale), find_vector(p, rvec))));
        case Kind::VecNonzero:
            return !psalg::is_zero(find_vector(p, lvec));
        case Kind::ScalarNonzero:
            return !psalg::is_zero(find_scalar(p, lscalar));
    }
    return false;
}

Instantiated instantiate(const CatalogEntry& entry, const Params& p, const LiePtr& lie) {
    Instantiated out;
    out.table = ProductTable(lie, entry.rank);
    for (const auto& [pos, spec] : entry.table) {
        const auto& [i, j, k] = pos;
        T2 acc(lie);
        for (const TermSpec& t : spec) {
            if (!t.gate_param.empty()) {
                auto it = p.choices.find(t.gate_param);
                if (it == p.choices.end()) throw MalformedInput("missing choice parameter '" + t.gate_param + "'");
                if (it->second != t.gate_value) continue;
            }
            Rat c = t.c;
            if (!t.scale.empty()) c *= find_scalar(p, t.scale);
            if (psalg::is_zero(c)) continue;
            acc = acc + t2_outer(resolve_factor(t.left, p, lie), resolve_factor(t.right, p, lie)) * c;
        }
        out.table.entry(i, j, k) = std::move(acc);
    }
    for (const auto& cond : entry.conditions) {
        bool h = cond.holds(p, lie);
        out.conditions.push_back({cond.describe(), h});
        out.all_conditions_hold = out.all_conditions_hold && h;
    }
    return out;
}

ProductTable current_table(const LiePtr& lie, int d, const std::vector<std::vector<std::vector<Rat>>>& m) {
    if (d <= 0 || static_cast<int>(m.size()) != d) throw MalformedInput("current(): bad multiplication table shape");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != d) throw MalformedInput("current(): bad multiplication table shape");
    // Left-symmetry of (A, o): (a o b) o c - a o (b o c) is symmetric in a, b.
    // On structure constants, for all basis triples (i, j, r) and outputs l:
    //   sum_q m[i][j][q] m[q][r][l] - m[j][r][q] m[i][q][l]
    // must be symmetric under i <-> j.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int r = 0; r < d; ++r)
                for (int l = 0; l < d; ++l) {
                    Rat lhs(0), rhs(0);
                    for (int q = 0; q < d; ++q) {
                        lhs += m[i][j][q] * m[q][r][l] - m[j][r][q] * m[i][q][l];
                        rhs += m[j][i][q] * m[q][r][l] - m[i][r][q] * m[j][q][l];
                    }
                    if (lhs != rhs)
                        throw NotPreLie("multiplication table is not left-symmetric at (" + std::to_string(i) +
                                        "," + std::to_string(j) + "," + std::to_string(r) + ")");
                }
    ProductTable T(lie, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (!psalg::is_zero(m[i][j][k])) T.entry(i, j, k) = t2_unit(lie) * m[i][j][k];
    return T;
}

namespace {

bool is_identity(const std::vector<std::vector<UEl>>& M, const LiePtr& lie) {
    const size_t n = M.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const UEl expect = (i == j) ? UEl::one(lie) : UEl(lie);
            if (!(M[i][j] == expect)) return false;
        }
    return true;
}

std::vector<std::vector<UEl>> mat_mul(const std::vector<std::vector<UEl>>& A,
                                      const std::vector<std::vector<UEl>>& B, const LiePtr& lie) {
    const size_t n = A.size();
    std::vector<std::vector<UEl>> C(n, std::vector<UEl>(n, UEl(lie)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t q = 0; q < n; ++q) C[i][j] = C[i][j] + A[i][q] * B[q][j];
    return C;
}

}  // namespace

ProductTable transform(const ProductTable& T, const BasisChange& B) {
    if (B.rank != T.rank) throw MalformedInput("basis change rank does not match table");
    if (!same_ambient(B.lie, T.lie)) throw AmbientMismatch("basis change over a different Lie algebra");
    if (!is_identity(mat_mul(B.P, B.Pinv, T.lie), T.lie) || !is_identity(mat_mul(B.Pinv, B.P, T.lie), T.lie))
        throw NonInvertible("P and Pinv are not two-sided inverses over H");

    // e'_i = sum_a P[i][a] e_a, e_m = sum_k Pinv[m][k] e'_k, so
    // alpha'[i][j][k] = sum_{a,b,m} (P[i][a] (x) P[j][b]) alpha[a][b][m] Delta(Pinv[m][k]);
    // the Delta factor moves the leftover H coefficient through (x)_H.
    ProductTable out(T.lie, T.rank);
    for (int i = 0; i < T.rank; ++i)
        for (int j = 0; j < T.rank; ++j)
            for (int a = 0; a < T.rank; ++a) {
                const UEl& pia = B.P[static_cast<size_t>(i)][static_cast<size_t>(a)];
                if (pia.is_zero()) continue;
                for (int b = 0; b < T.rank; ++b) {
                    const UEl& pjb = B.P[static_cast<size_t>(j)][static_cast<size_t>(b)];
                    if (pjb.is_zero()) continue;
                    T2 pp = t2_outer(pia, pjb);
                    for (int m = 0; m < T.rank; ++m) {
                        const T2& al = T.entry(a, b, m);
                        if (al.is_zero()) continue;
                        T2 base = t_mul(pp, al);
                        for (int k = 0; k < T.rank; ++k) {
                            const UEl& q = B.Pinv[static_cast<size_t>(m)][static_cast<size_t>(k)];
                            if (q.is_zero()) continue;
                            out.entry(i, j, k) = out.entry(i, j, k) + t_mul(base, coproduct(q));
                        }
                    }
                }
            }
    return out;
}

bool equivalent(const ProductTable& a, const ProductTable& b) {
    if (a.rank != b.rank || !same_ambient(a.lie, b.lie)) return false;
    return a == b;
}

ProductTable exchange_generators(const ProductTable& T) {
    if (T.rank != 2) throw MalformedInput("exchange_generators expects rank 2");
    ProductTable out(T.lie, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out.entry(i, j, k) = T.entry(1 - i, 1 - j, 1 - k);
    return out;
}

}  // namespace psalg
