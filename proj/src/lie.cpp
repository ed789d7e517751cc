#include "psalg/lie.hpp"

#include <sstream>

#include "psalg/errors.hpp"

namespace psalg {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty rational literal");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad rational literal: '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketTerm>& bracket, std::string name)
    : dim_(dim), name_(std::move(name)) {
    if (dim <= 0) throw MalformedInput("Lie algebra dimension must be positive");
    c_.assign(static_cast<size_t>(dim) * dim * dim, Rat(0));
    auto at = [&](int i, int j, int k) -> Rat& {
        return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    };
    for (const auto& t : bracket) {
        if (t.i < 0 || t.i >= dim || t.j < 0 || t.j >= dim || t.k < 0 || t.k >= dim)
            throw MalformedInput("bracket term index out of range");
        if (t.i == t.j && !psalg::is_zero(t.c))
            throw AntisymmetryViolation(t.i, t.j, "nonzero [d_i, d_i] requested");
        at(t.i, t.j, t.k) += t.c;
        at(t.j, t.i, t.k) -= t.c;
    }
    validate();
}

void LieAlgebra::validate() const {
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k)
            if (!psalg::is_zero(c(i, i, k)))
                throw AntisymmetryViolation(i, i, "[d_i, d_i] != 0 at i=" + std::to_string(i));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c(i, j, k) + c(j, i, k) != 0)
                    throw AntisymmetryViolation(i, j, "antisymmetry fails at (" + std::to_string(i) +
                                                          "," + std::to_string(j) + ")");
    // Jacobi: [[d_i,d_j],d_k] + [[d_j,d_k],d_i] + [[d_k,d_i],d_j] = 0.
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    Rat sum(0);
                    for (int m = 0; m < dim_; ++m) {
                        sum += c(i, j, m) * c(m, k, l);
                        sum += c(j, k, m) * c(m, i, l);
                        sum += c(k, i, m) * c(m, j, l);
                    }
                    if (!psalg::is_zero(sum))
                        throw JacobiViolation(i, j, k, "Jacobi identity fails on (" + std::to_string(i) + "," +
                                                           std::to_string(j) + "," + std::to_string(k) + ")");
                }
}

DeltaVector LieAlgebra::bracket(const DeltaVector& u, const DeltaVector& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw MalformedInput("delta vector has wrong length");
    DeltaVector w(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (psalg::is_zero(u[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (psalg::is_zero(v[j])) continue;
            for (int k = 0; k < dim_; ++k) w[k] += u[i] * v[j] * c(i, j, k);
        }
    }
    return w;
}

bool LieAlgebra::structurally_equal(const LieAlgebra& other) const {
    return dim_ == other.dim_ && c_ == other.c_;
}

std::vector<BracketTerm> LieAlgebra::bracket_terms() const {
    std::vector<BracketTerm> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!psalg::is_zero(c(i, j, k))) out.push_back({i, j, k, c(i, j, k)});
    return out;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::abelian(int n) {
    return std::make_shared<LieAlgebra>(n, std::vector<BracketTerm>{}, "abelian" + std::to_string(n));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::heisenberg() {
    return std::make_shared<LieAlgebra>(3, std::vector<BracketTerm>{{0, 1, 2, Rat(1)}}, "heisenberg");
}

std::shared_ptr<const LieAlgebra> LieAlgebra::sl2like() {
    std::vector<BracketTerm> b{{0, 1, 1, Rat(2)}, {0, 2, 2, Rat(-2)}, {1, 2, 0, Rat(1)}};
    return std::make_shared<LieAlgebra>(3, b, "sl2");
}

bool same_ambient(const LiePtr& a, const LiePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->structurally_equal(*b);
}

bool is_zero(const DeltaVector& v) {
    for (const auto& x : v)
        if (!psalg::is_zero(x)) return false;
    return true;
}

DeltaVector scale(const Rat& c, const DeltaVector& v) {
    DeltaVector w(v);
    for (auto& x : w) x *= c;
    return w;
}

DeltaVector sub(const DeltaVector& a, const DeltaVector& b) {
    DeltaVector w(a);
    for (size_t i = 0; i < w.size(); ++i) w[i] -= b[i];
    return w;
}

}  // namespace psalg
