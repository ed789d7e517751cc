#include "psalg/uea.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "psalg/errors.hpp"

namespace psalg {

uint32_t weight(const MultiIndex& I) {
    uint32_t w = 0;
    for (uint32_t x : I) w += x;
    return w;
}

Int multi_factorial(const MultiIndex& I) {
    Int f(1);
    for (uint32_t x : I) f *= factorial(x);
    return f;
}

MultiIndex add(const MultiIndex& I, const MultiIndex& J) {
    MultiIndex K(I);
    for (size_t i = 0; i < K.size(); ++i) K[i] += J[i];
    return K;
}

MultiIndex zero_index(int dim) { return MultiIndex(static_cast<size_t>(dim), 0); }

MultiIndex unit_index(int dim, int k) {
    MultiIndex I = zero_index(dim);
    I[static_cast<size_t>(k)] = 1;
    return I;
}

uint32_t max_degree_cap() {
    static const uint32_t cap = [] {
        const char* env = std::getenv("PSEUDOALG_MAX_DEGREE");
        if (!env) return 64u;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v <= 0 || v > 100000)
            throw MalformedInput("PSEUDOALG_MAX_DEGREE must be a positive integer");
        return static_cast<uint32_t>(v);
    }();
    return cap;
}

namespace {

using Word = std::vector<int>;  // generator indices, left to right

void append_word(const MultiIndex& I, Word& w) {
    for (size_t g = 0; g < I.size(); ++g)
        for (uint32_t r = 0; r < I[g]; ++r) w.push_back(static_cast<int>(g));
}

MultiIndex exponents_of_sorted(const Word& w, int dim) {
    MultiIndex K = zero_index(dim);
    for (int g : w) ++K[static_cast<size_t>(g)];
    return K;
}

constexpr size_t kStraightenStepLimit = 1000000;

// Rewrites a word of generators into the divided-power PBW basis using
//   d_b d_a = d_a d_b - [d_a, d_b]   (b > a adjacent),
// which terminates by induction on (length, inversion count). A sorted word
// with exponent vector K equals K! d^(K).
void straighten_word(const LieAlgebra& L, Word word, const Rat& base, std::map<MultiIndex, Rat>& out) {
    const int dim = L.dim();
    std::vector<std::pair<Rat, Word>> stack;
    stack.emplace_back(Rat(1), std::move(word));
    size_t steps = 0;
    while (!stack.empty()) {
        if (++steps > kStraightenStepLimit)
            throw StepLimitExceeded("straightening exceeded " + std::to_string(kStraightenStepLimit) + " steps");
        auto [c, w] = std::move(stack.back());
        stack.pop_back();
        size_t p = 0;
        while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
        if (p + 1 >= w.size()) {
            MultiIndex K = exponents_of_sorted(w, dim);
            Rat v = c * base * Rat(multi_factorial(K));
            auto [it, fresh] = out.try_emplace(std::move(K), v);
            if (!fresh) {
                it->second += v;
                if (psalg::is_zero(it->second)) out.erase(it);
            }
            continue;
        }
        const int b = w[p], a = w[p + 1];
        for (int k = 0; k < dim; ++k) {
            const Rat& cc = L.c(a, b, k);
            if (psalg::is_zero(cc)) continue;
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(p));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            // d_b d_a = d_a d_b + [d_b, d_a] and [d_b,d_a] = -[d_a,d_b]
            stack.emplace_back(c * -cc, std::move(shorter));
        }
        std::swap(w[p], w[p + 1]);
        stack.emplace_back(std::move(c), std::move(w));
    }
}

LiePtr merge_ambient(const LiePtr& a, const LiePtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_ambient(a, b)) throw AmbientMismatch("operands live over different Lie algebras");
    return a;
}

}  // namespace

std::map<MultiIndex, Rat> mul_monomials(const LiePtr& lie, const MultiIndex& I, const MultiIndex& J) {
    if (weight(I) + weight(J) > max_degree_cap())
        throw DegreeCapExceeded("product degree " + std::to_string(weight(I) + weight(J)) +
                                " exceeds cap " + std::to_string(max_degree_cap()));
    Word w;
    w.reserve(weight(I) + weight(J));
    append_word(I, w);
    append_word(J, w);
    std::map<MultiIndex, Rat> out;
    Rat base = Rat(1) / Rat(multi_factorial(I) * multi_factorial(J));
    straighten_word(*lie, std::move(w), base, out);
    return out;
}

std::map<MultiIndex, Rat> antipode_monomial(const LiePtr& lie, const MultiIndex& I) {
    Word w;
    w.reserve(weight(I));
    append_word(I, w);
    std::reverse(w.begin(), w.end());
    Rat base = Rat(weight(I) % 2 == 0 ? 1 : -1) / Rat(multi_factorial(I));
    std::map<MultiIndex, Rat> out;
    straighten_word(*lie, std::move(w), base, out);
    return out;
}

std::vector<std::pair<MultiIndex, MultiIndex>> coproduct_splits(const MultiIndex& I) {
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    MultiIndex J = zero_index(static_cast<int>(I.size()));
    for (;;) {
        MultiIndex K(I);
        for (size_t i = 0; i < I.size(); ++i) K[i] -= J[i];
        out.emplace_back(J, std::move(K));
        // odometer step: next J <= I in lexicographic order
        size_t pos = I.size();
        while (pos > 0) {
            --pos;
            if (J[pos] < I[pos]) {
                ++J[pos];
                for (size_t q = pos + 1; q < I.size(); ++q) J[q] = 0;
                break;
            }
            if (pos == 0) return out;
        }
        if (I.empty()) return out;
    }
}

std::vector<std::array<MultiIndex, 3>> coproduct_splits3(const MultiIndex& I) {
    std::vector<std::array<MultiIndex, 3>> out;
    for (auto& [A, rest] : coproduct_splits(I))
        for (auto& [B, C] : coproduct_splits(rest)) out.push_back({A, B, C});
    return out;
}

UEl::UEl(LiePtr lie, const MultiIndex& I, const Rat& c) : lie_(std::move(lie)) {
    add_term(I, c);
}

UEl UEl::one(LiePtr lie) {
    int d = lie->dim();
    return UEl(std::move(lie), zero_index(d), Rat(1));
}

UEl UEl::generator(LiePtr lie, int k) {
    int d = lie->dim();
    return UEl(std::move(lie), unit_index(d, k), Rat(1));
}

UEl UEl::from_delta(LiePtr lie, const DeltaVector& v) {
    UEl u(lie);
    if (static_cast<int>(v.size()) != lie->dim()) throw MalformedInput("delta vector has wrong length");
    for (int k = 0; k < lie->dim(); ++k)
        if (!psalg::is_zero(v[static_cast<size_t>(k)]))
            u.add_term(unit_index(lie->dim(), k), v[static_cast<size_t>(k)]);
    return u;
}

uint32_t UEl::degree() const {
    uint32_t d = 0;
    for (const auto& [I, c] : terms_) d = std::max(d, weight(I));
    return d;
}

void UEl::add_term(const MultiIndex& I, const Rat& c) {
    if (psalg::is_zero(c)) return;
    if (lie_ && I.size() != static_cast<size_t>(lie_->dim()))
        throw MalformedInput("monomial index has wrong length");
    auto [it, fresh] = terms_.try_emplace(I, c);
    if (!fresh) {
        it->second += c;
        if (psalg::is_zero(it->second)) terms_.erase(it);
    }
}

Rat UEl::coefficient(const MultiIndex& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Rat(0) : it->second;
}

UEl UEl::operator+(const UEl& o) const {
    UEl r(merge_ambient(lie_, o.lie_));
    r.terms_ = terms_;
    for (const auto& [I, c] : o.terms_) r.add_term(I, c);
    return r;
}

UEl UEl::operator-(const UEl& o) const {
    UEl r(merge_ambient(lie_, o.lie_));
    r.terms_ = terms_;
    for (const auto& [I, c] : o.terms_) r.add_term(I, -c);
    return r;
}

UEl UEl::operator-() const {
    UEl r(lie_);
    for (const auto& [I, c] : terms_) r.terms_.emplace(I, -c);
    return r;
}

UEl UEl::operator*(const Rat& c) const {
    UEl r(lie_);
    if (psalg::is_zero(c)) return r;
    for (const auto& [I, v] : terms_) r.terms_.emplace(I, v * c);
    return r;
}

UEl UEl::operator*(const UEl& o) const {
    UEl r(merge_ambient(lie_, o.lie_));
    for (const auto& [I, a] : terms_)
        for (const auto& [J, b] : o.terms_)
            for (const auto& [K, m] : mul_monomials(r.lie_, I, J)) r.add_term(K, a * b * m);
    return r;
}

bool UEl::operator==(const UEl& o) const {
    return terms_ == o.terms_;
}

Rat UEl::counit() const {
    if (!lie_) return Rat(0);
    return coefficient(zero_index(lie_->dim()));
}

UEl UEl::antipode() const {
    UEl r(lie_);
    for (const auto& [I, c] : terms_)
        for (const auto& [K, m] : antipode_monomial(lie_, I)) r.add_term(K, c * m);
    return r;
}

}  // namespace psalg
