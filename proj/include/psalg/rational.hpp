#ifndef PSALG_RATIONAL_HPP
#define PSALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace psalg {

// Exact arbitrary-precision rationals. Everything in the kernel is a Rat;
// there is deliberately no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// mpq_class(n, d) does not reduce the fraction on its own.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision parts.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" or "p/q" with q > 1, suitable for deterministic output.
std::string rat_to_string(const Rat& q);

// n! as an exact integer.
Int factorial(unsigned long n);

}  // namespace psalg

#endif
