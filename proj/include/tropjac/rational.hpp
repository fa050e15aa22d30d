#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tropjac {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Rationals are kept canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

// Parses "p/q" or "p". Denominator must be positive after canonicalization.
Rat rat_from_string(const std::string& s);

// Emits "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// LCM of the denominators of `values`; always >= 1.
Int lcm_denominators(const std::vector<Rat>& values);

long long to_ll(const Int& z);
bool fits_ll(const Int& z);

inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

}  // namespace tropjac
