#pragma once

#include <gmpxx.h>

#include <string>

namespace arrangebij {

// Exact rational scalar used everywhere in the core. No floating point.
using Rat = mpq_class;
using Int = mpz_class;

// Canonical "p/q" rendering, q >= 1, gcd(p,q) = 1, always with the slash
// (so "3" prints as "3/1"). This is the wire format for region representatives.
std::string to_fraction(const Rat& v);

// Parse "p/q" or a bare integer "p". Throws std::invalid_argument on garbage
// or zero denominator.
Rat fraction_from(const std::string& text);

}  // namespace arrangebij
