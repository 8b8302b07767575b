#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace sqv {

using Q = mpq_class;
using Rng = std::mt19937_64;

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed text.
Q parse_rational(const std::string& s);
std::string to_string(const Q& x);

// Uniform rational with numerator in [-range, range] and denominator in [1, den].
Q random_rational(Rng& rng, int range = 3, int den = 1);
Q random_nonzero_rational(Rng& rng, int range = 3, int den = 1);

inline int sign_of(const Q& x) { return sgn(x); }

}  // namespace sqv
