#ifndef CRNKIT_RATIONAL_HPP
#define CRNKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace crn {

// Exact rational scalar. All structural computations in the library are done
// over Rat; floating point appears only at the dynamics/reporting boundary.
using Rat = mpq_class;

// Parses "p/q", an integer, or a decimal literal with optional exponent
// ("0.25", "-3", "1e-3", "2.5e2"). Decimals are converted exactly via
// power-of-ten denominators. Throws Error(InvalidArgument) on bad syntax or
// zero denominator.
Rat parse_rational(const std::string& text);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string rat_to_string(const Rat& q);

// Nearest double.
double rat_to_double(const Rat& q);

// Exact conversion (every finite double is a dyadic rational).
Rat rat_from_double(double d);

inline int rat_sign(const Rat& q) { return sgn(q); }

}  // namespace crn

#endif
