#ifndef HYPERSPLIT_RATIONAL_HPP
#define HYPERSPLIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hypersplit {

// Exact rational scalar. All geometric predicates run on these; no
// floating point is allowed anywhere near a sign decision.
using Rat = mpq_class;

// Accepts "p/q", an optionally signed integer string, or an exact decimal
// such as "-2.75". Rejects everything else, in particular scientific
// notation and non-terminating forms.
Rat parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with
// q > 0 and gcd(p, q) = 1.
std::string format_rational(const Rat& value);

// Scales a rational vector to coprime integers and flips the overall sign
// so the first nonzero entry is positive. Input must be nonzero.
std::vector<Rat> normalize_primitive(const std::vector<Rat>& values);

double to_double(const Rat& value);

}  // namespace hypersplit

#endif
