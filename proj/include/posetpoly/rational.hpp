#ifndef POSETPOLY_RATIONAL_HPP
#define POSETPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace posetpoly {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat ratio(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string ratToString(const Rat& r);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rat ratFromString(const std::string& s);

bool isInteger(const Rat& r);
bool isZeroOne(const Rat& r);

} // namespace posetpoly

#endif
