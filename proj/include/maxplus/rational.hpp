#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace maxplus {

// Exact rational scalar. All arithmetic in the library is exact; doubles never
// appear on any value path.
using Rat = mpq_class;

// mpq_class(num, den) does not reduce to lowest terms; comparisons on
// non-canonical values are undefined, so integer-pair construction funnels
// through here.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" with optional sign, base 10. Throws ParseError on any
// other shape or a zero denominator.
Rat parse_rational(std::string_view text);

// Lowest-terms text: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& r);

}  // namespace maxplus
