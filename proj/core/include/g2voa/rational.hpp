#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace g2voa {

using rational = mpq_class;
using integer = mpz_class;

// canonical "p/q" text, "p" when the denominator is one
inline std::string to_string(const rational& q) { return q.get_str(); }

rational parse_rational(std::string_view s);

rational binomial(long n, long k);
integer factorial(unsigned long n);

}  // namespace g2voa
