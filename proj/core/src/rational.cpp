#include "g2voa/rational.hpp"

#include <stdexcept>

namespace g2voa {

rational parse_rational(std::string_view s) {
  rational q;
  if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
  q.canonicalize();
  return q;
}

// generalized binomial: zero for k < 0, n(n-1)...(n-k+1)/k! otherwise
rational binomial(long n, long k) {
  if (k < 0) return 0;
  rational r = 1;
  for (long j = 0; j < k; ++j) {
    r *= n - j;
    r /= j + 1;
  }
  return r;
}

integer factorial(unsigned long n) {
  integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace g2voa
