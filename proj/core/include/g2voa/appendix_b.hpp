#pragma once

#include "g2voa/checks.hpp"
#include "g2voa/zhu.hpp"

#include <cstdint>

namespace g2voa::appendix {

// multinomial expansion of (X^n)_L on products against the iterated adjoint
check_list verify_b1(int max_n);
// (E^m)_L(F^m) mod U(g)E, the n_- / n_+ criterion on weight-zero words, and the three-term membership
check_list verify_b2(int max_m, std::uint32_t seed);
// the eight (F31^m)_L, (F32^m)_L identities on [a], [b], [c]
check_list verify_b3();
// the two congruences mod U(g)n_+ for p + 2q + 3r <= max_n
check_list verify_b4(int max_n);
// pi0 vanishing and the degree bound for 2q + 3r <= max_m
check_list verify_b6(int max_m);
// corrected (E21^4 F21^8)_L([b]^2) congruence under the given H11 reading
check_list verify_b7(h11_reading r = h11_reading::coroot);

check_list verify_appendix_b();

}  // namespace g2voa::appendix
