#pragma once

#include "g2voa/checks.hpp"
#include "g2voa/envelope.hpp"
#include "g2voa/invariants.hpp"

#include <cstdint>
#include <vector>

namespace g2voa::appendix {

// the coroot used for H11 inside the displayed formulas
enum class h11_reading { coroot, naive };  // H10 + 3 H01, or H10 + H01

// X at a given mode for a finite element X (Cartan part in the H01, H21 basis)
poly at_mode(const affine_algebra& alg, const g2::lie_element& x, int mode);
// coroot of i alpha + j beta as an affine element
poly coroot_at(const affine_algebra& alg, int i, int j, int mode, h11_reading r = h11_reading::coroot);

// [u, F32(1)], [v, F32(1)], [w, F32(1)] in U(g-hat)
check_list verify_a1(h11_reading r = h11_reading::coroot);
// nine congruences mod C2 at the given levels
check_list verify_a2(const std::vector<rational>& levels);
// C2 facts: w.1 in C2, commutativity of products and the X(1) expansion on random inputs
check_list verify_a3(std::uint32_t seed, int trials);
// projections of F32(1).(u^p v^q w^r.1) onto y(p',q').1, 2p+3q+3r <= max_grade
check_list verify_a4(int max_grade, const std::vector<rational>& levels);

// E31(-1)^{p'+2q'+2} E11(-1)^{p'} E01(-1)^{q'} F10(-1)
monomial a4_probe(const affine_algebra& alg, int pp, int qq);
// the predicted projection coefficient
rational a4_predicted(int p, int q, int r, int pp, int qq);

check_list verify_appendix_a();

}  // namespace g2voa::appendix
