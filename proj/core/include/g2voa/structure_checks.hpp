#pragma once

#include "g2voa/checks.hpp"
#include "g2voa/g2_core.hpp"

namespace g2voa {

// quoted bracket identities first, then Jacobi, invariance of the form and the Cartan data
check_list verify_structure(const g2::structure& s);

// the table with N(x, y) negated for the roots of two named generators; throws when no entry matches
g2::sign_table flip_sign(g2::sign_table t, int x, int y);

}  // namespace g2voa
