#pragma once

#include "g2voa/appendix_a.hpp"
#include "g2voa/cartan_poly.hpp"
#include "g2voa/checks.hpp"
#include "g2voa/envelope.hpp"
#include "g2voa/singular.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace g2voa::zhu {

using appendix::h11_reading;

// X(-n) -> X on every factor, then straightened in the target's PBW order.
// On U(g-hat_-) this is an algebra map, so [u] and [v] follow from [a], [b], [c].
poly zhu_map(const affine_algebra& from, const poly& x, finite_algebra& to);

struct named_images {
  poly a, b, c, w, u, v;
};
named_images images(finite_algebra& fa);

// (X_L)^n f by iteration
poly adjoint_power(finite_algebra& fa, int x_base, int n, const poly& f);
// (X^n)_L (Y_1 ... Y_m) through the multinomial expansion
poly adjoint_power_multinomial(finite_algebra& fa, int x_base, int n, const std::vector<poly>& ys);
// (E^n F^n)_L f = (E_L)^n (F_L)^n f
poly adjoint_ef(finite_algebra& fa, int e_base, int f_base, int n, const poly& f);

// Cartan projection: f must be of weight zero; fa must use an order with all F before H before all E
hpoly pi0(const finite_algebra& fa, const poly& f);
// f modulo the left ideal U(g) n_+, kept as an element (terms with an E factor dropped)
poly mod_n_plus(const finite_algebra& fa, const poly& f);
// an H-polynomial as an element of U(g)
poly to_element(finite_algebra& fa, const hpoly& h);

hpoly coroot_poly(g2::root positive, h11_reading r = h11_reading::coroot);

// ---- [v_k]
// zhu image of the exact singular vector
poly zhu_singular(const singular::singular_vector& sv, finite_algebra& fa);
// the same from the closed-form b_j and [u], [v]
poly zhu_closed_form(int n, finite_algebra& fa);
// coefficient of [a]^n once [u], [v] are expanded in [a], [b], [c]
rational leading_coefficient(int n);

// ---- the two classification polynomials
struct classification_polys {
  int n = 0;
  hpoly p1, p2;
  rational c_lead;                    // C_{n,0,0}
  bool p1_product = false;            // p1 == C_lead * H10 (H10-1) ... (H10-n+1)
  hpoly p1_residual;
  rational c2;                        // coefficient of H10^n in p2, expected to be C_lead
  bool p2_top = false;                // deg(p2 - C2 prod(H11 - j)) <= n-1, coroot reading
  bool p2_top_naive = false;          // the same with H11 = H10 + H01
  int p2_residual_degree = -1;
  int p2_residual_degree_naive = -1;
};
classification_polys classification_polynomials(const poly& vk, int n, finite_algebra& fa);

// ---- R(k)_0
struct zero_weight {
  std::vector<poly> basis;      // in the algebra passed in
  std::vector<hpoly> p;         // pi0 of each basis element
  int vectors_visited = 0;      // basis vectors over all weights the search passed through
  int sweeps = 0;               // weight levels processed
};
// lowering BFS from [v_k]; throws when more than cap vectors accumulate
zero_weight zero_weight_space(finite_algebra& fa, const poly& vk, int n, int cap = 100000);

// is h in the span of the given polynomials
bool in_span(const std::vector<hpoly>& basis, const hpoly& h);

// ---- classification
struct candidate {
  rational mu10;
  std::optional<rational> mu01;  // rational value, or
  upoly factor;                  // irreducible factor in H01 with root_index among its roots
  int root_index = 0;
  bool factor_proved_irreducible = true;
  bool survives = false;
  std::string mu01_text(int digits) const;
};

struct stage2 {
  rational mu10;
  upoly q;  // p2 at H10 = mu10, in H01
  factorization fac;
};

struct classification {
  singular::level lv;
  classification_polys polys;
  std::vector<rational> mu10_values;
  std::vector<stage2> stage2_polys;
  zero_weight r0;
  bool p1_in_span = false, p2_in_span = false, vanish_at_zero = false;
  std::vector<candidate> candidates;  // before the final filter; survives marks the result
  int survivors() const;
  bool contains_zero() const;
  nlohmann::ordered_json to_json(int digits, bool emit_p_basis) const;
};

// numeric display of all complex roots, ordered by real then imaginary part
std::vector<std::string> approximate_roots(const upoly& f, int digits);

classification classify(const singular::singular_vector& sv);

// ---- acceptance helpers
// [v_k] from the kernel equals the closed form, for each given vector; [w] = 0
check_list verify_zhu_images(const std::vector<singular::singular_vector>& svs);

}  // namespace g2voa::zhu
