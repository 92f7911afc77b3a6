#pragma once

#include "g2voa/envelope.hpp"
#include "g2voa/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2voa::invariants {

// ---- beta-strings
// simple strings B^i_{-j}, i = 1..8, are the irreducible g_beta pieces of g-hat_- in mode -j
int string_label(int base);
std::vector<int> string_bases(int label);  // ordered E-side first

struct values {
  int m1 = 0;
  int m2 = 0;
  int n = 0;
  friend bool operator==(const values&, const values&) = default;
};

// the unique (m1, m2, n) with E32(-1)^m1 E31(-1)^m2 X(-depth) of weight n(theta_check - delta)
values solve_weight_system(int c1, int c2, int c3);
values solved_values(int base, int depth);

// values as printed in the reference table (row variable j; for label 1 the depth is j+1)
values table1(int label, int depth, int base);

using simple_string = std::pair<int, int>;  // (label, depth)
using beta_string = std::vector<simple_string>;

struct string_member {
  std::vector<affine::generator> y;
  int m1 = 0;
  int m2 = 0;
  int n = 0;
};

// member of B minimizing m2; B must not contain B^1_{-1}
string_member minimal_member(const beta_string& b);
// m1 + m2 over the members of b; throws when the value is member dependent
int string_m(const beta_string& b);

// ---- the theta_check - delta graded subalgebra of S(g-hat_-)
struct component_entry {
  monomial full;  // E32(-1)^m1 E31(-1)^m2 y
  std::vector<affine::generator> y;
  int m1 = 0;
  int m2 = 0;
};
std::vector<component_entry> theta_delta_entries(const affine_algebra& alg, int n);
std::vector<monomial> theta_delta_component(const affine_algebra& alg, int n);

// ---- named elements a, b, c, w, u, v; the algebra needs modes down to -2
struct named {
  poly a, b, c, w, u, v;
};
named s_forms(affine_algebra& alg);
named u_forms(affine_algebra& alg);

// ---- kernels of the adjoint action on the grade-n component
enum class side { s, u };

struct kernel {
  std::vector<monomial> basis;     // column monomials, PBW order
  std::vector<poly> vectors;       // reduced echelon basis of the kernel
};

// raisers are finite generator bases among E01, E10; alg must contain modes -n..0
kernel invariant_kernel(affine_algebra& alg, int n, const std::vector<int>& raisers, side sd);

int count_e01(int n);    // #{p+2q+3r+3s = n}
int count_joint(int n);  // #{2p+3q+3r = n}
int dpartitions(int n);  // #{2q+3r = n}

std::vector<std::array<int, 3>> joint_exponents(int n);     // (p,q,r), 2p+3q+3r = n, p descending
std::vector<std::array<int, 4>> e01_exponents(int n);       // (p,q,r,s), p+2q+3r+3s = n

// u^p v^q w^r in the requested algebra
poly uvw_power(affine_algebra& alg, const named& nm, side sd, int p, int q, int r);
// a^p b^q c^r w^s in S
poly abcw_power(const named& nm, int p, int q, int r, int s);

// the PBW monomial E31(-1)^{p+2q+r} E11(-1)^p E01(-1)^q E32(-2)^r
monomial probe_monomial(const affine_algebra& alg, int p, int q, int r);

// coordinates of an S element of grade n in the basis a^p b^q c^r w^s; empty when outside the span
std::map<std::array<int, 4>, rational> abcw_coordinates(const named& nm, int n, const poly& f);

// residuals of the E10 recurrence on coordinates c (s = 0 part); empty means it holds
struct recurrence_failure {
  int p, q, r;
  rational lhs, rhs;
};
std::vector<recurrence_failure> check_recurrence(const std::map<std::array<int, 4>, rational>& c, int n);
std::vector<recurrence_failure> check_recurrence_printed(const std::map<std::array<int, 4>, rational>& c,
                                                         int n);

// ---- per-grade report
struct grade_report {
  int n = 0;
  int component = 0;          // |theta_delta_component(n)|
  int component_brute = 0;    // all monomials of weight n(theta_check - delta)
  int e01_s = 0, e01_pred = 0;
  int joint_s = 0, joint_u = 0, joint_pred = 0;
  bool abcw_in_kernel = false;
  bool uvw_in_kernel = false;
  bool symmetrized_spans = false;
  bool probes_ok = false;
  bool recurrence_ok = false;
  bool ok() const;
};
grade_report grade(int n);

}  // namespace g2voa::invariants
