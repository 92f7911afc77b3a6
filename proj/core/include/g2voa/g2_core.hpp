#pragma once

#include "g2voa/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2voa::g2 {

inline constexpr int dim = 14;

// basis order used everywhere for PBW monomials
enum gen : int { E32, E31, E21, E11, E10, E01, H01, F01, H21, F10, F11, F21, F31, F32 };

struct root {
  int a = 0;  // coefficient of alpha (short)
  int b = 0;  // coefficient of beta (long)
  friend auto operator<=>(const root&, const root&) = default;
  root operator+(root o) const { return {a + o.a, b + o.b}; }
  root operator-() const { return {-a, -b}; }
  bool is_zero() const { return a == 0 && b == 0; }
};

const std::array<root, 6>& positive_roots();
const std::array<root, 12>& all_roots();  // positives then negatives
bool is_root(root r);
bool is_positive(root r);
rational inner(root x, root y);  // (alpha,alpha)=2/3, (beta,beta)=2, (alpha,beta)=-1
std::string root_label(root r);

std::string_view name(int g);
int from_name(std::string_view s);  // -1 when unknown
root root_of(int g);
bool is_cartan(int g);
bool is_raising(int g);
bool is_lowering(int g);
int raising_of(root r);   // E for a positive root
int lowering_of(root r);  // F for a positive root
int vector_of(root r);    // E or F for any nonzero root

// H = h10*H10 + h01*H01 with H10, H01 the simple coroots
struct coroot_coeffs {
  int h10 = 0;
  int h01 = 0;
  friend bool operator==(const coroot_coeffs&, const coroot_coeffs&) = default;
};
coroot_coeffs coroot_coefficients(root positive);
int pairing(root r, coroot_coeffs h);
int cartan_pairing(root r, int cartan_gen);  // <r, H01> or <r, H21>

using terms = std::vector<std::pair<int, rational>>;

class lie_element {
 public:
  lie_element() = default;
  static lie_element basis(int g, rational c = 1);
  static lie_element cartan(coroot_coeffs h);
  static lie_element cartan(const rational& h10, const rational& h01);

  const std::map<int, rational>& coeffs() const { return c_; }
  rational coeff(int g) const;
  bool is_zero() const { return c_.empty(); }
  void add(int g, const rational& v);

  lie_element& operator+=(const lie_element& o);
  lie_element& operator-=(const lie_element& o);
  lie_element& operator*=(const rational& s);
  friend lie_element operator+(lie_element x, const lie_element& y) { return x += y; }
  friend lie_element operator-(lie_element x, const lie_element& y) { return x -= y; }
  friend lie_element operator*(const rational& s, lie_element x) { return x *= s; }
  friend bool operator==(const lie_element&, const lie_element&) = default;

  std::string str() const;

 private:
  std::map<int, rational> c_;
};

// sign/magnitude of N(x,y) with [E_x, E_y] = N E_{x+y}; keyed by ordered root pairs
using sign_table = std::map<std::pair<root, root>, int>;

class structure {
 public:
  explicit structure(const sign_table& signs);

  const terms& bracket(int x, int y) const { return br_[x][y]; }
  const rational& form(int x, int y) const { return form_[x][y]; }
  lie_element bracket(const lie_element& x, const lie_element& y) const;
  rational form(const lie_element& x, const lie_element& y) const;

  const sign_table& signs() const { return signs_; }
  std::string dump_json() const;
  std::string hash() const;

 private:
  sign_table signs_;
  std::array<std::array<terms, dim>, dim> br_;
  std::array<std::array<rational, dim>, dim> form_;
};

const sign_table& frozen_signs();
const structure& standard();

// magnitude p+1 where p is the largest integer with y - p x a root
int chevalley_magnitude(root x, root y);

// the four pinned constants: the quoted [E01,E31] = -E32 and the normalisations of E11, E21, E31
sign_table sign_pins();

// backtracking over all unordered root pairs with exact Jacobi pruning
std::vector<sign_table> search_signs(const sign_table& pins, std::size_t max_solutions = 8);

struct check_result {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string s) {
    ok = false;
    failures.push_back(std::move(s));
  }
};

check_result check_jacobi(const structure& s);
check_result check_form(const structure& s);
check_result check_cartan(const structure& s);

lie_element bracket(const lie_element& x, const lie_element& y);
rational invariant_form(const lie_element& x, const lie_element& y);
lie_element coroot(root positive);

}  // namespace g2voa::g2
