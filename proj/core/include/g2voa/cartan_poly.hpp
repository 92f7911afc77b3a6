#pragma once

#include "g2voa/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2voa {

// ---- univariate polynomials over Q, coefficients low degree first
class upoly {
 public:
  upoly() = default;
  explicit upoly(std::vector<rational> c) : c_(std::move(c)) { trim(); }
  static upoly constant(const rational& c) { return upoly({c}); }
  static upoly x() { return upoly({0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<rational>& coeffs() const { return c_; }
  rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : rational(0); }
  rational lead() const { return c_.empty() ? rational(0) : c_.back(); }
  rational eval(const rational& x) const;

  upoly operator+(const upoly& o) const;
  upoly operator-(const upoly& o) const;
  upoly operator*(const upoly& o) const;
  upoly scaled(const rational& s) const;
  friend bool operator==(const upoly&, const upoly&) = default;

  upoly monic() const;
  upoly derivative() const;
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<rational> c_;
};

std::pair<upoly, upoly> divmod(const upoly& a, const upoly& b);
upoly gcd(upoly a, upoly b);  // monic, gcd(0,0) = 0

// distinct rational roots, increasing
std::vector<rational> rational_roots(const upoly& f);

struct factor_term {
  upoly f;            // monic
  int multiplicity = 1;
  bool irreducible = true;  // false only when the factor search hit its cap
};

// f = unit * prod f_i^e_i over Q; linear factors first, then by degree
struct factorization {
  rational unit;
  std::vector<factor_term> terms;
  std::string str(const std::string& var = "x") const;
};
factorization factor(const upoly& f);

// ---- polynomials in H10, H01; S(h) with the PBW filtration equal to total degree
class hpoly {
 public:
  using exps = std::pair<int, int>;  // (deg H10, deg H01)

  hpoly() = default;
  static hpoly constant(const rational& c);
  static hpoly linear(const rational& h10, const rational& h01, const rational& c = 0);
  static hpoly h10() { return linear(1, 0); }
  static hpoly h01() { return linear(0, 1); }

  const std::map<exps, rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;  // -1 for zero
  rational coeff(int i, int j) const;
  hpoly homogeneous_part(int d) const;

  hpoly operator+(const hpoly& o) const;
  hpoly operator-(const hpoly& o) const;
  hpoly operator*(const hpoly& o) const;
  hpoly scaled(const rational& s) const;
  friend bool operator==(const hpoly&, const hpoly&) = default;

  rational eval(const rational& h10, const rational& h01) const;
  upoly at_h10(const rational& h10) const;  // polynomial in H01
  upoly at_h01(const rational& h01) const;  // polynomial in H10
  std::string str() const;

 private:
  void add(exps e, const rational& c);
  std::map<exps, rational> t_;
};

// prod_{s = lo}^{hi} (x - s); one when lo > hi
hpoly shifted_product(const hpoly& x, int lo, int hi);

}  // namespace g2voa
