#pragma once

#include "g2voa/g2_core.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace g2voa::affine {

// X(n) for a basis element X, or the central K
struct generator {
  int base = -1;  // -1 marks K
  int mode = 0;

  static generator central() { return {}; }
  bool is_central() const { return base < 0; }
  friend auto operator<=>(const generator&, const generator&) = default;
  std::string str() const;
};

inline generator X(int base, int mode) { return {base, mode}; }

struct qhat_weight {
  int a = 0;
  int b = 0;
  int d = 0;
  rational lambda0 = 0;
  friend bool operator==(const qhat_weight&, const qhat_weight&) = default;
  qhat_weight& operator+=(const qhat_weight& o) {
    a += o.a;
    b += o.b;
    d += o.d;
    lambda0 += o.lambda0;
    return *this;
  }
  friend qhat_weight operator+(qhat_weight x, const qhat_weight& y) { return x += y; }
  qhat_weight scaled(int s) const { return {a * s, b * s, d * s, lambda0 * s}; }
  std::string str() const;
};

// n(theta_check - delta) with theta_check = 2 alpha + beta
inline qhat_weight theta_delta(int n) { return {2 * n, n, -n, 0}; }

using affine_terms = std::vector<std::pair<generator, rational>>;

// [X(m), Y(n)] = [X,Y](m+n) + m delta_{m+n,0} (X|Y) K
affine_terms affine_bracket(const generator& x, const generator& y, const g2::structure& s = g2::standard());

qhat_weight weight_of(const generator& g);

}  // namespace g2voa::affine
