#include "g2voa/cartan_poly.hpp"

#include <doctest.h>

#include <random>

using namespace g2voa;

namespace {

upoly lin(const rational& r) { return upoly({-r, 1}); }

upoly expand(const factorization& f) {
  upoly out = upoly::constant(f.unit);
  for (auto& t : f.terms)
    for (int e = 0; e < t.multiplicity; ++e) out = out * t.f;
  return out;
}

upoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(-6, 6), d(1, 4);
  std::vector<rational> cs;
  for (int i = 0; i <= deg; ++i) {
    rational q(c(rng), d(rng));
    q.canonicalize();
    cs.push_back(q);
  }
  if (cs.back() == 0) cs.back() = 1;
  return upoly(cs);
}

}  // namespace

TEST_CASE("upoly arithmetic") {
  auto x = upoly::x();
  auto p = x * x - upoly::constant(2);
  CHECK(p.degree() == 2);
  CHECK(p.eval(3) == 7);
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == x.scaled(2));
  CHECK(p.str("H01") == "H01^2 - 2");
}

TEST_CASE("division identity on random inputs") {
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(rng, 6), b = random_poly(rng, 3);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd of products with a planted common factor") {
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    auto g = random_poly(rng, 2), a = random_poly(rng, 3), b = random_poly(rng, 3);
    auto d = gcd(a * g, b * g);
    CHECK(divmod(d, g.monic()).second.is_zero());
    CHECK(divmod(a * g, d).second.is_zero());
    CHECK(divmod(b * g, d).second.is_zero());
  }
}

TEST_CASE("rational roots agree with evaluation") {
  auto f = lin(rational(-2, 3)) * lin(0) * lin(rational(5, 7)) * (upoly::x() * upoly::x() + upoly::constant(1));
  auto roots = rational_roots(f.scaled(rational(9, 2)));
  CHECK(roots == std::vector<rational>{rational(-2, 3), 0, rational(5, 7)});
  for (auto& r : roots) CHECK(f.eval(r) == 0);
}

TEST_CASE("factorization reconstructs and finds planted factors") {
  auto q = upoly::x() * upoly::x() - upoly::constant(rational(7, 9));  // irreducible over Q
  auto f = lin(rational(-5, 3)) * lin(rational(-5, 3)) * lin(0) * q * q.scaled(1);
  auto fac = factor(f.scaled(18));
  CHECK(expand(fac) == f.scaled(18));
  CHECK(fac.unit == 18);
  int lin_mult = 0, quad = 0;
  for (auto& t : fac.terms) {
    if (t.f.degree() == 1) lin_mult += t.multiplicity;
    if (t.f == q) quad = t.multiplicity;
  }
  CHECK(lin_mult == 3);
  CHECK(quad == 2);
}

TEST_CASE("Kronecker splits a quartic with no rational roots") {
  auto a = upoly({-2, 0, 1}), b = upoly({-3, 0, 1});
  auto fac = factor(a * b);
  REQUIRE(fac.terms.size() == 2);
  for (auto& t : fac.terms) {
    CHECK(t.f.degree() == 2);
    CHECK(t.irreducible);
    CHECK(rational_roots(t.f).empty());
  }
}

TEST_CASE("random factorizations round trip") {
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    auto f = random_poly(rng, 2) * random_poly(rng, 3) * lin(rational(static_cast<int>(rng() % 7) - 3, 3));
    auto fac = factor(f);
    CHECK(expand(fac) == f);
    for (auto& tm : fac.terms)
      if (tm.f.degree() > 1) CHECK(rational_roots(tm.f).empty());
  }
}

TEST_CASE("hpoly ring operations agree with evaluation") {
  auto h10 = hpoly::h10(), h01 = hpoly::h01();
  auto p = h10 * h10 - h01.scaled(3) + hpoly::constant(rational(1, 2));
  auto q = h10 * h01 + hpoly::linear(1, 2, -1);
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) {
      CHECK((p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y));
      CHECK((p + q).eval(x, y) == p.eval(x, y) + q.eval(x, y));
      CHECK(p.at_h10(x).eval(y) == p.eval(x, y));
      CHECK(p.at_h01(y).eval(x) == p.eval(x, y));
    }
  CHECK((p * q).degree() == 4);
  CHECK((p * q).homogeneous_part(4) == h10 * h10 * h10 * h01);
}

TEST_CASE("shifted product") {
  auto s = shifted_product(hpoly::h10(), 0, 2);
  for (int x = -3; x <= 5; ++x) CHECK(s.eval(x, 7) == rational(x) * (x - 1) * (x - 2));
  CHECK(shifted_product(hpoly::h10(), 1, 0) == hpoly::constant(1));
}
