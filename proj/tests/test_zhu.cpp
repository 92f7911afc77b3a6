#include "g2voa/zhu.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace g2voa;
using namespace g2voa::g2;
using affine::X;

namespace {

bool equal(const poly& a, const poly& b) { return (a - b).empty(); }

finite_algebra::order_t reversed_triangular() {
  // F's in reverse, then H21, H01, then E's in reverse
  return {F32, F31, F21, F11, F10, F01, H21, H01, E01, E10, E11, E21, E31, E32};
}

// a random word of weight zero: matched E_r, F_r pairs and Cartan letters, shuffled
std::vector<int> random_weight_zero_word(std::mt19937& rng, int pairs) {
  std::vector<int> w;
  std::uniform_int_distribution<int> r(0, 5), h(0, 3);
  for (int i = 0; i < pairs; ++i) {
    auto rt = positive_roots()[static_cast<std::size_t>(r(rng))];
    w.push_back(raising_of(rt));
    w.push_back(lowering_of(rt));
  }
  for (int i = h(rng); i > 0; --i) w.push_back(i % 2 ? H01 : H21);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace

TEST_CASE("Zhu images of the named elements") {
  finite_algebra fa(finite_algebra::triangular_order());
  auto im = zhu::images(fa);
  CHECK(equal(im.a, fa.word({E21})));
  CHECK(equal(im.b, fa.word({E31, E11}) - fa.word({E32, E10})));
  CHECK(equal(im.c, fa.word({E31, E31, E01}) - fa.word({E32, E31, H01}) - fa.word({E32, E32, F01})));
  CHECK(im.w.empty());
  CHECK(equal(im.u, scaled(fa.mul(im.a, im.a), rational(1, 3)) - im.b));
  CHECK(equal(im.v, scaled(fa.power(im.a, 3), rational(2, 9)) - fa.mul(im.a, im.b) - scaled(im.c, 3)));
}

TEST_CASE("zhu_map is multiplicative on U(g-hat_-)") {
  affine_algebra alg(-6, 0);
  finite_algebra fa(finite_algebra::triangular_order());
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> base(0, dim - 1), mode(-2, -1);
  for (int t = 0; t < 20; ++t) {
    auto x = alg.mul(alg.element(base(rng), mode(rng)), alg.element(base(rng), mode(rng)));
    auto y = alg.element(base(rng), mode(rng)) + alg.element(base(rng), -1, 3);
    CHECK(equal(zhu::zhu_map(alg, alg.mul(x, y), fa), fa.mul(zhu::zhu_map(alg, x, fa), zhu::zhu_map(alg, y, fa))));
  }
  CHECK_THROWS(zhu::zhu_map(alg, alg.element(E21, 0), fa));
}

TEST_CASE("adjoint powers on [a], [b]") {
  finite_algebra fa(finite_algebra::triangular_order());
  auto im = zhu::images(fa);
  CHECK(equal(zhu::adjoint_power(fa, F31, 1, im.a), fa.word({F10})));
  CHECK(zhu::adjoint_power(fa, F31, 2, im.a).empty());
  CHECK(zhu::adjoint_power(fa, F31, 3, im.b).empty());
  CHECK(zhu::adjoint_power(fa, F31, 4, im.c).empty());
  CHECK(equal(scaled(zhu::adjoint_power(fa, F32, 2, im.b), rational(1, 2)),
              fa.word({F32, E10}) - fa.word({F21, F01})));
}

TEST_CASE("multinomial adjoint power agrees with iteration") {
  finite_algebra fa(finite_algebra::triangular_order());
  auto im = zhu::images(fa);
  for (int x : {F32, F31, F10, E10})
    for (int n = 0; n <= 4; ++n) {
      CHECK(equal(zhu::adjoint_power_multinomial(fa, x, n, {im.a, im.b}),
                  zhu::adjoint_power(fa, x, n, fa.mul(im.a, im.b))));
      CHECK(equal(zhu::adjoint_power_multinomial(fa, x, n, {im.a, im.a, im.c}),
                  zhu::adjoint_power(fa, x, n, fa.mul(im.a, fa.mul(im.a, im.c)))));
    }
}

TEST_CASE("pi0 on E_r F_r, F_r E_r and Cartan elements") {
  finite_algebra fa(finite_algebra::triangular_order());
  for (auto r : positive_roots()) {
    CHECK(zhu::pi0(fa, fa.word({raising_of(r), lowering_of(r)})) == zhu::coroot_poly(r));
    CHECK(zhu::pi0(fa, fa.word({lowering_of(r), raising_of(r)})).is_zero());
  }
  CHECK(zhu::pi0(fa, fa.word({H21})) == hpoly::linear(2, 3));
  CHECK_THROWS(zhu::pi0(fa, fa.word({E10})));
  finite_algebra bad(finite_algebra::order_with(E32, F32));
  CHECK_THROWS(zhu::pi0(bad, bad.word({H01})));
}

TEST_CASE("pi0 is multiplicative on weight zero elements and independent of the triangular order") {
  finite_algebra fa(finite_algebra::triangular_order());
  finite_algebra fb(reversed_triangular());
  std::mt19937 rng(21);
  for (int t = 0; t < 30; ++t) {
    auto w1 = random_weight_zero_word(rng, 1 + t % 2);
    auto w2 = random_weight_zero_word(rng, 1);
    auto f = fa.word(w1), g = fa.word(w2);
    CHECK(zhu::pi0(fa, fa.mul(f, g)) == zhu::pi0(fa, f) * zhu::pi0(fa, g));
    CHECK(zhu::pi0(fb, fb.word(w1)) == zhu::pi0(fa, f));
  }
}

TEST_CASE("to_element and pi0 are inverse on S(h)") {
  finite_algebra fa(finite_algebra::triangular_order());
  auto h = hpoly::h10() * hpoly::h10() - hpoly::linear(1, 3, -2) * hpoly::h01();
  CHECK(zhu::pi0(fa, zhu::to_element(fa, h)) == h);
}

TEST_CASE("[v_k] equals the closed form in [u], [v]") {
  std::vector<singular::singular_vector> svs;
  for (int n : {2, 3, 5, 6, 8}) svs.push_back(singular::solve_singular(singular::level::from_n(n)));
  auto checks = zhu::verify_zhu_images(svs);
  for (auto& c : checks.items) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
}

TEST_CASE("leading coefficient of [a]^n") {
  CHECK(zhu::leading_coefficient(2) == rational(1, 3));
  CHECK(zhu::leading_coefficient(3) == rational(2, 9));
}

TEST_CASE("classification properties for n = 2, 3, 5") {
  for (int n : {2, 3, 5}) {
    CAPTURE(n);
    auto c = zhu::classify(singular::solve_singular(singular::level::from_n(n)));
    auto& p = c.polys;
    // p1 = C H10 (H10 - 1) ... (H10 - n + 1), no H01
    CHECK(p.p1 == shifted_product(hpoly::h10(), 0, n - 1).scaled(p.c_lead));
    CHECK(p.c_lead == zhu::leading_coefficient(n));
    CHECK(p.c_lead != 0);
    CHECK(rational_roots(p.p1.at_h01(0)).size() == static_cast<std::size_t>(n));
    CHECK(p.p2_top);
    CHECK(p.c2 == p.c_lead);
    auto h11 = zhu::coroot_poly({1, 1});
    CHECK((p.p2 - shifted_product(h11, 0, n - 1).scaled(p.c2)).degree() <= n - 1);
    // H11 = H10 + H01 does not give the degree drop
    CHECK_FALSE(p.p2_top_naive);

    CHECK(c.p1_in_span);
    CHECK(c.p2_in_span);
    for (auto& q : c.r0.p) CHECK(q.eval(0, 0) == 0);
    CHECK(c.mu10_values.size() == static_cast<std::size_t>(n));
    for (auto& s : c.stage2_polys) CHECK(s.q.degree() == n);
    CHECK(c.candidates.size() <= static_cast<std::size_t>(n * n));
    CHECK(c.contains_zero());

    // rational survivors are common zeros of P0; rational rejects miss one
    for (auto& cand : c.candidates) {
      if (!cand.mu01) continue;
      bool all_zero = std::all_of(c.r0.p.begin(), c.r0.p.end(),
                                  [&](const hpoly& q) { return q.eval(cand.mu10, *cand.mu01) == 0; });
      CHECK(all_zero == cand.survives);
    }
  }
}

TEST_CASE("small levels: survivor lists") {
  auto c2 = zhu::classify(singular::solve_singular(singular::level::from_n(2)));
  std::vector<std::pair<rational, rational>> got;
  for (auto& cand : c2.candidates)
    if (cand.survives) got.emplace_back(cand.mu10, *cand.mu01);
  std::vector<std::pair<rational, rational>> want = {{0, rational(-2, 3)}, {0, 0}, {1, rational(-4, 3)}};
  CHECK(got == want);
  auto c3 = zhu::classify(singular::solve_singular(singular::level::from_n(3)));
  CHECK(c3.survivors() == 6);
  CHECK(c3.mu10_values == std::vector<rational>{0, 1, 2});
}

TEST_CASE("classification JSON is deterministic") {
  auto sv = singular::solve_singular(singular::level::from_n(3));
  auto a = zhu::classify(sv).to_json(12, true).dump();
  auto b = zhu::classify(sv).to_json(12, true).dump();
  CHECK(a == b);
  CHECK(a.find("timing") == std::string::npos);
}

TEST_CASE("approximate roots of an irreducible quadratic") {
  auto r = zhu::approximate_roots(upoly({rational(-7, 9), 0, 1}), 6);
  REQUIRE(r.size() == 2);
  CHECK(r[0].find("-0.881917") != std::string::npos);
  CHECK(r[1].find("0.881917") != std::string::npos);
}
