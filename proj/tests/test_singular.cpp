#include "g2voa/singular.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace g2voa;
using namespace g2voa::g2;
namespace fs = std::filesystem;

namespace {

bool equal(const poly& a, const poly& b) { return (a - b).empty(); }

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("g2voa_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("levels") {
  singular::level lv{0, 1};
  CHECK(lv.k() == rational(-5, 3));
  CHECK(lv.n() == 2);
  CHECK(singular::level::from_n(8) == singular::level{2, 1});
  CHECK(singular::level::from_n(6) == singular::level{1, 2});
  CHECK_THROWS(singular::level::from_n(4));
  // n = 3k + 7
  for (int m = 0; m <= 2; ++m)
    for (int i = 1; i <= 2; ++i) {
      singular::level l{m, i};
      CHECK(3 * l.k() + 7 == l.n());
    }
}

TEST_CASE("closed form values") {
  CHECK(singular::closed_form_coefficients(2) == std::vector<rational>{1});
  CHECK(singular::closed_form_coefficients(6) == std::vector<rational>{1, 1});
  CHECK(singular::closed_form_coefficients(8) == std::vector<rational>{1, 2});
  CHECK(singular::closed_form_coefficients(9) == std::vector<rational>{1, rational(1, 3)});
}

TEST_CASE("n = 2 gives u.1 and n = 3 gives v.1") {
  auto s2 = singular::solve_singular(singular::level::from_n(2));
  auto a2 = singular::make_algebra(2);
  CHECK(equal(s2.mod_w, invariants::u_forms(a2).u));
  auto s3 = singular::solve_singular(singular::level::from_n(3));
  auto a3 = singular::make_algebra(3);
  CHECK(equal(s3.mod_w, invariants::u_forms(a3).v));
}

TEST_CASE("kernel is one dimensional and matches the closed form for n = 2..9") {
  for (int n : {2, 3, 5, 6, 8, 9}) {
    CAPTURE(n);
    auto sv = singular::solve_singular(singular::level::from_n(n));
    CHECK(sv.kernel_dim == 1);
    CHECK(singular::b_from_coeffs(n, sv.exponents, sv.coeffs) == singular::closed_form_coefficients(n));
    CHECK(singular::verify_singular(sv).ok());
  }
}

TEST_CASE("raising operators annihilate the kernel vector") {
  for (int n : {2, 5, 6}) {
    auto lv = singular::level::from_n(n);
    auto sv = singular::solve_singular(lv);
    auto alg = singular::make_algebra(n);
    vacuum_module vm(alg, lv.k());
    CHECK(vm.act(alg.element(F32, 1), sv.full).empty());
    CHECK(vm.act(alg.element(E01, 0), sv.full).empty());
    CHECK(vm.act(alg.element(E10, 0), sv.full).empty());
    // at another level F32(1) does not kill it
    vacuum_module off(alg, lv.k() + 1);
    CHECK_FALSE(off.act(alg.element(F32, 1), sv.full).empty());
  }
}

TEST_CASE("altering b1 at n = 8 breaks verification") {
  auto sv = singular::solve_singular(singular::level::from_n(8));
  auto ex = invariants::joint_exponents(8);
  for (std::size_t i = 0; i < sv.exponents.size(); ++i)
    if (sv.exponents[i] == std::array<int, 3>{1, 2, 0}) sv.coeffs[i] += 1;
  auto alg = singular::make_algebra(8);
  auto nm = invariants::u_forms(alg);
  auto space = singular::candidate_space(alg, nm, 8);
  poly full;
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (std::size_t j = 0; j < sv.exponents.size(); ++j)
      if (ex[i] == sv.exponents[j]) axpy(full, sv.coeffs[j], space[i]);
  sv.full = full;
  sv.b = singular::b_from_coeffs(8, sv.exponents, sv.coeffs);
  auto rep = singular::verify_singular(sv);
  CHECK_FALSE(rep.f32);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("JSON round trip re-verifies") {
  for (int n : {2, 3, 5, 6, 8}) {
    auto sv = singular::solve_singular(singular::level::from_n(n));
    auto j = singular::to_json(sv);
    auto back = singular::from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.coeffs == sv.coeffs);
    CHECK(back.b == sv.b);
    CHECK(equal(back.full, sv.full));
    CHECK(singular::verify_singular(back).ok());
    CHECK(singular::to_json(back).dump() == j.dump());
  }
}

TEST_CASE("cache write, read, corruption and foreign tables") {
  auto dir = scratch_dir("cache");
  auto lv = singular::level::from_n(5);
  CHECK_FALSE(singular::load_cache(dir, lv).has_value());
  auto sv = singular::solve_singular(lv);
  singular::save_cache(dir, sv, singular::verify_singular(sv));
  auto path = singular::cache_path(dir, lv);
  REQUIRE(fs::exists(path));
  for (auto& e : fs::directory_iterator(dir)) CHECK(e.path() == path);  // no temporary left behind
  auto hit = singular::load_cache(dir, lv);
  REQUIRE(hit.has_value());
  CHECK(hit->coeffs == sv.coeffs);
  CHECK_FALSE(singular::load_cache(dir, singular::level::from_n(6)).has_value());

  auto j = nlohmann::json::parse(std::ifstream(path));
  j["structure_hash"] = "0000000000000000";
  std::ofstream(path) << j.dump();
  std::string warning;
  CHECK_FALSE(singular::load_cache(dir, lv, &warning).has_value());

  std::ofstream(path) << "{ not json";
  warning.clear();
  CHECK_FALSE(singular::load_cache(dir, lv, &warning).has_value());
  CHECK_FALSE(warning.empty());
  fs::remove_all(dir);
}
