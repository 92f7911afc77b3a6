#pragma once

#include "g2voa/invariants.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace g2voa::singular {

// k = m - 2 + i/3, n = 3k + 7 = 3m + i + 1
struct level {
  int m = 0;
  int i = 1;

  rational k() const { return rational(3 * m + i - 6, 3); }
  int n() const { return 3 * m + i + 1; }
  std::string tag() const;
  static level from_n(int n);  // throws when n is not 3m + i + 1 with i in {1, 2}
  friend bool operator==(const level&, const level&) = default;
};

// U(g-hat) window large enough for grade n work: modes -max(n,2) .. 1
affine_algebra make_algebra(int n);

// u^p v^q w^r.1 for 2p+3q+3r = n, in the order of invariants::joint_exponents
std::vector<poly> candidate_space(affine_algebra& alg, const invariants::named& un, int n);

struct singular_vector {
  level lv;
  std::vector<std::array<int, 3>> exponents;
  std::vector<rational> coeffs;  // C_{p,q,r}, aligned with exponents
  std::vector<rational> b;       // coefficients of the w-free part, b_0 = 1
  poly full;                     // sum C u^p v^q w^r.1, in make_algebra(n)
  poly mod_w;                    // the r = 0 terms only
  int kernel_dim = 0;
};

// exact kernel of C -> F32(1).(sum C u^p v^q w^r.1); throws unless it is one-dimensional
singular_vector solve_singular(const level& lv);

// closed form for b_j, j < d(n), with b_0 = 1
std::vector<rational> closed_form_coefficients(int n);

// b_j read off a coefficient table: C_{n/2-3j,2j,0} or C_{(n-3)/2-3j,2j+1,0}
std::vector<rational> b_from_coeffs(int n, const std::vector<std::array<int, 3>>& ex,
                                    const std::vector<rational>& c);

struct verify_report {
  bool weight = false;  // every term has weight n(theta_check - delta)
  bool e01 = false;
  bool e10 = false;
  bool f32 = false;
  bool closed_form = false;
  bool recurrence = false;  // C_{p,q,0} (p choose 2) = 3 C_{p-3,q+2,0} (q+2 choose 2)
  std::vector<std::string> failures;
  bool ok() const { return weight && e01 && e10 && f32 && closed_form && recurrence; }
  nlohmann::ordered_json to_json() const;
};

verify_report verify_singular(const singular_vector& sv);

// ---- serialization and the on-disk cache
nlohmann::ordered_json to_json(const singular_vector& sv);
singular_vector from_json(const nlohmann::json& j);

std::filesystem::path cache_path(const std::filesystem::path& dir, const level& lv);
// nullopt when absent, unreadable, for another structure table or for another level
std::optional<singular_vector> load_cache(const std::filesystem::path& dir, const level& lv,
                                          std::string* warning = nullptr);
// write to a temporary file in dir, then rename over the final name
void save_cache(const std::filesystem::path& dir, const singular_vector& sv, const verify_report& rep);

std::string fnv1a(const std::string& s);

}  // namespace g2voa::singular
