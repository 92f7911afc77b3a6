#include "g2voa/singular.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace g2voa::singular {

using namespace g2;
using invariants::side;

std::string level::tag() const { return "m" + std::to_string(m) + "_i" + std::to_string(i); }

level level::from_n(int n) {
  int r = (n - 1) % 3;
  if (n < 2 || (r != 1 && r != 2)) throw std::invalid_argument("n = " + std::to_string(n) + " is not 3m+i+1");
  return {(n - 1 - r) / 3, r};
}

affine_algebra make_algebra(int n) { return affine_algebra(-std::max(n, 2), 1); }

std::vector<poly> candidate_space(affine_algebra& alg, const invariants::named& un, int n) {
  std::vector<poly> out;
  for (auto& e : invariants::joint_exponents(n)) out.push_back(invariants::uvw_power(alg, un, side::u, e[0], e[1], e[2]));
  return out;
}

namespace {

std::array<int, 3> lead_exponent(int n) {
  return n % 2 == 0 ? std::array<int, 3>{n / 2, 0, 0} : std::array<int, 3>{(n - 3) / 2, 1, 0};
}

poly combine(const std::vector<poly>& basis, const std::vector<rational>& c) {
  poly out;
  for (std::size_t j = 0; j < basis.size(); ++j) axpy(out, c[j], basis[j]);
  return out;
}

std::string first_term(const affine_algebra& alg, const poly& p) {
  auto ts = sorted_terms(p);
  if (ts.empty()) return "0";
  poly one;
  add_term(one, ts.front().first, ts.front().second);
  return alg.str(one) + (ts.size() > 1 ? " + ..." : "");
}

}  // namespace

singular_vector solve_singular(const level& lv) {
  int n = lv.n();
  auto alg = make_algebra(n);
  auto un = invariants::u_forms(alg);
  vacuum_module vm(alg, lv.k());
  singular_vector sv;
  sv.lv = lv;
  sv.exponents = invariants::joint_exponents(n);
  auto cands = candidate_space(alg, un, n);

  auto f32 = static_cast<index_t>(alg.index(F32, 1));
  std::unordered_map<monomial, int, monomial_hash> rows;
  std::vector<linalg::sparse_vec> mat(cands.size());
  for (std::size_t j = 0; j < cands.size(); ++j)
    for (auto& [m, c] : vm.act_gen(f32, cands[j])) {
      auto [it, fresh] = rows.emplace(m, static_cast<int>(rows.size()));
      mat[j][it->second] = c;
    }
  auto ker = linalg::nullspace(mat, static_cast<int>(cands.size()));
  sv.kernel_dim = static_cast<int>(ker.size());
  if (ker.size() != 1)
    throw std::runtime_error("singular vector kernel at n = " + std::to_string(n) + " has dimension " +
                             std::to_string(ker.size()));

  auto lead = lead_exponent(n);
  std::size_t li = 0;
  while (sv.exponents[li] != lead) ++li;
  rational s = ker[0].count(static_cast<int>(li)) ? ker[0].at(static_cast<int>(li)) : rational(0);
  if (s == 0) throw std::runtime_error("singular vector has no leading u-term");
  sv.coeffs.assign(cands.size(), rational(0));
  for (auto& [j, c] : ker[0]) sv.coeffs[j] = c / s;

  sv.full = combine(cands, sv.coeffs);
  std::vector<rational> wfree(sv.coeffs);
  for (std::size_t j = 0; j < wfree.size(); ++j)
    if (sv.exponents[j][2] != 0) wfree[j] = 0;
  sv.mod_w = combine(cands, wfree);
  sv.b = b_from_coeffs(n, sv.exponents, sv.coeffs);
  return sv;
}

std::vector<rational> closed_form_coefficients(int n) {
  int d = invariants::dpartitions(n);
  int top = n % 2 == 0 ? n / 2 : (n - 3) / 2;
  std::vector<rational> out;
  rational prod = 1;
  for (int j = 0; j < d; ++j) {
    if (j > 0) prod *= binomial(top - 3 * (j - 1), 2);
    integer p2, p3;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(j));
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(j));
    rational b = prod * rational(p2);
    b /= rational(p3 * factorial(static_cast<unsigned long>(n % 2 == 0 ? 2 * j : 2 * j + 1)));
    out.push_back(b);
  }
  return out;
}

std::vector<rational> b_from_coeffs(int n, const std::vector<std::array<int, 3>>& ex,
                                    const std::vector<rational>& c) {
  std::vector<rational> out;
  int d = invariants::dpartitions(n);
  for (int j = 0; j < d; ++j) {
    std::array<int, 3> want =
        n % 2 == 0 ? std::array<int, 3>{n / 2 - 3 * j, 2 * j, 0} : std::array<int, 3>{(n - 3) / 2 - 3 * j, 2 * j + 1, 0};
    rational v = 0;
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (ex[i] == want) v = c[i];
    out.push_back(v);
  }
  return out;
}

nlohmann::ordered_json verify_report::to_json() const {
  nlohmann::ordered_json j;
  j["weight"] = weight;
  j["E01(0)"] = e01;
  j["E10(0)"] = e10;
  j["F32(1)"] = f32;
  j["closed_form"] = closed_form;
  j["recurrence"] = recurrence;
  j["failures"] = failures;
  j["ok"] = ok();
  return j;
}

verify_report verify_singular(const singular_vector& sv) {
  verify_report rep;
  int n = sv.lv.n();
  auto alg = make_algebra(n);
  vacuum_module vm(alg, sv.lv.k());

  rep.weight = !sv.full.empty();
  for (auto& [m, c] : sv.full)
    if (!(alg.weight(m) == affine::theta_delta(n))) {
      rep.weight = false;
      poly t;
      add_term(t, m, c);
      rep.failures.push_back("weight: " + alg.str(t));
      break;
    }
  if (sv.full.empty()) rep.failures.push_back("weight: zero vector");

  auto check = [&](int base, int mode, bool& flag, const char* label) {
    poly r = vm.act_gen(static_cast<index_t>(alg.index(base, mode)), sv.full);
    flag = r.empty();
    if (!flag) rep.failures.push_back(std::string(label) + ": " + first_term(alg, r));
  };
  check(E01, 0, rep.e01, "E01(0)");
  check(E10, 0, rep.e10, "E10(0)");
  check(F32, 1, rep.f32, "F32(1)");

  auto cf = closed_form_coefficients(n);
  auto b = b_from_coeffs(n, sv.exponents, sv.coeffs);
  rep.closed_form = b == cf && sv.b == b;
  if (!rep.closed_form) {
    std::ostringstream os;
    os << "closed form: b =";
    for (auto& x : b) os << ' ' << x;
    os << " expected";
    for (auto& x : cf) os << ' ' << x;
    rep.failures.push_back(os.str());
  }

  auto at = [&](int p, int q) -> rational {
    for (std::size_t i = 0; i < sv.exponents.size(); ++i)
      if (sv.exponents[i] == std::array<int, 3>{p, q, 0}) return sv.coeffs[i];
    return 0;
  };
  rep.recurrence = true;
  for (auto& e : sv.exponents) {
    if (e[2] != 0) continue;
    int p = e[0], q = e[1];
    rational lhs = at(p, q) * binomial(p, 2);
    rational rhs = p >= 3 ? 3 * at(p - 3, q + 2) * binomial(q + 2, 2) : rational(0);
    if (lhs != rhs) {
      rep.recurrence = false;
      rep.failures.push_back("recurrence at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  return rep;
}

// ---- serialization

nlohmann::ordered_json to_json(const singular_vector& sv) {
  nlohmann::ordered_json j;
  j["m"] = sv.lv.m;
  j["i"] = sv.lv.i;
  j["k"] = to_string(sv.lv.k());
  j["n"] = sv.lv.n();
  j["structure_hash"] = standard().hash();
  auto cs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sv.exponents.size(); ++i)
    cs.push_back({{"p", sv.exponents[i][0]}, {"q", sv.exponents[i][1]}, {"r", sv.exponents[i][2]},
                  {"coeff", to_string(sv.coeffs[i])}});
  j["coefficients"] = cs;
  auto bs = nlohmann::ordered_json::array();
  for (auto& x : sv.b) bs.push_back(to_string(x));
  j["b"] = bs;
  j["kernel_dim"] = sv.kernel_dim;
  auto alg = make_algebra(sv.lv.n());
  j["vector"] = g2voa::to_json(alg, sv.full);
  return j;
}

singular_vector from_json(const nlohmann::json& j) {
  singular_vector sv;
  sv.lv = {j.at("m").get<int>(), j.at("i").get<int>()};
  int n = sv.lv.n();
  if (j.at("n").get<int>() != n) throw std::invalid_argument("level and n disagree");
  for (auto& c : j.at("coefficients")) {
    sv.exponents.push_back({c.at("p").get<int>(), c.at("q").get<int>(), c.at("r").get<int>()});
    sv.coeffs.push_back(parse_rational(c.at("coeff").get<std::string>()));
  }
  if (sv.exponents != invariants::joint_exponents(n)) throw std::invalid_argument("unexpected exponent list");
  for (auto& x : j.at("b")) sv.b.push_back(parse_rational(x.get<std::string>()));
  sv.kernel_dim = j.at("kernel_dim").get<int>();
  auto alg = make_algebra(n);
  sv.full = affine_from_json(alg, j.at("vector"));
  // rebuild the w-free part from the coefficients
  auto un = invariants::u_forms(alg);
  auto cands = candidate_space(alg, un, n);
  std::vector<rational> wfree(sv.coeffs);
  for (std::size_t i = 0; i < wfree.size(); ++i)
    if (sv.exponents[i][2] != 0) wfree[i] = 0;
  sv.mod_w = combine(cands, wfree);
  if (combine(cands, sv.coeffs) != sv.full) throw std::invalid_argument("vector does not match coefficients");
  return sv;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const level& lv) {
  return dir / ("singular_" + lv.tag() + ".json");
}

std::optional<singular_vector> load_cache(const std::filesystem::path& dir, const level& lv, std::string* warning) {
  auto path = cache_path(dir, lv);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  auto warn = [&](const std::string& w) {
    if (warning) *warning = w;
    return std::nullopt;
  };
  try {
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    if (j.at("structure_hash").get<std::string>() != standard().hash())
      return warn("cache entry " + path.string() + " was made with another structure table; recomputing");
    auto sv = from_json(j);
    if (!(sv.lv == lv)) return warn("cache entry " + path.string() + " is for another level; recomputing");
    return sv;
  } catch (const std::exception& e) {
    return warn("cache entry " + path.string() + " is unreadable (" + e.what() + "); recomputing");
  }
}

void save_cache(const std::filesystem::path& dir, const singular_vector& sv, const verify_report& rep) {
  std::filesystem::create_directories(dir);
  auto path = cache_path(dir, sv.lv);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    auto j = to_json(sv);
    j["report_hash"] = fnv1a(rep.to_json().dump());
    out << j.dump(1) << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace g2voa::singular
