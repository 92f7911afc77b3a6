#include "g2voa/appendix_a.hpp"
#include "g2voa/appendix_b.hpp"
#include "g2voa/invariants.hpp"
#include "g2voa/singular.hpp"
#include "g2voa/structure_checks.hpp"
#include "g2voa/zhu.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>

namespace fs = std::filesystem;
using namespace g2voa;
using oj = nlohmann::ordered_json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct config {
  std::string format = "text";
  std::string cache_dir;
  int jobs = 1;
  bool recheck = false;
  int digits = 12;
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_checks(const config& cfg, const check_list& checks, oj extra = oj::object()) {
  if (cfg.format == "json") {
    extra["checks"] = checks.to_json();
    extra["passed"] = static_cast<int>(checks.items.size()) - checks.failures();
    extra["failed"] = checks.failures();
    std::cout << extra.dump(2) << '\n';
    return;
  }
  for (auto& c : checks.items) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.group << "  " << c.name << '\n';
    if (!c.ok && !c.detail.empty()) std::cout << "     " << c.detail << '\n';
  }
  std::cout << checks.items.size() - static_cast<std::size_t>(checks.failures()) << " passed, " << checks.failures()
            << " failed\n";
}

// runs the tasks on up to jobs threads; results keep the task order
check_list run_tasks(const std::vector<std::function<check_list()>>& tasks, int jobs) {
  std::vector<check_list> results(tasks.size());
  std::size_t next = 0;
  while (next < tasks.size()) {
    std::vector<std::future<check_list>> batch;
    std::size_t start = next;
    for (int j = 0; j < std::max(jobs, 1) && next < tasks.size(); ++j, ++next)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, tasks[next]));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  check_list out;
  for (auto& r : results) out.append(r);
  return out;
}

int cmd_verify_structure(const config& cfg, const std::string& flip) {
  const g2::structure* s = &g2::standard();
  std::unique_ptr<g2::structure> flipped;
  if (!flip.empty()) {
    auto comma = flip.find(',');
    int x = comma == std::string::npos ? -1 : g2::from_name(flip.substr(0, comma));
    int y = comma == std::string::npos ? -1 : g2::from_name(flip.substr(comma + 1));
    if (x < 0 || y < 0) throw usage_error("--flip-sign expects two generator names, e.g. E01,E31");
    flipped = std::make_unique<g2::structure>(flip_sign(g2::frozen_signs(), x, y));
    s = flipped.get();
  }
  auto checks = verify_structure(*s);
  oj extra;
  extra["structure_hash"] = s->hash();
  print_checks(cfg, checks, extra);
  if (!checks.ok() && cfg.format == "text") {
    for (auto& c : checks.items)
      if (!c.ok) {
        std::cerr << "first failure: " << c.name << '\n';
        break;
      }
  }
  return checks.ok() ? 0 : exit_fail;
}

singular::level make_level(int m, int i) {
  if (m < 0) throw usage_error("-m must be nonnegative");
  if (i != 1 && i != 2) throw usage_error("-i must be 1 or 2");
  return {m, i};
}

// cached when possible; recheck recomputes the kernel and rewrites the entry
std::pair<singular::singular_vector, singular::verify_report> obtain_singular(const config& cfg,
                                                                              const singular::level& lv) {
  fs::path dir = cfg.cache_dir;
  std::optional<singular::singular_vector> sv;
  if (!cfg.recheck) {
    std::string warning;
    sv = singular::load_cache(dir, lv, &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "; recomputing\n";
    if (sv) std::cerr << "singular vector for " << lv.tag() << " read from " << singular::cache_path(dir, lv).string() << '\n';
  }
  bool fresh = !sv;
  if (fresh) sv = singular::solve_singular(lv);
  auto rep = singular::verify_singular(*sv);
  if (fresh) {
    try {
      fs::create_directories(dir);
      singular::save_cache(dir, *sv, rep);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache not written: " << e.what() << '\n';
    }
  }
  return {std::move(*sv), rep};
}

int cmd_singular(const config& cfg, int m, int i) {
  auto lv = make_level(m, i);
  auto t0 = std::chrono::steady_clock::now();
  auto [sv, rep] = obtain_singular(cfg, lv);
  if (cfg.format == "json") {
    oj j = singular::to_json(sv);
    j["verification"] = rep.to_json();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "level k = " << lv.k() << "  (m = " << lv.m << ", i = " << lv.i << ", n = " << lv.n() << ")\n";
    std::cout << "b =";
    for (auto& b : sv.b) std::cout << ' ' << b;
    std::cout << "\nC_{p,q,r} for u^p v^q w^r.1:\n";
    for (std::size_t k = 0; k < sv.exponents.size(); ++k)
      if (sv.coeffs[k] != 0)
        std::cout << "  (" << sv.exponents[k][0] << "," << sv.exponents[k][1] << "," << sv.exponents[k][2]
                  << ")  " << sv.coeffs[k] << '\n';
    std::cout << "kernel dimension " << sv.kernel_dim << '\n';
    auto jr = rep.to_json();
    for (auto& [k, v] : jr.items())
      if (v.is_boolean()) std::cout << (v.get<bool>() ? "PASS " : "FAIL ") << k << '\n';
    for (auto& f : rep.failures) std::cout << "     " << f << '\n';
    std::cerr << "elapsed " << seconds_since(t0) << " s\n";
  }
  return rep.ok() ? 0 : exit_fail;
}

int cmd_classify(const config& cfg, int m, int i, bool emit_p_basis, int max_grade) {
  auto lv = make_level(m, i);
  if (max_grade >= 0 && max_grade < lv.n())
    throw usage_error("--max-grade " + std::to_string(max_grade) + " is below n = " + std::to_string(lv.n()));
  auto t0 = std::chrono::steady_clock::now();
  auto [sv, rep] = obtain_singular(cfg, lv);
  if (!rep.ok()) {
    std::cerr << "singular vector failed verification\n";
    return exit_fail;
  }
  auto c = zhu::classify(sv);
  bool ok = c.polys.p1_product && c.polys.p2_top && c.contains_zero() && c.p1_in_span && c.p2_in_span &&
            c.vanish_at_zero && c.survivors() > 0;
  for (auto& s : c.stage2_polys) ok = ok && s.q.degree() == lv.n();
  if (cfg.format == "json") {
    std::cout << c.to_json(cfg.digits, emit_p_basis).dump(2) << '\n';
  } else {
    int n = lv.n();
    std::cout << "level k = " << lv.k() << "  (m = " << lv.m << ", i = " << lv.i << ", n = " << n << ")\n";
    std::cout << "p1 = " << factor(c.polys.p1.at_h01(0)).str("H10") << "   C1 = C_{n,0,0} = " << c.polys.c_lead
              << (c.polys.p1_product ? "" : "   [product form FAILS]") << '\n';
    std::cout << "p2 = " << c.polys.p2.str() << '\n';
    std::cout << "     top part C2 H11(H11-1)...(H11-n+1), C2 = " << c.polys.c2 << ", residual degree "
              << c.polys.p2_residual_degree << (c.polys.p2_top ? "" : "   [FAILS]") << '\n';
    std::cout << "dim R(k)_0 = " << c.r0.basis.size() << '\n';
    if (emit_p_basis)
      for (std::size_t k = 0; k < c.r0.p.size(); ++k) std::cout << "  p_" << k << " = " << c.r0.p[k].str() << '\n';
    for (auto& s : c.stage2_polys)
      std::cout << "H10 = " << s.mu10 << ":  p2 -> " << s.fac.str("H01") << "   (degree " << s.q.degree() << ")\n";
    std::cout << "candidates " << c.candidates.size() << " (bound " << n * n << "), surviving " << c.survivors() << ":\n";
    for (auto& cand : c.candidates)
      if (cand.survives) std::cout << "  mu = (" << cand.mu10 << ", " << cand.mu01_text(cfg.digits) << ")\n";
    std::cerr << "elapsed " << seconds_since(t0) << " s\n";
  }
  return ok ? 0 : exit_fail;
}

const std::vector<std::string>& appendix_ids() {
  static const std::vector<std::string> ids = {"A.1", "A.2", "A.3", "A.4", "B.1", "B.2", "B.3", "B.4", "B.6", "B.7"};
  return ids;
}

std::function<check_list()> appendix_task(const std::string& id) {
  const std::vector<rational> levels = {rational(-5, 3), rational(1, 3), rational(5, 2)};
  if (id == "A.1") return [] { return appendix::verify_a1(); };
  if (id == "A.2") return [=] { return appendix::verify_a2(levels); };
  if (id == "A.3") return [] { return appendix::verify_a3(20240611u, 40); };
  if (id == "A.4") return [=] { return appendix::verify_a4(8, levels); };
  if (id == "B.1") return [] { return appendix::verify_b1(4); };
  if (id == "B.2") return [] { return appendix::verify_b2(4, 20240611u); };
  if (id == "B.3") return [] { return appendix::verify_b3(); };
  if (id == "B.4") return [] { return appendix::verify_b4(5); };
  if (id == "B.6") return [] { return appendix::verify_b6(6); };
  if (id == "B.7") return [] { return appendix::verify_b7(); };
  throw usage_error("unknown appendix identity group " + id);
}

int cmd_verify_appendices(const config& cfg, const std::string& only) {
  std::vector<std::function<check_list()>> tasks;
  if (only.empty()) {
    for (auto& id : appendix_ids()) tasks.push_back(appendix_task(id));
  } else {
    tasks.push_back(appendix_task(only));
  }
  auto t0 = std::chrono::steady_clock::now();
  auto checks = run_tasks(tasks, cfg.jobs);
  print_checks(cfg, checks);
  if (cfg.format == "text") std::cerr << "elapsed " << seconds_since(t0) << " s\n";
  return checks.ok() ? 0 : exit_fail;
}

int cmd_invariants(const config& cfg, int n) {
  if (n < 0) throw usage_error("--grade must be nonnegative");
  auto r = invariants::grade(n);
  oj j;
  j["grade"] = n;
  j["component"] = r.component;
  j["component_brute_force"] = r.component_brute;
  j["e01_kernel"] = r.e01_s;
  j["e01_predicted"] = r.e01_pred;
  j["joint_kernel_S"] = r.joint_s;
  j["joint_kernel_U"] = r.joint_u;
  j["joint_predicted"] = r.joint_pred;
  j["d(n)"] = invariants::dpartitions(n);
  j["abcw_in_kernel"] = r.abcw_in_kernel;
  j["uvw_in_kernel"] = r.uvw_in_kernel;
  j["symmetrized_spans"] = r.symmetrized_spans;
  j["probes"] = r.probes_ok;
  j["recurrence"] = r.recurrence_ok;
  j["ok"] = r.ok();
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << '\n';
  }
  return r.ok() ? 0 : exit_fail;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("G2VOA_CACHE_DIR"); env && *env) return env;
  return ".g2voa-cache";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2voa: singular vectors and Zhu classification for affine G2 at one-third integer levels"};
  app.require_subcommand(1);
  config cfg;
  cfg.cache_dir = default_cache_dir();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached singular vectors (default $G2VOA_CACHE_DIR)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for independent checks")->check(CLI::Range(1, 256));
  app.add_flag("--recheck", cfg.recheck, "Recompute instead of reading the cache, then rewrite it");
  app.add_option("--numeric-digits", cfg.digits, "Digits for numeric display of irrational roots")
      ->check(CLI::Range(1, 30));

  std::string flip;
  auto* vs = app.add_subcommand("verify-structure", "Check the structure constants of g2");
  vs->add_option("--flip-sign", flip, "Negate one structure constant before checking (test hook), e.g. E01,E31");

  int m = 0, i = 1;
  auto* sg = app.add_subcommand("singular", "Singular vector of N(k,0), k = m - 2 + i/3");
  sg->add_option("-m", m, "m >= 0")->required();
  sg->add_option("-i", i, "i in {1,2}")->required();

  bool emit = false;
  int max_grade = -1;
  auto* cl = app.add_subcommand("classify", "Classification polynomials and admissible highest weights");
  cl->add_option("-m", m, "m >= 0")->required();
  cl->add_option("-i", i, "i in {1,2}")->required();
  cl->add_flag("--emit-p-basis", emit, "Print the whole P(k)_0 basis");
  cl->add_option("--max-grade", max_grade, "Upper bound for the grade; must be at least n");

  std::string only;
  auto* va = app.add_subcommand("verify-appendices", "Verify the appendix identities");
  va->add_option("--only", only, "One group: A.1 A.2 A.3 A.4 B.1 B.2 B.3 B.4 B.6 B.7");

  int grade = 0;
  auto* iv = app.add_subcommand("invariants", "Invariant subalgebra counts at one grade");
  iv->add_option("--grade", grade, "Grade n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*vs) return cmd_verify_structure(cfg, flip);
    if (*sg) return cmd_singular(cfg, m, i);
    if (*cl) return cmd_classify(cfg, m, i, emit, max_grade);
    if (*va) return cmd_verify_appendices(cfg, only);
    if (*iv) return cmd_invariants(cfg, grade);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_usage;
}
