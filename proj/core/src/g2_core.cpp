#include "g2voa/g2_core.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace g2voa::g2 {

namespace {

constexpr std::array<std::string_view, dim> names = {"E32", "E31", "E21", "E11", "E10", "E01", "H01",
                                                     "F01", "H21", "F10", "F11", "F21", "F31", "F32"};
constexpr std::array<root, dim> gen_roots = {root{3, 2},  root{3, 1},   root{2, 1},   root{1, 1},  root{1, 0},
                                             root{0, 1},  root{0, 0},   root{0, -1},  root{0, 0},  root{-1, 0},
                                             root{-1, -1}, root{-2, -1}, root{-3, -1}, root{-3, -2}};

// Cartan basis elements as vectors in root coordinates: H01 = beta, H21 = 3(2 alpha + beta)
root cartan_vector(int g) { return g == H01 ? root{0, 1} : root{6, 3}; }

std::optional<terms> partial_bracket(int x, int y, const sign_table& t) {
  terms out;
  if (is_cartan(x) && is_cartan(y)) return out;
  if (is_cartan(x)) {
    rational v = inner(gen_roots[y], cartan_vector(x));
    if (v != 0) out.emplace_back(y, v);
    return out;
  }
  if (is_cartan(y)) {
    rational v = -inner(gen_roots[x], cartan_vector(y));
    if (v != 0) out.emplace_back(x, v);
    return out;
  }
  root gx = gen_roots[x], gy = gen_roots[y], s = gx + gy;
  if (s.is_zero()) {
    lie_element h = is_positive(gx) ? coroot(gx) : -1 * coroot(-gx);
    for (auto& [g, c] : h.coeffs()) out.emplace_back(g, c);
    return out;
  }
  if (!is_root(s)) return out;
  if (auto it = t.find({gx, gy}); it != t.end()) {
    out.emplace_back(vector_of(s), it->second);
    return out;
  }
  if (auto it = t.find({gy, gx}); it != t.end()) {
    out.emplace_back(vector_of(s), -it->second);
    return out;
  }
  return std::nullopt;
}

std::vector<std::pair<root, root>> unordered_pairs() {
  std::vector<std::pair<root, root>> out;
  auto& r = all_roots();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (is_root(r[i] + r[j])) out.emplace_back(r[i], r[j]);
  return out;
}

bool jacobi_consistent(const sign_table& t) {
  std::array<std::array<std::optional<terms>, dim>, dim> br;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) br[x][y] = partial_bracket(x, y, t);
  auto nested = [&](int x, int y, int z, std::array<rational, dim>& acc) {
    if (!br[y][z]) return false;
    for (auto& [g, c] : *br[y][z]) {
      if (!br[x][g]) return false;
      for (auto& [h, d] : *br[x][g]) acc[h] += c * d;
    }
    return true;
  };
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z) {
        std::array<rational, dim> acc;
        if (!nested(x, y, z, acc) || !nested(y, z, x, acc) || !nested(z, x, y, acc)) continue;
        for (auto& v : acc)
          if (v != 0) return false;
      }
  return true;
}

}  // namespace

const std::array<root, 6>& positive_roots() {
  static const std::array<root, 6> r = {root{1, 0}, root{0, 1}, root{1, 1}, root{2, 1}, root{3, 1}, root{3, 2}};
  return r;
}

const std::array<root, 12>& all_roots() {
  static const std::array<root, 12> r = [] {
    std::array<root, 12> out;
    for (int i = 0; i < 6; ++i) {
      out[i] = positive_roots()[i];
      out[i + 6] = -positive_roots()[i];
    }
    return out;
  }();
  return r;
}

bool is_positive(root r) { return std::find(positive_roots().begin(), positive_roots().end(), r) != positive_roots().end(); }
bool is_root(root r) { return is_positive(r) || is_positive(-r); }

rational inner(root x, root y) {
  return rational(2, 3) * x.a * y.a + 2 * x.b * y.b - (x.a * y.b + x.b * y.a);
}

std::string root_label(root r) {
  std::ostringstream os;
  os << r.a << "a" << (r.b >= 0 ? "+" : "") << r.b << "b";
  return os.str();
}

std::string_view name(int g) { return names.at(g); }

int from_name(std::string_view s) {
  for (int g = 0; g < dim; ++g)
    if (names[g] == s) return g;
  return -1;
}

root root_of(int g) { return gen_roots.at(g); }
bool is_cartan(int g) { return g == H01 || g == H21; }
bool is_raising(int g) { return g <= E01; }
bool is_lowering(int g) { return g == F01 || g >= F10; }

int raising_of(root r) {
  for (int g = 0; g < dim; ++g)
    if (is_raising(g) && gen_roots[g] == r) return g;
  throw std::invalid_argument("not a positive root: " + root_label(r));
}

int lowering_of(root r) { return vector_of(-r); }

int vector_of(root r) {
  for (int g = 0; g < dim; ++g)
    if (!is_cartan(g) && gen_roots[g] == r) return g;
  throw std::invalid_argument("not a root: " + root_label(r));
}

coroot_coeffs coroot_coefficients(root r) {
  if (!is_positive(r)) throw std::invalid_argument("coroot of a non positive root: " + root_label(r));
  rational c = 2 / inner(r, r);
  rational h10 = c * r.a / 3, h01 = c * r.b;
  return {static_cast<int>(h10.get_num().get_si()), static_cast<int>(h01.get_num().get_si())};
}

int pairing(root r, coroot_coeffs h) {
  rational v = inner(r, root{3 * h.h10, h.h01});
  return static_cast<int>(v.get_num().get_si());
}

int cartan_pairing(root r, int g) {
  rational v = inner(r, cartan_vector(g));
  return static_cast<int>(v.get_num().get_si());
}

// ---- lie_element

lie_element lie_element::basis(int g, rational c) {
  lie_element e;
  e.add(g, c);
  return e;
}

lie_element lie_element::cartan(const rational& h10, const rational& h01) {
  // H10 = (H21 - 3 H01)/2
  lie_element e;
  e.add(H21, h10 / 2);
  e.add(H01, h01 - 3 * h10 / 2);
  return e;
}

lie_element lie_element::cartan(coroot_coeffs h) { return cartan(rational(h.h10), rational(h.h01)); }

rational lie_element::coeff(int g) const {
  auto it = c_.find(g);
  return it == c_.end() ? rational(0) : it->second;
}

void lie_element::add(int g, const rational& v) {
  if (v == 0) return;
  auto& slot = c_[g];
  slot += v;
  if (slot == 0) c_.erase(g);
}

lie_element& lie_element::operator+=(const lie_element& o) {
  for (auto& [g, c] : o.c_) add(g, c);
  return *this;
}

lie_element& lie_element::operator-=(const lie_element& o) {
  for (auto& [g, c] : o.c_) add(g, -c);
  return *this;
}

lie_element& lie_element::operator*=(const rational& s) {
  if (s == 0) c_.clear();
  for (auto& [g, c] : c_) c *= s;
  return *this;
}

std::string lie_element::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [g, c] : c_) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + std::string(names[g]);
  }
  return s;
}

// ---- structure

structure::structure(const sign_table& signs) : signs_(signs) {
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      auto b = partial_bracket(x, y, signs_);
      if (!b) throw std::invalid_argument("incomplete sign table at [" + std::string(names[x]) + "," + std::string(names[y]) + "]");
      std::sort(b->begin(), b->end(), [](auto& p, auto& q) { return p.first < q.first; });
      br_[x][y] = std::move(*b);

      rational f = 0;
      if (is_cartan(x) && is_cartan(y)) {
        f = inner(cartan_vector(x), cartan_vector(y));
      } else if (!is_cartan(x) && !is_cartan(y) && (gen_roots[x] + gen_roots[y]).is_zero()) {
        f = 2 / inner(gen_roots[x], gen_roots[x]);
      }
      form_[x][y] = f;
    }
}

lie_element structure::bracket(const lie_element& x, const lie_element& y) const {
  lie_element out;
  for (auto& [g, c] : x.coeffs())
    for (auto& [h, d] : y.coeffs())
      for (auto& [k, e] : br_[g][h]) out.add(k, c * d * e);
  return out;
}

rational structure::form(const lie_element& x, const lie_element& y) const {
  rational out = 0;
  for (auto& [g, c] : x.coeffs())
    for (auto& [h, d] : y.coeffs()) out += c * d * form_[g][h];
  return out;
}

std::string structure::dump_json() const {
  nlohmann::ordered_json j;
  j["basis"] = std::vector<std::string>(names.begin(), names.end());
  auto arr = nlohmann::ordered_json::array();
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y) {
      if (br_[x][y].empty()) continue;
      auto t = nlohmann::ordered_json::array();
      for (auto& [g, c] : br_[x][y]) t.push_back({names[g], to_string(c)});
      arr.push_back({{"x", names[x]}, {"y", names[y]}, {"bracket", t}});
    }
  j["brackets"] = arr;
  auto fm = nlohmann::ordered_json::array();
  for (int x = 0; x < dim; ++x)
    for (int y = x; y < dim; ++y)
      if (form_[x][y] != 0) fm.push_back({names[x], names[y], to_string(form_[x][y])});
  j["form"] = fm;
  return j.dump();
}

std::string structure::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : dump_json()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

const sign_table& frozen_signs() {
  static const sign_table t = [] {
    struct row {
      const char* x;
      const char* y;
      int n;
    };
    static constexpr row rows[] = {
        {"F11", "F21", 3},  {"F10", "F21", 3},  {"F10", "F11", 2},  {"F10", "F01", -1}, {"F01", "F31", 1},
        {"E01", "F32", 1},  {"E01", "F11", 1},  {"E01", "E31", -1}, {"E10", "F31", 1},  {"E10", "F21", 2},
        {"E10", "F11", -3}, {"E10", "E01", 1},  {"E10", "E11", -2}, {"E10", "E21", -3}, {"E11", "F32", 1},
        {"E11", "F21", -2}, {"E11", "F10", -3}, {"E11", "F01", 1},  {"E11", "E21", -3}, {"E21", "F32", -1},
        {"E21", "F31", -1}, {"E21", "F11", -2}, {"E21", "F10", 2},  {"E31", "F32", -1}, {"E31", "F21", -1},
        {"E31", "F10", 1},  {"E32", "F31", -1}, {"E32", "F21", -1}, {"E32", "F11", 1},  {"E32", "F01", 1},
    };
    sign_table s;
    for (auto& r : rows) s[{gen_roots[from_name(r.x)], gen_roots[from_name(r.y)]}] = r.n;
    return s;
  }();
  return t;
}

const structure& standard() {
  static const structure s(frozen_signs());
  return s;
}

int chevalley_magnitude(root x, root y) {
  int p = 0;
  root z = y;
  while (true) {
    z = z + (-x);
    if (!is_root(z)) return p + 1;
    ++p;
  }
}

sign_table sign_pins() {
  return {{{root{1, 0}, root{0, 1}}, 1},
          {{root{1, 0}, root{1, 1}}, -2},
          {{root{1, 0}, root{2, 1}}, -3},
          {{root{0, 1}, root{3, 1}}, -1}};
}

std::vector<sign_table> search_signs(const sign_table& pins, std::size_t max_solutions) {
  auto pairs = unordered_pairs();
  std::vector<sign_table> sols;
  sign_table cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (sols.size() >= max_solutions) return;
    if (i == pairs.size()) {
      sols.push_back(cur);
      return;
    }
    auto [x, y] = pairs[i];
    int mag = chevalley_magnitude(x, y);
    std::vector<int> opts = {mag, -mag};
    if (auto it = pins.find({x, y}); it != pins.end()) opts = {it->second};
    if (auto it = pins.find({y, x}); it != pins.end()) opts = {-it->second};
    for (int s : opts) {
      cur[{x, y}] = s;
      if (jacobi_consistent(cur)) rec(i + 1);
      cur.erase({x, y});
    }
  };
  rec(0);
  return sols;
}

check_result check_jacobi(const structure& s) {
  check_result r;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z) {
        auto X = lie_element::basis(x), Y = lie_element::basis(y), Z = lie_element::basis(z);
        auto j = s.bracket(X, s.bracket(Y, Z)) + s.bracket(Y, s.bracket(Z, X)) + s.bracket(Z, s.bracket(X, Y));
        if (!j.is_zero())
          r.fail("jacobi(" + std::string(names[x]) + "," + std::string(names[y]) + "," + std::string(names[z]) + ") = " + j.str());
      }
  return r;
}

check_result check_form(const structure& s) {
  check_result r;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      if (s.form(x, y) != s.form(y, x)) r.fail("form asymmetric at " + std::string(names[x]) + "," + std::string(names[y]));
      for (int z = 0; z < dim; ++z) {
        auto X = lie_element::basis(x), Y = lie_element::basis(y), Z = lie_element::basis(z);
        if (s.form(X, s.bracket(Y, Z)) != s.form(s.bracket(X, Y), Z))
          r.fail("form not invariant at " + std::string(names[x]) + "," + std::string(names[y]) + "," + std::string(names[z]));
      }
    }
  if (s.form(E32, F32) != 1) r.fail("(E32|F32) != 1");
  return r;
}

check_result check_cartan(const structure& s) {
  check_result r;
  auto h10 = lie_element::cartan(1, 0), h01 = lie_element::cartan(0, 1);
  for (int g = 0; g < dim; ++g) {
    if (is_cartan(g)) continue;
    root d = gen_roots[g];
    auto e = lie_element::basis(g);
    if (s.bracket(h10, e) != pairing(d, {1, 0}) * e) r.fail("[H10," + std::string(names[g]) + "]");
    if (s.bracket(h01, e) != pairing(d, {0, 1}) * e) r.fail("[H01," + std::string(names[g]) + "]");
  }
  // the coroot of every positive root pairs with it to 2 and equals [E,F]
  for (root p : positive_roots()) {
    auto h = coroot_coefficients(p);
    if (pairing(p, h) != 2) r.fail("<" + root_label(p) + ", coroot> != 2");
    if (s.bracket(lie_element::basis(raising_of(p)), lie_element::basis(lowering_of(p))) != lie_element::cartan(h))
      r.fail("[E,F] != coroot at " + root_label(p));
  }
  return r;
}

lie_element bracket(const lie_element& x, const lie_element& y) { return standard().bracket(x, y); }
rational invariant_form(const lie_element& x, const lie_element& y) { return standard().form(x, y); }
lie_element coroot(root positive) { return lie_element::cartan(coroot_coefficients(positive)); }

}  // namespace g2voa::g2
