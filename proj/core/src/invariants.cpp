#include "g2voa/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace g2voa::invariants {

using namespace g2;
using affine::X;

int string_label(int base) {
  switch (base) {
    case E32: case E31: return 1;
    case E21: return 2;
    case E11: case E10: return 3;
    case E01: case H01: case F01: return 4;
    case H21: return 5;
    case F10: case F11: return 6;
    case F21: return 7;
    case F31: case F32: return 8;
  }
  throw std::invalid_argument("string_label: bad generator");
}

std::vector<int> string_bases(int label) {
  switch (label) {
    case 1: return {E32, E31};
    case 2: return {E21};
    case 3: return {E11, E10};
    case 4: return {E01, H01, F01};
    case 5: return {H21};
    case 6: return {F10, F11};
    case 7: return {F21};
    case 8: return {F31, F32};
  }
  throw std::invalid_argument("string_bases: label must be 1..8");
}

values solve_weight_system(int c1, int c2, int c3) {
  // 3m1 + 3m2 - 2n = -c1, 2m1 + m2 - n = -c2, -m1 - m2 + n = -c3
  values v;
  v.n = -c1 - 3 * c3;
  v.m1 = -c2 - c3;
  v.m2 = v.n + c3 - v.m1;
  return v;
}

values solved_values(int base, int depth) {
  root r = root_of(base);
  return solve_weight_system(r.a, r.b, -depth);
}

values table1(int label, int depth, int base) {
  if (depth < 1) throw std::invalid_argument("table1: depth must be positive");
  if (label == 1 && depth == 1) throw std::invalid_argument("table1: B^1_{-1} is excluded");
  auto bs = string_bases(label);
  if (std::find(bs.begin(), bs.end(), base) == bs.end())
    throw std::invalid_argument("table1: generator not in this string");
  int j = label == 1 ? depth - 1 : depth;
  switch (base) {
    case E32: return {j, j + 1, 3 * j};
    case E31: return {j + 1, j, 3 * j};
    case E21: return {j, j, 3 * j - 2};
    case E11: return {j, j + 1, 3 * j - 1};
    case E10: return {j + 1, j, 3 * j - 1};
    case E01: return {j, j + 2, 3 * j};
    case H01: return {j + 1, j + 1, 3 * j};
    case F01: return {j + 2, j, 3 * j};
    case H21: return {j + 1, j + 1, 3 * j};
    case F10: return {j + 1, j + 2, 3 * j + 1};
    case F11: return {j + 2, j + 1, 3 * j + 1};
    case F21: return {j + 2, j + 2, 3 * j + 2};
    case F31: return {j + 2, j + 3, 3 * j + 3};
    case F32: return {j + 3, j + 2, 3 * j + 3};
  }
  throw std::logic_error("table1");
}

namespace {
void require_allowed(const simple_string& s) {
  if (s.first == 1 && s.second == 1) throw std::invalid_argument("beta-string contains B^1_{-1}");
  if (s.second < 1) throw std::invalid_argument("beta-string depth must be positive");
}
}  // namespace

string_member minimal_member(const beta_string& b) {
  string_member out;
  for (auto& s : b) {
    require_allowed(s);
    int best = -1;
    values bv;
    for (int g : string_bases(s.first)) {
      values v = solved_values(g, s.second);
      if (best < 0 || v.m2 < bv.m2) {
        best = g;
        bv = v;
      }
    }
    out.y.push_back(X(best, -s.second));
    out.m1 += bv.m1;
    out.m2 += bv.m2;
    out.n += bv.n;
  }
  return out;
}

int string_m(const beta_string& b) {
  int total = 0;
  for (auto& s : b) {
    require_allowed(s);
    int m = -1;
    for (int g : string_bases(s.first)) {
      values v = solved_values(g, s.second);
      if (m >= 0 && v.m1 + v.m2 != m) throw std::logic_error("string_m: member dependent");
      m = v.m1 + v.m2;
    }
    total += m;
  }
  return total;
}

std::vector<component_entry> theta_delta_entries(const affine_algebra& alg, int n) {
  // each admissible factor has n(y) >= 1, so the depth of y is bounded by n
  struct factor {
    int index;
    values v;
    affine::generator g;
  };
  std::vector<factor> fs;
  for (int depth = 1; depth <= n; ++depth)
    for (int b = 0; b < dim; ++b) {
      if (depth == 1 && string_label(b) == 1) continue;
      values v = solved_values(b, depth);
      if (v.n < 1 || v.n > n) continue;
      fs.push_back({alg.index(b, -depth), v, X(b, -depth)});
    }
  std::sort(fs.begin(), fs.end(), [](const factor& x, const factor& y) { return x.index < y.index; });

  std::vector<component_entry> out;
  component_entry cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      component_entry e = cur;
      monomial m;
      for (auto& g : e.y) m.push_back(static_cast<index_t>(alg.index(g)));
      m.insert(m.end(), e.m1, static_cast<index_t>(alg.index(E32, -1)));
      m.insert(m.end(), e.m2, static_cast<index_t>(alg.index(E31, -1)));
      std::sort(m.begin(), m.end());
      e.full = std::move(m);
      out.push_back(std::move(e));
      return;
    }
    for (std::size_t j = i; j < fs.size(); ++j) {
      if (fs[j].v.n > left) continue;
      cur.y.push_back(fs[j].g);
      cur.m1 += fs[j].v.m1;
      cur.m2 += fs[j].v.m2;
      rec(j, left - fs[j].v.n);
      cur.y.pop_back();
      cur.m1 -= fs[j].v.m1;
      cur.m2 -= fs[j].v.m2;
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end(),
            [](const component_entry& x, const component_entry& y) { return mono_less(x.full, y.full); });
  return out;
}

std::vector<monomial> theta_delta_component(const affine_algebra& alg, int n) {
  std::vector<monomial> out;
  for (auto& e : theta_delta_entries(alg, n)) out.push_back(e.full);
  return out;
}

named s_forms(affine_algebra& alg) {
  auto g = [&](int b, int mode) { return pbw_algebra::gen(alg.index(b, mode)); };
  auto prod = [](std::initializer_list<poly> fs) {
    poly out = pbw_algebra::one();
    for (auto& f : fs) out = s_mul(out, f);
    return out;
  };
  named nm;
  nm.a = g(E21, -1);
  nm.b = prod({g(E31, -1), g(E11, -1)}) - prod({g(E32, -1), g(E10, -1)});
  nm.c = prod({g(E31, -1), g(E31, -1), g(E01, -1)}) - prod({g(E32, -1), g(E31, -1), g(H01, -1)}) -
         prod({g(E32, -1), g(E32, -1), g(F01, -1)});
  nm.w = prod({g(E31, -1), g(E32, -2)}) - prod({g(E32, -1), g(E31, -2)});
  nm.u = scaled(s_mul(nm.a, nm.a), rational(1, 3)) - nm.b;
  nm.v = scaled(s_power(nm.a, 3), rational(2, 9)) - s_mul(nm.a, nm.b) - scaled(nm.c, 3);
  return nm;
}

named u_forms(affine_algebra& alg) {
  auto w = [&](std::initializer_list<affine::generator> gs) { return alg.word(gs); };
  named nm;
  nm.a = w({X(E21, -1)});
  nm.b = w({X(E31, -1), X(E11, -1)}) - w({X(E32, -1), X(E10, -1)});
  nm.c = w({X(E31, -1), X(E31, -1), X(E01, -1)}) - w({X(E32, -1), X(E31, -1), X(H01, -1)}) -
         w({X(E32, -1), X(E32, -1), X(F01, -1)});
  nm.w = w({X(E31, -1), X(E32, -2)}) - w({X(E32, -1), X(E31, -2)});
  nm.u = scaled(alg.mul(nm.a, nm.a), rational(1, 3)) - nm.b;
  nm.v = scaled(alg.power(nm.a, 3), rational(2, 9)) - alg.mul(nm.a, nm.b) - scaled(nm.c, 3);
  return nm;
}

namespace {

struct column_index {
  std::vector<monomial> basis;
  std::unordered_map<monomial, int, monomial_hash> pos;

  explicit column_index(std::vector<monomial> b) : basis(std::move(b)) {
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<int>(i));
  }
  linalg::sparse_vec vec(const poly& f) const {
    linalg::sparse_vec out;
    for (auto& [m, c] : f) {
      auto it = pos.find(m);
      if (it == pos.end()) throw std::logic_error("element leaves the graded component");
      out[it->second] = c;
    }
    return out;
  }
  poly unvec(const linalg::sparse_vec& v) const {
    poly out;
    for (auto& [i, c] : v) add_term(out, basis[i], c);
    return out;
  }
};

// rows are keyed by (raiser slot, image monomial)
struct row_keys {
  std::unordered_map<monomial, int, monomial_hash> ids;
  int key(int slot, const monomial& m) {
    monomial k(m);
    k.insert(k.begin(), static_cast<index_t>(slot));
    auto [it, fresh] = ids.emplace(std::move(k), static_cast<int>(ids.size()));
    return it->second;
  }
};

}  // namespace

kernel invariant_kernel(affine_algebra& alg, int n, const std::vector<int>& raisers, side sd) {
  if (alg.min_mode() > -std::max(n, 1) || alg.max_mode() < 0)
    throw std::invalid_argument("invariant_kernel: algebra window too small");
  kernel out;
  out.basis = monomials_of_weight(alg, affine::theta_delta(n));
  column_index cols(out.basis);
  row_keys rows;
  vacuum_module vm(alg, 0);
  std::vector<linalg::sparse_vec> mat(out.basis.size());
  for (std::size_t j = 0; j < out.basis.size(); ++j)
    for (std::size_t s = 0; s < raisers.size(); ++s) {
      int g = alg.index(raisers[s], 0);
      poly img = sd == side::s ? s_adjoint(alg, g, poly{{out.basis[j], rational(1)}})
                               : vm.act_gen(static_cast<index_t>(g), out.basis[j]);
      for (auto& [m, c] : img) mat[j][rows.key(static_cast<int>(s), m)] = c;
    }
  for (auto& v : linalg::nullspace(mat, static_cast<int>(out.basis.size())))
    out.vectors.push_back(cols.unvec(v));
  return out;
}

int count_e01(int n) { return static_cast<int>(e01_exponents(n).size()); }
int count_joint(int n) { return static_cast<int>(joint_exponents(n).size()); }

int dpartitions(int n) {
  if (n < 0) return 0;
  return n % 2 == 0 ? (n + 6) / 6 : (n + 3) / 6;
}

std::vector<std::array<int, 3>> joint_exponents(int n) {
  std::vector<std::array<int, 3>> out;
  for (int p = n / 2; p >= 0; --p)
    for (int q = (n - 2 * p) / 3; q >= 0; --q) {
      int rest = n - 2 * p - 3 * q;
      if (rest % 3 == 0) out.push_back({p, q, rest / 3});
    }
  return out;
}

std::vector<std::array<int, 4>> e01_exponents(int n) {
  std::vector<std::array<int, 4>> out;
  for (int p = n; p >= 0; --p)
    for (int q = (n - p) / 2; q >= 0; --q)
      for (int r = (n - p - 2 * q) / 3; r >= 0; --r) {
        int rest = n - p - 2 * q - 3 * r;
        if (rest % 3 == 0) out.push_back({p, q, r, rest / 3});
      }
  return out;
}

poly uvw_power(affine_algebra& alg, const named& nm, side sd, int p, int q, int r) {
  if (sd == side::s) return s_mul(s_mul(s_power(nm.u, p), s_power(nm.v, q)), s_power(nm.w, r));
  return alg.mul(alg.mul(alg.power(nm.u, p), alg.power(nm.v, q)), alg.power(nm.w, r));
}

poly abcw_power(const named& nm, int p, int q, int r, int s) {
  return s_mul(s_mul(s_power(nm.a, p), s_power(nm.b, q)), s_mul(s_power(nm.c, r), s_power(nm.w, s)));
}

monomial probe_monomial(const affine_algebra& alg, int p, int q, int r) {
  monomial m;
  m.insert(m.end(), p + 2 * q + r, static_cast<index_t>(alg.index(E31, -1)));
  m.insert(m.end(), p, static_cast<index_t>(alg.index(E11, -1)));
  m.insert(m.end(), q, static_cast<index_t>(alg.index(E01, -1)));
  m.insert(m.end(), r, static_cast<index_t>(alg.index(E32, -2)));
  std::sort(m.begin(), m.end());
  return m;
}

std::map<std::array<int, 4>, rational> abcw_coordinates(const named& nm, int n, const poly& f) {
  auto ex = e01_exponents(n);
  // columns: the monomials a^p b^q c^r w^s, then -f; a kernel vector ending in 1 gives the coordinates
  std::vector<poly> gens;
  for (auto& e : ex) gens.push_back(abcw_power(nm, e[0], e[1], e[2], e[3]));
  gens.push_back(scaled(f, -1));
  std::unordered_map<monomial, int, monomial_hash> ids;
  std::vector<linalg::sparse_vec> mat(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (auto& [m, c] : gens[j]) {
      auto [it, fresh] = ids.emplace(m, static_cast<int>(ids.size()));
      mat[j][it->second] = c;
    }
  int last = static_cast<int>(ex.size());
  for (auto& v : linalg::nullspace(mat, last + 1)) {
    auto it = v.find(last);
    if (it == v.end()) continue;
    std::map<std::array<int, 4>, rational> out;
    for (auto& [j, c] : v)
      if (j != last) out[ex[j]] = c / it->second;
    return out;
  }
  return {};
}

namespace {
template <class Rhs>
std::vector<recurrence_failure> recurrence(const std::map<std::array<int, 4>, rational>& c, int n, Rhs rhs) {
  auto at = [&](int p, int q, int r, int s) -> rational {
    if (p < 0 || q < 0 || r < 0) return 0;
    auto it = c.find({p, q, r, s});
    return it == c.end() ? rational(0) : it->second;
  };
  std::vector<recurrence_failure> out;
  for (int s = 0; 3 * s <= n; ++s)
    for (auto& e : e01_exponents(n - 3 * s)) {
      if (e[3] != 0 || e[0] == 0) continue;
      int p = e[0], q = e[1], r = e[2];
      rational lhs = 3 * p * at(p, q, r, s);
      rational rv = rhs(at, p, q, r, s);
      if (lhs != rv) out.push_back({p, q, r, lhs, rv});
    }
  return out;
}
}  // namespace

std::vector<recurrence_failure> check_recurrence(const std::map<std::array<int, 4>, rational>& c, int n) {
  return recurrence(c, n, [](auto& at, int p, int q, int r, int s) -> rational {
    return rational(-2 * (q + 1)) * at(p - 2, q + 1, r, s) + rational(r + 1) * at(p - 1, q - 1, r + 1, s);
  });
}

std::vector<recurrence_failure> check_recurrence_printed(const std::map<std::array<int, 4>, rational>& c,
                                                         int n) {
  return recurrence(c, n, [](auto& at, int p, int q, int r, int s) -> rational {
    return rational(2 * p) * at(p - 2, q + 1, r, s) - rational(r + 1) * at(p - 1, q - 1, r + 1, s);
  });
}

bool grade_report::ok() const {
  return component == component_brute && e01_s == e01_pred && joint_s == joint_pred && joint_u == joint_pred &&
         abcw_in_kernel && uvw_in_kernel && symmetrized_spans && probes_ok && recurrence_ok;
}

grade_report grade(int n) {
  grade_report rep;
  rep.n = n;
  affine_algebra alg(-std::max(n, 2), 0);
  rep.component = static_cast<int>(theta_delta_component(alg, n).size());
  auto all = monomials_of_weight(alg, affine::theta_delta(n));
  rep.component_brute = static_cast<int>(all.size());
  column_index cols(all);

  named sn = s_forms(alg);
  named un = u_forms(alg);

  auto span = [&](const std::vector<poly>& vs) {
    linalg::echelon e(static_cast<int>(all.size()));
    for (auto& v : vs) e.insert(cols.vec(v));
    return e;
  };

  auto k01 = invariant_kernel(alg, n, {E01}, side::s);
  rep.e01_s = static_cast<int>(k01.vectors.size());
  rep.e01_pred = count_e01(n);
  auto e01_span = span(k01.vectors);
  rep.abcw_in_kernel = true;
  for (auto& e : e01_exponents(n))
    rep.abcw_in_kernel &= e01_span.contains(cols.vec(abcw_power(sn, e[0], e[1], e[2], e[3])));

  auto ks = invariant_kernel(alg, n, {E01, E10}, side::s);
  auto ku = invariant_kernel(alg, n, {E01, E10}, side::u);
  rep.joint_s = static_cast<int>(ks.vectors.size());
  rep.joint_u = static_cast<int>(ku.vectors.size());
  rep.joint_pred = count_joint(n);

  auto s_span = span(ks.vectors);
  auto u_span = span(ku.vectors);
  rep.uvw_in_kernel = true;
  for (auto& e : joint_exponents(n)) {
    rep.uvw_in_kernel &= s_span.contains(cols.vec(uvw_power(alg, sn, side::s, e[0], e[1], e[2])));
    rep.uvw_in_kernel &= u_span.contains(cols.vec(uvw_power(alg, un, side::u, e[0], e[1], e[2])));
  }

  std::vector<poly> sym;
  for (auto& v : ks.vectors) sym.push_back(symmetrize(alg, v));
  auto sym_span = span(sym);
  rep.symmetrized_spans = sym_span.rank() == rep.joint_u;
  for (auto& v : sym) rep.symmetrized_spans &= u_span.contains(cols.vec(v));

  rep.probes_ok = true;
  auto ex = joint_exponents(n);
  std::vector<poly> uforms;
  for (auto& e : ex) uforms.push_back(uvw_power(alg, un, side::u, e[0], e[1], e[2]));
  for (auto& e : ex) {
    monomial y = probe_monomial(alg, e[0], e[1], e[2]);
    for (std::size_t j = 0; j < ex.size(); ++j) {
      if (ex[j][2] < e[2]) continue;
      bool nonzero = coefficient(uforms[j], y) != 0;
      rep.probes_ok &= nonzero == (ex[j] == e);
    }
  }

  rep.recurrence_ok = true;
  for (auto& v : ks.vectors) {
    auto c = abcw_coordinates(sn, n, v);
    rep.recurrence_ok &= !c.empty() || v.empty();
    rep.recurrence_ok &= check_recurrence(c, n).empty();
  }
  return rep;
}

}  // namespace g2voa::invariants
