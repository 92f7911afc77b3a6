#include "g2voa/zhu.hpp"

#include <algorithm>
#include <complex>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace g2voa::zhu {

using namespace g2;

poly zhu_map(const affine_algebra& from, const poly& x, finite_algebra& to) {
  poly out;
  std::vector<int> w;
  for (auto& [m, c] : x) {
    w.clear();
    for (auto g : m) {
      if (g == affine_algebra::K || from.mode(g) >= 0) throw std::invalid_argument("zhu_map: factor outside g-hat_-");
      w.push_back(from.base(g));
    }
    axpy(out, c, to.word(w));
  }
  return out;
}

named_images images(finite_algebra& fa) {
  affine_algebra alg(-2, 0);
  auto nm = invariants::u_forms(alg);
  return {zhu_map(alg, nm.a, fa), zhu_map(alg, nm.b, fa), zhu_map(alg, nm.c, fa),
          zhu_map(alg, nm.w, fa), zhu_map(alg, nm.u, fa), zhu_map(alg, nm.v, fa)};
}

poly adjoint_power(finite_algebra& fa, int x_base, int n, const poly& f) {
  poly r = f;
  for (int i = 0; i < n && !r.empty(); ++i) r = fa.ad(fa.index(x_base), r);
  return r;
}

poly adjoint_power_multinomial(finite_algebra& fa, int x_base, int n, const std::vector<poly>& ys) {
  std::size_t m = ys.size();
  if (m == 0) return n == 0 ? pbw_algebra::one() : poly{};
  // powers[i][k] = (X^k)_L Y_i
  std::vector<std::vector<poly>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    powers[i].push_back(ys[i]);
    for (int k = 1; k <= n; ++k) powers[i].push_back(fa.ad(fa.index(x_base), powers[i].back()));
  }
  poly out;
  std::vector<int> ks(m, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == m) {
      ks[i] = left;
      rational coef = rational(factorial(static_cast<unsigned long>(n)));
      poly prod = pbw_algebra::one();
      for (std::size_t j = 0; j < m; ++j) {
        coef /= rational(factorial(static_cast<unsigned long>(ks[j])));
        prod = fa.mul(prod, powers[j][static_cast<std::size_t>(ks[j])]);
        if (prod.empty()) return;
      }
      axpy(out, coef, prod);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      ks[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, n);
  return out;
}

poly adjoint_ef(finite_algebra& fa, int e_base, int f_base, int n, const poly& f) {
  return adjoint_power(fa, e_base, n, adjoint_power(fa, f_base, n, f));
}

namespace {

// position class: 0 for F, 1 for H, 2 for E
int band(int base) { return is_lowering(base) ? 0 : is_cartan(base) ? 1 : 2; }

void require_triangular(const finite_algebra& fa) {
  for (int i = 1; i < dim; ++i)
    if (band(fa.base(i - 1)) > band(fa.base(i))) throw std::invalid_argument("pi0: order is not triangular");
}

}  // namespace

hpoly pi0(const finite_algebra& fa, const poly& f) {
  require_triangular(fa);
  hpoly out;
  hpoly h01 = hpoly::h01(), h21 = hpoly::linear(2, 3);
  for (auto& [m, c] : f) {
    if (!fa.weight(m).is_zero()) throw std::invalid_argument("pi0: element of nonzero weight");
    hpoly t = hpoly::constant(c);
    bool cartan = true;
    for (auto g : m) {
      int b = fa.base(g);
      if (!is_cartan(b)) {
        cartan = false;
        break;
      }
      t = t * (b == H01 ? h01 : h21);
    }
    if (cartan) out = out + t;
  }
  return out;
}

poly mod_n_plus(const finite_algebra& fa, const poly& f) {
  poly out;
  for (auto& [m, c] : f)
    if (std::none_of(m.begin(), m.end(), [&](index_t g) { return is_raising(fa.base(g)); })) add_term(out, m, c);
  return out;
}

poly to_element(finite_algebra& fa, const hpoly& h) {
  poly x10 = fa.element(lie_element::cartan(1, 0)), x01 = fa.element(lie_element::cartan(0, 1));
  poly out;
  for (auto& [e, c] : h.terms()) {
    poly t = pbw_algebra::one(c);
    for (int i = 0; i < e.first; ++i) t = fa.mul(t, x10);
    for (int i = 0; i < e.second; ++i) t = fa.mul(t, x01);
    axpy(out, 1, t);
  }
  return out;
}

hpoly coroot_poly(root positive, h11_reading r) {
  if (positive == root{1, 1} && r == h11_reading::naive) return hpoly::linear(1, 1);
  auto cc = coroot_coefficients(positive);
  return hpoly::linear(cc.h10, cc.h01);
}

poly zhu_singular(const singular::singular_vector& sv, finite_algebra& fa) {
  affine_algebra alg = singular::make_algebra(sv.lv.n());
  return zhu_map(alg, sv.full, fa);
}

namespace {
std::pair<int, int> uv_exponents(int n, int j) {
  return n % 2 == 0 ? std::pair{n / 2 - 3 * j, 2 * j} : std::pair{(n - 3) / 2 - 3 * j, 1 + 2 * j};
}
}  // namespace

poly zhu_closed_form(int n, finite_algebra& fa) {
  auto im = images(fa);
  auto b = singular::closed_form_coefficients(n);
  poly out;
  for (std::size_t j = 0; j < b.size(); ++j) {
    auto [p, q] = uv_exponents(n, static_cast<int>(j));
    axpy(out, b[j], fa.mul(fa.power(im.u, p), fa.power(im.v, q)));
  }
  return out;
}

rational leading_coefficient(int n) {
  auto b = singular::closed_form_coefficients(n);
  rational out = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    auto [p, q] = uv_exponents(n, static_cast<int>(j));
    rational t = b[j];
    for (int i = 0; i < p; ++i) t *= rational(1, 3);
    for (int i = 0; i < q; ++i) t *= rational(2, 9);
    out += t;
  }
  return out;
}

classification_polys classification_polynomials(const poly& vk, int n, finite_algebra& fa) {
  classification_polys out;
  out.n = n;
  rational norm = rational(factorial(static_cast<unsigned long>(n)));
  norm = 1 / (norm * norm);
  out.p1 = pi0(fa, adjoint_ef(fa, E10, F31, n, vk)).scaled(norm);
  out.p2 = pi0(fa, adjoint_ef(fa, E11, F32, n, vk)).scaled(norm);
  out.c_lead = leading_coefficient(n);
  out.p1_residual = out.p1 - shifted_product(hpoly::h10(), 0, n - 1).scaled(out.c_lead);
  out.p1_product = out.p1_residual.is_zero();
  out.c2 = out.p2.coeff(n, 0);
  hpoly r = out.p2 - shifted_product(coroot_poly({1, 1}), 0, n - 1).scaled(out.c2);
  hpoly rn = out.p2 - shifted_product(coroot_poly({1, 1}, h11_reading::naive), 0, n - 1).scaled(out.c2);
  out.p2_residual_degree = r.degree();
  out.p2_residual_degree_naive = rn.degree();
  out.p2_top = out.c2 != 0 && r.degree() <= n - 1;
  out.p2_top_naive = out.c2 != 0 && rn.degree() <= n - 1;
  return out;
}

namespace {

class monomial_index {
 public:
  int operator()(const monomial& m) {
    auto [it, fresh] = ids_.emplace(m, static_cast<int>(ids_.size()));
    return it->second;
  }
  linalg::sparse_vec vec(const poly& p) {
    linalg::sparse_vec v;
    for (auto& [m, c] : p) v[(*this)(m)] = c;
    return v;
  }

 private:
  std::unordered_map<monomial, int, monomial_hash> ids_;
};

}  // namespace

zero_weight zero_weight_space(finite_algebra& fa, const poly& vk, int n, int cap) {
  zero_weight out;
  monomial_index ids;
  struct layer {
    linalg::echelon ech;
    std::vector<poly> vecs;
  };
  // weights (a, b) with a, b >= 0 can still reach zero by lowering with F10, F01
  std::map<root, layer> layers;
  layers[root{2 * n, n}].ech.insert(ids.vec(vk));
  layers[root{2 * n, n}].vecs.push_back(vk);
  const std::pair<int, root> lowerers[] = {{F10, root{-1, 0}}, {F01, root{0, -1}}};
  for (int height = 3 * n; height > 0; --height) {
    ++out.sweeps;
    for (int a = 0; a <= height; ++a) {
      root w{a, height - a};
      auto it = layers.find(w);
      if (it == layers.end()) continue;
      out.vectors_visited += static_cast<int>(it->second.vecs.size());
      for (auto& [g, shift] : lowerers) {
        root t = w + shift;
        if (t.a < 0 || t.b < 0) continue;
        for (auto& v : it->second.vecs) {
          poly y = fa.ad(fa.index(g), v);
          if (y.empty()) continue;
          auto& dst = layers[t];
          if (dst.ech.insert(ids.vec(y))) dst.vecs.push_back(std::move(y));
        }
      }
      if (out.vectors_visited > cap) throw std::runtime_error("zero_weight_space: cap exceeded");
      layers.erase(it);
    }
  }
  auto& zero = layers[root{0, 0}];
  out.basis = zero.vecs;
  out.vectors_visited += static_cast<int>(zero.vecs.size());
  for (auto& r : out.basis) out.p.push_back(pi0(fa, r));
  return out;
}

bool in_span(const std::vector<hpoly>& basis, const hpoly& h) {
  std::map<hpoly::exps, int> ids;
  auto vec = [&](const hpoly& p) {
    linalg::sparse_vec v;
    for (auto& [e, c] : p.terms()) v[ids.emplace(e, static_cast<int>(ids.size())).first->second] = c;
    return v;
  };
  linalg::echelon ech;
  for (auto& p : basis) ech.insert(vec(p));
  return ech.contains(vec(h));
}

// ---- classification

std::vector<std::string> approximate_roots(const upoly& f, int digits) {
  using cplx = std::complex<long double>;
  int d = f.degree();
  std::vector<std::string> out;
  if (d < 1) return out;
  upoly m = f.monic();
  std::vector<long double> c;
  for (int i = 0; i <= d; ++i) c.push_back(static_cast<long double>(m.coeff(i).get_d()));
  auto eval = [&](cplx x) {
    cplx r = 0;
    for (int i = d; i >= 0; --i) r = r * x + c[static_cast<std::size_t>(i)];
    return r;
  };
  // Durand-Kerner from the usual spiral start
  std::vector<cplx> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::pow(cplx(0.4L, 0.9L), i);
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      cplx den = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) den *= z[i] - z[j];
      cplx step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-30L) break;
  }
  std::sort(z.begin(), z.end(), [](cplx x, cplx y) {
    if (std::abs(x.real() - y.real()) > 1e-12L) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (auto& x : z) {
    std::ostringstream os;
    os << std::setprecision(digits) << static_cast<double>(x.real());
    long double im = x.imag();
    if (std::abs(im) > 1e-15L) os << (im < 0 ? " - " : " + ") << std::setprecision(digits) << std::abs(static_cast<double>(im)) << "i";
    out.push_back(os.str());
  }
  return out;
}

std::string candidate::mu01_text(int digits) const {
  if (mu01) return to_string(*mu01);
  auto r = approximate_roots(factor, digits);
  return "root " + std::to_string(root_index) + " of " + factor.str("H01") +
         (root_index < static_cast<int>(r.size()) ? " ~ " + r[static_cast<std::size_t>(root_index)] : "");
}

int classification::survivors() const {
  return static_cast<int>(std::count_if(candidates.begin(), candidates.end(), [](auto& c) { return c.survives; }));
}

bool classification::contains_zero() const {
  return std::any_of(candidates.begin(), candidates.end(),
                     [](auto& c) { return c.survives && c.mu10 == 0 && c.mu01 && *c.mu01 == 0; });
}

classification classify(const singular::singular_vector& sv) {
  classification out;
  out.lv = sv.lv;
  int n = sv.lv.n();
  finite_algebra fa(finite_algebra::triangular_order());
  poly vk = zhu_singular(sv, fa);
  out.polys = classification_polynomials(vk, n, fa);
  if (out.polys.p1.degree() < 0) throw std::runtime_error("classify: p1 vanishes");
  out.mu10_values = rational_roots(out.polys.p1.at_h01(0));
  out.r0 = zero_weight_space(fa, vk, n);
  out.p1_in_span = in_span(out.r0.p, out.polys.p1);
  out.p2_in_span = in_span(out.r0.p, out.polys.p2);
  out.vanish_at_zero = std::all_of(out.r0.p.begin(), out.r0.p.end(), [](auto& p) { return p.eval(0, 0) == 0; });

  for (auto& mu10 : out.mu10_values) {
    stage2 s{mu10, out.polys.p2.at_h10(mu10), {}};
    if (s.q.is_zero()) throw std::runtime_error("classify: stage-two polynomial vanishes at H10 = " + to_string(mu10));
    s.fac = factor(s.q);
    for (auto& t : s.fac.terms) {
      if (t.f.degree() == 1) {
        candidate c;
        c.mu10 = mu10;
        c.mu01 = -t.f.coeff(0);
        out.candidates.push_back(c);
        continue;
      }
      for (int r = 0; r < t.f.degree(); ++r) {
        candidate c;
        c.mu10 = mu10;
        c.factor = t.f;
        c.root_index = r;
        c.factor_proved_irreducible = t.irreducible;
        out.candidates.push_back(c);
      }
    }
    out.stage2_polys.push_back(std::move(s));
  }
  for (auto& c : out.candidates) {
    c.survives = true;
    for (auto& p : out.r0.p) {
      bool zero = c.mu01 ? p.eval(c.mu10, *c.mu01) == 0 : divmod(p.at_h10(c.mu10), c.factor).second.is_zero();
      if (!zero) {
        c.survives = false;
        break;
      }
    }
  }
  return out;
}

nlohmann::ordered_json classification::to_json(int digits, bool emit_p_basis) const {
  using oj = nlohmann::ordered_json;
  int n = lv.n();
  oj j;
  j["level"] = {{"m", lv.m}, {"i", lv.i}};
  j["k"] = to_string(lv.k());
  j["n"] = n;
  j["structure_hash"] = g2::standard().hash();
  j["p1"] = polys.p1.str();
  j["p1_factored"] = factor(polys.p1.at_h01(0)).str("H10");
  j["c_lead"] = to_string(polys.c_lead);
  j["p1_product_form"] = polys.p1_product;
  j["p2"] = polys.p2.str();
  auto dense = oj::array();
  for (auto& [e, c] : polys.p2.terms()) dense.push_back({{"h10", e.first}, {"h01", e.second}, {"coeff", to_string(c)}});
  j["p2_coefficients"] = dense;
  j["c2"] = to_string(polys.c2);
  j["c2_equals_c_lead"] = polys.c2 == polys.c_lead;
  j["p2_top_degree_ok"] = polys.p2_top;
  j["p2_residual_degree"] = polys.p2_residual_degree;
  j["p2_top_degree_ok_h11_naive"] = polys.p2_top_naive;
  j["dim_R0"] = static_cast<int>(r0.basis.size());
  j["p1_in_P0_span"] = p1_in_span;
  j["p2_in_P0_span"] = p2_in_span;
  j["P0_vanishes_at_zero"] = vanish_at_zero;
  if (emit_p_basis) {
    auto pb = oj::array();
    for (auto& p : r0.p) pb.push_back(p.str());
    j["P0_basis"] = pb;
  }
  auto mu = oj::array();
  for (auto& x : mu10_values) mu.push_back(to_string(x));
  j["mu10_values"] = mu;
  auto s2 = oj::array();
  for (auto& s : stage2_polys)
    s2.push_back({{"mu10", to_string(s.mu10)}, {"polynomial", s.q.str("H01")}, {"degree", s.q.degree()},
                  {"factored", s.fac.str("H01")}});
  j["stage2"] = s2;
  auto cs = oj::array();
  for (auto& c : candidates) {
    oj e{{"mu10", to_string(c.mu10)}};
    if (c.mu01) {
      e["mu01"] = to_string(*c.mu01);
    } else {
      e["factor"] = c.factor.str("H01");
      e["root_index"] = c.root_index;
      e["approx"] = c.mu01_text(digits);
      e["factor_irreducible"] = c.factor_proved_irreducible;
    }
    e["survives"] = c.survives;
    cs.push_back(std::move(e));
  }
  j["candidates"] = cs;
  j["candidate_count"] = static_cast<int>(candidates.size());
  j["survivor_count"] = survivors();
  return j;
}

check_list verify_zhu_images(const std::vector<singular::singular_vector>& svs) {
  check_list out;
  finite_algebra fa(finite_algebra::triangular_order());
  auto im = images(fa);
  out.add("zhu", "[w] = 0", im.w.empty(), im.w.empty() ? "" : fa.str(im.w));
  poly expect_a = fa.word({E21});
  poly expect_b = fa.word({E31, E11}) - fa.word({E32, E10});
  poly expect_c = fa.word({E31, E31, E01}) - fa.word({E32, E31, H01}) - fa.word({E32, E32, F01});
  out.add("zhu", "[a] = E21", (im.a - expect_a).empty());
  out.add("zhu", "[b] = E31 E11 - E32 E10", (im.b - expect_b).empty());
  out.add("zhu", "[c] = E31^2 E01 - E32 E31 H01 - E32^2 F01", (im.c - expect_c).empty());
  poly u = fa.mul(im.a, im.a);
  out.add("zhu", "[u] = 1/3 [a]^2 - [b]", (im.u - (scaled(u, rational(1, 3)) - im.b)).empty());
  poly v = scaled(fa.mul(u, im.a), rational(2, 9)) - fa.mul(im.a, im.b) - scaled(im.c, 3);
  out.add("zhu", "[v] = 2/9 [a]^3 - [a][b] - 3[c]", (im.v - v).empty());
  for (auto& sv : svs) {
    int n = sv.lv.n();
    poly full = zhu_singular(sv, fa);
    poly modw = zhu_map(singular::make_algebra(n), sv.mod_w, fa);
    poly closed = zhu_closed_form(n, fa);
    out.add("zhu", "n=" + std::to_string(n) + " [v_k] equals sum b_i [u]^p [v]^q", (full - closed).empty() && !full.empty());
    out.add("zhu", "n=" + std::to_string(n) + " w-terms map to zero", (full - modw).empty());
  }
  return out;
}

}  // namespace g2voa::zhu
