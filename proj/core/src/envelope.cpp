#include "g2voa/envelope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "g2voa/linalg.hpp"

namespace g2voa {

std::size_t monomial_hash::operator()(const monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto g : m) {
    h ^= g + 0x9e37u;
    h *= 1099511628211ull;
  }
  return h;
}

void add_term(poly& p, const monomial& m, const rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) p.erase(it);
}

void axpy(poly& y, const rational& a, const poly& x) {
  if (a == 0) return;
  for (auto& [m, c] : x) add_term(y, m, a * c);
}

poly scaled(poly p, const rational& c) {
  if (c == 0) return {};
  for (auto& [m, v] : p) v *= c;
  return p;
}

poly operator+(poly a, const poly& b) {
  axpy(a, 1, b);
  return a;
}

poly operator-(poly a, const poly& b) {
  axpy(a, -1, b);
  return a;
}

rational coefficient(const poly& p, const monomial& m) {
  auto it = p.find(m);
  return it == p.end() ? rational(0) : it->second;
}

bool mono_less(const monomial& x, const monomial& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::vector<std::pair<monomial, rational>> sorted_terms(const poly& p) {
  std::vector<std::pair<monomial, rational>> out(p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return mono_less(a.first, b.first); });
  return out;
}

// ---- pbw_algebra

void pbw_algebra::set_table(int n, std::vector<g2::terms> table) {
  n_ = n;
  table_ = std::move(table);
}

const poly& pbw_algebra::lmul(index_t g, const monomial& m) {
  monomial key;
  key.reserve(m.size() + 1);
  key.push_back(g);
  key.insert(key.end(), m.begin(), m.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  poly out;
  if (m.empty() || g <= m.front()) {
    out.emplace(key, 1);
  } else {
    // g m0 rest = m0 (g rest) + [g, m0] rest
    index_t m0 = m.front();
    monomial rest(m.begin() + 1, m.end());
    const poly& t = lmul(g, rest);
    for (auto& [mm, c] : t)
      for (auto& [mm2, c2] : lmul(m0, mm)) add_term(out, mm2, c * c2);
    for (auto& [z, c] : bracket(g, m0)) {
      if (z == out_of_window) throw std::out_of_range("bracket leaves the mode window");
      for (auto& [mm, c2] : lmul(static_cast<index_t>(z), rest)) add_term(out, mm, c * c2);
    }
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

poly pbw_algebra::lmul(index_t g, const poly& x) {
  poly out;
  for (auto& [m, c] : x) axpy(out, c, lmul(g, m));
  return out;
}

poly pbw_algebra::mul(const poly& x, const poly& y) {
  poly out;
  for (auto& [mx, cx] : x) {
    poly cur = scaled(y, cx);
    for (auto it = mx.rbegin(); it != mx.rend(); ++it) cur = lmul(*it, cur);
    axpy(out, 1, cur);
  }
  return out;
}

poly pbw_algebra::straighten(const std::vector<int>& word) {
  poly cur = one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = lmul(static_cast<index_t>(*it), cur);
  return cur;
}

poly pbw_algebra::commutator(const poly& x, const poly& y) { return mul(x, y) - mul(y, x); }

poly pbw_algebra::power(const poly& x, int e) {
  poly r = one();
  for (int i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

poly pbw_algebra::gen(int g, const rational& c) {
  poly p;
  add_term(p, monomial{static_cast<index_t>(g)}, c);
  return p;
}

poly pbw_algebra::one(const rational& c) {
  poly p;
  add_term(p, monomial{}, c);
  return p;
}

std::string pbw_algebra::str(const poly& p) const {
  if (p.empty()) return "0";
  std::string s;
  for (auto& [m, c] : sorted_terms(p)) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    rational a = abs(c);
    std::string body;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!body.empty()) body += " ";
      body += gen_name(m[i]);
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    if (body.empty()) s += to_string(a);
    else if (a == 1) s += body;
    else s += to_string(a) + " " + body;
  }
  return s;
}

// ---- affine_algebra

affine_algebra::affine_algebra(int min_mode, int max_mode, const g2::structure& s)
    : min_mode_(min_mode), max_mode_(max_mode) {
  if (min_mode > -1 || max_mode < 0) throw std::invalid_argument("mode window must contain -1 and 0");
  int n = 1 + g2::dim * (max_mode - min_mode + 1);
  std::vector<g2::terms> table(static_cast<std::size_t>(n) * n);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      auto gx = generator_at(x), gy = generator_at(y);
      g2::terms t;
      int m = gx.mode + gy.mode;
      auto br = affine::affine_bracket(gx, gy, s);
      if (!br.empty() && !(m >= min_mode_ && m <= max_mode_)) {
        // outside the window: poison the entry so that any use throws
        bool only_central = std::all_of(br.begin(), br.end(), [](auto& p) { return p.first.is_central(); });
        if (!only_central) {
          table[x * n + y] = {{out_of_window, 0}};
          continue;
        }
      }
      for (auto& [g, c] : br) t.emplace_back(g.is_central() ? K : index(g), c);
      std::sort(t.begin(), t.end(), [](auto& p, auto& q) { return p.first < q.first; });
      table[x * n + y] = std::move(t);
    }
  set_table(n, std::move(table));
}

int affine_algebra::slot(int mode) const {
  if (mode < min_mode_ || mode > max_mode_) throw std::out_of_range("mode outside window: " + std::to_string(mode));
  if (mode < 0) return -mode - 1;
  return -min_mode_ + mode;
}

int affine_algebra::index(int base, int mode) const { return 1 + g2::dim * slot(mode) + base; }

int affine_algebra::index(const affine::generator& g) const { return g.is_central() ? K : index(g.base, g.mode); }

int affine_algebra::mode(int i) const {
  if (i == K) return 0;
  int s = (i - 1) / g2::dim;
  return s < -min_mode_ ? -s - 1 : s + min_mode_;
}

affine::generator affine_algebra::generator_at(int i) const {
  if (i == K) return affine::generator::central();
  return {base(i), mode(i)};
}

affine::qhat_weight affine_algebra::weight(int i) const { return affine::weight_of(generator_at(i)); }

affine::qhat_weight affine_algebra::weight(const monomial& m) const {
  affine::qhat_weight w;
  for (auto g : m) w += weight(g);
  return w;
}

std::string affine_algebra::gen_name(int i) const { return generator_at(i).str(); }

poly affine_algebra::word(const std::vector<affine::generator>& w) {
  std::vector<int> idx;
  for (auto& g : w) idx.push_back(index(g));
  return straighten(idx);
}

// ---- finite_algebra

finite_algebra::finite_algebra(order_t order, const g2::structure& s) : order_(order) {
  std::vector<bool> seen(g2::dim, false);
  for (int i = 0; i < g2::dim; ++i) {
    if (order_[i] < 0 || order_[i] >= g2::dim || seen[order_[i]]) throw std::invalid_argument("order is not a permutation");
    seen[order_[i]] = true;
    pos_[order_[i]] = i;
  }
  std::vector<g2::terms> table(g2::dim * g2::dim);
  for (int x = 0; x < g2::dim; ++x)
    for (int y = 0; y < g2::dim; ++y) {
      g2::terms t;
      for (auto& [g, c] : s.bracket(order_[x], order_[y])) t.emplace_back(pos_[g], c);
      std::sort(t.begin(), t.end(), [](auto& p, auto& q) { return p.first < q.first; });
      table[x * g2::dim + y] = std::move(t);
    }
  set_table(g2::dim, std::move(table));
}

finite_algebra::order_t finite_algebra::triangular_order() {
  using namespace g2;
  return {F01, F10, F11, F21, F31, F32, H01, H21, E32, E31, E21, E11, E10, E01};
}

finite_algebra::order_t finite_algebra::order_with(int first, int last) {
  order_t base = triangular_order(), out;
  int k = 0;
  out[k++] = first;
  for (int g : base)
    if (g != first && g != last) out[k++] = g;
  out[k] = last;
  return out;
}

std::string finite_algebra::gen_name(int i) const { return std::string(g2::name(order_[i])); }

poly finite_algebra::word(const std::vector<int>& bases) {
  std::vector<int> idx;
  for (int b : bases) idx.push_back(pos_[b]);
  return straighten(idx);
}

poly finite_algebra::element(const g2::lie_element& x) const {
  poly p;
  for (auto& [g, c] : x.coeffs()) add_term(p, monomial{static_cast<index_t>(pos_[g])}, c);
  return p;
}

poly finite_algebra::import(const finite_algebra& from, const poly& x) {
  poly out;
  for (auto& [m, c] : x) {
    std::vector<int> w;
    for (auto g : m) w.push_back(pos_[from.base(g)]);
    axpy(out, c, straighten(w));
  }
  return out;
}

g2::root finite_algebra::weight(const monomial& m) const {
  g2::root r;
  for (auto g : m) r = r + g2::root_of(order_[g]);
  return r;
}

uelement multiply(const uelement& x, const uelement& y) {
  if (x.alg != y.alg || x.kind != y.kind) throw std::invalid_argument("multiply: algebra marker mismatch");
  if (x.kind == marker::s_minus) return {x.alg, x.kind, s_mul(x.terms, y.terms)};
  return {x.alg, x.kind, x.alg->mul(x.terms, y.terms)};
}

// ---- symmetric algebra

poly s_mul(const poly& x, const poly& y) {
  poly out;
  for (auto& [mx, cx] : x)
    for (auto& [my, cy] : y) {
      monomial m;
      m.reserve(mx.size() + my.size());
      std::merge(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(m));
      add_term(out, m, cx * cy);
    }
  return out;
}

poly s_power(const poly& x, int e) {
  poly r = pbw_algebra::one();
  for (int i = 0; i < e; ++i) r = s_mul(r, x);
  return r;
}

poly s_adjoint(const affine_algebra& alg, int g, const poly& x) {
  poly out;
  for (auto& [m, c] : x)
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      monomial rest(m);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& [z, d] : alg.bracket(g, m[i])) {
        if (z == affine_algebra::K || z == out_of_window) throw std::logic_error("s_adjoint: central term");
        monomial r = rest;
        r.insert(std::upper_bound(r.begin(), r.end(), static_cast<index_t>(z)), static_cast<index_t>(z));
        add_term(out, r, c * d * static_cast<long>(j - i));
      }
      i = j;
    }
  return out;
}

poly symmetrize(affine_algebra& alg, const poly& x) {
  // omega(m) = (1/|m|) sum over factors X of X omega(m - X)
  std::map<monomial, poly> memo;
  std::function<const poly&(const monomial&)> om = [&](const monomial& m) -> const poly& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    poly out;
    if (m.empty()) {
      out = pbw_algebra::one();
    } else {
      for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        monomial rest(m);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        poly sub = om(rest);
        rational w(static_cast<long>(j - i));
        w /= static_cast<long>(m.size());
        axpy(out, w, alg.lmul(m[i], sub));
        i = j;
      }
    }
    return memo.emplace(m, std::move(out)).first->second;
  };
  poly out;
  for (auto& [m, c] : x) axpy(out, c, om(m));
  return out;
}

// ---- vacuum module

const poly& vacuum_module::act_gen(index_t g, const monomial& m) {
  monomial key;
  key.reserve(m.size() + 1);
  key.push_back(g);
  key.insert(key.end(), m.begin(), m.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  poly out;
  if (g == affine_algebra::K) {
    add_term(out, m, k_);
  } else if (alg_.mode(g) < 0) {
    out = alg_.lmul(g, m);
  } else if (!m.empty()) {
    // X.(y1 rest.1) = [X, y1].(rest.1) + y1.(X.(rest.1))
    index_t y1 = m.front();
    monomial rest(m.begin() + 1, m.end());
    for (auto& [z, c] : alg_.bracket(g, y1)) {
      if (z == out_of_window) throw std::out_of_range("bracket leaves the mode window");
      axpy(out, c, act_gen(static_cast<index_t>(z), rest));
    }
    poly inner = act_gen(g, rest);
    for (auto& [mm, c] : inner) axpy(out, c, alg_.lmul(y1, mm));
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

poly vacuum_module::act_gen(index_t g, const poly& v) {
  poly out;
  for (auto& [m, c] : v) axpy(out, c, act_gen(g, m));
  return out;
}

poly vacuum_module::act(const poly& x, const poly& v) {
  poly out;
  for (auto& [mx, cx] : x) {
    poly cur = scaled(v, cx);
    for (auto it = mx.rbegin(); it != mx.rend(); ++it) cur = act_gen(*it, cur);
    axpy(out, 1, cur);
  }
  return out;
}

// ---- graded pieces

std::vector<monomial> monomials_of_weight(const affine_algebra& alg, const affine::qhat_weight& w) {
  std::vector<monomial> out;
  if (w.d > 0) return out;
  std::vector<int> gens;
  for (int mode = -1; mode >= std::max(alg.min_mode(), w.d); --mode)
    for (int b = 0; b < g2::dim; ++b) gens.push_back(alg.index(b, mode));
  monomial cur;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t i, int a, int b, int d) {
    if (d == 0) {
      if (a == 0 && b == 0) out.push_back(cur);
      return;
    }
    // each remaining unit of depth moves alpha by at most 3 and beta by at most 2
    if (std::abs(a) > 3 * (-d) || std::abs(b) > 2 * (-d)) return;
    for (std::size_t j = i; j < gens.size(); ++j) {
      int g = gens[j];
      auto gw = alg.weight(g);
      if (gw.d < d) continue;
      cur.push_back(static_cast<index_t>(g));
      rec(j, a - gw.a, b - gw.b, d - gw.d);
      cur.pop_back();
    }
  };
  rec(0, w.a, w.b, w.d);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

bool has_c2_factor(const affine_algebra& alg, const monomial& m) {
  return std::any_of(m.begin(), m.end(), [&](index_t g) { return g != affine_algebra::K && alg.mode(g) <= -2; });
}

poly c2_reduce(const affine_algebra& alg, const poly& v) {
  poly out;
  for (auto& [m, c] : v)
    if (!has_c2_factor(alg, m)) out.emplace(m, c);
  return out;
}

std::vector<monomial> c2_span_pivots(affine_algebra& alg, const affine::qhat_weight& w) {
  std::vector<monomial> basis = monomials_of_weight(alg, w);
  std::map<monomial, int> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = static_cast<int>(i);
  linalg::echelon ech(static_cast<int>(basis.size()));
  for (int x = 0; x < g2::dim; ++x) {
    auto gx = alg.index(x, -2);
    auto rest = w + alg.weight(gx).scaled(-1);
    for (auto& b : monomials_of_weight(alg, rest)) {
      linalg::sparse_vec v;
      for (auto& [m, c] : alg.lmul(static_cast<index_t>(gx), b)) v.emplace(col.at(m), c);
      ech.insert(std::move(v));
    }
  }
  std::vector<monomial> out;
  for (int p : ech.pivots()) out.push_back(basis[p]);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

// ---- serialization

namespace {
template <class F>
nlohmann::ordered_json serialize(const poly& p, F&& gen_mode) {
  auto arr = nlohmann::ordered_json::array();
  for (auto& [m, c] : sorted_terms(p)) {
    auto mono = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      auto [name, mode] = gen_mode(m[i]);
      mono.push_back({name, mode, j - i});
      i = j;
    }
    arr.push_back({{"monomial", mono}, {"coeff", to_string(c)}});
  }
  return arr;
}
}  // namespace

nlohmann::ordered_json to_json(const affine_algebra& alg, const poly& p) {
  return serialize(p, [&](index_t g) {
    if (g == affine_algebra::K) return std::pair<std::string, int>{"K", 0};
    return std::pair<std::string, int>{std::string(g2::name(alg.base(g))), alg.mode(g)};
  });
}

nlohmann::ordered_json to_json(const finite_algebra& alg, const poly& p) {
  return serialize(p, [&](index_t g) { return std::pair<std::string, int>{std::string(g2::name(alg.base(g))), 0}; });
}

poly affine_from_json(const affine_algebra& alg, const nlohmann::json& j) {
  poly out;
  for (auto& t : j) {
    monomial m;
    for (auto& f : t.at("monomial")) {
      std::string name = f.at(0);
      int mode = f.at(1);
      int e = f.at(2);
      int idx;
      if (name == "K") {
        idx = affine_algebra::K;
      } else {
        int b = g2::from_name(name);
        if (b < 0) throw std::invalid_argument("unknown generator " + name);
        idx = alg.index(b, mode);
      }
      for (int i = 0; i < e; ++i) m.push_back(static_cast<index_t>(idx));
    }
    std::sort(m.begin(), m.end());
    add_term(out, m, parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace g2voa
