#include "g2voa/cartan_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace g2voa {

// ---- upoly

void upoly::trim() {
  for (auto& c : c_) c.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

rational upoly::eval(const rational& x) const {
  rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

upoly upoly::operator+(const upoly& o) const {
  std::vector<rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return upoly(std::move(r));
}

upoly upoly::operator-(const upoly& o) const { return *this + o.scaled(-1); }

upoly upoly::operator*(const upoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return upoly(std::move(r));
}

upoly upoly::scaled(const rational& s) const {
  std::vector<rational> r = c_;
  for (auto& x : r) x *= s;
  return upoly(std::move(r));
}

upoly upoly::monic() const { return is_zero() ? *this : scaled(1 / lead()); }

upoly upoly::derivative() const {
  std::vector<rational> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
  return upoly(std::move(r));
}

std::string upoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1 || i == 0) os << a << (i ? " " : "");
    if (i) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

std::pair<upoly, upoly> divmod(const upoly& a, const upoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<rational> r = a.coeffs(), q(static_cast<std::size_t>(std::max(a.degree() - b.degree() + 1, 0)));
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    rational c = r[static_cast<std::size_t>(i)] / b.lead();
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  return {upoly(std::move(q)), upoly(std::move(r))};
}

upoly gcd(upoly a, upoly b) {
  while (!b.is_zero()) {
    upoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// primitive integer multiple with positive leading coefficient
std::vector<integer> primitive(const upoly& f) {
  integer l = 1;
  for (auto& c : f.coeffs()) l = lcm(l, integer(c.get_den()));
  std::vector<integer> out;
  integer g = 0;
  for (auto& c : f.coeffs()) {
    out.push_back(integer(c * l));
    g = gcd(g, out.back());
  }
  if (f.lead() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

upoly from_integers(const std::vector<integer>& c) {
  std::vector<rational> r;
  for (auto& x : c) r.emplace_back(x);
  return upoly(std::move(r));
}

// positive divisors by trial division; large cofactors are treated as prime when GMP says so
std::vector<integer> divisors(integer n) {
  n = abs(n);
  std::vector<std::pair<integer, int>> pf;
  for (integer p = 2; p * p <= n && p < 2000000; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) pf.push_back({p, e});
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0 && n > integer(2000000) * 2000000)
      throw std::runtime_error("divisor enumeration: cofactor " + n.get_str() + " not factored");
    pf.push_back({n, 1});
  }
  std::vector<integer> ds{1};
  for (auto& [p, e] : pf) {
    std::size_t base = ds.size();
    integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// a factor of degree d with integer coefficients, by interpolation through divisors of f(x_i)
bool kronecker_factor(const std::vector<integer>& f, int d, upoly& out, bool& capped) {
  upoly fp = from_integers(f);
  std::vector<rational> xs;
  std::vector<std::vector<integer>> opts;
  for (int k = 0; static_cast<int>(xs.size()) <= d && k < 64; ++k) {
    rational x = (k % 2 ? 1 : -1) * (k / 2 + (k % 2));
    integer v(fp.eval(x));
    if (v == 0) continue;
    xs.push_back(x);
    auto ds = divisors(v);
    std::vector<integer> signed_ds;
    for (auto& e : ds) signed_ds.push_back(e), signed_ds.push_back(-e);
    opts.push_back(std::move(signed_ds));
  }
  if (static_cast<int>(xs.size()) <= d) return false;
  double combos = 1;
  for (auto& o : opts) combos *= static_cast<double>(o.size());
  if (combos > 4e6) {
    capped = true;
    return false;
  }
  std::vector<std::size_t> pick(opts.size(), 0);
  while (true) {
    // Lagrange interpolation through (x_i, e_i)
    upoly g;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      upoly basis = upoly::constant(rational(opts[i][pick[i]]));
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (j != i) basis = basis * upoly({-xs[j], 1}).scaled(1 / (xs[i] - xs[j]));
      g = g + basis;
    }
    bool integral = g.degree() == d && g.lead() > 0;
    for (auto& c : g.coeffs()) integral = integral && c.get_den() == 1;
    if (integral && divmod(fp, g).second.is_zero()) {
      out = g;
      return true;
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == opts[k].size()) pick[k++] = 0;
    if (k == pick.size()) return false;
  }
}

}  // namespace

std::vector<rational> rational_roots(const upoly& f) {
  std::vector<rational> out;
  if (f.degree() < 1) return out;
  auto c = primitive(f);
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  if (z > 0) out.push_back(0);
  std::vector<integer> rest(c.begin() + static_cast<long>(z), c.end());
  if (rest.size() < 2) return out;
  upoly g = from_integers(rest);
  for (auto& p : divisors(rest.front()))
    for (auto& q : divisors(rest.back()))
      for (int s : {1, -1}) {
        rational r(p * s, q);
        r.canonicalize();
        if (g.eval(r) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  std::sort(out.begin(), out.end());
  return out;
}

factorization factor(const upoly& f) {
  if (f.is_zero()) throw std::domain_error("factor of the zero polynomial");
  factorization out;
  out.unit = f.lead();
  upoly rest = f.monic();
  for (auto& r : rational_roots(rest)) {
    upoly lin({-r, 1});
    int e = 0;
    while (true) {
      auto [q, m] = divmod(rest, lin);
      if (!m.is_zero()) break;
      rest = q;
      ++e;
    }
    out.terms.push_back({lin, e, true});
  }
  // square-free split of what is left, then Kronecker on each part
  std::vector<std::pair<upoly, int>> sqf;
  if (rest.degree() > 0) {
    // Yun's algorithm
    upoly b = gcd(rest, rest.derivative());
    upoly c = divmod(rest, b).first;
    upoly d = divmod(rest.derivative(), b).first - c.derivative();
    for (int e = 1; c.degree() > 0; ++e) {
      upoly ai = gcd(c, d);
      c = divmod(c, ai).first;
      d = divmod(d, ai).first - c.derivative();
      if (ai.degree() > 0) sqf.push_back({ai, e});
    }
  }
  std::vector<factor_term> nonlinear;
  for (auto& [g0, mult] : sqf) {
    std::vector<upoly> todo{g0};
    while (!todo.empty()) {
      upoly g = todo.back();
      todo.pop_back();
      bool split = false, capped = false;
      if (g.degree() >= 4) {
        auto ints = primitive(g);
        for (int d = 2; d <= g.degree() / 2 && !split; ++d) {
          upoly h;
          if (kronecker_factor(ints, d, h, capped)) {
            todo.push_back(h.monic());
            todo.push_back(divmod(g, h).first.monic());
            split = true;
          }
        }
      }
      if (!split) nonlinear.push_back({g.monic(), mult, !capped});
    }
  }
  std::sort(nonlinear.begin(), nonlinear.end(), [](const factor_term& x, const factor_term& y) {
    if (x.f.degree() != y.f.degree()) return x.f.degree() < y.f.degree();
    return x.f.str() < y.f.str();
  });
  out.terms.insert(out.terms.end(), nonlinear.begin(), nonlinear.end());
  return out;
}

std::string factorization::str(const std::string& var) const {
  std::ostringstream os;
  os << unit;
  for (auto& t : terms) {
    os << " (" << t.f.str(var) << ")";
    if (t.multiplicity > 1) os << "^" << t.multiplicity;
  }
  return os.str();
}

// ---- hpoly

void hpoly::add(exps e, const rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (fresh) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

hpoly hpoly::constant(const rational& c) {
  hpoly p;
  p.add({0, 0}, c);
  return p;
}

hpoly hpoly::linear(const rational& h10, const rational& h01, const rational& c) {
  hpoly p;
  p.add({1, 0}, h10);
  p.add({0, 1}, h01);
  p.add({0, 0}, c);
  return p;
}

int hpoly::degree() const {
  int d = -1;
  for (auto& [e, c] : t_) d = std::max(d, e.first + e.second);
  return d;
}

rational hpoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? rational(0) : it->second;
}

hpoly hpoly::homogeneous_part(int d) const {
  hpoly p;
  for (auto& [e, c] : t_)
    if (e.first + e.second == d) p.add(e, c);
  return p;
}

hpoly hpoly::operator+(const hpoly& o) const {
  hpoly p = *this;
  for (auto& [e, c] : o.t_) p.add(e, c);
  return p;
}

hpoly hpoly::operator-(const hpoly& o) const { return *this + o.scaled(-1); }

hpoly hpoly::operator*(const hpoly& o) const {
  hpoly p;
  for (auto& [e, c] : t_)
    for (auto& [f, d] : o.t_) p.add({e.first + f.first, e.second + f.second}, c * d);
  return p;
}

hpoly hpoly::scaled(const rational& s) const {
  hpoly p;
  for (auto& [e, c] : t_) p.add(e, c * s);
  return p;
}

namespace {
rational power(const rational& x, int e) {
  rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace

rational hpoly::eval(const rational& h10, const rational& h01) const {
  rational r = 0;
  for (auto& [e, c] : t_) r += c * power(h10, e.first) * power(h01, e.second);
  return r;
}

upoly hpoly::at_h10(const rational& h10) const {
  std::vector<rational> r(static_cast<std::size_t>(std::max(degree() + 1, 0)));
  for (auto& [e, c] : t_) r[static_cast<std::size_t>(e.second)] += c * power(h10, e.first);
  return upoly(std::move(r));
}

upoly hpoly::at_h01(const rational& h01) const {
  std::vector<rational> r(static_cast<std::size_t>(std::max(degree() + 1, 0)));
  for (auto& [e, c] : t_) r[static_cast<std::size_t>(e.first)] += c * power(h01, e.second);
  return upoly(std::move(r));
}

std::string hpoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<exps, rational>> ts(t_.begin(), t_.end());
  std::stable_sort(ts.begin(), ts.end(), [](auto& x, auto& y) {
    int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : ts) {
    rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = e.first + e.second > 0 && a == 1;
    if (!unit) os << a;
    auto var = [&](const char* v, int k) {
      if (k == 0) return;
      if (!unit) os << " ";
      unit = false;
      os << v << (k > 1 ? "^" + std::to_string(k) : "");
    };
    var("H10", e.first);
    var("H01", e.second);
    first = false;
  }
  return os.str();
}

hpoly shifted_product(const hpoly& x, int lo, int hi) {
  hpoly p = hpoly::constant(1);
  for (int s = lo; s <= hi; ++s) p = p * (x - hpoly::constant(s));
  return p;
}

}  // namespace g2voa
