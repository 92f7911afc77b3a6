#pragma once

#include "g2voa/affine_g2.hpp"
#include "g2voa/g2_core.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace g2voa {

// A monomial is a nondecreasing list of generator indices; index order is the PBW order.
using index_t = std::uint16_t;
using monomial = std::vector<index_t>;

struct monomial_hash {
  std::size_t operator()(const monomial& m) const noexcept;
};

using poly = std::unordered_map<monomial, rational, monomial_hash>;

// bracket table entry for products whose mode falls outside an affine window
inline constexpr int out_of_window = -1;

void add_term(poly& p, const monomial& m, const rational& c);
void axpy(poly& y, const rational& a, const poly& x);  // y += a x
poly scaled(poly p, const rational& c);
poly operator+(poly a, const poly& b);
poly operator-(poly a, const poly& b);
rational coefficient(const poly& p, const monomial& m);

// degree first, then lexicographic on indices
bool mono_less(const monomial& x, const monomial& y);
std::vector<std::pair<monomial, rational>> sorted_terms(const poly& p);

enum class marker { u_minus, u_hat, u_g, s_minus };

class pbw_algebra {
 public:
  virtual ~pbw_algebra() = default;

  int size() const { return n_; }
  const g2::terms& bracket(int x, int y) const { return table_[x * n_ + y]; }
  virtual std::string gen_name(int i) const = 0;

  // g * m in normal form; m must be a normal monomial
  const poly& lmul(index_t g, const monomial& m);
  poly lmul(index_t g, const poly& x);
  poly mul(const poly& x, const poly& y);
  poly straighten(const std::vector<int>& word);
  poly commutator(const poly& x, const poly& y);
  poly ad(int g, const poly& x) { return commutator(gen(g), x); }
  poly power(const poly& x, int e);

  static poly gen(int g, const rational& c = 1);
  static poly one(const rational& c = 1);

  std::string str(const poly& p) const;
  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

 protected:
  void set_table(int n, std::vector<g2::terms> table);

 private:
  int n_ = 0;
  std::vector<g2::terms> table_;
  std::unordered_map<monomial, poly, monomial_hash> memo_;  // key: g followed by m
};

// U(g-hat) restricted to a window of modes; index 0 is K, then modes -1, -2, ..., min, 0, 1, ..., max
class affine_algebra : public pbw_algebra {
 public:
  static constexpr int K = 0;

  affine_algebra(int min_mode, int max_mode, const g2::structure& s = g2::standard());

  int index(int base, int mode) const;
  int index(const affine::generator& g) const;
  affine::generator generator_at(int i) const;
  int base(int i) const { return i == K ? -1 : (i - 1) % g2::dim; }
  int mode(int i) const;
  int min_mode() const { return min_mode_; }
  int max_mode() const { return max_mode_; }

  affine::qhat_weight weight(int i) const;
  affine::qhat_weight weight(const monomial& m) const;
  std::string gen_name(int i) const override;

  poly word(const std::vector<affine::generator>& w);
  poly element(int base, int mode, const rational& c = 1) const { return gen(index(base, mode), c); }

 private:
  int slot(int mode) const;
  int min_mode_;
  int max_mode_;
};

// U(g) with a configurable PBW order of the 14 basis elements
class finite_algebra : public pbw_algebra {
 public:
  using order_t = std::array<int, g2::dim>;

  explicit finite_algebra(order_t order, const g2::structure& s = g2::standard());

  static order_t triangular_order();  // F's, then H01, H21, then E's
  static order_t order_with(int first, int last);

  int index(int base) const { return pos_[base]; }
  int base(int i) const { return order_[i]; }
  const order_t& order() const { return order_; }
  std::string gen_name(int i) const override;

  poly word(const std::vector<int>& bases);
  poly element(const g2::lie_element& x) const;
  // re-express an element of another U(g) model in this one
  poly import(const finite_algebra& from, const poly& x);
  g2::root weight(const monomial& m) const;

 private:
  order_t order_;
  order_t pos_;
};

// element with the algebra it lives in; products across algebras are rejected
struct uelement {
  pbw_algebra* alg = nullptr;
  marker kind = marker::u_minus;
  poly terms;
};
uelement multiply(const uelement& x, const uelement& y);

// ---- symmetric algebra S(g-hat_-) on the same indices as an affine_algebra
poly s_mul(const poly& x, const poly& y);
poly s_power(const poly& x, int e);
poly s_adjoint(const affine_algebra& alg, int g, const poly& x);  // g a mode-0 index
poly symmetrize(affine_algebra& alg, const poly& x);

// ---- the vacuum module N(k,0), identified with U(g-hat_-)
class vacuum_module {
 public:
  vacuum_module(affine_algebra& alg, rational k) : alg_(alg), k_(std::move(k)) {}

  const rational& level() const { return k_; }
  affine_algebra& algebra() { return alg_; }

  const poly& act_gen(index_t g, const monomial& m);
  poly act_gen(index_t g, const poly& v);
  poly act(const poly& x, const poly& v);  // x in U(g-hat), v a vector
  std::size_t cache_size() const { return memo_.size(); }

 private:
  affine_algebra& alg_;
  rational k_;
  std::unordered_map<monomial, poly, monomial_hash> memo_;
};

// ---- weight-graded pieces
std::vector<monomial> monomials_of_weight(const affine_algebra& alg, const affine::qhat_weight& w);

bool has_c2_factor(const affine_algebra& alg, const monomial& m);
poly c2_reduce(const affine_algebra& alg, const poly& v);
// monomials spanned by the row-reduced span of {X(-2).b} at weight w (independent route)
std::vector<monomial> c2_span_pivots(affine_algebra& alg, const affine::qhat_weight& w);

inline rational project(const monomial& y, const poly& f) { return coefficient(f, y); }

// ---- serialization
nlohmann::ordered_json to_json(const affine_algebra& alg, const poly& p);
nlohmann::ordered_json to_json(const finite_algebra& alg, const poly& p);
poly affine_from_json(const affine_algebra& alg, const nlohmann::json& j);

}  // namespace g2voa
