#include "g2voa/affine_g2.hpp"

namespace g2voa::affine {

std::string generator::str() const {
  if (is_central()) return "K";
  return std::string(g2::name(base)) + "(" + std::to_string(mode) + ")";
}

std::string qhat_weight::str() const {
  std::string s = std::to_string(a) + "a" + (b >= 0 ? "+" : "") + std::to_string(b) + "b" + (d >= 0 ? "+" : "") +
                  std::to_string(d) + "d";
  if (lambda0 != 0) s += "+" + to_string(lambda0) + "L0";
  return s;
}

affine_terms affine_bracket(const generator& x, const generator& y, const g2::structure& s) {
  affine_terms out;
  if (x.is_central() || y.is_central()) return out;
  if (x.mode + y.mode == 0 && x.mode != 0) {
    rational f = s.form(x.base, y.base);
    if (f != 0) out.emplace_back(generator::central(), f * x.mode);
  }
  for (auto& [g, c] : s.bracket(x.base, y.base)) out.emplace_back(generator{g, x.mode + y.mode}, c);
  return out;
}

qhat_weight weight_of(const generator& g) {
  if (g.is_central()) return {};
  auto r = g2::root_of(g.base);
  return {r.a, r.b, g.mode, 0};
}

}  // namespace g2voa::affine
