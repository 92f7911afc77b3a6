#include "g2voa/structure_checks.hpp"

#include "g2voa/envelope.hpp"
#include "g2voa/invariants.hpp"

#include <stdexcept>

namespace g2voa {

using namespace g2;

namespace {

void add_result(check_list& out, const std::string& name, const check_result& r) {
  out.add("structure", name, r.ok, r.failures.empty() ? "" : r.failures.front());
}

}  // namespace

check_list verify_structure(const structure& s) {
  check_list out;
  lie_element lhs = s.bracket(lie_element::basis(E01), lie_element::basis(E31));
  lie_element want = lie_element::basis(E32, -1);
  out.add("structure", "[E01,E31] = -E32", lhs == want, lhs == want ? "" : "[E01,E31] has the wrong sign");

  // the zero mode E10(0) on a, b, c, w in the vacuum module
  affine_algebra alg(-2, 0, s);
  vacuum_module vm(alg, 0);
  auto nm = invariants::u_forms(alg);
  auto e10 = static_cast<index_t>(alg.index(E10, 0));
  poly e31 = alg.element(E31, -1);
  auto expect = [&](const std::string& name, const poly& got, const poly& exp) {
    poly res = got - exp;
    out.add("structure", name, res.empty(), res.empty() ? "" : "residual " + alg.str(res));
  };
  expect("E10.a = -3 E31(-1)", vm.act_gen(e10, nm.a), scaled(e31, -3));
  expect("E10.b = -2 E31(-1) a", vm.act_gen(e10, nm.b), scaled(alg.mul(e31, nm.a), -2));
  expect("E10.c = E31(-1) b", vm.act_gen(e10, nm.c), alg.mul(e31, nm.b));
  expect("E10.w = 0", vm.act_gen(e10, nm.w), poly{});

  add_result(out, "Jacobi identity on all basis triples", check_jacobi(s));
  add_result(out, "invariance of the normalised form", check_form(s));
  add_result(out, "Cartan integers and coroots", check_cartan(s));
  return out;
}

sign_table flip_sign(sign_table t, int x, int y) {
  root rx = root_of(x), ry = root_of(y);
  bool hit = false;
  for (auto key : {std::pair{rx, ry}, std::pair{ry, rx}})
    if (auto it = t.find(key); it != t.end()) {
      it->second = -it->second;
      hit = true;
    }
  if (!hit) throw std::invalid_argument("flip_sign: no structure constant for this pair");
  return t;
}

}  // namespace g2voa
