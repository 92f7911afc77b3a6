#include "g2voa/appendix_a.hpp"
#include "g2voa/appendix_b.hpp"

#include <doctest.h>

using namespace g2voa;
using appendix::h11_reading;

namespace {

void require_all(const check_list& cl) {
  for (auto& c : cl.items) {
    CAPTURE(c.group);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
  CHECK_FALSE(cl.items.empty());
}

}  // namespace

TEST_CASE("commutators with F32(1)") { require_all(appendix::verify_a1()); }

TEST_CASE("commutators with the naive H11 leave a residual") {
  auto cl = appendix::verify_a1(h11_reading::naive);
  CHECK_FALSE(cl.ok());
}

TEST_CASE("congruences mod C2: six hold, the three printed double brackets in u, v do not") {
  auto cl = appendix::verify_a2({rational(-5, 3), rational(1, 3)});
  int failed = 0;
  for (auto& c : cl.items) {
    bool known_bad = c.name.find("[[F32(1),u],u]") == 0 || c.name.find("[[F32(1),u],v]") == 0 ||
                     c.name.find("[[F32(1),v],v]") == 0;
    CAPTURE(c.name);
    CHECK(c.ok != known_bad);
    failed += !c.ok;
  }
  CHECK(failed == 6);
  for (auto& c : cl.items)
    if (c.name.find("[[F32(1),u],u]") == 0) CHECK(c.detail.find("2/9 E21(-1)^2 E10(-1)") != std::string::npos);
}

TEST_CASE("C2 facts on random inputs") { require_all(appendix::verify_a3(12345u, 15)); }

TEST_CASE("projection formulas, both branches") {
  auto cl = appendix::verify_a4(8, {rational(-5, 3), rational(5, 2)});
  require_all(cl);
}

TEST_CASE("appendix B lemmas") {
  require_all(appendix::verify_b1(4));
  require_all(appendix::verify_b2(3, 99u));
  require_all(appendix::verify_b3());
  require_all(appendix::verify_b4(5));
  require_all(appendix::verify_b6(5));
}

TEST_CASE("corrected identity holds with the coroot, fails with H10 + H01") {
  require_all(appendix::verify_b7(h11_reading::coroot));
  CHECK_FALSE(appendix::verify_b7(h11_reading::naive).ok());
}
