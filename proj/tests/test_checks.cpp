#include <doctest.h>

#include "uhfkron/checks.hpp"

using namespace uhfkron;

TEST_SUITE("checks") {
  TEST_CASE("exact index-map suites count every unit") {
    const CheckReport co = check_coassociativity(Signature{2}, Signature{3}, Signature{2});
    CHECK(co.ok());
    CHECK(co.passed == 144);
    CHECK(co.max_error == 0.0);

    const CheckReport comp = check_compatibility(Signature{2, 2}, Signature{2, 3}, 2, 3);
    CHECK(comp.ok());
    CHECK(comp.passed == 576);

    CHECK(check_bijection(Signature{2, 3}, Signature{2, 2}).ok());
  }

  TEST_CASE("numerical suites") {
    const CheckReport star = check_star_isomorphism(Signature{2, 3}, Signature{3, 2}, 1, 20);
    CHECK(star.ok());
    CHECK(star.passed >= 20);

    const CheckReport tensor = check_tensor_formula(Signature{2, 3}, Signature{3, 2}, 7);
    CHECK(tensor.ok());
    CHECK(tensor.passed == 1296);
    CHECK(tensor.max_error <= 1e-12);

    const CheckReport assoc = check_associativity(Signature{2, 2}, Signature{2, 2}, Signature{2, 2}, 3);
    CHECK(assoc.ok());
    CHECK(assoc.passed == 4096);

    const CheckReport gns = check_gns(Signature{3, 2}, 5);
    CHECK(gns.ok());
    CHECK(gns.passed == 36);

    const CheckReport it = check_intertwiner(Signature{2}, Signature{3}, 9);
    CHECK(it.ok());
    CHECK(it.passed == 1 + 36);
  }

  TEST_CASE("atom semigroup suite") {
    const CheckReport r = check_atom_semigroup(2, 3, 2);
    CHECK(r.ok());
    CHECK(r.passed == 4 * 9);
  }

  TEST_CASE("report keeps only the first failures") {
    CheckReport r("demo");
    for (int i = 0; i < 20; ++i) r.record(false, "item " + std::to_string(i));
    r.record(true, "fine");
    CHECK(r.failed == 20);
    CHECK(r.passed == 1);
    CHECK(r.failures.size() == 8);
    CHECK(r.failures.front() == "item 0");
    CHECK_FALSE(r.ok());
  }
}
