#include "doctest.h"
#include "grs/affiso.hpp"
#include "test_helpers.hpp"

using namespace grs;

TEST_CASE("affiso: catalog presentations are self-isomorphic") {
  for (const auto& t : affine_catalog_tags(2, {make_scalar(1, 3)})) {
    auto p = make_affine(t);
    CAPTURE(to_string(t));
    auto w = isomorphic_affine(p, p);
    REQUIRE(w);
    CHECK(verify_affine_witness(p, p, *w));
    CHECK(verify_on_window(p, p, *w, 4));
  }
}

TEST_CASE("affiso: delta sign and scaling are absorbed") {
  auto p = make_affine(parse_tag("A_2^(2)"));
  std::vector<Fiber> f = p.fibers();
  for (auto& x : f) {
    x.step *= 3;
    for (auto& r : x.residues) r *= -3;
  }
  AffinePresentation q(p.base(), f);
  auto w = isomorphic_affine(p, q);
  REQUIRE(w);
  CHECK(verify_affine_witness(p, q, *w));
  CHECK(verify_on_window(p, q, *w, 5));
}

TEST_CASE("affiso: quotients follow the q +- q' rule") {
  for (int n : {1, 2}) {
    const Scalar qs[] = {make_scalar(1, 3), make_scalar(2, 3), make_scalar(1, 4), make_scalar(4, 3)};
    for (const auto& x : qs)
      for (const auto& y : qs) {
        auto w = isomorphic_affine(build_quotient(n, x), build_quotient(n, y));
        CAPTURE(n);
        CAPTURE(to_string(x));
        CAPTURE(to_string(y));
        CHECK(w.has_value() == quotient_iso(x, y));
        if (w) CHECK(verify_affine_witness(build_quotient(n, x), build_quotient(n, y), *w));
      }
  }
}

TEST_CASE("affiso: peculiar system is the rank-one quotient with scale 2") {
  for (const auto& q : {make_scalar(1, 4), make_scalar(1, 3), make_scalar(1, 2), make_scalar(2, 3)}) {
    auto qp = build_quotient(1, q);
    auto pc = build_peculiar(q);
    auto w = isomorphic_affine(qp, pc, Scalar(2));
    CAPTURE(to_string(q));
    REQUIRE(w);
    CHECK(w->scale == 2);
    CHECK(verify_affine_witness(qp, pc, *w));
    CHECK(verify_on_window(qp, pc, *w, 6));
  }
}

TEST_CASE("affiso: distinct twists are not isomorphic") {
  CHECK_FALSE(isomorphic_affine(make_affine(parse_tag("B_3^(1)")), make_affine(parse_tag("D_4^(2)"))));
  CHECK_FALSE(isomorphic_affine(make_affine(parse_tag("C_2^(1)")), make_affine(parse_tag("A_3^(2)"))));
  auto f = build_finite_Ann(2);
  auto w = isomorphic_affine(f, f);
  REQUIRE(w);
  CHECK(verify_affine_witness(f, f, *w));
}
