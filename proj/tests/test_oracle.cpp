#include "doctest.h"

#include "grs/oracle.hpp"
#include "test_helpers.hpp"

using namespace grs;
using grs::testing::cat;
using grs::testing::ivec;

TEST_CASE("oracle: finite axioms agree with check_axioms on the catalog") {
  for (const auto& t : finite_catalog_tags(3, {make_scalar(1, 2), Scalar(2)})) {
    auto c = make_finite(t);
    if (c.system.size() > 80) continue;
    auto fast = check_axioms(c.system);
    auto slow = oracle::brute_axioms(c.system).report;
    CAPTURE(to_string(t));
    CHECK(fast.is_rs == slow.is_rs);
    CHECK(fast.is_grs == slow.is_grs);
    CHECK(fast.is_weak_grs == slow.is_weak_grs);
    CHECK(fast.is_reduced == slow.is_reduced);
    CHECK(fast.is_irreducible == slow.is_irreducible);
  }
}

TEST_CASE("oracle: C(1,1) double candidate") {
  auto r = oracle::brute_axioms(cat("C(1,1)").system).report;
  CHECK(r.is_weak_grs);
  CHECK_FALSE(r.is_grs);
  bool both = false;
  for (const auto& v : r.violations) both = both || (v.axiom == "2" && v.detail == "both");
  CHECK(both);
}

TEST_CASE("oracle: window of A_2^(1) agrees with validate_agrs") {
  auto p = make_affine(parse_tag("A_2^(1)"));
  auto b = oracle::brute_axioms(window(p, 3), 3);
  CHECK(b.report.is_grs == validate_agrs(p).is_grs);
  CHECK(b.report.is_rs);
  CHECK(b.checked > 0);
  CHECK(b.skipped > 0);
}

TEST_CASE("oracle: planted axiom (1) violation on a window") {
  auto p = make_affine(parse_tag("A_1^(1)"));
  std::vector<Fiber> f = p.fibers();
  for (auto& x : f) x.step = 2;
  f[0].residues = {Scalar(1)};
  f[1].residues = {Scalar(0)};
  AffinePresentation bad(p.base(), f);
  CHECK_FALSE(validate_agrs(bad).is_weak_grs);
  auto b = oracle::brute_axioms(window(bad, 6), 6);
  CHECK_FALSE(b.report.is_weak_grs);
}

TEST_CASE("oracle: parity enumeration") {
  CHECK(oracle::brute_parity(cat("A_1").system).size() == 4);
  CHECK(oracle::brute_parity(cat("B(0,1)").system).size() == 2);
  CHECK(oracle::brute_parity(cat("A(1,0)").system).size() == 1);
}

TEST_CASE("oracle: translation law") {
  auto a1 = make_affine(parse_tag("A_1^(1)"));
  auto rep = oracle::brute_translation(a1, 0, 0, 5);
  CHECK(rep.pass());
  CHECK(rep.checked == 6);
  auto rep0 = oracle::brute_translation(a1, 1, 0, 0);
  CHECK(rep0.pass());
  auto a10 = make_affine(parse_tag("A(1,0)^(1)"));
  const auto& cl = a10.base();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = 0; j < cl.size(); ++j) {
      if (!cl.isotropic(i) || is_zero(cl.pairing(i, cl.root(j)))) continue;
      auto t = t_coeff(cl, cl.root(i), cl.root(j));
      if (!t || *t != 1) continue;
      auto r = oracle::brute_translation(a10, i, j, 5);
      CAPTURE(to_string(cl.root(i)));
      CAPTURE(to_string(cl.root(j)));
      for (auto& m : r.mismatches) MESSAGE(m);
      CHECK(r.pass());
      ++hits;
    }
  CHECK(hits > 0);
}
