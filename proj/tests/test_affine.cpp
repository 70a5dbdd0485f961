#include "doctest.h"
#include "grs/affine.hpp"
#include "test_helpers.hpp"

using namespace grs;
using grs::testing::ivec;

namespace {

std::string first_violation(const AxiomReport& r) {
  for (const auto& v : r.violations)
    if (v.axiom != "rs" && v.axiom != "reduced" && v.axiom != "irreducible") {
      std::string s = v.axiom + ": " + v.detail;
      for (const auto& w : v.witness) s += " " + to_string(w);
      return s;
    }
  return "";
}

const Fiber& fiber_of(const AffinePresentation& p, const Vector& cls) {
  int i = p.base().find(cls);
  REQUIRE(i >= 0);
  return p.fiber(static_cast<std::size_t>(i));
}

}  // namespace

TEST_CASE("every affine catalog presentation validates") {
  for (const auto& t : affine_catalog_tags(3, {Scalar(1, 3), Scalar(1, 2), Scalar(0)})) {
    std::string tag = to_string(t);
    CAPTURE(tag);
    auto p = make_affine(t);
    auto rep = validate_agrs(p);
    CAPTURE(first_violation(rep));
    CHECK(rep.is_grs);
    CHECK(rep.is_irreducible);
    CHECK(check_axioms(cl_of(p)).is_weak_grs);
  }
  for (int n = 1; n <= 3; ++n) {
    auto p = build_finite_Ann(n);
    auto rep = validate_agrs(p);
    CAPTURE(first_violation(rep));
    CHECK(rep.is_grs);
    CHECK(p.finite());
  }
}

TEST_CASE("finite ~A(n,n) sizes") {
  CHECK(window(build_finite_Ann(1), 5).size() == 12);
  CHECK(window(build_finite_Ann(2), 5).size() == 30);
  auto p1 = build_finite_Ann(1);
  for (const auto& f : p1.fibers())
    if (f.residues.size() == 2) CHECK(f.residues[1] - f.residues[0] == 1);
}

TEST_CASE("quotient at n = 1 without an integral shift is invalid") {
  CHECK(!validate_agrs(build_quotient(1, 0)).is_grs);
  CHECK(!validate_agrs(build_quotient(1, 1)).is_grs);
  CHECK(validate_agrs(build_quotient(1, Scalar(1, 3))).is_grs);
  CHECK(validate_agrs(build_quotient(2, 0)).is_grs);
  auto a = build_quotient(1, 0), b = build_quotient(1, 1);
  CHECK(a.fibers().size() == b.fibers().size());
  for (std::size_t i = 0; i < a.fibers().size(); ++i) CHECK(a.fiber(i).residues == b.fiber(i).residues);
}

TEST_CASE("planted axiom (1) violation") {
  // A_2^(1) with step 2 on the class a1 + a2
  auto base = make_finite(parse_tag("A_2"));
  std::vector<Fiber> fs;
  for (const auto& v : base.system.roots()) {
    bool sum = v == ivec({1, 1}) || v == ivec({-1, -1});
    fs.push_back({v, sum ? 2 : 1, {Scalar(0)}});
  }
  auto rep = validate_agrs(AffinePresentation(base.system, fs));
  CHECK(!rep.is_grs);
  CHECK(rep.has("1"));
}

TEST_CASE("malformed fibers are rejected") {
  auto base = make_finite(parse_tag("A_1"));
  std::vector<Fiber> fs = {{ivec({1}), 1, {Scalar(0), Scalar(1)}}, {ivec({-1}), 1, {Scalar(0)}}};
  CHECK_THROWS_AS(AffinePresentation(base.system, fs), InvalidInput);
  fs = {{ivec({1}), 1, {Scalar(0)}}};
  CHECK_THROWS_AS(AffinePresentation(base.system, fs), InvalidInput);
}

TEST_CASE("root in the radical violates (0')") {
  FormSpace s{{"x"}, {{2}}};
  FiniteRootSystem base(s, {ivec({1}), ivec({-1}), ivec({0})});
  std::vector<Fiber> fs = {{ivec({1}), 1, {Scalar(0)}}, {ivec({-1}), 1, {Scalar(0)}}, {ivec({0}), 0, {Scalar(1)}}};
  auto rep = validate_agrs(AffinePresentation(base, fs));
  CHECK(rep.has("0'"));
}

TEST_CASE("windows") {
  auto a1 = build_untwisted(parse_tag("A_1"));
  CHECK(window(a1, 2).size() == 10);
  CHECK(window(a1, 0).size() == 2);
  auto c = build_peculiar(Scalar(1, 2));
  auto w = window(c, 1);
  std::vector<Scalar> offs;
  for (const auto& v : w.roots())
    if (v[0] == 1 && v[1] == 1) offs.push_back(v[2]);
  CHECK(offs == std::vector<Scalar>{-1, Scalar(-1, 2), 0, Scalar(1, 2), 1});
}

TEST_CASE("twisted fiber data") {
  auto a2 = build_twisted(parse_tag("A_2^(2)"));
  const auto& f = fiber_of(a2, ivec({2}));
  CHECK(f.step == 2);
  CHECK(f.residues == std::vector<Scalar>{1});
  CHECK(validate_agrs(a2).is_reduced);
  auto a01 = build_twisted(parse_tag("A(0,1)^(2)"));
  CHECK(fiber_of(a01, ivec({2})).residues == std::vector<Scalar>{0});
  CHECK(!validate_agrs(a01).is_reduced);
  auto k = k_function(build_twisted(parse_tag("A(2,2)^(4)")));
  CHECK(*std::max_element(k.begin(), k.end()) == 4);
  auto g = build_twisted(parse_tag("D_4^(3)"));
  auto kg = k_function(g);
  for (std::size_t i = 0; i < g.base().size(); ++i) CHECK(kg[i] == (g.base().norm(i) == 6 ? 3 : 1));
}

TEST_CASE("k-function and normalization") {
  auto an = build_untwisted(parse_tag("A_3"));
  for (long k : k_function(an)) CHECK(k == 1);
  auto d = build_twisted(parse_tag("D_4^(2)"));
  auto kd = k_function(d);
  for (std::size_t i = 0; i < d.base().size(); ++i) CHECK(kd[i] == (d.base().norm(i) == 1 ? 1 : 2));
  // steps {2,4} -> {1,2}
  auto base = make_finite(parse_tag("B_2"));
  std::vector<Fiber> fs;
  for (std::size_t i = 0; i < base.system.size(); ++i)
    fs.push_back({base.system.root(i), base.roles[i] == "short" ? 2 : 4, {Scalar(0)}});
  auto n = normalize_delta(AffinePresentation(base.system, fs));
  for (std::size_t i = 0; i < n.base().size(); ++i) CHECK(n.fiber(i).step == (base.roles[i] == "short" ? 1 : 2));
  CHECK_THROWS_AS(k_function(build_peculiar(Scalar(1, 3))), NotApplicable);
  CHECK_THROWS_AS(k_function(build_finite_Ann(2)), NotApplicable);
  // raw C(1,1)^{l/k}: step k, residues l -> step 1, residues l/k
  auto raw = build_peculiar(Scalar(1, 3));
  std::vector<Fiber> scaled;
  for (auto f : raw.fibers()) {
    f.step = 3;
    for (auto& r : f.residues) r *= 3;
    scaled.push_back(f);
  }
  auto back = normalize_delta(AffinePresentation(raw.base(), scaled));
  for (const auto& f : back.fibers()) CHECK(f.step == 1);
  CHECK(fiber_of(back, ivec({1, 1})).residues.size() == 2);
}

TEST_CASE("presentation from an explicit finite AGRS") {
  auto t = make_finite(parse_tag("~A(2,2)"));
  auto p = presentation_from_explicit(t.system);
  CHECK(validate_agrs(p).is_grs);
  CHECK(window(p, 10).size() == 30);
}

TEST_CASE("decompose_agrs") {
  auto c = build_peculiar(Scalar(1, 3));
  auto a2 = make_finite(parse_tag("A_2"));
  auto sum = direct_sum({{&c, nullptr}, {nullptr, &a2.system}});
  CHECK(validate_agrs(sum).is_grs);
  auto dec = decompose_agrs(sum);
  CHECK(dec.affine.size() == 1);
  CHECK(dec.finite.size() == 1);
  auto single = decompose_agrs(build_untwisted(parse_tag("B_2")));
  CHECK(single.affine.size() == 1);
  CHECK(single.finite.empty());
  // non-isotropic classes of B(1,1)^(1)
  auto b11 = build_untwisted(parse_tag("B(1,1)"));
  std::vector<Vector> cls;
  std::vector<Fiber> fs;
  for (std::size_t i = 0; i < b11.base().size(); ++i)
    if (!b11.base().isotropic(i)) {
      cls.push_back(b11.base().root(i));
      fs.push_back(b11.fiber(i));
    }
  auto part = AffinePresentation(FiniteRootSystem(b11.base().space(), cls), fs);
  auto d2 = decompose_agrs(part);
  CHECK(d2.affine.size() == 2);
}
