#include "doctest.h"
#include "grs/analysis.hpp"
#include "grs/oracle.hpp"
#include "test_helpers.hpp"

using namespace grs;
using grs::testing::cat;
using grs::testing::ivec;

namespace {

std::size_t count(const ParityResult& p) { return p.empty() ? 0 : std::size_t(1) << p.count_log2(); }

std::vector<Vector> type_b_in_b0(const FiniteRootSystem& b0) {
  std::vector<Vector> s;
  for (const auto& v : b0.roots()) {
    long nz = 0, two = 0;
    for (const auto& x : v) {
      nz += !is_zero(x);
      two += abs_of(x) == 2;
    }
    if (!two) s.push_back(v);
  }
  return s;
}

}  // namespace

TEST_CASE("parity: counts") {
  // each delta_i may be odd or even independently: 2^n functions
  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    auto r = make_finite(TypeTag{Family::B0, 0, n}).system;
    CHECK(count(parity_functions(r)) == (std::size_t(1) << n));
  }
  for (const char* t : {"A(0,1)", "A(1,0)", "A(2,1)"}) {
    CAPTURE(std::string(t));
    CHECK(count(parity_functions(cat(t).system)) == 1);
  }
  CHECK(count(parity_functions(cat("A_1").system)) == 4);
  FiniteRootSystem bc1(FormSpace{{"x"}, {{1}}}, {ivec({1}), ivec({-1}), ivec({2}), ivec({-2})});
  CHECK(count(parity_functions(bc1)) == 2);
}

TEST_CASE("parity: enumeration agrees with the exhaustive oracle") {
  for (const auto& t : finite_catalog_tags(3, {Scalar(2)})) {
    auto r = make_finite(t).system;
    if (r.size() > 16) continue;
    auto fast = parity_functions(r);
    auto slow = oracle::brute_parity(r);
    std::sort(slow.begin(), slow.end());
    CAPTURE(to_string(t));
    REQUIRE(fast.enumerated);
    CHECK(fast.functions == slow);
  }
}

TEST_CASE("parity: default parity is a parity function outside BC(m,n) and A(2,2)") {
  for (const auto& t : finite_catalog_tags(3, {Scalar(2)})) {
    auto r = make_finite(t).system;
    CAPTURE(to_string(t));
    const bool exception = t.family == Family::BCmn || (t.family == Family::ASuper && t.m == 2 && t.n == 2);
    CHECK(is_parity_function(r, default_parity(r)) == !exception);
  }
  // BC: e1 and d1 are both odd (2e1, 2d1 are roots) but e1 + d1 is isotropic
  auto bc = cat("BC(1,1)").system;
  auto f = default_parity(bc);
  auto at = [&](const FiniteRootSystem& r, const std::vector<int>& g, Vector v) {
    return g[static_cast<std::size_t>(r.find(v))];
  };
  CHECK(at(bc, f, ivec({1, 0})) == 1);
  CHECK(at(bc, f, ivec({0, 1})) == 1);
  CHECK(at(bc, f, ivec({1, 1})) == 1);
  CHECK_FALSE(parity_functions(bc).empty());
  // A(2,2): two isotropic roots sum to an isotropic root, so no parity function exists
  CHECK(parity_functions(cat("A(2,2)").system).empty());
  CHECK_FALSE(parity_functions(cat("A(3,3)").system).empty());
  auto b02 = cat("B(0,2)").system;
  auto fb = default_parity(b02);
  CHECK(fb[static_cast<std::size_t>(b02.find(ivec({1, 0})))] == 1);
  CHECK(fb[static_cast<std::size_t>(b02.find(ivec({2, 0})))] == 0);
  CHECK(fb[static_cast<std::size_t>(b02.find(ivec({1, 1})))] == 0);
  auto a2 = cat("A_2").system;
  for (int x : default_parity(a2)) CHECK(x == 0);
}

TEST_CASE("parity: A(0,2n)^(4) window has even delta_i and odd delta_i + delta") {
  for (int n : {1, 2}) {
    auto p = make_affine(TypeTag{Family::ASuper, 0, 2 * n, 4});
    auto win = window(p, parity_window(p));
    auto f = default_parity(p, win);
    CHECK(is_parity_function(win, f));
    Vector d1 = unit_vector(p.total_dim(), 0);
    Vector d1s = d1;
    d1s.back() = 1;
    REQUIRE(win.contains(d1));
    REQUIRE(win.contains(d1s));
    CHECK(f[static_cast<std::size_t>(win.find(d1))] == 0);
    CHECK(f[static_cast<std::size_t>(win.find(d1s))] == 1);
    CHECK_FALSE(parity_functions(p).empty());
  }
}

TEST_CASE("parity: oddness is not inherited by subsystems") {
  auto b0 = cat("B(0,3)").system;
  auto s = type_b_in_b0(b0);
  auto res = is_subsystem(s, b0);
  REQUIRE(res.is_system);
  CHECK(res.label == "B_3");
  FiniteRootSystem sub(b0.space(), s);
  auto f = default_parity(sub);
  CHECK(f[static_cast<std::size_t>(sub.find(ivec({1, 0, 0})))] == 0);
  CHECK(default_parity(b0)[static_cast<std::size_t>(b0.find(ivec({1, 0, 0})))] == 1);
}

TEST_CASE("subsystem: odd reflection of B_2 inside B(2,1)") {
  auto r = cat("B(2,1)").system;
  std::vector<Vector> b2;
  for (const auto& v : r.roots())
    if (is_zero(v[2])) b2.push_back(v);
  REQUIRE(b2.size() == 8);
  CHECK(is_subsystem(b2, r).label == "B_2");
  Vector alpha = ivec({0, 1, -1});
  std::vector<Vector> img;
  for (const auto& v : b2) img.push_back(reflect(r, alpha, v));
  FiniteRootSystem expect(r.space(), {ivec({1, 0, 0}), ivec({-1, 0, 0}), ivec({0, 0, 1}), ivec({0, 0, -1}),
                                      ivec({1, 0, 1}), ivec({1, 0, -1}), ivec({-1, 0, 1}), ivec({-1, 0, -1})});
  CHECK(FiniteRootSystem(r.space(), img).roots() == expect.roots());
  auto res = is_subsystem(img, r);
  CHECK_FALSE(res.is_system);
  CHECK(res.label == "not a system");
  bool found = false;
  for (const auto& e : res.escapes)
    found = found || (e.alpha == ivec({1, 0, -1}) && e.beta == ivec({1, 0, 1}) && e.image == ivec({0, 0, 2}));
  CHECK(found);
  CHECK(is_subsystem(r.roots(), r).label == "B(2,1)");
}

TEST_CASE("subsystem: inside an affine presentation") {
  auto p = make_affine(parse_tag("A_2^(1)"));
  auto win = window(p, 1);
  // a window is not closed under reflections
  auto res = is_subsystem(win.roots(), p);
  CHECK_FALSE(res.is_system);
  CHECK_FALSE(res.escapes.empty());
  std::vector<Vector> flat;
  for (const auto& v : win.roots())
    if (is_zero(v.back())) flat.push_back(v);
  CHECK(is_subsystem(flat, p).label == "A_2");
}

TEST_CASE("correspondence strings") {
  CHECK(correspondence(parse_tag("~A(2,2)")).lie_structure == "gl(3|3)");
  CHECK(correspondence(parse_tag("C(1,1)^1/3")).lie_structure == "rational quotient of gl(2|2)^(1)");
  CHECK(correspondence(parse_tag("A_4^(2)")).notes == "Non-isotropic (ARS), non-reduced");
  CHECK(correspondence(parse_tag("B(0,2)")).lie_structure == "osp(1|4)");
  CHECK(correspondence(parse_tag("B(0,2)")).notes == "Euclidean (RS)");
  CHECK(correspondence(parse_tag("A_2^(1)")).notes == "Non-isotropic (ARS), reduced");
  CHECK(correspondence(parse_tag("B(1,1)^(1)")).notes == "AGRS with cl(R) not A(n,n)");
}
