#include "grs/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace grs {

namespace {

struct Builder {
  FormSpace space;
  std::vector<Vector> roots;
  std::vector<std::string> roles;

  std::size_t dim() const { return space.dim(); }
  Vector unit(std::size_t i) const { return unit_vector(dim(), i); }
  void add(const Vector& v, const std::string& role) {
    roots.push_back(v);
    roles.push_back(role);
  }
  void add_pm(const Vector& v, const std::string& role) {
    add(v, role);
    add(neg(v), role);
  }
  void pairs(const std::vector<Vector>& u, const std::string& role) {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        add_pm(add_v(u[i], u[j]), role);
        add_pm(sub(u[i], u[j]), role);
      }
  }
  void singles(const std::vector<Vector>& u, const std::string& role, long mult = 1) {
    for (const auto& v : u) add_pm(scale(Scalar(mult), v), role);
  }
  void mixed(const std::vector<Vector>& u, const std::vector<Vector>& w, const std::string& role) {
    for (const auto& a : u)
      for (const auto& b : w) {
        add_pm(add_v(a, b), role);
        add_pm(sub(a, b), role);
      }
  }
  static Vector add_v(const Vector& a, const Vector& b) { return grs::add(a, b); }

  CatalogSystem finish() {
    std::map<Vector, std::string> role_of;
    for (std::size_t i = 0; i < roots.size(); ++i) role_of.emplace(roots[i], roles[i]);
    CatalogSystem out{FiniteRootSystem(space, roots), {}};
    for (const auto& r : out.system.roots()) out.roles.push_back(role_of.at(r));
    return out;
  }
};

// Orthogonal basis: ne coordinates of norm e_norm labelled e1.., then nd of
// norm d_norm labelled d1...
Builder eps_delta(int ne, int nd, const Scalar& e_norm = 1, const Scalar& d_norm = -1) {
  Builder b;
  const std::size_t n = static_cast<std::size_t>(ne + nd);
  b.space.gram.assign(n, Vector(n, Scalar(0)));
  for (int i = 0; i < ne; ++i) {
    b.space.labels.push_back("e" + std::to_string(i + 1));
    b.space.gram[i][i] = e_norm;
  }
  for (int j = 0; j < nd; ++j) {
    b.space.labels.push_back("d" + std::to_string(j + 1));
    b.space.gram[ne + j][ne + j] = d_norm;
  }
  return b;
}

std::vector<Vector> units(const Builder& b, int from, int count) {
  std::vector<Vector> u;
  for (int i = 0; i < count; ++i) u.push_back(b.unit(static_cast<std::size_t>(from + i)));
  return u;
}

// Closure of the simple roots under simple reflections, in simple-root
// coordinates. Valid for reduced crystallographic systems.
CatalogSystem cartan_closure(const Matrix& gram) {
  Builder b;
  const std::size_t n = gram.size();
  b.space.gram = gram;
  for (std::size_t i = 0; i < n; ++i) b.space.labels.push_back("a" + std::to_string(i + 1));
  std::set<Vector> seen;
  std::deque<Vector> todo;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(b.unit(i));
    todo.push_back(b.unit(i));
  }
  while (!todo.empty()) {
    Vector v = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Vector w = reflect_vector(b.space, b.unit(i), v);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  std::set<Scalar> norms;
  for (const auto& v : seen) norms.insert(b.space.form(v, v));
  for (const auto& v : seen) {
    std::string role = "root";
    if (norms.size() == 2) role = b.space.form(v, v) == *norms.begin() ? "short" : "long";
    b.add(v, role);
  }
  return b.finish();
}

Matrix simply_laced(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matrix g(n, Vector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
  for (auto [a, c] : edges) g[a][c] = g[c][a] = -1;
  return g;
}

// Roots u_i - u_j over an ordered orthogonal basis u with signs s_i, written
// in the basis b_k = u_k - u_{k+1}. When fold is set, the last coordinate is
// eliminated modulo Id = sum_k c_k b_k (c_last = 1).
CatalogSystem a_type(int ne, int nd, bool fold, bool keep_degenerate) {
  const int total = ne + nd;
  const std::size_t nb = static_cast<std::size_t>(total - 1);
  std::vector<int> sign(total);
  for (int i = 0; i < total; ++i) sign[i] = i < ne ? 1 : -1;
  auto role_of = [&](int i, int j) {
    if (i < ne && j < ne) return std::string(nd == 0 ? "root" : "ee");
    if (i >= ne && j >= ne) return std::string("dd");
    return std::string("ed");
  };
  FormSpace full;
  for (std::size_t k = 0; k < nb; ++k) full.labels.push_back("b" + std::to_string(k + 1));
  full.gram.assign(nb, Vector(nb, Scalar(0)));
  // (b_k, b_l) from (u_i, u_j) = sign_i delta_ij
  for (std::size_t k = 0; k < nb; ++k) {
    full.gram[k][k] = sign[k] + sign[k + 1];
    if (k + 1 < nb) full.gram[k][k + 1] = full.gram[k + 1][k] = -sign[k + 1];
  }
  std::vector<std::pair<Vector, std::string>> items;
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      if (i == j) continue;
      Vector v(nb, Scalar(0));
      int lo = std::min(i, j), hi = std::max(i, j);
      for (int k = lo; k < hi; ++k) v[static_cast<std::size_t>(k)] = i < j ? 1 : -1;
      items.emplace_back(v, role_of(i, j));
    }
  Builder b;
  if (fold && !keep_degenerate) {
    Vector c(nb);
    int acc = 0;
    for (std::size_t k = 0; k < nb; ++k) c[k] = acc += sign[k];
    const std::size_t nq = nb - 1;
    b.space.labels.assign(full.labels.begin(), full.labels.begin() + static_cast<long>(nq));
    b.space.gram.assign(nq, Vector(nq));
    for (std::size_t k = 0; k < nq; ++k)
      for (std::size_t l = 0; l < nq; ++l) b.space.gram[k][l] = full.gram[k][l];
    std::set<Vector> seen;
    for (auto& [v, role] : items) {
      Vector w = sub(v, scale(v[nq], c));
      w.pop_back();
      if (seen.insert(w).second) b.add(w, role);
    }
  } else {
    b.space = full;
    for (auto& [v, role] : items) b.add(v, role);
  }
  return b.finish();
}

}  // namespace

CatalogSystem make_finite(const TypeTag& t) {
  if (t.affine()) throw InvalidInput("make_finite: " + to_string(t) + " is affine");
  const int m = t.m, n = t.n;
  auto need = [&](bool ok) {
    if (!ok) throw InvalidInput("parameters out of range for " + to_string(t));
  };
  Builder b;
  switch (t.family) {
    case Family::A:
      need(n >= 1);
      return a_type(n + 1, 0, false, false);
    case Family::B: {
      need(n >= 1);
      b = eps_delta(n, 0);
      auto e = units(b, 0, n);
      b.pairs(e, "long");
      b.singles(e, n == 1 ? "root" : "short");
      break;
    }
    case Family::C: {
      need(n >= 1);
      b = eps_delta(n, 0);
      auto e = units(b, 0, n);
      b.pairs(e, "short");
      b.singles(e, n == 1 ? "root" : "long", 2);
      break;
    }
    case Family::D: {
      need(n >= 2);
      b = eps_delta(n, 0);
      b.pairs(units(b, 0, n), "root");
      break;
    }
    case Family::E: {
      need(n >= 6 && n <= 8);
      // Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4.
      std::vector<std::pair<std::size_t, std::size_t>> edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}, {4, 5}, {5, 6}, {6, 7}};
      std::vector<std::pair<std::size_t, std::size_t>> keep;
      for (auto e : edges)
        if (e.first < static_cast<std::size_t>(n) && e.second < static_cast<std::size_t>(n)) keep.push_back(e);
      return cartan_closure(simply_laced(static_cast<std::size_t>(n), keep));
    }
    case Family::F: {
      need(n == 4);
      b = eps_delta(4, 0);
      auto e = units(b, 0, 4);
      b.pairs(e, "long");
      b.singles(e, "short");
      for (int mask = 0; mask < 16; ++mask) {
        Vector v(4);
        for (int i = 0; i < 4; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
        b.add(v, "short");
      }
      break;
    }
    case Family::G: {
      need(n == 2);
      return cartan_closure({{2, -3}, {-3, 6}});
    }
    case Family::B0: {
      need(n >= 1);
      b = eps_delta(0, n);
      auto d = units(b, 0, n);
      b.singles(d, "d");
      b.pairs(d, "dd");
      b.singles(d, "2d", 2);
      break;
    }
    case Family::ASuper:
      need(m >= 0 && n >= 0 && m + n >= 1);
      return a_type(m + 1, n + 1, m == n, false);
    case Family::ATilde:
      need(n >= 1);
      return a_type(n + 1, n + 1, true, true);
    case Family::BSuper: {
      need(m >= 1 && n >= 1);
      b = eps_delta(m, n);
      auto e = units(b, 0, m), d = units(b, m, n);
      b.pairs(e, "ee");
      b.singles(e, "e");
      b.pairs(d, "dd");
      b.singles(d, "2d", 2);
      b.singles(d, "d");
      b.mixed(e, d, "ed");
      break;
    }
    case Family::CSuper: {
      need(n >= 2);
      b = eps_delta(1, n - 1);
      auto e = units(b, 0, 1), d = units(b, 1, n - 1);
      b.pairs(d, "dd");
      b.singles(d, "2d", 2);
      b.mixed(e, d, "ed");
      break;
    }
    case Family::DSuper: {
      need(m >= 2 && n >= 1);
      b = eps_delta(m, n);
      auto e = units(b, 0, m), d = units(b, m, n);
      b.pairs(e, "ee");
      b.pairs(d, "dd");
      b.singles(d, "2d", 2);
      b.mixed(e, d, "ed");
      break;
    }
    case Family::D21: {
      Scalar l = t.lambda.value_or(1);
      need(!is_zero(l) && l != -1);
      b = eps_delta(3, 0);
      b.space.gram[0][0] = -(1 + l);
      b.space.gram[2][2] = l;
      auto e = units(b, 0, 3);
      b.singles(e, "2e", 2);
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) b.add_pm(add(add(e[0], scale(s2, e[1])), scale(s3, e[2])), "odd");
      break;
    }
    case Family::G3: {
      b.space.labels = {"e1", "e2", "d1"};
      b.space.gram = {{2, -1, 0}, {-1, 2, 0}, {0, 0, -2}};
      std::vector<Vector> e = {b.unit(0), b.unit(1), neg(add(b.unit(0), b.unit(1)))};
      Vector d = b.unit(2);
      b.singles(e, "short");
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) b.add(sub(e[i], e[j]), "long");
      b.singles({d}, "d");
      b.singles({d}, "2d", 2);
      b.mixed(e, {d}, "ed");
      break;
    }
    case Family::F4Super: {
      b = eps_delta(3, 1, 1, -3);
      auto e = units(b, 0, 3);
      b.pairs(e, "ee");
      b.singles(e, "e");
      b.singles(units(b, 3, 1), "d");
      for (int mask = 0; mask < 16; ++mask) {
        Vector v(4);
        for (int i = 0; i < 4; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
        b.add(v, "odd");
      }
      break;
    }
    case Family::Cmn:
    case Family::BCmn: {
      need(m >= 1 && n >= 1);
      b = eps_delta(m, n);
      auto e = units(b, 0, m), d = units(b, m, n);
      b.pairs(e, "ee");
      b.singles(e, "2e", 2);
      b.pairs(d, "dd");
      b.singles(d, "2d", 2);
      b.mixed(e, d, "ed");
      if (t.family == Family::BCmn) {
        b.singles(e, "e");
        b.singles(d, "d");
      }
      break;
    }
    default:
      throw InvalidInput("make_finite: unsupported tag " + to_string(t));
  }
  return b.finish();
}

std::shared_ptr<const CatalogSystem> finite_cached(const TypeTag& tag) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CatalogSystem>> cache;
  const std::string key = to_string(tag);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const CatalogSystem>(make_finite(tag));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, built).first->second;
}

namespace {

void push_unique(std::vector<TypeTag>& out, const TypeTag& raw) {
  TypeTag t;
  try {
    t = canonical(raw);
  } catch (const InvalidInput&) {
    return;
  }
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
}

}  // namespace

std::vector<TypeTag> finite_catalog_tags(int k, const std::vector<Scalar>& lambdas) {
  std::vector<TypeTag> out;
  for (int n = 1; n <= k; ++n)
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::B0, Family::CSuper, Family::ATilde})
      push_unique(out, {f, f == Family::ATilde ? n : 0, n});
  for (int n : {6, 7, 8}) push_unique(out, {Family::E, 0, n});
  push_unique(out, {Family::F, 0, 4});
  push_unique(out, {Family::G, 0, 2});
  for (int m = 0; m <= k; ++m)
    for (int n = 0; n <= k; ++n)
      for (Family f : {Family::ASuper, Family::BSuper, Family::DSuper, Family::Cmn, Family::BCmn}) {
        if (f == Family::ASuper && m == 1 && n == 1) continue;  // folds to C(1,1)
        push_unique(out, {f, m, n});
      }
  push_unique(out, {Family::D21, 2, 1, 0, Scalar(1)});
  for (const auto& l : lambdas) push_unique(out, {Family::D21, 2, 1, 0, l});
  push_unique(out, {Family::G3});
  push_unique(out, {Family::F4Super});
  return out;
}

std::vector<TypeTag> affine_catalog_tags(int k, const std::vector<Scalar>& qs) {
  std::vector<TypeTag> out;
  for (auto t : finite_catalog_tags(k, {Scalar(2)})) {
    if (t.family == Family::ASuper && t.m == t.n) continue;  // the q = 0 quotient, listed below
    t.twist = 1;
    push_unique(out, t);
  }
  for (int n = 1; n <= k; ++n) {
    push_unique(out, {Family::D, 0, n + 1, 2});
    push_unique(out, {Family::A, 0, 2 * n - 1, 2});
    push_unique(out, {Family::A, 0, 2 * n, 2});
    push_unique(out, {Family::CSuper, 0, n + 1, 2});
    push_unique(out, {Family::ASuper, 0, 2 * n - 1, 2});
    push_unique(out, {Family::ASuper, 0, 2 * n, 4});
    for (int m = 1; m <= k; ++m) {
      push_unique(out, {Family::DSuper, m + 1, n, 2});
      push_unique(out, {Family::ASuper, 2 * m - 1, 2 * n - 1, 2});
      push_unique(out, {Family::ASuper, 2 * m, 2 * n - 1, 2});
      push_unique(out, {Family::ASuper, 2 * m, 2 * n, 4});
    }
  }
  push_unique(out, {Family::E, 0, 6, 2});
  push_unique(out, {Family::D, 0, 4, 3});
  for (const auto& q : qs) {
    for (int n = 2; n <= k; ++n) push_unique(out, {Family::Quotient, n, n, 0, std::nullopt, q});
    push_unique(out, {Family::Peculiar, 1, 1, 0, std::nullopt, q});
  }
  return out;
}

}  // namespace grs
