#include "grs/finsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace grs {

FiniteRootSystem::FiniteRootSystem(FormSpace space, std::vector<Vector> roots)
    : space_(std::move(space)), roots_(std::move(roots)) {
  check_form_space(space_);
  for (const auto& v : roots_)
    if (v.size() != space_.dim()) throw InvalidInput("root " + to_string(v) + " has wrong dimension");
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    index_.emplace(roots_[i], static_cast<int>(i));
    gram_roots_.push_back(space_.apply(roots_[i]));
    norms_.push_back(dot(gram_roots_.back(), roots_[i]));
  }
  neg_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) neg_[i] = find(grs::neg(roots_[i]));
}

int FiniteRootSystem::find(const Vector& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Scalar FiniteRootSystem::pairing(std::size_t i, std::size_t j) const { return dot(gram_roots_[i], roots_[j]); }

bool AxiomReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

namespace {

constexpr std::size_t kMaxWitnesses = 64;

struct Recorder {
  std::vector<Violation>& out;
  std::size_t count = 0;
  void add(const std::string& axiom, std::vector<Vector> w, std::string detail) {
    if (++count > kMaxWitnesses) return;
    out.push_back({axiom, std::move(w), std::move(detail)});
  }
};

bool is_reduced_set(const FiniteRootSystem& r) {
  // Group roots by primitive direction: divide by the first nonzero coordinate.
  std::unordered_map<Vector, int, VectorHash> seen;
  for (const auto& v : r.roots()) {
    auto p = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !is_zero(x); });
    if (p == v.end()) continue;
    Vector d = scale(1 / abs_of(*p), v);
    if (++seen[d] > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> components(const FiniteRootSystem& r) {
  const std::size_t n = r.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      out[id].push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && !is_zero(r.pairing(i, j))) {
          comp[j] = id;
          stack.push_back(j);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

AxiomReport check_axioms(const FiniteRootSystem& r) {
  if (r.size() == 0) throw InvalidInput("empty root set");
  AxiomReport rep;
  Recorder rec0{rep.violations}, rec1{rep.violations}, rec2{rep.violations}, rec2w{rep.violations};
  const std::size_t n = r.size(), d = r.dim();

  bool ax0 = true;
  for (std::size_t i = 0; i < n; ++i)
    if (is_zero_vector(r.root(i))) {
      ax0 = false;
      rec0.add("0", {r.root(i)}, "zero vector in root set");
    }
  if (rank(r.roots()) != d) {
    ax0 = false;
    rec0.add("0", {}, "roots do not span the space");
  }
  if (!radical(r.space()).empty()) {
    ax0 = false;
    rec0.add("0", {}, "form is degenerate");
  }

  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    if (r.negative(i) < 0) {
      symmetric = false;
      rec2w.add("2'", {r.root(i)}, "negative is not a root");
    }

  bool ax1 = true, weak2 = true, strict2 = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& a = r.root(i);
    if (!r.isotropic(i)) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar p = r.pairing(i, j);
        if (is_zero(p)) continue;
        Scalar c = 2 * p / r.norm(i);
        if (!is_integer(c)) {
          ax1 = false;
          rec1.add("1", {a, r.root(j)}, "2(a,b)/(a,a) = " + to_string(c) + " is not an integer");
          continue;
        }
        Vector img = sub(r.root(j), scale(c, a));
        if (!r.contains(img)) {
          ax1 = false;
          rec1.add("1", {a, r.root(j), img}, "reflection leaves the root set");
        }
      }
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(r.pairing(i, j))) continue;
      const Vector& b = r.root(j);
      bool plus = r.contains(add(b, a)), minus = r.contains(sub(b, a));
      if (plus && minus) {
        strict2 = false;
        rec2.add("2", {a, b}, "both b+a and b-a are roots");
      } else if (!plus && !minus) {
        strict2 = false;
        weak2 = false;
        rec2.add("2", {a, b}, "neither b+a nor b-a is a root");
      }
    }
  }

  rep.is_weak_grs = ax0 && ax1 && symmetric && weak2;
  rep.is_grs = rep.is_weak_grs && strict2;
  bool any_iso = false;
  for (std::size_t i = 0; i < n; ++i) any_iso = any_iso || r.isotropic(i);
  rep.is_rs = rep.is_grs && !any_iso;
  if (rep.is_grs && any_iso) rep.violations.push_back({"rs", {}, "isotropic roots present"});
  rep.is_reduced = is_reduced_set(r);
  if (!rep.is_reduced) rep.violations.push_back({"reduced", {}, "some root has a multiple other than its negative"});
  rep.is_irreducible = components(r).size() == 1;
  if (!rep.is_irreducible) rep.violations.push_back({"irreducible", {}, "nonorthogonality graph is disconnected"});
  return rep;
}

Vector reflect_vector(const FormSpace& s, const Vector& alpha, const Vector& v) {
  Scalar c = 2 * s.form(alpha, v) / s.form(alpha, alpha);
  return sub(v, scale(c, alpha));
}

Vector reflect(const FiniteRootSystem& r, const Vector& alpha, const Vector& beta) {
  int i = r.find(alpha), j = r.find(beta);
  if (i < 0 || j < 0) throw InvalidInput("reflect: arguments must be roots");
  if (!r.isotropic(i)) return reflect_vector(r.space(), alpha, beta);
  if (i == j) return neg(alpha);
  if (j == r.negative(i)) return alpha;
  if (is_zero(r.pairing(i, j))) return beta;
  Vector p = add(beta, alpha), m = sub(beta, alpha);
  bool plus = r.contains(p), minus = r.contains(m);
  if (plus == minus)
    throw AmbiguityError(std::string("odd reflection undefined: ") + (plus ? "both" : "neither") +
                         " of b+a, b-a are roots for a=" + to_string(alpha) + ", b=" + to_string(beta));
  return plus ? p : m;
}

std::optional<std::vector<int>> reflection_permutation(const FiniteRootSystem& r, std::size_t i) {
  const std::size_t n = r.size();
  std::vector<int> perm(n);
  const Vector& a = r.root(i);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar p = r.pairing(i, j);
    if (r.isotropic(i)) {
      if (j == i) perm[j] = r.negative(i);
      else if (static_cast<int>(j) == r.negative(i)) perm[j] = static_cast<int>(i);
      else if (is_zero(p)) perm[j] = static_cast<int>(j);
      else {
        int pl = r.find(add(r.root(j), a)), mi = r.find(sub(r.root(j), a));
        if ((pl >= 0) == (mi >= 0)) return std::nullopt;
        perm[j] = pl >= 0 ? pl : mi;
      }
    } else {
      Scalar c = 2 * p / r.norm(i);
      if (!is_integer(c)) return std::nullopt;
      perm[j] = is_zero(c) ? static_cast<int>(j) : r.find(sub(r.root(j), scale(c, a)));
    }
    if (perm[j] < 0) return std::nullopt;
  }
  return perm;
}

std::vector<std::vector<Vector>> weyl_orbits(const FiniteRootSystem& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto perm = reflection_permutation(r, i);
    if (!perm) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto a = root_of(j), b = root_of(static_cast<std::size_t>((*perm)[j]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vector>> orbits;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t j = 0; j < n; ++j) {  // roots are sorted, so orbits come out ordered by least root
    auto rt = root_of(j);
    auto [it, fresh] = slot.emplace(rt, orbits.size());
    if (fresh) orbits.emplace_back();
    orbits[it->second].push_back(r.root(j));
  }
  return orbits;
}

std::vector<Vector> generate(const FiniteRootSystem& ambient, const std::vector<Vector>& s) {
  std::set<std::size_t> cur;
  for (const auto& v : s) {
    int i = ambient.find(v);
    if (i < 0) throw InvalidInput("generate: " + to_string(v) + " is not in the ambient system");
    cur.insert(static_cast<std::size_t>(i));
  }
  for (;;) {
    std::vector<std::size_t> items(cur.begin(), cur.end());
    std::set<std::size_t> next = cur;
    for (auto i : items)
      for (auto j : items) {
        try {
          next.insert(static_cast<std::size_t>(ambient.find(reflect(ambient, ambient.root(i), ambient.root(j)))));
        } catch (const AmbiguityError&) {
        }
      }
    next.erase(static_cast<std::size_t>(-1));
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  std::vector<Vector> out;
  for (auto i : cur) out.push_back(ambient.root(i));
  return out;
}

std::vector<Component> decompose(const FiniteRootSystem& r) {
  std::vector<Component> out;
  for (const auto& comp : components(r)) {
    std::vector<Vector> vs;
    for (auto i : comp) vs.push_back(r.root(i));
    auto sub = restrict_to_span(r.space(), vs);
    out.push_back({FiniteRootSystem(sub.space, sub.coords), sub.basis, vs});
  }
  return out;
}

std::optional<long> t_coeff(const FiniteRootSystem& cl, const Vector& alpha, const Vector& beta) {
  int i = cl.find(alpha);
  if (i < 0 || !cl.contains(beta)) throw InvalidInput("t_coeff: arguments must be roots");
  Scalar p = cl.pairing(static_cast<std::size_t>(i), beta);
  if (is_zero(p)) throw std::domain_error("t_coeff: (alpha, beta) = 0");
  if (!cl.isotropic(static_cast<std::size_t>(i))) {
    Scalar c = 2 * p / cl.norm(static_cast<std::size_t>(i));
    if (!is_integer(c)) return std::nullopt;
    return to_long(c);
  }
  Vector two = scale(2, alpha);
  if (cl.contains(add(beta, two)) || cl.contains(sub(beta, two))) return std::nullopt;
  bool plus = cl.contains(add(beta, alpha)), minus = cl.contains(sub(beta, alpha));
  if (plus == minus) return std::nullopt;
  return plus ? -1 : 1;
}

}  // namespace grs
