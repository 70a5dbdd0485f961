#include "grs/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace grs {

namespace {

bool fits_dim(const TypeTag& t, std::size_t dim) {
  const auto d = static_cast<int>(dim);
  return t.m + t.n <= d + 1 && t.n <= d + 1;
}

std::vector<Scalar> lambda_candidates(const FiniteRootSystem& r) {
  std::set<Scalar> norms;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r.isotropic(i)) norms.insert(r.norm(i));
  std::vector<Scalar> out;
  for (const auto& x : norms)
    for (const auto& y : norms) {
      Scalar l = x / y;
      if (is_zero(l) || l == -1) continue;
      Scalar c = canonical_lambda(l);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  return out;
}

std::string describe(const FiniteRootSystem& r) {
  std::size_t iso = 0;
  for (std::size_t i = 0; i < r.size(); ++i) iso += r.isotropic(i);
  return "dim " + std::to_string(r.dim()) + ", " + std::to_string(r.size()) + " roots, " + std::to_string(iso) +
         " isotropic, radical " + std::to_string(radical(r.space()).size());
}

std::map<std::string, AffinePresentation>& affine_cache() {
  static std::map<std::string, AffinePresentation> c;
  return c;
}
std::mutex affine_mutex;

AffinePresentation affine_cached(const TypeTag& t) {
  {
    std::lock_guard<std::mutex> lock(affine_mutex);
    auto it = affine_cache().find(to_string(t));
    if (it != affine_cache().end()) return it->second;
  }
  AffinePresentation p = make_affine(t);
  std::lock_guard<std::mutex> lock(affine_mutex);
  affine_cache().emplace(to_string(t), p);
  return p;
}

// Sum of residues along the fold relation sum c_k b_k = 0 of the simple roots
// of A(n,n), carried to p's base by a base isomorphism. Equals -q mod Z up to
// sign for the quotient by Id + q delta.
Scalar fold_residue(const AffinePresentation& p, int n) {
  auto cat = finite_cached(TypeTag{Family::ASuper, n, n});
  const FiniteRootSystem& a = cat->system;
  const std::size_t d = a.dim();
  std::vector<Vector> simple;
  Vector last(d);
  for (std::size_t k = 0; k < d; ++k) {
    simple.push_back(unit_vector(d, k));
    long c = k <= static_cast<std::size_t>(n) ? static_cast<long>(k) + 1 : static_cast<long>(2 * n + 1 - k);
    last[k] = -c;
  }
  simple.push_back(last);
  auto w = isomorphic(a, p.base());
  if (!w) throw Unclassifiable("base is not A(n,n)");
  Scalar x = 0;
  for (std::size_t k = 0; k < simple.size(); ++k) {
    int idx = a.find(simple[k]);
    if (idx < 0) throw std::logic_error("fold relation: simple root missing from catalog A(n,n)");
    long c = k <= static_cast<std::size_t>(n) ? static_cast<long>(k) + 1 : static_cast<long>(2 * n + 1 - k);
    const Fiber& f = p.fiber(static_cast<std::size_t>(w->perm[static_cast<std::size_t>(idx)]));
    if (f.residues.size() != 1) throw Unclassifiable("A(n,n) base with multi-residue fibers");
    x += Scalar(c) * f.residues[0] / f.step;
  }
  return x;
}

bool certify(const AffinePresentation& p, const TypeTag& t) {
  if (!is_valid(t)) return false;
  return isomorphic_affine(p, affine_cached(t)).has_value();
}

}  // namespace

System catalog_make(const TypeTag& raw) {
  TypeTag t = canonical(raw);
  if (t.affine() || t.family == Family::Quotient || t.family == Family::Peculiar) return make_affine(t);
  return make_finite(t).system;
}

TypeTag classify_finite(const FiniteRootSystem& r) {
  if (r.size() == 0) throw Unclassifiable("empty root set");
  auto rep = check_axioms(r);
  const std::size_t rad = radical(r.space()).size();
  if (rad == 0 && !rep.is_weak_grs) throw Unclassifiable("not a weak GRS: " + describe(r));
  if (!rep.is_irreducible) throw Unclassifiable("reducible input: " + describe(r));
  if (rad > 1) throw Unclassifiable("form radical of dimension " + std::to_string(rad));
  std::vector<Scalar> lambdas;
  if (r.dim() == 3) lambdas = lambda_candidates(r);
  for (const auto& t : finite_catalog_tags(static_cast<int>(r.dim()) + 1, lambdas)) {
    if (!fits_dim(t, r.dim())) continue;
    if ((t.family == Family::ATilde) != (rad == 1)) continue;
    auto c = finite_cached(t);
    if (!same_profile(c->system, r)) continue;
    if (isomorphic(c->system, r)) return t;
  }
  throw Unclassifiable("no catalog system matches (" + describe(r) + ")");
}

TypeTag classify_affine(const AffinePresentation& p) {
  auto rep = validate_agrs(p);
  if (!rep.is_weak_grs) {
    std::string ax = rep.violations.empty() ? "?" : rep.violations.front().axiom;
    throw Unclassifiable("presentation fails axiom " + ax);
  }
  if (!rep.is_irreducible) throw Unclassifiable("reducible presentation");
  if (p.finite()) {
    Scalar m = 0;
    for (const auto& f : p.fibers())
      for (const auto& r : f.residues) m = std::max(m, abs_of(r));
    TypeTag t = classify_finite(window(p, to_long(floor_of(m)) + 1));
    if (t.family != Family::ATilde) throw Unclassifiable("finite presentation is not ~A(n,n)");
    return t;
  }
  for (const auto& f : p.fibers())
    if (f.step == 0) throw Unclassifiable("presentation mixes finite and infinite fibers");

  TypeTag base = classify_finite(p.base());
  if (base.family == Family::Cmn && base.m == 1 && base.n == 1) {
    // Peculiar: isotropic fibers carry two residue classes {0, q}.
    AffinePresentation np = normalize_delta(p);
    for (std::size_t i = 0; i < np.base().size(); ++i) {
      if (!np.base().isotropic(i)) continue;
      const Fiber& f = np.fiber(i);
      if (f.residues.size() != 2) continue;
      Scalar q = canonical_q((f.residues[1] - f.residues[0]) / f.step);
      TypeTag t{Family::Peculiar, 1, 1, 0, std::nullopt, q};
      if (!is_integer(q) && certify(p, t)) return t;
      break;
    }
    throw Unclassifiable("C(1,1) base without peculiar fiber structure");
  }
  if (base.family == Family::ASuper && base.m == base.n) {
    Scalar q = canonical_q(-fold_residue(p, base.n));
    TypeTag t = canonical(TypeTag{Family::Quotient, base.n, base.n, 0, std::nullopt, q});
    if (certify(p, t)) return t;
    throw Unclassifiable("A(n,n) base: quotient with q = " + to_string(q) + " does not certify");
  }
  const int reach = 2 * std::max(base.m, base.n) + 2;
  for (const auto& t : affine_catalog_tags(reach, {})) {
    if (canonical(base_of(t)) != base) continue;
    if (certify(p, t)) return t;
  }
  throw Unclassifiable("no affine type over base " + to_string(base) + " matches the fiber data");
}

namespace {

template <class T>
bool perfect_matching(const std::vector<T>& a, const std::vector<T>& b, const std::function<bool(const T&, const T&)>& iso) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) edge[i][j] = iso(a[i], b[j]);
  std::vector<int> match(n, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!edge[i][j] || seen[j]) continue;
      seen[j] = true;
      if (match[j] < 0 || augment(static_cast<std::size_t>(match[j]), seen)) {
        match[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

}  // namespace

TypeTag resolve_tag(const std::string& name, const TagOptions& opt) {
  static const std::map<std::string, Family> words = {
      {"A", Family::A},         {"B", Family::B},               {"C", Family::C},
      {"D", Family::D},         {"E", Family::E},               {"F", Family::F},
      {"G", Family::G},         {"B0", Family::B0},             {"A_super", Family::ASuper},
      {"B_super", Family::BSuper}, {"C_super", Family::CSuper}, {"D_super", Family::DSuper},
      {"D21", Family::D21},     {"G3", Family::G3},             {"F4_super", Family::F4Super},
      {"C_mn", Family::Cmn},    {"BC", Family::BCmn},           {"Atilde", Family::ATilde},
      {"quotient", Family::Quotient}, {"peculiar", Family::Peculiar}};
  TypeTag t;
  if (auto it = words.find(name); it != words.end()) {
    t.family = it->second;
    if (t.family == Family::G) t.n = 2;
    if (t.family == Family::F) t.n = 4;
    if (t.family == Family::Peculiar) t.m = t.n = 1;
  } else {
    t = parse_tag(name);
  }
  if (opt.m) t.m = *opt.m;
  if (opt.n) t.n = *opt.n;
  if (opt.lambda) t.lambda = *opt.lambda;
  if (opt.q) t.q = *opt.q;
  if (opt.twist) t.twist = *opt.twist;
  if ((t.family == Family::Quotient || t.family == Family::ATilde) && !opt.n && opt.m) t.n = t.m;
  if ((t.family == Family::Quotient || t.family == Family::ATilde) && !opt.m) t.m = t.n;
  if (t.q && t.family == Family::ASuper && t.m == t.n && t.twist <= 1) {
    t.family = Family::Quotient;
    t.twist = 0;
  }
  if ((t.family == Family::Quotient || t.family == Family::Peculiar) && !t.q)
    throw InvalidInput(to_string(t) + " needs a q parameter");
  try {
    return canonical(t);
  } catch (const InvalidInput&) {
    if (t.twist < 2) throw;
    TypeTag b = t;
    b.twist = 0;
    TypeTag base;
    try {
      base = canonical(b);
    } catch (const InvalidInput&) {
      throw InvalidInput("no affine type " + to_string(t));
    }
    std::vector<TypeTag> hits;
    for (const auto& c : affine_catalog_tags(2 * std::max(base.m, base.n) + 2, {}))
      if (c.twist == t.twist && canonical(base_of(c)) == base) hits.push_back(c);
    if (hits.size() == 1) return hits.front();
    if (hits.empty()) throw InvalidInput("no affine type with twist " + std::to_string(t.twist) + " over " + to_string(base));
    std::string names;
    for (const auto& h : hits) names += (names.empty() ? "" : ", ") + to_string(h);
    throw InvalidInput("twist " + std::to_string(t.twist) + " over " + to_string(base) + " is ambiguous: " + names);
  }
}

bool similar(const FiniteRootSystem& a, const FiniteRootSystem& b) {
  std::vector<FiniteRootSystem> ca, cb;
  for (auto& c : decompose(a)) ca.push_back(c.system);
  for (auto& c : decompose(b)) cb.push_back(c.system);
  return perfect_matching<FiniteRootSystem>(
      ca, cb, [](const FiniteRootSystem& x, const FiniteRootSystem& y) { return isomorphic(x, y).has_value(); });
}

bool similar(const AffinePresentation& a, const AffinePresentation& b) {
  auto da = decompose_agrs(a), db = decompose_agrs(b);
  std::vector<AffinePresentation> aa, ab;
  for (auto& c : da.affine) aa.push_back(c.system);
  for (auto& c : db.affine) ab.push_back(c.system);
  std::vector<FiniteRootSystem> fa, fb;
  for (auto& c : da.finite) fa.push_back(c.system);
  for (auto& c : db.finite) fb.push_back(c.system);
  return perfect_matching<AffinePresentation>(aa, ab,
                                              [](const AffinePresentation& x, const AffinePresentation& y) {
                                                return isomorphic_affine(x, y).has_value();
                                              }) &&
         perfect_matching<FiniteRootSystem>(
             fa, fb, [](const FiniteRootSystem& x, const FiniteRootSystem& y) { return isomorphic(x, y).has_value(); });
}

}  // namespace grs
