#include "grs/iso.hpp"

#include <algorithm>
#include <map>

namespace grs {

namespace {

std::vector<std::size_t> norm_profile(const FiniteRootSystem& r) {
  std::map<Scalar, std::size_t> counts;
  std::size_t iso = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.isotropic(i)) ++iso;
    else ++counts[r.norm(i)];
  }
  std::vector<std::size_t> out;
  for (auto& [k, v] : counts) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.push_back(iso);
  return out;
}

// Greedy basis: non-isotropic roots first, each new vector nonorthogonal to
// an earlier one when possible.
std::vector<std::size_t> connected_basis(const FiniteRootSystem& r) {
  std::vector<std::size_t> order(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return !r.isotropic(i); });
  std::vector<std::size_t> chosen;
  std::vector<Vector> vecs;
  const std::size_t d = r.dim();
  while (chosen.size() < d) {
    std::optional<std::size_t> pick, fallback;
    for (auto i : order) {
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      auto trial = vecs;
      trial.push_back(r.root(i));
      if (rank(trial) != trial.size()) continue;
      if (!fallback) fallback = i;
      bool linked = chosen.empty();
      for (auto j : chosen) linked = linked || !is_zero(r.pairing(i, j));
      if (linked) {
        pick = i;
        break;
      }
    }
    if (!pick) pick = fallback;
    if (!pick) break;
    chosen.push_back(*pick);
    vecs.push_back(r.root(*pick));
  }
  return chosen;
}

struct Search {
  const FiniteRootSystem& a;
  const FiniteRootSystem& b;
  const IsoOptions& opt;
  const std::function<bool(const IsoWitness&)>& visit;

  std::vector<std::size_t> basis;
  std::vector<Vector> coords;             // coordinates of each source root in the basis
  std::vector<std::vector<std::size_t>> level;  // roots whose last nonzero coordinate is k
  Matrix ga;                              // Gram of the basis
  Matrix binv;
  std::vector<std::vector<Scalar>> pb;    // target pairing table
  bool degenerate = false;

  std::vector<std::size_t> img;
  std::vector<int> perm;
  bool stop = false;

  bool run() {
    const std::size_t d = a.dim();
    basis = connected_basis(a);
    if (basis.size() != d) throw InvalidInput("isomorphic: source roots do not span");
    if (rank(b.roots()) != b.dim()) throw InvalidInput("isomorphic: target roots do not span");
    Matrix cols(d, Vector(d));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) cols[i][k] = a.root(basis[k])[i];
    binv = *inverse(cols);
    level.assign(d, {});
    for (std::size_t r = 0; r < a.size(); ++r) {
      coords.push_back(multiply(binv, a.root(r)));
      std::size_t last = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(coords.back()[k])) last = k;
      level[last].push_back(r);
    }
    ga.assign(d, Vector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) ga[i][j] = a.pairing(basis[i], basis[j]);
    pb.assign(b.size(), std::vector<Scalar>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j) pb[i][j] = pb[j][i] = b.pairing(i, j);
    degenerate = !radical(a.space()).empty();
    img.assign(d, 0);
    perm.assign(a.size(), -1);
    dfs(0, opt.scale);
    return stop;
  }

  void dfs(std::size_t k, std::optional<Scalar> scale) {
    const std::size_t d = a.dim();
    if (k == d) {
      emit(scale.value_or(Scalar(1)));
      return;
    }
    for (std::size_t c = 0; c < b.size() && !stop; ++c) {
      std::optional<Scalar> s = scale;
      if (!fits(ga[k][k], b.norm(c), s)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = fits(ga[j][k], pb[c][img[j]], s);
      if (!ok) continue;
      img[k] = c;
      if (degenerate) {
        std::vector<Vector> vs;
        for (std::size_t j = 0; j <= k; ++j) vs.push_back(b.root(img[j]));
        if (rank(vs) != k + 1) continue;
      }
      if (!map_level(k)) {
        unmap_level(k);
        continue;
      }
      dfs(k + 1, s);
      unmap_level(k);
    }
  }

  // Pins or checks the scale for a pairing constraint target = s · source.
  static bool fits(const Scalar& source, const Scalar& target, std::optional<Scalar>& s) {
    if (is_zero(source)) return is_zero(target);
    if (is_zero(target)) return false;
    if (s) return *s * source == target;
    s = target / source;
    return true;
  }

  bool map_level(std::size_t k) {
    for (auto r : level[k]) {
      Vector v = zero_vector(b.dim());
      for (std::size_t j = 0; j <= k; ++j)
        if (!is_zero(coords[r][j])) v = add(v, scale(coords[r][j], b.root(img[j])));
      int t = b.find(v);
      if (t < 0) return false;
      if (opt.compat && !opt.compat(r, static_cast<std::size_t>(t))) return false;
      perm[r] = t;
    }
    return true;
  }

  void unmap_level(std::size_t k) {
    for (auto r : level[k]) perm[r] = -1;
  }

  void emit(const Scalar& s) {
    const std::size_t d = a.dim();
    Matrix c(b.dim(), Vector(d));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < b.dim(); ++i) c[i][k] = b.root(img[k])[i];
    IsoWitness w{multiply(c, binv), s, perm};
    std::vector<bool> hit(b.size(), false);
    for (int p : perm) {
      if (p < 0 || hit[static_cast<std::size_t>(p)]) return;
      hit[static_cast<std::size_t>(p)] = true;
    }
    if (!visit(w)) stop = true;
  }
};

}  // namespace

bool same_profile(const FiniteRootSystem& a, const FiniteRootSystem& b) {
  return a.dim() == b.dim() && a.size() == b.size() && radical(a.space()).size() == radical(b.space()).size() &&
         norm_profile(a) == norm_profile(b);
}

void for_each_isomorphism(const FiniteRootSystem& a, const FiniteRootSystem& b, const IsoOptions& opt,
                          const std::function<bool(const IsoWitness&)>& visit) {
  if (!same_profile(a, b)) return;
  Search s{a, b, opt, visit};
  s.run();
}

std::optional<IsoWitness> isomorphic(const FiniteRootSystem& a, const FiniteRootSystem& b, const IsoOptions& opt) {
  std::optional<IsoWitness> out;
  for_each_isomorphism(a, b, opt, [&](const IsoWitness& w) {
    out = w;
    return false;
  });
  return out;
}

bool verify_witness(const FiniteRootSystem& a, const FiniteRootSystem& b, const IsoWitness& w) {
  if (a.size() != b.size() || is_zero(w.scale)) return false;
  if (w.matrix.size() != b.dim() || (b.dim() && w.matrix[0].size() != a.dim())) return false;
  std::vector<bool> hit(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int t = b.find(multiply(w.matrix, a.root(i)));
    if (t < 0 || hit[static_cast<std::size_t>(t)]) return false;
    hit[static_cast<std::size_t>(t)] = true;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector u = multiply(w.matrix, unit_vector(a.dim(), i)), v = multiply(w.matrix, unit_vector(a.dim(), j));
      if (b.space().form(u, v) != w.scale * a.space().gram[i][j]) return false;
    }
  return rank(transpose(w.matrix)) == a.dim();
}

}  // namespace grs
