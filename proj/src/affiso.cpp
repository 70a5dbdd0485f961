#include "grs/affiso.hpp"

#include <algorithm>
#include <functional>

namespace grs {

namespace {

std::vector<Scalar> reduced(std::vector<Scalar> rs, long step) {
  if (step > 0)
    for (auto& r : rs) r = mod_into(r, Scalar(step));
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return rs;
}

std::vector<Scalar> shifted(const std::vector<Scalar>& rs, const Scalar& c, const Scalar& s, long step) {
  std::vector<Scalar> out;
  for (const auto& r : rs) out.push_back(c * r + s);
  return reduced(out, step);
}

long step_gcd(const AffinePresentation& p) {
  long g = 0;
  for (const auto& f : p.fibers()) g = gcd_long(g, f.step);
  return g;
}

bool mixed(const AffinePresentation& p) {
  bool zero = false, pos = false;
  for (const auto& f : p.fibers()) (f.step == 0 ? zero : pos) = true;
  return zero && pos;
}

// diag(I, x)
Matrix offset_scaling(std::size_t d, const Scalar& x) {
  Matrix m = identity_matrix(d + 1);
  m[d][d] = x;
  return m;
}

}  // namespace

std::optional<AffineIsoWitness> isomorphic_affine(const AffinePresentation& a, const AffinePresentation& b,
                                                  std::optional<Scalar> scale) {
  if (mixed(a) || mixed(b)) throw InvalidInput("affine isomorphism: presentation mixes finite and infinite fibers");
  if (a.finite() != b.finite() || a.base().size() != b.base().size() || a.total_dim() != b.total_dim())
    return std::nullopt;
  if (a.finite()) {
    // window bound past every residue gives the whole finite set
    auto bound = [](const AffinePresentation& p) {
      Scalar m = 0;
      for (const auto& f : p.fibers())
        for (const auto& r : f.residues) m = std::max(m, abs_of(r));
      return to_long(floor_of(m)) + 1;
    };
    FiniteRootSystem ra = window(a, bound(a)), rb = window(b, bound(b));
    IsoOptions opt;
    opt.scale = scale;
    auto w = isomorphic(ra, rb, opt);
    if (!w) return std::nullopt;
    return AffineIsoWitness{w->matrix, w->scale};
  }

  const FiniteRootSystem& ba = a.base();
  const FiniteRootSystem& bb = b.base();
  const std::size_t d = ba.dim(), n = ba.size();
  const long ga = step_gcd(a), gb = step_gcd(b);
  std::vector<long> sa(n), sb(n);
  std::vector<std::vector<Scalar>> ra(n), rb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = a.fiber(i).step / ga;
    sb[i] = b.fiber(i).step / gb;
    for (const auto& r : a.fiber(i).residues) ra[i].push_back(r / ga);
    for (const auto& r : b.fiber(i).residues) rb[i].push_back(r / gb);
    ra[i] = reduced(ra[i], sa[i]);
    rb[i] = reduced(rb[i], sb[i]);
  }

  std::vector<std::size_t> basis = greedy_basis(ba.roots());
  Matrix bm(d, Vector(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) bm[i][k] = ba.root(basis[k])[i];
  Matrix binv = *inverse(bm);
  std::vector<Vector> coeff(n);
  std::vector<std::size_t> level(n, 0);
  mpz_class den = 1;
  long period = 1;
  for (std::size_t i = 0; i < n; ++i) {
    coeff[i] = multiply(binv, ba.root(i));
    for (std::size_t k = 0; k < d; ++k)
      if (!is_zero(coeff[i][k])) {
        level[i] = k;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coeff[i][k].get_den_mpz_t());
      }
    period = lcm_long(period, sa[i]);
  }
  const long big = period * den.get_si();
  std::vector<std::vector<std::size_t>> at_level(d);
  for (std::size_t i = 0; i < n; ++i) at_level[level[i]].push_back(i);

  IsoOptions opt;
  opt.scale = scale;
  opt.compat = [&](std::size_t i, std::size_t j) { return sa[i] == sb[j] && ra[i].size() == rb[j].size(); };

  std::optional<AffineIsoWitness> found;
  for_each_isomorphism(ba, bb, opt, [&](const IsoWitness& base_iso) {
    for (int ci : {1, -1}) {
      const Scalar c(ci);
      Vector s(d);
      std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == d) return true;
        const std::size_t cls = basis[k];
        const std::size_t tgt = static_cast<std::size_t>(base_iso.perm[cls]);
        const long step = sa[cls];
        std::vector<Scalar> cand;
        for (const auto& rp : rb[tgt])
          for (long m = 0; m * step < big; ++m) cand.push_back(mod_into(rp - c * ra[cls][0] + Scalar(step * m), Scalar(big)));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (const auto& x : cand) {
          s[k] = x;
          bool ok = true;
          for (std::size_t i : at_level[k]) {
            Scalar sig = dot(coeff[i], s);
            if (shifted(ra[i], c, sig, sa[i]) != rb[static_cast<std::size_t>(base_iso.perm[i])]) {
              ok = false;
              break;
            }
          }
          if (ok && go(k + 1)) return true;
        }
        return false;
      };
      if (!go(0)) continue;
      Matrix m(d + 1, Vector(d + 1));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = base_iso.matrix[i][j];
      // sigma(v) = s · binv · v
      for (std::size_t j = 0; j < d; ++j) {
        Scalar x = 0;
        for (std::size_t k = 0; k < d; ++k) x += s[k] * binv[k][j];
        m[d][j] = x;
      }
      m[d][d] = c;
      m = multiply(offset_scaling(d, Scalar(gb)), multiply(m, offset_scaling(d, make_scalar(1, ga))));
      found = AffineIsoWitness{m, base_iso.scale};
      return false;
    }
    return true;
  });
  return found;
}

bool verify_affine_witness(const AffinePresentation& a, const AffinePresentation& b, const AffineIsoWitness& w) {
  const std::size_t da = a.total_dim(), db = b.total_dim();
  if (da != db || w.matrix.size() != db || is_zero(w.scale)) return false;
  FormSpace sa = a.total_space(), sb = b.total_space();
  Matrix lhs = multiply(transpose(w.matrix), multiply(sb.gram, w.matrix));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      if (lhs[i][j] != w.scale * sa.gram[i][j]) return false;
  Vector delta(da, Scalar(0));
  delta[da - 1] = 1;
  Vector img_delta = multiply(w.matrix, delta);
  for (std::size_t i = 0; i + 1 < db; ++i)
    if (!is_zero(img_delta[i])) return false;
  const Scalar cd = img_delta[db - 1];
  if (is_zero(cd)) return false;
  if (a.base().size() != b.base().size()) return false;
  std::vector<bool> hit(b.base().size(), false);
  for (std::size_t i = 0; i < a.base().size(); ++i) {
    Vector img = multiply(w.matrix, a.lift(i, Scalar(0)));
    Scalar sig = img.back();
    img.pop_back();
    int j = b.base().find(img);
    if (j < 0 || hit[static_cast<std::size_t>(j)]) return false;
    hit[static_cast<std::size_t>(j)] = true;
    const Fiber& fa = a.fiber(i);
    const Fiber& fb = b.fiber(static_cast<std::size_t>(j));
    if (Scalar(fb.step) != abs_of(cd) * fa.step) return false;
    if (shifted(fa.residues, cd, sig, fb.step) != reduced(fb.residues, fb.step)) return false;
  }
  return true;
}

bool verify_on_window(const AffinePresentation& a, const AffinePresentation& b, const AffineIsoWitness& w, long n) {
  FiniteRootSystem win = window(a, n);
  for (const auto& r : win.roots())
    if (!b.contains(multiply(w.matrix, r))) return false;
  return true;
}

}  // namespace grs
