#include "grs/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>

namespace grs::oracle {

namespace {

using I = long long;
using IVec = std::vector<I>;

struct IVecHash {
  std::size_t operator()(const IVec& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (I x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// Roots scaled by the lcm of coordinate denominators, gram by the lcm of its
// denominators. Ratios and signs of pairings are unchanged.
struct IntSystem {
  std::vector<IVec> roots;
  std::vector<IVec> gram;
  std::unordered_set<IVec, IVecHash> set;
  I coord_scale = 1;

  explicit IntSystem(const FiniteRootSystem& r) {
    mpz_class dl = 1, gl = 1;
    for (const auto& v : r.roots())
      for (const auto& x : v) mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& row : r.space().gram)
      for (const auto& x : row) mpz_lcm(gl.get_mpz_t(), gl.get_mpz_t(), x.get_den_mpz_t());
    coord_scale = dl.get_si();
    for (const auto& v : r.roots()) {
      IVec w;
      for (const auto& x : v) w.push_back(to_long(x * Scalar(dl)));
      roots.push_back(w);
      set.insert(w);
    }
    for (const auto& row : r.space().gram) {
      IVec w;
      for (const auto& x : row) w.push_back(to_long(x * Scalar(gl)));
      gram.push_back(w);
    }
  }

  __int128 form(const IVec& x, const IVec& y) const {
    __int128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < y.size(); ++j) s += static_cast<__int128>(x[i]) * gram[i][j] * y[j];
    }
    return s;
  }
  bool has(const IVec& v) const { return set.count(v) > 0; }
};

IVec add(const IVec& a, const IVec& b, I c = 1) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + c * b[i];
  return r;
}

Vector to_vector(const IVec& v, I scale) {
  Vector r;
  for (I x : v) r.push_back(make_scalar(x, scale));
  return r;
}

bool is_zero_i(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](I x) { return x == 0; });
}

}  // namespace

BruteAxioms brute_axioms(const FiniteRootSystem& r, std::optional<long> bound) {
  BruteAxioms out;
  if (r.size() == 0) throw InvalidInput("brute_axioms: empty root set");
  IntSystem s(r);
  const std::size_t n = s.roots.size(), d = r.dim();
  auto& rep = out.report;
  auto flag = [&](const std::string& ax, std::vector<IVec> w, const std::string& why) {
    if (rep.violations.size() >= 64) return;
    std::vector<Vector> vs;
    for (auto& x : w) vs.push_back(to_vector(x, s.coord_scale));
    rep.violations.push_back({ax, vs, why});
  };
  const I lim = bound ? static_cast<I>(*bound) * s.coord_scale : 0;
  auto outside = [&](const IVec& v) { return bound && (v.back() > lim || v.back() < -lim); };

  bool ax0 = true, ax1 = true, w2 = true, s2 = true, sym = true;
  for (const auto& v : s.roots)
    if (is_zero_i(v)) {
      ax0 = false;
      flag(bound ? "0'" : "0", {v}, "zero root");
    }
  const std::string zero_id = bound ? "0'" : "0";
  if (rank(r.roots()) != d) {
    ax0 = false;
    flag(zero_id, {}, "roots do not span");
  }
  // radical by brute force: vectors v with row(v)·gram = 0 spanned by unit
  // images; count its dimension through the rank of the gram.
  const std::size_t rad = d - rank(r.space().gram);
  if (rad != (bound ? 1u : 0u)) {
    ax0 = false;
    flag(zero_id, {}, "radical has dimension " + std::to_string(rad));
  }
  if (bound)
    for (const auto& v : s.roots) {
      bool in_rad = true;
      for (std::size_t i = 0; i < d && in_rad; ++i) {
        IVec e(d, 0);
        e[i] = 1;
        in_rad = s.form(v, e) == 0;
      }
      if (in_rad) {
        ax0 = false;
        flag("0'", {v}, "root in the radical");
      }
    }
  for (const auto& v : s.roots) {
    IVec m = v;
    for (auto& x : m) x = -x;
    if (!s.has(m)) {
      sym = false;
      flag("2'", {v}, "negative missing");
    }
  }
  bool any_iso = false;
  for (const auto& a : s.roots) {
    __int128 na = s.form(a, a);
    any_iso = any_iso || na == 0;
    for (const auto& b : s.roots) {
      __int128 p = s.form(a, b);
      if (p == 0) continue;
      if (na != 0) {
        if ((2 * p) % na != 0) {
          ++out.checked;
          ax1 = false;
          flag("1", {a, b}, "non-integral");
          continue;
        }
        IVec img = add(b, a, -static_cast<I>(2 * p / na));
        if (outside(img)) {
          ++out.skipped;
          continue;
        }
        ++out.checked;
        if (!s.has(img)) {
          ax1 = false;
          flag("1", {a, b, img}, "reflection leaves the set");
        }
        continue;
      }
      IVec pl = add(b, a), mi = add(b, a, -1);
      if (outside(pl) || outside(mi)) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      bool hp = s.has(pl), hm = s.has(mi);
      if (hp && hm) {
        s2 = false;
        flag("2", {a, b}, "both");
      } else if (!hp && !hm) {
        s2 = w2 = false;
        flag("2", {a, b}, "neither");
      }
    }
  }
  rep.is_weak_grs = ax0 && ax1 && sym && w2;
  rep.is_grs = rep.is_weak_grs && s2;
  rep.is_rs = rep.is_grs && !any_iso;
  rep.is_reduced = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // b = c·a with c != ±1
      const IVec &a = s.roots[i], &b = s.roots[j];
      std::size_t k = 0;
      while (k < d && a[k] == 0) ++k;
      if (k == d || b[k] == 0 || b[k] == a[k] || b[k] == -a[k]) continue;
      bool prop = true;
      for (std::size_t t = 0; t < a.size() && prop; ++t)
        prop = static_cast<__int128>(b[t]) * a[k] == static_cast<__int128>(a[t]) * b[k];
      if (prop) rep.is_reduced = false;
    }
  // connectivity by repeated sweeps
  std::vector<bool> reach(n, false);
  reach[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i])
        for (std::size_t j = 0; j < n; ++j)
          if (!reach[j] && s.form(s.roots[i], s.roots[j]) != 0) reach[j] = grew = true;
  }
  rep.is_irreducible = std::all_of(reach.begin(), reach.end(), [](bool x) { return x; });
  return out;
}

std::optional<IsoWitness> brute_iso(const FiniteRootSystem& a, const FiniteRootSystem& b) {
  if (a.size() > 14 || b.size() > 14) throw InvalidInput("brute_iso: more than 14 roots");
  if (a.size() != b.size() || a.dim() != b.dim()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::optional<IsoWitness> found;
  std::vector<std::size_t> basis = greedy_basis(a.roots());
  if (basis.size() != a.dim()) return std::nullopt;

  auto linear_witness = [&](const Scalar& sc) -> std::optional<IsoWitness> {
    const std::size_t d = a.dim();
    Matrix src(d, Vector(d)), dst(b.dim(), Vector(d));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        src[i][k] = a.root(basis[k])[i];
        dst[i][k] = b.root(static_cast<std::size_t>(img[basis[k]]))[i];
      }
    Matrix m = multiply(dst, *inverse(src));
    for (std::size_t r = 0; r < n; ++r)
      if (multiply(m, a.root(r)) != b.root(static_cast<std::size_t>(img[r]))) return std::nullopt;
    return IsoWitness{m, sc, img};
  };

  std::function<void(std::size_t, std::optional<Scalar>)> go = [&](std::size_t i, std::optional<Scalar> sc) {
    if (found) return;
    if (i == n) {
      found = linear_witness(sc.value_or(Scalar(1)));
      return;
    }
    for (std::size_t c = 0; c < n && !found; ++c) {
      if (used[c]) continue;
      std::optional<Scalar> s = sc;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const std::size_t cj = j == i ? c : static_cast<std::size_t>(img[j]);
        Scalar x = a.space().form(a.root(i), a.root(j)), y = b.space().form(b.root(c), b.root(cj));
        if (is_zero(x) || is_zero(y)) {
          ok = is_zero(x) && is_zero(y);
        } else if (!s) {
          s = y / x;
        } else {
          ok = *s * x == y;
        }
      }
      if (!ok) continue;
      used[c] = true;
      img[i] = static_cast<int>(c);
      go(i + 1, s);
      used[c] = false;
      img[i] = -1;
    }
  };
  go(0, std::nullopt);
  return found;
}

std::vector<std::vector<int>> brute_parity(const FiniteRootSystem& r) {
  if (r.size() > 16) throw InvalidInput("brute_parity: more than 16 roots");
  IntSystem s(r);
  const std::size_t n = s.roots.size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IVec sum = add(s.roots[i], s.roots[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (s.roots[k] == sum) triples.push_back({i, j, k});
    }
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    auto bit = [&](std::size_t i) { return static_cast<int>((mask >> i) & 1UL); };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (s.form(s.roots[i], s.roots[i]) == 0 && !bit(i)) ok = false;
    for (const auto& t : triples) {
      if (!ok) break;
      ok = ((bit(t[0]) + bit(t[1])) % 2) == bit(t[2]);
    }
    if (!ok) continue;
    std::vector<int> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = bit(i);
    out.push_back(f);
  }
  return out;
}

OracleReport brute_translation(const AffinePresentation& p, std::size_t ai, std::size_t bi, int m_max,
                               long beta_shift) {
  OracleReport rep;
  const FiniteRootSystem& cl = p.base();
  const Fiber& fa = p.fiber(ai);
  const Fiber& fb = p.fiber(bi);
  Scalar a1 = fa.residues[0];
  Scalar a2;
  if (fa.step > 0) a2 = a1 + fa.step;
  else if (fa.residues.size() > 1) a2 = fa.residues[1];
  else {
    rep.mismatches.push_back("class has a single root; no second lift");
    return rep;
  }
  // t from the case table, read off the base set directly
  const Vector& av = cl.root(ai);
  const Vector& bv = cl.root(bi);
  Scalar pab = cl.space().form(av, bv), naa = cl.space().form(av, av);
  if (is_zero(pab)) {
    rep.mismatches.push_back("(a,b) = 0");
    return rep;
  }
  long t;
  if (!is_zero(naa)) {
    t = to_long(2 * pab / naa);
  } else {
    bool plus = cl.contains(grs::add(bv, av));
    t = plus ? -1 : 1;
  }
  Scalar maxres = 0;
  for (const auto& f : p.fibers())
    for (const auto& r : f.residues) maxres = std::max(maxres, abs_of(r));
  const long span = to_long(floor_of(abs_of(a2 - a1))) + 1;
  const long bound = (6 + 2 * std::labs(t)) * (m_max + 1) * (span + 2) + to_long(floor_of(maxres)) + 2 +
                     std::labs(beta_shift) * fb.step;
  // explicit window materialized once; membership is plain set lookup
  FiniteRootSystem w = window(p, bound);
  IntSystem s(w);
  auto lift = [&](const Vector& cls, const Scalar& off) {
    Vector v = cls;
    v.push_back(off);
    IVec out;
    for (const auto& x : v) out.push_back(to_long(x * Scalar(static_cast<long>(s.coord_scale))));
    return out;
  };
  IVec ap = lift(av, a1), app = lift(av, a2), bp = lift(bv, fb.residues[0] + Scalar(beta_shift * fb.step));
  auto refl = [&](const IVec& a, const IVec& v, bool& ok) {
    __int128 na = s.form(a, a), pv = s.form(a, v);
    if (na != 0) return add(v, a, -static_cast<I>(2 * pv / na));
    IVec neg_a = a;
    for (auto& x : neg_a) x = -x;
    if (v == a) return neg_a;
    if (v == neg_a) return a;
    if (pv == 0) return v;
    IVec pl = add(v, a), mi = add(v, a, -1);
    bool hp = s.has(pl), hm = s.has(mi);
    if (hp == hm) ok = false;
    return hp ? pl : mi;
  };
  IVec v = bp;
  IVec diff = add(app, ap, -1);
  for (int m = 0; m <= m_max; ++m) {
    IVec expect = add(bp, diff, static_cast<I>(t) * m);
    ++rep.checked;
    if (v != expect)
      rep.mismatches.push_back("m=" + std::to_string(m) + ": got " + to_string(to_vector(v, s.coord_scale)) +
                               ", expected " + to_string(to_vector(expect, s.coord_scale)));
    bool ok = true;
    v = refl(app, refl(ap, v, ok), ok);
    if (!ok || !s.has(v)) {
      rep.mismatches.push_back("m=" + std::to_string(m + 1) + ": reflection undefined or outside the window");
      break;
    }
  }
  return rep;
}

}  // namespace grs::oracle
