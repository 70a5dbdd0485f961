#include "grs/affine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grs {

bool Fiber::contains(const Scalar& x) const {
  if (step == 0) return std::binary_search(residues.begin(), residues.end(), x);
  return std::binary_search(residues.begin(), residues.end(), mod_into(x, Scalar(step)));
}

AffinePresentation::AffinePresentation(FiniteRootSystem base, std::vector<Fiber> fibers, std::string delta_label)
    : base_(std::move(base)), delta_label_(std::move(delta_label)) {
  fibers_.assign(base_.size(), Fiber{});
  std::vector<bool> seen(base_.size(), false);
  for (auto& f : fibers) {
    int i = base_.find(f.base_class);
    if (i < 0) throw InvalidInput("fiber over " + to_string(f.base_class) + " is not a base class");
    if (seen[static_cast<std::size_t>(i)]) throw InvalidInput("two fibers over " + to_string(f.base_class));
    if (f.step < 0) throw InvalidInput("negative step over " + to_string(f.base_class));
    if (f.residues.empty()) throw InvalidInput("empty fiber over " + to_string(f.base_class));
    if (f.step > 0)
      for (auto& r : f.residues) r = mod_into(r, Scalar(f.step));
    std::sort(f.residues.begin(), f.residues.end());
    if (std::adjacent_find(f.residues.begin(), f.residues.end()) != f.residues.end())
      throw InvalidInput("duplicate residues" + std::string(f.step ? " modulo the step" : "") + " over " +
                         to_string(f.base_class));
    seen[static_cast<std::size_t>(i)] = true;
    fibers_[static_cast<std::size_t>(i)] = std::move(f);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InvalidInput("no fiber over base class " + to_string(base_.root(i)));
}

FormSpace AffinePresentation::total_space() const {
  FormSpace s;
  s.labels = base_.space().labels;
  s.labels.push_back(delta_label_);
  const std::size_t d = base_.dim();
  s.gram.assign(d + 1, Vector(d + 1, Scalar(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s.gram[i][j] = base_.space().gram[i][j];
  return s;
}

bool AffinePresentation::contains(const Vector& v) const {
  if (v.size() != total_dim()) return false;
  int i = base_.find(Vector(v.begin(), v.end() - 1));
  return i >= 0 && fibers_[static_cast<std::size_t>(i)].contains(v.back());
}

bool AffinePresentation::finite() const {
  return std::all_of(fibers_.begin(), fibers_.end(), [](const Fiber& f) { return f.step == 0; });
}

Vector AffinePresentation::lift(std::size_t cls, const Scalar& offset) const {
  Vector v = base_.root(cls);
  v.push_back(offset);
  return v;
}

const FiniteRootSystem& cl_of(const AffinePresentation& p) { return p.base(); }

namespace {

struct Recorder {
  std::vector<Violation>& out;
  std::size_t count = 0;
  void add(const std::string& axiom, std::vector<Vector> w, std::string detail) {
    if (++count > 64) return;
    out.push_back({axiom, std::move(w), std::move(detail)});
  }
};

std::vector<Scalar> negated(const Fiber& f) {
  std::vector<Scalar> r;
  for (const auto& x : f.residues) r.push_back(f.step ? mod_into(-x, Scalar(f.step)) : Scalar(-x));
  std::sort(r.begin(), r.end());
  return r;
}

long max_abs_ceil(const AffinePresentation& p) {
  Scalar m = 0;
  for (const auto& f : p.fibers())
    for (const auto& r : f.residues) m = std::max(m, abs_of(r));
  return to_long(floor_of(m)) + 1;
}

// Multipliers m to sample for a fiber when exact periodic reasoning does not
// apply: a symmetric range plus a far block.
std::vector<long> sample_multipliers(long step, long reach) {
  if (step == 0) return {0};
  std::vector<long> ms;
  for (long m = -reach; m <= reach; ++m) ms.push_back(m);
  return ms;
}

}  // namespace

AxiomReport validate_agrs(const AffinePresentation& p) {
  AxiomReport rep;
  const FiniteRootSystem& b = p.base();
  const std::size_t n = b.size(), d = b.dim();
  Recorder rec0{rep.violations}, rec1{rep.violations}, rec2{rep.violations}, recs{rep.violations};
  bool ax0 = true, ax1 = true, ax2 = true, sym = true;
  if (n == 0) throw InvalidInput("empty presentation");

  if (!radical(b.space()).empty()) {
    ax0 = false;
    rec0.add("0'", {}, "form on the base is degenerate, so the radical is not exactly Q·delta");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (is_zero_vector(b.root(i))) {
      ax0 = false;
      rec0.add("0'", {p.lift(i, p.fiber(i).residues[0])}, "root lies in the radical");
    }
  {
    std::vector<Vector> span;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& r : p.fiber(i).residues) span.push_back(p.lift(i, r));
      if (p.fiber(i).step > 0) {
        Vector dv = zero_vector(d + 1);
        dv[d] = p.fiber(i).step;
        span.push_back(dv);
      }
    }
    if (rank(span) != d + 1) {
      ax0 = false;
      rec0.add("0'", {}, "roots do not span base ⊕ Q·delta");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    int j = b.negative(i);
    if (j < 0 || p.fiber(static_cast<std::size_t>(j)).step != p.fiber(i).step ||
        p.fiber(static_cast<std::size_t>(j)).residues != negated(p.fiber(i))) {
      sym = false;
      recs.add("2'", {p.lift(i, p.fiber(i).residues[0])}, "fiber of -a is not the negated fiber of a");
    }
  }

  const long reach = 4 * max_abs_ceil(p) + 8;
  for (std::size_t i = 0; i < n; ++i) {
    const Fiber& fa = p.fiber(i);
    const Vector& a = b.root(i);
    for (std::size_t j = 0; j < n; ++j) {
      Scalar pr = b.pairing(i, j);
      if (is_zero(pr)) continue;
      const Fiber& fb = p.fiber(j);
      const Vector& bv = b.root(j);
      if (!b.isotropic(i)) {
        Scalar c = 2 * pr / b.norm(i);
        if (!is_integer(c)) {
          ax1 = false;
          rec1.add("1", {p.lift(i, fa.residues[0]), p.lift(j, fb.residues[0])}, "non-integral Cartan number");
          continue;
        }
        const long ci = to_long(c);
        int g = b.find(sub(bv, scale(c, a)));
        for (const auto& ra : fa.residues)
          for (const auto& rb : fb.residues) {
            // offsets rb - c·ra + g0·Z with g0 = gcd(step_b, |c|·step_a)
            const Scalar base_off = rb - c * ra;
            const long g0 = gcd_long(fb.step, std::abs(ci) * fa.step);
            bool ok = g >= 0;
            if (ok) {
              const Fiber& fg = p.fiber(static_cast<std::size_t>(g));
              if (g0 == 0) ok = fg.contains(base_off);
              else if (fg.step == 0) ok = false;
              else {
                const long period = lcm_long(g0, fg.step) / g0;
                for (long t = 0; t < period && ok; ++t) ok = fg.contains(base_off + Scalar(g0 * t));
              }
            }
            if (!ok) {
              ax1 = false;
              rec1.add("1", {p.lift(i, ra), p.lift(j, rb)}, "reflected offset leaves the fiber");
            }
          }
        continue;
      }
      int pl = b.find(add(bv, a)), mi = b.find(sub(bv, a));
      const Fiber* fp = pl >= 0 ? &p.fiber(static_cast<std::size_t>(pl)) : nullptr;
      const Fiber* fm = mi >= 0 ? &p.fiber(static_cast<std::size_t>(mi)) : nullptr;
      bool periodic = (!fp || fp->step > 0) && (!fm || fm->step > 0);
      if (!fp && !fm) periodic = true;
      std::vector<long> ma, mb;
      if (periodic) {
        long t = 1;
        if (fp) t = lcm_long(t, fp->step);
        if (fm) t = lcm_long(t, fm->step);
        for (long m = 0; m < (fa.step ? t : 1); ++m) ma.push_back(m);
        for (long m = 0; m < (fb.step ? t : 1); ++m) mb.push_back(m);
      } else {
        ma = sample_multipliers(fa.step, reach);
        mb = sample_multipliers(fb.step, reach);
      }
      for (const auto& ra : fa.residues)
        for (const auto& rb : fb.residues) {
          bool bad = false;
          Vector wit_a, wit_b;
          std::string why;
          for (long x : ma) {
            for (long y : mb) {
              Scalar xa = ra + Scalar(fa.step * x), yb = rb + Scalar(fb.step * y);
              bool plus = fp && fp->contains(yb + xa), minus = fm && fm->contains(yb - xa);
              if (plus != minus) continue;
              bad = true;
              wit_a = p.lift(i, xa);
              wit_b = p.lift(j, yb);
              why = plus ? "both b+a and b-a are roots" : "neither b+a nor b-a is a root";
              break;
            }
            if (bad) break;
          }
          if (bad) {
            ax2 = false;
            rec2.add("2", {wit_a, wit_b}, why);
          }
        }
    }
  }

  rep.is_weak_grs = rep.is_grs = ax0 && ax1 && ax2 && sym;
  bool any_iso = false;
  for (std::size_t i = 0; i < n; ++i) any_iso = any_iso || b.isotropic(i);
  rep.is_rs = rep.is_grs && !any_iso;
  if (rep.is_grs && any_iso) rep.violations.push_back({"rs", {}, "isotropic roots present"});

  // Reduced: no root c·(a, x) with c != ±1 in R.
  rep.is_reduced = true;
  for (std::size_t i = 0; i < n && rep.is_reduced; ++i)
    for (std::size_t j = 0; j < n && rep.is_reduced; ++j) {
      if (i == j || static_cast<int>(j) == b.negative(i)) continue;
      const Vector& a = b.root(i);
      if (is_zero_vector(a) || is_zero_vector(b.root(j))) continue;
      std::size_t k = 0;
      while (is_zero(a[k])) ++k;
      Scalar c = b.root(j)[k] / a[k];
      if (scale(c, a) != b.root(j)) continue;
      const Fiber& fa = p.fiber(i);
      const Fiber& fj = p.fiber(j);
      // x in fa with c·x in fj; scan one period of c·x modulo fj.step.
      long period = fa.step == 0 ? 1 : (fj.step == 0 ? 1 : fj.step * to_long(Scalar(c.get_den())));
      for (const auto& r : fa.residues) {
        if (fa.step > 0 && fj.step == 0) {
          for (const auto& s : fj.residues)
            if (fa.contains(s / c)) rep.is_reduced = false;
          continue;
        }
        for (long m = 0; m < period; ++m)
          if (fj.contains(c * (r + Scalar(fa.step * m)))) rep.is_reduced = false;
      }
    }
  if (!rep.is_reduced) rep.violations.push_back({"reduced", {}, "some root has a multiple other than its negative"});
  rep.is_irreducible = components(b).size() == 1;
  if (!rep.is_irreducible) rep.violations.push_back({"irreducible", {}, "nonorthogonality graph is disconnected"});
  return rep;
}

AffinePresentation normalize_delta(const AffinePresentation& p) {
  if (p.finite()) return p;
  long g = 0;
  for (const auto& f : p.fibers()) g = gcd_long(g, f.step);
  std::vector<Fiber> fs = p.fibers();
  for (auto& f : fs) {
    f.step /= g;
    for (auto& r : f.residues) r /= g;
  }
  for (const auto& f : fs) {
    if (f.step == 0) continue;
    Fiber probe = f;
    for (auto& r : probe.residues) r = mod_into(r, Scalar(f.step));
    std::sort(probe.residues.begin(), probe.residues.end());
    auto neg_r = negated(probe);
    if (neg_r == probe.residues) continue;
    if (neg_r < probe.residues)
      for (auto& h : fs)
        for (auto& r : h.residues) r = -r;
    break;
  }
  return AffinePresentation(p.base(), fs, p.delta_label());
}

std::vector<long> k_function(const AffinePresentation& p) {
  if (p.finite()) throw NotApplicable("k-function: presentation is finite");
  auto q = normalize_delta(p);
  std::vector<long> k;
  for (const auto& f : q.fibers()) {
    if (f.step == 0 || f.residues.size() != 1)
      throw NotApplicable("k-function: fibers are not single progressions (peculiar or mixed presentation)");
    k.push_back(f.step);
  }
  return k;
}

FiniteRootSystem window(const AffinePresentation& p, long n) {
  std::vector<Vector> roots;
  const Scalar lim(n);
  for (std::size_t i = 0; i < p.base().size(); ++i) {
    const Fiber& f = p.fiber(i);
    for (const auto& r : f.residues) {
      if (f.step == 0) {
        if (abs_of(r) <= lim) roots.push_back(p.lift(i, r));
        continue;
      }
      const Scalar k(f.step);
      Scalar lo = -lim - r, hi = lim - r;
      Scalar mlo = -floor_of(-lo / k), mhi = floor_of(hi / k);
      for (Scalar m = mlo; m <= mhi; m += 1) roots.push_back(p.lift(i, r + k * m));
    }
  }
  return FiniteRootSystem(p.total_space(), roots);
}

namespace {

struct Pattern {
  long step;
  Scalar residue;
};

AffinePresentation from_roles(const CatalogSystem& c, const std::map<std::string, Pattern>& pat) {
  std::vector<Fiber> fs;
  for (std::size_t i = 0; i < c.system.size(); ++i) {
    auto it = pat.find(c.roles[i]);
    if (it == pat.end()) throw InvalidInput("no fiber data for role " + c.roles[i]);
    // residues of -a are the negation of those of a
    const Vector& v = c.system.root(i);
    bool positive = v > neg(v);
    Scalar r = positive ? it->second.residue : Scalar(-it->second.residue);
    fs.push_back({v, it->second.step, {r}});
  }
  return AffinePresentation(c.system, fs);
}

Pattern P(long k, Scalar r = 0) { return {k, std::move(r)}; }

}  // namespace

AffinePresentation build_untwisted(const TypeTag& raw) {
  TypeTag t = canonical(raw);
  if (t.affine()) throw InvalidInput("build_untwisted expects a finite base tag");
  if (t.family == Family::Cmn || t.family == Family::BCmn || t.family == Family::ATilde)
    throw InvalidInput(to_string(t) + " has no untwisted affinization");
  auto c = finite_cached(t);
  std::vector<Fiber> fs;
  for (const auto& v : c->system.roots()) fs.push_back({v, 1, {Scalar(0)}});
  return AffinePresentation(c->system, fs);
}

AffinePresentation build_twisted(const TypeTag& raw) {
  TypeTag t = canonical(raw);
  if (t.twist < 2) throw InvalidInput("build_twisted expects a twisted tag, got " + to_string(t));
  TypeTag base = base_of(t);
  const Scalar half(1, 2);
  std::map<std::string, Pattern> pat;
  switch (t.family) {
    case Family::D:
      if (t.twist == 3) pat = {{"short", P(1)}, {"long", P(3)}};
      else pat = {{"short", P(1)}, {"long", P(2)}};
      break;
    case Family::E: pat = {{"short", P(1)}, {"long", P(2)}}; break;
    case Family::A:
      if (t.n % 2 == 1) pat = {{"short", P(1)}, {"long", P(2)}};
      else pat = {{"d", P(1)}, {"dd", P(1)}, {"2d", P(2, 1)}};
      break;
    case Family::CSuper: pat = {{"d", P(1)}, {"dd", P(2)}, {"2d", P(2)}}; break;
    case Family::DSuper:
      pat = {{"e", P(1)}, {"d", P(1)}, {"ee", P(2)}, {"dd", P(2)}, {"2d", P(2)}, {"ed", P(2)}};
      break;
    case Family::ASuper:
      if (t.twist == 4) {
        if (t.m == 0) pat = {{"d", P(1)}, {"dd", P(2)}, {"2d", P(4, 2)}};
        else pat = {{"e", P(1)}, {"d", P(1)}, {"ee", P(2)}, {"dd", P(2)}, {"ed", P(2, 1)}, {"2e", P(4)}, {"2d", P(4)}};
      } else if (t.m == 0) {
        pat = {{"d", P(1)}, {"dd", P(1)}, {"2d", P(2)}};
      } else if (t.m % 2 == 0) {
        // eps half reduced, delta half not
        pat = {{"e", P(1, half)}, {"d", P(1)}, {"ee", P(1)}, {"dd", P(1)}, {"ed", P(1, half)}, {"2e", P(2)}, {"2d", P(2)}};
      } else {
        pat = {{"ee", P(1)}, {"dd", P(1)}, {"ed", P(1, half)}, {"2e", P(2)}, {"2d", P(2)}};
      }
      break;
    default: throw InvalidInput("build_twisted: unsupported tag " + to_string(t));
  }
  return from_roles(*finite_cached(base), pat);
}

namespace {

// Roots u_i - u_j of ~A(n,n) over u = (e_1..e_{n+1}, d_1..d_{n+1}), folded into
// the coordinates of make_finite(A(n,n)), together with f(u) = (u, Σe)/(n+1).
struct FoldedRoot {
  Vector folded;
  Scalar f;
};

std::vector<FoldedRoot> folded_ann(int n) {
  const int total = 2 * n + 2;
  const std::size_t nb = static_cast<std::size_t>(total - 1);
  std::vector<int> sign(total);
  for (int i = 0; i < total; ++i) sign[i] = i <= n ? 1 : -1;
  Vector c(nb);
  int acc = 0;
  for (std::size_t k = 0; k < nb; ++k) c[k] = acc += sign[k];
  std::vector<FoldedRoot> out;
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      if (i == j) continue;
      Vector v(nb, Scalar(0));
      for (int k = std::min(i, j); k < std::max(i, j); ++k) v[static_cast<std::size_t>(k)] = i < j ? 1 : -1;
      Vector w = sub(v, scale(v[nb - 1], c));
      w.pop_back();
      Scalar f = Scalar((i <= n ? 1 : 0) - (j <= n ? 1 : 0), 1) / (n + 1);
      out.push_back({w, f});
    }
  return out;
}

AffinePresentation folded_presentation(int n, long step, const std::function<Scalar(const Scalar&)>& offset,
                                       const std::string& delta_label) {
  auto base = finite_cached(TypeTag{Family::ASuper, n, n});
  std::map<Vector, std::set<Scalar>> res;
  for (const auto& r : folded_ann(n)) {
    Scalar x = offset(r.f);
    if (step > 0) x = mod_into(x, Scalar(step));
    res[r.folded].insert(x);
  }
  std::vector<Fiber> fs;
  for (auto& [v, s] : res) fs.push_back({v, step, std::vector<Scalar>(s.begin(), s.end())});
  return AffinePresentation(base->system, fs, delta_label);
}

}  // namespace

AffinePresentation build_quotient(int n, const Scalar& q) {
  if (n < 1) throw InvalidInput("build_quotient needs n >= 1");
  // [w + t·delta] -> (fold(w), t - q·f(w)); Id + q·delta maps to zero.
  // Shifting q by an integer gives an isomorphic quotient, so q is reduced first.
  const Scalar q0 = mod_into(q, 1);
  return folded_presentation(n, 1, [&](const Scalar& f) { return Scalar(-q0 * f); }, "delta");
}

AffinePresentation build_finite_Ann(int n) {
  if (n < 1) throw InvalidInput("build_finite_Ann needs n >= 1");
  // V' = span(base) ⊕ Q·Id through the section f; Id plays delta.
  return folded_presentation(n, 0, [](const Scalar& f) { return f; }, "Id");
}

AffinePresentation build_peculiar(const Scalar& q) {
  auto c = finite_cached(TypeTag{Family::Cmn, 1, 1});
  const Vector e2 = {2, 0}, d2 = {0, 2}, pp = {1, 1}, pm = {1, -1};
  std::vector<Fiber> fs = {
      {e2, 1, {Scalar(0)}},         {neg(e2), 1, {Scalar(0)}},
      {d2, 1, {q}},                 {neg(d2), 1, {Scalar(-q)}},
      {pp, 1, {Scalar(0), q}},      {neg(pp), 1, {Scalar(0), Scalar(-q)}},
      {pm, 1, {Scalar(0), Scalar(-q)}}, {neg(pm), 1, {Scalar(0), q}},
  };
  for (auto& f : fs) {
    for (auto& r : f.residues) r = mod_into(r, 1);
    std::sort(f.residues.begin(), f.residues.end());
    f.residues.erase(std::unique(f.residues.begin(), f.residues.end()), f.residues.end());
  }
  return AffinePresentation(c->system, fs);
}

AffinePresentation make_affine(const TypeTag& raw) {
  TypeTag t = canonical(raw);
  if (t.family == Family::ATilde) return build_finite_Ann(t.n);
  if (t.family == Family::Quotient) return build_quotient(t.n, *t.q);
  if (t.family == Family::Peculiar) return build_peculiar(*t.q);
  if (t.twist == 1) return build_untwisted(base_of(t));
  if (t.twist > 1) return build_twisted(t);
  throw InvalidInput(to_string(t) + " is not an affine tag");
}

AffinePresentation presentation_from_explicit(const FiniteRootSystem& r) {
  auto q = build_quotient_map(r.space());
  if (r.dim() - q.target.dim() != 1) throw InvalidInput("form radical is not one-dimensional");
  Vector rad = radical(r.space())[0];
  // Section: target coordinates placed back on the kept source coordinates.
  std::map<Vector, std::set<Scalar>> res;
  for (const auto& v : r.roots()) {
    Vector cls = q.apply(v);
    Vector lifted = zero_vector(r.dim());
    for (std::size_t t = 0; t < cls.size(); ++t) lifted[q.kept[t]] = cls[t];
    Vector diff = sub(v, lifted);
    std::size_t k = 0;
    while (k < diff.size() && is_zero(rad[k])) ++k;
    res[cls].insert(diff[k] / rad[k]);
  }
  std::vector<Vector> classes;
  std::vector<Fiber> fs;
  for (auto& [c, s] : res) {
    classes.push_back(c);
    fs.push_back({c, 0, std::vector<Scalar>(s.begin(), s.end())});
  }
  return AffinePresentation(FiniteRootSystem(q.target, classes), fs, "k");
}

AffinePresentation direct_sum(const std::vector<SumPart>& parts) {
  std::size_t d = 0;
  for (const auto& p : parts) d += p.affine ? p.affine->base().dim() : p.finite->dim();
  FormSpace s;
  s.gram.assign(d, Vector(d, Scalar(0)));
  std::vector<Vector> classes;
  std::vector<Fiber> fs;
  std::size_t off = 0;
  int idx = 0;
  for (const auto& p : parts) {
    const FiniteRootSystem& b = p.affine ? p.affine->base() : *p.finite;
    ++idx;
    for (std::size_t i = 0; i < b.dim(); ++i) {
      s.labels.push_back(b.space().labels[i] + "_" + std::to_string(idx));
      for (std::size_t j = 0; j < b.dim(); ++j) s.gram[off + i][off + j] = b.space().gram[i][j];
    }
    for (std::size_t r = 0; r < b.size(); ++r) {
      Vector v = zero_vector(d);
      for (std::size_t i = 0; i < b.dim(); ++i) v[off + i] = b.root(r)[i];
      classes.push_back(v);
      if (p.affine) fs.push_back({v, p.affine->fiber(r).step, p.affine->fiber(r).residues});
      else fs.push_back({v, 0, {Scalar(0)}});
    }
    off += b.dim();
  }
  return AffinePresentation(FiniteRootSystem(s, classes), fs);
}

AgrsDecomposition decompose_agrs(const AffinePresentation& p) {
  AgrsDecomposition out;
  const FiniteRootSystem& b = p.base();
  for (const auto& comp : components(b)) {
    std::vector<Vector> vs;
    for (auto i : comp) vs.push_back(b.root(i));
    auto sub = restrict_to_span(b.space(), vs);
    std::vector<Vector> lifts;
    for (auto i : comp)
      for (const auto& r : p.fiber(i).residues) lifts.push_back(p.lift(i, r));
    bool has_delta = rank(lifts) > sub.basis.size();
    for (auto i : comp) has_delta = has_delta || p.fiber(i).step > 0;
    if (has_delta) {
      std::vector<Fiber> fs;
      for (std::size_t t = 0; t < comp.size(); ++t)
        fs.push_back({sub.coords[t], p.fiber(comp[t]).step, p.fiber(comp[t]).residues});
      out.affine.push_back({AffinePresentation(FiniteRootSystem(sub.space, sub.coords), fs, p.delta_label()),
                            sub.basis, comp});
      continue;
    }
    // No delta in the span: the lifts form a GRS on their own span.
    auto lsub = restrict_to_span(p.total_space(), lifts);
    out.finite.push_back({FiniteRootSystem(lsub.space, lsub.coords), lsub.basis, comp});
  }
  return out;
}

}  // namespace grs
