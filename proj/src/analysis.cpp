#include "grs/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace grs {

namespace {

using Word = std::uint64_t;

struct Gf2Row {
  std::vector<Word> bits;
  int rhs = 0;
  bool get(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { bits[i / 64] ^= Word(1) << (i % 64); }
  void add(const Gf2Row& o) {
    for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
    rhs ^= o.rhs;
  }
};

ParityResult solve_parity(const FiniteRootSystem& r) {
  const std::size_t n = r.size(), words = (n + 63) / 64;
  std::vector<Gf2Row> rows;
  auto row = [&] { return Gf2Row{std::vector<Word>(words, 0), 0}; };
  for (std::size_t i = 0; i < n; ++i) {
    if (r.isotropic(i)) {
      Gf2Row x = row();
      x.flip(i);
      x.rhs = 1;
      rows.push_back(x);
    }
    for (std::size_t j = i; j < n; ++j) {
      int k = r.find(add(r.root(i), r.root(j)));
      if (k < 0) continue;
      Gf2Row x = row();
      x.flip(i);
      x.flip(j);  // i == j cancels: f(a+a) = 0
      x.flip(static_cast<std::size_t>(k));
      rows.push_back(x);
    }
  }
  // reduced row echelon form
  std::vector<int> pivot_of_col(n, -1);
  std::size_t rank_rows = 0;
  for (std::size_t c = 0; c < n && rank_rows < rows.size(); ++c) {
    std::size_t p = rank_rows;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank_rows]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != rank_rows && rows[q].get(c)) rows[q].add(rows[rank_rows]);
    pivot_of_col[c] = static_cast<int>(rank_rows);
    ++rank_rows;
  }
  ParityResult out;
  out.roots = r.roots();
  for (std::size_t q = rank_rows; q < rows.size(); ++q)
    if (rows[q].rhs) {
      out.enumerated = true;
      return out;  // inconsistent
    }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  // value from free assignment: pivot variable = rhs + sum of its free entries
  auto assemble = [&](const std::vector<int>& free_vals, bool homogeneous) {
    std::vector<int> f(n, 0);
    for (std::size_t t = 0; t < free_cols.size(); ++t) f[free_cols[t]] = free_vals[t];
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of_col[c] < 0) continue;
      const Gf2Row& x = rows[static_cast<std::size_t>(pivot_of_col[c])];
      int v = homogeneous ? 0 : x.rhs;
      for (std::size_t t = 0; t < free_cols.size(); ++t)
        if (free_vals[t] && x.get(free_cols[t])) v ^= 1;
      f[c] = v;
    }
    return f;
  };
  out.particular = assemble(std::vector<int>(free_cols.size(), 0), false);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::vector<int> e(free_cols.size(), 0);
    e[t] = 1;
    out.kernel_basis.push_back(assemble(e, true));
  }
  out.enumerated = free_cols.size() <= kParityEnumerationLimit;
  if (out.enumerated) {
    const std::size_t total = std::size_t(1) << free_cols.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
      std::vector<int> fv(free_cols.size());
      for (std::size_t t = 0; t < free_cols.size(); ++t) fv[t] = static_cast<int>((mask >> t) & 1U);
      out.functions.push_back(assemble(fv, false));
    }
    std::sort(out.functions.begin(), out.functions.end());
  }
  return out;
}

}  // namespace

ParityResult parity_functions(const FiniteRootSystem& r) { return solve_parity(r); }

long parity_window(const AffinePresentation& p) {
  long step = 0;
  Scalar res = 0;
  for (const auto& f : p.fibers()) {
    step = std::max(step, f.step);
    for (const auto& x : f.residues) res = std::max(res, abs_of(x));
  }
  return 2 * (step + to_long(-floor_of(-res)));
}

ParityResult parity_functions(const AffinePresentation& p) { return solve_parity(window(p, parity_window(p))); }

bool is_parity_function(const FiniteRootSystem& r, const std::vector<int>& f) {
  if (f.size() != r.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.isotropic(i) && f[i] != 1) return false;
    for (std::size_t j = 0; j < r.size(); ++j) {
      int k = r.find(add(r.root(i), r.root(j)));
      if (k >= 0 && ((f[i] + f[j]) & 1) != f[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

std::vector<int> default_parity(const FiniteRootSystem& r) {
  std::vector<int> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) f[i] = r.isotropic(i) || r.contains(scale(2, r.root(i)));
  return f;
}

std::vector<int> default_parity(const AffinePresentation& p, const FiniteRootSystem& win) {
  std::vector<int> f(win.size());
  for (std::size_t i = 0; i < win.size(); ++i) f[i] = win.isotropic(i) || p.contains(scale(2, win.root(i)));
  return f;
}

namespace {

using Membership = std::function<bool(const Vector&)>;

SubsystemResult subsystem_impl(const std::vector<Vector>& s_in, const FormSpace& space, const Membership& in_r) {
  for (const auto& v : s_in)
    if (!in_r(v)) throw InvalidInput("subsystem: " + to_string(v) + " is not a root");
  FiniteRootSystem sset(space, s_in);  // sorted, deduplicated
  const std::vector<Vector>& s = sset.roots();
  SubsystemResult out;
  if (s.empty()) {
    out.label = "not a system";
    return out;
  }
  SpanRestriction sp = restrict_to_span(space, s);
  FiniteRootSystem subsys(sp.space, sp.coords);
  const std::size_t rad = radical(sp.space).size();
  if (rad == 0) {
    out.report = check_axioms(subsys);
    out.is_system = out.report.is_weak_grs;
    if (out.is_system)
      for (const auto& c : decompose(subsys)) out.tags.push_back(classify_finite(c.system));
  } else if (rad == 1) {
    AffinePresentation pr = presentation_from_explicit(subsys);
    out.report = validate_agrs(pr);
    out.is_system = out.report.is_weak_grs;
    if (out.is_system) {
      auto d = decompose_agrs(pr);
      for (const auto& c : d.affine) out.tags.push_back(classify_affine(c.system));
      for (const auto& c : d.finite) out.tags.push_back(classify_finite(c.system));
    }
  } else {
    out.report.violations.push_back({"0'", {}, "form on span(S) has a radical of dimension " + std::to_string(rad)});
  }
  if (out.is_system) {
    std::vector<std::string> names;
    for (const auto& t : out.tags) names.push_back(to_string(t));
    std::sort(names.begin(), names.end());
    for (const auto& x : names) out.label += (out.label.empty() ? "" : " + ") + x;
  } else {
    out.label = "not a system";
  }
  // reflections of the ambient system applied inside S
  for (const auto& a : s) {
    Scalar na = space.form(a, a);
    for (const auto& b : s) {
      Scalar p = space.form(a, b);
      if (is_zero(p) || b == a || b == neg(a)) continue;
      std::optional<Vector> img;
      if (!is_zero(na)) {
        img = sub(b, scale(2 * p / na, a));
      } else {
        Vector pl = add(b, a), mi = sub(b, a);
        bool hp = in_r(pl), hm = in_r(mi);
        if (hp != hm) img = hp ? pl : mi;
      }
      if (img && !sset.contains(*img) && out.escapes.size() < 64) out.escapes.push_back({a, b, *img});
    }
  }
  return out;
}

}  // namespace

SubsystemResult is_subsystem(const std::vector<Vector>& s, const FiniteRootSystem& r) {
  return subsystem_impl(s, r.space(), [&](const Vector& v) { return r.contains(v); });
}

SubsystemResult is_subsystem(const std::vector<Vector>& s, const AffinePresentation& p) {
  return subsystem_impl(s, p.total_space(), [&](const Vector& v) { return p.contains(v); });
}

namespace {

std::string num(int x) { return std::to_string(x); }

bool no_isotropic_affine(const TypeTag& t) {
  switch (t.family) {
    case Family::B0: return t.twist == 1;
    case Family::CSuper: return t.twist == 2;
    case Family::A: return t.twist == 2 && t.n % 2 == 0;
    case Family::ASuper: return t.m == 0 && (t.twist == 4 || (t.twist == 2 && t.n % 2 == 1));
    default: return false;
  }
}

std::string finite_lie(const TypeTag& t) {
  const int m = t.m, n = t.n;
  switch (t.family) {
    case Family::A: return "sl(" + num(n + 1) + ")";
    case Family::B: return "so(" + num(2 * n + 1) + ")";
    case Family::C: return "sp(" + num(2 * n) + ")";
    case Family::D: return "so(" + num(2 * n) + ")";
    case Family::E: return "e" + num(n);
    case Family::F: return "f4";
    case Family::G: return "g2";
    case Family::B0: return "osp(1|" + num(2 * n) + ")";
    case Family::ASuper:
      return (m == n ? "psl(" : "sl(") + num(m + 1) + "|" + num(n + 1) + ")";
    case Family::BSuper: return "osp(" + num(2 * m + 1) + "|" + num(2 * n) + ")";
    case Family::CSuper: return "osp(2|" + num(2 * n - 2) + ")";
    case Family::DSuper: return "osp(" + num(2 * m) + "|" + num(2 * n) + ")";
    case Family::D21: return "D(2,1;" + to_string(*t.lambda) + ")";
    case Family::G3: return "G(3)";
    case Family::F4Super: return "F(4)";
    case Family::Cmn:
      if (m == 1 && n == 1) return "psl(2|2)";
      return "none known";
    case Family::BCmn: return "none known";
    case Family::ATilde: return "gl(" + num(n + 1) + "|" + num(n + 1) + ")";
    default: return "?";
  }
}

}  // namespace

Correspondence correspondence(const TypeTag& raw) {
  TypeTag t = canonical(raw);
  Correspondence c{t, "", ""};
  if (t.family == Family::Peculiar) {
    c.lie_structure = "rational quotient of gl(2|2)^(1)";
    c.notes = "Infinite AGRS with cl(R) = A(n,n)";
    return c;
  }
  if (t.family == Family::Quotient) {
    c.lie_structure = "quotient of gl(" + num(t.n + 1) + "|" + num(t.n + 1) + ")^(1)";
    c.notes = "Infinite AGRS with cl(R) = A(n,n)";
    return c;
  }
  if (t.family == Family::ATilde) {
    c.lie_structure = finite_lie(t);
    c.notes = "Finite AGRS";
    return c;
  }
  if (!t.affine()) {
    c.lie_structure = finite_lie(t);
    auto sys = finite_cached(t);
    auto rep = check_axioms(sys->system);
    if (rep.is_rs) c.notes = "Euclidean (RS)";
    else if (rep.is_grs) c.notes = "GRS (not RS)";
    else c.notes = "weak GRS (not GRS)";
    return c;
  }
  if (no_isotropic_affine(t)) {
    c.lie_structure = "symmetrizable affine Kac-Moody superalgebra " + to_string(t) + " (no isotropic roots)";
    c.notes = "Non-isotropic (ARS), non-reduced";
    return c;
  }
  switch (t.family) {
    case Family::A: case Family::B: case Family::C: case Family::D: case Family::E: case Family::F:
    case Family::G:
      c.lie_structure = "affine Kac-Moody algebra " + to_string(t);
      c.notes = "Non-isotropic (ARS), reduced";
      return c;
    default:
      c.lie_structure = "symmetrizable affine Kac-Moody superalgebra " + to_string(t);
      c.notes = "AGRS with cl(R) not A(n,n)";
      return c;
  }
}

}  // namespace grs
