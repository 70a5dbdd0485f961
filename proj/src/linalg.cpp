#include "grs/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& x : v) {
    mix(mpz_get_ui(x.get_num_mpz_t()));
    mix(static_cast<std::size_t>(sgn(x) + 1));
    mix(mpz_get_ui(x.get_den_mpz_t()));
  }
  return h;
}

Scalar FormSpace::form(const Vector& x, const Vector& y) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    Scalar row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j]) && !is_zero(gram[i][j])) row += gram[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

Vector FormSpace::apply(const Vector& x) const { return multiply(gram, x); }

void check_form_space(const FormSpace& s) {
  const std::size_t n = s.labels.size();
  if (s.gram.size() != n) throw InvalidInput("gram has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.gram[i].size() != n) throw InvalidInput("gram row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < i; ++j)
      if (s.gram[i][j] != s.gram[j][i])
        throw InvalidInput("gram not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vector neg(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const Vector& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return is_zero(x); });
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Vector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c(a.size(), Vector(cols, Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
  Vector r(a.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(x[j])) r[i] += a[i][j] * x[j];
  return r;
}

std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Scalar inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][c])) continue;
      Scalar f = a[r][c];
      for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  Matrix a = rows;
  return rref(a, a[0].size()).size();
}

std::vector<Vector> nullspace(const Matrix& a, std::size_t cols) {
  Matrix m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> radical(const FormSpace& s) { return nullspace(s.gram, s.dim()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Matrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix m = a;
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Scalar(0));
    m[i][n + i] = 1;
  }
  auto pivots = rref(m, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::vector<std::size_t> greedy_basis(const std::vector<Vector>& vectors) {
  std::vector<std::size_t> chosen;
  if (vectors.empty()) return chosen;
  const std::size_t n = vectors[0].size();
  Matrix echelon;  // kept in reduced form
  std::vector<std::size_t> pivots;
  for (std::size_t idx = 0; idx < vectors.size() && echelon.size() < n; ++idx) {
    Vector v = vectors[idx];
    for (std::size_t r = 0; r < echelon.size(); ++r)
      if (!is_zero(v[pivots[r]])) {
        Scalar f = v[pivots[r]];
        for (std::size_t j = 0; j < n; ++j) v[j] -= f * echelon[r][j];
      }
    std::size_t p = 0;
    while (p < n && is_zero(v[p])) ++p;
    if (p == n) continue;
    Scalar inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < echelon.size(); ++r)
      if (!is_zero(echelon[r][p])) {
        Scalar f = echelon[r][p];
        for (std::size_t j = 0; j < n; ++j) echelon[r][j] -= f * v[j];
      }
    echelon.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

QuotientMap build_quotient_map(const FormSpace& s) {
  const std::size_t n = s.dim();
  Matrix rad = radical(s);
  auto pivots = rref(rad, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  QuotientMap q;
  q.source = s;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) keep.push_back(j);
  // x ↦ x − Σ x_p r_p, restricted to non-pivot coordinates.
  q.matrix.assign(keep.size(), Vector(n, Scalar(0)));
  for (std::size_t t = 0; t < keep.size(); ++t) {
    q.matrix[t][keep[t]] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) q.matrix[t][pivots[r]] -= rad[r][keep[t]];
  }
  for (auto j : keep) q.target.labels.push_back(s.labels[j]);
  q.kept = keep;
  q.target.gram.assign(keep.size(), Vector(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) q.target.gram[a][b] = s.gram[keep[a]][keep[b]];
  return q;
}

SpanRestriction restrict_to_span(const FormSpace& ambient, const std::vector<Vector>& vectors) {
  SpanRestriction out;
  auto idx = greedy_basis(vectors);
  for (auto i : idx) out.basis.push_back(vectors[i]);
  const std::size_t k = out.basis.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::string label = "v" + std::to_string(i + 1);
    for (std::size_t j = 0; j < ambient.dim(); ++j)
      if (out.basis[i] == unit_vector(ambient.dim(), j)) label = ambient.labels[j];
    out.space.labels.push_back(label);
  }
  out.space.gram.assign(k, Vector(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out.space.gram[a][b] = ambient.form(out.basis[a], out.basis[b]);
  Matrix cols = transpose(out.basis);  // ambient.dim × k
  for (const auto& v : vectors) {
    auto c = solve(cols, v);
    out.coords.push_back(*c);
  }
  return out;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace grs
