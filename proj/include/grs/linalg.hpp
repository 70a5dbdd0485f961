#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grs/scalar.hpp"

namespace grs {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

struct FormSpace {
  std::vector<std::string> labels;
  Matrix gram;

  std::size_t dim() const { return labels.size(); }
  Scalar form(const Vector& x, const Vector& y) const;
  Vector apply(const Vector& x) const;  // gram · x
};

// Throws InvalidInput on shape mismatch or an asymmetric gram.
void check_form_space(const FormSpace& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& a);
Vector neg(const Vector& a);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero_vector(const Vector& a);

Matrix identity_matrix(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);

// Reduced row echelon form in place; returns pivot columns. Pivot rule: first
// nonzero column, smallest row index.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols);

std::size_t rank(const std::vector<Vector>& rows);
std::vector<Vector> nullspace(const Matrix& a, std::size_t cols);
std::vector<Vector> radical(const FormSpace& s);

// Solution of a·x = b if one exists (free variables set to zero).
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Inverse of a square nonsingular matrix, or nullopt.
std::optional<Matrix> inverse(const Matrix& a);

// Greedy basis of span(vectors): indices of the chosen vectors, in order.
std::vector<std::size_t> greedy_basis(const std::vector<Vector>& vectors);

struct QuotientMap {
  FormSpace source;
  FormSpace target;
  Matrix matrix;  // target.dim × source.dim
  std::vector<std::size_t> kept;  // source coordinate behind each target coordinate

  Vector apply(const Vector& x) const { return multiply(matrix, x); }
};

// Kills the radical by eliminating its pivot coordinates. The target basis is
// the remaining source basis vectors, so their labels carry over.
QuotientMap build_quotient_map(const FormSpace& s);

// The subspace spanned by `vectors`: its gram in a greedy basis taken from the
// vectors themselves, and coordinates of each input vector in that basis.
struct SpanRestriction {
  FormSpace space;
  std::vector<Vector> basis;   // in ambient coordinates
  std::vector<Vector> coords;  // one per input vector
};
SpanRestriction restrict_to_span(const FormSpace& ambient, const std::vector<Vector>& vectors);

std::string to_string(const Vector& v);

}  // namespace grs
