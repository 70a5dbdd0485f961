#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "grs/linalg.hpp"

namespace grs {

struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Roots are stored sorted lexicographically; indices refer to that order.
class FiniteRootSystem {
 public:
  FiniteRootSystem() = default;
  FiniteRootSystem(FormSpace space, std::vector<Vector> roots);

  const FormSpace& space() const { return space_; }
  const std::vector<Vector>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  std::size_t dim() const { return space_.dim(); }
  const Vector& root(std::size_t i) const { return roots_[i]; }

  int find(const Vector& v) const;  // -1 when absent
  bool contains(const Vector& v) const { return find(v) >= 0; }
  int negative(std::size_t i) const { return neg_[i]; }  // -1 when −α ∉ R

  const Scalar& norm(std::size_t i) const { return norms_[i]; }
  bool isotropic(std::size_t i) const { return is_zero(norms_[i]); }
  // (α_i, α_j), computed on demand.
  Scalar pairing(std::size_t i, std::size_t j) const;
  Scalar pairing(std::size_t i, const Vector& v) const { return dot(gram_roots_[i], v); }

 private:
  FormSpace space_;
  std::vector<Vector> roots_;
  std::vector<Vector> gram_roots_;  // gram · α
  std::vector<Scalar> norms_;
  std::vector<int> neg_;
  std::unordered_map<Vector, int, VectorHash> index_;
};

struct Violation {
  std::string axiom;  // "0", "1", "2", "2'", "0'"
  std::vector<Vector> witness;
  std::string detail;
};

// For affine presentations the same flags are reused: is_weak_grs and is_grs
// mean "satisfies the AGRS axioms", is_rs additionally "no isotropic roots".
struct AxiomReport {
  bool is_rs = false;
  bool is_grs = false;
  bool is_weak_grs = false;
  bool is_reduced = false;
  bool is_irreducible = false;
  std::vector<Violation> violations;

  bool has(const std::string& axiom) const;
};

// Throws InvalidInput when R is empty.
AxiomReport check_axioms(const FiniteRootSystem& r);

// Euclidean reflection of v in a non-isotropic α.
Vector reflect_vector(const FormSpace& s, const Vector& alpha, const Vector& v);

// r_α(β) for α, β ∈ R. Throws InvalidInput when α or β is not a root and
// AmbiguityError when α is isotropic and the candidate is not unique.
Vector reflect(const FiniteRootSystem& r, const Vector& alpha, const Vector& beta);

// Permutation of root indices induced by r_α when it is defined on all of R.
std::optional<std::vector<int>> reflection_permutation(const FiniteRootSystem& r, std::size_t alpha);

std::vector<std::vector<Vector>> weyl_orbits(const FiniteRootSystem& r);

std::vector<Vector> generate(const FiniteRootSystem& ambient, const std::vector<Vector>& s);

struct Component {
  FiniteRootSystem system;   // in coordinates of `basis`
  std::vector<Vector> basis;  // in parent coordinates
  std::vector<Vector> roots;  // the component's roots in parent coordinates
};

std::vector<Component> decompose(const FiniteRootSystem& r);

// Connected components of the nonorthogonality graph, as sorted index lists.
std::vector<std::vector<std::size_t>> components(const FiniteRootSystem& r);

// nullopt is the "undefined" outcome. Throws std::domain_error if (α,β)=0.
std::optional<long> t_coeff(const FiniteRootSystem& cl, const Vector& alpha, const Vector& beta);

}  // namespace grs
