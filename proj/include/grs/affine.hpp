#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "grs/catalog.hpp"
#include "grs/finsys.hpp"
#include "grs/tag.hpp"

namespace grs {

struct NotApplicable : std::logic_error {
  using std::logic_error::logic_error;
};

// The offsets {r + step·Z : r in residues} (step > 0) or the finite list
// `residues` (step = 0) along delta above one class of cl(R).
struct Fiber {
  Vector base_class;
  long step = 0;
  std::vector<Scalar> residues;

  bool contains(const Scalar& offset) const;
};

// Roots live in span(base) ⊕ Q·delta; the last total coordinate is the
// delta offset. Fibers are aligned with base().roots() after construction,
// residues reduced into [0, step) and sorted.
class AffinePresentation {
 public:
  AffinePresentation() = default;
  // Throws InvalidInput for unknown, repeated or missing classes, negative
  // steps, empty residue lists and residues repeated modulo the step.
  AffinePresentation(FiniteRootSystem base, std::vector<Fiber> fibers, std::string delta_label = "delta");

  const FiniteRootSystem& base() const { return base_; }
  const std::vector<Fiber>& fibers() const { return fibers_; }
  const Fiber& fiber(std::size_t cls) const { return fibers_[cls]; }
  const std::string& delta_label() const { return delta_label_; }

  FormSpace total_space() const;
  std::size_t total_dim() const { return base_.dim() + 1; }
  bool contains(const Vector& total) const;
  bool finite() const;  // all steps zero
  Vector lift(std::size_t cls, const Scalar& offset) const;

 private:
  FiniteRootSystem base_;
  std::vector<Fiber> fibers_;
  std::string delta_label_ = "delta";
};

AxiomReport validate_agrs(const AffinePresentation& p);

const FiniteRootSystem& cl_of(const AffinePresentation& p);

// Steps after normalize_delta, aligned with the base roots. Throws
// NotApplicable for finite presentations and for fibers that are unions of
// several progressions.
std::vector<long> k_function(const AffinePresentation& p);

// delta -> gcd(steps)·delta, then the sign making the first non-symmetric
// residue set (in class order) lexicographically least.
AffinePresentation normalize_delta(const AffinePresentation& p);

// All roots with |offset| <= n, in the total space.
FiniteRootSystem window(const AffinePresentation& p, long n);

AffinePresentation build_untwisted(const TypeTag& base_tag);
AffinePresentation build_twisted(const TypeTag& tag);
// Quotient of ~A(n,n)^(1) by Id + q·delta, over the base A(n,n) written in
// the folded simple-root coordinates.
AffinePresentation build_quotient(int n, const Scalar& q);
AffinePresentation build_finite_Ann(int n);
AffinePresentation build_peculiar(const Scalar& q);  // C(1,1)^q on {e1, d1, delta}

// Dispatch on a canonical affine tag (or ~A(n,n)).
AffinePresentation make_affine(const TypeTag& tag);

// Explicit finite system whose form has a one-dimensional radical, as a
// presentation with steps 0. Throws InvalidInput otherwise.
AffinePresentation presentation_from_explicit(const FiniteRootSystem& r);

// Orthogonal union. Finite parts enter with step 0 and offset 0.
struct SumPart {
  const AffinePresentation* affine = nullptr;
  const FiniteRootSystem* finite = nullptr;
};
AffinePresentation direct_sum(const std::vector<SumPart>& parts);

struct AgrsComponent {
  AffinePresentation system;
  std::vector<Vector> basis;         // base basis of the component, parent base coordinates
  std::vector<std::size_t> classes;  // parent class indices
};
struct GrsComponent {
  FiniteRootSystem system;
  std::vector<Vector> basis;  // total-space coordinates
  std::vector<std::size_t> classes;
};
struct AgrsDecomposition {
  std::vector<AgrsComponent> affine;
  std::vector<GrsComponent> finite;
};
AgrsDecomposition decompose_agrs(const AffinePresentation& p);

}  // namespace grs
