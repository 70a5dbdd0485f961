#pragma once

#include <optional>

#include "grs/affine.hpp"
#include "grs/iso.hpp"

namespace grs {

// Linear map of total spaces (base coordinates, then the delta offset).
struct AffineIsoWitness {
  Matrix matrix;
  Scalar scale;
};

// Fiber-level isomorphism search. Infinite presentations: base isomorphisms
// respecting steps, delta -> ±delta after gcd normalization, and a shift
// functional solved over one period. All-step-0 presentations are compared as
// explicit finite sets. Mixed presentations throw InvalidInput.
std::optional<AffineIsoWitness> isomorphic_affine(const AffinePresentation& a, const AffinePresentation& b,
                                                  std::optional<Scalar> scale = std::nullopt);

// Exact: form scaling on the total spaces, and every fiber of a maps onto a
// fiber of b bijectively.
bool verify_affine_witness(const AffinePresentation& a, const AffinePresentation& b, const AffineIsoWitness& w);

// Every root of window(a, n) lands in b.
bool verify_on_window(const AffinePresentation& a, const AffinePresentation& b, const AffineIsoWitness& w, long n);

}  // namespace grs
