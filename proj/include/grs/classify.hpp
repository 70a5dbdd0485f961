#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "grs/affiso.hpp"
#include "grs/catalog.hpp"

namespace grs {

struct Unclassifiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using System = std::variant<FiniteRootSystem, AffinePresentation>;

// Finite tags (including ~A(n,n) on its degenerate span) give the explicit
// system; affine tags give a presentation.
System catalog_make(const TypeTag& tag);

// Fingerprint against catalog systems of the same dimension, then certify by
// an explicit isomorphism. Irreducible weak GRSs and finite AGRSs.
TypeTag classify_finite(const FiniteRootSystem& r);

// Valid irreducible presentation. The base is classified first; the affine
// candidates over that base are certified by fiber-level isomorphism with
// the catalog presentation. q is read off the residues for quotient and
// peculiar bases.
TypeTag classify_affine(const AffinePresentation& p);

// Command-line tag grammar: a full tag ("D_4^(3)", "C(1,1)^1/3") or a
// family word (A, B, ..., B0, A_super, B_super, C_super, D_super, D21, G3,
// F4_super, C_mn, BC, Atilde, quotient, peculiar) whose fields come from the
// options. An invalid twisted tag falls back to the unique affine type with
// that twist over the given base, so G_2 with twist 3 names D_4^(3).
struct TagOptions {
  std::optional<int> m, n, twist;
  std::optional<Scalar> q, lambda;
};
TypeTag resolve_tag(const std::string& name, const TagOptions& opt = {});

// Component-wise isomorphism of orthogonal decompositions.
bool similar(const FiniteRootSystem& a, const FiniteRootSystem& b);
bool similar(const AffinePresentation& a, const AffinePresentation& b);

}  // namespace grs
