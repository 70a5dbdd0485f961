#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "grs/finsys.hpp"
#include "grs/tag.hpp"

namespace grs {

// A finite catalog system with a role label per root ("e", "2e", "ee", "d",
// "2d", "dd", "ed", "short", "long", "root", "odd"); twisted builders key
// their fiber data on these.
struct CatalogSystem {
  FiniteRootSystem system;
  std::vector<std::string> roles;  // aligned with system.roots()
};

// Builds the finite system for a finite tag in its standard basis. Parameters
// are taken literally (no alias folding), so BC(2,1) has two eps and one
// delta coordinate and A(1,1) is the 2-dimensional image of ~A(1,1).
// ~A(n,n) lives on its degenerate (2n+1)-dimensional span.
CatalogSystem make_finite(const TypeTag& tag);

// Memoized make_finite; the cache is shared and immutable once filled.
std::shared_ptr<const CatalogSystem> finite_cached(const TypeTag& tag);

// Canonical finite tags with all rank parameters <= max_param, plus the
// D(2,1;lambda) values passed in.
std::vector<TypeTag> finite_catalog_tags(int max_param, const std::vector<Scalar>& lambdas);

// Canonical affine tags named with base parameters <= max_param.
std::vector<TypeTag> affine_catalog_tags(int max_param, const std::vector<Scalar>& qs);

}  // namespace grs
