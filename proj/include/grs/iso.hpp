#pragma once

#include <functional>
#include <optional>

#include "grs/finsys.hpp"

namespace grs {

struct IsoWitness {
  Matrix matrix;          // target.dim × source.dim
  Scalar scale;           // (Mv, Mw) = scale · (v, w)
  std::vector<int> perm;  // source root index -> target root index
};

struct IsoOptions {
  std::optional<Scalar> scale;  // force this form scale
  // Extra per-root admissibility (source index, target index).
  std::function<bool(std::size_t, std::size_t)> compat;
};

// Backtracking over images of a connected basis of source roots. The scale is
// pinned by the first nonzero Gram entry met. Both systems must span their
// spaces; the forms may be degenerate.
std::optional<IsoWitness> isomorphic(const FiniteRootSystem& a, const FiniteRootSystem& b, const IsoOptions& opt = {});

// Calls visit for each isomorphism found until it returns false.
void for_each_isomorphism(const FiniteRootSystem& a, const FiniteRootSystem& b, const IsoOptions& opt,
                          const std::function<bool(const IsoWitness&)>& visit);

// Exact check of the witness invariants.
bool verify_witness(const FiniteRootSystem& a, const FiniteRootSystem& b, const IsoWitness& w);

// Root-count, rank and norm-profile comparison up to scale; a necessary test.
bool same_profile(const FiniteRootSystem& a, const FiniteRootSystem& b);

}  // namespace grs
