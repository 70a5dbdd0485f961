#pragma once

#include <string>
#include <vector>

#include "grs/classify.hpp"

namespace grs {

// Parity values are aligned with `roots` (0 even, 1 odd).
struct ParityResult {
  std::vector<Vector> roots;
  std::vector<std::vector<int>> functions;  // full list when enumerated
  bool enumerated = true;
  std::vector<int> particular;                // one solution (empty if none)
  std::vector<std::vector<int>> kernel_basis;  // solutions = particular + span
  std::size_t count_log2() const { return kernel_basis.size(); }
  bool empty() const { return particular.empty(); }
};

inline constexpr std::size_t kParityEnumerationLimit = 20;

// GF(2) solution set of f(a)+f(b)+f(a+b) = 0 for a, b, a+b in R (a = b
// allowed) together with f(a) = 1 for isotropic a.
ParityResult parity_functions(const FiniteRootSystem& r);

// Offset bound 2·(max step + max |residue|) of the window parity works on.
long parity_window(const AffinePresentation& p);
ParityResult parity_functions(const AffinePresentation& p);

bool is_parity_function(const FiniteRootSystem& r, const std::vector<int>& f);

// Odd iff isotropic or 2a is a root.
std::vector<int> default_parity(const FiniteRootSystem& r);
// Same rule on a window, with 2a tested against the whole presentation.
std::vector<int> default_parity(const AffinePresentation& p, const FiniteRootSystem& win);

// A pair a, b in S whose reflection in the ambient system leaves S.
struct Escape {
  Vector alpha, beta, image;
};

struct SubsystemResult {
  bool is_system = false;
  std::vector<TypeTag> tags;  // one per irreducible component
  std::string label;          // tag list, or "not a system"
  AxiomReport report;         // on span(S), in span coordinates
  std::vector<Escape> escapes;
};

// S must be a subset of R. The form is restricted to span(S).
SubsystemResult is_subsystem(const std::vector<Vector>& s, const FiniteRootSystem& r);
// S is a finite set of total-space vectors of p.
SubsystemResult is_subsystem(const std::vector<Vector>& s, const AffinePresentation& p);

struct Correspondence {
  TypeTag tag;
  std::string lie_structure;
  std::string notes;  // row of the correspondence table
};

Correspondence correspondence(const TypeTag& tag);

}  // namespace grs
