#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grs/affine.hpp"
#include "grs/iso.hpp"

// Naive reference implementations. They work on explicit root lists scaled
// to machine integers and share no search logic with the main path.
namespace grs::oracle {

struct OracleReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

struct BruteAxioms {
  AxiomReport report;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // reflections whose image falls outside the window
};

// Finite mode (no bound) checks axioms (0), (1), (2), (2') on the set. With a
// bound the input is a window of an affine presentation: the last coordinate
// is the delta offset, (0') replaces (0), and instances whose images have
// |offset| > bound are skipped.
BruteAxioms brute_axioms(const FiniteRootSystem& roots, std::optional<long> window_bound = std::nullopt);

// Exhaustive bijection search with pairwise form checks and a final
// linearity check. Throws InvalidInput above 14 roots.
std::optional<IsoWitness> brute_iso(const FiniteRootSystem& a, const FiniteRootSystem& b);

// All maps R -> Z/2 (as bit vectors over the sorted roots) satisfying the
// parity constraints. Throws InvalidInput above 16 roots.
std::vector<std::vector<int>> brute_parity(const FiniteRootSystem& r);

// Iterates (r_{a''} r_{a'})^m on b' inside an explicit window for m <= m_max
// and compares with b' + t·m·(a'' - a'). Classes are base root indices; b'
// is the lift at the first residue moved by beta_shift steps.
OracleReport brute_translation(const AffinePresentation& p, std::size_t alpha, std::size_t beta, int m_max,
                               long beta_shift = 0);

}  // namespace grs::oracle
